#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "qgp/model.hpp"
#include "qgp/random_gen.hpp"

using namespace qgp;
namespace fx = qgp_fixtures;

TEST_SUITE("random") {

TEST_CASE("same seed gives the same representation") {
    RingSpec r = RingSpec::z_mod(8);
    auto ctx = fx::square();
    Rng rng1(12345), rng2(12345);
    Rep a = random_rep(rng1, ctx, r, 3);
    Rep b = random_rep(rng2, ctx, r, 3);
    CHECK(a.same_presentation(b));
    // and the stream continues deterministically
    Rep a2 = random_rep(rng1, ctx, r, 3);
    Rep b2 = random_rep(rng2, ctx, r, 3);
    CHECK(a2.same_presentation(b2));
    CHECK_FALSE(a.same_presentation(a2)); // overwhelmingly unlikely collision
}

TEST_CASE("max_gens zero gives the zero representation") {
    RingSpec r = RingSpec::z_mod(4);
    Rng rng(7);
    Rep z = random_rep(rng, fx::a2(), r, 0);
    CHECK(z.is_zero());
}

TEST_CASE("a seed sweep produces only valid representations") {
    RingSpec r = RingSpec::z_mod(4);
    auto ctx = fx::a2();
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Rng rng(seed);
        Rep m = random_rep(rng, ctx, r, 2);
        std::vector<FPModule> mods;
        std::vector<Matrix> arrows;
        for (int v = 0; v < 2; ++v) mods.push_back(m.vertex_module(v));
        arrows.push_back(m.arrow_matrix(0));
        CHECK_FALSE(check_rep(ctx, r, mods, arrows).has_value());
    }
}

TEST_CASE("sampled arrow maps cover the full well-definedness solution space") {
    // (Z/2 -> Z/4): well-defined maps send the generator to {0, 2}; a
    // sample of the generator image should hit both cosets
    RingSpec r = RingSpec::z_mod(4);
    FPModule src = FPModule::cyclic(r, {2});
    FPModule tgt = FPModule::free_module(r, 1);
    Rng rng(99);
    std::set<std::uint64_t> seen;
    for (int i = 0; i < 64; ++i)
        seen.insert(random_well_defined_matrix(rng, src, tgt).at(0, 0).v);
    CHECK(seen == std::set<std::uint64_t>{0, 2});
}

TEST_CASE("random morphisms are natural by construction") {
    RingSpec r = RingSpec::z_mod(6);
    auto ctx = fx::kronecker();
    Rng rng(5);
    Rep a = random_rep(rng, ctx, r, 2);
    Rep b = random_rep(rng, ctx, r, 2);
    for (int i = 0; i < 10; ++i) {
        RepMap f = random_rep_map(rng, a, b);
        std::vector<Matrix> comps;
        for (int v = 0; v < 2; ++v) comps.push_back(f.component_matrix(v));
        CHECK_FALSE(check_rep_map(a, b, comps).has_value());
    }
}

} // TEST_SUITE
