#include <doctest.h>

#include "fixtures.hpp"
#include "qgp/stable.hpp"

using namespace qgp;
namespace fx = qgp_fixtures;

namespace {

std::vector<RingElem> sorted_inv(const FPModule& m) {
    auto v = m.iso_invariants();
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

TEST_SUITE("stable") {

TEST_CASE("suspension fixtures") {
    RingSpec r = RingSpec::z_mod(4);
    auto ctx = fx::a2();
    CHECK(suspension(Rep::zero_rep(ctx, r)).is_zero());

    Rep p = induced_projective(ctx, r, {1, 1});
    Rep sp = suspension(p);
    CHECK(is_trivial_object(sp));

    Rep m = fx::a2_zero_z2(ctx, r);
    Rep sm = suspension(m);
    // the envelope is (R -> R); the quotient has full R at vertex 0 and
    // half of it at vertex 1
    CHECK(sm.vertex_module(0).cardinality() == 4);
    CHECK(sm.vertex_module(1).cardinality() == 2);
    // exactness: m embeds with cokernel sm
    EnvelopeResult env = injective_envelope(m);
    CHECK(env.into.is_vertexwise_injective());
    CHECK(pointwise_cokernel(env.into).rep.same_presentation(sm));
}

TEST_CASE("loop fixtures") {
    RingSpec r = RingSpec::z_mod(4);
    auto ctx = fx::a2();
    CHECK(loop_rep(Rep::zero_rep(ctx, r)).is_zero());

    Rep p = induced_projective(ctx, r, {1, 0});
    Rep lp = loop_rep(p);
    ObjectFlags lf = classify_object(lp);
    CHECK(lf.gorenstein_projective);
    CHECK(lf.trivial);
    CHECK(lf.projective_object);

    Rep m = fx::a2_zero_z2(ctx, r);
    Rep lm = loop_rep(m);
    // loop of (0 -> Z/2) is (0 -> Z/2) again: Omega-periodicity
    CHECK(lm.vertex_module(0).is_zero_module());
    CHECK(lm.vertex_module(1).iso_invariants() == std::vector<RingElem>{{2}});
    CHECK(is_gorenstein_projective(lm));
}

TEST_CASE("stable hom fixtures") {
    RingSpec r = RingSpec::z_mod(4);
    auto ctx = fx::a2();
    Rep m = fx::a2_zero_z2(ctx, r);
    Rep p = induced_projective(ctx, r, {1, 1});

    CHECK(stable_hom(p, m).module.is_zero_module());
    CHECK(stable_hom(Rep::zero_rep(ctx, r), m).module.is_zero_module());

    StableHomResult sh = stable_hom(m, m);
    CHECK(sh.module.iso_invariants() == std::vector<RingElem>{{2}});
    // brute-force derivation of the same value: the two maps are 0 and id,
    // and only 0 factors through the cover (0 -> R)
    HomBasis endo = hom_rep(m, m);
    CHECK(endo.module.cardinality() == 2);
    CoverResult cover = projective_cover(m);
    int factoring = 0;
    for (std::uint64_t c0 = 0; c0 < 2; ++c0) {
        std::vector<RingElem> coords = {r.element(c0)};
        RepMap f = endo.map_from_coords(coords);
        if (lift_through(cover.onto, f)) ++factoring;
    }
    CHECK(factoring == 1);
}

TEST_CASE("stable hom additivity") {
    RingSpec r = RingSpec::z_mod(4);
    auto ctx = fx::a2();
    Rep a = fx::a2_zero_z2(ctx, r);
    Rep a2 = fx::a2_free_rep(ctx, r, 0);
    Rep b = fx::a2_zero_z2(ctx, r);
    DirectSumReps ds = direct_sum_reps({a, a2});
    StableHomResult whole = stable_hom(ds.sum, b);
    StableHomResult h1 = stable_hom(a, b);
    StableHomResult h2 = stable_hom(a2, b);
    DirectSumModules hsum = direct_sum_modules({h1.module, h2.module}, r);
    CHECK(sorted_inv(whole.module) == sorted_inv(hsum.sum));
}

TEST_CASE("both stable hom routes agree") {
    RingSpec r = RingSpec::z_mod(4);
    auto ctx = fx::a2();
    std::vector<Rep> reps = {fx::a2_zero_z2(ctx, r), fx::a2_free_rep(ctx, r, 0),
                             fx::a2_free_rep(ctx, r, 2),
                             induced_projective(ctx, r, {1, 0})};
    for (const auto& a : reps)
        for (const auto& b : reps) {
            StableHomResult proj_route = stable_hom(a, b);
            StableHomResult inj_route = stable_hom_via_injectives(a, b);
            CHECK(sorted_inv(proj_route.module) == sorted_inv(inj_route.module));
        }
}

TEST_CASE("weak equivalences are detected by cofibrant replacements") {
    RingSpec r = RingSpec::z_mod(4);
    auto ctx = fx::a2();
    Rep a = fx::a2_free_rep(ctx, r, 0);
    Rep b = fx::a2_zero_z2(ctx, r);
    Replacement ga = cofibrant_replacement(a);
    Replacement gb = cofibrant_replacement(b);
    HomBasis homs = hom_rep(a, b);
    for (const auto& f : homs.generators) {
        auto gf = lift_through(gb.map, ga.map.compose(f));
        REQUIRE(gf.has_value());
        CHECK(classify_morphism(f).weak_equivalence ==
              classify_morphism(*gf).weak_equivalence);
    }
}

TEST_CASE("saturation spot checks") {
    RingSpec r = RingSpec::z_mod(4);
    auto ctx = fx::a2();
    Rep m = fx::a2_zero_z2(ctx, r);
    // the identity class is invertible and nonzero; the zero endomorphism
    // is not a weak equivalence and its class is not invertible
    StableHomResult sh = stable_hom(m, m);
    CHECK_FALSE(sh.module.is_zero_module());
    RepMap zero = RepMap::zero_map(m, m);
    CHECK_FALSE(classify_morphism(zero).weak_equivalence);
    CHECK(classify_morphism(RepMap::identity(m)).weak_equivalence);
}

TEST_CASE("sigma omega comparison") {
    RingSpec r = RingSpec::z_mod(4);
    auto ctx = fx::a2();
    SigmaOmegaResult z = sigma_omega_compare(Rep::zero_rep(ctx, r));
    CHECK(z.is_weq);
    SigmaOmegaResult p =
        sigma_omega_compare(induced_projective(ctx, r, {1, 1}));
    CHECK(p.is_weq);
    SigmaOmegaResult m = sigma_omega_compare(fx::a2_zero_z2(ctx, r));
    CHECK(m.is_weq);
    SigmaOmegaResult n = sigma_omega_compare(fx::a2_free_rep(ctx, r, 0));
    CHECK(n.is_weq);
}

TEST_CASE("hovey adjunction") {
    RingSpec r = RingSpec::z_mod(4);
    auto ctx = fx::a2();
    Rep p = induced_projective(ctx, r, {1, 0});
    Rep m = fx::a2_zero_z2(ctx, r);
    AdjunctionCheckResult a1 = hovey_adjunction_check(p, m);
    CHECK(a1.agree);
    CHECK(a1.lhs.is_zero_module());

    Rep inj = coinduced_injective(ctx, r, 1, FPModule::free_module(r, 1));
    AdjunctionCheckResult a2 = hovey_adjunction_check(m, inj);
    CHECK(a2.agree);
    CHECK(a2.lhs.is_zero_module());

    AdjunctionCheckResult a3 = hovey_adjunction_check(m, m);
    CHECK(a3.agree);
    AdjunctionCheckResult a4 =
        hovey_adjunction_check(fx::a2_free_rep(ctx, r, 0), m);
    CHECK(a4.agree);
}

TEST_CASE("suspension and loop over further rings and quivers") {
    for (const auto& r : {RingSpec::z_mod(6), RingSpec::truncated_poly(2, 2)}) {
        for (const auto& ctx : {fx::a3(), fx::kronecker()}) {
            int n = ctx->quiver.vertex_count();
            std::vector<FPModule> mods;
            for (int v = 0; v < n; ++v)
                mods.push_back(v % 2 ? FPModule::free_module(r, 1)
                                     : FPModule::cyclic(r, r.element(2)));
            std::vector<Matrix> arrows;
            for (const auto& ar : ctx->quiver.arrows()) {
                const FPModule& s =
                    mods[std::size_t(*ctx->quiver.vertex_index(ar.src))];
                const FPModule& t =
                    mods[std::size_t(*ctx->quiver.vertex_index(ar.tgt))];
                Matrix zero(r, s.generators(), t.generators());
                arrows.push_back(zero);
            }
            Rep m(ctx, r, mods, arrows);
            Rep om = loop_rep(m);
            CHECK(is_gorenstein_projective(om));
            SigmaOmegaResult cmp = sigma_omega_compare(m);
            CHECK(cmp.is_weq);
        }
    }
}

} // TEST_SUITE
