#include <doctest.h>

#include "fixtures.hpp"
#include "qgp/model.hpp"

using namespace qgp;
namespace fx = qgp_fixtures;

namespace {

// submodule span equality inside an ambient module, via Howell forms of the
// generator rows stacked on the ambient relations
bool same_submodule(const Matrix& a, const Matrix& b, const FPModule& amb) {
    HowellForm ha = howell_form(stack_vertical(a, amb.relations()));
    HowellForm hb = howell_form(stack_vertical(b, amb.relations()));
    return ha.H == hb.H;
}

// image of a rep map equals the kernel of the next one, vertexwise
void check_exact_at(const RepMap& in, const RepMap& out) {
    for (int v = 0; v < in.source().quiver().vertex_count(); ++v) {
        Subquotient sq = subquotient(out.component(v));
        Matrix ker_gens = sq.kernel_inclusion.matrix();
        CHECK(same_submodule(in.component_matrix(v), ker_gens,
                             in.target().vertex_module(v)));
    }
}

} // namespace

TEST_SUITE("model") {

TEST_CASE("object classification fixtures") {
    RingSpec r = RingSpec::z_mod(4);
    auto ctx = fx::a2();

    ObjectFlags doubling = classify_object(fx::a2_free_rep(ctx, r, 2));
    CHECK_FALSE(doubling.gorenstein_projective);

    ObjectFlags half = classify_object(fx::a2_zero_z2(ctx, r));
    CHECK(half.gorenstein_projective);
    CHECK_FALSE(half.projective_object);
    CHECK_FALSE(half.trivial);

    ObjectFlags idrep = classify_object(fx::a2_free_rep(ctx, r, 1));
    CHECK(idrep.gorenstein_projective);
    CHECK(idrep.projective_object);
    CHECK(idrep.trivial);

    // with no arrows every representation is Gorenstein-projective
    auto iso = fx::two_isolated();
    Rep any(iso, r, {FPModule::cyclic(r, {2}), FPModule::free_module(r, 1)}, {});
    CHECK(classify_object(any).gorenstein_projective);
    CHECK(classify_object(any).gorenstein_injective);

    // unit-multiple arrows over the dual-numbers analogue: injective arrow
    // makes the representation Gorenstein-projective
    RingSpec f2t = RingSpec::truncated_poly(2, 2);
    auto ctx2 = fx::a2();
    Rep dual(ctx2, f2t,
             {FPModule::free_module(f2t, 1), FPModule::free_module(f2t, 1)},
             {fx::mat(f2t, 1, {{1}})});
    CHECK(classify_object(dual).gorenstein_projective);
    RingElem t = f2t.from_poly_coeffs({0, 1});
    Rep dual_t(ctx2, f2t,
               {FPModule::free_module(f2t, 1), FPModule::free_module(f2t, 1)},
               {fx::mat(f2t, 1, {{t.v}})});
    CHECK_FALSE(classify_object(dual_t).gorenstein_projective);
}

TEST_CASE("induced projectives and coinduced injectives classify as such") {
    RingSpec r = RingSpec::z_mod(4);
    for (const auto& ctx : {fx::a2(), fx::a3(), fx::kronecker(), fx::square()}) {
        std::vector<int> ranks(std::size_t(ctx->quiver.vertex_count()), 1);
        Rep p = induced_projective(ctx, r, ranks);
        ObjectFlags pf = classify_object(p);
        CHECK(pf.projective_object);
        CHECK(pf.trivial);
        Rep c = coinduced_injective(ctx, r, ctx->quiver.vertex_count() - 1,
                                    FPModule::free_module(r, 1));
        CHECK(classify_object(c).injective_object);
    }
}

TEST_CASE("morphism classification fixtures") {
    RingSpec r = RingSpec::z_mod(4);
    auto ctx = fx::a2();
    Rep m = fx::a2_zero_z2(ctx, r);
    MorphismFlags idf = classify_morphism(RepMap::identity(m));
    CHECK(idf.weak_equivalence);
    CHECK(idf.rp_fibration);
    CHECK(idf.rp_cofibration);
    CHECK(idf.ri_fibration);
    CHECK(idf.ri_cofibration);
    CHECK(idf.rp_trivial_fibration);
    CHECK(idf.ri_trivial_cofibration);

    // projection M + P -> M for a projective rep P is a trivial fibration
    Rep p = induced_projective(ctx, r, {1, 1});
    DirectSumReps ds = direct_sum_reps({m, p});
    MorphismFlags proj = classify_morphism(ds.projections[0]);
    CHECK(proj.rp_trivial_fibration);

    // 0 -> M is not a fibration when M is nonzero somewhere
    Rep zero = Rep::zero_rep(ctx, r);
    MorphismFlags zf = classify_morphism(RepMap::zero_map(zero, m));
    CHECK_FALSE(zf.rp_fibration);
    CHECK(zf.rp_cofibration);
    CHECK(zf.ri_cofibration);
}

TEST_CASE("cofibrations are monos with Gorenstein-projective cokernel") {
    RingSpec r = RingSpec::z_mod(4);
    auto ctx = fx::a2();
    std::vector<Rep> reps = {fx::a2_zero_z2(ctx, r), fx::a2_free_rep(ctx, r, 2),
                             fx::a2_free_rep(ctx, r, 1),
                             induced_projective(ctx, r, {1, 0})};
    for (const auto& a : reps)
        for (const auto& b : reps) {
            HomBasis hb = hom_rep(a, b);
            // a handful of deterministic elements of the hom module
            for (std::uint64_t pick = 0; pick < 8; ++pick) {
                std::vector<RingElem> coords(
                    std::size_t(hb.module.generators()), r.zero());
                std::uint64_t x = pick * 2654435761u + 17;
                for (auto& c : coords) {
                    c = r.element(x % r.size());
                    x = x * 6364136223846793005ull + 1442695040888963407ull;
                }
                RepMap f = hb.map_from_coords(coords);
                MorphismFlags fl = classify_morphism(f);
                bool mono_gp_coker =
                    fl.ri_cofibration &&
                    is_gorenstein_projective(pointwise_cokernel(f).rep);
                CHECK(fl.rp_cofibration == mono_gp_coker);
            }
        }
}

TEST_CASE("embedding a cofibrant object into a projective one") {
    RingSpec r = RingSpec::z_mod(4);
    auto ctx = fx::a2();
    Rep k = fx::a2_zero_z2(ctx, r);
    EmbedCofibrantResult e = embed_cofibrant_into_projective(k);
    CHECK(e.projective.vertex_module(0).is_zero_module());
    CHECK(e.projective.vertex_module(1).iso_invariants() ==
          std::vector<RingElem>{{0}});
    CHECK(e.embedding.component_matrix(1) == fx::mat(r, 1, {{2}}));
    CHECK(e.cokernel.vertex_module(1).iso_invariants() ==
          std::vector<RingElem>{{2}});

    // a projective object embeds with zero cokernel
    Rep p = induced_projective(ctx, r, {1, 0});
    EmbedCofibrantResult ep = embed_cofibrant_into_projective(p);
    CHECK(ep.cokernel.is_zero());

    Rep z = Rep::zero_rep(ctx, r);
    CHECK(embed_cofibrant_into_projective(z).projective.is_zero());

    // non-cofibrant inputs are rejected
    CHECK_THROWS_AS(embed_cofibrant_into_projective(fx::a2_free_rep(ctx, r, 2)),
                    Error);

    // a Kronecker-shaped Gorenstein-projective with nonfree modules
    auto kr = fx::kronecker();
    Rep kk(kr, r, {FPModule::cyclic(r, {2}), FPModule::free_module(r, 1)},
           {fx::mat(r, 1, {{2}}), fx::mat(r, 1, {{0}})});
    // latching at 1 is (x,y) -> 2x which is not injective; adjust to make
    // it cofibrant: use arrows 2 and 0 on Z/2 + Z/2 -> Z/4 x ...
    Rep kk2(kr, r, {FPModule::cyclic(r, {2}), FPModule::free_module(r, 2)},
            {fx::mat(r, 2, {{2, 0}}), fx::mat(r, 2, {{0, 2}})});
    REQUIRE(is_gorenstein_projective(kk2));
    EmbedCofibrantResult ek = embed_cofibrant_into_projective(kk2);
    CHECK(ek.embedding.is_vertexwise_injective());
    (void)kk;
}

TEST_CASE("dual cover of a fibrant object by an injective one") {
    RingSpec r = RingSpec::z_mod(4);
    auto ctx = fx::a2();
    // (Z/2 -> 0) is Gorenstein-injective over A2
    Rep c(ctx, r, {FPModule::cyclic(r, {2}), FPModule::zero(r)},
          {Matrix(r, 1, 0)});
    REQUIRE(is_gorenstein_injective(c));
    CoverFibrantResult cf = cover_fibrant_by_injective(c);
    CHECK(cf.projection.is_vertexwise_surjective());
    CHECK(classify_object(cf.injective).injective_object);
    CHECK(is_gorenstein_injective(cf.kernel));

    CHECK_THROWS_AS(cover_fibrant_by_injective(fx::a2_zero_z2(ctx, r)), Error);
}

TEST_CASE("factorizations") {
    RingSpec r = RingSpec::z_mod(4);
    auto ctx = fx::a2();
    Rep m = fx::a2_free_rep(ctx, r, 2);
    Rep n = fx::a2_zero_z2(ctx, r);
    RepMap f(m, n, {Matrix(r, 1, 0), fx::mat(r, 1, {{1}})});

    for (auto mode : {FactorMode::CofThenTrivFib, FactorMode::TrivCofThenFib}) {
        FactorizationResult fr = factorize(f, mode);
        CHECK(fr.left.compose(fr.right).equals(f));
        if (mode == FactorMode::CofThenTrivFib) {
            CHECK(fr.left_flags.rp_cofibration);
            CHECK(fr.right_flags.rp_trivial_fibration);
        } else {
            CHECK(fr.left_flags.rp_cofibration);
            CHECK(fr.left_flags.weak_equivalence);
            CHECK(fr.right_flags.rp_fibration);
        }
    }

    // identity factorizations certify as well
    FactorizationResult fid =
        factorize(RepMap::identity(n), FactorMode::CofThenTrivFib);
    CHECK(fid.left.compose(fid.right).equals(RepMap::identity(n)));

    // zero map into a representation
    Rep zero = Rep::zero_rep(ctx, r);
    FactorizationResult fz =
        factorize(RepMap::zero_map(zero, n), FactorMode::TrivCofThenFib);
    CHECK(fz.right_flags.rp_fibration);
    CHECK(fz.left.compose(fz.right).equals(RepMap::zero_map(zero, n)));
}

TEST_CASE("cofibrant replacement") {
    RingSpec r = RingSpec::z_mod(4);
    auto ctx = fx::a2();
    Rep gp = fx::a2_zero_z2(ctx, r);
    Replacement same = cofibrant_replacement(gp);
    CHECK(same.object.same_presentation(gp));

    Rep m = fx::a2_free_rep(ctx, r, 0);
    REQUIRE_FALSE(is_gorenstein_projective(m));
    Replacement cr = cofibrant_replacement(m);
    CHECK(is_gorenstein_projective(cr.object));
    CHECK(classify_morphism(cr.map).rp_trivial_fibration);
    // the kernel of the replacement map is a projective object
    CHECK(is_projective_object(pointwise_kernel(cr.map).rep));

    Rep z = Rep::zero_rep(ctx, r);
    CHECK(cofibrant_replacement(z).object.is_zero());
}

TEST_CASE("fibrant replacement") {
    RingSpec r = RingSpec::z_mod(4);
    auto ctx = fx::a2();
    Rep ginj(ctx, r, {FPModule::cyclic(r, {2}), FPModule::zero(r)},
             {Matrix(r, 1, 0)});
    CHECK(fibrant_replacement(ginj).object.same_presentation(ginj));

    Rep m = fx::a2_zero_z2(ctx, r);
    REQUIRE_FALSE(is_gorenstein_injective(m));
    Replacement fr = fibrant_replacement(m);
    CHECK(is_gorenstein_injective(fr.object));
    CHECK(classify_morphism(fr.map).ri_trivial_cofibration);

    Rep m2 = fx::a2_free_rep(ctx, r, 2);
    Replacement fr2 = fibrant_replacement(m2);
    CHECK(is_gorenstein_injective(fr2.object));
    CHECK(classify_morphism(fr2.map).ri_trivial_cofibration);
}

TEST_CASE("four-term resolution") {
    RingSpec r = RingSpec::z_mod(4);
    auto ctx = fx::a2();
    Rep gp = fx::a2_zero_z2(ctx, r);
    FourTermResolution easy = four_term_resolution(gp);
    CHECK(easy.s.is_zero());
    CHECK(easy.t.is_zero());
    CHECK(easy.gp.same_presentation(gp));

    Rep m = fx::a2_free_rep(ctx, r, 0);
    FourTermResolution ft = four_term_resolution(m);
    CHECK(is_projective_object(ft.s));
    CHECK(is_projective_object(ft.t));
    CHECK(is_gorenstein_projective(ft.gp));
    // 0 -> S -> T -> gp -> m -> 0 exact at every joint
    CHECK(ft.s_to_t.is_vertexwise_injective());
    check_exact_at(ft.s_to_t, ft.t_to_gp);
    check_exact_at(ft.t_to_gp, ft.gp_to_m);
    CHECK(ft.gp_to_m.is_vertexwise_surjective());
}

TEST_CASE("lifting against trivial fibrations") {
    RingSpec r = RingSpec::z_mod(4);
    auto ctx = fx::a2();
    // GP object lifts against any trivial fibration
    Rep gp = fx::a2_zero_z2(ctx, r);
    Rep y = fx::a2_free_rep(ctx, r, 0);
    Replacement cr = cofibrant_replacement(y);
    HomBasis hb = hom_rep(gp, y);
    for (const auto& q : hb.generators) {
        auto h = lift_through(cr.map, q);
        REQUIRE(h.has_value());
        CHECK(h->compose(cr.map).equals(q));
    }
    // a non-GP object admits no lift of the identity through its own
    // replacement
    auto bad = lift_through(cr.map, RepMap::identity(y));
    CHECK_FALSE(bad.has_value());
}

TEST_CASE("elementary stable fibrations are strictly fewer") {
    // A trivial fibration which is not of the form N + P -> N: the
    // replacement map of a non-cofibrant representation can never split,
    // else the target would be a retract of a Gorenstein-projective and
    // hence Gorenstein-projective itself.
    RingSpec r = RingSpec::z_mod(4);
    auto ctx = fx::a2();
    Rep n = fx::a2_free_rep(ctx, r, 0);
    REQUIRE_FALSE(is_gorenstein_projective(n));
    Replacement cr = cofibrant_replacement(n);
    CHECK(classify_morphism(cr.map).rp_trivial_fibration);
    CHECK(is_projective_object(pointwise_kernel(cr.map).rep));
    CHECK_FALSE(find_section(cr.map).has_value());
}

TEST_CASE("projective objects are exactly the ones with the lifting property") {
    // bounded-exhaustive check over A2 and Kronecker with cyclic vertex
    // modules: the projective flag must coincide with lifting against
    // surjections, with the canonical witness being a section of the own
    // cover
    RingSpec r = RingSpec::z_mod(4);
    for (const auto& ctx : {fx::a2(), fx::kronecker()}) {
        std::vector<FPModule> choices = {FPModule::zero(r),
                                         FPModule::cyclic(r, {2}),
                                         FPModule::free_module(r, 1)};
        std::vector<Rep> catalog;
        int n = ctx->quiver.vertex_count();
        int na = ctx->quiver.arrow_count();
        for (std::size_t c0 = 0; c0 < choices.size(); ++c0)
            for (std::size_t c1 = 0; c1 < choices.size(); ++c1) {
                std::vector<FPModule> mods = {choices[c0], choices[c1]};
                // enumerate all arrow matrices jointly
                std::uint64_t cells = 1;
                for (int a = 0; a < na; ++a)
                    cells *= std::uint64_t(1)
                             << (2 * mods[0].generators() * mods[1].generators());
                (void)cells;
                std::vector<std::vector<Matrix>> arrow_sets = {{}};
                for (int a = 0; a < na; ++a) {
                    std::vector<std::vector<Matrix>> next;
                    for (const auto& partial : arrow_sets)
                        for (std::uint64_t v = 0; v < r.size(); ++v) {
                            if (mods[0].generators() == 0 ||
                                mods[1].generators() == 0) {
                                Matrix m(r, mods[0].generators(),
                                         mods[1].generators());
                                auto ext = partial;
                                ext.push_back(m);
                                next.push_back(ext);
                                break;
                            }
                            Matrix m(r, 1, 1);
                            m.set(0, 0, r.element(v));
                            if (check_module_map(mods[0], mods[1], m)) continue;
                            auto ext = partial;
                            ext.push_back(m);
                            next.push_back(ext);
                        }
                    arrow_sets = std::move(next);
                }
                for (const auto& arrows : arrow_sets)
                    catalog.emplace_back(ctx, r, mods, arrows);
            }
        // a sample of surjections between catalog members
        std::vector<RepMap> surjections;
        for (std::size_t i = 0;
             i < catalog.size() && surjections.size() < 24; i += 3)
            for (std::size_t j = 0;
                 j < catalog.size() && surjections.size() < 24; j += 4) {
                HomBasis hb = hom_rep(catalog[i], catalog[j]);
                for (int g = 0; g < hb.module.generators(); ++g) {
                    std::vector<RingElem> coords(
                        std::size_t(hb.module.generators()), r.zero());
                    coords[std::size_t(g)] = r.one();
                    RepMap f = hb.map_from_coords(coords);
                    if (f.is_vertexwise_surjective()) {
                        surjections.push_back(f);
                        break;
                    }
                }
            }
        REQUIRE(!surjections.empty());
        for (const auto& m : catalog) {
            bool flagged = is_projective_object(m);
            // canonical witness: the cover splits iff projective
            CoverResult cover = projective_cover(m);
            CHECK(flagged == find_section(cover.onto).has_value());
            if (!flagged) continue;
            // flagged objects lift against every sampled trivial fibration
            for (const auto& p : surjections) {
                HomBasis qs = hom_rep(m, p.target());
                for (const auto& q : qs.generators)
                    CHECK(lift_through(p, q).has_value());
            }
        }
        (void)n;
    }
}

TEST_CASE("retract closure of the object flags") {
    RingSpec r = RingSpec::z_mod(4);
    auto ctx = fx::kronecker();
    Rep a(ctx, r, {FPModule::cyclic(r, {2}), FPModule::free_module(r, 2)},
          {fx::mat(r, 2, {{2, 0}}), fx::mat(r, 2, {{0, 2}})});
    Rep b = induced_projective(ctx, r, {1, 1});
    DirectSumReps ds = direct_sum_reps({a, b});
    ObjectFlags whole = classify_object(ds.sum);
    ObjectFlags part = classify_object(a);
    // a retract keeps every sum-level positive flag
    CHECK((whole.gorenstein_projective ? part.gorenstein_projective : true));
    CHECK((whole.gorenstein_injective ? part.gorenstein_injective : true));
    CHECK((whole.projective_object ? part.projective_object : true));
    CHECK((whole.trivial ? part.trivial : true));
}

TEST_CASE("two out of three for weak equivalences") {
    RingSpec r = RingSpec::z_mod(4);
    auto ctx = fx::a2();
    Rep a = fx::a2_zero_z2(ctx, r);
    Rep b = direct_sum_reps({a, induced_projective(ctx, r, {1, 0})}).sum;
    HomBasis hab = hom_rep(a, b);
    HomBasis hba = hom_rep(b, a);
    int checked = 0;
    for (const auto& f : hab.generators)
        for (const auto& g : hba.generators) {
            MorphismFlags ff = classify_morphism(f);
            MorphismFlags gg = classify_morphism(g);
            MorphismFlags cc = classify_morphism(f.compose(g));
            if (ff.weak_equivalence && gg.weak_equivalence)
                CHECK(cc.weak_equivalence);
            if (ff.weak_equivalence && cc.weak_equivalence)
                CHECK(gg.weak_equivalence);
            ++checked;
        }
    CHECK(checked > 0);
}

TEST_CASE("classification is independent of the degree function") {
    RingSpec r = RingSpec::z_mod(4);
    Quiver q({"0", "1", "2"}, {{"a", "0", "1"}, {"b", "1", "2"}});
    auto base = make_quiver_ctx(q);
    auto shifted = make_quiver_ctx_with_degree(q, {5, 6, 7});
    auto spread = make_quiver_ctx_with_degree(q, {0, 10, 25});
    for (const auto& alt : {shifted, spread}) {
        for (std::uint64_t av = 0; av < 4; ++av) {
            std::vector<FPModule> mods = {FPModule::free_module(r, 1),
                                          FPModule::free_module(r, 1),
                                          FPModule::cyclic(r, {2})};
            std::vector<Matrix> arrows = {fx::mat(r, 1, {{av}}),
                                          fx::mat(r, 1, {{1}})};
            Rep m1(base, r, mods, arrows);
            Rep m2(alt, r, mods, arrows);
            ObjectFlags f1 = classify_object(m1);
            ObjectFlags f2 = classify_object(m2);
            CHECK(f1.gorenstein_projective == f2.gorenstein_projective);
            CHECK(f1.gorenstein_injective == f2.gorenstein_injective);
            CHECK(f1.projective_object == f2.projective_object);
            CHECK(f1.injective_object == f2.injective_object);
            CHECK(f1.trivial == f2.trivial);
        }
    }
}

} // TEST_SUITE
