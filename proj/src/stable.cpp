#include "qgp/stable.hpp"

#include "qgp/errors.hpp"

namespace qgp {

Rep suspension(const Rep& m) {
    EnvelopeResult env = injective_envelope(m);
    return pointwise_cokernel(env.into).rep;
}

Rep loop_rep(const Rep& m) {
    CoverResult cover = projective_cover(m);
    return pointwise_kernel(cover.onto).rep;
}

namespace {

// quotient of a hom module by the coordinate rows of an ideal of maps
StableHomResult quotient_hom(const HomBasis& hom,
                             const std::vector<RepMap>& ideal_maps,
                             Rep src_rep, Rep tgt_rep) {
    const RingSpec& ring = hom.module.ring();
    Matrix extra(ring, int(ideal_maps.size()), hom.module.generators());
    for (std::size_t i = 0; i < ideal_maps.size(); ++i) {
        auto coords = hom.coords_of(ideal_maps[i]);
        if (!coords)
            throw InternalInvariantBroken("ideal map escapes the hom module");
        extra.set_row(int(i), *coords);
    }
    FPModule quotient(ring, hom.module.generators(),
                      stack_vertical(hom.module.relations(), extra));
    return {std::move(quotient), hom.generators, std::move(src_rep),
            std::move(tgt_rep)};
}

} // namespace

StableHomResult stable_hom(const Rep& a, const Rep& b) {
    Replacement ga = cofibrant_replacement(a);
    Replacement gb = cofibrant_replacement(b);
    HomBasis hom = hom_rep(ga.object, gb.object);
    CoverResult cover = projective_cover(gb.object);
    HomBasis through = hom_rep(ga.object, cover.cover);
    std::vector<RepMap> ideal;
    for (const auto& g : through.generators)
        ideal.push_back(g.compose(cover.onto));
    return quotient_hom(hom, ideal, ga.object, gb.object);
}

StableHomResult stable_hom_via_injectives(const Rep& a, const Rep& b) {
    Replacement ga = fibrant_replacement(a);
    Replacement gb = fibrant_replacement(b);
    HomBasis hom = hom_rep(ga.object, gb.object);
    EnvelopeResult env = injective_envelope(ga.object);
    HomBasis through = hom_rep(env.envelope, gb.object);
    std::vector<RepMap> ideal;
    for (const auto& g : through.generators)
        ideal.push_back(env.into.compose(g));
    return quotient_hom(hom, ideal, ga.object, gb.object);
}

SigmaOmegaResult sigma_omega_compare(const Rep& m) {
    const RingSpec& ring = m.ring();
    CoverResult cover = projective_cover(m);
    RepWithMap omega = pointwise_kernel(cover.onto);
    EnvelopeResult env = injective_envelope(omega.rep);
    RepWithMap sigma_omega = pointwise_cokernel(env.into);
    auto ext = extend_rep_map_along_mono(omega.map, env.into);
    if (!ext)
        throw InternalInvariantBroken(
            "no extension of the loop embedding over the cover");
    RepMap to_sigma = ext->compose(sigma_omega.map);
    // push down to m through generator lifts along the cover
    std::vector<Matrix> comps;
    for (int v = 0; v < m.quiver().vertex_count(); ++v) {
        const FPModule& mv = m.vertex_module(v);
        Matrix sys = stack_vertical(cover.onto.component_matrix(v),
                                    mv.relations());
        auto lifts = solve_linear(sys, Matrix::identity(ring, mv.generators()));
        if (!lifts)
            throw InternalInvariantBroken("cover stopped being surjective");
        Matrix x = lifts->particular.block(
            0, 0, mv.generators(), cover.cover.vertex_module(v).generators());
        comps.push_back(x.mul(to_sigma.component_matrix(v)));
    }
    RepMap comparison(m, sigma_omega.rep, std::move(comps));
    bool is_weq = classify_morphism(comparison).weak_equivalence;
    if (!is_weq)
        throw InternalInvariantBroken(
            "the unit of the suspension-loop equivalence is not a weak "
            "equivalence");
    return {std::move(comparison), is_weq};
}

AdjunctionCheckResult hovey_adjunction_check(const Rep& m, const Rep& n) {
    StableHomResult lhs = stable_hom(m, suspension(n));
    Replacement g = cofibrant_replacement(m);
    FPModule rhs = ext1_rep(g.object, n);
    bool agree = lhs.module.iso_invariants() == rhs.iso_invariants();
    return {std::move(lhs.module), std::move(rhs), agree};
}

} // namespace qgp
