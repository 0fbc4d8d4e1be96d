#include "qgp/random_gen.hpp"

#include "qgp/errors.hpp"

namespace qgp {

RingElem random_elem(Rng& rng, const RingSpec& ring) {
    return ring.element(rng.below(ring.size()));
}

FPModule random_module(Rng& rng, const RingSpec& ring, int max_gens) {
    int g = int(rng.below(std::uint64_t(max_gens) + 1));
    int nrel = int(rng.below(std::uint64_t(g) + 2));
    Matrix rel(ring, nrel, g);
    for (int i = 0; i < nrel; ++i)
        for (int j = 0; j < g; ++j) rel.set(i, j, random_elem(rng, ring));
    return FPModule(ring, g, std::move(rel));
}

Matrix random_well_defined_matrix(Rng& rng, const FPModule& src,
                                  const FPModule& tgt) {
    const RingSpec& ring = src.ring();
    const int gs = src.generators(), gt = tgt.generators();
    EquationSystem sys(ring);
    int x0 = sys.add_variables(gs * gt);
    const Matrix& srel = src.relations();
    const Matrix& trel = tgt.relations();
    for (int t = 0; t < srel.rows(); ++t) {
        int y0 = sys.add_variables(trel.rows());
        for (int c = 0; c < gt; ++c) {
            std::vector<std::pair<int, RingElem>> terms;
            for (int i = 0; i < gs; ++i)
                if (srel.at(t, i).v != 0)
                    terms.emplace_back(x0 + i * gt + c, srel.at(t, i));
            for (int u = 0; u < trel.rows(); ++u)
                if (trel.at(u, c).v != 0)
                    terms.emplace_back(y0 + u, trel.at(u, c));
            sys.add_equation(std::move(terms), ring.zero());
        }
    }
    auto sol = sys.solve();
    if (!sol)
        throw InternalInvariantBroken("homogeneous system with no solution");
    // random combination of the solution-space generators; fibers of the
    // coefficient map have equal size, so the matrix is uniform over the
    // solution module
    std::vector<RingElem> pick(std::size_t(sol->kernel.rows()));
    for (auto& c : pick) c = random_elem(rng, ring);
    Matrix out(ring, gs, gt);
    for (int k = 0; k < sol->kernel.rows(); ++k) {
        if (pick[std::size_t(k)].v == 0) continue;
        for (int i = 0; i < gs; ++i)
            for (int j = 0; j < gt; ++j)
                out.set(i, j,
                        ring.add(out.at(i, j),
                                 ring.mul(pick[std::size_t(k)],
                                          sol->kernel.at(k, x0 + i * gt + j))));
    }
    return out;
}

Rep random_rep(Rng& rng, const QuiverCtxPtr& ctx, const RingSpec& ring,
               int max_gens) {
    const Quiver& q = ctx->quiver;
    std::vector<FPModule> mods;
    for (int v = 0; v < q.vertex_count(); ++v)
        mods.push_back(random_module(rng, ring, max_gens));
    std::vector<Matrix> arrows;
    for (const auto& a : q.arrows()) {
        const FPModule& s = mods[std::size_t(*q.vertex_index(a.src))];
        const FPModule& t = mods[std::size_t(*q.vertex_index(a.tgt))];
        arrows.push_back(random_well_defined_matrix(rng, s, t));
    }
    return Rep(ctx, ring, std::move(mods), std::move(arrows));
}

RepMap random_rep_map(Rng& rng, const Rep& a, const Rep& b) {
    HomBasis hb = hom_rep(a, b);
    std::vector<RingElem> coords(std::size_t(hb.module.generators()));
    for (auto& c : coords) c = random_elem(rng, a.ring());
    return hb.map_from_coords(coords);
}

} // namespace qgp
