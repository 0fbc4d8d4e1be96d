#include "qgp/selftest.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "qgp/random_gen.hpp"
#include "qgp/stable.hpp"

namespace qgp::selftest {

namespace {

std::vector<RingSpec> fixture_rings() {
    return {RingSpec::z_mod(4), RingSpec::z_mod(8), RingSpec::z_mod(6),
            RingSpec::truncated_poly(2, 2), RingSpec::truncated_poly(3, 2)};
}

const std::vector<QuiverCtxPtr>& fixture_quivers() {
    static const std::vector<QuiverCtxPtr> qs = {
        make_quiver_ctx(Quiver({"0", "1"}, {{"a", "0", "1"}})),
        make_quiver_ctx(
            Quiver({"0", "1", "2"}, {{"a", "0", "1"}, {"b", "1", "2"}})),
        make_quiver_ctx(Quiver({"0", "1"}, {{"a", "0", "1"}, {"b", "0", "1"}})),
        make_quiver_ctx(Quiver({"00", "10", "01", "11"},
                               {{"a", "00", "10"},
                                {"b", "00", "01"},
                                {"c", "10", "11"},
                                {"d", "01", "11"}})),
    };
    return qs;
}

// ---- brute-force reference computations (independent of the normal-form
// ---- code paths they check)

using RawRow = std::vector<std::uint64_t>;

RawRow raw(const std::vector<RingElem>& r) {
    RawRow out(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) out[i] = r[i].v;
    return out;
}

std::vector<std::vector<RingElem>> all_rows(const RingSpec& ring, int n) {
    std::vector<std::vector<RingElem>> out;
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= ring.size();
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::vector<RingElem> row(static_cast<std::size_t>(n), RingElem{0});
        std::uint64_t v = idx;
        for (int i = 0; i < n; ++i) {
            row[std::size_t(i)] = ring.element(v % ring.size());
            v /= ring.size();
        }
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<RingElem> apply_row(const RingSpec& ring,
                                const std::vector<RingElem>& x,
                                const Matrix& a) {
    std::vector<RingElem> out(std::size_t(a.cols()), ring.zero());
    for (int i = 0; i < a.rows(); ++i) {
        if (x[std::size_t(i)].v == 0) continue;
        for (int j = 0; j < a.cols(); ++j)
            out[std::size_t(j)] = ring.add(
                out[std::size_t(j)], ring.mul(x[std::size_t(i)], a.at(i, j)));
    }
    return out;
}

std::set<RawRow> span_set(const Matrix& a) {
    std::set<RawRow> out;
    for (const auto& c : all_rows(a.ring(), a.rows()))
        out.insert(raw(apply_row(a.ring(), c, a)));
    return out;
}

std::set<RawRow> kernel_set(const Matrix& a) {
    std::set<RawRow> out;
    for (const auto& x : all_rows(a.ring(), a.rows())) {
        auto img = apply_row(a.ring(), x, a);
        bool zero = true;
        for (auto e : img) zero = zero && e.v == 0;
        if (zero) out.insert(raw(x));
    }
    return out;
}

bool same_submodule(const Matrix& a, const Matrix& b, const FPModule& amb) {
    HowellForm ha = howell_form(stack_vertical(a, amb.relations()));
    HowellForm hb = howell_form(stack_vertical(b, amb.relations()));
    return ha.H == hb.H;
}

bool exact_at(const RepMap& in, const RepMap& out) {
    for (int v = 0; v < in.source().quiver().vertex_count(); ++v) {
        Subquotient sq = subquotient(out.component(v));
        if (!same_submodule(in.component_matrix(v),
                            sq.kernel_inclusion.matrix(),
                            in.target().vertex_module(v)))
            return false;
    }
    return true;
}

CriterionResult summarize(const std::string& name, long ok, long total) {
    std::ostringstream os;
    os << ok << "/" << total << " checks passed";
    return {name, ok == total && total > 0, os.str()};
}

// the full colimit over the category of nonidentity paths into j, compared
// against the latching object
bool latching_matches_colimit(const Rep& m, int j) {
    const RingSpec& ring = m.ring();
    const Quiver& q = m.quiver();
    struct Block {
        int src;
        PathSeq path;
        int offset;
    };
    std::vector<Block> blocks;
    int total = 0;
    for (int i : m.reedy().topo_order())
        for (const auto& p : m.reedy().paths(i, j))
            if (!p.empty()) {
                blocks.push_back({i, p, total});
                total += m.vertex_module(i).generators();
            }
    std::vector<std::vector<RingElem>> rel_rows;
    auto pad = [&](const std::vector<RingElem>& row, int off) {
        std::vector<RingElem> out(std::size_t(total), ring.zero());
        for (std::size_t c = 0; c < row.size(); ++c)
            out[std::size_t(off) + c] = row[c];
        return out;
    };
    for (const auto& b : blocks)
        for (int t = 0; t < m.vertex_module(b.src).relations().rows(); ++t)
            rel_rows.push_back(
                pad(m.vertex_module(b.src).relations().row_vector(t), b.offset));
    for (const auto& b : blocks) {
        if (b.path.size() < 2) continue;
        int ai = b.path.front();
        PathSeq suffix(b.path.begin() + 1, b.path.end());
        int mid = *q.vertex_index(q.arrows()[std::size_t(ai)].tgt);
        const Block* tb = nullptr;
        for (const auto& cand : blocks)
            if (cand.src == mid && cand.path == suffix) tb = &cand;
        if (!tb) return false;
        for (int g = 0; g < m.vertex_module(b.src).generators(); ++g) {
            std::vector<RingElem> row(std::size_t(total), ring.zero());
            row[std::size_t(b.offset + g)] = ring.one();
            Matrix gm(ring, 1, m.vertex_module(b.src).generators());
            gm.set(0, g, ring.one());
            auto img = gm.mul(m.arrow_matrix(ai)).row_vector(0);
            for (std::size_t c = 0; c < img.size(); ++c)
                row[std::size_t(tb->offset) + c] =
                    ring.sub(row[std::size_t(tb->offset) + c], img[c]);
            rel_rows.push_back(std::move(row));
        }
    }
    FPModule colim(ring, total, Matrix::from_rows(ring, total, rel_rows));
    LatchingData ld = latching(m, j);
    if (colim.iso_invariants() != ld.object.iso_invariants()) return false;
    Matrix cmp(ring, ld.object.generators(), total);
    int loff = 0;
    for (std::size_t bi = 0; bi < ld.arrows.size(); ++bi) {
        const Block* tb = nullptr;
        for (const auto& cand : blocks)
            if (cand.path == PathSeq{ld.arrows[bi]}) tb = &cand;
        if (!tb) return false;
        int g = m.vertex_module(tb->src).generators();
        for (int t = 0; t < g; ++t) cmp.set(loff + t, tb->offset + t, ring.one());
        loff += g;
    }
    ModuleMap iso(ld.object, colim, cmp);
    if (!iso.is_injective() || !iso.is_surjective()) return false;
    Matrix tovertex(ring, total, m.vertex_module(j).generators());
    for (const auto& b : blocks)
        tovertex.paste(m.path_matrix(b.src, b.path), b.offset, 0);
    ModuleMap colim_to_vertex(colim, m.vertex_module(j), tovertex);
    return iso.compose(colim_to_vertex).equals(ld.map);
}

} // namespace

CriterionResult oracle_equivalence(std::uint64_t seed) {
    auto rings = fixture_rings();
    const auto& quivers = fixture_quivers();
    const int per_ring = 500;
    long total = 0, ok = 0;
    for (std::size_t ri = 0; ri < rings.size(); ++ri) {
        for (int i = 0; i < per_ring; ++i) {
            Rng rng(seed * 1000003ull + ri * 7919ull + std::uint64_t(i));
            const auto& ctx = quivers[std::size_t(i) % quivers.size()];
            Rep m = random_rep(rng, ctx, rings[ri], 2);
            bool gp = is_gorenstein_projective(m);
            bool ext_zero = true;
            for (const auto& e : ext1_oracle(m))
                ext_zero = ext_zero && e.is_zero_module();
            ++total;
            if (gp == ext_zero) ++ok;
        }
    }
    return summarize("oracle equivalence: latching injectivity vs Ext^1 vanishing",
                     ok, total);
}

CriterionResult latching_theorem(std::uint64_t seed) {
    long total = 0, ok = 0;
    for (const auto& ctx : fixture_quivers()) {
        for (const auto& ring :
             {RingSpec::z_mod(4), RingSpec::truncated_poly(2, 2)}) {
            for (int rep_i = 0; rep_i < 3; ++rep_i) {
                Rng rng(seed + 31ull * rep_i + ctx->quiver.vertex_count());
                Rep m = random_rep(rng, ctx, ring, 2);
                for (int j = 0; j < ctx->quiver.vertex_count(); ++j) {
                    ++total;
                    if (latching_matches_colimit(m, j)) ++ok;
                }
            }
        }
    }
    return summarize("latching object equals the path-category colimit", ok,
                     total);
}

CriterionResult trivial_fibration_coincidence(std::uint64_t seed) {
    auto rings = fixture_rings();
    const auto& quivers = fixture_quivers();
    const int count = 300;
    long total = 0, ok = 0;
    for (int i = 0; i < count; ++i) {
        Rng rng(seed * 53ull + std::uint64_t(i));
        const auto& ring = rings[std::size_t(i) % rings.size()];
        const auto& ctx = quivers[std::size_t(i / 5) % quivers.size()];
        Rep n = random_rep(rng, ctx, ring, 2);
        Rep m0 = random_rep(rng, ctx, ring, 1);
        CoverResult cover = projective_cover(n);
        DirectSumReps ds = direct_sum_reps({m0, cover.cover});
        RepMap f = copair(ds, random_rep_map(rng, m0, n), cover.onto);
        ++total;
        try {
            MorphismFlags fl = classify_morphism(f);
            // the construction is always surjective; classify_morphism has
            // already compared both trivial-fibration routes
            if (fl.rp_fibration) ++ok;
        } catch (const InternalInvariantBroken&) {
        }
    }
    return summarize(
        "trivial fibrations: weq+fibration coincides with projdim(ker) <= 1",
        ok, total);
}

CriterionResult replacement_certification(std::uint64_t seed) {
    auto rings = fixture_rings();
    const auto& quivers = fixture_quivers();
    const int count = 300;
    long total = 0, ok = 0;
    for (int i = 0; i < count; ++i) {
        Rng rng(seed * 97ull + std::uint64_t(i));
        const auto& ring = rings[std::size_t(i) % rings.size()];
        const auto& ctx = quivers[std::size_t(i / 5) % quivers.size()];
        Rep m = random_rep(rng, ctx, ring, 2);
        ++total;
        try {
            Replacement c = cofibrant_replacement(m);
            Replacement f = fibrant_replacement(m);
            FourTermResolution ft = four_term_resolution(m);
            bool good = is_gorenstein_projective(c.object) &&
                        is_gorenstein_injective(f.object);
            good = good && ft.s_to_t.is_vertexwise_injective();
            good = good && exact_at(ft.s_to_t, ft.t_to_gp);
            good = good && exact_at(ft.t_to_gp, ft.gp_to_m);
            good = good && ft.gp_to_m.is_vertexwise_surjective();
            if (good) ++ok;
        } catch (const InternalInvariantBroken&) {
        }
    }
    return summarize("replacements certified and four-term resolutions exact",
                     ok, total);
}

CriterionResult lifting_corollary(std::uint64_t seed) {
    auto rings = fixture_rings();
    const auto& quivers = fixture_quivers();
    long total = 0, ok = 0;
    // positive side: every Gorenstein-projective lifts against every
    // trivial fibration
    for (int i = 0; i < 100; ++i) {
        Rng rng(seed * 131ull + std::uint64_t(i));
        const auto& ring = rings[std::size_t(i) % rings.size()];
        const auto& ctx = quivers[std::size_t(i / 5) % quivers.size()];
        Rep m_raw = random_rep(rng, ctx, ring, 1);
        Rep y = random_rep(rng, ctx, ring, 1);
        Rep gp = cofibrant_replacement(m_raw).object;
        Replacement rep_y = cofibrant_replacement(y);
        RepMap q = random_rep_map(rng, gp, y);
        ++total;
        auto h = lift_through(rep_y.map, q);
        if (h && h->compose(rep_y.map).equals(q)) ++ok;
    }
    // negative side: a non-Gorenstein-projective object fails to lift its
    // identity through its own replacement
    int found = 0;
    for (std::uint64_t attempt = 0; found < 20 && attempt < 4000; ++attempt) {
        Rng rng(seed * 151ull + attempt);
        const auto& ring = rings[std::size_t(attempt) % rings.size()];
        const auto& ctx = quivers[std::size_t(attempt / 5) % quivers.size()];
        Rep m = random_rep(rng, ctx, ring, 2);
        if (is_gorenstein_projective(m)) continue;
        ++found;
        ++total;
        Replacement r = cofibrant_replacement(m);
        if (!lift_through(r.map, RepMap::identity(m)).has_value()) ++ok;
    }
    if (found < 20)
        return {"lifting property characterizes Gorenstein-projectives", false,
                "could not find 20 non-cofibrant instances"};
    return summarize("lifting property characterizes Gorenstein-projectives",
                     ok, total);
}

CriterionResult triangulation_checks(std::uint64_t seed) {
    auto rings = fixture_rings();
    const auto& quivers = fixture_quivers();
    long total = 0, ok = 0;
    for (int i = 0; i < 200; ++i) {
        Rng rng(seed * 173ull + std::uint64_t(i));
        const auto& ring = rings[std::size_t(i) % rings.size()];
        const auto& ctx = quivers[std::size_t(i / 5) % quivers.size()];
        Rep m = random_rep(rng, ctx, ring, 1);
        ++total;
        try {
            if (sigma_omega_compare(m).is_weq) ++ok;
        } catch (const InternalInvariantBroken&) {
        }
    }
    for (int i = 0; i < 200; ++i) {
        Rng rng(seed * 181ull + std::uint64_t(i));
        const auto& ring = rings[std::size_t(i) % rings.size()];
        const auto& ctx = quivers[std::size_t(i / 5) % quivers.size()];
        Rep m = random_rep(rng, ctx, ring, 1);
        Rep n = random_rep(rng, ctx, ring, 1);
        ++total;
        try {
            if (hovey_adjunction_check(m, n).agree) ++ok;
        } catch (const InternalInvariantBroken&) {
        }
    }
    // frozen value: the stable endomorphisms of (0 -> Z/2) over Z/4 on the
    // two-vertex line form Z/2
    {
        ++total;
        RingSpec r4 = RingSpec::z_mod(4);
        const auto& a2 = fixture_quivers()[0];
        Rep m(a2, r4, {FPModule::zero(r4), FPModule::cyclic(r4, {2})},
              {Matrix(r4, 0, 1)});
        StableHomResult sh = stable_hom(m, m);
        if (sh.module.iso_invariants() == std::vector<RingElem>{{2}}) ++ok;
    }
    return summarize("triangulated-structure instance checks", ok, total);
}

CriterionResult linear_algebra_ground_truth(std::uint64_t seed) {
    long total = 0, ok = 0;
    auto check_matrix = [&](const Matrix& a, Rng& rng) {
        const RingSpec& ring = a.ring();
        bool good = true;
        HowellForm hf = howell_form(a);
        good = good && span_set(a) == span_set(hf.H);
        good = good && hf.U.mul(a) == hf.H;
        good = good && kernel_set(a) == span_set(kernel_matrix(a));
        if (a.rows() > 0) {
            Matrix b(ring, 1, a.cols());
            for (int j = 0; j < a.cols(); ++j)
                b.set(0, j, ring.element(rng.below(ring.size())));
            auto sol = solve_linear(a, b);
            bool brute = span_set(a).count(raw(b.row_vector(0))) > 0;
            good = good && (sol.has_value() == brute);
            if (sol) good = good && sol->particular.mul(a) == b;
        }
        auto sm = smith_decompose(a);
        std::uint64_t card = 1;
        for (auto d : sm.invariants) card *= ring.quotient_size(d);
        std::uint64_t rn = 1;
        for (int j = 0; j < a.cols(); ++j) rn *= ring.size();
        good = good && card == rn / span_set(a).size();
        for (std::size_t i = 0; i + 1 < sm.invariants.size(); ++i)
            good = good &&
                   ring.divides(sm.invariants[i], sm.invariants[i + 1]);
        ++total;
        if (good) ++ok;
    };
    // full sweep of every shape up to 3x3 over Z/4 and F_2[t]/(t^2)
    for (const auto& ring :
         {RingSpec::z_mod(4), RingSpec::truncated_poly(2, 2)}) {
        for (int m = 0; m <= 3; ++m)
            for (int n = 0; n <= 3; ++n) {
                std::uint64_t combos = 1;
                for (int i = 0; i < m * n; ++i) combos *= ring.size();
                for (std::uint64_t idx = 0; idx < combos; ++idx) {
                    Matrix a(ring, m, n);
                    std::uint64_t v = idx;
                    for (int i = 0; i < m; ++i)
                        for (int j = 0; j < n; ++j) {
                            a.set(i, j, ring.element(v % ring.size()));
                            v /= ring.size();
                        }
                    Rng rng(seed ^ idx);
                    check_matrix(a, rng);
                }
            }
    }
    // random instances over Z/8 and Z/6
    for (const auto& ring : {RingSpec::z_mod(8), RingSpec::z_mod(6)}) {
        for (int i = 0; i < 1000; ++i) {
            Rng rng(seed * 211ull + std::uint64_t(i) + ring.size());
            int m = 1 + int(rng.below(3)), n = 1 + int(rng.below(3));
            Matrix a(ring, m, n);
            for (int r = 0; r < m; ++r)
                for (int c = 0; c < n; ++c)
                    a.set(r, c, ring.element(rng.below(ring.size())));
            check_matrix(a, rng);
        }
    }
    return summarize("normal forms match exhaustive enumeration", ok, total);
}

CriterionResult degree_independence(std::uint64_t seed) {
    long total = 0, ok = 0;
    for (const auto& base : fixture_quivers()) {
        const Quiver& q = base->quiver;
        // three alternative valid degree functions
        std::vector<std::vector<int>> alts;
        {
            std::vector<int> d1 = base->reedy.degree();
            for (auto& x : d1) x += 1;
            alts.push_back(d1);
            std::vector<int> d2 = base->reedy.degree();
            for (auto& x : d2) x *= 3;
            alts.push_back(d2);
            // randomized strictly increasing degree along a topological scan
            Rng rng(seed + q.vertex_count());
            std::vector<int> d3(std::size_t(q.vertex_count()), 0);
            for (int v : base->reedy.topo_order()) {
                int lo = 0;
                for (int ai : base->reedy.incoming()[std::size_t(v)]) {
                    int s = *q.vertex_index(q.arrows()[std::size_t(ai)].src);
                    lo = std::max(lo, d3[std::size_t(s)] + 1);
                }
                d3[std::size_t(v)] = lo + int(rng.below(3));
            }
            alts.push_back(d3);
        }
        for (const auto& ring :
             {RingSpec::z_mod(4), RingSpec::truncated_poly(2, 2)}) {
            for (int rep_i = 0; rep_i < 3; ++rep_i) {
                Rng rng(seed * 7ull + rep_i * 13ull + q.vertex_count());
                Rep m = random_rep(rng, base, ring, 2);
                Rep m2 = random_rep(rng, base, ring, 2);
                RepMap f = random_rep_map(rng, m, m2);
                ObjectFlags of = classify_object(m);
                MorphismFlags mf = classify_morphism(f);
                for (const auto& d : alts) {
                    auto alt = make_quiver_ctx_with_degree(q, d);
                    std::vector<FPModule> mods, mods2;
                    std::vector<Matrix> arrows, arrows2, comps;
                    for (int v = 0; v < q.vertex_count(); ++v) {
                        mods.push_back(m.vertex_module(v));
                        mods2.push_back(m2.vertex_module(v));
                        comps.push_back(f.component_matrix(v));
                    }
                    for (int a = 0; a < q.arrow_count(); ++a) {
                        arrows.push_back(m.arrow_matrix(a));
                        arrows2.push_back(m2.arrow_matrix(a));
                    }
                    Rep am(alt, ring, mods, arrows);
                    Rep am2(alt, ring, mods2, arrows2);
                    RepMap af(am, am2, comps);
                    ObjectFlags aof = classify_object(am);
                    MorphismFlags amf = classify_morphism(af);
                    ++total;
                    bool same =
                        aof.gorenstein_projective == of.gorenstein_projective &&
                        aof.gorenstein_injective == of.gorenstein_injective &&
                        aof.projective_object == of.projective_object &&
                        aof.injective_object == of.injective_object &&
                        aof.trivial == of.trivial &&
                        amf.weak_equivalence == mf.weak_equivalence &&
                        amf.rp_fibration == mf.rp_fibration &&
                        amf.rp_cofibration == mf.rp_cofibration &&
                        amf.ri_fibration == mf.ri_fibration &&
                        amf.ri_cofibration == mf.ri_cofibration &&
                        amf.rp_trivial_fibration == mf.rp_trivial_fibration &&
                        amf.ri_trivial_cofibration == mf.ri_trivial_cofibration;
                    if (same) ++ok;
                }
            }
        }
    }
    return summarize("classification is independent of the degree function",
                     ok, total);
}

CriterionResult one_gorenstein_witness(std::uint64_t seed) {
    (void)seed;
    long total = 0, ok = 0;
    for (const auto& ring : fixture_rings()) {
        for (const auto& ctx : fixture_quivers()) {
            int n = ctx->quiver.vertex_count();
            for (int i = 0; i < n; ++i) {
                std::vector<int> ranks(std::size_t(n), 0);
                ranks[std::size_t(i)] = 1;
                Rep p = induced_projective(ctx, ring, ranks);
                EnvelopeResult env = injective_envelope(p);
                RepWithMap coker = pointwise_cokernel(env.into);
                ++total;
                bool good = env.into.is_vertexwise_injective() &&
                            is_injective_object(env.envelope) &&
                            is_injective_object(coker.rep);
                if (good) ++ok;
            }
        }
    }
    return summarize(
        "indecomposable projectives have injective coresolutions of length 1",
        ok, total);
}

std::vector<CriterionResult> run_all(std::uint64_t seed) {
    return {
        oracle_equivalence(seed),
        latching_theorem(seed),
        trivial_fibration_coincidence(seed),
        replacement_certification(seed),
        lifting_corollary(seed),
        triangulation_checks(seed),
        linear_algebra_ground_truth(seed),
        degree_independence(seed),
        one_gorenstein_witness(seed),
    };
}

} // namespace qgp::selftest
