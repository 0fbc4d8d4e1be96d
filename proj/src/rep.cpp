#include "qgp/rep.hpp"

#include <algorithm>

#include "qgp/errors.hpp"

namespace qgp {

namespace {

int path_index(const ReedyData& rd, int src, int tgt, const PathSeq& p) {
    const auto& all = rd.paths(src, tgt);
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i] == p) return int(i);
    throw InternalInvariantBroken("path lookup failed");
}

// Canonical block layout for induced/coinduced constructions. For the
// induced flavour block (i, pi) at vertex j indexes paths(i, j)[pi]; for the
// coinduced flavour it indexes paths(j, i)[pi]. Anchor vertices i are
// enumerated in topological order so that direct-sum block orders are
// reproducible.
struct BlockLayout {
    std::vector<std::vector<std::pair<int, int>>> blocks;
    std::vector<std::vector<int>> offsets;
    std::vector<int> totals;
};

BlockLayout induced_layout(const QuiverCtx& ctx, const std::vector<int>& ranks) {
    int n = ctx.quiver.vertex_count();
    BlockLayout bl;
    bl.blocks.assign(std::size_t(n), {});
    bl.offsets.assign(std::size_t(n), {});
    bl.totals.assign(std::size_t(n), 0);
    for (int j = 0; j < n; ++j) {
        int off = 0;
        for (int i : ctx.reedy.topo_order()) {
            const auto& ps = ctx.reedy.paths(i, j);
            for (std::size_t pi = 0; pi < ps.size(); ++pi) {
                bl.blocks[std::size_t(j)].emplace_back(i, int(pi));
                bl.offsets[std::size_t(j)].push_back(off);
                off += ranks[std::size_t(i)];
            }
        }
        bl.totals[std::size_t(j)] = off;
    }
    return bl;
}

BlockLayout coinduced_layout(const QuiverCtx& ctx,
                             const std::vector<int>& sizes) {
    int n = ctx.quiver.vertex_count();
    BlockLayout bl;
    bl.blocks.assign(std::size_t(n), {});
    bl.offsets.assign(std::size_t(n), {});
    bl.totals.assign(std::size_t(n), 0);
    for (int j = 0; j < n; ++j) {
        int off = 0;
        for (int i : ctx.reedy.topo_order()) {
            const auto& ps = ctx.reedy.paths(j, i);
            for (std::size_t pi = 0; pi < ps.size(); ++pi) {
                bl.blocks[std::size_t(j)].emplace_back(i, int(pi));
                bl.offsets[std::size_t(j)].push_back(off);
                off += sizes[std::size_t(i)];
            }
        }
        bl.totals[std::size_t(j)] = off;
    }
    return bl;
}

int vidx(const Quiver& q, const std::string& name) {
    return *q.vertex_index(name);
}

} // namespace

Rep::Rep(QuiverCtxPtr ctx, RingSpec ring, std::vector<FPModule> vertex_modules,
         std::vector<Matrix> arrow_matrices)
    : ctx_(std::move(ctx)), ring_(std::move(ring)),
      vertex_modules_(std::move(vertex_modules)),
      arrow_matrices_(std::move(arrow_matrices)) {
    if (auto why = check_rep(ctx_, ring_, vertex_modules_, arrow_matrices_))
        throw Error(ErrorKind::ValidationError, *why);
}

Rep Rep::zero_rep(QuiverCtxPtr ctx, RingSpec ring) {
    int n = ctx->quiver.vertex_count();
    std::vector<FPModule> mods(std::size_t(n), FPModule::zero(ring));
    std::vector<Matrix> arrows(std::size_t(ctx->quiver.arrow_count()),
                               Matrix(ring, 0, 0));
    return Rep(std::move(ctx), std::move(ring), std::move(mods),
               std::move(arrows));
}

ModuleMap Rep::arrow_map(int a) const {
    const Arrow& ar = quiver().arrows()[std::size_t(a)];
    return ModuleMap(vertex_module(vidx(quiver(), ar.src)),
                     vertex_module(vidx(quiver(), ar.tgt)), arrow_matrix(a));
}

Matrix Rep::path_matrix(int from, const PathSeq& path) const {
    Matrix m = Matrix::identity(ring_, vertex_module(from).generators());
    for (int ai : path) m = m.mul(arrow_matrix(ai));
    return m;
}

bool Rep::is_zero() const {
    for (const auto& m : vertex_modules_)
        if (!m.is_zero_module()) return false;
    return true;
}

bool Rep::same_presentation(const Rep& o) const {
    if (!(quiver() == o.quiver()) || ring_ != o.ring_) return false;
    for (std::size_t v = 0; v < vertex_modules_.size(); ++v)
        if (!vertex_modules_[v].same_presentation(o.vertex_modules_[v]))
            return false;
    for (std::size_t a = 0; a < arrow_matrices_.size(); ++a)
        if (arrow_matrices_[a] != o.arrow_matrices_[a]) return false;
    return true;
}

std::optional<std::string> check_rep(const QuiverCtxPtr& ctx,
                                     const RingSpec& ring,
                                     const std::vector<FPModule>& mods,
                                     const std::vector<Matrix>& arrows) {
    if (!ctx) return "missing quiver context";
    const Quiver& q = ctx->quiver;
    if (int(mods.size()) != q.vertex_count())
        return "vertex module count mismatch";
    if (int(arrows.size()) != q.arrow_count()) return "arrow map count mismatch";
    for (const auto& m : mods)
        if (m.ring() != ring) return "vertex module over a different ring";
    for (int a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrows()[std::size_t(a)];
        const FPModule& s = mods[std::size_t(vidx(q, ar.src))];
        const FPModule& t = mods[std::size_t(vidx(q, ar.tgt))];
        if (auto why = check_module_map(s, t, arrows[std::size_t(a)]))
            return "arrow " + ar.name + ": " + *why;
    }
    return std::nullopt;
}

std::optional<std::string> check_rep_map(const Rep& src, const Rep& tgt,
                                         const std::vector<Matrix>& comps) {
    if (!(src.quiver() == tgt.quiver()))
        return "source and target live over different quivers";
    if (src.ring() != tgt.ring()) return "source and target rings differ";
    const Quiver& q = src.quiver();
    if (int(comps.size()) != q.vertex_count()) return "component count mismatch";
    for (int v = 0; v < q.vertex_count(); ++v)
        if (auto why = check_module_map(src.vertex_module(v),
                                        tgt.vertex_module(v),
                                        comps[std::size_t(v)]))
            return "vertex " + q.vertices()[std::size_t(v)] + ": " + *why;
    for (int a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrows()[std::size_t(a)];
        int sv = vidx(q, ar.src), tv = vidx(q, ar.tgt);
        Matrix lhs = src.arrow_matrix(a).mul(comps[std::size_t(tv)]);
        Matrix rhs = comps[std::size_t(sv)].mul(tgt.arrow_matrix(a));
        Matrix diff = lhs.sub(rhs);
        const FPModule& target_mod = tgt.vertex_module(tv);
        for (int i = 0; i < diff.rows(); ++i)
            if (!target_mod.is_zero_element(diff.row_vector(i)))
                return "naturality fails at arrow " + ar.name;
    }
    return std::nullopt;
}

RepMap::RepMap(Rep source, Rep target, std::vector<Matrix> components)
    : source_(std::move(source)), target_(std::move(target)),
      components_(std::move(components)) {
    if (auto why = check_rep_map(source_, target_, components_))
        throw Error(ErrorKind::ValidationError, *why);
}

RepMap RepMap::identity(const Rep& m) {
    std::vector<Matrix> comps;
    for (int v = 0; v < m.quiver().vertex_count(); ++v)
        comps.push_back(
            Matrix::identity(m.ring(), m.vertex_module(v).generators()));
    return RepMap(m, m, std::move(comps));
}

RepMap RepMap::zero_map(const Rep& src, const Rep& tgt) {
    std::vector<Matrix> comps;
    for (int v = 0; v < src.quiver().vertex_count(); ++v)
        comps.emplace_back(src.ring(), src.vertex_module(v).generators(),
                           tgt.vertex_module(v).generators());
    return RepMap(src, tgt, std::move(comps));
}

ModuleMap RepMap::component(int v) const {
    return ModuleMap(source_.vertex_module(v), target_.vertex_module(v),
                     components_[std::size_t(v)]);
}

RepMap RepMap::compose(const RepMap& next) const {
    if (!target_.same_presentation(next.source_))
        throw Error(ErrorKind::SpecMismatch,
                    "compose: middle representations differ");
    std::vector<Matrix> comps;
    for (std::size_t v = 0; v < components_.size(); ++v)
        comps.push_back(components_[v].mul(next.components_[v]));
    return RepMap(source_, next.target_, std::move(comps));
}

RepMap RepMap::add(const RepMap& o) const {
    std::vector<Matrix> comps;
    for (std::size_t v = 0; v < components_.size(); ++v)
        comps.push_back(components_[v].add(o.components_[v]));
    return RepMap(source_, target_, std::move(comps));
}

RepMap RepMap::negate() const {
    std::vector<Matrix> comps;
    for (const auto& c : components_) comps.push_back(c.neg());
    return RepMap(source_, target_, std::move(comps));
}

bool RepMap::equals(const RepMap& o) const {
    if (!source_.same_presentation(o.source_) ||
        !target_.same_presentation(o.target_))
        return false;
    for (std::size_t v = 0; v < components_.size(); ++v) {
        Matrix diff = components_[v].sub(o.components_[v]);
        for (int i = 0; i < diff.rows(); ++i)
            if (!target_.vertex_module(int(v)).is_zero_element(
                    diff.row_vector(i)))
                return false;
    }
    return true;
}

bool RepMap::is_vertexwise_injective() const {
    for (int v = 0; v < source_.quiver().vertex_count(); ++v)
        if (!component(v).is_injective()) return false;
    return true;
}

bool RepMap::is_vertexwise_surjective() const {
    for (int v = 0; v < source_.quiver().vertex_count(); ++v)
        if (!component(v).is_surjective()) return false;
    return true;
}

bool RepMap::is_zero() const {
    for (int v = 0; v < source_.quiver().vertex_count(); ++v)
        if (!component(v).is_zero()) return false;
    return true;
}

LatchingData latching(const Rep& m, int j) {
    const RingSpec& ring = m.ring();
    const auto& inc = m.reedy().incoming()[std::size_t(j)];
    std::vector<FPModule> parts;
    for (int ai : inc)
        parts.push_back(m.vertex_module(
            vidx(m.quiver(), m.quiver().arrows()[std::size_t(ai)].src)));
    DirectSumModules ds = direct_sum_modules(parts, ring);
    const FPModule& mj = m.vertex_module(j);
    Matrix map(ring, ds.sum.generators(), mj.generators());
    std::vector<int> offsets;
    int off = 0;
    for (std::size_t b = 0; b < inc.size(); ++b) {
        offsets.push_back(off);
        map.paste(m.arrow_matrix(inc[b]), off, 0);
        off += parts[b].generators();
    }
    return {ds.sum, ModuleMap(ds.sum, mj, std::move(map)), inc, offsets};
}

LatchingData matching(const Rep& m, int j) {
    const RingSpec& ring = m.ring();
    const auto& out = m.reedy().outgoing()[std::size_t(j)];
    std::vector<FPModule> parts;
    for (int ai : out)
        parts.push_back(m.vertex_module(
            vidx(m.quiver(), m.quiver().arrows()[std::size_t(ai)].tgt)));
    DirectSumModules ds = direct_sum_modules(parts, ring);
    const FPModule& mj = m.vertex_module(j);
    Matrix map(ring, mj.generators(), ds.sum.generators());
    std::vector<int> offsets;
    int off = 0;
    for (std::size_t b = 0; b < out.size(); ++b) {
        offsets.push_back(off);
        map.paste(m.arrow_matrix(out[b]), 0, off);
        off += parts[b].generators();
    }
    return {ds.sum, ModuleMap(mj, ds.sum, std::move(map)), out, offsets};
}

RepWithMap pointwise_kernel(const RepMap& f) {
    const Rep& m = f.source();
    const RingSpec& ring = m.ring();
    int n = m.quiver().vertex_count();
    std::vector<FPModule> kmods;
    std::vector<Matrix> incs;
    for (int v = 0; v < n; ++v) {
        Subquotient sq = subquotient(f.component(v));
        kmods.push_back(sq.kernel);
        incs.push_back(sq.kernel_inclusion.matrix());
    }
    std::vector<Matrix> arrows;
    for (int a = 0; a < m.quiver().arrow_count(); ++a) {
        const Arrow& ar = m.quiver().arrows()[std::size_t(a)];
        int sv = vidx(m.quiver(), ar.src), tv = vidx(m.quiver(), ar.tgt);
        Matrix res(ring, kmods[std::size_t(sv)].generators(),
                   kmods[std::size_t(tv)].generators());
        for (int i = 0; i < res.rows(); ++i) {
            Matrix gen(ring, 1, m.vertex_module(sv).generators());
            gen.set_row(0, incs[std::size_t(sv)].row_vector(i));
            auto img = gen.mul(m.arrow_matrix(a)).row_vector(0);
            auto coords = express_in_submodule(img, incs[std::size_t(tv)],
                                               m.vertex_module(tv));
            if (!coords)
                throw InternalInvariantBroken(
                    "kernel is not preserved by an arrow map");
            res.set_row(i, *coords);
        }
        arrows.push_back(std::move(res));
    }
    Rep ker(m.ctx(), ring, std::move(kmods), std::move(arrows));
    RepMap inc(ker, m, std::move(incs));
    return {std::move(ker), std::move(inc)};
}

RepWithMap pointwise_cokernel(const RepMap& f) {
    const Rep& nrep = f.target();
    const RingSpec& ring = nrep.ring();
    int n = nrep.quiver().vertex_count();
    std::vector<FPModule> cmods;
    std::vector<Matrix> projs;
    for (int v = 0; v < n; ++v) {
        Subquotient sq = subquotient(f.component(v));
        cmods.push_back(sq.cokernel);
        projs.push_back(sq.cokernel_projection.matrix());
    }
    std::vector<Matrix> arrows;
    for (int a = 0; a < nrep.quiver().arrow_count(); ++a)
        arrows.push_back(nrep.arrow_matrix(a));
    Rep coker(nrep.ctx(), ring, std::move(cmods), std::move(arrows));
    RepMap proj(nrep, coker, std::move(projs));
    return {std::move(coker), std::move(proj)};
}

DirectSumReps direct_sum_reps(const std::vector<Rep>& parts) {
    if (parts.empty())
        throw Error(ErrorKind::ShapeMismatch,
                    "direct_sum_reps needs at least one summand");
    const Rep& first = parts.front();
    const RingSpec& ring = first.ring();
    int n = first.quiver().vertex_count();
    std::vector<FPModule> mods;
    std::vector<std::vector<int>> offsets(parts.size());
    for (int v = 0; v < n; ++v) {
        std::vector<FPModule> vp;
        int off = 0;
        for (std::size_t p = 0; p < parts.size(); ++p) {
            offsets[p].push_back(off);
            vp.push_back(parts[p].vertex_module(v));
            off += parts[p].vertex_module(v).generators();
        }
        mods.push_back(direct_sum_modules(vp, ring).sum);
    }
    std::vector<Matrix> arrows;
    for (int a = 0; a < first.quiver().arrow_count(); ++a) {
        const Arrow& ar = first.quiver().arrows()[std::size_t(a)];
        int sv = vidx(first.quiver(), ar.src), tv = vidx(first.quiver(), ar.tgt);
        Matrix blk(ring, mods[std::size_t(sv)].generators(),
                   mods[std::size_t(tv)].generators());
        for (std::size_t p = 0; p < parts.size(); ++p)
            blk.paste(parts[p].arrow_matrix(a), offsets[p][std::size_t(sv)],
                      offsets[p][std::size_t(tv)]);
        arrows.push_back(std::move(blk));
    }
    Rep sum(first.ctx(), ring, std::move(mods), std::move(arrows));
    DirectSumReps out{std::move(sum), {}, {}};
    for (std::size_t p = 0; p < parts.size(); ++p) {
        std::vector<Matrix> in, pr;
        for (int v = 0; v < n; ++v) {
            int gp = parts[p].vertex_module(v).generators();
            int gs = out.sum.vertex_module(v).generators();
            Matrix mi(ring, gp, gs), mp(ring, gs, gp);
            for (int i = 0; i < gp; ++i) {
                mi.set(i, offsets[p][std::size_t(v)] + i, ring.one());
                mp.set(offsets[p][std::size_t(v)] + i, i, ring.one());
            }
            in.push_back(std::move(mi));
            pr.push_back(std::move(mp));
        }
        out.injections.emplace_back(parts[p], out.sum, std::move(in));
        out.projections.emplace_back(out.sum, parts[p], std::move(pr));
    }
    return out;
}

PushoutResult rep_pushout(const RepMap& f, const RepMap& g) {
    if (!f.source().same_presentation(g.source()))
        throw Error(ErrorKind::ShapeMismatch, "pushout legs must share a source");
    const Rep& a = f.source();
    const Rep& b = f.target();
    const Rep& c = g.target();
    const RingSpec& ring = a.ring();
    int n = a.quiver().vertex_count();
    std::vector<FPModule> mods;
    for (int v = 0; v < n; ++v) {
        int gb = b.vertex_module(v).generators();
        int gc = c.vertex_module(v).generators();
        int rb = b.vertex_module(v).relations().rows();
        int rc = c.vertex_module(v).relations().rows();
        int ga = a.vertex_module(v).generators();
        Matrix rel(ring, rb + rc + ga, gb + gc);
        rel.paste(b.vertex_module(v).relations(), 0, 0);
        rel.paste(c.vertex_module(v).relations(), rb, gb);
        rel.paste(f.component_matrix(v), rb + rc, 0);
        rel.paste(g.component_matrix(v).neg(), rb + rc, gb);
        mods.emplace_back(ring, gb + gc, std::move(rel));
    }
    std::vector<Matrix> arrows;
    for (int ai = 0; ai < a.quiver().arrow_count(); ++ai) {
        const Arrow& ar = a.quiver().arrows()[std::size_t(ai)];
        int sv = vidx(a.quiver(), ar.src), tv = vidx(a.quiver(), ar.tgt);
        int gbs = b.vertex_module(sv).generators();
        int gcs = c.vertex_module(sv).generators();
        int gbt = b.vertex_module(tv).generators();
        Matrix blk(ring, gbs + gcs,
                   gbt + c.vertex_module(tv).generators());
        blk.paste(b.arrow_matrix(ai), 0, 0);
        blk.paste(c.arrow_matrix(ai), gbs, gbt);
        arrows.push_back(std::move(blk));
    }
    Rep po(a.ctx(), ring, std::move(mods), std::move(arrows));
    std::vector<Matrix> inb, inc;
    for (int v = 0; v < n; ++v) {
        int gb = b.vertex_module(v).generators();
        int gc = c.vertex_module(v).generators();
        Matrix mb(ring, gb, gb + gc), mc(ring, gc, gb + gc);
        for (int i = 0; i < gb; ++i) mb.set(i, i, ring.one());
        for (int i = 0; i < gc; ++i) mc.set(i, gb + i, ring.one());
        inb.push_back(std::move(mb));
        inc.push_back(std::move(mc));
    }
    RepMap from_b(b, po, std::move(inb));
    RepMap from_c(c, po, std::move(inc));
    return {std::move(po), std::move(from_b), std::move(from_c)};
}

PullbackResult rep_pullback(const RepMap& f, const RepMap& g) {
    if (!f.target().same_presentation(g.target()))
        throw Error(ErrorKind::ShapeMismatch, "pullback legs must share a target");
    DirectSumReps ds = direct_sum_reps({f.source(), g.source()});
    // (b, c) -> f(b) - g(c)
    RepMap h = ds.projections[0].compose(f).add(
        ds.projections[1].compose(g).negate());
    RepWithMap ker = pointwise_kernel(h);
    RepMap to_b = ker.map.compose(ds.projections[0]);
    RepMap to_c = ker.map.compose(ds.projections[1]);
    return {ker.rep, std::move(to_b), std::move(to_c)};
}

RepMap pushout_induced_map(const PushoutResult& po, const RepMap& u,
                           const RepMap& v) {
    const RingSpec& ring = po.object.ring();
    std::vector<Matrix> comps;
    for (int vv = 0; vv < po.object.quiver().vertex_count(); ++vv) {
        Matrix cm(ring, po.object.vertex_module(vv).generators(),
                  u.target().vertex_module(vv).generators());
        cm.paste(u.component_matrix(vv), 0, 0);
        cm.paste(v.component_matrix(vv), u.source().vertex_module(vv).generators(),
                 0);
        comps.push_back(std::move(cm));
    }
    return RepMap(po.object, u.target(), std::move(comps));
}

RepMap pullback_induced_map(const PullbackResult& pb, const RepMap& u,
                            const RepMap& v) {
    const RingSpec& ring = pb.object.ring();
    std::vector<Matrix> comps;
    for (int vv = 0; vv < pb.object.quiver().vertex_count(); ++vv) {
        int gb = pb.to_f_source.target().vertex_module(vv).generators();
        int gc = pb.to_g_source.target().vertex_module(vv).generators();
        DirectSumModules amb = direct_sum_modules(
            {pb.to_f_source.target().vertex_module(vv),
             pb.to_g_source.target().vertex_module(vv)},
            ring);
        Matrix gens(ring, pb.object.vertex_module(vv).generators(), gb + gc);
        gens.paste(pb.to_f_source.component_matrix(vv), 0, 0);
        gens.paste(pb.to_g_source.component_matrix(vv), 0, gb);
        Matrix target(ring, u.source().vertex_module(vv).generators(), gb + gc);
        target.paste(u.component_matrix(vv), 0, 0);
        target.paste(v.component_matrix(vv), 0, gb);
        Matrix cm(ring, u.source().vertex_module(vv).generators(),
                  pb.object.vertex_module(vv).generators());
        for (int r = 0; r < cm.rows(); ++r) {
            auto coords =
                express_in_submodule(target.row_vector(r), gens, amb.sum);
            if (!coords)
                throw Error(ErrorKind::ShapeMismatch,
                            "cone does not land in the pullback");
            cm.set_row(r, *coords);
        }
        comps.push_back(std::move(cm));
    }
    return RepMap(u.source(), pb.object, std::move(comps));
}

Rep induced_projective(const QuiverCtxPtr& ctx, const RingSpec& ring,
                       const std::vector<int>& ranks) {
    const Quiver& q = ctx->quiver;
    int n = q.vertex_count();
    if (int(ranks.size()) != n)
        throw Error(ErrorKind::ShapeMismatch, "rank table size mismatch");
    BlockLayout bl = induced_layout(*ctx, ranks);
    std::vector<FPModule> mods;
    for (int j = 0; j < n; ++j)
        mods.push_back(FPModule::free_module(ring, bl.totals[std::size_t(j)]));
    std::vector<Matrix> arrows;
    for (int ai = 0; ai < q.arrow_count(); ++ai) {
        const Arrow& ar = q.arrows()[std::size_t(ai)];
        int sv = vidx(q, ar.src), tv = vidx(q, ar.tgt);
        Matrix blk(ring, bl.totals[std::size_t(sv)], bl.totals[std::size_t(tv)]);
        for (std::size_t b = 0; b < bl.blocks[std::size_t(sv)].size(); ++b) {
            auto [i, pi] = bl.blocks[std::size_t(sv)][b];
            PathSeq extended = ctx->reedy.paths(i, sv)[std::size_t(pi)];
            extended.push_back(ai);
            int target_pi = path_index(ctx->reedy, i, tv, extended);
            // locate the target block
            int toff = -1;
            for (std::size_t tb = 0; tb < bl.blocks[std::size_t(tv)].size(); ++tb)
                if (bl.blocks[std::size_t(tv)][tb] ==
                    std::make_pair(i, target_pi))
                    toff = bl.offsets[std::size_t(tv)][tb];
            if (toff < 0) throw InternalInvariantBroken("induced block missing");
            for (int t = 0; t < ranks[std::size_t(i)]; ++t)
                blk.set(bl.offsets[std::size_t(sv)][b] + t, toff + t, ring.one());
        }
        arrows.push_back(std::move(blk));
    }
    return Rep(ctx, ring, std::move(mods), std::move(arrows));
}

// Shared builder for coinduced representations: at vertex j the module is
// the direct sum over anchors i and paths j ~> i of e_at[i], and an arrow
// acts by precomposing the indexing path.
Rep coinduced_family(const QuiverCtxPtr& ctx, const RingSpec& ring,
                     const std::vector<FPModule>& e_at) {
    const Quiver& q = ctx->quiver;
    int n = q.vertex_count();
    std::vector<int> sizes;
    for (const auto& e : e_at) sizes.push_back(e.generators());
    BlockLayout bl = coinduced_layout(*ctx, sizes);
    std::vector<FPModule> mods;
    for (int j = 0; j < n; ++j) {
        std::vector<FPModule> parts;
        for (auto [i, pi] : bl.blocks[std::size_t(j)]) {
            (void)pi;
            parts.push_back(e_at[std::size_t(i)]);
        }
        mods.push_back(direct_sum_modules(parts, ring).sum);
    }
    std::vector<Matrix> arrows;
    for (int ai = 0; ai < q.arrow_count(); ++ai) {
        const Arrow& ar = q.arrows()[std::size_t(ai)];
        int sv = vidx(q, ar.src), tv = vidx(q, ar.tgt);
        Matrix blk(ring, mods[std::size_t(sv)].generators(),
                   mods[std::size_t(tv)].generators());
        for (std::size_t tb = 0; tb < bl.blocks[std::size_t(tv)].size(); ++tb) {
            auto [i, pi] = bl.blocks[std::size_t(tv)][tb];
            PathSeq prefixed;
            prefixed.push_back(ai);
            const PathSeq& tail = ctx->reedy.paths(tv, i)[std::size_t(pi)];
            prefixed.insert(prefixed.end(), tail.begin(), tail.end());
            int source_pi = path_index(ctx->reedy, sv, i, prefixed);
            int soff = -1;
            for (std::size_t sb = 0; sb < bl.blocks[std::size_t(sv)].size(); ++sb)
                if (bl.blocks[std::size_t(sv)][sb] ==
                    std::make_pair(i, source_pi))
                    soff = bl.offsets[std::size_t(sv)][sb];
            if (soff < 0)
                throw InternalInvariantBroken("coinduced block missing");
            for (int t = 0; t < sizes[std::size_t(i)]; ++t)
                blk.set(soff + t, bl.offsets[std::size_t(tv)][tb] + t,
                        ring.one());
        }
        arrows.push_back(std::move(blk));
    }
    return Rep(ctx, ring, std::move(mods), std::move(arrows));
}

Rep coinduced_injective(const QuiverCtxPtr& ctx, const RingSpec& ring, int at,
                        const FPModule& e) {
    if (!is_injective_module(e))
        throw Error(ErrorKind::NotInjectiveModule,
                    "coinduced construction needs an injective module");
    std::vector<FPModule> e_at(std::size_t(ctx->quiver.vertex_count()),
                               FPModule::zero(ring));
    e_at[std::size_t(at)] = e;
    return coinduced_family(ctx, ring, e_at);
}

CoverResult projective_cover(const Rep& m) {
    const QuiverCtxPtr& ctx = m.ctx();
    const RingSpec& ring = m.ring();
    const Quiver& q = ctx->quiver;
    int n = q.vertex_count();
    std::vector<int> ranks;
    for (int v = 0; v < n; ++v) ranks.push_back(m.vertex_module(v).generators());
    Rep cover = induced_projective(ctx, ring, ranks);
    BlockLayout bl = induced_layout(*ctx, ranks);
    std::vector<Matrix> comps;
    for (int j = 0; j < n; ++j) {
        Matrix cm(ring, cover.vertex_module(j).generators(),
                  m.vertex_module(j).generators());
        for (std::size_t b = 0; b < bl.blocks[std::size_t(j)].size(); ++b) {
            auto [i, pi] = bl.blocks[std::size_t(j)][b];
            Matrix pm = m.path_matrix(i, ctx->reedy.paths(i, j)[std::size_t(pi)]);
            cm.paste(pm, bl.offsets[std::size_t(j)][b], 0);
        }
        comps.push_back(std::move(cm));
    }
    RepMap onto(cover, m, std::move(comps));
    return {std::move(cover), std::move(onto)};
}

EnvelopeResult injective_envelope(const Rep& m) {
    const QuiverCtxPtr& ctx = m.ctx();
    const RingSpec& ring = m.ring();
    const Quiver& q = ctx->quiver;
    int n = q.vertex_count();
    std::vector<ModuleMap> embeds;
    std::vector<FPModule> e_at;
    for (int v = 0; v < n; ++v) {
        embeds.push_back(embed_into_injective(m.vertex_module(v)));
        e_at.push_back(embeds.back().target());
    }
    Rep env = coinduced_family(ctx, ring, e_at);
    std::vector<int> sizes;
    for (const auto& e : e_at) sizes.push_back(e.generators());
    BlockLayout bl = coinduced_layout(*ctx, sizes);
    std::vector<Matrix> comps;
    for (int j = 0; j < n; ++j) {
        Matrix cm(ring, m.vertex_module(j).generators(),
                  env.vertex_module(j).generators());
        for (std::size_t b = 0; b < bl.blocks[std::size_t(j)].size(); ++b) {
            auto [i, pi] = bl.blocks[std::size_t(j)][b];
            Matrix pm = m.path_matrix(j, ctx->reedy.paths(j, i)[std::size_t(pi)]);
            Matrix piece = pm.mul(embeds[std::size_t(i)].matrix());
            cm.paste(piece, 0, bl.offsets[std::size_t(j)][b]);
        }
        comps.push_back(std::move(cm));
    }
    RepMap into(m, env, std::move(comps));
    return {std::move(env), std::move(into)};
}

namespace {

// Equation-system scaffolding for an unknown representation morphism
// X: A -> B: variables per vertex component, well-definedness and
// naturality built in, composition constraints added by the callers.
struct RepMapSolver {
    const Rep& a;
    const Rep& b;
    EquationSystem sys;
    std::vector<int> xoff;

    RepMapSolver(const Rep& a_, const Rep& b_)
        : a(a_), b(b_), sys(a_.ring()) {
        const RingSpec& ring = a.ring();
        const Quiver& q = a.quiver();
        int n = q.vertex_count();
        for (int v = 0; v < n; ++v)
            xoff.push_back(sys.add_variables(a.vertex_module(v).generators() *
                                             b.vertex_module(v).generators()));
        for (int v = 0; v < n; ++v) {
            const Matrix& rel = a.vertex_module(v).relations();
            const Matrix& brel = b.vertex_module(v).relations();
            int gb = b.vertex_module(v).generators();
            for (int t = 0; t < rel.rows(); ++t) {
                int y0 = sys.add_variables(brel.rows());
                for (int c = 0; c < gb; ++c) {
                    std::vector<std::pair<int, RingElem>> terms;
                    for (int i = 0; i < rel.cols(); ++i)
                        if (rel.at(t, i).v != 0)
                            terms.emplace_back(xvar(v, i, c), rel.at(t, i));
                    for (int u = 0; u < brel.rows(); ++u)
                        if (brel.at(u, c).v != 0)
                            terms.emplace_back(y0 + u, brel.at(u, c));
                    sys.add_equation(std::move(terms), ring.zero());
                }
            }
        }
        for (int ai = 0; ai < q.arrow_count(); ++ai) {
            const Arrow& ar = q.arrows()[std::size_t(ai)];
            int sv = vidx(q, ar.src), tv = vidx(q, ar.tgt);
            const Matrix& am = a.arrow_matrix(ai);
            const Matrix& bm = b.arrow_matrix(ai);
            const Matrix& brel = b.vertex_module(tv).relations();
            int ga_s = a.vertex_module(sv).generators();
            int ga_t = a.vertex_module(tv).generators();
            int gb_s = b.vertex_module(sv).generators();
            int gb_t = b.vertex_module(tv).generators();
            for (int i = 0; i < ga_s; ++i) {
                int z0 = sys.add_variables(brel.rows());
                for (int c = 0; c < gb_t; ++c) {
                    std::vector<std::pair<int, RingElem>> terms;
                    for (int j = 0; j < ga_t; ++j)
                        if (am.at(i, j).v != 0)
                            terms.emplace_back(xvar(tv, j, c), am.at(i, j));
                    for (int j = 0; j < gb_s; ++j)
                        if (bm.at(j, c).v != 0)
                            terms.emplace_back(xvar(sv, i, j),
                                               a.ring().neg(bm.at(j, c)));
                    for (int u = 0; u < brel.rows(); ++u)
                        if (brel.at(u, c).v != 0)
                            terms.emplace_back(z0 + u, brel.at(u, c));
                    sys.add_equation(std::move(terms), a.ring().zero());
                }
            }
        }
    }

    int xvar(int v, int i, int j) const {
        return xoff[std::size_t(v)] + i * b.vertex_module(v).generators() + j;
    }

    // L;X = R modulo target relations, for L: S -> A, R: S -> B
    void add_precompose(const RepMap& l, const RepMap& r) {
        for (int v = 0; v < a.quiver().vertex_count(); ++v) {
            const Matrix& lm = l.component_matrix(v);
            const Matrix& rm = r.component_matrix(v);
            const Matrix& brel = b.vertex_module(v).relations();
            int gb = b.vertex_module(v).generators();
            for (int s = 0; s < lm.rows(); ++s) {
                int z0 = sys.add_variables(brel.rows());
                for (int c = 0; c < gb; ++c) {
                    std::vector<std::pair<int, RingElem>> terms;
                    for (int i = 0; i < lm.cols(); ++i)
                        if (lm.at(s, i).v != 0)
                            terms.emplace_back(xvar(v, i, c), lm.at(s, i));
                    for (int u = 0; u < brel.rows(); ++u)
                        if (brel.at(u, c).v != 0)
                            terms.emplace_back(z0 + u, brel.at(u, c));
                    sys.add_equation(std::move(terms), rm.at(s, c));
                }
            }
        }
    }

    // X;P = Q modulo the relations of P's target, for P: B -> C, Q: A -> C
    void add_postcompose(const RepMap& p, const RepMap& q) {
        for (int v = 0; v < a.quiver().vertex_count(); ++v) {
            const Matrix& pm = p.component_matrix(v);
            const Matrix& qm = q.component_matrix(v);
            const Matrix& crel = p.target().vertex_module(v).relations();
            int ga = a.vertex_module(v).generators();
            int gb = b.vertex_module(v).generators();
            int gc = pm.cols();
            for (int i = 0; i < ga; ++i) {
                int z0 = sys.add_variables(crel.rows());
                for (int c = 0; c < gc; ++c) {
                    std::vector<std::pair<int, RingElem>> terms;
                    for (int j = 0; j < gb; ++j)
                        if (pm.at(j, c).v != 0)
                            terms.emplace_back(xvar(v, i, j), pm.at(j, c));
                    for (int u = 0; u < crel.rows(); ++u)
                        if (crel.at(u, c).v != 0)
                            terms.emplace_back(z0 + u, crel.at(u, c));
                    sys.add_equation(std::move(terms), qm.at(i, c));
                }
            }
        }
    }

    RepMap unflatten(const std::vector<RingElem>& sol) const {
        std::vector<Matrix> comps;
        for (int v = 0; v < a.quiver().vertex_count(); ++v) {
            int ga = a.vertex_module(v).generators();
            int gb = b.vertex_module(v).generators();
            Matrix cm(a.ring(), ga, gb);
            for (int i = 0; i < ga; ++i)
                for (int j = 0; j < gb; ++j)
                    cm.set(i, j, sol[std::size_t(xvar(v, i, j))]);
            comps.push_back(std::move(cm));
        }
        return RepMap(a, b, std::move(comps));
    }

    std::optional<RepMap> solve_map() {
        auto sol = sys.solve();
        if (!sol) return std::nullopt;
        return unflatten(sol->particular);
    }
};

} // namespace

HomBasis hom_rep(const Rep& m, const Rep& n) {
    const RingSpec& ring = m.ring();
    if (!(m.quiver() == n.quiver()) || ring != n.ring())
        throw Error(ErrorKind::SpecMismatch,
                    "hom_rep over mismatched quiver or ring");
    RepMapSolver solver(m, n);
    auto sol = solver.sys.solve();
    if (!sol)
        throw InternalInvariantBroken("homogeneous hom system has no solution");
    int nverts = m.quiver().vertex_count();
    std::vector<int> block_offset;
    int total = 0;
    for (int v = 0; v < nverts; ++v) {
        block_offset.push_back(total);
        total += m.vertex_module(v).generators() * n.vertex_module(v).generators();
    }
    // project homogeneous solutions to the component coordinates
    std::vector<std::vector<RingElem>> gens;
    for (int i = 0; i < sol->kernel.rows(); ++i) {
        std::vector<RingElem> row(std::size_t(total), ring.zero());
        bool nonzero = false;
        for (int v = 0; v < nverts; ++v) {
            int ga = m.vertex_module(v).generators();
            int gb = n.vertex_module(v).generators();
            for (int c = 0; c < ga * gb; ++c) {
                RingElem x = sol->kernel.at(i, solver.xoff[std::size_t(v)] + c);
                row[std::size_t(block_offset[std::size_t(v)] + c)] = x;
                nonzero = nonzero || x.v != 0;
            }
        }
        if (nonzero) gens.push_back(std::move(row));
    }
    Matrix gen_vectors = Matrix::from_rows(ring, total, gens);
    // maps that are zero as maps: each generator row sent into the span of
    // the target relations
    std::vector<std::vector<RingElem>> triv;
    for (int v = 0; v < nverts; ++v) {
        int ga = m.vertex_module(v).generators();
        int gb = n.vertex_module(v).generators();
        const Matrix& rel = n.vertex_module(v).relations();
        for (int i = 0; i < ga; ++i)
            for (int u = 0; u < rel.rows(); ++u) {
                std::vector<RingElem> row(std::size_t(total), ring.zero());
                for (int j = 0; j < gb; ++j)
                    row[std::size_t(block_offset[std::size_t(v)] + i * gb + j)] =
                        rel.at(u, j);
                triv.push_back(std::move(row));
            }
    }
    Matrix triv_vectors = Matrix::from_rows(ring, total, triv);
    // quotient presentation: relations are the coefficient vectors landing
    // in the trivial span
    Matrix stacked = stack_vertical(gen_vectors, triv_vectors);
    Matrix ker = kernel_matrix(stacked);
    Matrix rel(ring, ker.rows(), gen_vectors.rows());
    for (int i = 0; i < ker.rows(); ++i)
        for (int j = 0; j < gen_vectors.rows(); ++j) rel.set(i, j, ker.at(i, j));
    FPModule hom(ring, gen_vectors.rows(), std::move(rel));
    HomBasis hb{m, n, std::move(hom), {}, gen_vectors, triv_vectors,
                block_offset};
    for (int i = 0; i < gen_vectors.rows(); ++i) {
        std::vector<RingElem> coords(std::size_t(gen_vectors.rows()),
                                     ring.zero());
        coords[std::size_t(i)] = ring.one();
        hb.generators.push_back(hb.map_from_coords(coords));
    }
    return hb;
}

RepMap HomBasis::map_from_coords(const std::vector<RingElem>& coords) const {
    const RingSpec& ring = source.ring();
    Matrix c(ring, 1, gen_vectors.rows());
    c.set_row(0, coords);
    Matrix flat = c.mul(gen_vectors);
    std::vector<Matrix> comps;
    for (int v = 0; v < source.quiver().vertex_count(); ++v) {
        int ga = source.vertex_module(v).generators();
        int gb = target.vertex_module(v).generators();
        Matrix cm(ring, ga, gb);
        for (int i = 0; i < ga; ++i)
            for (int j = 0; j < gb; ++j)
                cm.set(i, j,
                       flat.at(0, block_offset[std::size_t(v)] + i * gb + j));
        comps.push_back(std::move(cm));
    }
    return RepMap(source, target, std::move(comps));
}

std::vector<RingElem> HomBasis::flatten(const RepMap& f) const {
    const RingSpec& ring = source.ring();
    std::vector<RingElem> row(std::size_t(gen_vectors.cols()), ring.zero());
    for (int v = 0; v < source.quiver().vertex_count(); ++v) {
        int ga = source.vertex_module(v).generators();
        int gb = target.vertex_module(v).generators();
        for (int i = 0; i < ga; ++i)
            for (int j = 0; j < gb; ++j)
                row[std::size_t(block_offset[std::size_t(v)] + i * gb + j)] =
                    f.component_matrix(v).at(i, j);
    }
    return row;
}

std::optional<std::vector<RingElem>> HomBasis::coords_of(const RepMap& f) const {
    const RingSpec& ring = source.ring();
    Matrix stacked = stack_vertical(gen_vectors, triv_vectors);
    Matrix b(ring, 1, gen_vectors.cols());
    b.set_row(0, flatten(f));
    auto sol = solve_linear(stacked, b);
    if (!sol) return std::nullopt;
    auto full = sol->particular.row_vector(0);
    return std::vector<RingElem>(full.begin(),
                                 full.begin() + gen_vectors.rows());
}

LambdaView lambda_view(const Rep& m) {
    const RingSpec& ring = m.ring();
    int n = m.quiver().vertex_count();
    std::vector<FPModule> parts;
    for (int v = 0; v < n; ++v) parts.push_back(m.vertex_module(v));
    DirectSumModules ds = direct_sum_modules(parts, ring);
    std::vector<std::pair<int, int>> blocks;
    int off = 0;
    for (int v = 0; v < n; ++v) {
        blocks.emplace_back(off, m.vertex_module(v).generators());
        off += m.vertex_module(v).generators();
    }
    std::vector<Matrix> actions;
    for (int a = 0; a < m.quiver().arrow_count(); ++a)
        actions.push_back(m.arrow_matrix(a));
    return {m.ctx(), ring, std::move(ds.sum), std::move(blocks),
            std::move(actions)};
}

Rep rep_from_lambda(const LambdaView& v) {
    const RingSpec& ring = v.ring;
    const Quiver& q = v.ctx->quiver;
    int n = q.vertex_count();
    if (int(v.blocks.size()) != n)
        throw Error(ErrorKind::BlockMismatch, "block table size mismatch");
    int total = 0;
    for (auto [off, cnt] : v.blocks) {
        if (off != total)
            throw Error(ErrorKind::BlockMismatch,
                        "idempotent blocks must tile the generators in order");
        total += cnt;
    }
    if (total != v.total.generators())
        throw Error(ErrorKind::BlockMismatch,
                    "blocks do not cover the total module");
    // split the block-diagonal relations back into vertex presentations
    std::vector<std::vector<std::vector<RingElem>>> rel_rows;
    rel_rows.resize(std::size_t(n));
    const Matrix& rel = v.total.relations();
    for (int r = 0; r < rel.rows(); ++r) {
        int owner = -1;
        for (int bi = 0; bi < n; ++bi) {
            auto [off, cnt] = v.blocks[std::size_t(bi)];
            for (int c = 0; c < cnt; ++c)
                if (rel.at(r, off + c).v != 0 && owner != bi) {
                    if (owner >= 0)
                        throw Error(ErrorKind::BlockMismatch,
                                    "relation row crosses idempotent blocks");
                    owner = bi;
                }
        }
        if (owner < 0) continue; // zero relation row carries no content
        auto [off, cnt] = v.blocks[std::size_t(owner)];
        std::vector<RingElem> row;
        row.resize(std::size_t(cnt));
        for (int c = 0; c < cnt; ++c) row[std::size_t(c)] = rel.at(r, off + c);
        rel_rows[std::size_t(owner)].push_back(std::move(row));
    }
    std::vector<FPModule> mods;
    for (int bi = 0; bi < n; ++bi) {
        auto [off, cnt] = v.blocks[std::size_t(bi)];
        (void)off;
        mods.emplace_back(ring, cnt,
                          Matrix::from_rows(ring, cnt, rel_rows[std::size_t(bi)]));
    }
    std::vector<Matrix> arrows = v.arrow_actions;
    return Rep(v.ctx, ring, std::move(mods), std::move(arrows));
}

namespace {

FPModule ext1_from_presentation(const CoverResult& cover,
                                const RepWithMap& syz, const Rep& t) {
    HomBasis hom_p = hom_rep(cover.cover, t);
    HomBasis hom_k = hom_rep(syz.rep, t);
    const RingSpec& ring = t.ring();
    Matrix restriction(ring, int(hom_p.generators.size()),
                       hom_k.module.generators());
    for (std::size_t i = 0; i < hom_p.generators.size(); ++i) {
        RepMap restricted = syz.map.compose(hom_p.generators[i]);
        auto coords = hom_k.coords_of(restricted);
        if (!coords)
            throw InternalInvariantBroken("restriction left the hom span");
        restriction.set_row(int(i), *coords);
    }
    return FPModule(ring, hom_k.module.generators(),
                    stack_vertical(hom_k.module.relations(), restriction));
}

} // namespace

FPModule ext1_rep(const Rep& m, const Rep& t) {
    CoverResult cover = projective_cover(m);
    RepWithMap syz = pointwise_kernel(cover.onto);
    return ext1_from_presentation(cover, syz, t);
}

std::vector<FPModule> ext1_oracle(const Rep& m) {
    std::vector<FPModule> out;
    int n = m.quiver().vertex_count();
    CoverResult cover = projective_cover(m);
    RepWithMap syz = pointwise_kernel(cover.onto);
    for (int i = 0; i < n; ++i) {
        std::vector<int> ranks(std::size_t(n), 0);
        ranks[std::size_t(i)] = 1;
        Rep p_i = induced_projective(m.ctx(), m.ring(), ranks);
        out.push_back(ext1_from_presentation(cover, syz, p_i));
    }
    return out;
}

std::optional<RepMap> lift_through(const RepMap& p, const RepMap& q) {
    RepMapSolver solver(q.source(), p.source());
    solver.add_postcompose(p, q);
    return solver.solve_map();
}

std::optional<RepMap> extend_rep_map_along_mono(const RepMap& kappa,
                                                const RepMap& psi) {
    if (!kappa.source().same_presentation(psi.source()))
        throw Error(ErrorKind::SpecMismatch,
                    "extension legs must share a source");
    RepMapSolver solver(kappa.target(), psi.target());
    solver.add_precompose(kappa, psi);
    return solver.solve_map();
}

std::optional<RepMap> find_section(const RepMap& f) {
    RepMapSolver solver(f.target(), f.source());
    solver.add_postcompose(f, RepMap::identity(f.target()));
    return solver.solve_map();
}

std::optional<RepMap> find_retraction(const RepMap& f) {
    RepMapSolver solver(f.target(), f.source());
    solver.add_precompose(f, RepMap::identity(f.source()));
    return solver.solve_map();
}

} // namespace qgp
