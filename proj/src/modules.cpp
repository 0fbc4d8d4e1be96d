#include "qgp/modules.hpp"

#include <algorithm>

#include "qgp/errors.hpp"

namespace qgp {

FPModule::FPModule(RingSpec ring, int generators, Matrix relations)
    : ring_(std::move(ring)), gens_(generators), relations_(std::move(relations)),
      rel_span_(howell_form(relations_)), smith_(smith_decompose(relations_)) {
    if (auto why = check_module_shape(ring_, gens_, relations_))
        throw Error(ErrorKind::ValidationError, *why);
}

FPModule FPModule::zero(RingSpec ring) {
    Matrix rel(ring, 0, 0);
    return FPModule(std::move(ring), 0, std::move(rel));
}

FPModule FPModule::free_module(RingSpec ring, int rank) {
    Matrix rel(ring, 0, rank);
    return FPModule(std::move(ring), rank, std::move(rel));
}

FPModule FPModule::cyclic(RingSpec ring, RingElem d) {
    Matrix rel(ring, 1, 1);
    rel.set(0, 0, d);
    return FPModule(std::move(ring), 1, std::move(rel));
}

std::vector<RingElem> FPModule::reduce(std::vector<RingElem> row) const {
    if (int(row.size()) != gens_)
        throw Error(ErrorKind::ShapeMismatch, "element length != generators");
    return reduce_row_mod_span(rel_span_, std::move(row));
}

bool FPModule::is_zero_element(const std::vector<RingElem>& row) const {
    auto r = reduce(row);
    return std::all_of(r.begin(), r.end(), [](RingElem x) { return x.v == 0; });
}

bool FPModule::is_zero_module() const {
    for (auto d : smith_.invariants)
        if (!ring_.is_unit(d)) return false;
    return true;
}

std::uint64_t FPModule::cardinality() const {
    std::uint64_t c = 1;
    for (auto d : smith_.invariants) {
        std::uint64_t q = ring_.quotient_size(d);
        if (q != 0 && c > UINT64_MAX / q) return UINT64_MAX; // saturate
        c *= q;
    }
    return c;
}

std::vector<RingElem> FPModule::iso_invariants() const {
    std::vector<RingElem> out;
    for (auto d : smith_.invariants)
        if (!ring_.is_unit(d)) out.push_back(d);
    return out;
}

bool FPModule::same_presentation(const FPModule& o) const {
    return ring_ == o.ring_ && gens_ == o.gens_ && relations_ == o.relations_;
}

std::optional<std::string> check_module_shape(const RingSpec& ring,
                                              int generators,
                                              const Matrix& relations) {
    if (generators < 0) return "negative generator count";
    if (relations.cols() != generators)
        return "relations have " + std::to_string(relations.cols()) +
               " columns, expected " + std::to_string(generators);
    if (relations.ring() != ring) return "relations over a different ring";
    for (int i = 0; i < relations.rows(); ++i)
        for (int j = 0; j < relations.cols(); ++j)
            if (!ring.is_canonical(relations.at(i, j)))
                return "non-canonical relation entry";
    return std::nullopt;
}

std::optional<std::string> check_module_map(const FPModule& src,
                                            const FPModule& tgt,
                                            const Matrix& matrix) {
    if (src.ring() != tgt.ring()) return "source and target rings differ";
    if (matrix.ring() != src.ring()) return "matrix over a different ring";
    if (matrix.rows() != src.generators() || matrix.cols() != tgt.generators())
        return "matrix shape " + std::to_string(matrix.rows()) + "x" +
               std::to_string(matrix.cols()) + " does not match generators";
    // well-definedness: every source relation must land in the target span
    for (int i = 0; i < src.relations().rows(); ++i) {
        std::vector<RingElem> img(tgt.generators(), src.ring().zero());
        for (int k = 0; k < src.generators(); ++k) {
            RingElem c = src.relations().at(i, k);
            if (c.v == 0) continue;
            for (int j = 0; j < tgt.generators(); ++j)
                img[j] = src.ring().add(img[j], src.ring().mul(c, matrix.at(k, j)));
        }
        if (!row_in_span(tgt.relation_span(), img))
            return "relation " + std::to_string(i) +
                   " does not map into the target relations (well-definedness)";
    }
    return std::nullopt;
}

ModuleMap::ModuleMap(FPModule source, FPModule target, Matrix matrix)
    : source_(std::move(source)), target_(std::move(target)),
      matrix_(std::move(matrix)) {
    if (auto why = check_module_map(source_, target_, matrix_))
        throw Error(ErrorKind::ValidationError, *why);
}

ModuleMap ModuleMap::identity(const FPModule& m) {
    return ModuleMap(m, m, Matrix::identity(m.ring(), m.generators()));
}

ModuleMap ModuleMap::zero_map(const FPModule& src, const FPModule& tgt) {
    return ModuleMap(src, tgt,
                     Matrix(src.ring(), src.generators(), tgt.generators()));
}

ModuleMap ModuleMap::compose(const ModuleMap& next) const {
    if (!target_.same_presentation(next.source_))
        throw Error(ErrorKind::SpecMismatch,
                    "compose: middle modules have different presentations");
    return ModuleMap(source_, next.target_, matrix_.mul(next.matrix_));
}

ModuleMap ModuleMap::add(const ModuleMap& o) const {
    if (!source_.same_presentation(o.source_) ||
        !target_.same_presentation(o.target_))
        throw Error(ErrorKind::SpecMismatch, "add: endpoint mismatch");
    return ModuleMap(source_, target_, matrix_.add(o.matrix_));
}

ModuleMap ModuleMap::negate() const {
    return ModuleMap(source_, target_, matrix_.neg());
}

std::vector<RingElem> ModuleMap::apply(const std::vector<RingElem>& row) const {
    Matrix r(source_.ring(), 1, source_.generators());
    r.set_row(0, row);
    return target_.reduce(r.mul(matrix_).row_vector(0));
}

bool ModuleMap::is_injective() const {
    Matrix sys = stack_vertical(matrix_, target_.relations());
    Matrix ker = kernel_matrix(sys);
    for (int i = 0; i < ker.rows(); ++i) {
        auto full = ker.row_vector(i);
        std::vector<RingElem> x(full.begin(), full.begin() + source_.generators());
        if (!source_.is_zero_element(x)) return false;
    }
    return true;
}

bool ModuleMap::is_surjective() const {
    FPModule coker(source_.ring(), target_.generators(),
                   stack_vertical(target_.relations(), matrix_));
    return coker.is_zero_module();
}

bool ModuleMap::is_zero() const {
    for (int i = 0; i < matrix_.rows(); ++i)
        if (!target_.is_zero_element(matrix_.row_vector(i))) return false;
    return true;
}

bool ModuleMap::equals(const ModuleMap& o) const {
    if (!source_.same_presentation(o.source_) ||
        !target_.same_presentation(o.target_))
        return false;
    for (int i = 0; i < matrix_.rows(); ++i) {
        std::vector<RingElem> d = matrix_.row_vector(i);
        std::vector<RingElem> e = o.matrix_.row_vector(i);
        for (std::size_t j = 0; j < d.size(); ++j)
            d[j] = source_.ring().sub(d[j], e[j]);
        if (!target_.is_zero_element(d)) return false;
    }
    return true;
}

SubmodulePresentation submodule_presentation(const Matrix& generators,
                                             const FPModule& ambient) {
    const RingSpec& ring = ambient.ring();
    if (generators.cols() != ambient.generators())
        throw Error(ErrorKind::ShapeMismatch,
                    "submodule generators have wrong length");
    int s = generators.rows();
    Matrix stacked = stack_vertical(generators, ambient.relations());
    Matrix ker = kernel_matrix(stacked);
    Matrix rel(ring, ker.rows(), s);
    for (int i = 0; i < ker.rows(); ++i)
        for (int j = 0; j < s; ++j) rel.set(i, j, ker.at(i, j));
    FPModule sub(ring, s, std::move(rel));
    ModuleMap inc(sub, ambient, generators);
    return {std::move(sub), std::move(inc)};
}

std::optional<std::vector<RingElem>> express_in_submodule(
    const std::vector<RingElem>& row, const Matrix& generators,
    const FPModule& ambient) {
    const RingSpec& ring = ambient.ring();
    Matrix stacked = stack_vertical(generators, ambient.relations());
    Matrix b(ring, 1, ambient.generators());
    b.set_row(0, row);
    auto sol = solve_linear(stacked, b);
    if (!sol) return std::nullopt;
    auto full = sol->particular.row_vector(0);
    std::vector<RingElem> c(full.begin(), full.begin() + generators.rows());
    return c;
}

Subquotient subquotient(const ModuleMap& f) {
    const RingSpec& ring = f.source().ring();
    const FPModule& m = f.source();
    const FPModule& n = f.target();
    // kernel: x with x*F in the span of target relations
    Matrix stacked = stack_vertical(f.matrix(), n.relations());
    Matrix ker_full = kernel_matrix(stacked);
    Matrix ker_gens(ring, ker_full.rows(), m.generators());
    for (int i = 0; i < ker_full.rows(); ++i)
        for (int j = 0; j < m.generators(); ++j)
            ker_gens.set(i, j, ker_full.at(i, j));
    SubmodulePresentation ker = submodule_presentation(ker_gens, m);

    SubmodulePresentation img = submodule_presentation(f.matrix(), n);
    ModuleMap img_from_source(m, img.module,
                              Matrix::identity(ring, m.generators()));

    FPModule coker(ring, n.generators(),
                   stack_vertical(n.relations(), f.matrix()));
    ModuleMap proj(n, coker, Matrix::identity(ring, n.generators()));

    return {std::move(ker.module),  std::move(ker.inclusion),
            std::move(img.module),  std::move(img_from_source),
            std::move(img.inclusion), std::move(coker), std::move(proj)};
}

DirectSumModules direct_sum_modules(const std::vector<FPModule>& parts,
                                    const RingSpec& ring) {
    int total_gens = 0, total_rels = 0;
    for (const auto& p : parts) {
        if (p.ring() != ring)
            throw Error(ErrorKind::SpecMismatch, "direct sum over mixed rings");
        total_gens += p.generators();
        total_rels += p.relations().rows();
    }
    Matrix rel(ring, total_rels, total_gens);
    int go = 0, ro = 0;
    for (const auto& p : parts) {
        rel.paste(p.relations(), ro, go);
        go += p.generators();
        ro += p.relations().rows();
    }
    FPModule sum(ring, total_gens, std::move(rel));
    DirectSumModules out{std::move(sum), {}, {}};
    go = 0;
    for (const auto& p : parts) {
        Matrix in(ring, p.generators(), total_gens);
        Matrix pr(ring, total_gens, p.generators());
        for (int i = 0; i < p.generators(); ++i) {
            in.set(i, go + i, ring.one());
            pr.set(go + i, i, ring.one());
        }
        out.injections.emplace_back(p, out.sum, std::move(in));
        out.projections.emplace_back(out.sum, p, std::move(pr));
        go += p.generators();
    }
    return out;
}

bool is_projective_module(const FPModule& m) {
    for (auto d : m.invariants())
        if (!m.ring().cyclic_is_projective(d)) return false;
    return true;
}

bool is_injective_module(const FPModule& m) { return is_projective_module(m); }

ModuleMap free_cover(const FPModule& m) {
    return ModuleMap(FPModule::free_module(m.ring(), m.generators()), m,
                     Matrix::identity(m.ring(), m.generators()));
}

ModuleMap embed_into_injective(const FPModule& m) {
    const RingSpec& ring = m.ring();
    const auto& inv = m.invariants();
    std::vector<int> kept;
    for (int i = 0; i < int(inv.size()); ++i)
        if (!ring.is_unit(inv[std::size_t(i)])) kept.push_back(i);
    Matrix sel(ring, m.generators(), int(kept.size()));
    for (int c = 0; c < int(kept.size()); ++c)
        sel.set(kept[std::size_t(c)], c,
                ring.annihilator(inv[std::size_t(kept[std::size_t(c)])]));
    Matrix map = m.smith().basis_change.mul(sel);
    FPModule target = FPModule::free_module(ring, int(kept.size()));
    return ModuleMap(m, target, std::move(map));
}

ModuleMap extend_map_along_injection(const ModuleMap& inc,
                                     const ModuleMap& psi) {
    const RingSpec& ring = inc.source().ring();
    if (!inc.source().same_presentation(psi.source()))
        throw Error(ErrorKind::SpecMismatch,
                    "extend: inclusion and map have different sources");
    if (!is_injective_module(psi.target()))
        throw Error(ErrorKind::NotInjectiveModule,
                    "extension target is not an injective module");
    if (!inc.is_injective())
        throw Error(ErrorKind::NotInjectiveInclusion,
                    "extend: inclusion has nonzero kernel");
    const FPModule& k = inc.target();
    const FPModule& e = psi.target();
    const int gk = k.generators(), ge = e.generators();
    const int rk = k.relations().rows(), re = e.relations().rows();
    EquationSystem sys(ring);
    int x0 = sys.add_variables(gk * ge);
    auto xv = [&](int i, int j) { return x0 + i * ge + j; };
    // well-definedness of the extension, with slack for target relations
    for (int t = 0; t < rk; ++t) {
        int y0 = sys.add_variables(re);
        for (int c = 0; c < ge; ++c) {
            std::vector<std::pair<int, RingElem>> terms;
            for (int i = 0; i < gk; ++i) {
                RingElem coeff = k.relations().at(t, i);
                if (coeff.v != 0) terms.emplace_back(xv(i, c), coeff);
            }
            for (int u = 0; u < re; ++u) {
                RingElem coeff = e.relations().at(u, c);
                if (coeff.v != 0) terms.emplace_back(y0 + u, coeff);
            }
            sys.add_equation(std::move(terms), ring.zero());
        }
    }
    // compatibility: inc * X = psi modulo target relations
    for (int a = 0; a < inc.source().generators(); ++a) {
        int z0 = sys.add_variables(re);
        for (int c = 0; c < ge; ++c) {
            std::vector<std::pair<int, RingElem>> terms;
            for (int i = 0; i < gk; ++i) {
                RingElem coeff = inc.matrix().at(a, i);
                if (coeff.v != 0) terms.emplace_back(xv(i, c), coeff);
            }
            for (int u = 0; u < re; ++u) {
                RingElem coeff = e.relations().at(u, c);
                if (coeff.v != 0) terms.emplace_back(z0 + u, coeff);
            }
            sys.add_equation(std::move(terms), psi.matrix().at(a, c));
        }
    }
    auto sol = sys.solve();
    if (!sol)
        throw InternalInvariantBroken(
            "extension along an injection into an injective module failed");
    Matrix x(ring, gk, ge);
    for (int i = 0; i < gk; ++i)
        for (int j = 0; j < ge; ++j) x.set(i, j, sol->particular[xv(i, j)]);
    return ModuleMap(k, e, std::move(x));
}

bool stable_zero(const ModuleMap& f) {
    const RingSpec& ring = f.source().ring();
    const FPModule& m = f.source();
    const FPModule& n = f.target();
    const int gm = m.generators(), gn = n.generators();
    const int rm = m.relations().rows(), rn = n.relations().rows();
    EquationSystem sys(ring);
    int h0 = sys.add_variables(gm * gn);
    auto hv = [&](int i, int j) { return h0 + i * gn + j; };
    // h: M -> R^{g_n} well-defined means relations map to zero exactly
    for (int t = 0; t < rm; ++t)
        for (int c = 0; c < gn; ++c) {
            std::vector<std::pair<int, RingElem>> terms;
            for (int i = 0; i < gm; ++i) {
                RingElem coeff = m.relations().at(t, i);
                if (coeff.v != 0) terms.emplace_back(hv(i, c), coeff);
            }
            sys.add_equation(std::move(terms), ring.zero());
        }
    // h then cover equals f: H = F modulo target relations
    for (int a = 0; a < gm; ++a) {
        int z0 = sys.add_variables(rn);
        for (int c = 0; c < gn; ++c) {
            std::vector<std::pair<int, RingElem>> terms;
            terms.emplace_back(hv(a, c), ring.one());
            for (int u = 0; u < rn; ++u) {
                RingElem coeff = n.relations().at(u, c);
                if (coeff.v != 0) terms.emplace_back(z0 + u, coeff);
            }
            sys.add_equation(std::move(terms), f.matrix().at(a, c));
        }
    }
    return sys.solve().has_value();
}

bool stable_equiv(const ModuleMap& f) {
    const RingSpec& ring = f.source().ring();
    const FPModule& m = f.source();
    const FPModule& n = f.target();
    FPModule p = FPModule::free_module(ring, n.generators());
    DirectSumModules mp = direct_sum_modules({m, p}, ring);
    Matrix g = stack_vertical(f.matrix(),
                              Matrix::identity(ring, n.generators()));
    ModuleMap fp(mp.sum, n, std::move(g));
    Subquotient sq = subquotient(fp);
    return is_projective_module(sq.kernel);
}

} // namespace qgp
