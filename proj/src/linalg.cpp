#include "qgp/linalg.hpp"

#include <algorithm>

#include "qgp/errors.hpp"

namespace qgp {

namespace {

void check_same_ring(const RingSpec& a, const RingSpec& b) {
    if (a != b)
        throw Error(ErrorKind::SpecMismatch,
                    "matrices over different rings: " + a.describe() + " vs " +
                        b.describe());
}

using Row = std::vector<RingElem>;

void row_addmul(const RingSpec& ring, Row& dst, const Row& src, RingElem c) {
    for (std::size_t i = 0; i < dst.size(); ++i)
        dst[i] = ring.add(dst[i], ring.mul(c, src[i]));
}

void row_scale(const RingSpec& ring, Row& r, RingElem c) {
    for (auto& x : r) x = ring.mul(c, x);
}

bool row_is_zero(const Row& r) {
    for (auto x : r)
        if (x.v != 0) return false;
    return true;
}

} // namespace

Matrix::Matrix(RingSpec ring, int rows, int cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols),
      e_(std::size_t(rows) * cols, RingElem{0}) {
    if (rows < 0 || cols < 0)
        throw Error(ErrorKind::ShapeMismatch, "negative matrix dimension");
}

Matrix Matrix::identity(RingSpec ring, int n) {
    Matrix m(std::move(ring), n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, m.ring_.one());
    return m;
}

Matrix Matrix::from_rows(RingSpec ring, int cols,
                         const std::vector<std::vector<RingElem>>& rows) {
    Matrix m(std::move(ring), int(rows.size()), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (int(rows[i].size()) != cols)
            throw Error(ErrorKind::ShapeMismatch, "ragged row list");
        m.set_row(int(i), rows[i]);
    }
    return m;
}

std::vector<RingElem> Matrix::row_vector(int i) const {
    return {e_.begin() + std::size_t(i) * cols_,
            e_.begin() + std::size_t(i + 1) * cols_};
}

void Matrix::set_row(int i, const std::vector<RingElem>& r) {
    std::copy(r.begin(), r.end(), e_.begin() + std::size_t(i) * cols_);
}

Matrix Matrix::mul(const Matrix& o) const {
    check_same_ring(ring_, o.ring_);
    if (cols_ != o.rows_)
        throw Error(ErrorKind::ShapeMismatch, "matrix product shape mismatch");
    Matrix r(ring_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            RingElem aik = at(i, k);
            if (aik.v == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                RingElem t = ring_.mul(aik, o.at(k, j));
                if (t.v != 0) r.set(i, j, ring_.add(r.at(i, j), t));
            }
        }
    return r;
}

Matrix Matrix::add(const Matrix& o) const {
    check_same_ring(ring_, o.ring_);
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw Error(ErrorKind::ShapeMismatch, "matrix sum shape mismatch");
    Matrix r(ring_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i)
        r.e_[i] = ring_.add(e_[i], o.e_[i]);
    return r;
}

Matrix Matrix::sub(const Matrix& o) const { return add(o.neg()); }

Matrix Matrix::neg() const {
    Matrix r(ring_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = ring_.neg(e_[i]);
    return r;
}

Matrix Matrix::scale(RingElem c) const {
    Matrix r(ring_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = ring_.mul(c, e_[i]);
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(ring_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
    return r;
}

Matrix Matrix::block(int r0, int c0, int nrows, int ncols) const {
    Matrix r(ring_, nrows, ncols);
    for (int i = 0; i < nrows; ++i)
        for (int j = 0; j < ncols; ++j) r.set(i, j, at(r0 + i, c0 + j));
    return r;
}

void Matrix::paste(const Matrix& src, int r0, int c0) {
    for (int i = 0; i < src.rows(); ++i)
        for (int j = 0; j < src.cols(); ++j) set(r0 + i, c0 + j, src.at(i, j));
}

bool Matrix::is_zero() const {
    for (auto x : e_)
        if (x.v != 0) return false;
    return true;
}

bool Matrix::operator==(const Matrix& o) const {
    return ring_ == o.ring_ && rows_ == o.rows_ && cols_ == o.cols_ &&
           e_ == o.e_;
}

Matrix stack_vertical(const Matrix& top, const Matrix& bottom) {
    check_same_ring(top.ring(), bottom.ring());
    if (top.cols() != bottom.cols())
        throw Error(ErrorKind::ShapeMismatch, "vertical stack width mismatch");
    Matrix r(top.ring(), top.rows() + bottom.rows(), top.cols());
    r.paste(top, 0, 0);
    r.paste(bottom, top.rows(), 0);
    return r;
}

Matrix stack_horizontal(const Matrix& left, const Matrix& right) {
    check_same_ring(left.ring(), right.ring());
    if (left.rows() != right.rows())
        throw Error(ErrorKind::ShapeMismatch, "horizontal stack height mismatch");
    Matrix r(left.ring(), left.rows(), left.cols() + right.cols());
    r.paste(left, 0, 0);
    r.paste(right, 0, left.cols());
    return r;
}

namespace {

// Working row for the Howell computation: the row itself plus the
// combination of input rows it came from.
struct WRow {
    Row r;
    Row u;
};

// In-place echelonization with canonical pivots and reduced entries above
// them. Returns pivot columns, one per surviving row.
std::vector<int> echelonize(const RingSpec& ring, std::vector<WRow>& rows,
                            int ncols) {
    std::vector<int> pivots;
    std::size_t rank = 0;
    for (int j = 0; j < ncols && rank < rows.size(); ++j) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot].r[j].v == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t i = rank + 1; i < rows.size(); ++i) {
            if (rows[i].r[j].v == 0) continue;
            RingElem a = rows[rank].r[j], b = rows[i].r[j];
            if (ring.divides(a, b)) {
                RingElem q = ring.neg(ring.divide_exact(b, a));
                row_addmul(ring, rows[i].r, rows[rank].r, q);
                row_addmul(ring, rows[i].u, rows[rank].u, q);
                continue;
            }
            BezoutData bz = ring.bezout(a, b);
            WRow nr, ni;
            nr.r = rows[rank].r;
            nr.u = rows[rank].u;
            row_scale(ring, nr.r, bz.s);
            row_scale(ring, nr.u, bz.s);
            row_addmul(ring, nr.r, rows[i].r, bz.t);
            row_addmul(ring, nr.u, rows[i].u, bz.t);
            ni.r = rows[rank].r;
            ni.u = rows[rank].u;
            RingElem nb = ring.neg(bz.b_div);
            row_scale(ring, ni.r, nb);
            row_scale(ring, ni.u, nb);
            row_addmul(ring, ni.r, rows[i].r, bz.a_div);
            row_addmul(ring, ni.u, rows[i].u, bz.a_div);
            rows[rank] = std::move(nr);
            rows[i] = std::move(ni);
        }
        RingElem piv = rows[rank].r[j];
        RingElem u = ring.unit_to_canonical(piv);
        if (u.v != 1) {
            row_scale(ring, rows[rank].r, u);
            row_scale(ring, rows[rank].u, u);
        }
        pivots.push_back(j);
        ++rank;
    }
    rows.resize(rank);
    // canonical residues above each pivot
    for (std::size_t k = 0; k < rows.size(); ++k) {
        int j = pivots[k];
        RingElem d = rows[k].r[j];
        for (std::size_t i = 0; i < k; ++i) {
            auto qr = ring.reduce_mod(rows[i].r[j], d);
            if (qr.q.v != 0) {
                RingElem q = ring.neg(qr.q);
                row_addmul(ring, rows[i].r, rows[k].r, q);
                row_addmul(ring, rows[i].u, rows[k].u, q);
            }
        }
    }
    return pivots;
}

} // namespace

HowellForm howell_form(const Matrix& a) {
    const RingSpec& ring = a.ring();
    const int n = a.cols();
    std::vector<WRow> rows;
    for (int i = 0; i < a.rows(); ++i) {
        WRow w;
        w.r = a.row_vector(i);
        w.u.assign(a.rows(), ring.zero());
        w.u[i] = ring.one();
        if (!row_is_zero(w.r)) rows.push_back(std::move(w));
    }
    std::vector<int> pivots;
    std::vector<Row> prev;
    for (int pass = 0;; ++pass) {
        if (pass > 4 * n + 64)
            throw InternalInvariantBroken("howell_form failed to stabilize");
        pivots = echelonize(ring, rows, n);
        std::vector<Row> cur;
        for (auto& w : rows) cur.push_back(w.r);
        if (cur == prev) break;
        prev = cur;
        // saturate with annihilator multiples of each pivot row
        bool added = false;
        std::size_t count = rows.size();
        for (std::size_t k = 0; k < count; ++k) {
            RingElem ann = ring.annihilator(rows[k].r[pivots[k]]);
            if (ann.v == 0) continue;
            WRow cand;
            cand.r = rows[k].r;
            cand.u = rows[k].u;
            row_scale(ring, cand.r, ann);
            row_scale(ring, cand.u, ann);
            if (!row_is_zero(cand.r)) {
                rows.push_back(std::move(cand));
                added = true;
            }
        }
        if (!added) break;
    }
    HowellForm hf{Matrix(ring, int(rows.size()), n),
                  Matrix(ring, int(rows.size()), a.rows()), pivots};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        hf.H.set_row(int(i), rows[i].r);
        hf.U.set_row(int(i), rows[i].u);
    }
    return hf;
}

std::vector<RingElem> reduce_row_mod_span(const HowellForm& hf,
                                          std::vector<RingElem> row) {
    const RingSpec& ring = hf.H.ring();
    for (int k = 0; k < hf.H.rows(); ++k) {
        int j = hf.pivots[k];
        if (row[j].v == 0) continue;
        auto qr = ring.reduce_mod(row[j], hf.H.at(k, j));
        if (qr.q.v != 0) {
            RingElem q = ring.neg(qr.q);
            for (int c = 0; c < hf.H.cols(); ++c)
                row[c] = ring.add(row[c], ring.mul(q, hf.H.at(k, c)));
        }
    }
    return row;
}

bool row_in_span(const HowellForm& hf, const std::vector<RingElem>& row) {
    return row_is_zero(reduce_row_mod_span(hf, row));
}

Matrix kernel_matrix(const Matrix& a) {
    const RingSpec& ring = a.ring();
    const int m = a.rows(), n = a.cols();
    if (m == 0) return Matrix(ring, 0, 0);
    Matrix aug = stack_horizontal(a, Matrix::identity(ring, m));
    HowellForm hf = howell_form(aug);
    std::vector<std::vector<RingElem>> gens;
    for (int i = 0; i < hf.H.rows(); ++i)
        if (hf.pivots[i] >= n) gens.push_back(hf.H.block(i, n, 1, m).row_vector(0));
    return Matrix::from_rows(ring, m, gens);
}

std::optional<LinearSolution> solve_linear(const Matrix& a, const Matrix& b) {
    const RingSpec& ring = a.ring();
    check_same_ring(ring, b.ring());
    if (a.cols() != b.cols())
        throw Error(ErrorKind::ShapeMismatch, "solve_linear width mismatch");
    const int m = a.rows(), n = a.cols(), k = b.rows();
    if (m == 0) {
        if (!b.is_zero()) return std::nullopt;
        return LinearSolution{Matrix(ring, k, 0), Matrix(ring, 0, 0)};
    }
    Matrix aug = stack_horizontal(a, Matrix::identity(ring, m));
    HowellForm hf = howell_form(aug);
    Matrix particular(ring, k, m);
    Matrix kernel = [&] {
        std::vector<std::vector<RingElem>> gens;
        for (int i = 0; i < hf.H.rows(); ++i)
            if (hf.pivots[i] >= n)
                gens.push_back(hf.H.block(i, n, 1, m).row_vector(0));
        return Matrix::from_rows(ring, m, gens);
    }();
    for (int bi = 0; bi < k; ++bi) {
        Row t = b.row_vector(bi);
        Row w(m, ring.zero());
        for (int i = 0; i < hf.H.rows(); ++i) {
            int j = hf.pivots[i];
            if (j >= n) break;
            if (t[j].v == 0) continue;
            RingElem d = hf.H.at(i, j);
            if (!ring.divides(d, t[j])) return std::nullopt;
            RingElem q = ring.divide_exact(t[j], d);
            for (int c = 0; c < n; ++c)
                t[c] = ring.sub(t[c], ring.mul(q, hf.H.at(i, c)));
            for (int c = 0; c < m; ++c)
                w[c] = ring.add(w[c], ring.mul(q, hf.H.at(i, n + c)));
        }
        if (!row_is_zero(t)) return std::nullopt;
        particular.set_row(bi, w);
    }
    return LinearSolution{std::move(particular), std::move(kernel)};
}

namespace {

struct SmithWork {
    const RingSpec& ring;
    Matrix w;
    Matrix v; // accumulated column transform

    void col_swap(int a, int b) {
        for (int i = 0; i < w.rows(); ++i) {
            RingElem t = w.at(i, a);
            w.set(i, a, w.at(i, b));
            w.set(i, b, t);
        }
        for (int i = 0; i < v.rows(); ++i) {
            RingElem t = v.at(i, a);
            v.set(i, a, v.at(i, b));
            v.set(i, b, t);
        }
    }
    void col_addmul(int dst, int src, RingElem c) {
        for (int i = 0; i < w.rows(); ++i)
            w.set(i, dst, ring.add(w.at(i, dst), ring.mul(c, w.at(i, src))));
        for (int i = 0; i < v.rows(); ++i)
            v.set(i, dst, ring.add(v.at(i, dst), ring.mul(c, v.at(i, src))));
    }
    // columns (a,b) <- (s*a + t*b, -b_div*a + a_div*b)
    void col_bezout(int ca, int cb, const BezoutData& bz) {
        RingElem nb = ring.neg(bz.b_div);
        auto apply = [&](Matrix& mat) {
            for (int i = 0; i < mat.rows(); ++i) {
                RingElem x = mat.at(i, ca), y = mat.at(i, cb);
                mat.set(i, ca, ring.add(ring.mul(bz.s, x), ring.mul(bz.t, y)));
                mat.set(i, cb, ring.add(ring.mul(nb, x), ring.mul(bz.a_div, y)));
            }
        };
        apply(w);
        apply(v);
    }
    void row_swap(int a, int b) {
        for (int j = 0; j < w.cols(); ++j) {
            RingElem t = w.at(a, j);
            w.set(a, j, w.at(b, j));
            w.set(b, j, t);
        }
    }
    void row_addmul(int dst, int src, RingElem c) {
        for (int j = 0; j < w.cols(); ++j)
            w.set(dst, j, ring.add(w.at(dst, j), ring.mul(c, w.at(src, j))));
    }
    void row_bezout(int ra, int rb, const BezoutData& bz) {
        RingElem nb = ring.neg(bz.b_div);
        for (int j = 0; j < w.cols(); ++j) {
            RingElem x = w.at(ra, j), y = w.at(rb, j);
            w.set(ra, j, ring.add(ring.mul(bz.s, x), ring.mul(bz.t, y)));
            w.set(rb, j, ring.add(ring.mul(nb, x), ring.mul(bz.a_div, y)));
        }
    }
    void row_scale(int r, RingElem c) {
        for (int j = 0; j < w.cols(); ++j) w.set(r, j, ring.mul(c, w.at(r, j)));
    }
};

} // namespace

SmithDecomposition smith_decompose(const Matrix& a) {
    const RingSpec& ring = a.ring();
    const int r = a.rows(), g = a.cols();
    SmithWork sw{ring, a, Matrix::identity(ring, g)};
    int lim = std::min(r, g);
    int pos = 0;
    for (; pos < lim; ++pos) {
        // pick the entry generating the largest ideal as pivot
        int bi = -1, bj = -1;
        std::uint64_t best = 0;
        for (int i = pos; i < r; ++i)
            for (int j = pos; j < g; ++j) {
                RingElem x = sw.w.at(i, j);
                if (x.v == 0) continue;
                std::uint64_t q = ring.quotient_size(ring.canonical_gen(x));
                if (bi < 0 || q < best) {
                    bi = i;
                    bj = j;
                    best = q;
                }
            }
        if (bi < 0) break;
        if (bi != pos) sw.row_swap(pos, bi);
        if (bj != pos) sw.col_swap(pos, bj);
        long guard = 0;
        for (;;) {
            if (++guard > 100000)
                throw InternalInvariantBroken("smith_decompose failed to converge");
            bool dirty = false;
            for (int i = pos + 1; i < r; ++i) {
                RingElem b = sw.w.at(i, pos);
                if (b.v == 0) continue;
                RingElem d = sw.w.at(pos, pos);
                if (ring.divides(d, b)) {
                    sw.row_addmul(i, pos, ring.neg(ring.divide_exact(b, d)));
                } else {
                    sw.row_bezout(pos, i, ring.bezout(d, b));
                    dirty = true;
                }
            }
            for (int j = pos + 1; j < g; ++j) {
                RingElem b = sw.w.at(pos, j);
                if (b.v == 0) continue;
                RingElem d = sw.w.at(pos, pos);
                if (ring.divides(d, b)) {
                    sw.col_addmul(j, pos, ring.neg(ring.divide_exact(b, d)));
                } else {
                    sw.col_bezout(pos, j, ring.bezout(d, b));
                    dirty = true;
                }
            }
            if (dirty) continue;
            bool col_clear = true, row_clear = true;
            for (int i = pos + 1; i < r; ++i)
                if (sw.w.at(i, pos).v != 0) col_clear = false;
            for (int j = pos + 1; j < g; ++j)
                if (sw.w.at(pos, j).v != 0) row_clear = false;
            if (!col_clear || !row_clear) continue;
            // the pivot must divide the remaining submatrix for the chain
            RingElem d = sw.w.at(pos, pos);
            int ti = -1, tj = -1;
            for (int i = pos + 1; i < r && ti < 0; ++i)
                for (int j = pos + 1; j < g && ti < 0; ++j)
                    if (!ring.divides(d, sw.w.at(i, j))) {
                        ti = i;
                        tj = j;
                    }
            if (ti < 0) break;
            (void)tj;
            sw.row_addmul(pos, ti, ring.one());
        }
        RingElem piv = sw.w.at(pos, pos);
        RingElem u = ring.unit_to_canonical(piv);
        if (u.v != 1) sw.row_scale(pos, u);
    }
    SmithDecomposition out{std::vector<RingElem>(std::size_t(g), RingElem{0}),
                           sw.v, Matrix(ring, g, g)};
    for (int i = 0; i < pos; ++i) out.invariants[std::size_t(i)] = sw.w.at(i, i);
    // invert V: V*Vinv = I solved through the transpose
    auto sol = solve_linear(sw.v.transpose(), Matrix::identity(ring, g));
    if (!sol)
        throw InternalInvariantBroken("smith basis change is not invertible");
    out.basis_change_inv = sol->particular.transpose();
    if (!(out.basis_change.mul(out.basis_change_inv) ==
          Matrix::identity(ring, g)))
        throw InternalInvariantBroken("smith basis change inverse check failed");
    return out;
}

std::vector<RingElem> smith_invariants(const Matrix& a) {
    return smith_decompose(a).invariants;
}

int EquationSystem::add_variables(int count) {
    int start = nvars_;
    nvars_ += count;
    return start;
}

void EquationSystem::add_equation(std::vector<std::pair<int, RingElem>> terms,
                                  RingElem rhs) {
    eqs_.push_back(std::move(terms));
    rhs_.push_back(rhs);
}

std::optional<EquationSystem::Solution> EquationSystem::solve() const {
    Matrix a(ring_, nvars_, int(eqs_.size()));
    Matrix b(ring_, 1, int(eqs_.size()));
    for (std::size_t e = 0; e < eqs_.size(); ++e) {
        for (const auto& [var, coeff] : eqs_[e])
            a.set(var, int(e), ring_.add(a.at(var, int(e)), coeff));
        b.set(0, int(e), rhs_[e]);
    }
    auto sol = solve_linear(a, b);
    if (!sol) return std::nullopt;
    return Solution{sol->particular.row_vector(0), std::move(sol->kernel)};
}

} // namespace qgp
