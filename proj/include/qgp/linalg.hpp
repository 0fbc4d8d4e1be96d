#ifndef QGP_LINALG_HPP
#define QGP_LINALG_HPP

#include <optional>
#include <utility>
#include <vector>

#include "qgp/ring.hpp"

namespace qgp {

/// Dense matrix over a RingSpec ring, row major. The fixed convention
/// throughout the project is that module elements are row vectors and maps
/// act on the right: x -> x*A.
class Matrix {
public:
    Matrix(RingSpec ring, int rows, int cols);
    static Matrix identity(RingSpec ring, int n);
    static Matrix from_rows(RingSpec ring, int cols,
                            const std::vector<std::vector<RingElem>>& rows);

    const RingSpec& ring() const { return ring_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    RingElem at(int i, int j) const { return e_[std::size_t(i) * cols_ + j]; }
    void set(int i, int j, RingElem v) { e_[std::size_t(i) * cols_ + j] = v; }

    std::vector<RingElem> row_vector(int i) const;
    void set_row(int i, const std::vector<RingElem>& r);

    Matrix mul(const Matrix& o) const;
    Matrix add(const Matrix& o) const;
    Matrix sub(const Matrix& o) const;
    Matrix neg() const;
    Matrix scale(RingElem c) const;
    Matrix transpose() const;
    Matrix block(int r0, int c0, int nrows, int ncols) const;
    void paste(const Matrix& src, int r0, int c0);

    bool is_zero() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

private:
    RingSpec ring_;
    int rows_, cols_;
    std::vector<RingElem> e_;
};

Matrix stack_vertical(const Matrix& top, const Matrix& bottom);
Matrix stack_horizontal(const Matrix& left, const Matrix& right);

/// Canonical Howell normal form of the row span of a matrix.
///
/// H is the unique matrix with the same row span as the input such that
/// pivots sit in strictly increasing columns, each pivot is the canonical
/// generator of its ideal, entries above a pivot are canonical residues
/// modulo that pivot, and the span is Howell-closed: every span element
/// whose leading zeros reach column j lies in the span of the rows with
/// pivot column >= j. Over rings with zero divisors a plain echelon form
/// lacks the closure property; Howell form restores it, which is what makes
/// greedy membership tests and canonical coset representatives correct.
struct HowellForm {
    Matrix H;
    Matrix U; // witness transform, H = U * input
    std::vector<int> pivots;
};

HowellForm howell_form(const Matrix& a);

/// Canonical coset representative of a row modulo the row span captured by
/// a Howell form.
std::vector<RingElem> reduce_row_mod_span(const HowellForm& hf,
                                          std::vector<RingElem> row);
bool row_in_span(const HowellForm& hf, const std::vector<RingElem>& row);

/// Rows generating {x : x*A = 0} exactly.
Matrix kernel_matrix(const Matrix& a);

struct LinearSolution {
    Matrix particular; // one solution X of X*A = B
    Matrix kernel;     // rows generate {x : x*A = 0}
};

/// All solutions of X*A = B as particular + kernel span, or nullopt.
std::optional<LinearSolution> solve_linear(const Matrix& a, const Matrix& b);

/// Diagonalization data for cokernel computations: invariants is the
/// divisibility chain d_1 | d_2 | ... (one entry per column, 0 marking free
/// summands) with coker(A) isomorphic to the direct sum of R/(d_i), and
/// basis_change is a unimodular V such that x -> x*V descends to that
/// isomorphism.
struct SmithDecomposition {
    std::vector<RingElem> invariants;
    Matrix basis_change;
    Matrix basis_change_inv;
};

SmithDecomposition smith_decompose(const Matrix& a);
std::vector<RingElem> smith_invariants(const Matrix& a);

/// Helper for assembling "solve for an unknown row vector" problems that
/// arise from map-lifting and hom-space computations. Slack variables are
/// ordinary variables the caller adds for congruences modulo a submodule.
class EquationSystem {
public:
    explicit EquationSystem(RingSpec ring) : ring_(ring) {}

    int add_variables(int count);
    int num_vars() const { return nvars_; }

    void add_equation(std::vector<std::pair<int, RingElem>> terms,
                      RingElem rhs);

    struct Solution {
        std::vector<RingElem> particular;
        Matrix kernel; // rows are homogeneous solutions over all variables
    };

    std::optional<Solution> solve() const;

private:
    RingSpec ring_;
    int nvars_ = 0;
    std::vector<std::vector<std::pair<int, RingElem>>> eqs_;
    std::vector<RingElem> rhs_;
};

} // namespace qgp

#endif
