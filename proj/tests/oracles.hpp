#ifndef QGP_TESTS_ORACLES_HPP
#define QGP_TESTS_ORACLES_HPP

// Brute-force reference computations used to pin expected values in tests.
// Everything here enumerates ring elements directly and stays independent
// of the normal-form code paths it is used to check.

#include <cstdint>
#include <set>
#include <vector>

#include "qgp/linalg.hpp"

namespace qgp_oracles {

using qgp::Matrix;
using qgp::RingElem;
using qgp::RingSpec;

using RawRow = std::vector<std::uint64_t>;

inline RawRow raw(const std::vector<RingElem>& r) {
    RawRow out(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) out[i] = r[i].v;
    return out;
}

/// All tuples in R^n, counting in base |R|.
inline std::vector<std::vector<RingElem>> all_rows(const RingSpec& ring,
                                                   int n) {
    std::vector<std::vector<RingElem>> out;
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= ring.size();
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::vector<RingElem> row(n);
        std::uint64_t v = idx;
        for (int i = 0; i < n; ++i) {
            row[std::size_t(i)] = ring.element(v % ring.size());
            v /= ring.size();
        }
        out.push_back(std::move(row));
    }
    return out;
}

inline std::vector<RingElem> apply_row(const RingSpec& ring,
                                       const std::vector<RingElem>& x,
                                       const Matrix& a) {
    std::vector<RingElem> out(a.cols(), ring.zero());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            out[std::size_t(j)] =
                ring.add(out[std::size_t(j)], ring.mul(x[std::size_t(i)], a.at(i, j)));
    return out;
}

/// The full set of rows spanned by the rows of A.
inline std::set<RawRow> row_span_set(const Matrix& a) {
    const RingSpec& ring = a.ring();
    std::set<RawRow> out;
    for (const auto& c : all_rows(ring, a.rows()))
        out.insert(raw(apply_row(ring, c, a)));
    return out;
}

/// {x : x*A = 0} as a set of raw rows.
inline std::set<RawRow> kernel_set(const Matrix& a) {
    const RingSpec& ring = a.ring();
    std::set<RawRow> out;
    for (const auto& x : all_rows(ring, a.rows())) {
        auto img = apply_row(ring, x, a);
        bool zero = true;
        for (auto e : img) zero = zero && e.v == 0;
        if (zero) out.insert(raw(x));
    }
    return out;
}

inline bool solvable_brute(const Matrix& a, const std::vector<RingElem>& b) {
    const RingSpec& ring = a.ring();
    for (const auto& x : all_rows(ring, a.rows()))
        if (raw(apply_row(ring, x, a)) == raw(b)) return true;
    return false;
}

inline std::uint64_t coker_size_brute(const Matrix& a) {
    std::uint64_t total = 1;
    for (int i = 0; i < a.cols(); ++i) total *= a.ring().size();
    return total / row_span_set(a).size();
}

} // namespace qgp_oracles

#endif
