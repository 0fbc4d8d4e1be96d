#ifndef QGP_TESTS_FIXTURES_HPP
#define QGP_TESTS_FIXTURES_HPP

#include "qgp/rep.hpp"

namespace qgp_fixtures {

using namespace qgp;

inline QuiverCtxPtr a2() {
    return make_quiver_ctx(Quiver({"0", "1"}, {{"a", "0", "1"}}));
}

inline QuiverCtxPtr a3() {
    return make_quiver_ctx(
        Quiver({"0", "1", "2"}, {{"a", "0", "1"}, {"b", "1", "2"}}));
}

inline QuiverCtxPtr kronecker() {
    return make_quiver_ctx(
        Quiver({"0", "1"}, {{"a", "0", "1"}, {"b", "0", "1"}}));
}

inline QuiverCtxPtr square() {
    return make_quiver_ctx(Quiver({"00", "10", "01", "11"},
                                  {{"a", "00", "10"},
                                   {"b", "00", "01"},
                                   {"c", "10", "11"},
                                   {"d", "01", "11"}}));
}

inline QuiverCtxPtr single_vertex() {
    return make_quiver_ctx(Quiver({"v"}, {}));
}

inline QuiverCtxPtr two_isolated() {
    return make_quiver_ctx(Quiver({"u", "v"}, {}));
}

inline Matrix mat(const RingSpec& ring, int cols,
                  std::vector<std::vector<std::uint64_t>> rows) {
    std::vector<std::vector<RingElem>> conv;
    for (auto& r : rows) {
        std::vector<RingElem> row;
        for (auto v : r) row.push_back({v});
        conv.push_back(row);
    }
    return Matrix::from_rows(ring, cols, conv);
}

/// (R -> R) with the given 1x1 arrow value, over an A2-shaped quiver.
inline Rep a2_free_rep(const QuiverCtxPtr& ctx, const RingSpec& ring,
                       std::uint64_t arrow_value) {
    return Rep(ctx, ring,
               {FPModule::free_module(ring, 1), FPModule::free_module(ring, 1)},
               {mat(ring, 1, {{arrow_value}})});
}

/// (0 -> Z/2) over Z/4 on A2: the canonical small Gorenstein-projective,
/// non-projective fixture.
inline Rep a2_zero_z2(const QuiverCtxPtr& ctx, const RingSpec& ring) {
    return Rep(ctx, ring, {FPModule::zero(ring), FPModule::cyclic(ring, {2})},
               {Matrix(ring, 0, 1)});
}

} // namespace qgp_fixtures

#endif
