#include <doctest.h>

#include "qgp/ring.hpp"

using namespace qgp;

namespace {

std::vector<RingSpec> small_rings() {
    return {RingSpec::z_mod(4),           RingSpec::z_mod(6),
            RingSpec::z_mod(8),           RingSpec::z_mod(12),
            RingSpec::z_mod(7),           RingSpec::truncated_poly(2, 2),
            RingSpec::truncated_poly(3, 2), RingSpec::truncated_poly(2, 3)};
}

} // namespace

TEST_SUITE("ring") {

TEST_CASE("arithmetic on Z/4") {
    RingSpec r = RingSpec::z_mod(4);
    CHECK(ring_ops(r, RingOp::Mul, {3}, RingElem{3}).v == 1);
    CHECK(r.add({3}, {2}).v == 1);
    CHECK(r.neg({1}).v == 3);
    CHECK_THROWS_AS(ring_ops(r, RingOp::Inv, {2}, std::nullopt), Error);
    CHECK(r.inv({3}).v == 3);
}

TEST_CASE("arithmetic in F_2[t]/(t^2)") {
    RingSpec r = RingSpec::truncated_poly(2, 2);
    RingElem one_plus_t = r.from_poly_coeffs({1, 1});
    CHECK(one_plus_t.v == 3);
    CHECK(ring_ops(r, RingOp::Mul, one_plus_t, one_plus_t).v == 1);
    RingElem t = r.from_poly_coeffs({0, 1});
    CHECK(r.mul(t, t).v == 0);
    CHECK(r.inv(one_plus_t) == one_plus_t);
    CHECK_THROWS_AS(r.inv(t), Error);
}

TEST_CASE("annihilator examples") {
    RingSpec z4 = RingSpec::z_mod(4);
    CHECK(z4.annihilator({2}).v == 2);
    CHECK(z4.annihilator({1}).v == 0);
    RingSpec f2t = RingSpec::truncated_poly(2, 2);
    RingElem t = f2t.from_poly_coeffs({0, 1});
    CHECK(f2t.annihilator(t) == t);
}

TEST_CASE("non-canonical operands are rejected") {
    RingSpec r = RingSpec::z_mod(4);
    CHECK_THROWS_AS(ring_ops(r, RingOp::Add, {5}, RingElem{1}), Error);
}

TEST_CASE("exhaustive identities on every small ring") {
    for (const auto& r : small_rings()) {
        CAPTURE(r.describe());
        for (std::uint64_t i = 0; i < r.size(); ++i) {
            RingElem a = r.element(i);
            CHECK(r.add(a, r.neg(a)).v == 0);
            CHECK(r.mul(a, r.one()) == a);
            if (r.is_unit(a)) CHECK(r.mul(r.inv(a), a).v == 1);
            // annihilator: ann(a)*a = 0 and the annihilator set is exactly
            // the multiples of the canonical generator
            RingElem ann = r.annihilator(a);
            CHECK(r.mul(ann, a).v == 0);
            for (std::uint64_t j = 0; j < r.size(); ++j) {
                RingElem x = r.element(j);
                bool kills = r.mul(x, a).v == 0;
                CHECK(kills == r.divides(ann, x));
            }
        }
    }
}

TEST_CASE("exhaustive associativity and distributivity spot ring") {
    for (const auto& r : {RingSpec::z_mod(6), RingSpec::truncated_poly(2, 3)}) {
        for (std::uint64_t i = 0; i < r.size(); ++i)
            for (std::uint64_t j = 0; j < r.size(); ++j)
                for (std::uint64_t k = 0; k < r.size(); ++k) {
                    RingElem a = r.element(i), b = r.element(j), c = r.element(k);
                    CHECK(r.mul(a, r.mul(b, c)) == r.mul(r.mul(a, b), c));
                    CHECK(r.mul(a, r.add(b, c)) ==
                          r.add(r.mul(a, b), r.mul(a, c)));
                }
    }
}

TEST_CASE("canonical generators and unit multipliers") {
    for (const auto& r : small_rings()) {
        CAPTURE(r.describe());
        for (std::uint64_t i = 0; i < r.size(); ++i) {
            RingElem a = r.element(i);
            RingElem g = r.canonical_gen(a);
            RingElem u = r.unit_to_canonical(a);
            CHECK(r.is_unit(u));
            CHECK(r.mul(u, a) == g);
            CHECK(r.canonical_gen(g) == g);
            // (a) and (g) contain each other
            CHECK(r.divides(a, g));
            CHECK(r.divides(g, a));
        }
    }
}

TEST_CASE("bezout data is a unimodular combination") {
    for (const auto& r : small_rings()) {
        CAPTURE(r.describe());
        for (std::uint64_t i = 0; i < r.size(); ++i)
            for (std::uint64_t j = 0; j < r.size(); ++j) {
                RingElem a = r.element(i), b = r.element(j);
                BezoutData bz = r.bezout(a, b);
                CHECK(r.add(r.mul(bz.s, a), r.mul(bz.t, b)) == bz.g);
                CHECK(r.mul(bz.a_div, bz.g) == a);
                CHECK(r.mul(bz.b_div, bz.g) == b);
                RingElem det =
                    r.add(r.mul(bz.s, bz.a_div), r.mul(bz.t, bz.b_div));
                CHECK(r.is_unit(det));
                // g generates the ideal (a, b)
                CHECK(r.divides(bz.g, a));
                CHECK(r.divides(bz.g, b));
            }
    }
}

TEST_CASE("reduce_mod produces canonical residues") {
    for (const auto& r : small_rings()) {
        for (std::uint64_t i = 0; i < r.size(); ++i) {
            RingElem d = r.canonical_gen(r.element(i));
            for (std::uint64_t j = 0; j < r.size(); ++j) {
                RingElem x = r.element(j);
                auto qr = r.reduce_mod(x, d);
                CHECK(r.add(r.mul(qr.q, d), qr.r) == x);
                // residues are a transversal: equal residues iff difference
                // is a multiple of d
                auto qr2 = r.reduce_mod(r.add(x, d), d);
                CHECK(qr2.r == qr.r);
            }
        }
    }
}

TEST_CASE("divide_exact inverts multiplication by the divisor") {
    for (const auto& r : small_rings()) {
        for (std::uint64_t i = 0; i < r.size(); ++i)
            for (std::uint64_t j = 0; j < r.size(); ++j) {
                RingElem d = r.element(i), x = r.element(j);
                if (!r.divides(d, x)) continue;
                RingElem q = r.divide_exact(x, d);
                CHECK(r.mul(q, d) == x);
            }
    }
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(RingSpec::z_mod(1), Error);
    CHECK_THROWS_AS(RingSpec::truncated_poly(4, 2), Error);
    CHECK_THROWS_AS(RingSpec::truncated_poly(2, 0), Error);
    CHECK(RingSpec::z_mod(12).factorization() ==
          std::vector<std::pair<std::uint64_t, unsigned>>{{2, 2}, {3, 1}});
}

} // TEST_SUITE
