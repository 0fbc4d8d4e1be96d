#ifndef QGP_RING_HPP
#define QGP_RING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qgp/errors.hpp"

namespace qgp {

enum class RingKind { ZMod, TruncatedPoly };

/// Canonical element of a finite coefficient ring.
///
/// For Z/n the value is the residue in [0,n). For F_p[t]/(t^k) it packs the
/// coefficient vector (c_0,...,c_{k-1}), low degree first, in base p as
/// sum c_i p^i. In both cases the canonical values are exactly the integers
/// in [0,|R|), so every ring element has a unique representation.
struct RingElem {
    std::uint64_t v = 0;

    friend bool operator==(RingElem a, RingElem b) { return a.v == b.v; }
    friend bool operator!=(RingElem a, RingElem b) { return a.v != b.v; }
    friend bool operator<(RingElem a, RingElem b) { return a.v < b.v; }
};

/// Bezout data for a pair (a,b): g = s*a + t*b generates the ideal (a,b),
/// a = a_div*g and b = b_div*g, and the 2x2 matrix [[s,t],[-b_div,a_div]]
/// is unimodular (it lifts to a determinant-1 matrix over Z or F_p[t]).
struct BezoutData {
    RingElem g, s, t, a_div, b_div;
};

/// One of the two supported finite commutative quasi-Frobenius rings:
/// Z/n (n >= 2) or F_p[t]/(t^k) (p prime, k >= 1). Both are principal ideal
/// rings, which is what the normal-form algorithms rely on; both are
/// quasi-Frobenius, so projective and injective modules coincide.
class RingSpec {
public:
    static RingSpec z_mod(std::uint64_t n);
    static RingSpec truncated_poly(std::uint64_t p, unsigned k);

    RingKind kind() const { return kind_; }
    /// n for Z/n. Only valid for z-mod.
    std::uint64_t modulus() const { return n_; }
    /// p for F_p[t]/(t^k). Only valid for truncated-poly.
    std::uint64_t prime() const { return p_; }
    /// k for F_p[t]/(t^k). Only valid for truncated-poly.
    unsigned nilpotency() const { return k_; }
    /// |R|.
    std::uint64_t size() const { return size_; }

    bool operator==(const RingSpec& o) const {
        return kind_ == o.kind_ && n_ == o.n_ && p_ == o.p_ && k_ == o.k_;
    }
    bool operator!=(const RingSpec& o) const { return !(*this == o); }

    RingElem zero() const { return {0}; }
    RingElem one() const { return {1}; }
    /// The i-th element in canonical encoding order, i in [0,size).
    RingElem element(std::uint64_t index) const;
    bool is_canonical(RingElem a) const { return a.v < size_; }
    void require_canonical(RingElem a) const;

    /// Reduce an arbitrary integer into the ring (as a constant, for
    /// truncated-poly).
    RingElem from_integer(std::int64_t x) const;
    std::vector<std::uint64_t> poly_coeffs(RingElem a) const;
    RingElem from_poly_coeffs(const std::vector<std::uint64_t>& c) const;

    RingElem add(RingElem a, RingElem b) const;
    RingElem sub(RingElem a, RingElem b) const;
    RingElem neg(RingElem a) const;
    RingElem mul(RingElem a, RingElem b) const;
    bool is_unit(RingElem a) const;
    /// Multiplicative inverse; throws Error(NotUnit) for non-units.
    RingElem inv(RingElem a) const;

    /// Canonical generator of the annihilator ideal {x : x*a = 0}.
    RingElem annihilator(RingElem a) const;
    /// Canonical generator of the principal ideal (a): gcd(a,n) for Z/n,
    /// t^{val(a)} for the truncated polynomial ring, 0 for a = 0.
    RingElem canonical_gen(RingElem a) const;
    /// A unit u with u*a = canonical_gen(a).
    RingElem unit_to_canonical(RingElem a) const;
    /// Ideal membership x in (d).
    bool divides(RingElem d, RingElem x) const;
    /// q with q*d = x; requires divides(d,x).
    RingElem divide_exact(RingElem x, RingElem d) const;

    struct QuoRem {
        RingElem q, r;
    };
    /// x = q*d + r with r the canonical residue of x modulo the ideal (d).
    /// Requires d canonical (a value produced by canonical_gen).
    QuoRem reduce_mod(RingElem x, RingElem d) const;

    BezoutData bezout(RingElem a, RingElem b) const;

    /// |R/(d)| for canonical d.
    std::uint64_t quotient_size(RingElem d) const;

    /// Prime factorization of n (z-mod only), computed once by trial
    /// division at construction.
    const std::vector<std::pair<std::uint64_t, unsigned>>& factorization() const;

    /// Whether the cyclic module R/(d) is projective (equivalently injective)
    /// over R, for canonical d.
    bool cyclic_is_projective(RingElem d) const;

    std::string describe() const;

private:
    RingSpec() = default;

    RingKind kind_ = RingKind::ZMod;
    std::uint64_t n_ = 0;   // modulus for z-mod
    std::uint64_t p_ = 0;   // prime for truncated-poly
    unsigned k_ = 0;        // nilpotency for truncated-poly
    std::uint64_t size_ = 0;
    std::vector<std::pair<std::uint64_t, unsigned>> factors_;
    std::vector<std::uint64_t> p_pow_; // p^0..p^k for digit packing
};

enum class RingOp { Add, Sub, Mul, Neg, Inv };

/// Dispatcher form of the arithmetic operations. Throws Error(SpecMismatch)
/// when an operand is not canonical for the ring (the signature of a value
/// that belongs to a different ring) and Error(NotUnit) for inv of non-units.
RingElem ring_ops(const RingSpec& spec, RingOp op, RingElem a,
                  std::optional<RingElem> b);

} // namespace qgp

#endif
