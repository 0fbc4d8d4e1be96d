#include "qgp/ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qgp {

namespace {

bool is_prime_u64(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::int64_t xgcd_int(std::int64_t a, std::int64_t b, std::int64_t& s,
                      std::int64_t& t) {
    if (b == 0) {
        s = 1;
        t = 0;
        return a;
    }
    std::int64_t s1, t1;
    std::int64_t g = xgcd_int(b, a % b, s1, t1);
    s = t1;
    t = s1 - (a / b) * t1;
    return g;
}

// F_p coefficient polynomials, low degree first, used as the Euclidean cover
// of F_p[t]/(t^k).
using Poly = std::vector<std::uint64_t>;

void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_scale(const Poly& a, std::uint64_t c, std::uint64_t p) {
    Poly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = (a[i] * c) % p;
    poly_trim(r);
    return r;
}

Poly poly_sub(const Poly& a, const Poly& b, std::uint64_t p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t x = i < a.size() ? a[i] : 0;
        std::uint64_t y = i < b.size() ? b[i] : 0;
        r[i] = (x + p - y) % p;
    }
    poly_trim(r);
    return r;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    poly_trim(r);
    return r;
}

std::uint64_t fp_inv(std::uint64_t a, std::uint64_t p) {
    std::int64_t s, t;
    xgcd_int(static_cast<std::int64_t>(a % p), static_cast<std::int64_t>(p), s,
             t);
    std::int64_t r = s % static_cast<std::int64_t>(p);
    if (r < 0) r += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(r);
}

// quotient, remainder of Euclidean division in F_p[t]
void poly_divmod(const Poly& a, const Poly& b, std::uint64_t p, Poly& q,
                 Poly& r) {
    q.clear();
    r = a;
    poly_trim(r);
    Poly bb = b;
    poly_trim(bb);
    if (bb.empty()) {
        q.clear();
        return; // division by zero not used; callers guard
    }
    if (r.size() >= bb.size()) q.assign(r.size() - bb.size() + 1, 0);
    std::uint64_t lead_inv = fp_inv(bb.back(), p);
    while (r.size() >= bb.size()) {
        std::uint64_t c = (r.back() * lead_inv) % p;
        std::size_t shift = r.size() - bb.size();
        q[shift] = c;
        Poly sub(shift, 0);
        sub.insert(sub.end(), bb.begin(), bb.end());
        r = poly_sub(r, poly_scale(sub, c, p), p);
        if (c == 0) break; // leading coefficient was already zero; trimmed
    }
    poly_trim(q);
}

// extended gcd in F_p[t]: g = s*a + t*b
Poly poly_xgcd(Poly a, Poly b, std::uint64_t p, Poly& s, Poly& t) {
    poly_trim(a);
    poly_trim(b);
    Poly s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
    while (!b.empty()) {
        Poly q, r;
        poly_divmod(a, b, p, q, r);
        Poly s2 = poly_sub(s0, poly_mul(q, s1, p), p);
        Poly t2 = poly_sub(t0, poly_mul(q, t1, p), p);
        a = b;
        b = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    s = s0;
    t = t0;
    return a;
}

} // namespace

RingSpec RingSpec::z_mod(std::uint64_t n) {
    if (n < 2) throw Error(ErrorKind::ValidationError, "z-mod modulus must be >= 2");
    if (n > (1ull << 31))
        throw Error(ErrorKind::ValidationError, "z-mod modulus too large");
    RingSpec r;
    r.kind_ = RingKind::ZMod;
    r.n_ = n;
    r.size_ = n;
    std::uint64_t m = n;
    for (std::uint64_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            unsigned e = 0;
            while (m % d == 0) {
                m /= d;
                ++e;
            }
            r.factors_.emplace_back(d, e);
        }
    }
    if (m > 1) r.factors_.emplace_back(m, 1);
    return r;
}

RingSpec RingSpec::truncated_poly(std::uint64_t p, unsigned k) {
    if (!is_prime_u64(p))
        throw Error(ErrorKind::ValidationError, "truncated-poly base must be prime");
    if (k < 1) throw Error(ErrorKind::ValidationError, "nilpotency must be >= 1");
    RingSpec r;
    r.kind_ = RingKind::TruncatedPoly;
    r.p_ = p;
    r.k_ = k;
    r.p_pow_.assign(k + 1, 1);
    for (unsigned i = 1; i <= k; ++i) {
        if (r.p_pow_[i - 1] > (1ull << 40) / p)
            throw Error(ErrorKind::ValidationError, "truncated-poly ring too large");
        r.p_pow_[i] = r.p_pow_[i - 1] * p;
    }
    r.size_ = r.p_pow_[k];
    return r;
}

RingElem RingSpec::element(std::uint64_t index) const {
    if (index >= size_)
        throw Error(ErrorKind::ValidationError, "element index out of range");
    return {index};
}

void RingSpec::require_canonical(RingElem a) const {
    if (!is_canonical(a))
        throw Error(ErrorKind::SpecMismatch,
                    "element " + std::to_string(a.v) + " is not canonical for " +
                        describe());
}

RingElem RingSpec::from_integer(std::int64_t x) const {
    std::uint64_t m = kind_ == RingKind::ZMod ? n_ : p_;
    std::int64_t r = x % static_cast<std::int64_t>(m);
    if (r < 0) r += static_cast<std::int64_t>(m);
    return {static_cast<std::uint64_t>(r)};
}

std::vector<std::uint64_t> RingSpec::poly_coeffs(RingElem a) const {
    std::vector<std::uint64_t> c(k_, 0);
    std::uint64_t v = a.v;
    for (unsigned i = 0; i < k_; ++i) {
        c[i] = v % p_;
        v /= p_;
    }
    return c;
}

RingElem RingSpec::from_poly_coeffs(const std::vector<std::uint64_t>& c) const {
    if (c.size() > k_)
        throw Error(ErrorKind::ValidationError, "coefficient array too long");
    std::uint64_t v = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] >= p_)
            throw Error(ErrorKind::ValidationError, "coefficient out of range");
        v = v * p_ + c[i];
    }
    // digits were folded high-to-low, which matches the packing
    return {v};
}

RingElem RingSpec::add(RingElem a, RingElem b) const {
    if (kind_ == RingKind::ZMod) return {(a.v + b.v) % n_};
    std::uint64_t r = 0;
    for (unsigned i = 0; i < k_; ++i) {
        std::uint64_t d = ((a.v / p_pow_[i]) % p_ + (b.v / p_pow_[i]) % p_) % p_;
        r += d * p_pow_[i];
    }
    return {r};
}

RingElem RingSpec::neg(RingElem a) const {
    if (kind_ == RingKind::ZMod) return {a.v == 0 ? 0 : n_ - a.v};
    std::uint64_t r = 0;
    for (unsigned i = 0; i < k_; ++i) {
        std::uint64_t d = (a.v / p_pow_[i]) % p_;
        r += (d == 0 ? 0 : p_ - d) * p_pow_[i];
    }
    return {r};
}

RingElem RingSpec::sub(RingElem a, RingElem b) const { return add(a, neg(b)); }

RingElem RingSpec::mul(RingElem a, RingElem b) const {
    if (kind_ == RingKind::ZMod) return {(a.v * b.v) % n_};
    std::uint64_t r = 0;
    for (unsigned i = 0; i < k_; ++i) {
        std::uint64_t da = (a.v / p_pow_[i]) % p_;
        if (da == 0) continue;
        for (unsigned j = 0; i + j < k_; ++j) {
            std::uint64_t db = (b.v / p_pow_[j]) % p_;
            if (db == 0) continue;
            unsigned idx = i + j;
            std::uint64_t cur = (r / p_pow_[idx]) % p_;
            std::uint64_t nw = (cur + da * db) % p_;
            r = r - cur * p_pow_[idx] + nw * p_pow_[idx];
        }
    }
    return {r};
}

bool RingSpec::is_unit(RingElem a) const {
    if (kind_ == RingKind::ZMod) return std::gcd(a.v, n_) == 1;
    return a.v % p_ != 0;
}

RingElem RingSpec::inv(RingElem a) const {
    if (!is_unit(a))
        throw Error(ErrorKind::NotUnit,
                    "element " + std::to_string(a.v) + " is not a unit in " +
                        describe());
    if (kind_ == RingKind::ZMod) {
        std::int64_t s, t;
        xgcd_int(static_cast<std::int64_t>(a.v), static_cast<std::int64_t>(n_),
                 s, t);
        std::int64_t r = s % static_cast<std::int64_t>(n_);
        if (r < 0) r += static_cast<std::int64_t>(n_);
        return {static_cast<std::uint64_t>(r)};
    }
    // a = c0*(1 - w) with val(w) >= 1, so 1/a = (1/c0)(1 + w + ... + w^{k-1})
    std::uint64_t c0 = a.v % p_;
    RingElem c0inv = {fp_inv(c0, p_)};
    RingElem w = sub({0}, mul(c0inv, a)); // w = 1 - a/c0, negated below
    w = add(w, one());
    RingElem acc = one(), pw = one();
    for (unsigned i = 1; i < k_; ++i) {
        pw = mul(pw, w);
        acc = add(acc, pw);
    }
    return mul(c0inv, acc);
}

RingElem RingSpec::annihilator(RingElem a) const {
    require_canonical(a);
    if (kind_ == RingKind::ZMod) {
        std::uint64_t g = std::gcd(a.v, n_);
        return {(n_ / g) % n_};
    }
    if (a.v == 0) return one();
    unsigned val = 0;
    while ((a.v / p_pow_[val]) % p_ == 0) ++val;
    unsigned c = k_ - val;
    return {c == k_ ? 0 : p_pow_[c]};
}

RingElem RingSpec::canonical_gen(RingElem a) const {
    if (kind_ == RingKind::ZMod) {
        if (a.v == 0) return {0};
        return {std::gcd(a.v, n_)};
    }
    if (a.v == 0) return {0};
    unsigned val = 0;
    while ((a.v / p_pow_[val]) % p_ == 0) ++val;
    return {p_pow_[val]};
}

RingElem RingSpec::unit_to_canonical(RingElem a) const {
    if (a.v == 0) return one();
    if (kind_ == RingKind::ZMod) {
        std::uint64_t d = std::gcd(a.v, n_);
        std::uint64_t a1 = a.v / d, m = n_ / d;
        if (m == 1) return one(); // a generates the zero ideal only if a = 0
        std::int64_t s, t;
        xgcd_int(static_cast<std::int64_t>(a1 % m), static_cast<std::int64_t>(m),
                 s, t);
        std::int64_t u0 = s % static_cast<std::int64_t>(m);
        if (u0 < 0) u0 += static_cast<std::int64_t>(m);
        // lift to a unit mod n; some element of the coset u0 + mZ is coprime
        // to n because gcd(u0, m) = 1
        for (std::uint64_t j = 0;; ++j) {
            std::uint64_t cand = (static_cast<std::uint64_t>(u0) + m * j) % n_;
            if (std::gcd(cand, n_) == 1) return {cand};
        }
    }
    unsigned val = 0;
    while ((a.v / p_pow_[val]) % p_ == 0) ++val;
    // unit part of a
    std::uint64_t u = a.v / p_pow_[val];
    return inv({u % size_});
}

bool RingSpec::divides(RingElem d, RingElem x) const {
    RingElem c = canonical_gen(d);
    if (c.v == 0) return x.v == 0;
    if (kind_ == RingKind::ZMod) return x.v % c.v == 0;
    if (x.v == 0) return true;
    unsigned vd = 0;
    while ((c.v / p_pow_[vd]) % p_ == 0) ++vd;
    unsigned vx = 0;
    while ((x.v / p_pow_[vx]) % p_ == 0) ++vx;
    return vx >= vd;
}

RingElem RingSpec::divide_exact(RingElem x, RingElem d) const {
    if (!divides(d, x))
        throw Error(ErrorKind::ValidationError, "divide_exact: not divisible");
    if (x.v == 0) return {0};
    RingElem c = canonical_gen(d);
    RingElem u = unit_to_canonical(d); // u*d = c
    if (kind_ == RingKind::ZMod) {
        std::uint64_t q0 = x.v / c.v;
        return mul({q0 % n_}, u);
    }
    unsigned vd = 0;
    while ((c.v / p_pow_[vd]) % p_ == 0) ++vd;
    std::uint64_t q0 = x.v / p_pow_[vd]; // digit shift down by vd
    return mul({q0}, u);
}

RingSpec::QuoRem RingSpec::reduce_mod(RingElem x, RingElem d) const {
    if (d.v == 0) return {{0}, x};
    if (kind_ == RingKind::ZMod) {
        std::uint64_t r = x.v % d.v;
        return {{(x.v - r) / d.v % n_}, {r}};
    }
    unsigned vd = 0;
    while ((d.v / p_pow_[vd]) % p_ == 0) ++vd;
    std::uint64_t r = x.v % p_pow_[vd];
    std::uint64_t q = (x.v - r) / p_pow_[vd];
    return {{q}, {r}};
}

BezoutData RingSpec::bezout(RingElem a, RingElem b) const {
    if (a.v == 0 && b.v == 0) return {{0}, one(), {0}, one(), {0}};
    if (kind_ == RingKind::ZMod) {
        std::int64_t s, t;
        std::int64_t g = xgcd_int(static_cast<std::int64_t>(a.v),
                                  static_cast<std::int64_t>(b.v), s, t);
        auto red = [&](std::int64_t x) {
            std::int64_t r = x % static_cast<std::int64_t>(n_);
            if (r < 0) r += static_cast<std::int64_t>(n_);
            return RingElem{static_cast<std::uint64_t>(r)};
        };
        return {red(g), red(s), red(t),
                red(static_cast<std::int64_t>(a.v) / g),
                red(static_cast<std::int64_t>(b.v) / g)};
    }
    Poly pa = poly_coeffs(a), pb = poly_coeffs(b), s, t;
    poly_trim(pa);
    poly_trim(pb);
    Poly g = poly_xgcd(pa, pb, p_, s, t);
    Poly qa, qb, rem;
    poly_divmod(pa, g, p_, qa, rem);
    poly_divmod(pb, g, p_, qb, rem);
    auto pack = [&](const Poly& c) {
        std::uint64_t v = 0;
        for (std::size_t i = std::min<std::size_t>(c.size(), k_); i-- > 0;)
            v = v * p_ + c[i];
        return RingElem{v};
    };
    return {pack(g), pack(s), pack(t), pack(qa), pack(qb)};
}

std::uint64_t RingSpec::quotient_size(RingElem d) const {
    if (d.v == 0) return size_;
    if (kind_ == RingKind::ZMod) return d.v;
    unsigned vd = 0;
    while ((d.v / p_pow_[vd]) % p_ == 0) ++vd;
    return p_pow_[vd];
}

const std::vector<std::pair<std::uint64_t, unsigned>>&
RingSpec::factorization() const {
    return factors_;
}

bool RingSpec::cyclic_is_projective(RingElem d) const {
    if (d.v == 0) return true;        // free of rank 1
    if (is_unit(d)) return true;      // zero module
    if (kind_ == RingKind::TruncatedPoly) return false; // local: free or bust
    // R/(d) over Z/n is projective iff, at each prime p | n, the p-part of d
    // is either trivial or the full p-part of n.
    for (const auto& [p, e] : factors_) {
        unsigned vd = 0;
        std::uint64_t x = d.v;
        while (x % p == 0) {
            x /= p;
            ++vd;
        }
        if (vd != 0 && vd != e) return false;
    }
    return true;
}

std::string RingSpec::describe() const {
    std::ostringstream os;
    if (kind_ == RingKind::ZMod)
        os << "Z/" << n_;
    else
        os << "F_" << p_ << "[t]/(t^" << k_ << ")";
    return os.str();
}

RingElem ring_ops(const RingSpec& spec, RingOp op, RingElem a,
                  std::optional<RingElem> b) {
    spec.require_canonical(a);
    bool binary = op == RingOp::Add || op == RingOp::Sub || op == RingOp::Mul;
    if (binary) {
        if (!b)
            throw Error(ErrorKind::ValidationError,
                        "binary ring operation needs a second operand");
        spec.require_canonical(*b);
    }
    switch (op) {
        case RingOp::Add: return spec.add(a, *b);
        case RingOp::Sub: return spec.sub(a, *b);
        case RingOp::Mul: return spec.mul(a, *b);
        case RingOp::Neg: return spec.neg(a);
        case RingOp::Inv: return spec.inv(a);
    }
    throw Error(ErrorKind::ValidationError, "unknown ring operation");
}

} // namespace qgp
