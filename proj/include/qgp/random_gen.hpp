#ifndef QGP_RANDOM_GEN_HPP
#define QGP_RANDOM_GEN_HPP

#include "qgp/rep.hpp"

namespace qgp {

/// splitmix64. Self-contained so that identical seeds give identical
/// instances on every platform, which the seeded property suites rely on.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

private:
    std::uint64_t state_;
};

RingElem random_elem(Rng& rng, const RingSpec& ring);
FPModule random_module(Rng& rng, const RingSpec& ring, int max_gens);

/// A uniformly random well-defined matrix src -> tgt, sampled from the
/// solution module of the well-definedness system rather than by rejection
/// over all matrices.
Matrix random_well_defined_matrix(Rng& rng, const FPModule& src,
                                  const FPModule& tgt);

/// Deterministic pseudorandom representation: random vertex modules with at
/// most max_gens generators, random well-defined arrow maps.
Rep random_rep(Rng& rng, const QuiverCtxPtr& ctx, const RingSpec& ring,
               int max_gens);

/// A uniformly random morphism a -> b, sampled through the hom module.
RepMap random_rep_map(Rng& rng, const Rep& a, const Rep& b);

} // namespace qgp

#endif
