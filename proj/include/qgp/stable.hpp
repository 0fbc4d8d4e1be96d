#ifndef QGP_STABLE_HPP
#define QGP_STABLE_HPP

#include "qgp/model.hpp"

namespace qgp {

/// Suspension: cokernel of the canonical vertexwise-injective map into an
/// injective object, computed on the Reedy-injective side.
Rep suspension(const Rep& m);

/// Loop: kernel of the canonical projective cover, computed on the
/// Reedy-projective side. Always Gorenstein-projective, being a syzygy.
Rep loop_rep(const Rep& m);

/// Hom in the homotopy category: maps between the Gorenstein-projective
/// replacements modulo those factoring through a projective object. A map
/// factors through some projective object iff it lifts through the
/// projective cover of the target, so the fixed cover detects the whole
/// ideal.
struct StableHomResult {
    FPModule module;
    std::vector<RepMap> representatives;
    Rep source_replacement;
    Rep target_replacement;
};

StableHomResult stable_hom(const Rep& a, const Rep& b);

/// The dual route through Gorenstein-injective replacements modulo maps
/// factoring through injective objects; agrees with stable_hom up to
/// isomorphism and serves as the cross-check of the triangulated
/// equivalences.
StableHomResult stable_hom_via_injectives(const Rep& a, const Rep& b);

struct SigmaOmegaResult {
    RepMap comparison; // m -> suspension(loop(m))
    bool is_weq;
};

/// The unit m -> Sigma(Omega m), built by extending the injective embedding
/// of Omega m over its inclusion into the cover and passing to cokernels.
/// is_weq is contractual: false throws InternalInvariantBroken.
SigmaOmegaResult sigma_omega_compare(const Rep& m);

struct AdjunctionCheckResult {
    FPModule lhs; // stable_hom(m, suspension(n))
    FPModule rhs; // Ext^1(G_P m, n)
    bool agree;
};

AdjunctionCheckResult hovey_adjunction_check(const Rep& m, const Rep& n);

} // namespace qgp

#endif
