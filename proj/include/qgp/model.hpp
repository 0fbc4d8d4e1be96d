#ifndef QGP_MODEL_HPP
#define QGP_MODEL_HPP

#include "qgp/rep.hpp"

namespace qgp {

/// Object classification in the two Reedy model structures. The invariants
/// between flags (projective implies Gorenstein-projective and trivial;
/// Gorenstein-projective and trivial implies projective) are theorems and
/// are re-checked on every call.
struct ObjectFlags {
    bool gorenstein_projective;
    bool gorenstein_injective;
    bool projective_object;
    bool injective_object;
    bool trivial;
};

struct MorphismFlags {
    bool weak_equivalence;
    bool rp_fibration;
    bool rp_cofibration;
    bool ri_fibration;
    bool ri_cofibration;
    bool rp_trivial_fibration;
    bool ri_trivial_cofibration;
};

/// Gorenstein-projective: the latching comparison is injective at every
/// vertex.
bool is_gorenstein_projective(const Rep& m);
/// Gorenstein-injective: the matching comparison is surjective at every
/// vertex.
bool is_gorenstein_injective(const Rep& m);
/// Projective object: Gorenstein-projective with projective vertex modules.
bool is_projective_object(const Rep& m);
/// Injective object: Gorenstein-injective with injective vertex modules.
bool is_injective_object(const Rep& m);
/// Finite projective dimension, which over this 1-Gorenstein path algebra
/// means projective dimension at most one: the syzygy of the canonical
/// cover is a projective object. Schanuel makes the test independent of the
/// chosen cover.
bool is_trivial_object(const Rep& m);

ObjectFlags classify_object(const Rep& m);

/// Full morphism classification. rp_trivial_fibration is computed along two
/// independent routes (weak equivalence + fibration, and surjection with
/// trivial kernel); a mismatch is a broken theorem and throws
/// InternalInvariantBroken. Dually for ri_trivial_cofibration.
MorphismFlags classify_morphism(const RepMap& f);

struct EmbedCofibrantResult {
    Rep projective;
    RepMap embedding; // k -> projective, vertexwise injective
    Rep cokernel;     // Gorenstein-projective
};

/// Embed a Gorenstein-projective representation into a projective object
/// with Gorenstein-projective cokernel, by induction over the vertices: at
/// each vertex the new free summand absorbs the cokernel of the latching
/// map and the already-built components extend over the latching image
/// through an injective module. All three postconditions are re-verified
/// before returning.
EmbedCofibrantResult embed_cofibrant_into_projective(const Rep& k);

struct CoverFibrantResult {
    Rep injective;
    RepMap projection; // injective -> c, vertexwise surjective
    Rep kernel;        // Gorenstein-injective
};

/// Dual construction: cover a Gorenstein-injective representation by an
/// injective object with Gorenstein-injective kernel, by induction against
/// the arrow direction using matching objects.
CoverFibrantResult cover_fibrant_by_injective(const Rep& c);

enum class FactorMode { CofThenTrivFib, TrivCofThenFib };

struct FactorizationResult {
    Rep mid;
    RepMap left;
    RepMap right;
    MorphismFlags left_flags;
    MorphismFlags right_flags;
};

/// Factor f through a middle object so that (left, right) lands in the
/// requested classes of the Reedy-projective structure. Certification
/// re-runs classify_morphism on both legs and throws
/// InternalInvariantBroken when a contractual flag fails.
FactorizationResult factorize(const RepMap& f, FactorMode mode);

struct Replacement {
    Rep object;
    RepMap map; // object -> m for cofibrant, m -> object for fibrant
};

/// Gorenstein-projective replacement gp -> m along an RP-trivial fibration,
/// built as the pushout of the projective cover against the embedding of
/// its syzygy. Returns (m, id) when m is already Gorenstein-projective.
Replacement cofibrant_replacement(const Rep& m);
/// Dual: m -> ginj along an RI-trivial cofibration, built as the pullback
/// of the injective envelope against the cover of its cokernel.
Replacement fibrant_replacement(const Rep& m);

struct FourTermResolution {
    Rep s, t, gp;
    RepMap s_to_t;
    RepMap t_to_gp;
    RepMap gp_to_m;
};

/// Exact sequence 0 -> S -> T -> gp -> m -> 0 with S, T projective objects
/// and gp Gorenstein-projective.
FourTermResolution four_term_resolution(const Rep& m);

/// The copairing (f,g): A + B -> C of maps with a common target.
RepMap copair(const DirectSumReps& sum, const RepMap& f, const RepMap& g);

} // namespace qgp

#endif
