#ifndef QGP_REP_HPP
#define QGP_REP_HPP

#include <optional>
#include <vector>

#include "qgp/modules.hpp"
#include "qgp/quiver.hpp"

namespace qgp {

/// Representation of a finite acyclic quiver over a RingSpec ring: one
/// finitely presented module per vertex and one module map per arrow. The
/// path algebra is free on the arrows, so there are no commutation
/// constraints between arrow maps.
class Rep {
public:
    Rep(QuiverCtxPtr ctx, RingSpec ring, std::vector<FPModule> vertex_modules,
        std::vector<Matrix> arrow_matrices);
    static Rep zero_rep(QuiverCtxPtr ctx, RingSpec ring);

    const QuiverCtxPtr& ctx() const { return ctx_; }
    const Quiver& quiver() const { return ctx_->quiver; }
    const ReedyData& reedy() const { return ctx_->reedy; }
    const RingSpec& ring() const { return ring_; }
    const FPModule& vertex_module(int v) const {
        return vertex_modules_[std::size_t(v)];
    }
    const Matrix& arrow_matrix(int a) const {
        return arrow_matrices_[std::size_t(a)];
    }
    ModuleMap arrow_map(int a) const;

    /// Composite of the arrow matrices along a path starting at `from`;
    /// the identity matrix for the empty path.
    Matrix path_matrix(int from, const PathSeq& path) const;

    bool is_zero() const;
    bool same_presentation(const Rep& o) const;

private:
    QuiverCtxPtr ctx_;
    RingSpec ring_;
    std::vector<FPModule> vertex_modules_;
    std::vector<Matrix> arrow_matrices_;
};

/// Morphism of representations: a module map per vertex, natural in every
/// arrow. Naturality is checked at construction.
class RepMap {
public:
    RepMap(Rep source, Rep target, std::vector<Matrix> components);
    static RepMap identity(const Rep& m);
    static RepMap zero_map(const Rep& src, const Rep& tgt);

    const Rep& source() const { return source_; }
    const Rep& target() const { return target_; }
    const Matrix& component_matrix(int v) const {
        return components_[std::size_t(v)];
    }
    ModuleMap component(int v) const;

    RepMap compose(const RepMap& next) const;
    RepMap add(const RepMap& o) const;
    RepMap negate() const;
    bool equals(const RepMap& o) const;

    bool is_vertexwise_injective() const;
    bool is_vertexwise_surjective() const;
    bool is_zero() const;

private:
    Rep source_, target_;
    std::vector<Matrix> components_;
};

std::optional<std::string> check_rep(const QuiverCtxPtr& ctx,
                                     const RingSpec& ring,
                                     const std::vector<FPModule>& mods,
                                     const std::vector<Matrix>& arrows);
std::optional<std::string> check_rep_map(const Rep& src, const Rep& tgt,
                                         const std::vector<Matrix>& comps);

struct LatchingData {
    FPModule object;
    ModuleMap map; // latching -> vertex for latching(), vertex -> matching
                   // object for matching()
    std::vector<int> arrows;  // contributing arrows in input order
    std::vector<int> offsets; // generator offset of each block
};

/// L_j(M): direct sum of M over the arrows into j, with the assembled map
/// into M_j.
LatchingData latching(const Rep& m, int j);
/// Dual matching object over the arrows out of j, with the comparison map
/// from M_j.
LatchingData matching(const Rep& m, int j);

struct RepWithMap {
    Rep rep;
    RepMap map;
};

RepWithMap pointwise_kernel(const RepMap& f);   // map: kernel -> source
RepWithMap pointwise_cokernel(const RepMap& f); // map: target -> cokernel

struct DirectSumReps {
    Rep sum;
    std::vector<RepMap> injections;
    std::vector<RepMap> projections;
};

DirectSumReps direct_sum_reps(const std::vector<Rep>& parts);

struct PushoutResult {
    Rep object;
    RepMap from_f_target;
    RepMap from_g_target;
};
/// Pushout of B <-f- A -g-> C, computed vertexwise as
/// coker(a -> (f(a), -g(a))).
PushoutResult rep_pushout(const RepMap& f, const RepMap& g);

struct PullbackResult {
    Rep object;
    RepMap to_f_source;
    RepMap to_g_source;
};
/// Pullback of B -f-> A <-g- C, computed vertexwise as
/// ker((b,c) -> f(b) - g(c)).
PullbackResult rep_pullback(const RepMap& f, const RepMap& g);

/// Universal-property witnesses: the map out of a pushout induced by a
/// commuting cocone (u: B -> W, v: C -> W), and the map into a pullback
/// induced by a commuting cone (u: W -> B, v: W -> C).
RepMap pushout_induced_map(const PushoutResult& po, const RepMap& u,
                           const RepMap& v);
RepMap pullback_induced_map(const PullbackResult& pb, const RepMap& u,
                            const RepMap& v);

/// P with P_j the sum over all paths i ~> j (identities included) of
/// R^{ranks[i]}, arrow maps appending the arrow to the indexing path. These
/// are the projective objects generated in each vertex.
Rep induced_projective(const QuiverCtxPtr& ctx, const RingSpec& ring,
                       const std::vector<int>& ranks);

/// coI(at, E) with value at j the sum over paths j ~> at of E, arrow maps
/// precomposing the indexing path; satisfies Hom(K, coI(at,E)) =
/// Hom_R(K_at, E) by evaluation at the identity path. E must be injective.
Rep coinduced_injective(const QuiverCtxPtr& ctx, const RingSpec& ring, int at,
                        const FPModule& e);

/// The direct sum of coI(i, e_at[i]) over all vertices, in one canonical
/// block layout: at vertex j the blocks run over anchors i in topological
/// order and paths j ~> i in lexicographic order.
Rep coinduced_family(const QuiverCtxPtr& ctx, const RingSpec& ring,
                     const std::vector<FPModule>& e_at);

struct CoverResult {
    Rep cover;
    RepMap onto;
};
/// The canonical surjection from an induced projective built on the vertex
/// generators of m.
CoverResult projective_cover(const Rep& m);

struct EnvelopeResult {
    Rep envelope;
    RepMap into;
};
/// The canonical vertexwise-injective map into an injective object,
/// assembled from coinduced blocks of the vertexwise injective embeddings.
EnvelopeResult injective_envelope(const Rep& m);

/// The R-module of representation morphisms m -> n, with one representing
/// RepMap per generator and conversions between module elements and maps.
struct HomBasis {
    Rep source, target;
    FPModule module;
    std::vector<RepMap> generators;
    Matrix gen_vectors;  // flattened component matrices, one row per generator
    Matrix triv_vectors; // rows spanning the maps that are zero as maps
    std::vector<int> block_offset;

    RepMap map_from_coords(const std::vector<RingElem>& coords) const;
    std::optional<std::vector<RingElem>> coords_of(const RepMap& f) const;
    std::vector<RingElem> flatten(const RepMap& f) const;
};

HomBasis hom_rep(const Rep& m, const Rep& n);

/// Total-module view over the path algebra: the direct sum of the vertex
/// modules with the generator ranges of the vertex idempotents and the
/// arrow actions.
struct LambdaView {
    QuiverCtxPtr ctx;
    RingSpec ring;
    FPModule total;
    std::vector<std::pair<int, int>> blocks; // per vertex: offset, generators
    std::vector<Matrix> arrow_actions;
};

LambdaView lambda_view(const Rep& m);
Rep rep_from_lambda(const LambdaView& v);

/// Ext^1 in the representation category against an arbitrary target,
/// computed from the canonical projective presentation of m as
/// coker(Hom(P,t) -> Hom(K,t)).
FPModule ext1_rep(const Rep& m, const Rep& t);

/// Ext^1(m, P(i)) for each vertex i, P(i) the induced projective of rank
/// one at i. All vanish iff m is Gorenstein-projective, which is what the
/// classification cross-check exploits.
std::vector<FPModule> ext1_oracle(const Rep& m);

/// h with h;p = q for p: X -> Y, q: M -> Y.
std::optional<RepMap> lift_through(const RepMap& p, const RepMap& q);
/// h: B -> I with kappa;h = psi for a mono kappa: A -> B; I must be an
/// injective object for existence to be guaranteed.
std::optional<RepMap> extend_rep_map_along_mono(const RepMap& kappa,
                                                const RepMap& psi);
/// s with s;f = id_target.
std::optional<RepMap> find_section(const RepMap& f);
/// r with f;r = id_source.
std::optional<RepMap> find_retraction(const RepMap& f);

} // namespace qgp

#endif
