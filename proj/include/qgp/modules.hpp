#ifndef QGP_MODULES_HPP
#define QGP_MODULES_HPP

#include <optional>
#include <string>
#include <vector>

#include "qgp/linalg.hpp"

namespace qgp {

/// Finitely presented module over a RingSpec ring: R^g modulo the row span
/// of a relations matrix. Elements are rows of length g; equality of cosets
/// is decided through the cached Howell form of the relations, and the
/// cached Smith data gives the invariant-factor decomposition.
class FPModule {
public:
    FPModule(RingSpec ring, int generators, Matrix relations);
    static FPModule zero(RingSpec ring);
    static FPModule free_module(RingSpec ring, int rank);
    static FPModule cyclic(RingSpec ring, RingElem d); // R/(d)

    const RingSpec& ring() const { return ring_; }
    int generators() const { return gens_; }
    const Matrix& relations() const { return relations_; }
    const HowellForm& relation_span() const { return rel_span_; }
    const SmithDecomposition& smith() const { return smith_; }

    /// Canonical coset representative.
    std::vector<RingElem> reduce(std::vector<RingElem> row) const;
    bool is_zero_element(const std::vector<RingElem>& row) const;
    bool is_zero_module() const;
    std::uint64_t cardinality() const;

    /// Divisibility chain d_1 | ... | d_g with the module isomorphic to the
    /// direct sum of R/(d_i).
    const std::vector<RingElem>& invariants() const {
        return smith_.invariants;
    }
    /// Invariants with unit entries dropped: a canonical isomorphism
    /// invariant.
    std::vector<RingElem> iso_invariants() const;

    bool same_presentation(const FPModule& o) const;

private:
    RingSpec ring_;
    int gens_;
    Matrix relations_;
    HowellForm rel_span_;
    SmithDecomposition smith_;
};

/// Homomorphism between finitely presented modules, stored as its action on
/// generators: a g_src x g_tgt matrix acting on the right of row vectors.
/// Well-definedness (relations land in relations) is checked at
/// construction.
class ModuleMap {
public:
    ModuleMap(FPModule source, FPModule target, Matrix matrix);
    static ModuleMap identity(const FPModule& m);
    static ModuleMap zero_map(const FPModule& src, const FPModule& tgt);

    const FPModule& source() const { return source_; }
    const FPModule& target() const { return target_; }
    const Matrix& matrix() const { return matrix_; }

    /// this followed by next.
    ModuleMap compose(const ModuleMap& next) const;
    ModuleMap add(const ModuleMap& o) const;
    ModuleMap negate() const;
    std::vector<RingElem> apply(const std::vector<RingElem>& row) const;

    bool is_injective() const;
    bool is_surjective() const;
    bool is_zero() const;
    bool equals(const ModuleMap& o) const;

private:
    FPModule source_, target_;
    Matrix matrix_;
};

/// nullopt when the data is valid, otherwise a description of the violated
/// invariant.
std::optional<std::string> check_module_shape(const RingSpec& ring,
                                              int generators,
                                              const Matrix& relations);
std::optional<std::string> check_module_map(const FPModule& src,
                                            const FPModule& tgt,
                                            const Matrix& matrix);

struct SubmodulePresentation {
    FPModule module;
    ModuleMap inclusion;
};

/// Presentation of the submodule of `ambient` generated by the given rows.
SubmodulePresentation submodule_presentation(const Matrix& generators,
                                             const FPModule& ambient);

/// Coordinates of `row` in terms of the submodule generators, modulo the
/// ambient relations; nullopt when the row is not in the submodule.
std::optional<std::vector<RingElem>> express_in_submodule(
    const std::vector<RingElem>& row, const Matrix& generators,
    const FPModule& ambient);

struct Subquotient {
    FPModule kernel;
    ModuleMap kernel_inclusion; // kernel -> source
    FPModule image;
    ModuleMap image_from_source; // source ->> image
    ModuleMap image_inclusion;   // image -> target
    FPModule cokernel;
    ModuleMap cokernel_projection; // target ->> cokernel
};

Subquotient subquotient(const ModuleMap& f);

struct DirectSumModules {
    FPModule sum;
    std::vector<ModuleMap> injections;
    std::vector<ModuleMap> projections;
};

DirectSumModules direct_sum_modules(const std::vector<FPModule>& parts,
                                    const RingSpec& ring);

/// Projectivity over R, decided on the invariant-factor decomposition: over
/// Z/n each p-primary part of each cyclic factor must be trivial or full,
/// over the local truncated-poly ring every factor must be free.
bool is_projective_module(const FPModule& m);
/// Injectivity coincides with projectivity over these quasi-Frobenius
/// rings.
bool is_injective_module(const FPModule& m);

/// The canonical surjection R^g ->> M, identity on generators.
ModuleMap free_cover(const FPModule& m);

/// A monomorphism from M into a finite free module, assembled from the
/// invariant-factor decomposition: each cyclic factor R/(d) embeds into R
/// by multiplication with a generator of ann(d).
ModuleMap embed_into_injective(const FPModule& m);

/// Given inc: S -> K injective and psi: S -> E with E injective, produce
/// ext: K -> E with inc;ext = psi. Throws Error(NotInjectiveInclusion) if
/// inc has nonzero kernel and InternalInvariantBroken if the solver fails
/// for an injective target, which cannot happen.
ModuleMap extend_map_along_injection(const ModuleMap& inc,
                                     const ModuleMap& psi);

/// Whether f factors through a projective module. Decided against the free
/// cover of the target: any factorization through a projective lifts along
/// a surjection from a free module, so the fixed cover sees them all.
bool stable_zero(const ModuleMap& f);

/// Whether f: M -> N represents an isomorphism in the stable category.
/// Test: with P ->> N the free cover, the always-surjective (f,cover):
/// M+P ->> N is a stable equivalence iff its kernel is projective, and
/// M -> M+P is a stable equivalence since P is projective.
bool stable_equiv(const ModuleMap& f);

} // namespace qgp

#endif
