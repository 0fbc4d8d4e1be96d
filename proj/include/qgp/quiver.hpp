#ifndef QGP_QUIVER_HPP
#define QGP_QUIVER_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qgp/errors.hpp"

namespace qgp {

struct Arrow {
    std::string name;
    std::string src;
    std::string tgt;
};

/// Finite quiver given by ordered vertex and arrow lists. Multiple arrows
/// between the same pair of vertices are allowed; the Kronecker quiver is a
/// first-class fixture. All enumeration orders downstream derive from the
/// input order here.
class Quiver {
public:
    Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
        : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {}

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    int vertex_count() const { return int(vertices_.size()); }
    int arrow_count() const { return int(arrows_.size()); }

    std::optional<int> vertex_index(const std::string& name) const;
    std::optional<int> arrow_index(const std::string& name) const;

    bool operator==(const Quiver& o) const;

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
};

struct QuiverValidation {
    enum class Kind { Ok, Cyclic, Name } kind = Kind::Ok;
    std::string detail;
    std::vector<std::string> cycle; // witness vertices for Kind::Cyclic
    bool ok() const { return kind == Kind::Ok; }
};

QuiverValidation validate_quiver(const Quiver& q);

/// A directed path as a sequence of arrow indices; empty = identity path.
using PathSeq = std::vector<int>;

/// Degree function, incoming/outgoing arrow tables, full path enumeration
/// and a stable topological order for a validated acyclic quiver. The
/// default degree of a vertex is the length of the longest path reaching it
/// from a source vertex; any other strictly arrow-increasing degree is
/// accepted, and nothing downstream may depend on the choice.
class ReedyData {
public:
    static ReedyData build(const Quiver& q);
    static ReedyData build_with_degree(const Quiver& q,
                                       std::vector<int> degree);

    const std::vector<int>& degree() const { return degree_; }
    const std::vector<std::vector<int>>& incoming() const { return incoming_; }
    const std::vector<std::vector<int>>& outgoing() const { return outgoing_; }
    const std::vector<int>& topo_order() const { return topo_; }
    /// All paths src -> tgt in lexicographic arrow order, identity included
    /// when src == tgt.
    const std::vector<PathSeq>& paths(int src, int tgt) const {
        return paths_[std::size_t(src)][std::size_t(tgt)];
    }

private:
    std::vector<int> degree_;
    std::vector<std::vector<int>> incoming_, outgoing_;
    std::vector<int> topo_;
    std::vector<std::vector<std::vector<PathSeq>>> paths_;
};

/// Validated quiver plus its Reedy data, shared by every representation
/// over the quiver.
struct QuiverCtx {
    Quiver quiver;
    ReedyData reedy;
};

using QuiverCtxPtr = std::shared_ptr<const QuiverCtx>;

/// Throws Error(ValidationError) carrying the validation detail when the
/// quiver is invalid.
QuiverCtxPtr make_quiver_ctx(Quiver q);
QuiverCtxPtr make_quiver_ctx_with_degree(Quiver q, std::vector<int> degree);

} // namespace qgp

#endif
