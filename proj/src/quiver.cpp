#include "qgp/quiver.hpp"

#include <algorithm>
#include <set>

namespace qgp {

std::optional<int> Quiver::vertex_index(const std::string& name) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (vertices_[i] == name) return int(i);
    return std::nullopt;
}

std::optional<int> Quiver::arrow_index(const std::string& name) const {
    for (std::size_t i = 0; i < arrows_.size(); ++i)
        if (arrows_[i].name == name) return int(i);
    return std::nullopt;
}

bool Quiver::operator==(const Quiver& o) const {
    if (vertices_ != o.vertices_) return false;
    if (arrows_.size() != o.arrows_.size()) return false;
    for (std::size_t i = 0; i < arrows_.size(); ++i)
        if (arrows_[i].name != o.arrows_[i].name ||
            arrows_[i].src != o.arrows_[i].src ||
            arrows_[i].tgt != o.arrows_[i].tgt)
            return false;
    return true;
}

QuiverValidation validate_quiver(const Quiver& q) {
    std::set<std::string> vnames(q.vertices().begin(), q.vertices().end());
    if (vnames.size() != q.vertices().size())
        return {QuiverValidation::Kind::Name, "duplicate vertex name", {}};
    std::set<std::string> anames;
    for (const auto& a : q.arrows()) {
        if (!anames.insert(a.name).second)
            return {QuiverValidation::Kind::Name,
                    "duplicate arrow name " + a.name, {}};
        if (!q.vertex_index(a.src))
            return {QuiverValidation::Kind::Name,
                    "arrow " + a.name + " has unknown source " + a.src, {}};
        if (!q.vertex_index(a.tgt))
            return {QuiverValidation::Kind::Name,
                    "arrow " + a.name + " has unknown target " + a.tgt, {}};
    }
    // cycle detection with witness reconstruction
    int n = q.vertex_count();
    std::vector<std::vector<int>> succ(n);
    for (const auto& a : q.arrows())
        succ[std::size_t(*q.vertex_index(a.src))].push_back(
            *q.vertex_index(a.tgt));
    std::vector<int> state(n, 0); // 0 unseen, 1 on stack, 2 done
    std::vector<int> stack, parent(n, -1);
    for (int s = 0; s < n; ++s) {
        if (state[std::size_t(s)] != 0) continue;
        std::vector<std::pair<int, std::size_t>> dfs{{s, 0}};
        state[std::size_t(s)] = 1;
        while (!dfs.empty()) {
            auto& [v, ei] = dfs.back();
            if (ei < succ[std::size_t(v)].size()) {
                int w = succ[std::size_t(v)][ei++];
                if (state[std::size_t(w)] == 1) {
                    // reconstruct the cycle w -> ... -> v -> w
                    std::vector<std::string> cyc;
                    bool in = false;
                    for (const auto& fr : dfs) {
                        if (fr.first == w) in = true;
                        if (in) cyc.push_back(q.vertices()[std::size_t(fr.first)]);
                    }
                    cyc.push_back(q.vertices()[std::size_t(w)]);
                    return {QuiverValidation::Kind::Cyclic,
                            "quiver contains a directed cycle", cyc};
                }
                if (state[std::size_t(w)] == 0) {
                    state[std::size_t(w)] = 1;
                    dfs.emplace_back(w, 0);
                }
            } else {
                state[std::size_t(v)] = 2;
                dfs.pop_back();
            }
        }
    }
    return {};
}

ReedyData ReedyData::build(const Quiver& q) {
    // longest path from any source vertex, computed along a topological scan
    int n = q.vertex_count();
    ReedyData rd = build_with_degree(q, std::vector<int>(std::size_t(n), 0));
    std::vector<int> deg(std::size_t(n), 0);
    for (int v : rd.topo_) {
        for (int ai : rd.incoming_[std::size_t(v)]) {
            int s = *q.vertex_index(q.arrows()[std::size_t(ai)].src);
            deg[std::size_t(v)] =
                std::max(deg[std::size_t(v)], deg[std::size_t(s)] + 1);
        }
    }
    rd.degree_ = std::move(deg);
    return rd;
}

ReedyData ReedyData::build_with_degree(const Quiver& q,
                                       std::vector<int> degree) {
    auto val = validate_quiver(q);
    if (!val.ok()) throw Error(ErrorKind::ValidationError, val.detail);
    int n = q.vertex_count();
    if (int(degree.size()) != n)
        throw Error(ErrorKind::ValidationError, "degree table size mismatch");
    ReedyData rd;
    rd.degree_ = std::move(degree);
    rd.incoming_.assign(std::size_t(n), {});
    rd.outgoing_.assign(std::size_t(n), {});
    for (int ai = 0; ai < q.arrow_count(); ++ai) {
        const Arrow& a = q.arrows()[std::size_t(ai)];
        rd.incoming_[std::size_t(*q.vertex_index(a.tgt))].push_back(ai);
        rd.outgoing_[std::size_t(*q.vertex_index(a.src))].push_back(ai);
    }
    // stable topological order: lowest input index among ready vertices
    std::vector<int> indeg(std::size_t(n), 0);
    for (const auto& a : q.arrows()) ++indeg[std::size_t(*q.vertex_index(a.tgt))];
    std::vector<bool> used(std::size_t(n), false);
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (!used[std::size_t(v)] && indeg[std::size_t(v)] == 0) {
                pick = v;
                break;
            }
        if (pick < 0) throw Error(ErrorKind::ValidationError, "cyclic quiver");
        used[std::size_t(pick)] = true;
        rd.topo_.push_back(pick);
        for (int ai : rd.outgoing_[std::size_t(pick)])
            --indeg[std::size_t(*q.vertex_index(q.arrows()[std::size_t(ai)].tgt))];
    }
    // all paths, depth-first in arrow input order
    rd.paths_.assign(std::size_t(n),
                     std::vector<std::vector<PathSeq>>(std::size_t(n)));
    for (int s = 0; s < n; ++s) {
        PathSeq cur;
        // identity path first
        rd.paths_[std::size_t(s)][std::size_t(s)].push_back({});
        std::vector<std::pair<int, std::size_t>> dfs{{s, 0}};
        while (!dfs.empty()) {
            auto& [v, ei] = dfs.back();
            if (ei < rd.outgoing_[std::size_t(v)].size()) {
                int ai = rd.outgoing_[std::size_t(v)][ei++];
                int w = *q.vertex_index(q.arrows()[std::size_t(ai)].tgt);
                cur.push_back(ai);
                rd.paths_[std::size_t(s)][std::size_t(w)].push_back(cur);
                dfs.emplace_back(w, 0);
            } else {
                dfs.pop_back();
                if (!cur.empty()) cur.pop_back();
            }
        }
    }
    return rd;
}

QuiverCtxPtr make_quiver_ctx(Quiver q) {
    ReedyData rd = ReedyData::build(q);
    return std::make_shared<const QuiverCtx>(QuiverCtx{std::move(q), std::move(rd)});
}

QuiverCtxPtr make_quiver_ctx_with_degree(Quiver q, std::vector<int> degree) {
    ReedyData rd = ReedyData::build_with_degree(q, std::move(degree));
    // strict increase along arrows
    for (const auto& a : q.arrows()) {
        int s = *q.vertex_index(a.src), t = *q.vertex_index(a.tgt);
        if (rd.degree()[std::size_t(s)] >= rd.degree()[std::size_t(t)])
            throw Error(ErrorKind::ValidationError,
                        "degree does not increase along arrow " + a.name);
    }
    return std::make_shared<const QuiverCtx>(QuiverCtx{std::move(q), std::move(rd)});
}

} // namespace qgp
