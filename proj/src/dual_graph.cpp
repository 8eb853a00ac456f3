#include "srdual/dual_graph.hpp"

#include <algorithm>
#include <deque>

#include "srdual/error.hpp"

namespace srdual {

std::string to_string(const Distance& d) { return d ? std::to_string(*d) : "unbounded"; }

DualGraph::DualGraph(std::vector<VertexSet> nodes, std::size_t d, std::size_t universe_size,
                     std::vector<std::string> names)
    : nodes_(std::move(nodes)), adj_(nodes_.size()), d_(d), n_(universe_size),
      names_(std::move(names)) {
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (nodes_[i].size() != d_)
            throw Error(ErrorCode::NotPure, "dual graph node of wrong cardinality");
        for (std::size_t j = i + 1; j < nodes_.size(); ++j) {
            if (intersection_size(nodes_[i], nodes_[j]) + 1 == d_) {
                adj_[i].push_back(j);
                adj_[j].push_back(i);
                ++edge_count_;
            }
        }
    }
    for (auto& row : adj_) std::sort(row.begin(), row.end());
}

bool DualGraph::adjacent(std::size_t i, std::size_t j) const {
    return std::binary_search(adj_[i].begin(), adj_[i].end(), j);
}

std::optional<std::size_t> DualGraph::index_of(const VertexSet& facet) const {
    auto it = std::find(nodes_.begin(), nodes_.end(), facet);
    if (it == nodes_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - nodes_.begin());
}

std::vector<std::pair<std::size_t, std::size_t>> DualGraph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(edge_count_);
    for (std::size_t i = 0; i < adj_.size(); ++i)
        for (std::size_t j : adj_[i])
            if (i < j) out.emplace_back(i, j);
    return out;
}

std::vector<Distance> DualGraph::distances_from(std::size_t source) const {
    std::vector<Distance> dist(nodes_.size());
    std::deque<std::size_t> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        const std::size_t u = queue.front();
        queue.pop_front();
        for (std::size_t w : adj_[u]) {
            if (!dist[w]) {
                dist[w] = *dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::string DualGraph::label(std::size_t i, LabelForm form) const {
    const VertexSet s = form == LabelForm::Facet ? nodes_[i] : nodes_[i].complement(n_);
    const bool compact = !names_.empty() &&
                         std::all_of(names_.begin(), names_.end(),
                                     [](const std::string& nm) { return nm.size() == 1; });
    std::string out;
    s.for_each([&](Vertex v) {
        if (!compact && !out.empty()) out += ' ';
        out += v < names_.size() ? names_[v] : std::to_string(v);
    });
    return out.empty() ? "{}" : out;
}

DualGraph build_dual_graph(const SimplicialComplex& cx) {
    const std::size_t d = cx.pure_facet_size();
    if (d < 2) throw Error(ErrorCode::DimensionTooSmall, "dual graph needs facets of size >= 2");
    return DualGraph(cx.facets(), d, cx.universe_size(), cx.names());
}

Distance diameter(const DualGraph& g) {
    if (g.empty()) throw Error(ErrorCode::EmptyGraph, "diameter of an empty graph");
    std::size_t best = 0;
    for (std::size_t s = 0; s < g.size(); ++s) {
        for (const Distance& d : g.distances_from(s)) {
            if (!d) return std::nullopt;
            best = std::max(best, *d);
        }
    }
    return best;
}

namespace {

std::size_t require_node(const DualGraph& g, const VertexSet& s) {
    auto idx = g.index_of(s);
    if (!idx) throw Error(ErrorCode::UnknownNode, "not a node of the dual graph");
    return *idx;
}

}  // namespace

Distance distance_pair(const DualGraph& g, const VertexSet& a, const VertexSet& b) {
    const std::size_t i = require_node(g, a);
    const std::size_t j = require_node(g, b);
    return g.distances_from(i)[j];
}

std::optional<std::vector<std::size_t>> shortest_path(const DualGraph& g, const VertexSet& a,
                                                      const VertexSet& b) {
    const std::size_t src = require_node(g, a);
    const std::size_t dst = require_node(g, b);
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::vector<std::size_t> parent(g.size(), kNone);
    std::vector<bool> seen(g.size(), false);
    std::deque<std::size_t> queue{src};
    seen[src] = true;
    while (!queue.empty()) {
        const std::size_t u = queue.front();
        queue.pop_front();
        if (u == dst) break;
        for (std::size_t w : g.neighbors(u)) {
            if (!seen[w]) {
                seen[w] = true;
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    if (!seen[dst]) return std::nullopt;
    std::vector<std::size_t> path{dst};
    while (path.back() != src) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

DualGraph induced_on_superfacets(const DualGraph& g, const VertexSet& s) {
    std::vector<VertexSet> kept;
    for (const auto& f : g.nodes())
        if (s.is_subset_of(f)) kept.push_back(f);
    return DualGraph(std::move(kept), g.facet_size(), g.universe_size(), g.names());
}

std::vector<std::size_t> component_ids(const DualGraph& g) {
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::vector<std::size_t> comp(g.size(), kNone);
    std::size_t next = 0;
    for (std::size_t s = 0; s < g.size(); ++s) {
        if (comp[s] != kNone) continue;
        std::vector<std::size_t> stack{s};
        comp[s] = next;
        while (!stack.empty()) {
            const std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t w : g.neighbors(u)) {
                if (comp[w] == kNone) {
                    comp[w] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    return comp;
}

}  // namespace srdual
