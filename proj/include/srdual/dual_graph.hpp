#ifndef SRDUAL_DUAL_GRAPH_HPP
#define SRDUAL_DUAL_GRAPH_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "srdual/complex.hpp"
#include "srdual/vertex_set.hpp"

namespace srdual {

/// Hop count in a dual graph. nullopt means Unbounded: the two nodes lie in
/// different components.
using Distance = std::optional<std::size_t>;

std::string to_string(const Distance& d);

enum class LabelForm {
    Facet,       // facet-ridge labels
    Complement,  // minimal-prime (complement) labels
};

/// Facet-ridge graph of a pure complex: nodes are facets in canonical order,
/// i ~ j exactly when |F_i ∩ F_j| = d - 1.
class DualGraph {
public:
    /// Builds adjacency from the node labels. Labels must all have
    /// cardinality d; names (optional) label universe vertices for printing.
    DualGraph(std::vector<VertexSet> nodes, std::size_t d, std::size_t universe_size,
              std::vector<std::string> names = {});

    std::size_t size() const { return nodes_.size(); }
    bool empty() const { return nodes_.empty(); }
    std::size_t edge_count() const { return edge_count_; }
    std::size_t facet_size() const { return d_; }
    std::size_t universe_size() const { return n_; }

    const VertexSet& node(std::size_t i) const { return nodes_[i]; }
    const std::vector<VertexSet>& nodes() const { return nodes_; }
    const std::vector<std::size_t>& neighbors(std::size_t i) const { return adj_[i]; }
    bool adjacent(std::size_t i, std::size_t j) const;
    std::optional<std::size_t> index_of(const VertexSet& facet) const;

    /// Edges (i, j) with i < j, sorted.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    /// BFS hop counts from `source`; nullopt for unreachable nodes.
    std::vector<Distance> distances_from(std::size_t source) const;

    const std::vector<std::string>& names() const { return names_; }
    std::string label(std::size_t i, LabelForm form = LabelForm::Facet) const;

private:
    std::vector<VertexSet> nodes_;
    std::vector<std::vector<std::size_t>> adj_;
    std::size_t d_;
    std::size_t n_;
    std::size_t edge_count_ = 0;
    std::vector<std::string> names_;
};

/// Throws NotPure, DimensionTooSmall (d < 2).
DualGraph build_dual_graph(const SimplicialComplex& cx);

/// Largest pairwise distance; Unbounded iff disconnected. Throws EmptyGraph.
Distance diameter(const DualGraph& g);

/// Throws UnknownNode when either label is not a node.
Distance distance_pair(const DualGraph& g, const VertexSet& a, const VertexSet& b);

/// A shortest path as node indices, a first and b last. Among shortest
/// paths, each node's predecessor is the lowest-indexed one discovered by
/// BFS from a. nullopt when b is unreachable. Throws UnknownNode.
std::optional<std::vector<std::size_t>> shortest_path(const DualGraph& g, const VertexSet& a,
                                                      const VertexSet& b);

/// Subgraph on the facets containing s (s = ∅ gives the whole graph).
DualGraph induced_on_superfacets(const DualGraph& g, const VertexSet& s);

/// Connected component id per node, numbered by first node.
std::vector<std::size_t> component_ids(const DualGraph& g);

}  // namespace srdual

#endif
