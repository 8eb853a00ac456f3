#ifndef SRDUAL_GLUE_HPP
#define SRDUAL_GLUE_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "srdual/complex.hpp"
#include "srdual/serre.hpp"
#include "srdual/vertex_set.hpp"

namespace srdual {

struct GlueSpec {
    SimplicialComplex left;
    SimplicialComplex right;
    /// (right vertex, left vertex) pairs; must be injective both ways.
    std::vector<std::pair<Vertex, Vertex>> identify;
    /// Target Serre level. Levels 1 and 2 need no overlap check, level 3
    /// needs an (S2) overlap, higher levels are unsupported.
    unsigned level = 2;
};

struct GlueResult {
    SimplicialComplex complex;
    /// right_map[v] is the index in `complex` of right vertex v.
    std::vector<Vertex> right_map;
    /// Maximal faces of the intersection complex, in left labels.
    std::vector<VertexSet> overlap;
    /// (S2) verdict of the result; nullopt when d < 2.
    std::optional<S2Verdict> verdict;
    /// Both inputs are (S2) (again nullopt when d < 2).
    std::optional<bool> inputs_s2;
};

/// Union of left and the relabeled right complex. Unidentified right
/// vertices get fresh indices n_left, n_left + 1, ... in ascending order.
/// Throws DimensionMismatch, NotPure, NotABijection, VertexOutOfRange,
/// OverlapNotPure, OverlapTooSmall, OverlapSerreFailure, UnsupportedLevel.
GlueResult glue(const GlueSpec& spec);

/// Glues right_facet of `right` onto left_facet of `left`. Tries the vertex
/// bijections in lexicographic order and keeps the first one that creates no
/// ridge between a left facet and a new right facet; falls back to the first
/// bijection. Throws NotAFacet plus everything glue throws.
GlueResult glue_along_facet(const SimplicialComplex& left, const VertexSet& left_facet,
                            const SimplicialComplex& right, const VertexSet& right_facet,
                            unsigned level = 2);

/// Appends `steps` facets after `start` as a rolling window: each new facet
/// drops the oldest vertex of the previous one and adds a fresh vertex.
///
/// `drop_order` lists the vertices of `start` in the order they leave the
/// window. By default the first to leave is the lowest vertex v whose ridge
/// start \ {v} lies in no other facet, followed by the rest ascending.
/// Throws NotAFacet, BadParams (drop_order not a listing of start).
SimplicialComplex append_facet_chain(const SimplicialComplex& cx, const VertexSet& start,
                                     std::size_t steps,
                                     const std::vector<Vertex>& drop_order = {});

/// The facets appended by append_facet_chain end at this facet.
VertexSet chain_end(const SimplicialComplex& cx, const VertexSet& start, std::size_t steps,
                    const std::vector<Vertex>& drop_order = {});

}  // namespace srdual

#endif
