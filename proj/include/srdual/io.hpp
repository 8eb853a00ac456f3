#ifndef SRDUAL_IO_HPP
#define SRDUAL_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "srdual/complex.hpp"
#include "srdual/dual_graph.hpp"

namespace srdual {

/// Facet files:
///
///     # comment
///     vertices: A B C D      (optional, must precede the facets)
///     A B C
///     B C D
///
/// Each body line is one facet. Without a header, names are registered in
/// order of first appearance. In letters mode every non-blank character of
/// a body line is a vertex name, so "ABC" reads as A B C.
struct ParseOptions {
    bool letters = false;
};

struct ParsedComplex {
    SimplicialComplex complex;
    std::vector<std::string> warnings;
};

/// Throws ParseError (with a line number), VertexOutOfRange, EmptyInput,
/// IsolatedVertex.
ParsedComplex parse_facet_file(std::string_view text, const ParseOptions& options = {});

/// Reads and parses a file; an unreadable file is a ParseError.
ParsedComplex read_facet_file(const std::string& path, const ParseOptions& options = {});

/// Header line plus one facet per line in canonical order. Unnamed vertices
/// are written as their indices.
std::string serialize(const SimplicialComplex& cx);

enum class GraphFormat { Dot, Json };

/// Deterministic text in canonical node order.
std::string export_graph(const DualGraph& g, GraphFormat format,
                         LabelForm labels = LabelForm::Facet);

/// Rebuilds a graph from export_graph(..., GraphFormat::Json, ...). The edge
/// list must agree with the one implied by the node labels. Throws ParseError.
DualGraph import_graph_json(std::string_view text);

}  // namespace srdual

#endif
