#include "srdual/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "json.hpp"

#include "srdual/error.hpp"

namespace srdual {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> tokens(const std::string& line, bool letters) {
    std::vector<std::string> out;
    if (letters) {
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) out.emplace_back(1, c);
        return out;
    }
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

Error parse_error(std::size_t line, const std::string& what) {
    return Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

}  // namespace

ParsedComplex parse_facet_file(std::string_view text, const ParseOptions& options) {
    std::vector<std::string> names;
    std::unordered_map<std::string, Vertex> index;
    bool header = false;
    std::vector<VertexSet> facets;
    std::vector<std::size_t> facet_lines;

    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto hash = raw.find('#');
        const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;

        if (line.rfind("vertices:", 0) == 0) {
            if (header) throw parse_error(line_no, "second vertices header");
            if (!facets.empty()) throw parse_error(line_no, "vertices header after facets");
            header = true;
            for (const auto& name : tokens(line.substr(9), false)) {
                if (index.count(name)) throw parse_error(line_no, "vertex '" + name + "' listed twice");
                if (names.size() == VertexSet::kMaxVertices)
                    throw Error(ErrorCode::VertexOutOfRange,
                                "line " + std::to_string(line_no) + ": more than 128 vertices");
                index.emplace(name, static_cast<Vertex>(names.size()));
                names.push_back(name);
            }
            if (names.empty()) throw parse_error(line_no, "empty vertices header");
            continue;
        }

        VertexSet facet;
        for (const auto& name : tokens(line, options.letters)) {
            auto it = index.find(name);
            if (it == index.end()) {
                if (header)
                    throw Error(ErrorCode::VertexOutOfRange, "line " + std::to_string(line_no) +
                                                                 ": vertex '" + name +
                                                                 "' not in the header");
                if (names.size() == VertexSet::kMaxVertices)
                    throw Error(ErrorCode::VertexOutOfRange,
                                "line " + std::to_string(line_no) + ": more than 128 vertices");
                it = index.emplace(name, static_cast<Vertex>(names.size())).first;
                names.push_back(name);
            }
            facet.insert(it->second);
        }
        facets.push_back(facet);
        facet_lines.push_back(line_no);
    }
    if (facets.empty()) throw Error(ErrorCode::EmptyInput, "no facets in input");

    std::vector<std::string> warnings;
    for (std::size_t i = 0; i < facets.size(); ++i) {
        for (std::size_t j = 0; j < facets.size(); ++j) {
            const bool dup = facets[i] == facets[j] && j < i;
            const bool inside = facets[i] != facets[j] && facets[i].is_subset_of(facets[j]);
            if (dup || inside) {
                warnings.push_back("line " + std::to_string(facet_lines[i]) + ": " +
                                   (dup ? "duplicate of line " : "contained in the facet on line ") +
                                   std::to_string(facet_lines[j]) + ", dropped");
                break;
            }
        }
    }
    const std::size_t n = names.size();
    return {SimplicialComplex::from_facets(std::move(facets), n, std::move(names)),
            std::move(warnings)};
}

ParsedComplex read_facet_file(const std::string& path, const ParseOptions& options) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_facet_file(buf.str(), options);
}

std::string serialize(const SimplicialComplex& cx) {
    std::ostringstream out;
    out << "vertices:";
    for (Vertex v = 0; v < cx.universe_size(); ++v) out << ' ' << cx.vertex_name(v);
    out << '\n';
    for (const auto& f : cx.facets()) {
        bool first = true;
        f.for_each([&](Vertex v) {
            out << (first ? "" : " ") << cx.vertex_name(v);
            first = false;
        });
        out << '\n';
    }
    return out.str();
}

std::string export_graph(const DualGraph& g, GraphFormat format, LabelForm labels) {
    if (format == GraphFormat::Dot) {
        std::ostringstream out;
        out << "graph dual {\n";
        for (std::size_t i = 0; i < g.size(); ++i)
            out << "  n" << i << " [label=\"" << g.label(i, labels) << "\"];\n";
        for (const auto& [a, b] : g.edges()) out << "  n" << a << " -- n" << b << ";\n";
        out << "}\n";
        return out.str();
    }
    nlohmann::json j;
    j["d"] = g.facet_size();
    j["n"] = g.universe_size();
    j["labels"] = labels == LabelForm::Facet ? "facet" : "complement";
    j["names"] = g.names();
    j["nodes"] = nlohmann::json::array();
    for (std::size_t i = 0; i < g.size(); ++i)
        j["nodes"].push_back(
            {{"id", i}, {"label", g.label(i, labels)}, {"facet", g.node(i).members()}});
    j["edges"] = nlohmann::json::array();
    for (const auto& [a, b] : g.edges()) j["edges"].push_back({a, b});
    return j.dump(2) + "\n";
}

DualGraph import_graph_json(std::string_view text) {
    try {
        const auto j = nlohmann::json::parse(text);
        std::vector<VertexSet> nodes;
        for (const auto& node : j.at("nodes")) {
            VertexSet s;
            for (Vertex v : node.at("facet").get<std::vector<Vertex>>()) {
                if (v >= VertexSet::kMaxVertices)
                    throw Error(ErrorCode::ParseError, "vertex index out of range");
                s.insert(v);
            }
            nodes.push_back(s);
        }
        DualGraph g(std::move(nodes), j.at("d").get<std::size_t>(), j.at("n").get<std::size_t>(),
                    j.value("names", std::vector<std::string>{}));
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (const auto& e : j.at("edges")) {
            auto a = e.at(0).get<std::size_t>();
            auto b = e.at(1).get<std::size_t>();
            edges.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(edges.begin(), edges.end());
        if (edges != g.edges())
            throw Error(ErrorCode::ParseError, "edge list disagrees with the node labels");
        return g;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("bad graph JSON: ") + e.what());
    }
}

}  // namespace srdual
