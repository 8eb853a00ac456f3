// Command-line front end. Exit codes: 0 success or property holds,
// 1 property fails, 2 usage or input error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "srdual/constructions.hpp"
#include "srdual/dual_graph.hpp"
#include "srdual/error.hpp"
#include "srdual/glue.hpp"
#include "srdual/io.hpp"
#include "srdual/search.hpp"
#include "srdual/serre.hpp"

using namespace srdual;
using nlohmann::json;

namespace {

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kUsage = 2;

struct Globals {
    bool json = false;
    bool letters = false;
};

SimplicialComplex load(const std::string& path, const Globals& g) {
    ParsedComplex parsed = read_facet_file(path, ParseOptions{g.letters});
    for (const auto& w : parsed.warnings) std::cerr << "warning: " << path << ": " << w << "\n";
    return parsed.complex;
}

// A facet given on the command line: letters mode reads characters,
// otherwise names are separated by commas or spaces.
VertexSet facet_arg(const SimplicialComplex& cx, const std::string& text, const Globals& g) {
    std::vector<std::string> names;
    if (g.letters) {
        for (char c : text)
            if (c != ' ' && c != ',') names.emplace_back(1, c);
    } else {
        std::string cleaned = text;
        for (char& c : cleaned)
            if (c == ',') c = ' ';
        std::istringstream is(cleaned);
        std::string tok;
        while (is >> tok) names.push_back(tok);
    }
    VertexSet s;
    for (const auto& name : names) {
        auto v = cx.vertex_by_name(name);
        if (!v) throw Error(ErrorCode::UnknownNode, "no vertex named '" + name + "'");
        s.insert(*v);
    }
    return s;
}

void emit(const Globals& g, const json& j, const std::string& text) {
    if (g.json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

json witness_json(const SimplicialComplex& cx, const SeparationWitness& w) {
    return {{"u", cx.label(w.u)}, {"v", cx.label(w.v)}, {"separator", cx.label(w.separator)}};
}

int cmd_check(const Globals& g, const std::string& file, const std::string& property,
              const std::optional<unsigned>& field) {
    const SimplicialComplex cx = load(file, g);
    json j{{"property", property}};
    std::ostringstream text;
    bool holds = false;
    std::string reason;

    if (property == "pure") {
        holds = cx.is_pure();
    } else if (!cx.is_pure()) {
        reason = "not pure";
    } else if (property == "connected") {
        holds = diameter(build_dual_graph(cx)).has_value();
    } else if (property == "locally-connected" || property == "s2") {
        const S2Verdict v = property == "s2" ? is_s2(cx) : is_locally_connected(cx);
        holds = v.holds;
        if (v.witness) {
            j["witness"] = witness_json(cx, *v.witness);
            reason = "facets " + cx.label(v.witness->u) + " and " + cx.label(v.witness->v) +
                     " are not joined through facets containing " + cx.label(v.witness->separator);
        }
    } else if (property == "buchsbaum") {
        if (field) {
            if (*field != 0 && *field != 2) throw CLI::ValidationError("--field", "must be 0 or 2");
            holds = is_buchsbaum(cx, Field{*field});
            j["field"] = to_string(Field{*field});
        } else {
            const BuchsbaumReport r = buchsbaum_report(cx);
            holds = r.gf2 && r.rationals;
            j["gf2"] = r.gf2;
            j["rationals"] = r.rationals;
            if (!r.agree()) reason = "GF(2) and QQ disagree";
        }
    }
    j["holds"] = holds;
    if (!reason.empty()) j["reason"] = reason;
    text << property << ": " << (holds ? "holds" : "fails") << "\n";
    if (!reason.empty()) text << "reason: " << reason << "\n";
    emit(g, j, text.str());
    return holds ? kHolds : kFails;
}

int cmd_diameter(const Globals& g, const std::string& file, const std::vector<std::string>& pair,
                 bool want_path) {
    const SimplicialComplex cx = load(file, g);
    const DualGraph dg = build_dual_graph(cx);
    json j;
    std::ostringstream text;
    std::optional<std::pair<VertexSet, VertexSet>> ends;
    if (!pair.empty()) {
        ends.emplace(facet_arg(cx, pair[0], g), facet_arg(cx, pair[1], g));
        const Distance dist = distance_pair(dg, ends->first, ends->second);
        j["distance"] = dist ? json(*dist) : json("unbounded");
        text << "distance: " << to_string(dist) << "\n";
    } else {
        const Distance diam = diameter(dg);
        j["diameter"] = diam ? json(*diam) : json("unbounded");
        text << "diameter: " << to_string(diam) << "\n";
        if (want_path && diam) {
            // First pair (in node order) realizing the diameter.
            for (std::size_t s = 0; s < dg.size() && !ends; ++s) {
                const auto dist = dg.distances_from(s);
                for (std::size_t t = s + 1; t < dg.size(); ++t)
                    if (dist[t] == diam) {
                        ends.emplace(dg.node(s), dg.node(t));
                        break;
                    }
            }
        }
    }
    if (want_path && ends) {
        const auto path = shortest_path(dg, ends->first, ends->second);
        if (path) {
            std::string line;
            json labels = json::array();
            for (std::size_t i : *path) {
                line += (line.empty() ? "" : " ") + dg.label(i);
                labels.push_back(dg.label(i));
            }
            j["path"] = labels;
            text << "path: " << line << "\n";
        }
    }
    emit(g, j, text.str());
    return kHolds;
}

int cmd_dual_graph(const Globals& g, const std::string& file, const std::string& format,
                   const std::string& labels) {
    const SimplicialComplex cx = load(file, g);
    const DualGraph dg = build_dual_graph(cx);
    const LabelForm form = labels == "complement" ? LabelForm::Complement : LabelForm::Facet;
    std::cout << export_graph(dg, format == "json" ? GraphFormat::Json : GraphFormat::Dot, form);
    return kHolds;
}

int cmd_alexander(const Globals& g, const std::string& file) {
    const SimplicialComplex cx = load(file, g);
    const MonomialIdeal ideal = alexander_dual_ideal(cx);
    json gens = json::array();
    std::ostringstream text;
    text << "generators: " << ideal.generators().size() << "\n";
    if (auto t = ideal.degree()) text << "degree: " << *t << "\n";
    if (ideal.is_unit()) text << "note: unit ideal (a facet is the whole vertex set)\n";
    for (const auto& s : ideal.generators()) {
        text << ideal.monomial(s) << "\n";
        gens.push_back(ideal.monomial(s));
    }
    json j{{"generators", gens}, {"unit", ideal.is_unit()}};
    if (auto t = ideal.degree()) j["degree"] = *t;
    j["linear_first_syzygies"] = linear_syzygy_check(ideal);
    text << "linear first syzygies: " << (linear_syzygy_check(ideal) ? "yes" : "no") << "\n";
    emit(g, j, text.str());
    return kHolds;
}

void write_output(const std::string& path, const std::string& body) {
    if (path.empty() || path == "-") {
        std::cout << body;
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
    out << body;
}

int cmd_glue(const Globals& g, const std::string& fa, const std::string& fb,
             const std::string& identify, unsigned level, const std::string& out) {
    const SimplicialComplex left = load(fa, g);
    const SimplicialComplex right = load(fb, g);
    GlueSpec spec{left, right, {}, level};
    std::istringstream items(identify);
    std::string item;
    while (std::getline(items, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--identify", "expected a=b pairs, got '" + item + "'");
        const auto a = left.vertex_by_name(item.substr(0, eq));
        const auto b = right.vertex_by_name(item.substr(eq + 1));
        if (!a || !b) throw Error(ErrorCode::VertexOutOfRange, "unknown vertex in '" + item + "'");
        spec.identify.emplace_back(*b, *a);
    }
    const GlueResult r = glue(spec);
    const Distance diam = diameter(build_dual_graph(r.complex));
    const bool s2 = r.verdict && r.verdict->holds;

    std::ostringstream summary;
    summary << "# facets: " << r.complex.facet_count() << "\n"
            << "# vertices: " << r.complex.universe_size() << "\n"
            << "# diameter: " << to_string(diam) << "\n"
            << "# s2: " << (s2 ? "holds" : "fails") << "\n";
    if (g.json) {
        json j{{"facets", r.complex.facet_count()},
               {"vertices", r.complex.universe_size()},
               {"diameter", diam ? json(*diam) : json("unbounded")},
               {"s2", s2},
               {"complex", serialize(r.complex)}};
        std::cout << j.dump(2) << "\n";
        if (!out.empty() && out != "-") write_output(out, serialize(r.complex));
    } else if (out.empty() || out == "-") {
        std::cout << summary.str() << serialize(r.complex);
    } else {
        write_output(out, serialize(r.complex));
        std::cout << summary.str();
    }
    return kHolds;
}

int cmd_construct(const Globals& g, const std::string& family, const FamilyId& params,
                  const std::string& out) {
    FamilyId id = params;
    id.family = parse_family(family);
    const SimplicialComplex cx = build(id);
    const std::size_t diam = expected_diameter(id);
    const std::string body = "# " + describe(id) + ": diameter " + std::to_string(diam) + "\n" +
                             serialize(cx);
    if (g.json) {
        json j{{"family", describe(id)},
               {"facets", cx.facet_count()},
               {"vertices", cx.universe_size()},
               {"diameter", diam},
               {"complex", serialize(cx)}};
        std::cout << j.dump(2) << "\n";
        if (!out.empty() && out != "-") write_output(out, body);
        return kHolds;
    }
    write_output(out, body);
    if (!out.empty() && out != "-")
        std::cout << describe(id) << ": " << cx.facet_count() << " facets on "
                  << cx.universe_size() << " vertices, diameter " << diam << "\n";
    return kHolds;
}

int cmd_search(const Globals& g, std::size_t d, std::size_t n, const SearchOptions& base,
               std::optional<double> seconds) {
    SearchOptions opt = base;
    if (seconds) opt.time_limit = std::chrono::duration<double>(*seconds);
    opt.log = [](const std::string& line) { std::cerr << "log: " << line << "\n"; };
    const SearchResult r = enumerate_mu(d, n, opt);
    std::ostringstream text;
    text << "mu(" << d << "," << n << "): " << r.mu << "\n"
         << "exhaustive: " << (r.exhaustive ? "yes" : "no") << "\n"
         << "nodes: " << r.nodes_explored << "\n"
         << "elapsed: " << r.elapsed.count() << " s\n";
    if (r.budget_exhausted) text << "note: budget exhausted\n";
    if (r.bound_reached) text << "note: stopped at the upper bound\n";
    if (!r.canonical_exact) text << "note: canonical labels were not exact\n";
    json j{{"d", d},           {"n", n},
           {"mu", r.mu},       {"exhaustive", r.exhaustive},
           {"nodes", r.nodes_explored}, {"elapsed_seconds", r.elapsed.count()},
           {"budget_exhausted", r.budget_exhausted}};
    if (r.witness) {
        text << "witness:\n" << serialize(*r.witness);
        j["witness"] = serialize(*r.witness);
    }
    emit(g, j, text.str());
    return kHolds;
}

int cmd_bounds(const Globals& g, std::size_t d, std::size_t n) {
    const UpperBounds b = bounds(d, n);
    json j{{"d", d}, {"n", n}, {"best", b.best}};
    std::ostringstream text;
    for (const auto& [name, v] : b.entries()) {
        j["bounds"][name] = v;
        text << name << ": " << v << "\n";
    }
    text << "best: " << b.best << "\n";
    emit(g, j, text.str());
    return kHolds;
}

int cmd_verify_table(const Globals& g) {
    const auto start = std::chrono::steady_clock::now();
    const auto cells = verify_table1();
    bool all = true;
    json rows = json::array();
    std::ostringstream text;
    for (const auto& c : cells) {
        all = all && c.ok();
        text << "d=" << c.d << " n=" << c.n << " printed=" << c.printed
             << " expected=" << c.expected << " witness=" << to_string(c.measured)
             << " s2=" << (c.s2 ? "yes" : "no") << " " << (c.ok() ? "ok" : "MISMATCH");
        if (!c.note.empty()) text << " (" << c.note << ")";
        text << "\n";
        rows.push_back({{"d", c.d},
                        {"n", c.n},
                        {"printed", c.printed},
                        {"expected", c.expected},
                        {"measured", c.measured ? json(*c.measured) : json("unbounded")},
                        {"s2", c.s2},
                        {"ok", c.ok()}});
    }
    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    text << (all ? "all cells reproduced" : "some cells failed") << " in " << took.count() << " s\n";
    emit(g, json{{"cells", rows}, {"ok", all}, {"seconds", took.count()}}, text.str());
    return all ? kHolds : kFails;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dual graphs of (S2) Stanley-Reisner rings"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_flag("--json", g.json, "Print a JSON envelope instead of plain text");
    app.add_flag("--letters", g.letters, "Read every character of a facet line as a vertex");

    std::string file, file_b, property, format = "dot", labels = "facet", identify, out, family;
    std::optional<unsigned> field;
    std::vector<std::string> pair;
    bool want_path = false;
    unsigned level = 2;
    FamilyId params;
    std::size_t d = 0, n = 0;
    SearchOptions search_opt;
    std::optional<std::uint64_t> budget_nodes;
    std::optional<double> seconds;

    auto* check = app.add_subcommand("check", "Test a property of a complex");
    check->add_option("file", file)->required();
    check->add_option("--property", property)
        ->required()
        ->check(CLI::IsMember({"pure", "connected", "locally-connected", "s2", "buchsbaum"}));
    check->add_option("--field", field, "Homology field characteristic for buchsbaum (0 or 2)");

    auto* diam = app.add_subcommand("diameter", "Dual graph diameter or a pair distance");
    diam->add_option("file", file)->required();
    diam->add_option("--pair", pair, "Two facets")->expected(2);
    diam->add_flag("--path", want_path, "Also print a shortest path");

    auto* graph = app.add_subcommand("dual-graph", "Export the dual graph");
    graph->add_option("file", file)->required();
    graph->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));
    graph->add_option("--labels", labels)->check(CLI::IsMember({"facet", "complement"}));

    auto* alex = app.add_subcommand("alexander-dual", "Generators of the Alexander dual ideal");
    alex->add_option("file", file)->required();

    auto* gl = app.add_subcommand("glue", "Glue two complexes along identified vertices");
    gl->add_option("fileA", file)->required();
    gl->add_option("fileB", file_b)->required();
    gl->add_option("--identify", identify, "a=b,... with a in fileA and b in fileB")->required();
    gl->add_option("--level", level, "Target Serre level (1 to 3)");
    gl->add_option("-o,--output", out, "Write the glued complex here");

    auto* cons = app.add_subcommand("construct", "Build a named complex");
    cons->add_option("family", family)->required();
    cons->add_option("--k", params.k);
    cons->add_option("--j", params.j);
    cons->add_option("--d", params.d);
    cons->add_option("--n", params.n);
    cons->add_option("-o,--output", out, "Write the complex here (default stdout)");

    auto* search = app.add_subcommand("search-mu", "Exhaustive search for mu(d,n)");
    search->add_option("--d", d)->required();
    search->add_option("--n", n)->required();
    search->add_option("--threads", search_opt.threads);
    search->add_option("--budget-nodes", budget_nodes);
    search->add_option("--time-limit", seconds, "Seconds");
    search->add_option("--checkpoint", search_opt.checkpoint_path);
    search->add_flag("--stop-at-bound", search_opt.stop_at_bound,
                     "Stop once the incumbent meets the best upper bound");

    auto* bnd = app.add_subcommand("bounds", "Evaluate the upper bounds on mu(d,n)");
    bnd->add_option("--d", d)->required();
    bnd->add_option("--n", n)->required();

    auto* table = app.add_subcommand("verify-table", "Rebuild and measure every table witness");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kHolds : kUsage;
    }

    try {
        if (check->parsed()) return cmd_check(g, file, property, field);
        if (diam->parsed()) return cmd_diameter(g, file, pair, want_path);
        if (graph->parsed()) return cmd_dual_graph(g, file, format, labels);
        if (alex->parsed()) return cmd_alexander(g, file);
        if (gl->parsed()) return cmd_glue(g, file, file_b, identify, level, out);
        if (cons->parsed()) return cmd_construct(g, family, params, out);
        if (search->parsed()) {
            search_opt.max_nodes = budget_nodes;
            return cmd_search(g, d, n, search_opt, seconds);
        }
        if (bnd->parsed()) return cmd_bounds(g, d, n);
        if (table->parsed()) return cmd_verify_table(g);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
