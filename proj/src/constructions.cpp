#include "srdual/constructions.hpp"

#include <array>
#include <stdexcept>

#include "srdual/dual_graph.hpp"
#include "srdual/error.hpp"
#include "srdual/glue.hpp"
#include "srdual/serre.hpp"

namespace srdual {

namespace {

struct FamilyInfo {
    Family family;
    std::string_view name;
};

constexpr std::array<FamilyInfo, 13> kFamilies{{
    {Family::FigA1, "fig_a1"},
    {Family::FigA2, "fig_a2"},
    {Family::FigA4, "fig_a4"},
    {Family::FigA4Ehi, "fig_a4_ehi"},
    {Family::FigA5, "fig_a5"},
    {Family::G2, "g2"},
    {Family::Dim4, "dim4"},
    {Family::Dim4Efgi, "dim4_efgi"},
    {Family::Path2, "path2"},
    {Family::GluedD4, "glued_d4"},
    {Family::GluedD3, "glued_d3"},
    {Family::GluedD3G0, "glued_d3_g0"},
    {Family::Table1Witness, "table1_witness"},
}};

// Facet lists read off the figures, letters mapped A -> 0, B -> 1, ...
const std::vector<std::string> kFigA1{"AB", "BC", "CD", "DE"};
const std::vector<std::string> kFigA2{"CDG", "AEG", "CEG", "ADG", "ABD",
                                      "BCE", "ABC", "AEF", "CDF", "DEF"};
const std::vector<std::string> kFigA5{
    "ABC", "BCD", "ACD", "BDI", "CDJ", "ADH", "BEI", "CEJ", "AEH", "BEJ", "AEI", "CEH",
    "AFI", "CFH", "BFJ", "BFH", "CFI", "AFJ", "BGH", "CGI", "AGJ", "GHJ", "GHI", "HIJ"};
const std::vector<std::string> kDim4{"ABEG", "BDEG", "ACEG", "ACEF", "BDGH", "CDFH",
                                     "BDFH", "CDGH", "ACFH", "CDEF", "BCDE", "ABCD",
                                     "ABGH", "ABCH", "ABEF", "BEFH", "CEGH", "EFGH"};

VertexSet letters(std::string_view word) {
    VertexSet s;
    for (char c : word) s.insert(static_cast<Vertex>(c - 'A'));
    return s;
}

std::vector<Vertex> letter_order(std::string_view word) {
    std::vector<Vertex> out;
    for (char c : word) out.push_back(static_cast<Vertex>(c - 'A'));
    return out;
}

SimplicialComplex with_extra(const std::vector<std::string>& base, const std::string& facet) {
    auto facets = base;
    facets.push_back(facet);
    return SimplicialComplex::from_letters(facets);
}

SimplicialComplex fig_a2() { return SimplicialComplex::from_letters(kFigA2); }
SimplicialComplex fig_a4() { return with_extra(kFigA2, "DEH"); }
SimplicialComplex fig_a5() { return SimplicialComplex::from_letters(kFigA5); }
SimplicialComplex g2() { return with_extra(kFigA5, "IJK"); }
SimplicialComplex dim4() { return SimplicialComplex::from_letters(kDim4); }

SimplicialComplex path2(std::size_t n) {
    std::vector<VertexSet> facets{VertexSet{0, 1}, VertexSet{0, 2}};
    for (Vertex v = 2; v + 1 < n; ++v) facets.push_back(VertexSet{v, v + 1});
    return SimplicialComplex::from_facets(std::move(facets));
}

// A building block for the glued families: `start` is glued onto the
// previous block's end, and `end` lists the far facet's vertices in the
// order a trailing chain should drop them (empty order = default rule).
struct Block {
    SimplicialComplex cx;
    VertexSet start;
    std::vector<Vertex> end;
    bool ordered_end;
};

Block dim4_block() { return {dim4(), letters("ABCD"), letter_order("HEFG"), true}; }
Block g2_block() { return {g2(), letters("ABC"), letter_order("IJK"), false}; }
Block g1_block() { return {fig_a5(), letters("ABC"), letter_order("HIJ"), false}; }
Block g0_block() { return {fig_a4(), letters("ABC"), letter_order("DEH"), false}; }

SimplicialComplex chain_blocks(const std::vector<Block>& blocks, std::size_t tail) {
    SimplicialComplex cx = blocks.front().cx;
    std::vector<Vertex> end = blocks.front().end;
    for (std::size_t b = 1; b < blocks.size(); ++b) {
        VertexSet end_set;
        for (Vertex v : end) end_set.insert(v);
        const GlueResult r = glue_along_facet(cx, end_set, blocks[b].cx, blocks[b].start);
        cx = r.complex;
        end.clear();
        for (Vertex v : blocks[b].end) end.push_back(r.right_map[v]);
    }
    VertexSet end_set;
    for (Vertex v : end) end_set.insert(v);
    const bool ordered = blocks.back().ordered_end;
    return append_facet_chain(cx, end_set, tail, ordered ? end : std::vector<Vertex>{});
}

SimplicialComplex glued_d4(std::size_t k, std::size_t j) {
    return chain_blocks(std::vector<Block>(k, dim4_block()), j);
}

SimplicialComplex glued_d3(std::size_t k, std::size_t j) {
    std::vector<Block> blocks(k - 1, g2_block());
    blocks.push_back(g1_block());
    return chain_blocks(blocks, j);
}

SimplicialComplex glued_d3_g0(std::size_t k, std::size_t j) {
    std::vector<Block> blocks{g0_block()};
    for (std::size_t i = 1; i < k; ++i) blocks.push_back(g2_block());
    blocks.push_back(g1_block());
    return chain_blocks(blocks, j - 4);
}

// Witness for a cell of small codimension, valid for every d >= 2: a
// low-dimensional complex coned up to facet size d.
SimplicialComplex small_codim_witness(std::size_t d, std::size_t c) {
    SimplicialComplex base = path2(3);
    std::size_t base_d = 2;
    switch (c) {
    case 1: base = path2(3); break;
    case 2: base = path2(4); break;
    case 3: base = SimplicialComplex::from_letters(kFigA1); break;
    default: base = dim4(); base_d = 4; break;
    }
    return d == base_d ? base : cone(base, d - base_d);
}

SimplicialComplex table1_witness(std::size_t d, std::size_t n) {
    const std::size_t c = n - d;
    if (d == 2) return path2(n);
    if (d == 3) {
        switch (n) {
        case 4:
        case 5:
        case 6: return small_codim_witness(3, c);
        case 7: return fig_a2();
        case 8: return fig_a4();
        case 9: return append_facet_chain(fig_a4(), letters("DEH"), 1);
        default: return glued_d3(1, n - 10);
        }
    }
    if (d == 4 && n >= 8) {
        if (n == 8) return dim4();
        return append_facet_chain(dim4(), letters("EFGH"), n - 8, letter_order("HEFG"));
    }
    return small_codim_witness(d, c);
}

std::size_t table1_diameter(std::size_t d, std::size_t n) {
    const std::size_t c = n - d;
    if (d == 2) return n - 2;
    if (d == 3 && n >= 7) {
        static constexpr std::array<std::size_t, 4> kSmall{5, 6, 7, 9};
        return n <= 10 ? kSmall[n - 7] : n - 1;
    }
    if (d == 4 && n >= 8) return n == 8 ? 6 : n - 2;
    return c == 4 ? 6 : c;
}

}  // namespace

std::string_view family_name(Family f) {
    for (const auto& info : kFamilies)
        if (info.family == f) return info.name;
    return "unknown";
}

Family parse_family(std::string_view name) {
    for (const auto& info : kFamilies)
        if (info.name == name) return info.family;
    throw Error(ErrorCode::UnknownFamily, "no family named '" + std::string(name) + "'");
}

std::vector<Family> all_families() {
    std::vector<Family> out;
    for (const auto& info : kFamilies) out.push_back(info.family);
    return out;
}

std::string describe(const FamilyId& id) {
    std::string out(family_name(id.family));
    auto kv = [](const char* key, std::size_t v) { return std::string(key) + "=" + std::to_string(v); };
    switch (id.family) {
    case Family::Path2: return out + "(" + kv("n", id.n) + ")";
    case Family::GluedD4:
    case Family::GluedD3:
    case Family::GluedD3G0: return out + "(" + kv("k", id.k) + ", " + kv("j", id.j) + ")";
    case Family::Table1Witness: return out + "(" + kv("d", id.d) + ", " + kv("n", id.n) + ")";
    default: return out;
    }
}

bool has_table1_witness(std::size_t d, std::size_t n) {
    if (d < 2 || n <= d) return false;
    if (d <= 4) return true;
    return n - d <= 4;
}

void validate(const FamilyId& id) {
    auto bad = [&](const std::string& why) {
        throw Error(ErrorCode::BadParams, describe(id) + ": " + why);
    };
    // Keeps every family inside the 128-vertex universe.
    constexpr std::size_t kMaxParam = 12;
    switch (id.family) {
    case Family::Path2:
        if (id.n < 3 || id.n > VertexSet::kMaxVertices) bad("need 3 <= n <= 128");
        break;
    case Family::GluedD4:
    case Family::GluedD3:
        if (id.k < 1 || id.k > kMaxParam) bad("need 1 <= k <= 12");
        if (id.j > 64) bad("need j <= 64");
        break;
    case Family::GluedD3G0:
        if (id.k < 1 || id.k > kMaxParam) bad("need 1 <= k <= 12");
        if (id.j < 4 || id.j > 64) bad("need 4 <= j <= 64");
        break;
    case Family::Table1Witness:
        if (!has_table1_witness(id.d, id.n)) bad("no witness known for this cell");
        if (id.n > 64) bad("need n <= 64");
        break;
    default: break;
    }
}

std::size_t expected_diameter(const FamilyId& id) {
    validate(id);
    switch (id.family) {
    case Family::FigA1: return 3;
    case Family::FigA2: return 5;
    case Family::FigA4: return 6;
    case Family::FigA4Ehi: return 7;
    case Family::FigA5: return 9;
    case Family::G2: return 10;
    case Family::Dim4: return 6;
    case Family::Dim4Efgi: return 7;
    case Family::Path2: return id.n - 2;
    case Family::GluedD4: return 6 * id.k + id.j;
    case Family::GluedD3: return 10 * id.k - 1 + id.j;
    case Family::GluedD3G0: return 10 * id.k + id.j + 1;
    case Family::Table1Witness: return table1_diameter(id.d, id.n);
    }
    return 0;
}

SimplicialComplex build(const FamilyId& id, bool self_check) {
    validate(id);
    SimplicialComplex cx = [&] {
        switch (id.family) {
        case Family::FigA1: return SimplicialComplex::from_letters(kFigA1);
        case Family::FigA2: return fig_a2();
        case Family::FigA4: return fig_a4();
        case Family::FigA4Ehi: return append_facet_chain(fig_a4(), letters("DEH"), 1);
        case Family::FigA5: return fig_a5();
        case Family::G2: return g2();
        case Family::Dim4: return dim4();
        case Family::Dim4Efgi:
            return append_facet_chain(dim4(), letters("EFGH"), 1, letter_order("HEFG"));
        case Family::Path2: return path2(id.n);
        case Family::GluedD4: return glued_d4(id.k, id.j);
        case Family::GluedD3: return glued_d3(id.k, id.j);
        case Family::GluedD3G0: return glued_d3_g0(id.k, id.j);
        case Family::Table1Witness: return table1_witness(id.d, id.n);
        }
        throw Error(ErrorCode::UnknownFamily, "unhandled family");
    }();
    if (self_check) {
        if (!is_s2(cx).holds) throw std::logic_error(describe(id) + " is not (S2)");
        const Distance diam = diameter(build_dual_graph(cx));
        if (diam != Distance(expected_diameter(id)))
            throw std::logic_error(describe(id) + " has diameter " + to_string(diam) +
                                   ", expected " + std::to_string(expected_diameter(id)));
    }
    return cx;
}

std::vector<CorpusEntry> corpus() {
    std::vector<FamilyId> ids;
    for (Family f : {Family::FigA1, Family::FigA2, Family::FigA4, Family::FigA4Ehi, Family::FigA5,
                     Family::G2, Family::Dim4, Family::Dim4Efgi})
        ids.push_back({f});
    for (std::size_t n = 3; n <= 10; ++n) ids.push_back({Family::Path2, 1, 0, 0, n});
    for (std::size_t k = 1; k <= 3; ++k)
        for (std::size_t j = 0; j <= 3; ++j) {
            ids.push_back({Family::GluedD4, k, j});
            ids.push_back({Family::GluedD3, k, j});
        }
    for (std::size_t k = 1; k <= 2; ++k)
        for (std::size_t j = 4; j <= 5; ++j) ids.push_back({Family::GluedD3G0, k, j});
    for (std::size_t d = 2; d <= 6; ++d)
        for (std::size_t n = d + 1; n <= d + 8; ++n)
            if (has_table1_witness(d, n)) ids.push_back({Family::Table1Witness, 1, 0, d, n});

    std::vector<CorpusEntry> out;
    for (const auto& id : ids) out.push_back({id, build(id, false), expected_diameter(id), true});
    return out;
}

std::vector<Table1Cell> verify_table1() {
    std::vector<Table1Cell> cells;
    for (std::size_t d = 2; d <= 4; ++d) {
        for (std::size_t n = std::max<std::size_t>(d + 2, 4); n <= 11; ++n) {
            Table1Cell cell{d, n, "", table1_diameter(d, n), std::nullopt, false, ""};
            if (n >= 10)
                cell.printed = d == 2 ? "n-2" : d == 3 ? ">= n-1" : ">= n-2";
            else if (n >= 6)
                cell.printed = std::to_string(d == 3 && n == 6 ? 4 : cell.expected);
            else
                cell.printed = "-";
            if (d == 3 && n == 6)
                cell.note = "printed 4; exhaustive search and the diameter-3 construction give 3";
            const SimplicialComplex cx = build({Family::Table1Witness, 1, 0, d, n}, false);
            cell.s2 = is_s2(cx).holds;
            cell.measured = diameter(build_dual_graph(cx));
            cells.push_back(cell);
        }
    }
    return cells;
}

}  // namespace srdual
