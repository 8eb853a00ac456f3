#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "srdual/constructions.hpp"
#include "srdual/dual_graph.hpp"
#include "srdual/error.hpp"
#include "srdual/search.hpp"
#include "srdual/serre.hpp"

using namespace srdual;

namespace {

using Edge = std::pair<std::string, std::string>;

std::set<Edge> edge_labels(const SimplicialComplex& cx) {
    const auto g = build_dual_graph(cx);
    std::set<Edge> out;
    for (const auto& [a, b] : g.edges()) {
        auto x = g.label(a), y = g.label(b);
        if (y < x) std::swap(x, y);
        out.emplace(x, y);
    }
    return out;
}

std::set<Edge> parse_edges(std::initializer_list<const char*> words) {
    std::set<Edge> out;
    for (const char* w : words) {
        const std::string s(w);
        const auto dash = s.find('-');
        auto x = s.substr(0, dash), y = s.substr(dash + 1);
        if (y < x) std::swap(x, y);
        out.emplace(x, y);
    }
    return out;
}

Distance diam(const SimplicialComplex& cx) { return diameter(build_dual_graph(cx)); }

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an srdual::Error");
    return ErrorCode::BadParams;
}

}  // namespace

TEST_CASE("drawn figures match their edge lists") {
    CHECK(edge_labels(build({Family::FigA1})) == parse_edges({"AB-BC", "BC-CD", "CD-DE"}));
    CHECK(edge_labels(build({Family::FigA2})) ==
          parse_edges({"ABC-ABD", "ABC-BCE", "ABD-ADG", "ADG-CDG", "CDG-CEG", "CEG-AEG",
                       "AEG-AEF", "AEF-DEF", "DEF-CDF", "CDF-CDG", "BCE-CEG", "ADG-AEG"}));
    const auto a4 = edge_labels(build({Family::FigA4}));
    CHECK(a4.size() == 13);
    CHECK(a4.count({"DEF", "DEH"}) == 1);
}

TEST_CASE("every family builds with its stated diameter and (S2)") {
    for (const auto& e : corpus()) {
        INFO(describe(e.id));
        CHECK(diam(e.complex) == Distance(e.expected_diameter));
        CHECK(is_s2(e.complex).holds == e.expected_s2);
        CHECK(verify_bounds(e.complex));
    }
}

TEST_CASE("small families") {
    CHECK(build({Family::FigA2}).universe_size() == 7);
    CHECK(build({Family::FigA4}).universe_size() == 8);
    CHECK(build({Family::FigA4Ehi}).universe_size() == 9);
    CHECK(build({Family::FigA5}).universe_size() == 10);
    CHECK(build({Family::FigA5}).facet_count() == 24);
    CHECK(build({Family::G2}).universe_size() == 11);
    CHECK(build({Family::Dim4Efgi}).universe_size() == 9);
    CHECK(build({Family::Dim4Efgi}).facet_count() == 19);
    CHECK(build({Family::Path2, 1, 0, 0, 7}).facet_count() == 6);
}

TEST_CASE("glued families follow their formulas") {
    for (std::size_t k = 1; k <= 3; ++k)
        for (std::size_t j = 0; j <= 3; ++j) {
            const auto cx = build({Family::GluedD4, k, j}, false);
            CHECK(cx.universe_size() == 4 * k + 4 + j);
            CHECK(diam(cx) == Distance(6 * k + j));
            CHECK(is_s2(cx).holds);
        }
    for (std::size_t k = 1; k <= 3; ++k) {
        const auto cx = build({Family::GluedD3, k, 0}, false);
        CHECK(cx.universe_size() == 8 * k + 2);
        CHECK(diam(cx) == Distance(10 * k - 1));
        CHECK(is_s2(cx).holds);
    }
    for (std::size_t k = 1; k <= 2; ++k)
        for (std::size_t j = 4; j <= 5; ++j) {
            const auto cx = build({Family::GluedD3G0, k, j}, false);
            CHECK(diam(cx) == Distance(10 * k + j + 1));
            CHECK(is_s2(cx).holds);
        }
}

TEST_CASE("the 35-facet gluing") {
    const auto cx = build({Family::GluedD4, 2, 0});
    CHECK(cx.facet_count() == 35);
    CHECK(cx.universe_size() == 12);
    CHECK(build_dual_graph(cx).edge_count() == 56);
}

TEST_CASE("table witnesses") {
    for (const auto& cell : verify_table1()) {
        INFO("d=" << cell.d << " n=" << cell.n);
        CHECK(cell.ok());
        CHECK(cell.measured <= Distance(bounds(cell.d, cell.n).best));
    }
    const auto cells = verify_table1();
    const auto it = std::find_if(cells.begin(), cells.end(),
                                 [](const Table1Cell& c) { return c.d == 3 && c.n == 6; });
    REQUIRE(it != cells.end());
    CHECK(it->printed == "4");
    CHECK(it->expected == 3);
    CHECK_FALSE(it->note.empty());

    auto expect = [](std::size_t d, std::size_t n) {
        return *diam(build({Family::Table1Witness, 1, 0, d, n}));
    };
    CHECK(expect(3, 7) == 5);
    CHECK(expect(3, 8) == 6);
    CHECK(expect(3, 9) == 7);
    CHECK(expect(3, 10) == 9);
    CHECK(expect(4, 8) == 6);
    CHECK(expect(4, 9) == 7);
    for (std::size_t n = 4; n <= 10; ++n) CHECK(expect(2, n) == n - 2);
    CHECK(expect(6, 10) == 6);
    CHECK(expect(7, 10) == 3);
}

TEST_CASE("names and parameter checks") {
    for (Family f : all_families()) CHECK(parse_family(family_name(f)) == f);
    CHECK(code_of([] { parse_family("fig_z"); }) == ErrorCode::UnknownFamily);
    CHECK(code_of([] { build({Family::GluedD4, 0, 0}); }) == ErrorCode::BadParams);
    CHECK(code_of([] { build({Family::GluedD4, 13, 0}); }) == ErrorCode::BadParams);
    CHECK(code_of([] { build({Family::GluedD3G0, 1, 3}); }) == ErrorCode::BadParams);
    CHECK(code_of([] { build({Family::Path2, 1, 0, 0, 2}); }) == ErrorCode::BadParams);
    CHECK(code_of([] { build({Family::Table1Witness, 1, 0, 6, 12}); }) == ErrorCode::BadParams);
    CHECK(describe({Family::GluedD4, 2, 1}) == "glued_d4(k=2, j=1)");
    CHECK(has_table1_witness(6, 10));
    CHECK_FALSE(has_table1_witness(6, 11));
}

TEST_CASE("largest parameters stay inside the universe") {
    const auto cx = build({Family::GluedD3, 12, 0}, false);
    CHECK(cx.universe_size() == 98);
    CHECK(diam(cx) == Distance(119));
    CHECK(verify_bounds(cx));
}
