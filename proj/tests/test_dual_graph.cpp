#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "srdual/constructions.hpp"
#include "srdual/dual_graph.hpp"
#include "srdual/error.hpp"

using namespace srdual;

namespace {

VertexSet L(const char* word) {
    VertexSet s;
    for (const char* c = word; *c; ++c) s.insert(static_cast<Vertex>(*c - 'A'));
    return s;
}

std::vector<std::string> labels(const DualGraph& g) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < g.size(); ++i) out.push_back(g.label(i));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("edge counts of the drawn figures") {
    CHECK(build_dual_graph(build({Family::FigA1})).edge_count() == 3);
    CHECK(build_dual_graph(build({Family::FigA2})).edge_count() == 12);
    CHECK(build_dual_graph(build({Family::FigA4})).edge_count() == 13);
    CHECK(build_dual_graph(build({Family::Dim4})).edge_count() == 28);
    CHECK(build_dual_graph(build({Family::FigA2})).size() == 10);
    CHECK(build_dual_graph(build({Family::Dim4})).size() == 18);

    const auto apart = build_dual_graph(SimplicialComplex::from_letters({"ABC", "DEF"}));
    CHECK(apart.size() == 2);
    CHECK(apart.edge_count() == 0);
}

TEST_CASE("dual graph preconditions") {
    auto code = [](auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::BadParams;
    };
    CHECK(code([] { build_dual_graph(SimplicialComplex::from_letters({"ABC", "DE"})); }) ==
          ErrorCode::NotPure);
    CHECK(code([] { build_dual_graph(SimplicialComplex::from_letters({"A", "B"})); }) ==
          ErrorCode::DimensionTooSmall);
    CHECK(code([] { diameter(DualGraph({}, 2, 0)); }) == ErrorCode::EmptyGraph);
    const auto g = build_dual_graph(build({Family::FigA2}));
    CHECK(code([&] { distance_pair(g, L("ABC"), L("ABE")); }) == ErrorCode::UnknownNode);
}

TEST_CASE("diameters and distances") {
    CHECK(diameter(build_dual_graph(build({Family::FigA1}))) == Distance(3));
    CHECK(diameter(build_dual_graph(SimplicialComplex::from_letters({"ABC"}))) == Distance(0));
    CHECK(diameter(build_dual_graph(SimplicialComplex::from_letters({"AB", "CD"}))) == std::nullopt);

    const auto d4 = build_dual_graph(build({Family::Dim4}));
    CHECK(diameter(d4) == Distance(6));
    CHECK(distance_pair(d4, L("ABCD"), L("EFGH")) == Distance(6));

    const auto a2 = build_dual_graph(build({Family::FigA2}));
    CHECK(distance_pair(a2, L("ABC"), L("DEF")) == Distance(5));
    CHECK(distance_pair(a2, L("ABC"), L("ABC")) == Distance(0));

    const auto a5 = build_dual_graph(build({Family::FigA5}));
    CHECK(distance_pair(a5, L("ABC"), L("HIJ")) == Distance(9));
    CHECK(to_string(Distance{}) == "unbounded");
}

TEST_CASE("shortest paths are ridge walks of the right length") {
    const auto g = build_dual_graph(build({Family::FigA5}));
    const auto path = shortest_path(g, L("ABC"), L("HIJ"));
    REQUIRE(path);
    CHECK(path->size() == 10);
    CHECK(g.node(path->front()) == L("ABC"));
    CHECK(g.node(path->back()) == L("HIJ"));
    for (std::size_t i = 0; i + 1 < path->size(); ++i) CHECK(g.adjacent((*path)[i], (*path)[i + 1]));
    // Deterministic: the same query gives the same walk.
    CHECK(shortest_path(g, L("ABC"), L("HIJ")) == path);
}

TEST_CASE("subgraphs on facets containing a set") {
    const auto g = build_dual_graph(build({Family::FigA2}));
    const auto red = induced_on_superfacets(g, L("E"));
    CHECK(labels(red) == std::vector<std::string>{"AEF", "AEG", "BCE", "CEG", "DEF"});
    CHECK(diameter(red).has_value());

    const auto ab = induced_on_superfacets(g, L("AB"));
    CHECK(labels(ab) == std::vector<std::string>{"ABC", "ABD"});
    CHECK(ab.edge_count() == 1);

    CHECK(induced_on_superfacets(g, VertexSet{}).edge_count() == g.edge_count());
    CHECK(induced_on_superfacets(g, L("ABCDEFG")).empty());
}

TEST_CASE("complement labels") {
    const auto g = build_dual_graph(build({Family::FigA1}));
    CHECK(g.label(0) == "AB");
    CHECK(g.label(0, LabelForm::Complement) == "CDE");
}

TEST_CASE("diameter agrees with Floyd-Warshall on random complexes") {
    std::mt19937 rng(3);
    int connected = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        const auto cx = oracle::random_pure(rng, 2 + trial % 3, 8);
        const int d = static_cast<int>(cx.pure_facet_size());
        const auto expect = oracle::diameter(oracle::masks_of(cx), d);
        const auto got = diameter(build_dual_graph(cx));
        REQUIRE(got == expect);
        connected += expect.has_value();
    }
    CHECK(connected > 200);
}

TEST_CASE("superfacet subgraphs are monotone") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const auto cx = oracle::random_pure(rng, 3, 7);
        const auto g = build_dual_graph(cx);
        const VertexSet s{static_cast<Vertex>(rng() % cx.universe_size())};
        VertexSet t = s;
        t.insert(static_cast<Vertex>(rng() % cx.universe_size()));
        const auto gs = induced_on_superfacets(g, s);
        const auto gt = induced_on_superfacets(g, t);
        for (const auto& f : gt.nodes()) CHECK(gs.index_of(f).has_value());
        for (const auto& f : gs.nodes()) CHECK(s.is_subset_of(f));
    }
}
