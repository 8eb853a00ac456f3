#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "srdual/complex.hpp"
#include "srdual/constructions.hpp"
#include "srdual/dual_graph.hpp"
#include "srdual/error.hpp"
#include "srdual/serre.hpp"

using namespace srdual;

namespace {

VertexSet L(const char* word) {
    VertexSet s;
    for (const char* c = word; *c; ++c) s.insert(static_cast<Vertex>(*c - 'A'));
    return s;
}

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

TEST_CASE("vertex sets behave as exact sets") {
    VertexSet a{0, 5, 64, 127};
    VertexSet b{5, 64, 100};
    CHECK(a.size() == 4);
    CHECK((a & b) == VertexSet{5, 64});
    CHECK((a | b).size() == 5);
    CHECK((a - b) == VertexSet{0, 127});
    CHECK(intersection_size(a, b) == 2);
    CHECK(VertexSet::range(4).complement(6) == VertexSet{4, 5});
    CHECK(a.lowest() == 0);
    CHECK(a.highest() == 127);
    CHECK(VertexSet{1} < VertexSet{0, 1});
    CHECK(VertexSet{0, 1} < VertexSet{64});
    CHECK(a.members() == std::vector<Vertex>{0, 5, 64, 127});
}

TEST_CASE("from_facets reduces to a sorted antichain") {
    const auto cx = SimplicialComplex::from_letters({"ABC", "AB"});
    CHECK(cx.facet_count() == 1);
    CHECK(cx.facets().front() == L("ABC"));
    CHECK(cx.facet_size() == 3u);

    const auto a1 = SimplicialComplex::from_letters({"DE", "AB", "CD", "BC", "AB"});
    CHECK(a1.universe_size() == 5);
    CHECK(a1.facet_size() == 2u);
    CHECK(a1.facets() == std::vector<VertexSet>{L("AB"), L("BC"), L("CD"), L("DE")});

    const auto mixed = SimplicialComplex::from_letters({"ABC", "DE"});
    CHECK_FALSE(mixed.is_pure());
    CHECK(code_of([&] { mixed.pure_facet_size(); }) == ErrorCode::NotPure);
}

TEST_CASE("from_facets rejects bad input") {
    CHECK(code_of([] { SimplicialComplex::from_facets({}); }) == ErrorCode::EmptyInput);
    CHECK(code_of([] { SimplicialComplex::from_facets({VertexSet{}}); }) == ErrorCode::EmptyInput);
    CHECK(code_of([] { SimplicialComplex::from_facets({VertexSet{0, 4}}, 3); }) ==
          ErrorCode::VertexOutOfRange);
    CHECK(code_of([] { SimplicialComplex::from_facets({VertexSet{0, 1}}, 3); }) ==
          ErrorCode::IsolatedVertex);
}

TEST_CASE("dim4 has 18 facets of size 4 on 8 vertices") {
    const auto cx = build({Family::Dim4});
    CHECK(cx.facet_count() == 18);
    CHECK(cx.universe_size() == 8);
    CHECK(cx.facet_size() == 4u);
}

TEST_CASE("link matches a direct filter of the facet list") {
    const auto a2 = build({Family::FigA2});
    const auto lk = link(a2, L("E"));
    std::vector<std::string> labels;
    for (const auto& f : lk.facets()) labels.push_back(lk.label(f));
    std::sort(labels.begin(), labels.end());
    CHECK(labels == std::vector<std::string>{"AF", "AG", "BC", "CG", "DF"});

    CHECK(link(a2, VertexSet{}) == a2);
    const auto simplex = SimplicialComplex::from_letters({"ABC"});
    CHECK(link(simplex, L("ABC")).is_void());
    CHECK(link(simplex, L("ABC")).dimension() == -1);
    CHECK(code_of([&] { link(a2, L("ABEF")); }) == ErrorCode::NotAFace);
}

TEST_CASE("Alexander dual of three disjoint pairs") {
    // Facets 3456, 1256, 1234 on x1..x6.
    const auto cx = SimplicialComplex::from_facets(
        {VertexSet{2, 3, 4, 5}, VertexSet{0, 1, 4, 5}, VertexSet{0, 1, 2, 3}});
    const auto ideal = alexander_dual_ideal(cx);
    CHECK(ideal.degree() == 2u);
    std::vector<std::string> gens;
    for (const auto& g : ideal.generators()) gens.push_back(ideal.monomial(g));
    std::sort(gens.begin(), gens.end());
    CHECK(gens == std::vector<std::string>{"x1x2", "x3x4", "x5x6"});
    CHECK(complex_from_dual_ideal(ideal) == cx);

    const auto full = SimplicialComplex::from_letters({"ABC"});
    CHECK(alexander_dual_ideal(full).is_unit());
    CHECK(code_of([] { alexander_dual_ideal(SimplicialComplex::from_letters({"ABC", "DE"})); }) ==
          ErrorCode::NotPure);
}

TEST_CASE("cone keeps the dual graph") {
    const auto a1 = build({Family::FigA1});
    const auto c = cone(a1, 1);
    CHECK(c.universe_size() == 6);
    CHECK(c.facet_size() == 3u);
    CHECK(diameter(build_dual_graph(c)) == Distance(3));
    CHECK(code_of([&] { cone(a1, 0); }) == ErrorCode::BadParams);

    const auto d4 = build({Family::Dim4});
    for (std::size_t m = 1; m <= 3; ++m) {
        const auto cm = cone(d4, m);
        const auto g = build_dual_graph(d4);
        const auto gm = build_dual_graph(cm);
        REQUIRE(gm.size() == g.size());
        // Facet i of the cone is facet i of the base plus the apex vertices.
        for (std::size_t i = 0; i < g.size(); ++i) CHECK(gm.neighbors(i) == g.neighbors(i));
    }
}

TEST_CASE("relabeling leaves diameter and (S2) alone") {
    std::mt19937 rng(7);
    const auto a2 = build({Family::FigA2});
    std::vector<Vertex> perm(a2.universe_size());
    std::iota(perm.begin(), perm.end(), 0);
    CHECK(relabel(a2, perm) == a2);
    for (int trial = 0; trial < 50; ++trial) {
        std::shuffle(perm.begin(), perm.end(), rng);
        const auto r = relabel(a2, perm);
        CHECK(diameter(build_dual_graph(r)) == Distance(5));
        CHECK(is_s2(r).holds);
    }
    std::vector<Vertex> swap01(perm.size());
    std::iota(swap01.begin(), swap01.end(), 0);
    std::swap(swap01[0], swap01[1]);
    CHECK(relabel(relabel(a2, swap01), swap01) == a2);
    CHECK(code_of([&] { relabel(a2, {0, 0, 1, 2, 3, 4, 5}); }) == ErrorCode::NotABijection);
}

TEST_CASE("random complexes keep the antichain invariant") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const auto cx = oracle::random_pure(rng, 2 + trial % 3, 8);
        const auto& fs = cx.facets();
        for (std::size_t i = 0; i < fs.size(); ++i)
            for (std::size_t j = 0; j < fs.size(); ++j)
                if (i != j) CHECK_FALSE(fs[i].is_subset_of(fs[j]));
        CHECK(std::is_sorted(fs.begin(), fs.end()));
        const auto twice = complex_from_dual_ideal(alexander_dual_ideal(cx));
        CHECK(twice == cx);
    }
}
