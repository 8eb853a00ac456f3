#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "srdual/constructions.hpp"
#include "srdual/dual_graph.hpp"
#include "srdual/error.hpp"
#include "srdual/search.hpp"
#include "srdual/serre.hpp"

using namespace srdual;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an srdual::Error");
    return ErrorCode::BadParams;
}

oracle::Masks low_words(const std::vector<VertexSet>& fs) {
    oracle::Masks out;
    for (const auto& f : fs) out.push_back(static_cast<oracle::Mask>(f.low_word()));
    return out;
}

// The closed-form bounds, evaluated in floating point.
std::size_t best_bound(std::size_t d, std::size_t n) {
    const std::size_t k = n - d;
    std::vector<long double> vals;
    if (d == 3) vals.push_back(std::max<long double>(2.0L * n - 10, n - 2.0L));
    vals.push_back(std::ldexp(static_cast<long double>(k), static_cast<int>(d) - 2));
    if (k == 5) vals.push_back(8);
    if (k == 6) vals.push_back(14);
    if (k >= 2)
        vals.push_back(std::floor(3.0L * std::pow(2.0L, (static_cast<long double>(k) - 5) / 2) * k));
    if (k == 3) vals.push_back(3);
    if (k == 4) vals.push_back(6);
    if (k >= 2 && k != d) vals.push_back(best_bound(k, 2 * k));
    return static_cast<std::size_t>(*std::min_element(vals.begin(), vals.end()));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("bounds examples") {
    CHECK(bounds(3, 7).best == 5);
    CHECK(bounds(3, 9).best == 8);
    CHECK(bounds(4, 8).best == 6);
    CHECK(bounds(3, 10).best == 10);
    CHECK(bounds(3, 6).best == 3);
    CHECK(bounds(5, 10).thm36 == 8u);
    CHECK(bounds(5, 11).thm37 == 14u);
    CHECK_FALSE(bounds(5, 11).thm32.has_value());
    CHECK(bounds(4, 16).thm35 == 48u);
    CHECK(bounds(2, 3).best == 1);
    CHECK(code_of([] { bounds(1, 3); }) == ErrorCode::BadParams);
    CHECK(code_of([] { bounds(4, 4); }) == ErrorCode::BadParams);
}

TEST_CASE("bounds agree with a floating-point evaluation") {
    for (std::size_t d = 2; d <= 12; ++d)
        for (std::size_t n = d + 1; n <= d + 30; ++n) {
            INFO("d=" << d << " n=" << n);
            CHECK(bounds(d, n).best == best_bound(d, n));
        }
}

TEST_CASE("huge parameters saturate instead of overflowing") {
    const auto b = bounds(100, 110);
    CHECK(b.thm35.has_value());
    CHECK(b.best <= *b.thm35);
    CHECK(b.best == best_bound(100, 110));
}

TEST_CASE("canonical labeling is the lex-least relabeling") {
    std::mt19937 rng(59);
    for (int trial = 0; trial < 400; ++trial) {
        const auto cx = oracle::random_pure(rng, 2 + trial % 3, 7);
        const int n = static_cast<int>(cx.universe_size());
        const auto cf = canonical_form(cx);
        CHECK(cf.exact);
        REQUIRE(low_words(cf.facets) == oracle::canonical_brute(oracle::masks_of(cx), n));
        // perm maps cx onto the canonical facets.
        CHECK(relabel(cx, cf.perm).facets() == cf.facets);
    }
}

TEST_CASE("canonical labeling ignores the input labeling") {
    std::mt19937 rng(61);
    for (Family f : {Family::FigA2, Family::FigA4, Family::Dim4, Family::FigA5}) {
        const auto cx = build({f});
        const auto ref = canonical_form(cx).facets;
        std::vector<Vertex> perm(cx.universe_size());
        std::iota(perm.begin(), perm.end(), 0);
        for (int trial = 0; trial < 20; ++trial) {
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(canonical_form(relabel(cx, perm)).facets == ref);
        }
    }
}

TEST_CASE("a tiny beam reports inexact results") {
    const auto cx = build({Family::FigA5});
    const auto cf = canonical_labeling(cx.facets(), cx.universe_size(), 1);
    CHECK_FALSE(cf.exact);
    CHECK(relabel(cx, cf.perm).facets() == cf.facets);
}

TEST_CASE("mu agrees with brute force over every facet subset") {
    for (std::size_t n = 4; n <= 6; ++n) CHECK(enumerate_mu(2, n).mu == oracle::mu_brute(2, static_cast<int>(n)));
    CHECK(enumerate_mu(3, 5).mu == oracle::mu_brute(3, 5));
    CHECK(enumerate_mu(3, 4).mu == oracle::mu_brute(3, 4));
}

TEST_CASE("node counts equal the number of connected graphs") {
    // Facet sets for d = 2 are graphs; the search visits each connected
    // graph with at least one edge on at most n vertices once.
    const std::vector<std::uint64_t> connected{1, 2, 6, 21, 112, 853};  // 2..7 vertices
    std::uint64_t total = 0;
    for (std::size_t n = 2; n <= 7; ++n) {
        total += connected[n - 2];
        if (n < 4) continue;
        const auto r = enumerate_mu(2, n);
        CHECK(r.exhaustive);
        CHECK(r.mu == n - 2);
        CHECK(r.nodes_explored == total);
    }
}

TEST_CASE("the d=3, n=6 golden run") {
    const std::string golden = read_file(std::string(SRDUAL_GOLDEN_DIR) + "/mu_3_6.txt");
    REQUIRE_FALSE(golden.empty());
    std::istringstream in(golden);
    std::string line;
    std::size_t mu = 0;
    std::uint64_t nodes = 0;
    std::vector<std::string> log_lines;
    while (std::getline(in, line)) {
        if (line.rfind("mu: ", 0) == 0) mu = std::stoul(line.substr(4));
        if (line.rfind("nodes: ", 0) == 0) nodes = std::stoull(line.substr(7));
        if (line.rfind("log: ", 0) == 0) log_lines.push_back(line.substr(5));
    }
    SearchOptions opt;
    std::vector<std::string> seen;
    opt.log = [&](const std::string& s) { seen.push_back(s); };
    const auto r = enumerate_mu(3, 6, opt);
    CHECK(r.exhaustive);
    CHECK(r.mu == mu);
    CHECK(r.mu == 3);
    CHECK(r.nodes_explored == nodes);
    CHECK(seen == log_lines);
    REQUIRE(r.witness);
    CHECK(is_s2(*r.witness).holds);
    CHECK(diameter(build_dual_graph(*r.witness)) == Distance(3));
    CHECK(verify_bounds(r));
}

TEST_CASE("threads do not change the answer") {
    SearchOptions opt;
    opt.threads = 3;
    const auto a = enumerate_mu(2, 7, opt);
    const auto b = enumerate_mu(2, 7);
    // Node counts depend on when each thread sees the incumbent.
    CHECK(a.mu == b.mu);
    CHECK(a.exhaustive);
    REQUIRE(a.witness);
    REQUIRE(b.witness);
    CHECK(a.witness->facets() == b.witness->facets());
}

TEST_CASE("budgets and early stopping") {
    SearchOptions opt;
    opt.max_nodes = 50;
    const auto r = enumerate_mu(2, 7, opt);
    CHECK(r.budget_exhausted);
    CHECK_FALSE(r.exhaustive);
    CHECK(r.mu <= 5);

    SearchOptions stop;
    stop.stop_at_bound = true;
    const auto s = enumerate_mu(2, 6, stop);
    CHECK(s.mu == 4);
    CHECK(s.bound_reached);
    CHECK_FALSE(s.exhaustive);

    SearchOptions quick;
    quick.time_limit = std::chrono::duration<double>(0);
    const auto t = enumerate_mu(3, 6, quick);
    CHECK(t.budget_exhausted);
    CHECK_FALSE(t.exhaustive);
}

TEST_CASE("checkpoints resume where they stopped") {
    const auto path = (std::filesystem::temp_directory_path() / "srdual_test_checkpoint.txt").string();
    std::filesystem::remove(path);
    SearchOptions first;
    first.checkpoint_path = path;
    // The first of the three tasks finishes after 908 nodes.
    first.max_nodes = 950;
    const auto a = enumerate_mu(2, 7, first);
    CHECK_FALSE(a.exhaustive);
    REQUIRE(std::filesystem::exists(path));

    SearchOptions second;
    second.checkpoint_path = path;
    std::vector<std::string> log;
    second.log = [&](const std::string& s) { log.push_back(s); };
    const auto b = enumerate_mu(2, 7, second);
    CHECK(b.exhaustive);
    CHECK(b.mu == 5);
    CHECK(b.nodes_explored == enumerate_mu(2, 7).nodes_explored);
    REQUIRE_FALSE(log.empty());
    CHECK(log.front().rfind("resumed from checkpoint", 0) == 0);

    // A checkpoint for other parameters is rejected.
    CHECK(code_of([&] { enumerate_mu(2, 6, second); }) == ErrorCode::ParseError);
    std::filesystem::remove(path);
}

TEST_CASE("search parameter checks") {
    CHECK(code_of([] { enumerate_mu(1, 4); }) == ErrorCode::BadParams);
    CHECK(code_of([] { enumerate_mu(3, 3); }) == ErrorCode::BadParams);
    CHECK(code_of([] { enumerate_mu(2, 33); }) == ErrorCode::BadParams);
    CHECK(code_of([] { enumerate_mu(8, 32); }) == ErrorCode::BadParams);
}

TEST_CASE("search witnesses respect the bounds") {
    for (std::size_t n = 4; n <= 6; ++n) {
        const auto r = enumerate_mu(2, n);
        CHECK(verify_bounds(r));
        CHECK(r.mu <= bounds(2, n).best);
    }
}
