#ifndef SRDUAL_SEARCH_HPP
#define SRDUAL_SEARCH_HPP

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "srdual/complex.hpp"
#include "srdual/vertex_set.hpp"

namespace srdual {

/// Upper bounds on μ(d,n), each present only where it applies, all floored
/// to integers and saturated at SIZE_MAX.
struct UpperBounds {
    std::size_t d = 0;
    std::size_t n = 0;
    std::optional<std::size_t> thm32;                // max(2n-10, n-2), d = 3
    std::optional<std::size_t> thm35;                // 2^(d-2) (n-d)
    std::optional<std::size_t> thm36;                // 8, codimension 5
    std::optional<std::size_t> thm37;                // 14, codimension 6
    std::optional<std::size_t> thm38;                // 3 * 2^((n-d-5)/2) (n-d), codimension >= 2
    std::optional<std::size_t> codim3;               // 3
    std::optional<std::size_t> codim4;               // 6
    std::optional<std::size_t> klee_walkup_reduced;  // best bound at (n-d, 2(n-d))
    std::size_t best = 0;

    /// (name, value) for the applicable entries, in declaration order.
    std::vector<std::pair<std::string, std::size_t>> entries() const;
};

/// Throws BadParams unless 2 <= d < n.
UpperBounds bounds(std::size_t d, std::size_t n);

/// Diameter of the dual graph is finite and at most bounds(d, n).best.
/// Throws NotPure, DimensionTooSmall.
bool verify_bounds(const SimplicialComplex& cx);

/// A relabeled copy of a facet list. perm[v] is the new label of vertex v.
struct CanonicalForm {
    std::vector<VertexSet> facets;  // sorted ascending
    std::vector<Vertex> perm;
    /// False when the labeling beam overflowed its cap; the facets are then
    /// an isomorphic copy but not necessarily the canonical one.
    bool exact = true;
};

inline constexpr std::size_t kDefaultBeamCap = 1 << 15;

/// Lexicographically least sorted facet list over all relabelings of
/// {0, ..., n-1}. Labels are fixed from 0 upwards keeping every partial
/// labeling whose already-determined prefix is least; vertices whose
/// transposition is an automorphism are labeled in ascending order.
CanonicalForm canonical_labeling(const std::vector<VertexSet>& facets, std::size_t n,
                                 std::size_t beam_cap = kDefaultBeamCap);
CanonicalForm canonical_form(const SimplicialComplex& cx);

struct SearchOptions {
    unsigned threads = 1;
    std::optional<std::uint64_t> max_nodes;
    std::optional<std::chrono::duration<double>> time_limit;
    /// Stop as soon as the incumbent reaches bounds(d, n).best.
    bool stop_at_bound = false;
    /// Resumable state file; empty disables checkpointing.
    std::string checkpoint_path;
    std::size_t beam_cap = kDefaultBeamCap;
    std::function<void(const std::string&)> log;
};

struct SearchResult {
    std::size_t d = 0;
    std::size_t n = 0;
    std::size_t mu = 0;
    std::optional<SimplicialComplex> witness;
    /// The whole canonical search tree was traversed with exact labels.
    bool exhaustive = false;
    bool budget_exhausted = false;
    bool bound_reached = false;
    bool canonical_exact = true;
    std::uint64_t nodes_explored = 0;
    std::size_t tasks = 0;
    std::chrono::duration<double> elapsed{0};
};

/// Largest dual-graph diameter over (S2) complexes with facet size d using
/// all n vertices. Canonical augmentation over ridge-connected facet sets:
/// a child X + f is kept when its canonical parent is isomorphic to X, and
/// duplicate children of one parent are dropped. Subtrees are cut when
/// diam(X) plus the number of facets still addable is below the incumbent.
/// Throws BadParams unless 2 <= d < n <= 32.
SearchResult enumerate_mu(std::size_t d, std::size_t n, const SearchOptions& options = {});

/// verify_bounds on a search witness (true when there is none).
bool verify_bounds(const SearchResult& result);

}  // namespace srdual

#endif
