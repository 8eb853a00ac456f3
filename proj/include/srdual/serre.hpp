#ifndef SRDUAL_SERRE_HPP
#define SRDUAL_SERRE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "srdual/complex.hpp"
#include "srdual/vertex_set.hpp"

namespace srdual {

/// A pair of facets that no path of facets containing `separator` joins.
struct SeparationWitness {
    VertexSet u;
    VertexSet v;
    VertexSet separator;  // u ∩ v
};

enum class S2Failure {
    None,
    NotPure,
    NotLocallyConnected,
};

struct S2Verdict {
    bool holds = false;
    S2Failure failure = S2Failure::None;
    std::optional<SeparationWitness> witness;

    explicit operator bool() const { return holds; }
};

/// Pairwise local connectedness of the facet-ridge graph: every facet pair
/// (u, v) is joined through facets containing u ∩ v. On failure the
/// lexicographically first failing pair (by facet index) is reported.
/// Throws NotPure, DimensionTooSmall.
S2Verdict is_locally_connected(const SimplicialComplex& cx);

/// Serre's (S2) for the Stanley-Reisner ring: pure and locally connected.
/// A non-pure complex yields a failed verdict, not an exception.
/// Throws DimensionTooSmall when the largest facet has fewer than 2 vertices.
S2Verdict is_s2(const SimplicialComplex& cx);

/// Re-checks a failure witness directly on the facet list.
bool witness_separates(const SimplicialComplex& cx, const SeparationWitness& w);

/// Linear first syzygies of an equigenerated squarefree ideal of degree t:
/// every generator pair (u, v) is linked by generators dividing lcm(u, v)
/// whose consecutive lcms have degree t + 1. Throws NotEquigenerated.
bool linear_syzygy_check(const MonomialIdeal& ideal);

/// Coefficient field for homology: characteristic 0 (rationals) or a prime.
struct Field {
    unsigned characteristic = 0;

    static Field rationals() { return {0}; }
    static Field gf(unsigned p) { return {p}; }
    friend bool operator==(const Field&, const Field&) = default;
};

std::string to_string(const Field& f);

struct BettiVector {
    /// reduced[k] is the reduced Betti number in dimension k - 1.
    std::vector<std::size_t> reduced;
    Field field;

    /// Reduced Betti number in dimension `dim` (>= -1); zero past the top.
    std::size_t at(int dim) const;
    int top_dimension() const { return static_cast<int>(reduced.size()) - 2; }
};

/// Ranks of the simplicial boundary maps: Bareiss fraction-free elimination
/// over the integers in characteristic 0, Gaussian elimination mod p otherwise.
BettiVector reduced_betti(const SimplicialComplex& cx, Field field);

/// Topological connectivity: facets linked through shared vertices.
bool is_connected(const SimplicialComplex& cx);

/// Pure, and every link of a nonempty face has vanishing reduced homology
/// below its dimension. Throws DimensionTooSmall.
bool is_buchsbaum(const SimplicialComplex& cx, Field field);

/// Buchsbaum over GF(2) and the rationals side by side.
struct BuchsbaumReport {
    bool gf2;
    bool rationals;
    bool agree() const { return gf2 == rationals; }
};
BuchsbaumReport buchsbaum_report(const SimplicialComplex& cx);

/// (S_level): level <= 1 holds for every complex, level 2 is is_s2.
/// Throws UnsupportedLevel for level >= 3.
bool check_s_level(const SimplicialComplex& cx, unsigned level);

}  // namespace srdual

#endif
