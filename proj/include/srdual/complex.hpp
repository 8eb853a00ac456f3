#ifndef SRDUAL_COMPLEX_HPP
#define SRDUAL_COMPLEX_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "srdual/vertex_set.hpp"

namespace srdual {

/// A simplicial complex given by its facets on the vertex universe {0, ..., n-1}.
///
/// Invariants, established by every constructor:
///   - facets form an antichain and are sorted ascending and duplicate-free;
///   - every universe vertex lies in some facet;
///   - facet_size() is set exactly when all facets have the same cardinality.
///
/// The one exception to the second invariant is the void link {∅}, which has
/// an empty universe and a single empty facet (dimension -1).
///
/// Vertex names are optional and only used for printing.
class SimplicialComplex {
public:
    /// Antichain-reduces, deduplicates and sorts. The universe is the union of
    /// the facets unless `universe_size` is given, in which case every vertex
    /// below it must be covered.
    static SimplicialComplex from_facets(std::vector<VertexSet> facets,
                                         std::optional<std::size_t> universe_size = std::nullopt,
                                         std::vector<std::string> names = {});

    /// Convenience for hand-written complexes: each facet is a string of
    /// single-letter vertex names, 'A' = 0, 'B' = 1, ...
    static SimplicialComplex from_letters(const std::vector<std::string>& facets);

    /// The complex {∅}: the link of a facet.
    static SimplicialComplex void_complex();

    std::size_t universe_size() const { return n_; }
    const std::vector<VertexSet>& facets() const { return facets_; }
    std::size_t facet_count() const { return facets_.size(); }

    bool is_pure() const { return d_.has_value(); }
    /// Common facet cardinality (ring dimension d); nullopt when not pure.
    std::optional<std::size_t> facet_size() const { return d_; }
    /// Facet cardinality; throws NotPure.
    std::size_t pure_facet_size() const;
    /// Geometric dimension: largest facet cardinality minus one.
    int dimension() const;
    bool is_void() const { return facets_.size() == 1 && facets_.front().empty(); }

    bool contains_face(const VertexSet& face) const;
    bool has_facet(const VertexSet& facet) const;
    std::optional<std::size_t> facet_index(const VertexSet& facet) const;

    bool has_names() const { return !names_.empty(); }
    const std::vector<std::string>& names() const { return names_; }
    std::string vertex_name(Vertex v) const;
    /// "ABC" when every name is a single character, "x1 x2 x3" otherwise.
    std::string label(const VertexSet& s) const;
    std::optional<Vertex> vertex_by_name(const std::string& name) const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.n_ == b.n_ && a.facets_ == b.facets_;
    }

private:
    SimplicialComplex() = default;

    std::size_t n_ = 0;
    std::vector<VertexSet> facets_;
    std::optional<std::size_t> d_;
    std::vector<std::string> names_;
};

/// Squarefree monomial ideal, generators identified with their supports.
class MonomialIdeal {
public:
    /// Keeps only the minimal generators (support antichain), sorted.
    MonomialIdeal(std::size_t n, std::vector<VertexSet> generators,
                  std::vector<std::string> names = {});

    std::size_t variable_count() const { return n_; }
    const std::vector<VertexSet>& generators() const { return generators_; }
    /// Common generator degree; nullopt when not equigenerated.
    std::optional<std::size_t> degree() const;
    /// Contains the monomial 1 (the degenerate case of a full-universe facet).
    bool is_unit() const;
    const std::vector<std::string>& names() const { return names_; }
    /// "x1x2" style product of variable names.
    std::string monomial(const VertexSet& support) const;

private:
    std::size_t n_;
    std::vector<VertexSet> generators_;
    std::vector<std::string> names_;
};

/// Facets of the link of `face`: {F \ face : face ⊆ F}. Vertices are
/// renumbered onto those that occur, names carried along. Throws NotAFace.
SimplicialComplex link(const SimplicialComplex& cx, const VertexSet& face);

/// Generators are facet complements; throws NotPure.
MonomialIdeal alexander_dual_ideal(const SimplicialComplex& cx);

/// Inverse of alexander_dual_ideal: the complex whose facets are the
/// generator complements.
SimplicialComplex complex_from_dual_ideal(const MonomialIdeal& ideal);

/// Adds the same `extra` fresh vertices to every facet. Throws BadParams when
/// extra == 0.
SimplicialComplex cone(const SimplicialComplex& cx, std::size_t extra);

/// perm[v] is the new index of vertex v. Names move with their vertices.
/// Throws NotABijection.
SimplicialComplex relabel(const SimplicialComplex& cx, const std::vector<Vertex>& perm);

/// Name for a vertex appended at `index`: the letter for that index when it
/// is free, otherwise "x<index+1>", otherwise a suffixed variant.
std::string fresh_vertex_name(const std::vector<std::string>& existing, std::size_t index);

}  // namespace srdual

#endif
