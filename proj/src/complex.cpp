#include "srdual/complex.hpp"

#include <algorithm>
#include <unordered_set>

#include "srdual/error.hpp"

namespace srdual {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
        case ErrorCode::IsolatedVertex: return "IsolatedVertex";
        case ErrorCode::NotAFace: return "NotAFace";
        case ErrorCode::NotAFacet: return "NotAFacet";
        case ErrorCode::NotPure: return "NotPure";
        case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NotABijection: return "NotABijection";
        case ErrorCode::EmptyGraph: return "EmptyGraph";
        case ErrorCode::UnknownNode: return "UnknownNode";
        case ErrorCode::NotEquigenerated: return "NotEquigenerated";
        case ErrorCode::UnsupportedLevel: return "UnsupportedLevel";
        case ErrorCode::OverlapNotPure: return "OverlapNotPure";
        case ErrorCode::OverlapTooSmall: return "OverlapTooSmall";
        case ErrorCode::OverlapSerreFailure: return "OverlapSerreFailure";
        case ErrorCode::UnknownFamily: return "UnknownFamily";
        case ErrorCode::BadParams: return "BadParams";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

namespace {

// Drops every set contained in another one; result sorted and unique.
std::vector<VertexSet> maximal_sets(std::vector<VertexSet> sets) {
    std::sort(sets.begin(), sets.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.size() > b.size(); });
    std::vector<VertexSet> kept;
    for (const auto& s : sets) {
        bool covered = std::any_of(kept.begin(), kept.end(),
                                   [&](const VertexSet& k) { return s.is_subset_of(k); });
        if (!covered) kept.push_back(s);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(std::vector<VertexSet> facets,
                                                 std::optional<std::size_t> universe_size,
                                                 std::vector<std::string> names) {
    if (facets.empty()) throw Error(ErrorCode::EmptyInput, "no facets given");
    if (universe_size && *universe_size > VertexSet::kMaxVertices)
        throw Error(ErrorCode::VertexOutOfRange, "universe larger than 128 vertices");

    VertexSet covered;
    for (const auto& f : facets) {
        if (f.empty()) throw Error(ErrorCode::EmptyInput, "empty facet");
        covered |= f;
    }
    const std::size_t n = universe_size ? *universe_size : covered.highest() + 1;
    if (!covered.is_subset_of(VertexSet::range(n)))
        throw Error(ErrorCode::VertexOutOfRange,
                    "vertex " + std::to_string(covered.highest()) + " outside universe of size " +
                        std::to_string(n));
    if (covered != VertexSet::range(n)) {
        const Vertex missing = (VertexSet::range(n) - covered).lowest();
        throw Error(ErrorCode::IsolatedVertex,
                    "vertex " + (missing < names.size() ? names[missing] : std::to_string(missing)) +
                        " lies in no facet");
    }
    if (!names.empty() && names.size() != n)
        throw Error(ErrorCode::BadParams, "name table size does not match universe");

    SimplicialComplex cx;
    cx.n_ = n;
    cx.facets_ = maximal_sets(std::move(facets));
    cx.names_ = std::move(names);
    const std::size_t first = cx.facets_.front().size();
    if (std::all_of(cx.facets_.begin(), cx.facets_.end(),
                    [&](const VertexSet& f) { return f.size() == first; }))
        cx.d_ = first;
    return cx;
}

SimplicialComplex SimplicialComplex::from_letters(const std::vector<std::string>& facets) {
    std::vector<VertexSet> sets;
    Vertex top = 0;
    for (const auto& word : facets) {
        VertexSet s;
        for (char c : word) {
            if (c < 'A' || c > 'Z')
                throw Error(ErrorCode::VertexOutOfRange, std::string("not a letter vertex: ") + c);
            const Vertex v = static_cast<Vertex>(c - 'A');
            s.insert(v);
            top = std::max(top, v);
        }
        sets.push_back(s);
    }
    std::vector<std::string> names;
    for (Vertex v = 0; v <= top; ++v) names.emplace_back(1, static_cast<char>('A' + v));
    return from_facets(std::move(sets), std::nullopt, std::move(names));
}

SimplicialComplex SimplicialComplex::void_complex() {
    SimplicialComplex cx;
    cx.facets_ = {VertexSet{}};
    cx.d_ = 0;
    return cx;
}

std::size_t SimplicialComplex::pure_facet_size() const {
    if (!d_) throw Error(ErrorCode::NotPure, "facets have different cardinalities");
    return *d_;
}

int SimplicialComplex::dimension() const {
    std::size_t top = 0;
    for (const auto& f : facets_) top = std::max(top, f.size());
    return static_cast<int>(top) - 1;
}

bool SimplicialComplex::contains_face(const VertexSet& face) const {
    return std::any_of(facets_.begin(), facets_.end(),
                       [&](const VertexSet& f) { return face.is_subset_of(f); });
}

bool SimplicialComplex::has_facet(const VertexSet& facet) const {
    return std::binary_search(facets_.begin(), facets_.end(), facet);
}

std::optional<std::size_t> SimplicialComplex::facet_index(const VertexSet& facet) const {
    auto it = std::lower_bound(facets_.begin(), facets_.end(), facet);
    if (it == facets_.end() || *it != facet) return std::nullopt;
    return static_cast<std::size_t>(it - facets_.begin());
}

std::string SimplicialComplex::vertex_name(Vertex v) const {
    if (v < names_.size()) return names_[v];
    return std::to_string(v);
}

std::string SimplicialComplex::label(const VertexSet& s) const {
    const bool compact =
        has_names() && std::all_of(names_.begin(), names_.end(),
                                   [](const std::string& nm) { return nm.size() == 1; });
    std::string out;
    s.for_each([&](Vertex v) {
        if (!compact && !out.empty()) out += ' ';
        out += vertex_name(v);
    });
    if (out.empty()) out = "{}";
    return out;
}

std::optional<Vertex> SimplicialComplex::vertex_by_name(const std::string& name) const {
    for (std::size_t v = 0; v < n_; ++v)
        if (vertex_name(static_cast<Vertex>(v)) == name) return static_cast<Vertex>(v);
    return std::nullopt;
}

MonomialIdeal::MonomialIdeal(std::size_t n, std::vector<VertexSet> generators,
                             std::vector<std::string> names)
    : n_(n), names_(std::move(names)) {
    std::sort(generators.begin(), generators.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.size() < b.size(); });
    for (const auto& g : generators) {
        if (!g.is_subset_of(VertexSet::range(n)))
            throw Error(ErrorCode::VertexOutOfRange, "generator support outside the variables");
        bool divisible = std::any_of(generators_.begin(), generators_.end(),
                                     [&](const VertexSet& k) { return k.is_subset_of(g); });
        if (!divisible) generators_.push_back(g);
    }
    std::sort(generators_.begin(), generators_.end());
}

std::optional<std::size_t> MonomialIdeal::degree() const {
    if (generators_.empty()) return std::nullopt;
    const std::size_t t = generators_.front().size();
    for (const auto& g : generators_)
        if (g.size() != t) return std::nullopt;
    return t;
}

bool MonomialIdeal::is_unit() const {
    return std::any_of(generators_.begin(), generators_.end(),
                       [](const VertexSet& g) { return g.empty(); });
}

std::string MonomialIdeal::monomial(const VertexSet& support) const {
    if (support.empty()) return "1";
    std::string out;
    support.for_each([&](Vertex v) {
        out += v < names_.size() ? names_[v] : "x" + std::to_string(v + 1);
    });
    return out;
}

SimplicialComplex link(const SimplicialComplex& cx, const VertexSet& face) {
    if (face.empty()) return cx;
    std::vector<VertexSet> rest;
    for (const auto& f : cx.facets())
        if (face.is_subset_of(f)) rest.push_back(f - face);
    if (rest.empty()) throw Error(ErrorCode::NotAFace, cx.label(face) + " is not a face");
    if (std::any_of(rest.begin(), rest.end(), [](const VertexSet& s) { return s.empty(); }))
        return SimplicialComplex::void_complex();

    VertexSet used;
    for (const auto& s : rest) used |= s;
    std::vector<Vertex> old_of_new = used.members();
    std::vector<Vertex> new_of_old(cx.universe_size(), 0);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < old_of_new.size(); ++i) {
        new_of_old[old_of_new[i]] = static_cast<Vertex>(i);
        names.push_back(cx.vertex_name(old_of_new[i]));
    }
    std::vector<VertexSet> facets;
    for (const auto& s : rest) {
        VertexSet t;
        s.for_each([&](Vertex v) { t.insert(new_of_old[v]); });
        facets.push_back(t);
    }
    return SimplicialComplex::from_facets(std::move(facets), old_of_new.size(), std::move(names));
}

MonomialIdeal alexander_dual_ideal(const SimplicialComplex& cx) {
    cx.pure_facet_size();
    std::vector<VertexSet> gens;
    for (const auto& f : cx.facets()) gens.push_back(f.complement(cx.universe_size()));
    std::vector<std::string> names = cx.names();
    return MonomialIdeal(cx.universe_size(), std::move(gens), std::move(names));
}

SimplicialComplex complex_from_dual_ideal(const MonomialIdeal& ideal) {
    std::vector<VertexSet> facets;
    for (const auto& g : ideal.generators()) facets.push_back(g.complement(ideal.variable_count()));
    return SimplicialComplex::from_facets(std::move(facets), ideal.variable_count(), ideal.names());
}

std::string fresh_vertex_name(const std::vector<std::string>& existing, std::size_t index) {
    auto taken = [&](const std::string& s) {
        return std::find(existing.begin(), existing.end(), s) != existing.end();
    };
    if (index < 26) {
        std::string letter(1, static_cast<char>('A' + index));
        if (!taken(letter)) return letter;
    }
    std::string base = "x" + std::to_string(index + 1);
    std::string candidate = base;
    for (int k = 1; taken(candidate); ++k) candidate = base + "_" + std::to_string(k);
    return candidate;
}

SimplicialComplex cone(const SimplicialComplex& cx, std::size_t extra) {
    if (extra == 0) throw Error(ErrorCode::BadParams, "cone needs at least one new vertex");
    const std::size_t n = cx.universe_size();
    if (n + extra > VertexSet::kMaxVertices)
        throw Error(ErrorCode::VertexOutOfRange, "cone exceeds 128 vertices");
    VertexSet apex;
    for (std::size_t i = 0; i < extra; ++i) apex.insert(static_cast<Vertex>(n + i));
    std::vector<VertexSet> facets;
    for (const auto& f : cx.facets()) facets.push_back(f | apex);
    std::vector<std::string> names = cx.names();
    if (cx.has_names())
        for (std::size_t i = 0; i < extra; ++i) names.push_back(fresh_vertex_name(names, n + i));
    return SimplicialComplex::from_facets(std::move(facets), n + extra, std::move(names));
}

SimplicialComplex relabel(const SimplicialComplex& cx, const std::vector<Vertex>& perm) {
    const std::size_t n = cx.universe_size();
    if (perm.size() != n) throw Error(ErrorCode::NotABijection, "permutation has wrong length");
    std::vector<bool> hit(n, false);
    for (Vertex image : perm) {
        if (image >= n || hit[image]) throw Error(ErrorCode::NotABijection, "not a permutation");
        hit[image] = true;
    }
    std::vector<VertexSet> facets;
    for (const auto& f : cx.facets()) {
        VertexSet t;
        f.for_each([&](Vertex v) { t.insert(perm[v]); });
        facets.push_back(t);
    }
    std::vector<std::string> names;
    if (cx.has_names()) {
        names.resize(n);
        for (std::size_t v = 0; v < n; ++v) names[perm[v]] = cx.names()[v];
    }
    return SimplicialComplex::from_facets(std::move(facets), n, std::move(names));
}

}  // namespace srdual
