#include "srdual/glue.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "srdual/dual_graph.hpp"
#include "srdual/error.hpp"

namespace srdual {

namespace {

std::vector<VertexSet> overlap_faces(const std::vector<VertexSet>& a,
                                     const std::vector<VertexSet>& b) {
    std::vector<VertexSet> meets;
    for (const auto& f : a)
        for (const auto& g : b) {
            const VertexSet m = f & g;
            if (!m.empty()) meets.push_back(m);
        }
    std::sort(meets.begin(), meets.end());
    meets.erase(std::unique(meets.begin(), meets.end()), meets.end());
    std::vector<VertexSet> maximal;
    for (const auto& m : meets) {
        const bool dominated = std::any_of(meets.begin(), meets.end(), [&](const VertexSet& o) {
            return o != m && m.is_subset_of(o);
        });
        if (!dominated) maximal.push_back(m);
    }
    return maximal;
}

// The overlap as a complex on its own vertices, for the (S2) precondition.
SimplicialComplex compressed(const std::vector<VertexSet>& faces) {
    VertexSet used;
    for (const auto& f : faces) used |= f;
    const auto members = used.members();
    std::vector<Vertex> index(used.highest() + 1, 0);
    for (std::size_t i = 0; i < members.size(); ++i) index[members[i]] = static_cast<Vertex>(i);
    std::vector<VertexSet> out;
    for (const auto& f : faces) {
        VertexSet g;
        f.for_each([&](Vertex v) { g.insert(index[v]); });
        out.push_back(g);
    }
    return SimplicialComplex::from_facets(std::move(out));
}

std::vector<std::string> extended_names(std::vector<std::string> names, std::size_t extra) {
    if (names.empty()) return names;
    for (std::size_t i = 0; i < extra; ++i) names.push_back(fresh_vertex_name(names, names.size()));
    return names;
}

}  // namespace

GlueResult glue(const GlueSpec& spec) {
    const SimplicialComplex& left = spec.left;
    const SimplicialComplex& right = spec.right;
    const std::size_t d = left.pure_facet_size();
    if (right.pure_facet_size() != d)
        throw Error(ErrorCode::DimensionMismatch, "glued complexes have different facet sizes");
    if (spec.level == 0) throw Error(ErrorCode::BadParams, "Serre level must be at least 1");
    if (spec.level > 3)
        throw Error(ErrorCode::UnsupportedLevel,
                    "overlap check for (S" + std::to_string(spec.level - 1) + ") not available");

    const std::size_t n_left = left.universe_size();
    const std::size_t n_right = right.universe_size();
    constexpr Vertex kUnmapped = static_cast<Vertex>(-1);
    std::vector<Vertex> map(n_right, kUnmapped);
    VertexSet image;
    for (const auto& [r, l] : spec.identify) {
        if (r >= n_right || l >= n_left)
            throw Error(ErrorCode::VertexOutOfRange, "identified vertex outside its complex");
        if (map[r] != kUnmapped || image.contains(l))
            throw Error(ErrorCode::NotABijection, "identification is not injective");
        map[r] = l;
        image.insert(l);
    }
    Vertex next = static_cast<Vertex>(n_left);
    for (auto& m : map)
        if (m == kUnmapped) m = next++;
    const std::size_t n = next;
    if (n > VertexSet::kMaxVertices)
        throw Error(ErrorCode::VertexOutOfRange, "glued universe larger than 128 vertices");

    std::vector<VertexSet> mapped;
    for (const auto& f : right.facets()) {
        VertexSet g;
        f.for_each([&](Vertex v) { g.insert(map[v]); });
        mapped.push_back(g);
    }

    GlueResult result{left, map, overlap_faces(left.facets(), mapped), std::nullopt, std::nullopt};
    if (result.overlap.empty())
        throw Error(ErrorCode::OverlapTooSmall, "the complexes do not meet");
    const std::size_t k = result.overlap.front().size();
    if (!std::all_of(result.overlap.begin(), result.overlap.end(),
                     [&](const VertexSet& f) { return f.size() == k; }))
        throw Error(ErrorCode::OverlapNotPure, "overlap complex is not pure");
    if (k + 1 < d)
        throw Error(ErrorCode::OverlapTooSmall, "overlap has dimension " + std::to_string(k - 1) +
                                                    ", need at least " + std::to_string(d - 2));
    // Overlaps of dimension 0 or less are trivially (S2).
    if (spec.level == 3 && k >= 2 && !is_s2(compressed(result.overlap)).holds)
        throw Error(ErrorCode::OverlapSerreFailure, "overlap complex does not satisfy (S2)");

    std::vector<VertexSet> all = left.facets();
    all.insert(all.end(), mapped.begin(), mapped.end());
    std::vector<std::string> names;
    if (left.has_names()) names = extended_names(left.names(), n - n_left);
    result.complex = SimplicialComplex::from_facets(std::move(all), n, std::move(names));

    if (d >= 2) {
        result.verdict = is_s2(result.complex);
        result.inputs_s2 = is_s2(left).holds && is_s2(right).holds;
    }
    return result;
}

GlueResult glue_along_facet(const SimplicialComplex& left, const VertexSet& left_facet,
                            const SimplicialComplex& right, const VertexSet& right_facet,
                            unsigned level) {
    if (!left.has_facet(left_facet) || !right.has_facet(right_facet))
        throw Error(ErrorCode::NotAFacet, "gluing facet missing from its complex");
    if (left_facet.size() != right_facet.size())
        throw Error(ErrorCode::DimensionMismatch, "gluing facets have different sizes");

    const auto rv = right_facet.members();
    auto lv = left_facet.members();
    const bool check_edges = left_facet.size() >= 2;
    const std::size_t separate =
        check_edges ? build_dual_graph(left).edge_count() + build_dual_graph(right).edge_count() : 0;

    std::optional<GlueResult> first;
    do {
        GlueSpec spec{left, right, {}, level};
        for (std::size_t i = 0; i < rv.size(); ++i) spec.identify.emplace_back(rv[i], lv[i]);
        GlueResult r = glue(spec);
        if (!check_edges || build_dual_graph(r.complex).edge_count() == separate) return r;
        if (!first) first = std::move(r);
    } while (std::next_permutation(lv.begin(), lv.end()));
    return std::move(*first);
}

namespace {

std::deque<Vertex> initial_window(const SimplicialComplex& cx, const VertexSet& start,
                                  const std::vector<Vertex>& drop_order) {
    if (!cx.has_facet(start)) throw Error(ErrorCode::NotAFacet, "chain start is not a facet");
    if (!drop_order.empty()) {
        VertexSet listed;
        for (Vertex v : drop_order) listed.insert(v);
        if (listed != start || drop_order.size() != start.size())
            throw Error(ErrorCode::BadParams, "drop order must list the start facet's vertices");
        return {drop_order.begin(), drop_order.end()};
    }
    const auto members = start.members();
    Vertex first = members.front();
    for (Vertex v : members) {
        VertexSet ridge = start;
        ridge.erase(v);
        const bool shared = std::any_of(cx.facets().begin(), cx.facets().end(),
                                        [&](const VertexSet& f) {
                                            return f != start && ridge.is_subset_of(f);
                                        });
        if (!shared) {
            first = v;
            break;
        }
    }
    std::deque<Vertex> window{first};
    for (Vertex v : members)
        if (v != first) window.push_back(v);
    return window;
}

VertexSet window_set(const std::deque<Vertex>& w) {
    VertexSet s;
    for (Vertex v : w) s.insert(v);
    return s;
}

}  // namespace

SimplicialComplex append_facet_chain(const SimplicialComplex& cx, const VertexSet& start,
                                     std::size_t steps, const std::vector<Vertex>& drop_order) {
    std::deque<Vertex> window = initial_window(cx, start, drop_order);
    if (steps == 0) return cx;
    const std::size_t n = cx.universe_size();
    std::vector<VertexSet> facets = cx.facets();
    for (std::size_t i = 0; i < steps; ++i) {
        window.pop_front();
        window.push_back(static_cast<Vertex>(n + i));
        facets.push_back(window_set(window));
    }
    std::vector<std::string> names;
    if (cx.has_names()) names = extended_names(cx.names(), steps);
    return SimplicialComplex::from_facets(std::move(facets), n + steps, std::move(names));
}

VertexSet chain_end(const SimplicialComplex& cx, const VertexSet& start, std::size_t steps,
                    const std::vector<Vertex>& drop_order) {
    std::deque<Vertex> window = initial_window(cx, start, drop_order);
    for (std::size_t i = 0; i < steps; ++i) {
        window.pop_front();
        window.push_back(static_cast<Vertex>(cx.universe_size() + i));
    }
    return window_set(window);
}

}  // namespace srdual
