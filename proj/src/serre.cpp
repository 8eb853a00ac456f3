#include "srdual/serre.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include <boost/multiprecision/cpp_int.hpp>

#include "srdual/dual_graph.hpp"
#include "srdual/error.hpp"

namespace srdual {

namespace {

constexpr int kUnset = -1;

// Component ids of the nodes containing s; kUnset for the others.
std::vector<int> superfacet_components(const DualGraph& g, const VertexSet& s) {
    std::vector<int> comp(g.size(), kUnset);
    int next = 0;
    for (std::size_t start = 0; start < g.size(); ++start) {
        if (comp[start] != kUnset || !s.is_subset_of(g.node(start))) continue;
        std::vector<std::size_t> stack{start};
        comp[start] = next;
        while (!stack.empty()) {
            const std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t w : g.neighbors(u)) {
                if (comp[w] == kUnset && s.is_subset_of(g.node(w))) {
                    comp[w] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    return comp;
}

}  // namespace

S2Verdict is_locally_connected(const SimplicialComplex& cx) {
    const DualGraph g = build_dual_graph(cx);
    std::unordered_map<VertexSet, std::vector<int>> memo;
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            if (g.adjacent(i, j)) continue;
            const VertexSet s = g.node(i) & g.node(j);
            auto it = memo.find(s);
            if (it == memo.end()) it = memo.emplace(s, superfacet_components(g, s)).first;
            if (it->second[i] != it->second[j]) {
                S2Verdict v;
                v.failure = S2Failure::NotLocallyConnected;
                v.witness = SeparationWitness{g.node(i), g.node(j), s};
                return v;
            }
        }
    }
    S2Verdict v;
    v.holds = true;
    return v;
}

S2Verdict is_s2(const SimplicialComplex& cx) {
    if (cx.dimension() < 1)
        throw Error(ErrorCode::DimensionTooSmall, "(S2) check needs facets of size >= 2");
    if (!cx.is_pure()) {
        S2Verdict v;
        v.failure = S2Failure::NotPure;
        return v;
    }
    return is_locally_connected(cx);
}

bool witness_separates(const SimplicialComplex& cx, const SeparationWitness& w) {
    if (!cx.has_facet(w.u) || !cx.has_facet(w.v) || (w.u & w.v) != w.separator) return false;
    const DualGraph g = build_dual_graph(cx);
    const DualGraph sub = induced_on_superfacets(g, w.separator);
    auto a = sub.index_of(w.u);
    auto b = sub.index_of(w.v);
    return !sub.distances_from(*a)[*b].has_value();
}

bool linear_syzygy_check(const MonomialIdeal& ideal) {
    const auto& gens = ideal.generators();
    if (gens.size() <= 1) return true;
    const auto t = ideal.degree();
    if (!t) throw Error(ErrorCode::NotEquigenerated, "generators of different degrees");

    // For each lcm support, the components of the "linear step" graph on the
    // generators dividing it.
    std::unordered_map<VertexSet, std::vector<int>> memo;
    auto components_under = [&](const VertexSet& lcm) -> const std::vector<int>& {
        auto it = memo.find(lcm);
        if (it != memo.end()) return it->second;
        std::vector<int> comp(gens.size(), kUnset);
        int next = 0;
        for (std::size_t s = 0; s < gens.size(); ++s) {
            if (comp[s] != kUnset || !gens[s].is_subset_of(lcm)) continue;
            std::deque<std::size_t> queue{s};
            comp[s] = next;
            while (!queue.empty()) {
                const std::size_t a = queue.front();
                queue.pop_front();
                for (std::size_t b = 0; b < gens.size(); ++b) {
                    if (comp[b] != kUnset || !gens[b].is_subset_of(lcm)) continue;
                    if ((gens[a] | gens[b]).size() == *t + 1) {
                        comp[b] = next;
                        queue.push_back(b);
                    }
                }
            }
            ++next;
        }
        return memo.emplace(lcm, std::move(comp)).first->second;
    };

    for (std::size_t a = 0; a < gens.size(); ++a) {
        for (std::size_t b = a + 1; b < gens.size(); ++b) {
            const auto& comp = components_under(gens[a] | gens[b]);
            if (comp[a] != comp[b]) return false;
        }
    }
    return true;
}

std::string to_string(const Field& f) {
    return f.characteristic == 0 ? "QQ" : "GF(" + std::to_string(f.characteristic) + ")";
}

std::size_t BettiVector::at(int dim) const {
    const int idx = dim + 1;
    if (idx < 0 || idx >= static_cast<int>(reduced.size())) return 0;
    return reduced[static_cast<std::size_t>(idx)];
}

namespace {

using BigInt = boost::multiprecision::cpp_int;

std::size_t rank_bareiss(std::vector<std::vector<BigInt>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    BigInt prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t result = 1;
    base %= p;
    while (exp) {
        if (exp & 1) result = result * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return result;
}

std::size_t rank_mod_p(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        const std::uint64_t inv = pow_mod(m[r][c], p - 2, p);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            const std::uint64_t factor = m[i][c] * inv % p;
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] = (m[i][j] + (p - factor) * m[r][j]) % p;
        }
        ++r;
    }
    return r;
}

// Faces grouped by dimension: result[k] holds the (k-1)-dimensional faces.
std::vector<std::vector<VertexSet>> faces_by_dimension(const SimplicialComplex& cx) {
    const int top = cx.dimension();
    std::vector<std::unordered_set<VertexSet>> sets(static_cast<std::size_t>(top) + 2);
    for (const auto& f : cx.facets()) {
        const auto verts = f.members();
        if (verts.size() > 24) throw Error(ErrorCode::BadParams, "facet too large for homology");
        const std::uint32_t limit = 1u << verts.size();
        for (std::uint32_t sub = 0; sub < limit; ++sub) {
            VertexSet s;
            for (std::size_t b = 0; b < verts.size(); ++b)
                if (sub >> b & 1u) s.insert(verts[b]);
            sets[s.size()].insert(s);
        }
    }
    std::vector<std::vector<VertexSet>> out;
    for (auto& s : sets) {
        out.emplace_back(s.begin(), s.end());
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

}  // namespace

BettiVector reduced_betti(const SimplicialComplex& cx, Field field) {
    const auto faces = faces_by_dimension(cx);
    const std::size_t levels = faces.size();  // dimensions -1 .. top

    // rank[k] = rank of the boundary map from level k to level k-1.
    std::vector<std::size_t> rank(levels + 1, 0);
    for (std::size_t k = 1; k < levels; ++k) {
        const auto& lower = faces[k - 1];
        const auto& upper = faces[k];
        if (lower.empty() || upper.empty()) continue;
        std::unordered_map<VertexSet, std::size_t> row_of;
        for (std::size_t i = 0; i < lower.size(); ++i) row_of[lower[i]] = i;

        std::vector<std::vector<int>> entries(lower.size(), std::vector<int>(upper.size(), 0));
        for (std::size_t c = 0; c < upper.size(); ++c) {
            int sign = 1;
            upper[c].for_each([&](Vertex v) {
                VertexSet boundary = upper[c];
                boundary.erase(v);
                entries[row_of.at(boundary)][c] = sign;
                sign = -sign;
            });
        }
        if (field.characteristic == 0) {
            std::vector<std::vector<BigInt>> m(lower.size(), std::vector<BigInt>(upper.size()));
            for (std::size_t i = 0; i < lower.size(); ++i)
                for (std::size_t j = 0; j < upper.size(); ++j) m[i][j] = entries[i][j];
            rank[k] = rank_bareiss(std::move(m));
        } else {
            const std::uint64_t p = field.characteristic;
            std::vector<std::vector<std::uint64_t>> m(lower.size(),
                                                      std::vector<std::uint64_t>(upper.size()));
            for (std::size_t i = 0; i < lower.size(); ++i)
                for (std::size_t j = 0; j < upper.size(); ++j)
                    m[i][j] = static_cast<std::uint64_t>((entries[i][j] % static_cast<int>(p) +
                                                          static_cast<int>(p)) %
                                                         static_cast<int>(p));
            rank[k] = rank_mod_p(std::move(m), p);
        }
    }

    BettiVector out;
    out.field = field;
    for (std::size_t k = 0; k < levels; ++k)
        out.reduced.push_back(faces[k].size() - rank[k] - rank[k + 1]);
    return out;
}

bool is_connected(const SimplicialComplex& cx) {
    const auto& facets = cx.facets();
    std::vector<std::size_t> parent(facets.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < facets.size(); ++i)
        for (std::size_t j = i + 1; j < facets.size(); ++j)
            if (!(facets[i] & facets[j]).empty()) parent[find(i)] = find(j);
    std::size_t roots = 0;
    for (std::size_t i = 0; i < facets.size(); ++i) roots += find(i) == i;
    return roots <= 1;
}

bool is_buchsbaum(const SimplicialComplex& cx, Field field) {
    if (cx.dimension() < 1)
        throw Error(ErrorCode::DimensionTooSmall, "Buchsbaum check needs facets of size >= 2");
    if (!cx.is_pure()) return false;
    const int d = static_cast<int>(*cx.facet_size());
    const auto faces = faces_by_dimension(cx);
    // Links of facets are {∅}: nothing below dimension -1 to check.
    for (std::size_t k = 1; k + 1 < faces.size(); ++k) {
        for (const auto& face : faces[k]) {
            const SimplicialComplex lk = link(cx, face);
            const int link_dim = d - static_cast<int>(k) - 1;
            const BettiVector betti = reduced_betti(lk, field);
            for (int dim = -1; dim < link_dim; ++dim)
                if (betti.at(dim) != 0) return false;
        }
    }
    return true;
}

BuchsbaumReport buchsbaum_report(const SimplicialComplex& cx) {
    return {is_buchsbaum(cx, Field::gf(2)), is_buchsbaum(cx, Field::rationals())};
}

bool check_s_level(const SimplicialComplex& cx, unsigned level) {
    if (level <= 1) return true;
    if (level == 2) return is_s2(cx).holds;
    throw Error(ErrorCode::UnsupportedLevel,
                "no combinatorial test for (S" + std::to_string(level) + ")");
}

}  // namespace srdual
