#ifndef SRDUAL_VERTEX_SET_HPP
#define SRDUAL_VERTEX_SET_HPP

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace srdual {

using Vertex = std::uint32_t;

/// Subset of the vertex universe {0, ..., 127}, stored as two machine words.
/// Ordering is numeric on the 128-bit value (high word first), which is the
/// canonical facet order used throughout the library.
class VertexSet {
public:
    static constexpr std::size_t kMaxVertices = 128;

    constexpr VertexSet() = default;
    constexpr VertexSet(std::initializer_list<Vertex> members) {
        for (Vertex v : members) insert(v);
    }

    static constexpr VertexSet from_words(std::uint64_t lo, std::uint64_t hi = 0) {
        VertexSet s;
        s.words_ = {lo, hi};
        return s;
    }

    /// {0, ..., n-1}
    static constexpr VertexSet range(std::size_t n) {
        VertexSet s;
        if (n >= 128) {
            s.words_ = {~0ULL, ~0ULL};
        } else if (n >= 64) {
            s.words_ = {~0ULL, n == 64 ? 0ULL : (~0ULL >> (128 - n))};
        } else {
            s.words_ = {n == 0 ? 0ULL : (~0ULL >> (64 - n)), 0ULL};
        }
        return s;
    }

    static VertexSet from_members(const std::vector<Vertex>& members) {
        VertexSet s;
        for (Vertex v : members) s.insert(v);
        return s;
    }

    constexpr bool contains(Vertex v) const {
        return v < kMaxVertices && ((words_[v >> 6] >> (v & 63)) & 1ULL);
    }
    constexpr void insert(Vertex v) { words_[v >> 6] |= 1ULL << (v & 63); }
    constexpr void erase(Vertex v) { words_[v >> 6] &= ~(1ULL << (v & 63)); }

    constexpr std::size_t size() const {
        return static_cast<std::size_t>(std::popcount(words_[0]) + std::popcount(words_[1]));
    }
    constexpr bool empty() const { return (words_[0] | words_[1]) == 0; }

    constexpr bool is_subset_of(const VertexSet& other) const {
        return (words_[0] & ~other.words_[0]) == 0 && (words_[1] & ~other.words_[1]) == 0;
    }

    /// Complement inside {0, ..., n-1}.
    constexpr VertexSet complement(std::size_t n) const { return range(n) - *this; }

    /// Lowest member; undefined on the empty set.
    constexpr Vertex lowest() const {
        return words_[0] ? static_cast<Vertex>(std::countr_zero(words_[0]))
                         : static_cast<Vertex>(64 + std::countr_zero(words_[1]));
    }
    /// Highest member; undefined on the empty set.
    constexpr Vertex highest() const {
        return words_[1] ? static_cast<Vertex>(127 - std::countl_zero(words_[1]))
                         : static_cast<Vertex>(63 - std::countl_zero(words_[0]));
    }

    std::vector<Vertex> members() const {
        std::vector<Vertex> out;
        out.reserve(size());
        for_each([&](Vertex v) { out.push_back(v); });
        return out;
    }

    template <typename F>
    constexpr void for_each(F&& f) const {
        for (std::size_t w = 0; w < 2; ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                f(static_cast<Vertex>(64 * w + std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }

    constexpr std::uint64_t low_word() const { return words_[0]; }
    constexpr std::uint64_t high_word() const { return words_[1]; }

    friend constexpr VertexSet operator|(VertexSet a, const VertexSet& b) {
        a.words_[0] |= b.words_[0];
        a.words_[1] |= b.words_[1];
        return a;
    }
    friend constexpr VertexSet operator&(VertexSet a, const VertexSet& b) {
        a.words_[0] &= b.words_[0];
        a.words_[1] &= b.words_[1];
        return a;
    }
    friend constexpr VertexSet operator-(VertexSet a, const VertexSet& b) {
        a.words_[0] &= ~b.words_[0];
        a.words_[1] &= ~b.words_[1];
        return a;
    }
    friend constexpr VertexSet operator^(VertexSet a, const VertexSet& b) {
        a.words_[0] ^= b.words_[0];
        a.words_[1] ^= b.words_[1];
        return a;
    }
    constexpr VertexSet& operator|=(const VertexSet& b) { return *this = *this | b; }
    constexpr VertexSet& operator&=(const VertexSet& b) { return *this = *this & b; }
    constexpr VertexSet& operator-=(const VertexSet& b) { return *this = *this - b; }

    friend constexpr bool operator==(const VertexSet&, const VertexSet&) = default;
    friend constexpr std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
        if (auto c = a.words_[1] <=> b.words_[1]; c != 0) return c;
        return a.words_[0] <=> b.words_[0];
    }

private:
    std::array<std::uint64_t, 2> words_{0, 0};
};

/// Size of the intersection; the ridge test of the dual graph.
inline std::size_t intersection_size(const VertexSet& a, const VertexSet& b) {
    return (a & b).size();
}

}  // namespace srdual

template <>
struct std::hash<srdual::VertexSet> {
    std::size_t operator()(const srdual::VertexSet& s) const noexcept {
        std::uint64_t h = s.low_word() * 0x9E3779B97F4A7C15ULL;
        h ^= s.high_word() + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

#endif
