#ifndef BHCUT_PATTERNS_HPP
#define BHCUT_PATTERNS_HPP

// The five structure patterns (K1, K1,1, K1,2, K1,3, C4), the 4-vertex path
// P4, and exhaustive enumeration of their occurrences in a host graph.
//
// Vertex order conventions inside an Embedding:
//   K1   [v]
//   K11  [u, v]              u < v
//   K12  [center, l1, l2]    leaves ascending
//   K13  [center, l1, l2, l3]
//   P4   [a, b, c, d]        path order, a < d
//   C4   [v0, v1, v2, v3]    cyclic order, v0 smallest, v1 < v3

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "bhcut/error.hpp"
#include "bhcut/topology.hpp"

namespace bhcut {

enum class Shape : std::uint8_t { K1, K11, K12, K13, P4, C4 };

inline constexpr Shape kPatterns[] = {Shape::K1, Shape::K11, Shape::K12, Shape::K13, Shape::C4};
inline constexpr std::size_t kDefaultEnumerationBudget = 10'000'000;

inline const char* to_string(Shape s) noexcept {
    switch (s) {
        case Shape::K1: return "K1";
        case Shape::K11: return "K11";
        case Shape::K12: return "K12";
        case Shape::K13: return "K13";
        case Shape::P4: return "P4";
        case Shape::C4: return "C4";
    }
    return "?";
}

inline std::optional<Shape> parse_shape(std::string_view s) {
    if (s == "K1") return Shape::K1;
    if (s == "K11" || s == "K1,1") return Shape::K11;
    if (s == "K12" || s == "K1,2") return Shape::K12;
    if (s == "K13" || s == "K1,3") return Shape::K13;
    if (s == "P4") return Shape::P4;
    if (s == "C4") return Shape::C4;
    return std::nullopt;
}

/// True for the five shapes usable as H; P4 only appears as a subshape.
inline bool is_pattern(Shape s) noexcept { return s != Shape::P4; }

inline std::size_t shape_size(Shape s) noexcept {
    switch (s) {
        case Shape::K1: return 1;
        case Shape::K11: return 2;
        case Shape::K12: return 3;
        case Shape::K13:
        case Shape::P4:
        case Shape::C4: return 4;
    }
    return 0;
}

/// Connected subgraphs of `pattern` up to isomorphism, smallest first.
/// include_p4 only matters for C4.
inline std::vector<Shape> subgraph_closure(Shape pattern, bool include_p4 = true) {
    switch (pattern) {
        case Shape::K1: return {Shape::K1};
        case Shape::K11: return {Shape::K1, Shape::K11};
        case Shape::K12: return {Shape::K1, Shape::K11, Shape::K12};
        case Shape::K13: return {Shape::K1, Shape::K11, Shape::K12, Shape::K13};
        case Shape::P4: return {Shape::K1, Shape::K11, Shape::K12, Shape::P4};
        case Shape::C4:
            if (include_p4) return {Shape::K1, Shape::K11, Shape::K12, Shape::P4, Shape::C4};
            return {Shape::K1, Shape::K11, Shape::K12, Shape::C4};
    }
    return {};
}

/// Required edges as index pairs into Embedding::vertices.
inline std::vector<std::pair<int, int>> required_edges(Shape s) {
    switch (s) {
        case Shape::K1: return {};
        case Shape::K11: return {{0, 1}};
        case Shape::K12: return {{0, 1}, {0, 2}};
        case Shape::K13: return {{0, 1}, {0, 2}, {0, 3}};
        case Shape::P4: return {{0, 1}, {1, 2}, {2, 3}};
        case Shape::C4: return {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    }
    return {};
}

struct Embedding {
    Shape shape = Shape::K1;
    std::vector<VertexId> vertices;

    friend bool operator==(const Embedding&, const Embedding&) = default;
    friend auto operator<=>(const Embedding&, const Embedding&) = default;
};

/// Rewrites the vertex order into the canonical form listed at the top of
/// this header. Does not check adjacency.
inline Embedding canonicalize(Embedding e) {
    auto& v = e.vertices;
    switch (e.shape) {
        case Shape::K1: break;
        case Shape::K11: std::sort(v.begin(), v.end()); break;
        case Shape::K12:
        case Shape::K13:
            if (!v.empty()) std::sort(v.begin() + 1, v.end());
            break;
        case Shape::P4:
            if (v.size() == 4 && v.front() > v.back()) std::reverse(v.begin(), v.end());
            break;
        case Shape::C4:
            if (v.size() == 4) {
                const auto pos = static_cast<std::size_t>(std::min_element(v.begin(), v.end()) - v.begin());
                std::rotate(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(pos), v.end());
                if (v[1] > v[3]) std::swap(v[1], v[3]);
            }
            break;
    }
    return e;
}

struct ValidationResult {
    bool ok = true;
    std::string reason;

    explicit operator bool() const noexcept { return ok; }
};

inline ValidationResult is_valid_embedding(const BalancedHypercube& g, const Embedding& e) {
    if (e.vertices.size() != shape_size(e.shape)) {
        return {false, std::string(to_string(e.shape)) + " needs " + std::to_string(shape_size(e.shape)) +
                           " vertices, got " + std::to_string(e.vertices.size())};
    }
    for (VertexId v : e.vertices) {
        if (!g.contains(v)) return {false, "vertex id " + std::to_string(v) + " not in graph"};
    }
    auto sorted = e.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        return {false, "repeated vertex"};
    }
    for (auto [a, b] : required_edges(e.shape)) {
        const VertexId x = e.vertices[static_cast<std::size_t>(a)];
        const VertexId y = e.vertices[static_cast<std::size_t>(b)];
        if (!g.adjacent(x, y)) {
            return {false, "missing edge " + g.vertex(x).to_string() + " -- " + g.vertex(y).to_string()};
        }
    }
    return {};
}

namespace detail {

inline std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline std::uint64_t path_count(const BalancedHypercube& g) {
    std::uint64_t total = 0;
    for (const EdgeRef& e : g.edges()) {
        total += (g.degree(e.u) - 1) * (g.degree(e.v) - 1);
    }
    return total;
}

}  // namespace detail

/// Upper bound on the number of embeddings enumerate() will produce.
inline std::uint64_t projected_count(const BalancedHypercube& g, Shape s) {
    std::uint64_t total = 0;
    switch (s) {
        case Shape::K1: return g.vertex_count();
        case Shape::K11: return g.edge_count();
        case Shape::K12:
        case Shape::K13:
            for (VertexId v = 0; v < g.vertex_count(); ++v) {
                total += detail::choose(g.degree(v), s == Shape::K12 ? 2 : 3);
            }
            return total;
        case Shape::P4:
        case Shape::C4: return detail::path_count(g);
    }
    return total;
}

/// All occurrences of `shape` in g, canonical and sorted, without duplicates.
inline std::vector<Embedding> enumerate(const BalancedHypercube& g, Shape shape,
                                        std::size_t budget = kDefaultEnumerationBudget) {
    const auto projected = projected_count(g, shape);
    if (projected > budget) {
        throw CapExceededError(std::string("enumerating ") + to_string(shape) + " would produce up to " +
                               std::to_string(projected) + " embeddings (budget " + std::to_string(budget) + ")");
    }
    std::vector<Embedding> out;
    const auto count = static_cast<VertexId>(g.vertex_count());
    switch (shape) {
        case Shape::K1:
            for (VertexId v = 0; v < count; ++v) out.push_back({shape, {v}});
            break;
        case Shape::K11:
            for (const EdgeRef& e : g.edges()) out.push_back({shape, {e.u, e.v}});
            break;
        case Shape::K12:
            for (VertexId c = 0; c < count; ++c) {
                const auto nb = g.neighbor_ids(c);
                for (std::size_t i = 0; i < nb.size(); ++i)
                    for (std::size_t j = i + 1; j < nb.size(); ++j) out.push_back({shape, {c, nb[i], nb[j]}});
            }
            break;
        case Shape::K13:
            for (VertexId c = 0; c < count; ++c) {
                const auto nb = g.neighbor_ids(c);
                for (std::size_t i = 0; i < nb.size(); ++i)
                    for (std::size_t j = i + 1; j < nb.size(); ++j)
                        for (std::size_t k = j + 1; k < nb.size(); ++k)
                            out.push_back({shape, {c, nb[i], nb[j], nb[k]}});
            }
            break;
        case Shape::P4: {
            // Each path a-b-c-d is generated from both orientations of its middle
            // edge; keep the one with a < d.
            for (VertexId b = 0; b < count; ++b) {
                for (VertexId c : g.neighbor_ids(b)) {
                    for (VertexId a : g.neighbor_ids(b)) {
                        if (a == c) continue;
                        for (VertexId d : g.neighbor_ids(c)) {
                            if (d == b || d == a || a > d) continue;
                            out.push_back({shape, {a, b, c, d}});
                        }
                    }
                }
            }
            break;
        }
        case Shape::C4:
            // v0 is the smallest vertex of the cycle, x < y its two cycle neighbours.
            for (VertexId v0 = 0; v0 < count; ++v0) {
                const auto nb = g.neighbor_ids(v0);
                for (std::size_t i = 0; i < nb.size(); ++i) {
                    if (nb[i] < v0) continue;
                    for (std::size_t j = i + 1; j < nb.size(); ++j) {
                        for (VertexId w : g.common_neighbors(nb[i], nb[j])) {
                            if (w > v0) out.push_back({shape, {v0, nb[i], w, nb[j]}});
                        }
                    }
                }
            }
            break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Number of distinct 4-cycles.
inline std::uint64_t count_c4(const BalancedHypercube& g, std::size_t budget = kDefaultEnumerationBudget) {
    return enumerate(g, Shape::C4, budget).size();
}

}  // namespace bhcut

#endif  // BHCUT_PATTERNS_HPP
