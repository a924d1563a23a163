#ifndef BHCUT_PROPERTIES_HPP
#define BHCUT_PROPERTIES_HPP

// Structural checks over a generated (or deliberately perturbed) graph. Each
// failing check carries a counterexample that recheck() confirms by direct
// evaluation, independent of the checker that produced it.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "bhcut/cuts.hpp"
#include "bhcut/error.hpp"
#include "bhcut/topology.hpp"

namespace bhcut {

inline constexpr std::size_t kMaxOrbitVertices = 16;

struct PropertyResult {
    std::string name;
    int n = 0;
    bool holds = true;
    std::vector<VertexId> counterexample;
    std::string detail;
};

namespace detail {

inline PropertyResult fail(PropertyResult r, std::vector<VertexId> ce, std::string detail) {
    r.holds = false;
    r.counterexample = std::move(ce);
    r.detail = std::move(detail);
    return r;
}

/// Backtracking search for an automorphism extending the given vertex pairs.
class AutomorphismSearch {
public:
    explicit AutomorphismSearch(const BalancedHypercube& g) : g_(g), count_(g.vertex_count()) {
        adj_.assign(count_, std::vector<char>(count_, 0));
        for (VertexId v = 0; v < count_; ++v)
            for (const Arc& a : g.arcs(v)) adj_[v][a.to] = 1;
    }

    std::optional<std::vector<VertexId>> find(const std::vector<std::pair<VertexId, VertexId>>& fixed) {
        image_.assign(count_, kUnset);
        used_.assign(count_, 0);
        for (auto [from, to] : fixed) {
            if (image_[from] != kUnset && image_[from] != to) return std::nullopt;
            if (used_[to] && image_[from] != to) return std::nullopt;
            if (g_.degree(from) != g_.degree(to)) return std::nullopt;
            image_[from] = to;
            used_[to] = 1;
        }
        for (auto [a, _] : fixed)
            for (auto [b, __] : fixed)
                if (adj_[a][b] != adj_[image_[a]][image_[b]]) return std::nullopt;

        order_.clear();
        std::vector<char> queued(count_, 0);
        std::queue<VertexId> q;
        for (auto [from, _] : fixed) {
            if (!queued[from]) {
                queued[from] = 1;
                q.push(from);
            }
        }
        for (VertexId s = 0; s < count_; ++s) {
            if (q.empty() && !queued[s]) {
                queued[s] = 1;
                q.push(s);
            }
            while (!q.empty()) {
                const VertexId x = q.front();
                q.pop();
                order_.push_back(x);
                for (const Arc& a : g_.arcs(x)) {
                    if (!queued[a.to]) {
                        queued[a.to] = 1;
                        q.push(a.to);
                    }
                }
            }
        }
        if (extend(0)) return image_;
        return std::nullopt;
    }

private:
    static constexpr VertexId kUnset = ~VertexId{0};

    bool consistent(VertexId x, VertexId y, std::size_t depth) const {
        if (g_.degree(x) != g_.degree(y)) return false;
        for (std::size_t k = 0; k < depth; ++k) {
            const VertexId w = order_[k];
            if (adj_[x][w] != adj_[y][image_[w]]) return false;
        }
        return true;
    }

    bool extend(std::size_t depth) {
        if (depth == order_.size()) return true;
        const VertexId x = order_[depth];
        if (image_[x] != kUnset) {
            return consistent(x, image_[x], depth) && extend(depth + 1);
        }
        for (VertexId y = 0; y < count_; ++y) {
            if (used_[y] || !consistent(x, y, depth)) continue;
            image_[x] = y;
            used_[y] = 1;
            if (extend(depth + 1)) return true;
            image_[x] = kUnset;
            used_[y] = 0;
        }
        return false;
    }

    const BalancedHypercube& g_;
    VertexId count_;
    std::vector<std::vector<char>> adj_;
    std::vector<VertexId> image_;
    std::vector<char> used_;
    std::vector<VertexId> order_;
};

/// Multiset of (distance, degree) over all vertices as seen from v. Preserved
/// by every automorphism, so differing profiles rule one out.
inline std::map<std::pair<int, std::size_t>, int> distance_degree_profile(const BalancedHypercube& g, VertexId v) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<VertexId> q;
    dist[v] = 0;
    q.push(v);
    while (!q.empty()) {
        const VertexId x = q.front();
        q.pop();
        for (const Arc& a : g.arcs(x)) {
            if (dist[a.to] < 0) {
                dist[a.to] = dist[x] + 1;
                q.push(a.to);
            }
        }
    }
    std::map<std::pair<int, std::size_t>, int> profile;
    for (VertexId w = 0; w < g.vertex_count(); ++w) ++profile[{dist[w], g.degree(w)}];
    return profile;
}

}  // namespace detail

/// Vertices reachable from v under the full automorphism group.
inline std::vector<VertexId> vertex_orbit(const BalancedHypercube& g, VertexId v) {
    if (g.vertex_count() > kMaxOrbitVertices) {
        throw CapExceededError("full orbit computation limited to " + std::to_string(kMaxOrbitVertices) + " vertices");
    }
    detail::AutomorphismSearch search(g);
    std::vector<VertexId> orbit;
    for (VertexId w = 0; w < g.vertex_count(); ++w) {
        if (search.find({{v, w}})) orbit.push_back(w);
    }
    return orbit;
}

/// Edges {x, y} that some automorphism maps e onto.
inline std::vector<EdgeRef> edge_orbit(const BalancedHypercube& g, const EdgeRef& e) {
    if (g.vertex_count() > kMaxOrbitVertices) {
        throw CapExceededError("full orbit computation limited to " + std::to_string(kMaxOrbitVertices) + " vertices");
    }
    detail::AutomorphismSearch search(g);
    std::vector<EdgeRef> orbit;
    for (const EdgeRef& f : g.edges()) {
        if (search.find({{e.u, f.u}, {e.v, f.v}}) || search.find({{e.u, f.v}, {e.v, f.u}})) orbit.push_back(f);
    }
    return orbit;
}

inline PropertyResult check_regular(const BalancedHypercube& g) {
    PropertyResult r{"regular", g.n(), true, {}, {}};
    const auto expected = static_cast<std::size_t>(2 * g.n());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) != expected) {
            return detail::fail(r, {v}, "degree " + std::to_string(g.degree(v)) + " != " + std::to_string(expected));
        }
    }
    r.detail = "every vertex has degree " + std::to_string(expected);
    return r;
}

/// Proper 2-colouring given by inner-index parity (even = white, odd = black).
inline PropertyResult check_bipartite(const BalancedHypercube& g) {
    PropertyResult r{"bipartite", g.n(), true, {}, {}};
    for (const EdgeRef& e : g.edges()) {
        if (g.color(e.u) == g.color(e.v)) {
            return detail::fail(r, {e.u, e.v}, std::string("edge joins two ") + to_string(g.color(e.u)) + " vertices");
        }
    }
    r.detail = std::to_string(g.edge_count()) + " edges join white to black";
    return r;
}

inline PropertyResult check_twin_neighborhoods(const BalancedHypercube& g) {
    PropertyResult r{"twin_neighborhoods", g.n(), true, {}, {}};
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        if (g.neighbor_ids(u) != g.neighbor_ids(g.twin(u))) {
            return detail::fail(r, {u, g.twin(u)}, "N(u) != N(twin(u))");
        }
    }
    r.detail = std::to_string(g.vertex_count()) + " vertices checked";
    return r;
}

/// Any two distinct vertices with a common neighbour have exactly 2 or exactly 2n.
inline PropertyResult check_common_neighbor_dichotomy(const BalancedHypercube& g) {
    PropertyResult r{"common_neighbor_dichotomy", g.n(), true, {}, {}};
    const auto big = static_cast<std::size_t>(2 * g.n());
    std::size_t pairs = 0;
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        for (VertexId v = u + 1; v < g.vertex_count(); ++v) {
            const auto c = g.common_neighbors(u, v).size();
            if (c == 0) continue;
            ++pairs;
            if (c != 2 && c != big) {
                return detail::fail(r, {u, v}, std::to_string(c) + " common neighbours");
            }
        }
    }
    r.detail = std::to_string(pairs) + " pairs with common neighbours";
    return r;
}

inline PropertyResult check_triangle_free(const BalancedHypercube& g) {
    PropertyResult r{"triangle_free", g.n(), true, {}, {}};
    for (const EdgeRef& e : g.edges()) {
        const auto common = g.common_neighbors(e.u, e.v);
        if (!common.empty()) return detail::fail(r, {e.u, e.v, common.front()}, "triangle");
    }
    return r;
}

/// Up to 16 vertices: single vertex orbit and single edge orbit under the full
/// automorphism group. Larger graphs: every coordinate translation preserves
/// adjacency (translations act transitively on vertices).
inline PropertyResult check_transitivity(const BalancedHypercube& g) {
    PropertyResult r{"transitivity", g.n(), true, {}, {}};
    if (g.vertex_count() <= kMaxOrbitVertices) {
        const auto vorbit = vertex_orbit(g, 0);
        if (vorbit.size() != g.vertex_count()) {
            for (VertexId v = 0; v < g.vertex_count(); ++v) {
                if (!std::binary_search(vorbit.begin(), vorbit.end(), v)) {
                    return detail::fail(r, {0, v}, "no automorphism maps vertex 0 to " + std::to_string(v));
                }
            }
        }
        const auto edges = g.edges();
        if (edges.empty()) return detail::fail(r, {}, "graph has no edges");
        const auto eorbit = edge_orbit(g, edges.front());
        if (eorbit.size() != edges.size()) {
            for (const EdgeRef& e : edges) {
                if (std::find(eorbit.begin(), eorbit.end(), e) == eorbit.end()) {
                    return detail::fail(r, {edges.front().u, edges.front().v, e.u, e.v},
                                        "edge not in the orbit of the first edge");
                }
            }
        }
        r.detail = "vertex orbit " + std::to_string(vorbit.size()) + ", edge orbit " + std::to_string(eorbit.size());
        return r;
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto t = Translation::between(g.n(), 0, v);
        if (!preserves_tagged_adjacency(g, t)) {
            return detail::fail(r, {0, v}, "translation 0 -> " + std::to_string(v) + " is not an automorphism");
        }
    }
    r.detail = std::to_string(g.vertex_count()) + " translations are automorphisms";
    return r;
}

inline std::vector<PropertyResult> run_suite(const BalancedHypercube& g) {
    return {check_regular(g),        check_bipartite(g),     check_twin_neighborhoods(g),
            check_common_neighbor_dichotomy(g), check_triangle_free(g), check_transitivity(g)};
}

/// Confirms a failing result's counterexample by direct evaluation.
inline bool recheck(const BalancedHypercube& g, const PropertyResult& r) {
    if (r.holds) return false;
    const auto& ce = r.counterexample;
    auto brute_common = [&](VertexId u, VertexId v) {
        std::size_t c = 0;
        for (VertexId w = 0; w < g.vertex_count(); ++w) c += (g.adjacent(u, w) && g.adjacent(v, w)) ? 1 : 0;
        return c;
    };
    if (r.name == "regular") return ce.size() == 1 && g.degree(ce[0]) != static_cast<std::size_t>(2 * g.n());
    if (r.name == "bipartite") {
        return ce.size() == 2 && g.adjacent(ce[0], ce[1]) && inner_index(ce[0]) % 2 == inner_index(ce[1]) % 2;
    }
    if (r.name == "twin_neighborhoods") {
        if (ce.size() != 2 || mod4(inner_index(ce[1]) - inner_index(ce[0])) != 2) return false;
        for (VertexId w = 0; w < g.vertex_count(); ++w) {
            if (g.adjacent(ce[0], w) != g.adjacent(ce[1], w)) return true;
        }
        return false;
    }
    if (r.name == "common_neighbor_dichotomy") {
        if (ce.size() != 2) return false;
        const auto c = brute_common(ce[0], ce[1]);
        return c != 0 && c != 2 && c != static_cast<std::size_t>(2 * g.n());
    }
    if (r.name == "triangle_free") {
        return ce.size() == 3 && g.adjacent(ce[0], ce[1]) && g.adjacent(ce[1], ce[2]) && g.adjacent(ce[0], ce[2]);
    }
    if (r.name == "transitivity") {
        if (ce.size() == 2 && g.vertex_count() > kMaxOrbitVertices) {
            const auto t = Translation::between(g.n(), ce[0], ce[1]);
            for (const EdgeRef& e : g.edges()) {
                if (!g.adjacent(t.apply(e.u), t.apply(e.v))) return true;
            }
            return false;
        }
        if (ce.size() == 2) {
            return detail::distance_degree_profile(g, ce[0]) != detail::distance_degree_profile(g, ce[1]) ||
                   !detail::AutomorphismSearch(g).find({{ce[0], ce[1]}});
        }
        if (ce.size() == 4) {
            auto endpoint_degrees = [&](VertexId a, VertexId b) {
                return std::minmax(g.degree(a), g.degree(b));
            };
            return endpoint_degrees(ce[0], ce[1]) != endpoint_degrees(ce[2], ce[3]) ||
                   (!detail::AutomorphismSearch(g).find({{ce[0], ce[2]}, {ce[1], ce[3]}}) &&
                    !detail::AutomorphismSearch(g).find({{ce[0], ce[3]}, {ce[1], ce[2]}}));
        }
    }
    return false;
}

struct NegativeControl {
    std::string name;
    PropertyResult result;
    bool confirmed = false;  // counterexample re-checked independently
};

/// Deliberately broken copies of BH_n; every entry must come back failing.
inline std::vector<NegativeControl> negative_controls(int n) {
    const auto g = build(n);
    const VertexId u = 0;
    const auto missing = g.without_edge(u, g.step(u, 0, Sign::Plus));
    const auto twin_edge = g.with_edge(u, g.twin(u));
    std::vector<NegativeControl> out;
    auto add = [&](std::string name, const BalancedHypercube& broken, PropertyResult r) {
        const bool ok = recheck(broken, r);
        out.push_back({std::move(name), std::move(r), ok});
    };
    add("regular/edge-removed", missing, check_regular(missing));
    add("bipartite/twin-edge-added", twin_edge, check_bipartite(twin_edge));
    add("twin_neighborhoods/edge-removed", missing, check_twin_neighborhoods(missing));
    add("common_neighbor_dichotomy/edge-removed", missing, check_common_neighbor_dichotomy(missing));
    add("triangle_free/twin-edge-added", twin_edge, check_triangle_free(twin_edge));
    add("transitivity/edge-removed", missing, check_transitivity(missing));
    return out;
}

}  // namespace bhcut

#endif  // BHCUT_PROPERTIES_HPP
