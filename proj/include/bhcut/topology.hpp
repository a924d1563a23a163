#ifndef BHCUT_TOPOLOGY_HPP
#define BHCUT_TOPOLOGY_HPP

// Balanced hypercube BH_n: vertices are n-tuples (a_0, ..., a_{n-1}) over
// {0,1,2,3}. a_0 is the inner index, a_1..a_{n-1} the outer indices. Every
// vertex has two neighbours per dimension i: both move a_0 by +-1, and for
// i >= 1 both also move a_i by (-1)^{a_0}. All arithmetic is mod 4.

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bhcut/error.hpp"

namespace bhcut {

using VertexId = std::uint32_t;

inline constexpr int kDefaultMaxDimension = 8;

enum class Sign : std::int8_t { Plus, Minus };
enum class Color : std::int8_t { White, Black };

inline constexpr int mod4(int x) noexcept { return ((x % 4) + 4) % 4; }

inline const char* to_string(Sign s) noexcept { return s == Sign::Plus ? "+" : "-"; }
inline const char* to_string(Color c) noexcept { return c == Color::White ? "white" : "black"; }

/// A vertex as its coordinate tuple. coords[0] is the inner index.
struct Vertex {
    std::vector<int> coords;

    int dimension() const noexcept { return static_cast<int>(coords.size()); }
    int inner() const { return coords.at(0); }

    /// Base-4 packing: sum of coords[i] * 4^i.
    VertexId id() const {
        VertexId id = 0;
        for (auto it = coords.rbegin(); it != coords.rend(); ++it) id = id * 4 + static_cast<VertexId>(*it);
        return id;
    }

    static Vertex from_id(int n, VertexId id) {
        Vertex v;
        v.coords.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            v.coords[static_cast<std::size_t>(i)] = static_cast<int>(id & 3u);
            id >>= 2;
        }
        return v;
    }

    /// Label "a0a1...a_{n-1}" as used in DOT output.
    std::string label() const {
        std::string s;
        for (int c : coords) s.push_back(static_cast<char>('0' + c));
        return s;
    }

    /// Comma separated "a0,a1,...".
    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (i) s.push_back(',');
            s += std::to_string(coords[i]);
        }
        return s;
    }

    friend bool operator==(const Vertex&, const Vertex&) = default;
    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

inline int inner_index(VertexId id) noexcept { return static_cast<int>(id & 3u); }
inline int coordinate(VertexId id, int i) noexcept { return static_cast<int>((id >> (2 * i)) & 3u); }

inline VertexId with_coordinate(VertexId id, int i, int value) noexcept {
    const VertexId shift = static_cast<VertexId>(2 * i);
    return (id & ~(VertexId{3} << shift)) | (static_cast<VertexId>(mod4(value)) << shift);
}

/// Tagged adjacency entry: `to` is u^{dimension sign}.
struct Arc {
    VertexId to;
    int dimension;
    Sign sign;

    friend bool operator==(const Arc&, const Arc&) = default;
};

struct Neighbor {
    Vertex vertex;
    int dimension;
    Sign sign;

    friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

/// Undirected edge, u < v.
struct EdgeRef {
    VertexId u;
    VertexId v;
    int dimension;

    friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
    friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

/// Induced subgraph on the vertices whose last coordinate equals k.
struct Subcube {
    int k = 0;
    std::vector<VertexId> vertices;
    std::vector<EdgeRef> edges;
};

/// Formula neighbour of `id` in BH_n: u^{i+} or u^{i-}.
inline VertexId formula_step(VertexId id, int dimension, Sign sign) noexcept {
    const int a0 = inner_index(id);
    VertexId out = with_coordinate(id, 0, a0 + (sign == Sign::Plus ? 1 : -1));
    if (dimension >= 1) {
        const int delta = (a0 % 2 == 0) ? 1 : -1;
        out = with_coordinate(out, dimension, coordinate(id, dimension) + delta);
    }
    return out;
}

class BalancedHypercube {
public:
    /// Builds BH_n with precomputed tagged adjacency.
    static BalancedHypercube build(int n, int max_dimension = kDefaultMaxDimension) {
        if (n < 1 || n > max_dimension) {
            throw DimensionError("dimension n=" + std::to_string(n) + " outside supported range [1, " +
                                 std::to_string(max_dimension) + "]");
        }
        BalancedHypercube g;
        g.n_ = n;
        const VertexId count = VertexId{1} << (2 * n);
        g.arcs_.resize(count);
        for (VertexId u = 0; u < count; ++u) {
            auto& out = g.arcs_[u];
            out.reserve(static_cast<std::size_t>(2 * n));
            for (int i = 0; i < n; ++i) {
                out.push_back({formula_step(u, i, Sign::Plus), i, Sign::Plus});
                out.push_back({formula_step(u, i, Sign::Minus), i, Sign::Minus});
            }
        }
        return g;
    }

    /// Graph on the 4^n coordinate tuples with an explicit edge list. Used for
    /// parsed files and perturbed copies; the result need not be BH_n.
    static BalancedHypercube from_edges(int n, std::span<const EdgeRef> edges,
                                        int max_dimension = kDefaultMaxDimension) {
        if (n < 1 || n > max_dimension) {
            throw DimensionError("dimension n=" + std::to_string(n) + " outside supported range [1, " +
                                 std::to_string(max_dimension) + "]");
        }
        BalancedHypercube g;
        g.n_ = n;
        g.arcs_.resize(VertexId{1} << (2 * n));
        for (const auto& e : edges) {
            g.check(e.u);
            g.check(e.v);
            if (e.u == e.v) throw Error("self-loop at vertex " + std::to_string(e.u));
            if (e.dimension < 0 || e.dimension >= n) {
                throw Error("edge dimension " + std::to_string(e.dimension) + " out of range");
            }
            if (g.adjacent(e.u, e.v)) continue;
            g.arcs_[e.u].push_back({e.v, e.dimension, sign_between(e.u, e.v)});
            g.arcs_[e.v].push_back({e.u, e.dimension, sign_between(e.v, e.u)});
        }
        for (auto& out : g.arcs_) sort_arcs(out);
        return g;
    }

    int n() const noexcept { return n_; }
    std::size_t vertex_count() const noexcept { return arcs_.size(); }

    std::size_t edge_count() const noexcept {
        std::size_t deg = 0;
        for (const auto& out : arcs_) deg += out.size();
        return deg / 2;
    }

    bool contains(VertexId id) const noexcept { return id < arcs_.size(); }

    void check(VertexId id) const {
        if (!contains(id)) {
            throw UnknownVertexError("vertex id " + std::to_string(id) + " not in BH_" + std::to_string(n_));
        }
    }

    /// Validates coordinates and returns the canonical id.
    VertexId id_of(const Vertex& v) const {
        if (v.dimension() != n_) {
            throw UnknownVertexError("vertex (" + v.to_string() + ") has " + std::to_string(v.dimension()) +
                                     " coordinates, expected " + std::to_string(n_));
        }
        for (int c : v.coords) {
            if (c < 0 || c > 3) throw UnknownVertexError("vertex (" + v.to_string() + ") has coordinate outside 0..3");
        }
        return v.id();
    }

    Vertex vertex(VertexId id) const {
        check(id);
        return Vertex::from_id(n_, id);
    }

    std::span<const Arc> arcs(VertexId id) const {
        check(id);
        return arcs_[id];
    }

    std::size_t degree(VertexId id) const { return arcs(id).size(); }

    /// Neighbours sorted by (dimension, sign) with + before -.
    std::vector<Neighbor> neighbors(const Vertex& u) const {
        std::vector<Neighbor> out;
        for (const Arc& a : arcs(id_of(u))) out.push_back({Vertex::from_id(n_, a.to), a.dimension, a.sign});
        return out;
    }

    std::vector<VertexId> neighbor_ids(VertexId id) const {
        std::vector<VertexId> out;
        for (const Arc& a : arcs(id)) out.push_back(a.to);
        std::sort(out.begin(), out.end());
        return out;
    }

    bool adjacent(VertexId u, VertexId v) const {
        const auto& out = arcs_.at(u);
        return std::any_of(out.begin(), out.end(), [v](const Arc& a) { return a.to == v; });
    }

    /// u^{i+} / u^{i-}.
    VertexId step(VertexId u, int dimension, Sign sign) const {
        for (const Arc& a : arcs(u)) {
            if (a.dimension == dimension && a.sign == sign) return a.to;
        }
        throw UnknownVertexError("vertex " + vertex(u).to_string() + " has no neighbour tagged (" +
                                 std::to_string(dimension) + "," + to_string(sign) + ")");
    }

    Color color(VertexId id) const {
        check(id);
        return inner_index(id) % 2 == 0 ? Color::White : Color::Black;
    }

    /// The vertex with inner index shifted by 2; it shares u's neighbourhood.
    VertexId twin(VertexId u) const {
        check(u);
        return with_coordinate(u, 0, inner_index(u) + 2);
    }

    Vertex twin(const Vertex& u) const { return Vertex::from_id(n_, twin(id_of(u))); }

    std::vector<VertexId> common_neighbors(VertexId u, VertexId v) const {
        check(u);
        check(v);
        if (u == v) throw IdenticalVerticesError("common_neighbors needs two distinct vertices");
        const auto nu = neighbor_ids(u);
        const auto nv = neighbor_ids(v);
        std::vector<VertexId> out;
        std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(out));
        return out;
    }

    std::vector<EdgeRef> edges() const {
        std::vector<EdgeRef> out;
        out.reserve(edge_count());
        for (VertexId u = 0; u < arcs_.size(); ++u) {
            for (const Arc& a : arcs_[u]) {
                if (u < a.to) out.push_back({u, a.to, a.dimension});
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    /// BH_{n-1}^k: vertices with last coordinate k.
    Subcube subcube(int k) const {
        if (n_ < 2) throw DimensionError("subcube decomposition needs n >= 2");
        if (k < 0 || k > 3) throw Error("subcube index must be in 0..3");
        Subcube s;
        s.k = k;
        for (VertexId u = 0; u < arcs_.size(); ++u) {
            if (coordinate(u, n_ - 1) == k) s.vertices.push_back(u);
        }
        for (const EdgeRef& e : edges()) {
            if (coordinate(e.u, n_ - 1) == k && coordinate(e.v, n_ - 1) == k) s.edges.push_back(e);
        }
        return s;
    }

    /// Edges with exactly one endpoint in subcube k.
    std::vector<EdgeRef> cross_edges(int k) const {
        if (n_ < 2) throw DimensionError("subcube decomposition needs n >= 2");
        std::vector<EdgeRef> out;
        for (const EdgeRef& e : edges()) {
            const bool in_u = coordinate(e.u, n_ - 1) == k;
            const bool in_v = coordinate(e.v, n_ - 1) == k;
            if (in_u != in_v) out.push_back(e);
        }
        return out;
    }

    BalancedHypercube without_edge(VertexId u, VertexId v) const {
        if (!adjacent(u, v)) throw Error("no edge between " + std::to_string(u) + " and " + std::to_string(v));
        BalancedHypercube g = *this;
        std::erase_if(g.arcs_[u], [v](const Arc& a) { return a.to == v; });
        std::erase_if(g.arcs_[v], [u](const Arc& a) { return a.to == u; });
        return g;
    }

    BalancedHypercube with_edge(VertexId u, VertexId v, int dimension = 0) const {
        check(u);
        check(v);
        if (u == v || adjacent(u, v)) throw Error("cannot add edge " + std::to_string(u) + "-" + std::to_string(v));
        BalancedHypercube g = *this;
        g.arcs_[u].push_back({v, dimension, sign_between(u, v)});
        g.arcs_[v].push_back({u, dimension, sign_between(v, u)});
        sort_arcs(g.arcs_[u]);
        sort_arcs(g.arcs_[v]);
        return g;
    }

    friend bool operator==(const BalancedHypercube&, const BalancedHypercube&) = default;

private:
    BalancedHypercube() = default;

    static Sign sign_between(VertexId from, VertexId to) noexcept {
        return mod4(inner_index(to) - inner_index(from)) == 3 ? Sign::Minus : Sign::Plus;
    }

    static void sort_arcs(std::vector<Arc>& out) {
        std::sort(out.begin(), out.end(), [](const Arc& a, const Arc& b) {
            if (a.dimension != b.dimension) return a.dimension < b.dimension;
            if (a.sign != b.sign) return a.sign == Sign::Plus;
            return a.to < b.to;
        });
    }

    int n_ = 0;
    std::vector<std::vector<Arc>> arcs_;
};

inline BalancedHypercube build(int n, int max_dimension = kDefaultMaxDimension) {
    return BalancedHypercube::build(n, max_dimension);
}

}  // namespace bhcut

#endif  // BHCUT_TOPOLOGY_HPP
