#ifndef BHCUT_SEARCH_HPP
#define BHCUT_SEARCH_HPP

// Exact connectivity quantities by exhaustive search:
//   vertex_connectivity     - Menger / unit-capacity max-flow over all non-adjacent pairs
//   g_connectivity          - subsets of increasing size, first success is optimal
//   structure_connectivity  - iterative deepening over families of embeddings
//
// The subset searches represent vertex sets as 64-bit masks and are limited to
// graphs with at most 64 vertices (BH_3).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "bhcut/cuts.hpp"
#include "bhcut/error.hpp"
#include "bhcut/patterns.hpp"
#include "bhcut/topology.hpp"

namespace bhcut {

enum class Quantity : std::uint8_t { Kappa, KappaG, KappaStruct, KappaSubstruct };

struct SearchBudget {
    std::uint64_t families_per_level = 100'000'000;
    std::size_t enumeration = kDefaultEnumerationBudget;
    std::size_t max_flow_vertices = 256;
    std::size_t max_g_vertices = 16;
    std::size_t max_structure_vertices = 64;
};

struct SearchReport {
    Quantity quantity = Quantity::Kappa;
    int g = 0;
    std::optional<Shape> pattern;
    bool include_p4 = false;
    std::optional<int> value;  // nullopt: no such set/family exists
    std::vector<VertexId> vertex_witness;
    std::optional<SubgraphCut> family_witness;
    std::uint64_t explored = 0;
    SearchBudget budget;

    std::string name() const {
        switch (quantity) {
            case Quantity::Kappa: return "kappa";
            case Quantity::KappaG: return "kappa_g(" + std::to_string(g) + ")";
            case Quantity::KappaStruct: return std::string("kappa_struct(") + to_string(*pattern) + ")";
            case Quantity::KappaSubstruct:
                return std::string("kappa_substruct(") + to_string(*pattern) + (include_p4 ? ",+P4" : "") + ")";
        }
        return "?";
    }
};

namespace detail {

/// Dinic on the vertex-split digraph: v_in = 2v, v_out = 2v + 1.
class SplitFlow {
public:
    explicit SplitFlow(const BalancedHypercube& g) : nodes_(2 * g.vertex_count()), head_(nodes_, -1) {
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            inner_edge_.push_back(add_edge(2 * v, 2 * v + 1, 1));
            for (const Arc& a : g.arcs(v)) add_edge(2 * v + 1, 2 * a.to, kInf);
        }
    }

    /// Minimum number of vertices separating non-adjacent s and t.
    int min_separator(VertexId s, VertexId t) {
        for (auto& e : edges_) e.flow = 0;
        // s and t themselves may not be removed
        edges_[inner_edge_[s]].cap = kInf;
        edges_[inner_edge_[t]].cap = kInf;
        const std::size_t src = 2 * s + 1;
        const std::size_t dst = 2 * t;
        int flow = 0;
        while (bfs(src, dst)) {
            it_.assign(head_.begin(), head_.end());
            while (int pushed = dfs(src, dst, kInf)) flow += pushed;
        }
        edges_[inner_edge_[s]].cap = 1;
        edges_[inner_edge_[t]].cap = 1;
        last_src_ = src;
        return flow;
    }

    /// Separator of the most recent min_separator call: vertices whose in-node
    /// is reachable in the residual graph but whose out-node is not.
    std::vector<VertexId> last_separator() const {
        std::vector<char> seen(nodes_, 0);
        std::queue<std::size_t> q;
        q.push(last_src_);
        seen[last_src_] = 1;
        while (!q.empty()) {
            const auto x = q.front();
            q.pop();
            for (int e = head_[x]; e != -1; e = edges_[static_cast<std::size_t>(e)].next) {
                const auto& ed = edges_[static_cast<std::size_t>(e)];
                if (ed.cap - ed.flow > 0 && !seen[ed.to]) {
                    seen[ed.to] = 1;
                    q.push(ed.to);
                }
            }
        }
        std::vector<VertexId> cut;
        for (std::size_t v = 0; v < nodes_ / 2; ++v) {
            if (seen[2 * v] && !seen[2 * v + 1]) cut.push_back(static_cast<VertexId>(v));
        }
        return cut;
    }

private:
    static constexpr int kInf = std::numeric_limits<int>::max() / 4;

    struct Edge {
        std::size_t to;
        int next;
        int cap;
        int flow;
    };

    std::size_t add_edge(std::size_t from, std::size_t to, int cap) {
        edges_.push_back({to, head_[from], cap, 0});
        head_[from] = static_cast<int>(edges_.size() - 1);
        edges_.push_back({from, head_[to], 0, 0});
        head_[to] = static_cast<int>(edges_.size() - 1);
        return edges_.size() - 2;
    }

    bool bfs(std::size_t s, std::size_t t) {
        level_.assign(nodes_, -1);
        std::queue<std::size_t> q;
        level_[s] = 0;
        q.push(s);
        while (!q.empty()) {
            const auto x = q.front();
            q.pop();
            for (int e = head_[x]; e != -1; e = edges_[static_cast<std::size_t>(e)].next) {
                const auto& ed = edges_[static_cast<std::size_t>(e)];
                if (ed.cap - ed.flow > 0 && level_[ed.to] < 0) {
                    level_[ed.to] = level_[x] + 1;
                    q.push(ed.to);
                }
            }
        }
        return level_[t] >= 0;
    }

    int dfs(std::size_t x, std::size_t t, int limit) {
        if (x == t) return limit;
        for (int& e = it_[x]; e != -1; e = edges_[static_cast<std::size_t>(e)].next) {
            auto& ed = edges_[static_cast<std::size_t>(e)];
            if (ed.cap - ed.flow > 0 && level_[ed.to] == level_[x] + 1) {
                if (int pushed = dfs(ed.to, t, std::min(limit, ed.cap - ed.flow))) {
                    ed.flow += pushed;
                    edges_[static_cast<std::size_t>(e) ^ 1].flow -= pushed;
                    return pushed;
                }
            }
        }
        return 0;
    }

    std::size_t nodes_;
    std::vector<int> head_;
    std::vector<Edge> edges_;
    std::vector<std::size_t> inner_edge_;
    std::vector<int> level_;
    std::vector<int> it_;
    std::size_t last_src_ = 0;
};

using Mask = std::uint64_t;

inline Mask bit(VertexId v) noexcept { return Mask{1} << v; }

inline std::vector<Mask> adjacency_masks(const BalancedHypercube& g) {
    std::vector<Mask> adj(g.vertex_count(), 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        for (const Arc& a : g.arcs(v)) adj[v] |= bit(a.to);
    return adj;
}

inline Mask full_mask(std::size_t count) noexcept { return count >= 64 ? ~Mask{0} : (Mask{1} << count) - 1; }

/// Component of `alive` containing the lowest set bit of `start`.
inline Mask component_of(const std::vector<Mask>& adj, Mask alive, Mask start) noexcept {
    Mask comp = start & (~start + 1);
    Mask frontier = comp;
    while (frontier) {
        Mask next = 0;
        for (Mask f = frontier; f; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
        next &= alive & ~comp;
        comp |= next;
        frontier = next;
    }
    return comp;
}

/// G - removed is disconnected or has at most one vertex.
inline bool is_cut_mask(const std::vector<Mask>& adj, Mask all, Mask removed) noexcept {
    const Mask alive = all & ~removed;
    if (std::popcount(alive) <= 1) return true;
    return component_of(adj, alive, alive) != alive;
}

inline std::vector<VertexId> mask_vertices(Mask m) {
    std::vector<VertexId> out;
    for (; m; m &= m - 1) out.push_back(static_cast<VertexId>(std::countr_zero(m)));
    return out;
}

inline Mask embedding_mask(const Embedding& e) {
    Mask m = 0;
    for (VertexId v : e.vertices) m |= bit(v);
    return m;
}

inline std::vector<Embedding> pool_for(const BalancedHypercube& g, const std::vector<Shape>& shapes,
                                       std::size_t enumeration_budget) {
    std::vector<Embedding> pool;
    for (Shape s : shapes) {
        auto part = enumerate(g, s, enumeration_budget);
        pool.insert(pool.end(), part.begin(), part.end());
    }
    return pool;
}

// Lexicographic m-combinations of pool indices, with the running union carried
// down the recursion. visit(indices, union) returns true to stop.
template <class Visit>
bool for_each_family(const std::vector<Mask>& masks, int m, Visit&& visit) {
    const int pool = static_cast<int>(masks.size());
    std::vector<int> idx(static_cast<std::size_t>(m));
    auto rec = [&](auto&& self, int depth, int start, Mask acc) -> bool {
        if (depth == m) return visit(idx, acc);
        for (int i = start; i <= pool - (m - depth); ++i) {
            idx[static_cast<std::size_t>(depth)] = i;
            if (self(self, depth + 1, i + 1, acc | masks[static_cast<std::size_t>(i)])) return true;
        }
        return false;
    };
    return rec(rec, 0, 0, 0);
}

inline void require_at_most(const BalancedHypercube& g, std::size_t cap, const char* what) {
    if (g.vertex_count() > cap) {
        throw CapExceededError(std::string(what) + " limited to " + std::to_string(cap) + " vertices, graph has " +
                               std::to_string(g.vertex_count()));
    }
}

}  // namespace detail

inline SearchReport vertex_connectivity(const BalancedHypercube& g, const SearchBudget& budget = {}) {
    detail::require_at_most(g, budget.max_flow_vertices, "vertex connectivity");
    SearchReport r;
    r.quantity = Quantity::Kappa;
    r.budget = budget;
    const auto count = static_cast<VertexId>(g.vertex_count());
    detail::SplitFlow flow(g);
    int best = std::numeric_limits<int>::max();
    for (VertexId s = 0; s < count; ++s) {
        for (VertexId t = s + 1; t < count; ++t) {
            if (g.adjacent(s, t)) continue;
            ++r.explored;
            const int k = flow.min_separator(s, t);
            if (k < best) {
                best = k;
                r.vertex_witness = flow.last_separator();
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) {
        // complete graph: remove all but one vertex
        best = count == 0 ? 0 : static_cast<int>(count) - 1;
        r.vertex_witness.clear();
        for (VertexId v = 1; v < count; ++v) r.vertex_witness.push_back(v);
    }
    r.value = best;
    return r;
}

/// Minimum |S| with G - S disconnected and every component of size >= g + 1.
inline SearchReport g_connectivity(const BalancedHypercube& graph, int g, const SearchBudget& budget = {}) {
    detail::require_at_most(graph, budget.max_g_vertices, "exhaustive g-connectivity");
    if (g < 0) throw Error("g must be non-negative");
    SearchReport r;
    r.quantity = Quantity::KappaG;
    r.g = g;
    r.budget = budget;
    const auto adj = detail::adjacency_masks(graph);
    const std::size_t count = graph.vertex_count();
    const detail::Mask all = detail::full_mask(count);
    for (std::size_t size = 0; size <= count; ++size) {
        // Gosper's hack: subsets of `size` bits in increasing numeric order
        detail::Mask s = size == 0 ? 0 : detail::full_mask(size);
        while (true) {
            ++r.explored;
            detail::Mask alive = all & ~s;
            int components = 0;
            bool large_enough = true;
            while (alive) {
                const auto comp = detail::component_of(adj, alive, alive);
                ++components;
                if (std::popcount(comp) < g + 1) {
                    large_enough = false;
                    break;
                }
                alive &= ~comp;
            }
            if (components >= 2 && large_enough) {
                r.value = static_cast<int>(size);
                r.vertex_witness = detail::mask_vertices(s);
                return r;
            }
            if (size == 0 || size == count) break;
            const detail::Mask c = s & (~s + 1);
            const detail::Mask hi = s + c;
            if (hi == 0 || (hi & ~all)) break;
            s = (((hi ^ s) >> 2) / c) | hi;
            if (s & ~all) break;
        }
    }
    return r;
}

struct StructureOptions {
    bool include_p4 = false;
    // Stop after this family size; nullopt searches up to the pool size.
    std::optional<int> max_family_size = std::nullopt;
};

/// Iterative deepening over families of m distinct embeddings, m = 1, 2, ...
/// The first family (lexicographic in pool order) whose union is a subgraph-cut
/// is the witness.
inline SearchReport structure_connectivity(const BalancedHypercube& g, Shape pattern, Mode mode,
                                           const StructureOptions& options = {}, const SearchBudget& budget = {}) {
    if (!is_pattern(pattern)) throw Error("P4 is not a structure pattern");
    detail::require_at_most(g, budget.max_structure_vertices, "structure connectivity search");
    SearchReport r;
    r.quantity = mode == Mode::Structure ? Quantity::KappaStruct : Quantity::KappaSubstruct;
    r.pattern = pattern;
    r.include_p4 = mode == Mode::Substructure && pattern == Shape::C4 && options.include_p4;
    r.budget = budget;

    const auto shapes = mode == Mode::Structure ? std::vector<Shape>{pattern} : subgraph_closure(pattern, r.include_p4);
    const auto pool = detail::pool_for(g, shapes, budget.enumeration);
    std::vector<detail::Mask> masks;
    std::size_t largest = 0;
    for (const auto& e : pool) {
        masks.push_back(detail::embedding_mask(e));
        largest = std::max(largest, e.vertices.size());
    }
    const auto adj = detail::adjacency_masks(g);
    const detail::Mask all = detail::full_mask(g.vertex_count());
    // Fewer than kappa(G) vertices never disconnect G (and never leave it trivial).
    const int kappa = *vertex_connectivity(g, budget).value;

    const int limit = std::min(static_cast<int>(pool.size()), options.max_family_size.value_or(static_cast<int>(pool.size())));
    for (int m = 1; m <= limit; ++m) {
        if (static_cast<std::size_t>(m) * largest < static_cast<std::size_t>(kappa)) continue;
        const auto level = detail::choose(pool.size(), static_cast<std::uint64_t>(m));
        if (level > budget.families_per_level) {
            throw BudgetExhaustedError(std::string("family size ") + std::to_string(m) + " needs " +
                                           std::to_string(level) + " candidates (budget " +
                                           std::to_string(budget.families_per_level) + "); no cut of size <= " +
                                           std::to_string(m - 1),
                                       m - 1);
        }
        std::vector<int> found;
        detail::for_each_family(masks, m, [&](const std::vector<int>& idx, detail::Mask acc) {
            ++r.explored;
            if (std::popcount(acc) < kappa) return false;
            if (!detail::is_cut_mask(adj, all, acc)) return false;
            found = idx;
            return true;
        });
        if (!found.empty()) {
            std::vector<Embedding> elems;
            for (int i : found) elems.push_back(pool[static_cast<std::size_t>(i)]);
            r.value = m;
            r.family_witness = SubgraphCut::make(pattern, mode, std::move(elems));
            return r;
        }
    }
    if (limit < static_cast<int>(pool.size())) {
        throw BudgetExhaustedError("no cut of size <= " + std::to_string(limit), limit);
    }
    return r;
}

/// Every family of at most m_max distinct embeddings drawn from `shapes` whose
/// removal disconnects g (or leaves it trivial). Empty means none exists.
inline std::vector<std::vector<Embedding>> sweep_small_families(const BalancedHypercube& g,
                                                                const std::vector<Shape>& shapes, int m_max,
                                                                const SearchBudget& budget = {},
                                                                std::uint64_t* explored = nullptr) {
    detail::require_at_most(g, budget.max_structure_vertices, "family sweep");
    const auto pool = detail::pool_for(g, shapes, budget.enumeration);
    std::uint64_t total = 0;
    for (int m = 1; m <= m_max; ++m) total += detail::choose(pool.size(), static_cast<std::uint64_t>(m));
    if (total > budget.families_per_level) {
        throw CapExceededError("sweep needs " + std::to_string(total) + " families (budget " +
                               std::to_string(budget.families_per_level) + ")");
    }
    std::vector<detail::Mask> masks;
    for (const auto& e : pool) masks.push_back(detail::embedding_mask(e));
    const auto adj = detail::adjacency_masks(g);
    const detail::Mask all = detail::full_mask(g.vertex_count());

    std::vector<std::vector<Embedding>> counterexamples;
    std::uint64_t seen = 0;
    for (int m = 1; m <= m_max && m <= static_cast<int>(pool.size()); ++m) {
        detail::for_each_family(masks, m, [&](const std::vector<int>& idx, detail::Mask acc) {
            ++seen;
            if (detail::is_cut_mask(adj, all, acc)) {
                std::vector<Embedding> family;
                for (int i : idx) family.push_back(pool[static_cast<std::size_t>(i)]);
                counterexamples.push_back(std::move(family));
            }
            return false;
        });
    }
    if (explored) *explored = seen;
    return counterexamples;
}

}  // namespace bhcut

#endif  // BHCUT_SEARCH_HPP
