#ifndef BHCUT_CUTS_HPP
#define BHCUT_CUTS_HPP

// Explicit H-structure-cut witnesses around a vertex u, one builder per
// pattern, and a verifier for arbitrary families.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <queue>
#include <string>
#include <string_view>
#include <vector>

#include "bhcut/error.hpp"
#include "bhcut/patterns.hpp"
#include "bhcut/topology.hpp"

namespace bhcut {

enum class Mode : std::uint8_t { Structure, Substructure };

inline const char* to_string(Mode m) noexcept { return m == Mode::Structure ? "structure" : "substructure"; }

inline std::optional<Mode> parse_mode(std::string_view s) {
    if (s == "structure") return Mode::Structure;
    if (s == "substructure") return Mode::Substructure;
    return std::nullopt;
}

/// Coordinate translation a -> (a0 + c0, (-1)^{c0} * a_i + c_i). Every such map
/// is an automorphism of BH_n that also preserves the (dimension, sign) tags:
/// negating the outer coordinates compensates for the parity flip of a0 when
/// c0 is odd.
struct Translation {
    std::vector<int> offsets;  // c0, c1, ..., c_{n-1}

    VertexId apply(VertexId id) const {
        const int c0 = offsets.at(0);
        VertexId out = with_coordinate(id, 0, inner_index(id) + c0);
        for (std::size_t i = 1; i < offsets.size(); ++i) {
            const int a = coordinate(id, static_cast<int>(i));
            out = with_coordinate(out, static_cast<int>(i), ((c0 & 1) ? -a : a) + offsets[i]);
        }
        return out;
    }

    /// The unique translation sending `from` to `to`.
    static Translation between(int n, VertexId from, VertexId to) {
        Translation t;
        t.offsets.resize(static_cast<std::size_t>(n));
        const int c0 = mod4(inner_index(to) - inner_index(from));
        t.offsets[0] = c0;
        for (int i = 1; i < n; ++i) {
            const int a = coordinate(from, i);
            t.offsets[static_cast<std::size_t>(i)] = mod4(coordinate(to, i) - ((c0 & 1) ? -a : a));
        }
        return t;
    }
};

/// True iff t maps every tagged arc u -> u^{i s} onto T(u) -> T(u)^{i s}.
inline bool preserves_tagged_adjacency(const BalancedHypercube& g, const Translation& t) {
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        const VertexId tu = t.apply(u);
        if (!g.contains(tu)) return false;
        for (const Arc& a : g.arcs(u)) {
            const VertexId tv = t.apply(a.to);
            const auto image = g.arcs(tu);
            const bool found = std::any_of(image.begin(), image.end(), [&](const Arc& b) {
                return b.to == tv && b.dimension == a.dimension && b.sign == a.sign;
            });
            if (!found) return false;
        }
    }
    return true;
}

inline Embedding translate(const Embedding& e, const Translation& t) {
    Embedding out{e.shape, {}};
    for (VertexId v : e.vertices) out.vertices.push_back(t.apply(v));
    return canonicalize(std::move(out));
}

struct SubgraphCut {
    Shape pattern = Shape::K1;
    Mode mode = Mode::Structure;
    std::optional<VertexId> base;
    std::vector<Embedding> elements;
    std::vector<VertexId> removed;  // sorted union of element vertices

    static SubgraphCut make(Shape pattern, Mode mode, std::vector<Embedding> elements,
                            std::optional<VertexId> base = std::nullopt) {
        SubgraphCut f{pattern, mode, base, std::move(elements), {}};
        f.recompute_removed();
        return f;
    }

    void recompute_removed() {
        removed.clear();
        for (const auto& e : elements) removed.insert(removed.end(), e.vertices.begin(), e.vertices.end());
        std::sort(removed.begin(), removed.end());
        removed.erase(std::unique(removed.begin(), removed.end()), removed.end());
    }
};

struct ShapeViolation {
    std::size_t index;
    std::string reason;
};

struct Verdict {
    bool is_cut = false;
    std::vector<std::size_t> component_sizes;  // ascending
    std::vector<VertexId> smallest_component;
    std::vector<VertexId> base_component;  // component holding f.base, empty when absent or removed
    std::string reason;
    std::vector<ShapeViolation> violations;

    bool ok() const noexcept { return is_cut && violations.empty(); }
};

/// Connected components of g minus `removed`, in order of their smallest vertex.
inline std::vector<std::vector<VertexId>> components_without(const BalancedHypercube& g,
                                                             const std::vector<VertexId>& removed) {
    std::vector<char> gone(g.vertex_count(), 0);
    for (VertexId v : removed) gone.at(v) = 1;
    std::vector<std::vector<VertexId>> comps;
    std::vector<char> seen(g.vertex_count(), 0);
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        if (gone[s] || seen[s]) continue;
        std::vector<VertexId> comp;
        std::queue<VertexId> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            const VertexId x = q.front();
            q.pop();
            comp.push_back(x);
            for (const Arc& a : g.arcs(x)) {
                if (!gone[a.to] && !seen[a.to]) {
                    seen[a.to] = 1;
                    q.push(a.to);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

/// Checks element shapes against the declared mode and whether G - V(F) is
/// disconnected or trivial (at most one vertex left).
inline Verdict verify(const BalancedHypercube& g, const SubgraphCut& f) {
    Verdict out;
    const auto allowed = subgraph_closure(f.pattern, true);
    for (std::size_t i = 0; i < f.elements.size(); ++i) {
        const Embedding& e = f.elements[i];
        for (VertexId v : e.vertices) g.check(v);
        if (f.mode == Mode::Structure && e.shape != f.pattern) {
            out.violations.push_back({i, std::string("element is ") + to_string(e.shape) + ", structure mode needs " +
                                             to_string(f.pattern)});
            continue;
        }
        if (f.mode == Mode::Substructure && std::find(allowed.begin(), allowed.end(), e.shape) == allowed.end()) {
            out.violations.push_back(
                {i, std::string(to_string(e.shape)) + " is not a connected subgraph of " + to_string(f.pattern)});
            continue;
        }
        if (auto r = is_valid_embedding(g, e); !r) out.violations.push_back({i, r.reason});
    }

    SubgraphCut copy = f;
    copy.recompute_removed();
    const auto comps = components_without(g, copy.removed);
    const std::size_t remaining = g.vertex_count() - copy.removed.size();
    for (const auto& c : comps) out.component_sizes.push_back(c.size());
    std::sort(out.component_sizes.begin(), out.component_sizes.end());
    if (!comps.empty()) {
        out.smallest_component = *std::min_element(
            comps.begin(), comps.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    }
    if (f.base) {
        for (const auto& c : comps) {
            if (std::binary_search(c.begin(), c.end(), *f.base)) out.base_component = c;
        }
    }
    if (remaining <= 1) {
        out.is_cut = true;
        out.reason = "remaining graph is trivial";
    } else if (comps.size() >= 2) {
        out.is_cut = true;
        out.reason = std::to_string(comps.size()) + " components";
    } else {
        out.reason = "remaining graph is connected (" + std::to_string(remaining) + " vertices)";
    }
    if (!out.violations.empty()) {
        out.reason += "; " + std::to_string(out.violations.size()) + " element(s) violate the declared shape";
    }
    return out;
}

namespace detail {

inline void require_n_at_least_2(const BalancedHypercube& g, Shape pattern) {
    if (g.n() < 2) {
        throw DimensionError(std::string(to_string(pattern)) + " cut construction requires n >= 2 (got n=" +
                             std::to_string(g.n()) + ")");
    }
}

}  // namespace detail

/// The 2n singletons N(u).
inline SubgraphCut cut_k1(const BalancedHypercube& g, VertexId u) {
    std::vector<Embedding> elems;
    for (const Arc& a : g.arcs(u)) elems.push_back({Shape::K1, {a.to}});
    return SubgraphCut::make(Shape::K1, Mode::Structure, std::move(elems), u);
}

/// 2n edges covering N(u). Built at (0,...,0) as
///   {v, v^{1+}}, {w, w^{1+}}, {z^{i+}, (z^{i+})^{0+}}, {z^{i-}, (z^{i-})^{0+}}  (1 <= i < n)
/// with v = z^{0+}, w = z^{0-}, then translated onto u.
inline SubgraphCut cut_k11(const BalancedHypercube& g, VertexId u) {
    detail::require_n_at_least_2(g, Shape::K11);
    g.check(u);
    const VertexId z = 0;
    const VertexId v = g.step(z, 0, Sign::Plus);
    const VertexId w = g.step(z, 0, Sign::Minus);
    std::vector<Embedding> base;
    base.push_back({Shape::K11, {v, g.step(v, 1, Sign::Plus)}});
    base.push_back({Shape::K11, {w, g.step(w, 1, Sign::Plus)}});
    for (int i = 1; i < g.n(); ++i) {
        const VertexId p = g.step(z, i, Sign::Plus);
        base.push_back({Shape::K11, {p, g.step(p, 0, Sign::Plus)}});
    }
    for (int i = 1; i < g.n(); ++i) {
        const VertexId m = g.step(z, i, Sign::Minus);
        base.push_back({Shape::K11, {m, g.step(m, 0, Sign::Plus)}});
    }
    const auto t = Translation::between(g.n(), z, u);
    std::vector<Embedding> elems;
    for (const auto& e : base) elems.push_back(translate(e, t));
    return SubgraphCut::make(Shape::K11, Mode::Structure, std::move(elems), u);
}

/// n paths {u^{i+}, (u^{i+})^{0+}, u^{i-}}, 0 <= i < n. The middle vertex
/// (u^{i+})^{0+} is the centre; for i = 0 it is twin(u).
inline SubgraphCut cut_k12(const BalancedHypercube& g, VertexId u) {
    detail::require_n_at_least_2(g, Shape::K12);
    std::vector<Embedding> elems;
    for (int i = 0; i < g.n(); ++i) {
        const VertexId plus = g.step(u, i, Sign::Plus);
        const VertexId minus = g.step(u, i, Sign::Minus);
        const VertexId center = g.step(plus, 0, Sign::Plus);
        elems.push_back(canonicalize({Shape::K12, {center, plus, minus}}));
    }
    return SubgraphCut::make(Shape::K12, Mode::Structure, std::move(elems), u);
}

/// n claws. i = 0: centre (u^{0+})^{1+} with leaves u^{0+},
/// ((u^{0+})^{1+})^{0+}, u^{0-}. i >= 1: centre x = (u^{i+})^{0+} with leaves
/// u^{i+}, u^{i-}, x^{1+}.
inline SubgraphCut cut_k13(const BalancedHypercube& g, VertexId u) {
    detail::require_n_at_least_2(g, Shape::K13);
    std::vector<Embedding> elems;
    {
        const VertexId a = g.step(u, 0, Sign::Plus);
        const VertexId center = g.step(a, 1, Sign::Plus);
        const VertexId c = g.step(center, 0, Sign::Plus);
        const VertexId d = g.step(u, 0, Sign::Minus);
        elems.push_back(canonicalize({Shape::K13, {center, a, c, d}}));
    }
    for (int i = 1; i < g.n(); ++i) {
        const VertexId plus = g.step(u, i, Sign::Plus);
        const VertexId center = g.step(plus, 0, Sign::Plus);
        const VertexId minus = g.step(u, i, Sign::Minus);
        const VertexId far = g.step(center, 1, Sign::Plus);
        elems.push_back(canonicalize({Shape::K13, {center, plus, minus, far}}));
    }
    return SubgraphCut::make(Shape::K13, Mode::Structure, std::move(elems), u);
}

/// n four-cycles. i = 0: u^{0+}, (u^{0+})^{1+}, u^{0-}, twin(u).
/// i >= 1: u^{i+}, (u^{i+})^{0+}, u^{i-}, (u^{i+})^{0-}.
inline SubgraphCut cut_c4(const BalancedHypercube& g, VertexId u) {
    detail::require_n_at_least_2(g, Shape::C4);
    std::vector<Embedding> elems;
    {
        const VertexId a = g.step(u, 0, Sign::Plus);
        const VertexId b = g.step(a, 1, Sign::Plus);
        const VertexId d = g.step(u, 0, Sign::Minus);
        elems.push_back(canonicalize({Shape::C4, {a, b, d, g.twin(u)}}));
    }
    for (int i = 1; i < g.n(); ++i) {
        const VertexId plus = g.step(u, i, Sign::Plus);
        elems.push_back(canonicalize(
            {Shape::C4, {plus, g.step(plus, 0, Sign::Plus), g.step(u, i, Sign::Minus), g.step(plus, 0, Sign::Minus)}}));
    }
    return SubgraphCut::make(Shape::C4, Mode::Structure, std::move(elems), u);
}

inline SubgraphCut cut_for(Shape pattern, const BalancedHypercube& g, VertexId u) {
    switch (pattern) {
        case Shape::K1: return cut_k1(g, u);
        case Shape::K11: return cut_k11(g, u);
        case Shape::K12: return cut_k12(g, u);
        case Shape::K13: return cut_k13(g, u);
        case Shape::C4: return cut_c4(g, u);
        case Shape::P4: break;
    }
    throw Error("no cut constructor for pattern P4");
}

}  // namespace bhcut

#endif  // BHCUT_CUTS_HPP
