#ifndef BHCUT_IO_HPP
#define BHCUT_IO_HPP

// File formats:
//   graph    {"n": int, "vertices": [[a0,...],...], "edges": [[id,id,dim],...]}
//   embedding {"shape": "K12", "vertices": [id,...]}
//   witness  {"pattern": str, "mode": str, "base_vertex": [coords]|null, "elements": [embedding,...]}
//   report   {"quantity": str, "value": int|null, "witness": ..., "explored": int}

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "bhcut/cuts.hpp"
#include "bhcut/error.hpp"
#include "bhcut/patterns.hpp"
#include "bhcut/properties.hpp"
#include "bhcut/search.hpp"
#include "bhcut/topology.hpp"

namespace bhcut {

using json = nlohmann::json;

/// "a0,a1,...,a_{n-1}" -> Vertex.
inline Vertex parse_vertex(std::string_view text) {
    Vertex v;
    std::string token;
    std::istringstream in{std::string(text)};
    while (std::getline(in, token, ',')) {
        if (token.size() != 1 || token[0] < '0' || token[0] > '3') {
            throw ParseError("bad coordinate '" + token + "' in vertex '" + std::string(text) + "'");
        }
        v.coords.push_back(token[0] - '0');
    }
    if (v.coords.empty()) throw ParseError("empty vertex");
    return v;
}

inline json graph_to_json(const BalancedHypercube& g) {
    json vertices = json::array();
    for (VertexId v = 0; v < g.vertex_count(); ++v) vertices.push_back(g.vertex(v).coords);
    json edges = json::array();
    for (const EdgeRef& e : g.edges()) edges.push_back({e.u, e.v, e.dimension});
    return {{"n", g.n()}, {"vertices", vertices}, {"edges", edges}};
}

inline BalancedHypercube graph_from_json(const json& j, int max_dimension = kDefaultMaxDimension) {
    try {
        const int n = j.at("n").get<int>();
        if (n < 1 || n > max_dimension) throw DimensionError("graph file has n=" + std::to_string(n));
        const auto& vertices = j.at("vertices");
        const std::size_t count = std::size_t{1} << (2 * n);
        if (vertices.size() != count) {
            throw ParseError("expected " + std::to_string(count) + " vertices, found " + std::to_string(vertices.size()));
        }
        for (std::size_t id = 0; id < count; ++id) {
            Vertex v{vertices[id].get<std::vector<int>>()};
            if (v.dimension() != n || v.id() != id) {
                throw ParseError("vertex entry " + std::to_string(id) + " does not match its canonical id");
            }
        }
        std::vector<EdgeRef> edges;
        for (const auto& e : j.at("edges")) {
            if (e.size() != 3) throw ParseError("edge entries are [id, id, dim]");
            auto u = e[0].get<VertexId>();
            auto v = e[1].get<VertexId>();
            if (u > v) std::swap(u, v);
            edges.push_back({u, v, e[2].get<int>()});
        }
        return BalancedHypercube::from_edges(n, edges, max_dimension);
    } catch (const json::exception& ex) {
        throw ParseError(std::string("graph file: ") + ex.what());
    }
}

/// DOT with coordinate labels, white/black fill by colour class and a dim attribute per edge.
inline std::string graph_to_dot(const BalancedHypercube& g, const std::vector<VertexId>& only = {}) {
    std::vector<char> keep(g.vertex_count(), only.empty() ? 1 : 0);
    for (VertexId v : only) keep.at(v) = 1;
    std::ostringstream out;
    out << "graph BH" << g.n() << " {\n";
    out << "  node [shape=circle, style=filled, fontcolor=gray50];\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!keep[v]) continue;
        out << "  v" << v << " [label=\"" << g.vertex(v).label() << "\", fillcolor=" << to_string(g.color(v))
            << "];\n";
    }
    for (const EdgeRef& e : g.edges()) {
        if (!keep[e.u] || !keep[e.v]) continue;
        out << "  v" << e.u << " -- v" << e.v << " [dim=" << e.dimension << ", label=\"" << e.dimension << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

inline json embedding_to_json(const Embedding& e) { return {{"shape", to_string(e.shape)}, {"vertices", e.vertices}}; }

inline Embedding embedding_from_json(const json& j) {
    const auto name = j.at("shape").get<std::string>();
    const auto shape = parse_shape(name);
    if (!shape) throw ParseError("unknown shape '" + name + "'");
    return {*shape, j.at("vertices").get<std::vector<VertexId>>()};
}

inline json cut_to_json(const BalancedHypercube& g, const SubgraphCut& f) {
    json elements = json::array();
    for (const auto& e : f.elements) elements.push_back(embedding_to_json(e));
    return {{"pattern", to_string(f.pattern)},
            {"mode", to_string(f.mode)},
            {"base_vertex", f.base ? json(g.vertex(*f.base).coords) : json(nullptr)},
            {"elements", elements}};
}

inline SubgraphCut cut_from_json(const BalancedHypercube& g, const json& j) {
    try {
        const auto pname = j.at("pattern").get<std::string>();
        const auto pattern = parse_shape(pname);
        if (!pattern || !is_pattern(*pattern)) throw ParseError("unknown pattern '" + pname + "'");
        const auto mname = j.value("mode", std::string("structure"));
        const auto mode = parse_mode(mname);
        if (!mode) throw ParseError("unknown mode '" + mname + "'");
        std::optional<VertexId> base;
        if (j.contains("base_vertex") && !j["base_vertex"].is_null()) {
            base = g.id_of(Vertex{j["base_vertex"].get<std::vector<int>>()});
        }
        std::vector<Embedding> elements;
        for (const auto& e : j.at("elements")) elements.push_back(embedding_from_json(e));
        return SubgraphCut::make(*pattern, *mode, std::move(elements), base);
    } catch (const json::exception& ex) {
        throw ParseError(std::string("witness file: ") + ex.what());
    }
}

inline json verdict_to_json(const Verdict& v) {
    json violations = json::array();
    for (const auto& s : v.violations) violations.push_back({{"element", s.index}, {"reason", s.reason}});
    return {{"is_cut", v.is_cut},
            {"component_sizes", v.component_sizes},
            {"smallest_component", v.smallest_component},
            {"base_component", v.base_component},
            {"reason", v.reason},
            {"violations", violations}};
}

inline json report_to_json(const BalancedHypercube& g, const SearchReport& r) {
    json witness = nullptr;
    if (r.family_witness) {
        witness = cut_to_json(g, *r.family_witness);
    } else if (r.value) {
        witness = r.vertex_witness;
    }
    return {{"quantity", r.name()},
            {"value", r.value ? json(*r.value) : json(nullptr)},
            {"witness", witness},
            {"explored", r.explored}};
}

inline json property_to_json(const PropertyResult& r) {
    return {{"name", r.name},
            {"n", r.n},
            {"holds", r.holds},
            {"counterexample", r.holds ? json(nullptr) : json(r.counterexample)},
            {"detail", r.detail}};
}

}  // namespace bhcut

#endif  // BHCUT_IO_HPP
