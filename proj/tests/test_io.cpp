#include <gtest/gtest.h>

#include <random>

#include "bhcut/io.hpp"

namespace bhcut {
namespace {

TEST(Io, GraphJsonShape) {
    const auto j = graph_to_json(build(2));
    EXPECT_EQ(j["n"], 2);
    EXPECT_EQ(j["vertices"].size(), 16u);
    EXPECT_EQ(j["vertices"][5], json::array({1, 1}));
    EXPECT_EQ(j["edges"].size(), 32u);
    EXPECT_EQ(j["edges"][0], json::array({0, 1, 0}));
    auto edges = j["edges"].get<std::vector<std::vector<int>>>();
    EXPECT_TRUE(std::is_sorted(edges.begin(), edges.end()));
}

TEST(Io, GraphRoundTrip) {
    for (int n = 1; n <= 3; ++n) {
        const auto g = build(n);
        EXPECT_EQ(graph_from_json(json::parse(graph_to_json(g).dump())), g);
    }
    const auto broken = build(2).without_edge(0, 1);
    EXPECT_EQ(graph_from_json(graph_to_json(broken)), broken);
}

TEST(Io, GraphParseErrors) {
    auto j = graph_to_json(build(1));
    j["vertices"][1] = json::array({2});
    EXPECT_THROW(graph_from_json(j), ParseError);
    j = graph_to_json(build(1));
    j["edges"].push_back({0, 99, 0});
    EXPECT_THROW(graph_from_json(j), UnknownVertexError);
    EXPECT_THROW(graph_from_json(json{{"n", 1}}), ParseError);
}

TEST(Io, Dot) {
    const auto dot = graph_to_dot(build(2));
    EXPECT_NE(dot.find("label=\"00\", fillcolor=white"), std::string::npos);
    EXPECT_NE(dot.find("label=\"10\", fillcolor=black"), std::string::npos);
    EXPECT_EQ(std::count(dot.begin(), dot.end(), '\n'), 1 + 1 + 16 + 32 + 1);
    EXPECT_NE(dot.find("v0 -- v1 [dim=0"), std::string::npos);
    EXPECT_NE(dot.find("v0 -- v5 [dim=1"), std::string::npos);
}

TEST(Io, WitnessRoundTripProperty) {
    std::mt19937 rng(11);
    for (int n = 2; n <= 3; ++n) {
        const auto g = build(n);
        for (int trial = 0; trial < 40; ++trial) {
            const VertexId u = rng() % g.vertex_count();
            const Shape h = kPatterns[rng() % 5];
            const auto f = cut_for(h, g, u);
            const auto j = cut_to_json(g, f);
            EXPECT_EQ(j["base_vertex"], json(g.vertex(u).coords));
            const auto back = cut_from_json(g, json::parse(j.dump()));
            EXPECT_EQ(back.elements, f.elements);
            EXPECT_EQ(back.removed, f.removed);
            EXPECT_EQ(back.base, f.base);
            EXPECT_EQ(back.pattern, f.pattern);
            EXPECT_EQ(back.mode, f.mode);
        }
    }
}

TEST(Io, WitnessParseErrors) {
    const auto g = build(2);
    EXPECT_THROW(cut_from_json(g, json{{"pattern", "K9"}, {"elements", json::array()}}), ParseError);
    EXPECT_THROW(cut_from_json(g, json{{"pattern", "P4"}, {"elements", json::array()}}), ParseError);
    EXPECT_THROW(cut_from_json(g, json{{"pattern", "C4"}, {"mode", "x"}, {"elements", json::array()}}), ParseError);
    EXPECT_THROW(cut_from_json(g, json{{"pattern", "C4"}}), ParseError);
}

TEST(Io, ParseVertex) {
    EXPECT_EQ(parse_vertex("0,1,2").coords, (std::vector<int>{0, 1, 2}));
    EXPECT_THROW(parse_vertex("0,4"), ParseError);
    EXPECT_THROW(parse_vertex(""), ParseError);
    EXPECT_THROW(parse_vertex("0,,1"), ParseError);
}

TEST(Io, ReportJson) {
    const auto g = build(2);
    const auto r = structure_connectivity(g, Shape::K12, Mode::Structure);
    const auto j = report_to_json(g, r);
    EXPECT_EQ(j["quantity"], "kappa_struct(K12)");
    EXPECT_EQ(j["value"], 2);
    EXPECT_EQ(j["witness"]["elements"].size(), 2u);
    EXPECT_EQ(j["explored"], r.explored);

    const auto none = structure_connectivity(build(1), Shape::K13, Mode::Structure);
    EXPECT_TRUE(report_to_json(build(1), none)["value"].is_null());

    const auto k = vertex_connectivity(g);
    EXPECT_EQ(report_to_json(g, k)["witness"].size(), 4u);
}

TEST(Io, PropertyJson) {
    const auto j = property_to_json(check_bipartite(build(1)));
    EXPECT_EQ(j["holds"], true);
    EXPECT_TRUE(j["counterexample"].is_null());
}

}  // namespace
}  // namespace bhcut
