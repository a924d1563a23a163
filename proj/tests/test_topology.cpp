#include <gtest/gtest.h>

#include <set>

#include "bhcut/topology.hpp"
#include "oracles.hpp"

namespace bhcut {
namespace {

std::set<VertexId> ids_of(const std::vector<Neighbor>& nbs) {
    std::set<VertexId> out;
    for (const auto& nb : nbs) out.insert(nb.vertex.id());
    return out;
}

Vertex V(std::vector<int> c) { return Vertex{std::move(c)}; }

TEST(Topology, BH1IsTheFourCycle) {
    const auto g = build(1);
    ASSERT_EQ(g.vertex_count(), 4u);
    ASSERT_EQ(g.edge_count(), 4u);
    for (VertexId v = 0; v < 4; ++v) {
        EXPECT_TRUE(g.adjacent(v, (v + 1) % 4));
        EXPECT_FALSE(g.adjacent(v, (v + 2) % 4));
    }
}

TEST(Topology, CountsMatchDefinitionOracle) {
    for (int n = 1; n <= 3; ++n) {
        const auto g = build(n);
        const auto ref = oracle::definition_graph(n);
        EXPECT_EQ(g.vertex_count(), ref.size());
        EXPECT_EQ(g.edge_count(), oracle::edge_count(ref));
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            EXPECT_EQ(g.degree(v), static_cast<std::size_t>(2 * n));
            const auto nb = g.neighbor_ids(v);
            EXPECT_EQ(std::set<VertexId>(nb.begin(), nb.end()), ref[v]) << "n=" << n << " v=" << v;
        }
    }
    EXPECT_EQ(build(2).edge_count(), 32u);
    EXPECT_EQ(build(3).edge_count(), 192u);
}

TEST(Topology, DimensionRange) {
    EXPECT_THROW(build(0), DimensionError);
    EXPECT_THROW(build(9), DimensionError);
    EXPECT_THROW(build(4, 3), DimensionError);
    EXPECT_NO_THROW(build(8).vertex_count());
}

TEST(Topology, VertexIdPacking) {
    const Vertex v = V({1, 2, 3});
    EXPECT_EQ(v.id(), 1u + 2u * 4u + 3u * 16u);
    EXPECT_EQ(Vertex::from_id(3, v.id()), v);
    for (VertexId id = 0; id < 256; ++id) EXPECT_EQ(Vertex::from_id(4, id).id(), id);
}

TEST(Topology, NeighborsOfBH1Origin) {
    const auto g = build(1);
    const auto nbs = g.neighbors(V({0}));
    ASSERT_EQ(nbs.size(), 2u);
    EXPECT_EQ(nbs[0], (Neighbor{V({1}), 0, Sign::Plus}));
    EXPECT_EQ(nbs[1], (Neighbor{V({3}), 0, Sign::Minus}));
}

TEST(Topology, NeighborsInBH2) {
    const auto g = build(2);
    EXPECT_EQ(ids_of(g.neighbors(V({0, 0}))),
              (std::set<VertexId>{V({1, 0}).id(), V({3, 0}).id(), V({1, 1}).id(), V({3, 1}).id()}));
    // odd inner index: outer coordinate moves by -1
    EXPECT_EQ(ids_of(g.neighbors(V({1, 0}))),
              (std::set<VertexId>{V({2, 0}).id(), V({0, 0}).id(), V({2, 3}).id(), V({0, 3}).id()}));
}

TEST(Topology, NeighborTagsAndOrder) {
    for (int n = 1; n <= 3; ++n) {
        const auto g = build(n);
        for (VertexId u = 0; u < g.vertex_count(); ++u) {
            const auto nbs = g.neighbors(g.vertex(u));
            ASSERT_EQ(nbs.size(), static_cast<std::size_t>(2 * n));
            const Vertex uv = g.vertex(u);
            for (std::size_t k = 0; k < nbs.size(); ++k) {
                const auto& nb = nbs[k];
                EXPECT_EQ(nb.dimension, static_cast<int>(k / 2));
                EXPECT_EQ(nb.sign, k % 2 == 0 ? Sign::Plus : Sign::Minus);
                EXPECT_EQ(nb.vertex.inner(), mod4(uv.inner() + (nb.sign == Sign::Plus ? 1 : -1)));
                for (int i = 1; i < n; ++i) {
                    const int expected = i == nb.dimension ? mod4(uv.coords[i] + (uv.inner() % 2 == 0 ? 1 : -1))
                                                           : uv.coords[i];
                    EXPECT_EQ(nb.vertex.coords[i], expected);
                }
            }
            // 0-dimension steps invert each other
            EXPECT_EQ(g.step(g.step(u, 0, Sign::Plus), 0, Sign::Minus), u);
            for (int i = 0; i < n; ++i) {
                EXPECT_EQ(inner_index(g.step(g.step(u, i, Sign::Plus), i, Sign::Minus)), inner_index(u));
            }
        }
    }
}

TEST(Topology, EdgeDimensionsMatchCoordinateDifference) {
    const auto g = build(3);
    for (const EdgeRef& e : g.edges()) {
        int differing_outer = 0, which = 0;
        for (int i = 1; i < 3; ++i) {
            if (coordinate(e.u, i) != coordinate(e.v, i)) {
                ++differing_outer;
                which = i;
            }
        }
        EXPECT_LE(differing_outer, 1);
        EXPECT_EQ(e.dimension, which);
        EXPECT_EQ(mod4(inner_index(e.u) - inner_index(e.v)) % 2, 1);
    }
}

TEST(Topology, UnknownVertex) {
    const auto g = build(2);
    EXPECT_THROW(g.neighbors(V({0})), UnknownVertexError);
    EXPECT_THROW(g.neighbors(V({0, 4})), UnknownVertexError);
    EXPECT_THROW(g.neighbor_ids(16), UnknownVertexError);
    EXPECT_THROW(g.twin(99), UnknownVertexError);
}

TEST(Topology, Twin) {
    const auto g2 = build(2);
    EXPECT_EQ(g2.twin(V({0, 0})), V({2, 0}));
    const auto g3 = build(3);
    EXPECT_EQ(g3.twin(V({1, 2, 3})), V({3, 2, 3}));
    for (int n = 1; n <= 3; ++n) {
        const auto g = build(n);
        for (VertexId u = 0; u < g.vertex_count(); ++u) {
            EXPECT_EQ(g.twin(g.twin(u)), u);
            EXPECT_EQ(g.neighbor_ids(g.twin(u)), g.neighbor_ids(u));
        }
    }
}

TEST(Topology, CommonNeighbors) {
    const auto g = build(2);
    EXPECT_EQ(g.common_neighbors(V({0, 0}).id(), V({2, 0}).id()).size(), 4u);
    EXPECT_EQ(g.common_neighbors(V({0, 0}).id(), V({0, 1}).id()).size(), 2u);
    EXPECT_TRUE(g.common_neighbors(V({0, 0}).id(), V({1, 0}).id()).empty());
    EXPECT_THROW(g.common_neighbors(3, 3), IdenticalVerticesError);

    const auto ref = oracle::definition_graph(2);
    std::set<VertexId> expected;
    for (auto w : ref[V({0, 0}).id()])
        if (ref[V({0, 1}).id()].count(w)) expected.insert(w);
    const auto got = g.common_neighbors(V({0, 0}).id(), V({0, 1}).id());
    EXPECT_EQ(std::set<VertexId>(got.begin(), got.end()), expected);
}

TEST(Topology, CommonNeighborDichotomyExhaustive) {
    for (int n = 1; n <= 3; ++n) {
        const auto g = build(n);
        for (VertexId u = 0; u < g.vertex_count(); ++u) {
            for (VertexId v = u + 1; v < g.vertex_count(); ++v) {
                const auto c = g.common_neighbors(u, v).size();
                EXPECT_TRUE(c == 0 || c == 2 || c == static_cast<std::size_t>(2 * n)) << u << "," << v;
            }
        }
    }
}

TEST(Topology, SubcubeOfBH2IsFourCycle) {
    const auto g = build(2);
    const auto s = g.subcube(0);
    ASSERT_EQ(s.vertices.size(), 4u);
    ASSERT_EQ(s.edges.size(), 4u);
    for (const auto& e : s.edges) EXPECT_EQ(e.dimension, 0);
    EXPECT_THROW(build(1).subcube(0), DimensionError);
}

TEST(Topology, CrossEdgesOnlyBetweenConsecutiveSubcubes) {
    for (int n = 2; n <= 3; ++n) {
        const auto g = build(n);
        for (int k = 0; k < 4; ++k) {
            const auto cross = g.cross_edges(k);
            EXPECT_EQ(cross.size(), static_cast<std::size_t>(2 * (VertexId{1} << (2 * (n - 1)))));
            for (const auto& e : cross) {
                EXPECT_EQ(e.dimension, n - 1);
                const int ku = coordinate(e.u, n - 1), kv = coordinate(e.v, n - 1);
                EXPECT_TRUE(mod4(ku - kv) == 1 || mod4(ku - kv) == 3);
            }
        }
    }
}

TEST(Topology, SubcubeIsomorphicToLowerDimension) {
    for (int n = 2; n <= 3; ++n) {
        const auto g = build(n);
        const auto lower = build(n - 1);
        const VertexId drop = VertexId{1} << (2 * (n - 1));
        for (int k = 0; k < 4; ++k) {
            const auto s = g.subcube(k);
            ASSERT_EQ(s.vertices.size(), lower.vertex_count());
            std::vector<EdgeRef> mapped;
            for (const auto& e : s.edges) mapped.push_back({e.u % drop, e.v % drop, e.dimension});
            std::sort(mapped.begin(), mapped.end());
            EXPECT_EQ(mapped, lower.edges()) << "n=" << n << " k=" << k;
        }
    }
}

TEST(Topology, BipartitionByInnerParity) {
    for (int n = 1; n <= 3; ++n) {
        const auto g = build(n);
        for (const auto& e : g.edges()) EXPECT_NE(g.color(e.u), g.color(e.v));
        EXPECT_EQ(g.color(0), Color::White);
        EXPECT_EQ(g.color(1), Color::Black);
    }
}

TEST(Topology, FromEdgesRoundTrip) {
    const auto g = build(3);
    const auto edges = g.edges();
    EXPECT_EQ(BalancedHypercube::from_edges(3, edges), g);
    const auto cut = g.without_edge(0, 1);
    EXPECT_EQ(cut.edge_count(), g.edge_count() - 1);
    EXPECT_FALSE(cut.adjacent(0, 1));
    EXPECT_NE(cut, g);
}

}  // namespace
}  // namespace bhcut
