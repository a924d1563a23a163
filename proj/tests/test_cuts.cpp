#include <gtest/gtest.h>

#include <set>

#include "bhcut/cuts.hpp"
#include "oracles.hpp"

namespace bhcut {
namespace {

std::set<std::uint32_t> removed_set(const SubgraphCut& f) { return {f.removed.begin(), f.removed.end()}; }

std::vector<std::vector<VertexId>> vertex_lists(const SubgraphCut& f) {
    std::vector<std::vector<VertexId>> out;
    for (const auto& e : f.elements) out.push_back(e.vertices);
    return out;
}

TEST(Cuts, K1IsolatesVertex) {
    const auto g = build(2);
    const auto f = cut_k1(g, 0);
    EXPECT_EQ(f.elements.size(), 4u);
    const auto v = verify(g, f);
    EXPECT_TRUE(v.ok());
    EXPECT_EQ(v.smallest_component, std::vector<VertexId>{0});
}

TEST(Cuts, K1OnFourCycle) {
    const auto g = build(1);
    const auto f = cut_k1(g, 0);
    EXPECT_EQ(f.removed, (std::vector<VertexId>{1, 3}));
    const auto v = verify(g, f);
    EXPECT_TRUE(v.is_cut);
    EXPECT_EQ(v.component_sizes, (std::vector<std::size_t>{1, 1}));
    EXPECT_EQ(v.smallest_component, std::vector<VertexId>{0});
}

TEST(Cuts, RejectN1) {
    const auto g = build(1);
    EXPECT_THROW(cut_k11(g, 0), DimensionError);
    EXPECT_THROW(cut_k12(g, 0), DimensionError);
    EXPECT_THROW(cut_k13(g, 0), DimensionError);
    EXPECT_THROW(cut_c4(g, 0), DimensionError);
}

// Families at u = (0,0) in BH_2, worked out by hand from the neighbour rule.
TEST(Cuts, LiteralFamiliesAtOrigin) {
    const auto g = build(2);
    EXPECT_EQ(vertex_lists(cut_k11(g, 0)),
              (std::vector<std::vector<VertexId>>{{1, 14}, {3, 12}, {5, 6}, {4, 7}}));
    EXPECT_EQ(vertex_lists(cut_k12(g, 0)), (std::vector<std::vector<VertexId>>{{2, 1, 3}, {6, 5, 7}}));
    EXPECT_EQ(vertex_lists(cut_k13(g, 0)), (std::vector<std::vector<VertexId>>{{14, 1, 3, 15}, {6, 5, 7, 11}}));
    EXPECT_EQ(vertex_lists(cut_c4(g, 0)), (std::vector<std::vector<VertexId>>{{1, 2, 3, 14}, {4, 5, 6, 7}}));
}

TEST(Cuts, EveryConstructorIsolatesEveryVertex) {
    for (int n = 2; n <= 3; ++n) {
        const auto g = build(n);
        const auto ref = oracle::definition_graph(n);
        for (VertexId u = 0; u < g.vertex_count(); ++u) {
            for (Shape h : kPatterns) {
                const auto f = cut_for(h, g, u);
                const auto v = verify(g, f);
                EXPECT_TRUE(v.ok()) << to_string(h) << " u=" << u << " " << v.reason;
                EXPECT_EQ(v.base_component, std::vector<VertexId>{u}) << to_string(h) << " u=" << u;
                EXPECT_TRUE(oracle::is_cut(ref, removed_set(f)));
                EXPECT_EQ(removed_set(f).count(u), 0u);
                for (auto w : ref[u]) EXPECT_EQ(removed_set(f).count(w), 1u);
            }
        }
    }
}

TEST(Cuts, ElementAndVertexCounts) {
    for (int n = 2; n <= 3; ++n) {
        const auto g = build(n);
        const auto sn = static_cast<std::size_t>(n);
        for (VertexId u = 0; u < g.vertex_count(); ++u) {
            EXPECT_EQ(cut_k1(g, u).elements.size(), 2 * sn);
            EXPECT_EQ(cut_k1(g, u).removed.size(), 2 * sn);
            EXPECT_EQ(cut_k11(g, u).elements.size(), 2 * sn);
            EXPECT_LE(cut_k11(g, u).removed.size(), 4 * sn);
            EXPECT_EQ(cut_k12(g, u).elements.size(), sn);
            EXPECT_EQ(cut_k12(g, u).removed.size(), 3 * sn);
            EXPECT_EQ(cut_k13(g, u).elements.size(), sn);
            EXPECT_EQ(cut_k13(g, u).removed.size(), 4 * sn);
            EXPECT_EQ(cut_c4(g, u).elements.size(), sn);
            EXPECT_EQ(cut_c4(g, u).removed.size(), 4 * sn);
        }
    }
}

TEST(Cuts, ClawCentresAdjacentToLeaves) {
    for (int n = 2; n <= 3; ++n) {
        const auto g = build(n);
        const auto ref = oracle::definition_graph(n);
        for (VertexId u = 0; u < g.vertex_count(); ++u) {
            const auto f = cut_k13(g, u);
            // i = 0 claw is centred at (u^{0+})^{1+}
            const VertexId a = g.step(u, 0, Sign::Plus);
            const VertexId center0 = g.step(a, 1, Sign::Plus);
            EXPECT_EQ(f.elements[0].vertices[0], center0);
            for (const auto& e : f.elements) {
                for (std::size_t k = 1; k < 4; ++k) EXPECT_TRUE(oracle::has(ref, e.vertices[0], e.vertices[k]));
            }
        }
    }
}

TEST(Cuts, ExactlyOneFourCycleContainsTwin) {
    for (int n = 2; n <= 3; ++n) {
        const auto g = build(n);
        for (VertexId u = 0; u < g.vertex_count(); ++u) {
            int holders = 0;
            for (const auto& e : cut_c4(g, u).elements) {
                holders += std::count(e.vertices.begin(), e.vertices.end(), g.twin(u)) ? 1 : 0;
            }
            EXPECT_EQ(holders, 1) << "u=" << u;
        }
    }
}

TEST(Cuts, TranslationsAreTagPreservingAutomorphisms) {
    for (int n = 1; n <= 3; ++n) {
        const auto g = build(n);
        const auto ref = oracle::definition_graph(n);
        for (VertexId to = 0; to < g.vertex_count(); ++to) {
            const auto t = Translation::between(n, 0, to);
            EXPECT_EQ(t.apply(0), to);
            EXPECT_TRUE(preserves_tagged_adjacency(g, t));
            std::set<VertexId> image;
            for (VertexId v = 0; v < g.vertex_count(); ++v) {
                image.insert(t.apply(v));
                for (auto w : ref[v]) EXPECT_TRUE(oracle::has(ref, t.apply(v), t.apply(w)));
            }
            EXPECT_EQ(image.size(), g.vertex_count());
        }
    }
}

TEST(Cuts, PlainCoordinateShiftIsNotAnAutomorphism) {
    // adding 1 to a0 without negating the outer coordinates breaks adjacency
    const auto g = build(2);
    bool broken = false;
    for (const auto& e : g.edges()) {
        auto shift = [](VertexId v) { return with_coordinate(v, 0, inner_index(v) + 1); };
        broken |= !g.adjacent(shift(e.u), shift(e.v));
    }
    EXPECT_TRUE(broken);
}

TEST(Cuts, TranslationInvariance) {
    const auto g = build(2);
    for (Shape h : kPatterns) {
        const auto base = cut_for(h, g, 0);
        for (VertexId u = 0; u < g.vertex_count(); ++u) {
            const auto t = Translation::between(2, u, 0);
            const auto f = cut_for(h, g, u);
            std::vector<Embedding> mapped;
            for (const auto& e : f.elements) mapped.push_back(translate(e, t));
            auto a = mapped, b = base.elements;
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            EXPECT_EQ(a, b) << to_string(h) << " u=" << u;
        }
    }
}

TEST(Cuts, VerifyNonCuts) {
    const auto g = build(2);
    const auto single = SubgraphCut::make(Shape::K11, Mode::Substructure, {{Shape::K11, {0, 1}}});
    const auto v = verify(g, single);
    EXPECT_FALSE(v.is_cut);
    EXPECT_EQ(v.component_sizes, std::vector<std::size_t>{14});
    const auto empty = SubgraphCut::make(Shape::K12, Mode::Structure, {});
    EXPECT_FALSE(verify(g, empty).is_cut);
}

TEST(Cuts, VerifyReportsShapeViolationsByIndex) {
    const auto g = build(2);
    auto f = cut_k13(g, 0);
    f.elements[1].vertices[3] = f.elements[1].vertices[0] ^ 2;  // same colour as centre
    auto v = verify(g, f);
    ASSERT_EQ(v.violations.size(), 1u);
    EXPECT_EQ(v.violations[0].index, 1u);
    EXPECT_FALSE(v.ok());

    auto wrong_shape = cut_k12(g, 0);
    wrong_shape.elements.push_back({Shape::K11, {0, 1}});
    v = verify(g, wrong_shape);
    ASSERT_EQ(v.violations.size(), 1u);
    EXPECT_EQ(v.violations[0].index, 2u);

    wrong_shape.mode = Mode::Substructure;
    EXPECT_TRUE(verify(g, wrong_shape).violations.empty());
    wrong_shape.elements.push_back({Shape::K13, {1, 0, 2, 14}});
    EXPECT_EQ(verify(g, wrong_shape).violations.size(), 1u);
}

TEST(Cuts, TrivialRemainderCounts) {
    const auto g = build(1);
    const auto f = SubgraphCut::make(Shape::K11, Mode::Structure, {{Shape::K11, {0, 1}}, {Shape::K11, {1, 2}}});
    const auto v = verify(g, f);
    EXPECT_TRUE(v.is_cut);
    EXPECT_EQ(v.reason, "remaining graph is trivial");
}

TEST(Cuts, DisjointnessNotRequired) {
    const auto g = build(2);
    auto f = cut_k12(g, 0);
    f.elements.push_back(f.elements.front());
    f.recompute_removed();
    EXPECT_EQ(f.removed.size(), 6u);
    EXPECT_TRUE(verify(g, f).ok());
}

}  // namespace
}  // namespace bhcut
