#include <gtest/gtest.h>

#include "brute.hpp"
#include "stc/errors.hpp"
#include "stc/gallai.hpp"
#include "stc/instance.hpp"

using namespace stc;

TEST(Normalize, MultiGetsFullLists) {
    const ELInstance el = normalize(MultiInstance{brute::path(3), 2, 0});
    EXPECT_EQ(el.psi, (std::vector<ColorSet>{{1, 2}, {1, 2}}));
    EXPECT_EQ(el.c, 2);
    EXPECT_EQ(el.k, 0);
}

TEST(Normalize, VertexListsIntersect) {
    const ELInstance el = normalize(VLInstance{brute::path(3), 2, 0, {{1}, {1, 2}, {2}}});
    EXPECT_EQ(el.psi, (std::vector<ColorSet>{{1}, {2}}));
}

TEST(Normalize, DisjointVertexListsGiveEmptyEdgeList) {
    const ELInstance el = normalize(VLInstance{build_graph(2, {{0, 1}}), 2, 0, {{1}, {2}}});
    ASSERT_EQ(el.psi.size(), 1U);
    EXPECT_TRUE(el.psi[0].empty());
}

TEST(Normalize, EdgeListsUnchanged) {
    const ELInstance in{brute::path(3), 3, 1, {{}, {1, 3}}};
    EXPECT_EQ(normalize(in), in);
    EXPECT_EQ(normalize(AnyInstance{in}), in);
}

TEST(Validate, RejectsBadInstances) {
    EXPECT_THROW(validate(MultiInstance{brute::path(3), 0, 0}), ValidationError);
    EXPECT_THROW(validate(MultiInstance{brute::path(3), 1, -1}), ValidationError);
    EXPECT_THROW(validate(ELInstance{brute::path(3), 2, 0, {{1}}}), ValidationError);
    EXPECT_THROW(validate(ELInstance{brute::path(3), 2, 0, {{1}, {3}}}), ValidationError);
    EXPECT_THROW(validate(VLInstance{brute::path(3), 2, 0, {{1}, {2}}}), ValidationError);
    EXPECT_NO_THROW(validate(ELInstance{brute::path(3), 2, 5, {{}, {2}}}));
}

TEST(Verify, MonochromaticP3) {
    const ELInstance inst = normalize(MultiInstance{brute::path(3), 1, 0});
    const VerifyReport r = verify_labeling(inst, Labeling{{1, 1}});
    EXPECT_FALSE(r.is_stc);
    ASSERT_EQ(r.violations.size(), 1U);
    EXPECT_EQ(r.violations[0], (Violation{ViolationKind::StcP3, 0, 1}));
    EXPECT_EQ(to_string(r.violations[0].kind), "stc-P3");
}

TEST(Verify, TwoColorsOnP3) {
    const ELInstance inst = normalize(MultiInstance{brute::path(3), 2, 0});
    const VerifyReport r = verify_labeling(inst, Labeling{{1, 2}});
    EXPECT_TRUE(r.is_stc);
    EXPECT_TRUE(r.is_list_satisfying);
    EXPECT_EQ(r.weak_count, 0);
    EXPECT_TRUE(r.accepts(0));
}

TEST(Verify, ListViolation) {
    const ELInstance inst{brute::path(3), 2, 0, {{1}, {1}}};
    const VerifyReport r = verify_labeling(inst, Labeling{{1, 2}});
    EXPECT_TRUE(r.is_stc);
    EXPECT_FALSE(r.is_list_satisfying);
    ASSERT_EQ(r.violations.size(), 1U);
    EXPECT_EQ(r.violations[0], (Violation{ViolationKind::List, 1, 1}));
    EXPECT_FALSE(r.accepts(5));
}

TEST(Verify, RejectsMalformedLabelings) {
    const ELInstance inst = normalize(MultiInstance{brute::path(3), 2, 0});
    EXPECT_THROW(verify_labeling(inst, Labeling{{1}}), ValidationError);
    EXPECT_THROW(verify_labeling(inst, Labeling{{1, 3}}), ValidationError);
    EXPECT_THROW(verify_labeling(inst, Labeling{{-1, 0}}), ValidationError);
}

TEST(Verify, AllWeakAlwaysVerifies) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = brute::random_graph(7, 0.5, rng);
        const ELInstance inst = brute::random_lists(g, 3, 0, rng);
        const VerifyReport r = verify_labeling(inst, all_weak(g));
        EXPECT_TRUE(r.is_stc);
        EXPECT_TRUE(r.is_list_satisfying);
        EXPECT_EQ(r.weak_count, g.num_edges());
        EXPECT_TRUE(r.accepts(g.num_edges()));
    }
}

// The labeling is STC exactly when it is a proper subgraph coloring of the
// Gallai graph; checked for every 2-coloring with weak edges on all graphs n <= 5.
TEST(Verify, StcIffProperGallaiColoring) {
    for (int n = 1; n <= 5; ++n) {
        for (const Graph& g : brute::all_graphs(n)) {
            if (g.num_edges() > 7) {
                continue;
            }
            const ELInstance inst = brute::full_lists(g, 2, 0);
            const Graph gal = gallai_graph(g).base;
            const int m = g.num_edges();
            std::vector<int> col(static_cast<std::size_t>(m), 0);
            while (true) {
                bool proper = true;
                for (const Edge& e : gal.edges()) {
                    proper = proper && !(col[e.u] != 0 && col[e.u] == col[e.v]);
                }
                EXPECT_EQ(verify_labeling(inst, Labeling{col}).is_stc, proper);
                int i = 0;
                while (i < m && col[i] == 2) {
                    col[i++] = 0;
                }
                if (i == m) {
                    break;
                }
                ++col[i];
            }
        }
    }
}

TEST(Verify, StcIffProperGallaiColoringDenseGraphsSampled) {
    std::mt19937_64 rng(41);
    for (const Graph& g : brute::all_graphs(5)) {
        if (g.num_edges() <= 7) {
            continue;
        }
        const ELInstance inst = brute::full_lists(g, 3, 0);
        const Graph gal = gallai_graph(g).base;
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<int> col;
            for (int e = 0; e < g.num_edges(); ++e) {
                col.push_back(static_cast<int>(rng() % 4));
            }
            bool proper = true;
            for (const Edge& e : gal.edges()) {
                proper = proper && !(col[e.u] != 0 && col[e.u] == col[e.v]);
            }
            EXPECT_EQ(verify_labeling(inst, Labeling{col}).is_stc, proper);
        }
    }
}

namespace {

bool triangle_free(const Graph& g) {
    for (const Edge& e : g.edges()) {
        for (Vertex w = 0; w < g.num_vertices(); ++w) {
            if (g.has_edge(e.u, w) && g.has_edge(e.v, w)) {
                return false;
            }
        }
    }
    return true;
}

} // namespace

// In a triangle-free graph every two edges sharing a vertex form an induced
// P3, so a labeling without weak edges is STC iff it is a proper edge coloring.
TEST(Verify, TriangleFreeStcIsProperEdgeColoring) {
    std::mt19937_64 rng(43);
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : brute::all_graphs(n)) {
            if (!triangle_free(g)) {
                continue;
            }
            const int m = g.num_edges();
            const ELInstance inst = brute::full_lists(g, 3, 0);
            const auto check = [&](const std::vector<int>& col) {
                bool proper = true;
                for (int a = 0; a < m; ++a) {
                    for (int b = a + 1; b < m; ++b) {
                        const Edge& x = g.edge(a);
                        const Edge& y = g.edge(b);
                        const bool touch = x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v;
                        proper = proper && !(touch && col[a] == col[b]);
                    }
                }
                EXPECT_EQ(verify_labeling(inst, Labeling{col}).is_stc, proper);
            };
            if (m <= 6) {
                std::vector<int> col(static_cast<std::size_t>(m), 1);
                while (true) {
                    check(col);
                    int i = 0;
                    while (i < m && col[i] == 3) {
                        col[i++] = 1;
                    }
                    if (i == m) {
                        break;
                    }
                    ++col[i];
                }
            } else {
                for (int trial = 0; trial < 50; ++trial) {
                    std::vector<int> col;
                    for (int e = 0; e < m; ++e) {
                        col.push_back(1 + static_cast<int>(rng() % 3));
                    }
                    check(col);
                }
            }
        }
    }
}
