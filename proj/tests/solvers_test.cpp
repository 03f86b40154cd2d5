#include <gtest/gtest.h>

#include "brute.hpp"
#include "stc/errors.hpp"
#include "stc/gallai.hpp"
#include "stc/solvers.hpp"

using namespace stc;

namespace {

void expect_witness(const ELInstance& inst, const SolveResult& r) {
    ASSERT_EQ(r.yes, r.witness.has_value());
    if (r.witness) {
        EXPECT_TRUE(verify_labeling(inst, *r.witness).accepts(inst.k));
    }
}

using Solver = SolveResult (*)(const ELInstance&, const SolverLimits&);

const std::vector<std::pair<const char*, Solver>>& solvers() {
    static const std::vector<std::pair<const char*, Solver>> all{
        {"oracle", &solve_oracle}, {"dp", &solve_subset_dp}, {"fpt", &solve_fpt}};
    return all;
}

} // namespace

TEST(Oracle, Examples) {
    EXPECT_FALSE(solve_oracle(brute::full_lists(brute::path(3), 1, 0)).yes);
    const SolveResult r = solve_oracle(brute::full_lists(brute::path(3), 2, 0));
    ASSERT_TRUE(r.yes);
    EXPECT_EQ(r.witness->color_of, (std::vector<Color>{1, 2}));
    EXPECT_FALSE(solve_oracle(brute::full_lists(brute::star(3), 2, 0)).yes);
    EXPECT_TRUE(solve_oracle(brute::full_lists(brute::star(3), 2, 1)).yes);
}

TEST(Oracle, FirstWitnessInLexicographicOrder) {
    // With budget 1 on P3 and one color, weak-first order gives (0, 1).
    const SolveResult r = solve_oracle(brute::full_lists(brute::path(3), 1, 1));
    ASSERT_TRUE(r.yes);
    EXPECT_EQ(r.witness->color_of, (std::vector<Color>{0, 1}));
}

TEST(Oracle, EnumerationCap) {
    SolverLimits limits;
    limits.max_enum = 100;
    EXPECT_THROW(solve_oracle(brute::full_lists(brute::complete(5), 3, 0), limits), ResourceLimitError);
    EXPECT_NO_THROW(solve_oracle(brute::full_lists(brute::path(4), 3, 0), limits));
}

TEST(SubsetDp, Examples) {
    EXPECT_TRUE(solve_subset_dp(brute::full_lists(brute::cycle(4), 2, 0)).yes);
    EXPECT_FALSE(solve_subset_dp(brute::full_lists(brute::cycle(5), 2, 0)).yes);
    EXPECT_TRUE(solve_subset_dp(brute::full_lists(brute::cycle(5), 2, 1)).yes);
    const SolveResult r = solve_subset_dp(brute::full_lists(brute::complete(3), 1, 0));
    ASSERT_TRUE(r.yes);
    EXPECT_EQ(r.witness->color_of, (std::vector<Color>{1, 1, 1}));
}

TEST(SubsetDp, SubsetCap) {
    SolverLimits limits;
    limits.max_subsets = 1 << 5;
    EXPECT_THROW(solve_subset_dp(brute::full_lists(brute::cycle(6), 2, 0), limits), ResourceLimitError);
    EXPECT_NO_THROW(solve_subset_dp(brute::full_lists(brute::cycle(5), 2, 0), limits));
}

TEST(Fpt, Examples) {
    const ELInstance p4 = brute::full_lists(brute::path(4), 1, 1);
    const SolveResult r = solve_fpt(p4);
    ASSERT_TRUE(r.yes);
    EXPECT_EQ(r.witness->weak_count(), 1);
    EXPECT_TRUE(solve_fpt(brute::full_lists(brute::star(3), 3, 0)).yes);
    EXPECT_FALSE(solve_fpt(ELInstance{brute::path(3), 2, 0, {{1}, {1}}}).yes);
    EXPECT_TRUE(solve_fpt(ELInstance{brute::path(3), 2, 0, {{1}, {2}}}).yes);
}

TEST(Fpt, NodeCap) {
    SolverLimits limits;
    limits.max_nodes = 3;
    EXPECT_THROW(solve_fpt(brute::full_lists(brute::cycle(7), 2, 0), limits), ResourceLimitError);
}

TEST(Shortcut, Examples) {
    const MultiInstance c4{brute::cycle(4), 3, 0};
    const auto r = shortcut_multi(c4);
    ASSERT_TRUE(r.has_value());
    ASSERT_TRUE(r->yes);
    EXPECT_EQ(r->witness->weak_count(), 0);
    EXPECT_TRUE(verify_labeling(normalize(c4), *r->witness).accepts(0));
    // Two singleton colors and one shared color.
    std::map<Color, int> sizes;
    for (const Color x : r->witness->color_of) {
        ++sizes[x];
    }
    EXPECT_EQ(sizes, (std::map<Color, int>{{1, 1}, {2, 1}, {3, 2}}));

    const MultiInstance c5{brute::cycle(5), 4, 0};
    const auto r5 = shortcut_multi(c5);
    ASSERT_TRUE(r5.has_value());
    EXPECT_TRUE(verify_labeling(normalize(c5), *r5->witness).accepts(0));
    EXPECT_FALSE(shortcut_multi(MultiInstance{brute::cycle(5), 3, 0}).has_value());
}

TEST(Shortcut, AgreesWithDp) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 150; ++trial) {
        const Graph g = brute::random_graph(5 + static_cast<int>(rng() % 2), 0.5, rng);
        if (g.num_edges() > 12) {
            continue;
        }
        const int c = 1 + static_cast<int>(rng() % 4);
        const MultiInstance inst{g, c, 0};
        if (const auto r = shortcut_multi(inst)) {
            EXPECT_TRUE(solve_subset_dp(normalize(inst)).yes);
            EXPECT_TRUE(verify_labeling(normalize(inst), *r->witness).accepts(0));
        }
    }
}

TEST(Solve, AutoAndNames) {
    EXPECT_EQ(parse_algorithm("dp"), Algorithm::Dp);
    EXPECT_EQ(parse_algorithm("auto"), Algorithm::Auto);
    EXPECT_FALSE(parse_algorithm("greedy").has_value());
    const AnyInstance inst = MultiInstance{brute::cycle(5), 4, 0};
    const SolveResult r = solve(inst, Algorithm::Auto);
    ASSERT_TRUE(r.yes);
    EXPECT_EQ(r.witness->weak_count(), 0);
    const AnyInstance vl = VLInstance{brute::path(3), 2, 0, {{1}, {1, 2}, {1}}};
    EXPECT_FALSE(solve(vl, Algorithm::Auto).yes);
}

TEST(Solve, AutoFallsBackToDp) {
    SolverLimits limits;
    limits.max_nodes = 1;
    const AnyInstance inst = ELInstance{brute::cycle(5), 2, 1, std::vector<ColorSet>(5, ColorSet{1, 2})};
    const SolveResult r = solve(inst, Algorithm::Auto, limits);
    EXPECT_TRUE(r.yes);
    EXPECT_THROW(solve(inst, Algorithm::Fpt, limits), ResourceLimitError);
}

// Every solver against the full (c+1)^m enumeration in the test oracle.
TEST(CrossCheck, AgainstFullEnumerationUpTo4Vertices) {
    std::mt19937_64 rng(19);
    int runs = 0;
    for (int n = 1; n <= 4; ++n) {
        for (const Graph& g : brute::all_graphs(n)) {
            for (int c = 1; c <= 3; ++c) {
                for (int variant = 0; variant < 6; ++variant) {
                    ELInstance inst = variant == 0 ? brute::full_lists(g, c, 0) : brute::random_lists(g, c, 0, rng);
                    const int best = brute::min_weak(inst);
                    for (int k = 0; k <= g.num_edges(); ++k) {
                        inst.k = k;
                        for (const auto& [name, solver] : solvers()) {
                            const SolveResult r = solver(inst, {});
                            EXPECT_EQ(r.yes, k >= best) << name << " n=" << n << " c=" << c << " k=" << k;
                            expect_witness(inst, r);
                            ++runs;
                        }
                    }
                }
            }
        }
    }
    EXPECT_GT(runs, 10000);
}

TEST(CrossCheck, RandomFiveAndSixVertexInstances) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 120; ++trial) {
        const Graph g = brute::random_graph(5 + static_cast<int>(rng() % 2), 0.45, rng);
        if (g.num_edges() > 8) {
            continue;
        }
        const int c = 1 + static_cast<int>(rng() % 3);
        ELInstance inst = brute::random_lists(g, c, 0, rng);
        const int best = brute::min_weak(inst);
        for (int k = 0; k <= g.num_edges(); ++k) {
            inst.k = k;
            for (const auto& [name, solver] : solvers()) {
                const SolveResult r = solver(inst, {});
                EXPECT_EQ(r.yes, k >= best) << name;
                expect_witness(inst, r);
            }
        }
    }
}

TEST(Properties, OneColorYesIffBudgetCoversK1) {
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : brute::all_graphs(n)) {
            const int kk = k1(g).k1;
            for (int k : {kk - 1, kk}) {
                if (k < 0) {
                    continue;
                }
                EXPECT_EQ(solve_fpt(brute::full_lists(g, 1, k)).yes, k >= kk);
            }
        }
    }
}

TEST(Properties, MonotoneInBudgetAndLists) {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 300; ++trial) {
        const Graph g = brute::random_graph(5, 0.6, rng);
        const int c = 1 + static_cast<int>(rng() % 3);
        const int k = static_cast<int>(rng() % 3);
        const ELInstance inst = brute::random_lists(g, c, k, rng);
        if (!solve_fpt(inst).yes) {
            continue;
        }
        ELInstance more_budget = inst;
        ++more_budget.k;
        EXPECT_TRUE(solve_fpt(more_budget).yes);
        ELInstance more_colors = inst;
        ++more_colors.c;
        for (auto& list : more_colors.psi) {
            if (rng() % 2 == 0) {
                list.insert(c + 1);
            }
        }
        EXPECT_TRUE(solve_fpt(more_colors).yes);
    }
}

TEST(Determinism, RepeatedRunsGiveSameWitness) {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = brute::random_graph(6, 0.5, rng);
        const ELInstance inst = brute::random_lists(g, 3, 2, rng);
        for (const auto& [name, solver] : solvers()) {
            if (g.num_edges() > 12) {
                continue;
            }
            const SolveResult a = solver(inst, {});
            const SolveResult b = solver(inst, {});
            EXPECT_EQ(a.witness, b.witness) << name;
        }
    }
}
