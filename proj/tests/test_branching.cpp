#include <gtest/gtest.h>

#include "secluded/branching.hpp"
#include "secluded/generate.hpp"
#include "secluded/oracle.hpp"
#include "support.hpp"

using namespace secluded;
using namespace secluded::testing;

namespace {

Digraph bidirected(int n, const std::vector<Edge>& und) {
    std::vector<Edge> e;
    for (auto [u, v] : und) {
        e.emplace_back(u, v);
        e.emplace_back(v, u);
    }
    return Digraph(n, e);
}

Digraph complete(int n) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return bidirected(n, e);
}

bool two_hop_dominates(const Digraph& g, const VertexSet& s) {
    for (Vertex v = 0; v < g.size(); ++v) {
        if (contains(s, v)) continue;
        bool hit = false;
        for (Vertex a : s) {
            if (g.has_edge(a, v)) hit = true;
            for (Vertex m : g.out(a))
                if (g.has_edge(m, v)) hit = true;
        }
        if (!hit) return false;
    }
    return true;
}

std::uint64_t fib_bound(int k) {
    // F(0) = F(1) = 1
    std::uint64_t a = 1, b = 1;
    for (int i = 1; i < k; ++i) {
        std::uint64_t c = a + b;
        a = b;
        b = c;
    }
    return k == 0 ? 1 : b;
}

} // namespace

TEST(TwoHop, SingleVertex) { EXPECT_EQ(two_hop_dominating_is(Digraph(1)), VertexSet{0}); }

TEST(TwoHop, InwardStar) {
    Digraph star(4, {{1, 0}, {2, 0}, {3, 0}});
    EXPECT_EQ(two_hop_dominating_is(star), (VertexSet{1, 2, 3}));
}

TEST(TwoHop, RandomIsIndependentAndDominating) {
    Rng rng(31);
    for (int it = 0; it < 300; ++it) {
        int n = 1 + static_cast<int>(rng() % 12);
        Digraph g = random_digraph(rng, n, 0.1 + 0.1 * (it % 5));
        VertexSet s = two_hop_dominating_is(g);
        EXPECT_TRUE(naive_independent(g, s));
        EXPECT_TRUE(two_hop_dominates(g, s));
    }
}

TEST(Shor, PathsAndTieBreak) {
    Digraph one(2, {{0, 1}});
    EXPECT_EQ(shor(one, {0}, 1), std::vector<Vertex>{1});
    Digraph line(3, {{0, 1}, {1, 2}});
    EXPECT_EQ(shor(line, {0}, 2), (std::vector<Vertex>{1, 2}));
    Digraph diamond(4, {{0, 2}, {0, 1}, {1, 3}, {2, 3}});
    EXPECT_EQ(shor(diamond, {0}, 3), (std::vector<Vertex>{1, 3}));
    EXPECT_TRUE(shor(line, {0, 2}, 2).empty());
    EXPECT_THROW(shor(line, {2}, 0), std::invalid_argument);
}

TEST(OutAlpha, BidirectedK4) {
    auto r = solve_out_alpha_bounded(complete(4), 0, 0, 1);
    ASSERT_TRUE(r.solution);
    EXPECT_EQ(r.solution->weight, 4u);
}

TEST(OutAlpha, RandomMatchesOracleWithBoundedBranching) {
    Rng rng(32);
    for (int it = 0; it < 150; ++it) {
        int n = 1 + static_cast<int>(rng() % 10);
        int alpha = 1 + static_cast<int>(rng() % 2);
        int k = static_cast<int>(rng() % 4);
        Digraph g = random_digraph(rng, n, 0.5, 5);
        auto r = solve_out_alpha_bounded(g, 0, k, alpha);
        EXPECT_EQ(weight_of(r.solution), weight_of(brute_force_alpha(g, alpha, Neighborhood::Out, k)));
        EXPECT_LE(r.stats.max_children, static_cast<std::uint64_t>(2 * alpha + 2));
        EXPECT_LE(r.stats.max_depth, static_cast<std::uint64_t>(k));
        std::uint64_t cap = 1;
        for (int i = 0; i < k; ++i) cap *= 2 * alpha + 2;
        for (auto leaves : r.stats.leaves_per_guess) EXPECT_LE(leaves, cap);
    }
}

TEST(TotalAlpha, RandomMatchesOracleAndSymmetrization) {
    Rng rng(33);
    for (int it = 0; it < 150; ++it) {
        int n = 1 + static_cast<int>(rng() % 10);
        int alpha = 1 + static_cast<int>(rng() % 2);
        int k = static_cast<int>(rng() % 4);
        Digraph g = random_digraph(rng, n, 0.4, 5);
        auto r = solve_total_alpha_bounded(g, 0, k, alpha);
        EXPECT_EQ(weight_of(r.solution), weight_of(brute_force_alpha(g, alpha, Neighborhood::Total, k)));
        EXPECT_EQ(weight_of(r.solution), weight_of(solve_total_alpha_bounded(symmetrize(g), 0, k, alpha).solution));
        EXPECT_LE(r.stats.max_children, static_cast<std::uint64_t>(alpha + 1));
    }
}

TEST(Tournament, SmallCases) {
    Digraph c3(3, {{0, 1}, {1, 2}, {2, 0}});
    EXPECT_EQ(solve_out_tournament(c3, 0, 0).solution->weight, 3u);
    Digraph k2(2, {{0, 1}, {1, 0}});
    EXPECT_EQ(solve_out_tournament(k2, 0, 1).solution->weight, 1u);
}

TEST(Tournament, RandomMatchesOracle) {
    Rng rng(34);
    for (int it = 0; it < 150; ++it) {
        int n = 1 + static_cast<int>(rng() % 10);
        int k = static_cast<int>(rng() % 4);
        Digraph g = it % 2 ? random_semicomplete(rng, n, 0.2, 5) : random_digraph(rng, n, 0.6, 5);
        auto r = solve_out_tournament(g, 0, k);
        EXPECT_EQ(weight_of(r.solution), weight_of(brute_force_tournament(g, Neighborhood::Out, k)));
        EXPECT_LE(r.stats.max_children, 4u);
    }
}

TEST(Clique, SmallCases) {
    Digraph path = bidirected(3, {{0, 1}, {1, 2}});
    auto r = solve_secluded_clique(path, 0, 1);
    ASSERT_TRUE(r.solution);
    EXPECT_EQ(r.solution->weight, 2u);
    EXPECT_EQ(r.solution->set, (VertexSet{0, 1}));
    EXPECT_EQ(solve_secluded_clique(complete(4), 0, 0).solution->weight, 4u);
    EXPECT_THROW(solve_secluded_clique(Digraph(2, {{0, 1}}), 0, 0), std::invalid_argument);
}

TEST(Clique, RandomMatchesOracle) {
    Rng rng(35);
    for (int it = 0; it < 200; ++it) {
        int n = 1 + static_cast<int>(rng() % 11);
        int k = static_cast<int>(rng() % 4);
        Digraph g = random_symmetric(rng, n, 0.5, 5);
        auto r = solve_secluded_clique(g, 0, k);
        EXPECT_EQ(weight_of(r.solution), weight_of(brute_force_clique(g, k)));
    }
}

TEST(Clique, LeavesPerGuessFollowFibonacci) {
    for (int k = 0; k <= 12; ++k)
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
            Digraph g = planted_clique(24, 6, k, seed);
            auto r = solve_secluded_clique(g, 0, k);
            ASSERT_TRUE(r.solution);
            for (auto leaves : r.stats.leaves_per_guess) EXPECT_LE(leaves, fib_bound(k + 2)) << "k=" << k;
        }
}

TEST(Branching, ThresholdRespected) {
    Digraph g = complete(4);
    EXPECT_FALSE(solve_secluded_clique(g, 5, 0).solution);
    EXPECT_TRUE(solve_secluded_clique(g, 4, 0).solution);
    EXPECT_FALSE(solve_out_alpha_bounded(g, 5, 0, 1).solution);
    EXPECT_FALSE(solve_total_alpha_bounded(g, 5, 0, 1).solution);
}

TEST(Branching, DoublingWeightsDoublesOptimum) {
    Rng rng(36);
    for (int it = 0; it < 60; ++it) {
        int n = 1 + static_cast<int>(rng() % 9);
        int k = static_cast<int>(rng() % 3);
        Digraph g = random_semicomplete(rng, n, 0.3, 4);
        std::vector<Weight> w2 = g.weights();
        for (auto& x : w2) x *= 2;
        Digraph h = g.with_weights(w2);
        auto a = solve_out_alpha_bounded(g, 0, k, 1).solution;
        auto b = solve_out_alpha_bounded(h, 0, k, 1).solution;
        ASSERT_EQ(a.has_value(), b.has_value());
        if (a) {
            EXPECT_EQ(b->weight, 2 * a->weight);
            EXPECT_EQ(h.weight_of(a->set), 2 * a->weight);
        }
    }
}
