#include <gtest/gtest.h>

#include "secluded/gadgets.hpp"
#include "secluded/oracle.hpp"
#include "support.hpp"

using namespace secluded;
using namespace secluded::testing;

namespace {

UndirectedGraph k3() { return make_undirected(3, {{0, 1}, {1, 2}, {0, 2}}); }

Digraph directed_triangle() { return Digraph(3, {{0, 1}, {1, 2}, {2, 0}}); }

UndirectedGraph random_undirected(Rng& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) e.emplace_back(u, v);
    return make_undirected(n, e);
}

bool naive_clique(const UndirectedGraph& g, int k) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << g.n); ++bits) {
        if (std::popcount(bits) != k) continue;
        int inside = 0;
        for (auto [u, v] : g.edges) inside += (bits >> u & 1) && (bits >> v & 1);
        if (inside == k * (k - 1) / 2) return true;
    }
    return false;
}

std::optional<Solution> solve_gadget(const Gadget& gd) { return search_connected_secluded(gd.instance); }

} // namespace

TEST(Undirected, NormalizesAndValidates) {
    UndirectedGraph g = make_undirected(3, {{2, 0}, {0, 2}, {1, 0}});
    EXPECT_EQ(g.edges, (std::vector<std::pair<int, int>>{{0, 1}, {0, 2}}));
    EXPECT_THROW(make_undirected(2, {{1, 1}}), std::invalid_argument);
    EXPECT_THROW(make_undirected(2, {{0, 2}}), std::invalid_argument);
    EXPECT_TRUE(has_clique(k3(), 3));
    EXPECT_FALSE(has_clique(make_undirected(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}), 3));
}

TEST(TsscsGadget, TriangleInput) {
    Gadget gd = reduce_clique_to_tsscs(k3(), 3);
    EXPECT_EQ(gd.instance.w, 3u);
    EXPECT_EQ(gd.instance.k, 6);
    EXPECT_EQ(gd.instance.graph.size(), 3 + 2 * 3);
    auto s = brute_force_secluded(gd.instance);
    ASSERT_TRUE(s);
    EXPECT_EQ(s->weight, 3u);
    EXPECT_EQ(s->set, gd.edge_ids);
    EXPECT_EQ(clique_from_solution(gd, s->set), (VertexSet{0, 1, 2}));
}

TEST(TsscsGadget, TriangleFreeInputHasNoSolution) {
    UndirectedGraph c5 = make_undirected(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    EXPECT_FALSE(brute_force_secluded(reduce_clique_to_tsscs(c5, 3).instance));
}

TEST(TsscsGadget, RejectsSmallK) {
    EXPECT_THROW(reduce_clique_to_tsscs(k3(), 1), std::invalid_argument);
    // w = 1 would accept a lone vertex of the input graph
    EXPECT_THROW(reduce_clique_to_tsscs(k3(), 2), std::invalid_argument);
}

TEST(TsscsGadget, RandomRoundTrip) {
    Rng rng(71);
    for (int it = 0; it < 60; ++it) {
        int n = 2 + static_cast<int>(rng() % 5);
        int k = 3 + static_cast<int>(rng() % 2);
        UndirectedGraph g = random_undirected(rng, n, 0.6);
        Gadget gd = reduce_clique_to_tsscs(g, k);
        EXPECT_EQ(gd.instance.graph.size(), n + 2 * static_cast<int>(g.edges.size()));
        auto s = brute_force_secluded(gd.instance);
        EXPECT_EQ(s.has_value(), naive_clique(g, k));
        if (s) {
            VertexSet c = clique_from_solution(gd, s->set);
            EXPECT_EQ(static_cast<int>(c.size()), k);
            EXPECT_FALSE(check_solution(gd.instance, solution_from_clique(gd, c)));
        }
    }
}

TEST(InwardStar, Premise) {
    EXPECT_TRUE(is_inward_star_subgraph(Digraph(2, {{0, 1}})));
    EXPECT_FALSE(is_inward_star_subgraph(Digraph(2, {{0, 1}, {1, 0}})));
    EXPECT_TRUE(is_inward_star_subgraph(Digraph(3)));
    EXPECT_TRUE(is_inward_star_subgraph(Digraph(4, {{0, 3}, {1, 3}, {2, 3}})));
    EXPECT_FALSE(is_inward_star_subgraph(directed_triangle()));
}

TEST(FFreeGadget, RejectsInwardStarMembers) {
    EXPECT_THROW(reduce_clique_to_ffree(k3(), 3, {Digraph(2, {{0, 1}})}), std::invalid_argument);
    EXPECT_THROW(reduce_clique_to_ffree(k3(), 3, {}), std::invalid_argument);
}

TEST(FFreeGadget, TriangleInput) {
    Gadget gd = reduce_clique_to_ffree(k3(), 3, {directed_triangle()});
    EXPECT_EQ(gd.instance.w, 4u);
    EXPECT_EQ(gd.instance.graph.size(), 3 + 3 + 1 + 5 * 3);
    VertexSet s = solution_from_clique(gd, {0, 1, 2});
    EXPECT_EQ(s.size(), 4u);
    EXPECT_FALSE(check_solution(gd.instance, s));
    EXPECT_EQ(out_neighbors(gd.instance.graph, s), (VertexSet{0, 1, 2}));
    auto best = solve_gadget(gd);
    ASSERT_TRUE(best);
    EXPECT_GE(best->weight, 4u);
}

TEST(FFreeGadget, RandomRoundTrip) {
    Rng rng(72);
    for (int it = 0; it < 40; ++it) {
        int n = 2 + static_cast<int>(rng() % 4);
        int k = 2 + static_cast<int>(rng() % 2);
        UndirectedGraph g = random_undirected(rng, n, 0.6);
        Gadget gd = reduce_clique_to_ffree(g, k, {directed_triangle()});
        EXPECT_EQ(gd.instance.graph.size(), n + static_cast<int>(g.edges.size()) + 1 + (k + 2) * 3);
        auto s = solve_gadget(gd);
        EXPECT_EQ(s.has_value(), naive_clique(g, k)) << "iteration " << it;
        if (s) {
            EXPECT_FALSE(check_ffree(induced(gd.instance.graph, s->set), {directed_triangle()}));
            EXPECT_GE(static_cast<int>(clique_from_solution(gd, s->set).size()), k);
        }
    }
}

TEST(FFreeGadget, EdgePathMode) {
    Digraph tri = directed_triangle();
    EXPECT_FALSE(fits_in_caterpillar(tri));
    EXPECT_TRUE(fits_in_caterpillar(Digraph(3, {{0, 2}, {1, 2}})));
    Rng rng(73);
    for (int it = 0; it < 30; ++it) {
        int n = 2 + static_cast<int>(rng() % 4);
        int k = 2 + static_cast<int>(rng() % 2);
        UndirectedGraph g = random_undirected(rng, n, 0.6);
        Gadget gd = reduce_clique_to_ffree(g, k, {tri}, true);
        EXPECT_EQ(gd.connector.size(), g.edges.size());
        auto s = solve_gadget(gd);
        EXPECT_EQ(s.has_value(), naive_clique(g, k)) << "iteration " << it;
    }
}

TEST(DagGadget, AgreesWithClique) {
    Rng rng(74);
    for (int it = 0; it < 30; ++it) {
        int n = 2 + static_cast<int>(rng() % 4);
        int k = 2 + static_cast<int>(rng() % 2);
        UndirectedGraph g = random_undirected(rng, n, 0.6);
        Gadget gd = reduce_clique_to_dag(g, k);
        EXPECT_EQ(gd.instance.property.kind, Property::Kind::WeaklyConnectedAcyclic);
        auto s = solve_gadget(gd);
        EXPECT_EQ(s.has_value(), naive_clique(g, k));
        if (s) EXPECT_TRUE(naive_acyclic(gd.instance.graph, s->set));
    }
}

TEST(CheckFFree, FindsInducedCopy) {
    Digraph host(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
    auto w = check_ffree(host, {Digraph(2, {{0, 1}, {1, 0}}), directed_triangle()});
    ASSERT_TRUE(w);
    EXPECT_EQ(w->member, 1);
    ASSERT_EQ(w->embedding.size(), 3u);
    for (int i = 0; i < 3; ++i) EXPECT_TRUE(host.has_edge(w->embedding[i], w->embedding[(i + 1) % 3]));
    EXPECT_FALSE(check_ffree(Digraph(3, {{0, 1}, {1, 2}}), {directed_triangle()}));
    // a triangle with a chord is not an induced directed triangle
    EXPECT_FALSE(check_ffree(Digraph(3, {{0, 1}, {1, 2}, {2, 0}, {1, 0}}), {directed_triangle()}));
}
