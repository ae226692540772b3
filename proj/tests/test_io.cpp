#include <gtest/gtest.h>

#include "secluded/gadgets.hpp"
#include "secluded/generate.hpp"
#include "secluded/io.hpp"
#include "support.hpp"

using namespace secluded;
using namespace secluded::testing;

namespace {

InstanceFile parse(const std::string& text) { return parse_instance(text); }

InstanceFile wrap(const Digraph& g, const std::string& kind, const std::string& prop, int k, Weight w) {
    InstanceFile f = parse("p secluded 0 0 " + kind + " " + prop + " " + std::to_string(k) + " " + std::to_string(w) + "\n");
    f.graph = g;
    return f;
}

} // namespace

TEST(Parse, MinimalFile) {
    InstanceFile f = parse("p secluded 1 0 total scc 0 1\n");
    EXPECT_EQ(f.graph.size(), 1);
    EXPECT_EQ(f.graph.weight(0), 1u);
    EXPECT_FALSE(f.boundaried());
    SecludedInstance inst = to_secluded(f);
    EXPECT_EQ(inst.k, 0);
    EXPECT_EQ(inst.w, 1u);
    EXPECT_EQ(inst.property.kind, Property::Kind::StronglyConnected);
}

TEST(Parse, AllSections) {
    InstanceFile f = parse("c a comment\n"
                           "p secluded 3 2 out alpha:2 1 4\n"
                           "v 0 5\n"
                           "e 0 1\n"
                           "e 1 2\n"
                           "i 0\n"
                           "o 2\n"
                           "b 1\n"
                           "t 1\n");
    EXPECT_EQ(f.kind, Neighborhood::Out);
    EXPECT_EQ(f.property.alpha, 2);
    EXPECT_EQ(f.graph.weight(0), 5u);
    EXPECT_EQ(f.include, VertexSet{0});
    EXPECT_EQ(f.exclude, VertexSet{2});
    EXPECT_EQ(f.boundary, VertexSet{1});
    EXPECT_EQ(f.terminals, VertexSet{1});
    EXPECT_TRUE(f.boundaried());
}

TEST(Parse, ErrorsCarryLineNumbers) {
    auto line_of = [](const std::string& text) {
        try {
            parse_instance(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return -1;
    };
    EXPECT_EQ(line_of("p secluded 2 1 total scc 0 0\ne 0 5\n"), 2);
    EXPECT_EQ(line_of("p secluded 2 0 sideways scc 0 0\n"), 1);
    EXPECT_EQ(line_of("p secluded 2 0 total scc 0 0\nv 0\n"), 2);
    EXPECT_EQ(line_of("p secluded 2 0 total scc 0 0\nx 0 1\n"), 2);
    EXPECT_EQ(line_of("p secluded 2 0 total nonsense 0 0\n"), 1);
    // end-of-input errors point at the last line read
    EXPECT_EQ(line_of("p secluded 2 2 total scc 0 0\ne 0 1\n"), 2);
    EXPECT_EQ(line_of("e 0 1\n"), 1);
    EXPECT_EQ(line_of("p secluded 2 1 total scc 0 0\ne 1 1\n"), 2);
    try {
        parse_instance("p secluded 2 1 total scc 0 0\ne 0 5\n");
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    }
}

TEST(Serialize, RoundTripOnGenerators) {
    std::vector<InstanceFile> files = {
        wrap(gnp(7, 0.3, 1, 5), "total", "scc", 2, 0),
        wrap(random_tournament(6, 2, 3), "out", "tournament", 1, 0),
        wrap(planted_clique(8, 4, 2, 3), "total", "clique", 2, 3),
        wrap(chained_cliques(5, 2, 4), "in", "alpha:2", 1, 1),
    };
    for (const auto& f : files) {
        std::string text = serialize_instance(f);
        InstanceFile g = parse(text);
        EXPECT_EQ(g.graph, f.graph);
        EXPECT_EQ(serialize_instance(g), text);
    }
}

TEST(Serialize, RandomRoundTripIsByteIdentical) {
    Rng rng(81);
    for (int it = 0; it < 100; ++it) {
        int n = 1 + static_cast<int>(rng() % 10);
        InstanceFile f = wrap(random_digraph(rng, n, 0.3, 9), "total", "scc", 1, 0);
        if (it % 2) {
            f.include = subset_of(rng() % (1u << n), n);
            f.has_boundary = true;
            f.boundary = subset_of(rng() % (1u << n), n);
        }
        std::string text = serialize_instance(f);
        EXPECT_EQ(serialize_instance(parse(text)), text);
    }
}

TEST(Serialize, EmptyBoundaryIsExplicit) {
    InstanceFile f = parse("p secluded 2 0 total scc 0 0\nb -\n");
    EXPECT_TRUE(f.has_boundary);
    EXPECT_TRUE(f.boundary.empty());
    std::string text = serialize_instance(f);
    EXPECT_NE(text.find("b -"), std::string::npos);
    EXPECT_TRUE(to_boundaried(parse(text)).boundary.empty());
}

TEST(Convert, BoundariedDefaultsToFullBoundary) {
    InstanceFile f = parse("p secluded 3 0 total scc 1 0\ni 0\n");
    BoundariedInstance b = to_boundaried(f);
    EXPECT_EQ(b.boundary, (VertexSet{0, 1, 2}));
    EXPECT_THROW(to_secluded(f), std::invalid_argument);
    EXPECT_THROW(to_boundaried(parse("p secluded 3 0 out scc 1 0\ni 0\n")), std::invalid_argument);
}

TEST(Convert, GadgetReparsesIsomorphic) {
    Gadget gd = reduce_clique_to_tsscs(make_undirected(3, {{0, 1}, {1, 2}, {0, 2}}), 3);
    std::string text = serialize_instance(from_secluded(gd.instance));
    SecludedInstance back = to_secluded(parse(text));
    EXPECT_EQ(back.graph, gd.instance.graph);
    EXPECT_EQ(back.k, gd.instance.k);
    EXPECT_EQ(back.w, gd.instance.w);
    EXPECT_EQ(back.kind, gd.instance.kind);
}

TEST(Family, RoundTripAndLoader) {
    std::vector<Digraph> fam = {Digraph(3, {{0, 1}, {1, 2}, {2, 0}}), Digraph(2, {{0, 1}, {1, 0}})};
    std::string text = serialize_family(fam);
    EXPECT_EQ(parse_family(text), fam);
    InstanceFile f = parse_instance("p secluded 2 0 out ffree:tri.fam 1 0\n", [&](const std::string& ref) {
        EXPECT_EQ(ref, "tri.fam");
        return fam;
    });
    EXPECT_EQ(f.family_ref, "tri.fam");
    EXPECT_EQ(to_secluded(f).property.family.size(), 2u);
    EXPECT_NE(serialize_instance(f).find("ffree:tri.fam"), std::string::npos);
    EXPECT_THROW(parse_instance("p secluded 2 0 out ffree:tri.fam 1 0\n"), std::exception);
}

TEST(Undirected, ParsesEdgeFormat) {
    auto [n, edges] = parse_undirected("c triangle\np edge 3 3\ne 0 1\ne 1 2\ne 0 2\n");
    EXPECT_EQ(n, 3);
    EXPECT_EQ(edges.size(), 3u);
    EXPECT_THROW(parse_undirected("p edge 2 1\ne 0 3\n"), ParseError);
}

TEST(Kinds, Names) {
    for (auto k : {Neighborhood::In, Neighborhood::Out, Neighborhood::Total}) EXPECT_EQ(parse_kind(kind_name(k)), k);
    EXPECT_THROW(parse_kind("both"), std::invalid_argument);
}
