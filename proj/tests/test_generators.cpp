#include <doctest.h>

#include "packfold/generators.hpp"
#include "support.hpp"

using namespace packfold;

TEST_SUITE("generators") {

TEST_CASE("fixed families") {
    auto c4 = gen_cycle(4);
    CHECK(c4.embedding.blocks.at(0).outer_cycle == std::vector<Vertex>{0, 1, 2, 3});
    CHECK(gen_path(1).graph.vertex_count() == 1);
    CHECK(!structural_report(gen_cycle(3).graph).triangle_free);
    CHECK_THROWS(gen_cycle(2));
    CHECK_THROWS(gen_path(0));

    auto f7 = gen_fig7();
    CHECK(f7.graph.vertex_count() == 14);
    CHECK(f7.graph.edge_count() == 19);
    CHECK(f7.graph.max_degree() == 3);
    CHECK(f7.graph.has_edge(0, 7));

    auto g25 = gen_g25();
    CHECK(g25.graph.vertex_count() == 30);
    CHECK(g25.graph.edge_count() == 35);
    auto r25 = structural_report(g25.graph);
    CHECK(r25.triangle_free);
    CHECK(r25.max_degree == 3);

    auto tri = gen_triangle_gadget();
    CHECK(tri.graph.vertex_count() == 12);
    CHECK(tri.graph.edge_count() == 15);
    CHECK(tri.graph.max_degree() == 3);

    for (const auto* gg : {&f7, &g25, &tri}) CHECK(recognize_outerplanar(gg->graph).embedding.has_value());
}

TEST_CASE("degree-k trees") {
    auto t = gen_kary_tree(3);
    CHECK(t.graph.vertex_count() == 94);
    auto r = structural_report(t.graph);
    CHECK(r.max_degree == 3);
    CHECK(r.bipartite);
    CHECK(!r.girth);
    for (Vertex v = 0; v < t.graph.vertex_count(); ++v) CHECK((t.graph.degree(v) == 3 || t.graph.degree(v) == 1));
    CHECK(gen_kary_tree(4, 1).graph.vertex_count() == 5);
    CHECK_THROWS(gen_kary_tree(2));
}

TEST_CASE("G_k family") {
    auto g1 = gen_prop5_family(4, 1);
    CHECK(g1.graph.vertex_count() == 4);
    CHECK(g1.graph.edge_count() == 4);

    auto g2 = gen_prop5_family(4, 2);
    CHECK(g2.graph.vertex_count() == 8);
    CHECK(g2.graph.edge_count() == 10);

    for (int k : {4, 6, 8})
        for (int i = 1; i <= 3; ++i) {
            auto gg = gen_prop5_family(k, i);
            auto r = structural_report(gg.graph);
            CHECK(r.two_connected);
            CHECK(r.bipartite);
            CHECK(r.max_degree <= 3);
            CHECK(validate_embedding(gg.graph, gg.embedding).valid);
            CHECK(recognize_outerplanar(gg.graph).embedding.has_value());
        }
    CHECK_THROWS(gen_prop5_family(5, 2));
    CHECK_THROWS(gen_prop5_family(4, 0));
}

TEST_CASE("constraint parsing") {
    auto c = Constraints::parse("bipartite,subcubic,maxdeg=4");
    CHECK(c.bipartite);
    CHECK(c.subcubic);
    CHECK(c.max_degree == 4);
    CHECK(c.degree_cap() == 3);
    CHECK(c.to_string() == "bipartite,subcubic,maxdeg=4");
    CHECK_THROWS(Constraints::parse("planar"));
}

TEST_CASE("random instances honor their constraints") {
    const std::vector<std::string> specs{"",
                                         "subcubic",
                                         "bipartite",
                                         "triangle_free,subcubic",
                                         "bipartite,subcubic,two_connected",
                                         "triangle_free,two_connected",
                                         "bipartite,maxdeg=4",
                                         "two_connected,maxdeg=3"};
    for (const auto& spec : specs)
        for (std::uint64_t seed = 0; seed < 60; ++seed) {
            auto c = Constraints::parse(spec);
            int n = 4 + static_cast<int>(seed * 7 % 120);
            if (c.bipartite && c.two_connected && n % 2) ++n;
            auto gg = gen_random_outerplanar(n, seed, c);
            const auto& g = gg.graph;
            CAPTURE(spec);
            CAPTURE(seed);
            CHECK(g.vertex_count() == n);
            CHECK(validate_embedding(g, gg.embedding).valid);
            auto r = structural_report(g);
            if (c.bipartite) CHECK(r.bipartite);
            if (c.triangle_free) CHECK(r.triangle_free);
            if (c.two_connected) CHECK(r.two_connected);
            CHECK(r.max_degree <= c.degree_cap());
            auto again = gen_random_outerplanar(n, seed, c);
            CHECK(again.graph.edges() == g.edges());
        }
}

TEST_CASE("small two-connected instances and bad constraints") {
    Constraints c;
    c.two_connected = true;
    c.triangle_free = true;
    for (std::uint64_t seed = 0; seed < 20; ++seed) CHECK(gen_random_outerplanar(4, seed, c).graph.edge_count() == 4);
    c.bipartite = true;
    CHECK_THROWS(gen_random_outerplanar(7, 1, c));
    CHECK_THROWS(gen_random_outerplanar(0, 1, {}));
}

}  // TEST_SUITE
