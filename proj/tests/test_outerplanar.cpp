#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "packfold/generators.hpp"
#include "packfold/outerplanar.hpp"
#include "support.hpp"

using namespace packfold;

namespace {

// G is outerplanar iff G plus a vertex joined to everything is planar.
bool apex_planar(const Graph& g) {
    using BG = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    const int n = g.vertex_count();
    BG b(n + 1);
    for (auto [u, v] : g.edges()) boost::add_edge(u, v, b);
    for (int v = 0; v < n; ++v) boost::add_edge(v, n, b);
    return boost::boyer_myrvold_planarity_test(b);
}

Graph k4() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }
Graph k23() { return Graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}); }

OuterplanarEmbedding c6_with(std::vector<std::pair<Vertex, Vertex>> chords) {
    return {{{{0, 1, 2, 3, 4, 5}, std::move(chords)}}};
}

Graph c6_graph(const std::vector<std::pair<Vertex, Vertex>>& chords) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 0; i < 6; ++i) e.emplace_back(i, (i + 1) % 6);
    for (auto c : chords)
        if (std::find(e.begin(), e.end(), c) == e.end()) e.push_back(c);
    return Graph(6, e);
}

// The graph drawn for the L_G construction, vertices numbered left to
// right, bottom before top within a column.
Graph fig6() {
    return Graph(14, {{0, 1}, {0, 2}, {3, 1}, {3, 2}, {0, 3}, {3, 4}, {4, 7}, {7, 10}, {10, 11}, {11, 12},
                      {11, 13}, {4, 5}, {4, 6}, {7, 5}, {7, 6}, {7, 8}, {7, 9}, {10, 8}, {10, 9}});
}

bool is_tree(int nodes, const std::vector<std::vector<int>>& adj) {
    int edges = 0;
    for (const auto& a : adj) edges += static_cast<int>(a.size());
    if (edges / 2 != nodes - 1) return false;
    std::vector<bool> seen(nodes, false);
    std::vector<int> st{0};
    seen[0] = true;
    int count = 1;
    while (!st.empty()) {
        int x = st.back();
        st.pop_back();
        for (int y : adj[x])
            if (!seen[y]) {
                seen[y] = true;
                ++count;
                st.push_back(y);
            }
    }
    return count == nodes;
}

}  // namespace

TEST_SUITE("outerplanar") {

TEST_CASE("validate_embedding examples") {
    CHECK(validate_embedding(c6_graph({{0, 3}}), c6_with({{0, 3}})).valid);

    auto crossing = validate_embedding(c6_graph({{0, 3}, {1, 4}}), c6_with({{0, 3}, {1, 4}}));
    CHECK(!crossing.valid);
    CHECK(crossing.defect.find("cross") != std::string::npos);

    auto outer = validate_embedding(c6_graph({}), c6_with({{0, 1}}));
    CHECK(!outer.valid);

    // Missing chord edge, and an embedding that leaves an edge uncovered.
    CHECK(!validate_embedding(c6_graph({}), c6_with({{0, 3}})).valid);
    CHECK(!validate_embedding(c6_graph({{0, 3}}), c6_with({})).valid);
}

TEST_CASE("recognition examples") {
    auto c5 = recognize_outerplanar(testing_support::cycle(5));
    REQUIRE(c5.embedding);
    REQUIRE(c5.embedding->blocks.size() == 1);
    CHECK(c5.embedding->blocks[0].outer_cycle.size() == 5);
    CHECK(c5.embedding->blocks[0].chords.empty());

    CHECK(!recognize_outerplanar(k4()).embedding);
    CHECK(!recognize_outerplanar(k4()).obstruction.empty());
    CHECK(!recognize_outerplanar(k23()).embedding);
    CHECK_THROWS_AS(embedding_or_throw(k23()), std::invalid_argument);

    // The diamond (K_4 minus an edge) is outerplanar.
    Graph diamond(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    auto d = recognize_outerplanar(diamond);
    REQUIRE(d.embedding);
    CHECK(validate_embedding(diamond, *d.embedding).valid);
    CHECK(d.embedding->blocks[0].chords == std::vector<std::pair<Vertex, Vertex>>{{1, 2}});
}

TEST_CASE("recognition agrees with the apex planarity oracle") {
    std::mt19937_64 rng(77);
    int accepted = 0, rejected = 0;
    for (int t = 0; t < 1500; ++t) {
        int n = std::uniform_int_distribution<int>(1, 11)(rng);
        double p = std::uniform_real_distribution<double>(0.1, 0.6)(rng);
        Graph g(n, testing_support::random_edges(n, p, rng));
        auto r = recognize_outerplanar(g);
        bool oracle = apex_planar(g);
        CHECK(r.embedding.has_value() == oracle);
        if (r.embedding) {
            CHECK(validate_embedding(g, *r.embedding).valid);
            ++accepted;
        } else {
            ++rejected;
        }
    }
    CHECK(accepted > 200);
    CHECK(rejected > 200);
}

TEST_CASE("recognition accepts generator output") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Constraints c;
        c.two_connected = seed % 3 == 0;
        c.subcubic = seed % 2 == 0;
        auto gg = gen_random_outerplanar(40, seed, c);
        auto r = recognize_outerplanar(gg.graph);
        REQUIRE(r.embedding);
        CHECK(validate_embedding(gg.graph, *r.embedding).valid);
        CHECK(validate_embedding(gg.graph, gg.embedding).valid);
    }
}

TEST_CASE("faces and T_G of C_6 plus a chord") {
    auto g = c6_graph({{0, 3}});
    auto dt = root_and_order(build_dual_trees(g, c6_with({{0, 3}})));
    REQUIRE(dt.face_count() == 2);
    std::set<std::set<Vertex>> faces;
    for (const auto& f : dt.faces) faces.insert(std::set<Vertex>(f.cycle.begin(), f.cycle.end()));
    CHECK(faces == std::set<std::set<Vertex>>{{0, 1, 2, 3}, {3, 4, 5, 0}});
    CHECK(dt.t_adj[0] == std::vector<int>{1});
    auto [a, b] = shared_edge(dt, 0, 1);
    CHECK(std::set<Vertex>{a, b} == std::set<Vertex>{0, 3});
    CHECK(dt.d_vertices.empty());
}

TEST_CASE("shared_edge on a ladder of three squares") {
    // Outer cycle 0-1-2-3-7-6-5-4 with rungs 1-5 and 2-6.
    Graph g(8, {{0, 1}, {1, 2}, {2, 3}, {3, 7}, {7, 6}, {6, 5}, {5, 4}, {4, 0}, {1, 5}, {2, 6}});
    OuterplanarEmbedding emb{{{{0, 1, 2, 3, 7, 6, 5, 4}, {{1, 5}, {2, 6}}}}};
    auto dt = root_and_order(build_dual_trees(g, emb));
    REQUIRE(dt.face_count() == 3);
    auto face_with = [&](Vertex v) {
        for (int f = 0; f < 3; ++f)
            if (std::set<Vertex>(dt.faces[f].cycle.begin(), dt.faces[f].cycle.end()) ==
                std::set<Vertex>{v, v + 1, v + 4, v + 5})
                return f;
        return -1;
    };
    int left = face_with(0), mid = face_with(1), right = face_with(2);
    REQUIRE(left >= 0);
    REQUIRE(mid >= 0);
    REQUIRE(right >= 0);
    auto [a, b] = shared_edge(dt, mid, right);
    CHECK(std::set<Vertex>{a, b} == std::set<Vertex>{2, 6});
    CHECK_THROWS_AS(shared_edge(dt, left, right), std::invalid_argument);
    CHECK(dt.root == mid);
    CHECK(dt.depth[left] == 1);
}

TEST_CASE("rooting examples") {
    auto single = root_forest({{}});
    CHECK(single.roots == std::vector<int>{0});
    CHECK(single.depth[0] == 0);

    auto path = root_forest({{1}, {0, 2}, {1}});
    CHECK(path.roots == std::vector<int>{1});
    CHECK(path.order == std::vector<int>{1, 0, 2});

    std::vector<std::vector<int>> star{{1, 2, 3, 4}, {0}, {0}, {0}, {0}};
    auto s = root_forest(star);
    CHECK(s.roots == std::vector<int>{0});
    for (int leaf = 1; leaf <= 4; ++leaf) CHECK(s.depth[leaf] == 1);

    // Even path: two centers, the lower index wins.
    auto p4 = root_forest({{1}, {0, 2}, {1, 3}, {2}});
    CHECK(p4.roots == std::vector<int>{1});

    CHECK_THROWS(root_and_order(DualTrees{}));
}

TEST_CASE("a tree input gives no faces and L_G equal to the tree") {
    auto gg = gen_kary_tree(3, 2);
    auto dt = build_dual_trees(gg.graph, gg.embedding);
    CHECK(dt.face_count() == 0);
    CHECK(static_cast<int>(dt.d_vertices.size()) == gg.graph.vertex_count());
    for (Vertex v = 0; v < gg.graph.vertex_count(); ++v) {
        std::vector<int> expect;
        for (Vertex w : gg.graph.neighbors(v)) expect.push_back(dt.node_of_vertex[w]);
        std::sort(expect.begin(), expect.end());
        CHECK(dt.l_adj[dt.node_of_vertex[v]] == expect);
    }
}

TEST_CASE("L_G of the worked example") {
    auto g = fig6();
    CHECK(g.edge_count() == 19);
    auto dt = build_dual_trees(g, embedding_or_throw(g));
    CHECK(dt.face_count() == 6);
    CHECK(dt.d_vertices == std::vector<Vertex>{11, 12, 13});
    CHECK(dt.l_edges.size() == 8);
    CHECK(is_tree(dt.l_node_count(), dt.l_adj));
    std::map<LinkKind, int> kinds;
    for (const auto& e : dt.l_edges) ++kinds[e.kind];
    CHECK(kinds[LinkKind::SharedEdge] == 3);
    CHECK(kinds[LinkKind::Bridge] == 2);
    CHECK(kinds[LinkKind::CutVertex] == 1);
    CHECK(kinds[LinkKind::DEdge] == 2);
}

TEST_CASE("Euler and tree counts on generated instances") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        Constraints c;
        c.subcubic = seed % 2 == 1;
        c.two_connected = seed % 5 == 0;
        std::mt19937_64 rng(seed);
        auto gg = gen_random_outerplanar(std::uniform_int_distribution<int>(3, 80)(rng), seed, c);
        const auto& g = gg.graph;
        auto dt = build_dual_trees(g, gg.embedding);
        int expect_faces = 0;
        for (const auto& b : gg.embedding.blocks) expect_faces += static_cast<int>(b.chords.size()) + 1;
        CHECK(dt.face_count() == expect_faces);
        int t_edges = 0;
        for (const auto& a : dt.t_adj) t_edges += static_cast<int>(a.size());
        CHECK(t_edges / 2 == dt.face_count() - static_cast<int>(gg.embedding.blocks.size()));
        CHECK(is_tree(dt.l_node_count(), dt.l_adj));
        CHECK(dt.l_edges.size() + 1 == static_cast<size_t>(dt.l_node_count()));
        for (const auto& f : dt.faces) {
            const int L = static_cast<int>(f.cycle.size());
            for (int i = 0; i < L; ++i) {
                CHECK(g.has_edge(f.cycle[i], f.cycle[(i + 1) % L]));
                for (int j = i + 2; j < L; ++j)
                    if (!(i == 0 && j == L - 1)) CHECK(!g.has_edge(f.cycle[i], f.cycle[j]));
            }
        }
    }
}

}  // TEST_SUITE
