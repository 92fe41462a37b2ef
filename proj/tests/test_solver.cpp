#include <doctest.h>

#include <algorithm>
#include <map>

#include "packfold/generators.hpp"
#include "packfold/solver.hpp"
#include "support.hpp"

using namespace packfold;

namespace {

Graph star(int leaves) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph(leaves + 1, e);
}

PackingInstance random_instance(std::mt19937_64& rng, int k) {
    std::vector<int> s(k);
    for (auto& x : s) x = std::uniform_int_distribution<int>(1, 4)(rng);
    std::sort(s.begin(), s.end());
    return PackingInstance(s);
}

// Smallest k with a (1,2,...,k) coloring, by trying every coloring.
int brute_chi(const Graph& g) {
    for (int k = 1;; ++k) {
        std::vector<int> s(k);
        for (int i = 0; i < k; ++i) s[i] = i + 1;
        if (naive_enumerate(g, PackingInstance(s)).status == SolveStatus::Feasible) return k;
    }
}

}  // namespace

TEST_SUITE("solver") {

TEST_CASE("small examples") {
    auto c5 = solve(testing_support::cycle(5), PackingInstance({1, 2, 2, 2}));
    REQUIRE(c5.status == SolveStatus::Feasible);
    REQUIRE(c5.witness);
    CHECK(verify_packing(testing_support::cycle(5), *c5.witness).valid);
    const auto& col = c5.witness->colors;
    CHECK(std::count(col.begin(), col.end(), 1) == 2);
    for (Color a = 2; a <= 4; ++a) CHECK(std::count(col.begin(), col.end(), a) == 1);

    CHECK(solve(Graph(2, {{0, 1}}), PackingInstance({1})).status == SolveStatus::Infeasible);
    CHECK(solve(Graph(0, {}), PackingInstance({1})).status == SolveStatus::Feasible);
    CHECK(naive_enumerate(Graph(0, {}), PackingInstance({1})).status == SolveStatus::Feasible);
    CHECK(naive_enumerate(Graph(2, {{0, 1}}), PackingInstance({1})).status == SolveStatus::Infeasible);
    CHECK_THROWS_AS(naive_enumerate(testing_support::cycle(20), PackingInstance({1, 2, 3})), std::invalid_argument);
}

TEST_CASE("chi_rho examples") {
    auto k1 = chi_rho(Graph(1, {}), 5);
    CHECK(k1.status == SolveStatus::Feasible);
    CHECK(k1.value == 1);
    CHECK(chi_rho(gen_path(4).graph, 5).value == 3);
    CHECK(brute_chi(gen_path(4).graph) == 3);
    for (int n = 3; n <= 12; ++n) {
        auto g = testing_support::cycle(n);
        CAPTURE(n);
        const int expect = n == 3 || n % 4 == 0 ? 3 : 4;
        CHECK(chi_rho(g, 6).value == expect);
        if (n <= 9) CHECK(brute_chi(g) == expect);
    }
    auto capped = chi_rho(testing_support::cycle(5), 3);
    CHECK(capped.status == SolveStatus::Infeasible);
    CHECK(!capped.value);
}

TEST_CASE("solve agrees with enumeration on small random graphs") {
    std::mt19937_64 rng(2024);
    int feasible = 0;
    for (int t = 0; t < 500; ++t) {
        int n = std::uniform_int_distribution<int>(0, 8)(rng);
        int k = std::uniform_int_distribution<int>(1, 3)(rng);
        Graph g(n, testing_support::random_edges(n, 0.3, rng));
        auto s = random_instance(rng, k);
        auto a = solve(g, s);
        auto b = naive_enumerate(g, s);
        CAPTURE(s.to_string());
        CHECK(a.status == b.status);
        if (a.status == SolveStatus::Feasible) {
            ++feasible;
            CHECK(testing_support::packing_ok(g, s.values(), a.witness->colors));
        }
    }
    CHECK(feasible > 50);
}

TEST_CASE("domination is monotone") {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 100; ++t) {
        auto gg = gen_random_outerplanar(14, t, {});
        auto s = random_instance(rng, 4);
        std::vector<int> looser = s.values();
        for (auto& x : looser) x = std::max(1, x - std::uniform_int_distribution<int>(0, 1)(rng));
        std::sort(looser.begin(), looser.end());
        if (solve(gg.graph, s).status == SolveStatus::Feasible)
            CHECK(solve(gg.graph, PackingInstance(looser)).status == SolveStatus::Feasible);
    }
}

TEST_CASE("partial solving and budgets") {
    auto c8 = testing_support::cycle(8);
    std::vector<Color> fixed{2, 0, 0, 0, 0, 0, 0, 0};
    auto r = solve_partial(c8, PackingInstance({1, 2, 3}), fixed, {1, 2, 3, 4, 5, 6, 7});
    REQUIRE(r.status == SolveStatus::Feasible);
    CHECK(r.witness->colors[0] == 2);
    CHECK(verify_packing(c8, *r.witness).valid);
    // C_6 needs four colors, so no extension exists.
    auto c6 = testing_support::cycle(6);
    CHECK(solve_partial(c6, PackingInstance({1, 2, 3}), {1, 0, 0, 0, 0, 0}, {1, 2, 3, 4, 5}).status ==
          SolveStatus::Infeasible);

    Budget tiny;
    tiny.nodes = 5;
    CHECK(solve(gen_g25().graph, PackingInstance({1, 2, 2, 3}), tiny).status == SolveStatus::Timeout);

    CHECK(parse_duration("60s") == 60);
    CHECK(parse_duration("2m") == 120);
    CHECK(parse_duration("250ms") == doctest::Approx(0.25));
    CHECK(parse_duration("5") == 5);
    CHECK_THROWS(parse_duration("soon"));
    CHECK_THROWS(parse_duration("-1s"));
}

TEST_CASE("the gadgets are infeasible") {
    CHECK(solve(gen_fig7().graph, PackingInstance({1, 2, 2, 2})).status == SolveStatus::Infeasible);
    CHECK(solve(gen_g25().graph, PackingInstance({1, 2, 2, 3})).status == SolveStatus::Infeasible);
    CHECK(solve(gen_triangle_gadget().graph, PackingInstance({1, 1, 2})).status == SolveStatus::Infeasible);
    // One step looser and they become colorable.
    CHECK(solve(gen_g25().graph, PackingInstance({1, 2, 2, 2})).status == SolveStatus::Feasible);
    CHECK(solve(gen_triangle_gadget().graph, PackingInstance({1, 1, 1})).status == SolveStatus::Feasible);
}

TEST_CASE("degree-k tree: the forcing chain") {
    const PackingInstance s({1, 3, 3, 4});
    // Star K_{1,3} with (1,3,3,3) is fine.
    CHECK(solve(star(3), PackingInstance({1, 3, 3, 3})).status == SolveStatus::Feasible);
    // Without color 1, the four vertices of {r} + N(r) are pairwise within
    // distance 2 and only three colors remain, so some x there is colored 1.
    CHECK(solve(star(3), PackingInstance({3, 3, 4})).status == SolveStatus::Infeasible);
    // With c(x) = 1, the radius-3 ball around x cannot be completed.
    auto tree = gen_kary_tree(3).graph;
    std::vector<Vertex> closed{0};
    for (Vertex y : tree.neighbors(0)) closed.push_back(y);
    BallSearch bs(tree);
    for (Vertex x : closed) {
        std::vector<Color> fixed(tree.vertex_count(), 0);
        fixed[x] = 1;
        std::vector<Vertex> region;
        for (auto [y, d] : bs.run(x, 3))
            if (y != x) region.push_back(y);
        CHECK(solve_partial(tree, s, fixed, region).status == SolveStatus::Infeasible);
    }
}

TEST_CASE("degree-k tree of depth 5 is infeasible") {
    auto tree = gen_kary_tree(3).graph;
    CHECK(tree.vertex_count() == 94);
    CHECK(solve(tree, PackingInstance({1, 3, 3, 4})).status == SolveStatus::Infeasible);
    CHECK(solve(tree, PackingInstance({1, 3, 3, 3})).status == SolveStatus::Feasible);
}

}  // TEST_SUITE
