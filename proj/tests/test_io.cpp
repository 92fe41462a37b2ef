#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "packfold/colorers.hpp"
#include "packfold/fuzz.hpp"
#include "packfold/generators.hpp"
#include "packfold/io.hpp"

using namespace packfold;

namespace {

int count(const std::string& text, const std::string& needle) {
    int c = 0;
    for (size_t p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1)) ++c;
    return c;
}

std::string temp_dir(const std::string& name) {
    auto d = std::filesystem::temp_directory_path() / ("packfold-test-" + name);
    std::filesystem::remove_all(d);
    std::filesystem::create_directories(d);
    return d.string();
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("graph and embedding round trip") {
    auto gg = gen_random_outerplanar(30, 4, Constraints::parse("subcubic"));
    Json j = graph_to_json(gg.graph, &gg.embedding);
    Json back = Json::parse(dump(j));
    Graph g = graph_from_json(back);
    CHECK(g.edges() == gg.graph.edges());
    auto emb = embedding_from_json(back);
    REQUIRE(emb);
    CHECK(dump(graph_to_json(g, &*emb)) == dump(j));
    CHECK(!embedding_from_json(graph_to_json(g)).has_value());
}

TEST_CASE("coloring round trip") {
    auto gg = gen_cycle(8);
    auto c = color_theorem1(gg.graph).coloring;
    Json j = coloring_to_json(c);
    auto back = coloring_from_json(Json::parse(dump(j)));
    CHECK(back.colors == c.colors);
    CHECK(back.big == c.big);
    CHECK(back.instance == c.instance);
    CHECK(dump(coloring_to_json(back)) == dump(j));
    PackingColoring plain{PackingInstance({1, 2}), {1, 2}, std::nullopt};
    CHECK(!coloring_to_json(plain).contains("big"));
}

TEST_CASE("malformed documents") {
    CHECK_THROWS(graph_from_json(Json::parse(R"({"edges": []})")));
    CHECK_THROWS(graph_from_json(Json::parse(R"({"n": 2, "edges": [[0, 1, 2]]})")));
    CHECK_THROWS(graph_from_json(Json::parse(R"({"n": 2, "edges": [[0, 0]]})")));
    CHECK_THROWS(coloring_from_json(Json::parse(R"({"colors": [1]})")));
    CHECK_THROWS(coloring_from_json(Json::parse(R"({"S": [2, 1], "colors": [1]})")));
    auto dir = temp_dir("malformed");
    {
        std::ofstream(dir + "/bad.json") << "{not json";
    }
    CHECK_THROWS_AS(read_json_file(dir + "/bad.json"), std::invalid_argument);
    CHECK_THROWS(read_json_file(dir + "/missing.json"));
}

TEST_CASE("outcome JSON") {
    SolveOutcome o;
    o.status = SolveStatus::Infeasible;
    o.stats.nodes = 12;
    Json j = outcome_to_json(o);
    CHECK(j["status"] == "INFEASIBLE");
    CHECK(j["witness"].is_null());
    CHECK(j["stats"]["nodes"] == 12);
    CHECK(j["version"] == kVersion);
}

TEST_CASE("DOT export") {
    Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    PackingColoring c{PackingInstance({1, 2, 3}), {1, 2, 1, 3}, std::nullopt};
    auto dot = to_dot(c4, &c);
    CHECK(count(dot, "shape=") == 4);
    CHECK(count(dot, " -- ") == 4);
    CHECK(count(dot, "label=\"1\"") == 2);
    CHECK(count(dot, "label=\"2\"") == 1);
    CHECK(count(dot, "label=\"3\"") == 1);

    auto f7 = to_dot(gen_fig7().graph);
    CHECK(count(f7, "shape=") == 14);
    CHECK(count(f7, " -- ") == 19);
    CHECK(f7 == to_dot(gen_fig7().graph));

    auto c8 = gen_cycle(8);
    auto col = color_theorem1(c8.graph).coloring;
    CHECK(count(to_dot(c8.graph, &col), "shape=box") == 1);
}

}  // TEST_SUITE

TEST_SUITE("fuzz") {

TEST_CASE("clean runs") {
    FuzzOptions o;
    o.count = 40;
    o.n_max = 60;
    o.threads = 2;
    for (std::string m : {"thm1", "133", "1222", "112"}) {
        o.method = m;
        auto r = run_fuzz(o);
        CAPTURE(m);
        CHECK(r.ok());
        CHECK(r.valid == 40);
        CHECK(r.summary() == "40/40 valid");
    }
    o.method = "7";
    CHECK_THROWS_AS(run_fuzz(o), std::invalid_argument);
}

TEST_CASE("precondition rejections are counted separately") {
    FuzzOptions o;
    o.method = "1222";
    o.count = 60;
    o.n_max = 40;
    o.constraints = Constraints::parse("subcubic");
    auto r = run_fuzz(o);
    CHECK(r.ok());
    CHECK(r.rejected > 0);
    CHECK(r.valid + r.rejected == 60);
}

TEST_CASE("an injected fault fails and leaves reproducers") {
    FuzzOptions o;
    o.method = "thm1";
    o.count = 5;
    o.n_max = 20;
    o.inject_fault = true;
    o.repro_dir = temp_dir("repro");
    auto r = run_fuzz(o);
    CHECK(!r.ok());
    CHECK(r.failed == 5);
    REQUIRE(r.reproducers.size() == 5);
    auto doc = read_json_file(r.reproducers[0]);
    CHECK(graph_from_json(doc).edges() == fuzz_instance(o, 0).graph.edges());
}

TEST_CASE("results do not depend on the thread count") {
    FuzzOptions o;
    o.method = "112";
    o.count = 30;
    o.threads = 1;
    auto a = run_fuzz(o);
    o.threads = 4;
    auto b = run_fuzz(o);
    CHECK(a.summary() == b.summary());
}

}  // TEST_SUITE
