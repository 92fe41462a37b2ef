#include "packfold/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace packfold {

Json graph_to_json(const Graph& g, const OuterplanarEmbedding* emb) {
    Json j;
    j["n"] = g.vertex_count();
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    if (emb) {
        Json blocks = Json::array();
        for (const auto& b : emb->blocks) {
            Json chords = Json::array();
            for (auto [x, y] : b.chords) chords.push_back({x, y});
            blocks.push_back({{"outer_cycle", b.outer_cycle}, {"chords", std::move(chords)}});
        }
        j["blocks"] = std::move(blocks);
    }
    return j;
}

Graph graph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("graph JSON needs \"n\" and \"edges\"");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be a pair");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph(j.at("n").get<int>(), edges);
}

std::optional<OuterplanarEmbedding> embedding_from_json(const Json& j) {
    if (!j.contains("blocks")) return std::nullopt;
    OuterplanarEmbedding emb;
    for (const auto& b : j.at("blocks")) {
        EmbeddingBlock blk;
        blk.outer_cycle = b.at("outer_cycle").get<std::vector<Vertex>>();
        if (b.contains("chords"))
            for (const auto& c : b.at("chords")) {
                if (!c.is_array() || c.size() != 2) throw std::invalid_argument("chord must be a pair");
                blk.chords.emplace_back(c[0].get<int>(), c[1].get<int>());
            }
        emb.blocks.push_back(std::move(blk));
    }
    return emb;
}

Json coloring_to_json(const PackingColoring& c) {
    Json j;
    j["S"] = c.instance.values();
    j["colors"] = c.colors;
    if (c.big) j["big"] = *c.big;
    return j;
}

PackingColoring coloring_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("S") || !j.contains("colors"))
        throw std::invalid_argument("coloring JSON needs \"S\" and \"colors\"");
    PackingColoring c;
    c.instance = PackingInstance(j.at("S").get<std::vector<int>>());
    c.colors = j.at("colors").get<std::vector<Color>>();
    if (j.contains("big")) c.big = j.at("big").get<std::vector<Vertex>>();
    return c;
}

Json outcome_to_json(const SolveOutcome& o) {
    Json j;
    j["status"] = to_string(o.status);
    j["witness"] = o.witness ? coloring_to_json(*o.witness) : Json(nullptr);
    j["stats"] = {{"nodes", o.stats.nodes}, {"wall_seconds", o.stats.wall_seconds}};
    j["version"] = kVersion;
    return j;
}

Json verdict_to_json(const Verdict& v) {
    Json viol = Json::array();
    for (const auto& x : v.violations)
        viol.push_back({{"u", x.u}, {"v", x.v}, {"color", x.color}, {"distance", x.distance}});
    return {{"valid", v.valid}, {"violations", std::move(viol)}};
}

Json theorem1_report_to_json(const Theorem1Report& r) {
    Json fails = Json::array();
    for (const auto& f : r.failures)
        fails.push_back({{"property", f.property}, {"witness", f.witness}, {"message", f.message}});
    return {{"ok", r.ok}, {"failures", std::move(fails)}};
}

std::string to_dot(const Graph& g, const PackingColoring* c) {
    std::vector<bool> big(g.vertex_count(), false);
    if (c && c->big)
        for (Vertex b : *c->big) big.at(b) = true;
    std::ostringstream out;
    out << "graph G {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v << " [label=\"";
        if (c) out << c->colors.at(v);
        else out << v;
        out << "\", shape=" << (big[v] ? "box" : "circle") << "];\n";
    }
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
    }
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << dump(j);
}

}  // namespace packfold
