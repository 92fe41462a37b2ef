#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace packfold {

using Vertex = int;
using Color = int;  // 1-based index into the packing sequence

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
public:
    Graph() = default;
    // Throws std::invalid_argument on self-loops, parallel edges or
    // endpoints outside [0, n).
    Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return m_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(Vertex u, Vertex v) const;
    // Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<Vertex, Vertex>> edges() const;
    int max_degree() const;

private:
    std::vector<std::vector<Vertex>> adj_;
    int m_ = 0;
};

// The sequence S = (s_1, ..., s_k), non-decreasing positive integers.
class PackingInstance {
public:
    PackingInstance() = default;
    explicit PackingInstance(std::vector<int> s);
    static PackingInstance parse(const std::string& csv);  // "1,2,2,3"

    int k() const { return static_cast<int>(s_.size()); }
    int s(Color c) const { return s_[c - 1]; }
    int max_s() const { return s_.empty() ? 0 : s_.back(); }
    const std::vector<int>& values() const { return s_; }
    std::string to_string() const;

    bool operator==(const PackingInstance&) const = default;

private:
    std::vector<int> s_;
};

struct PackingColoring {
    PackingInstance instance;
    std::vector<Color> colors;               // colors[v] in 1..k
    std::optional<std::vector<Vertex>> big;  // seven-color colorings only
};

struct Violation {
    Vertex u;
    Vertex v;
    Color color;
    int distance;
    bool operator==(const Violation&) const = default;
};

struct Verdict {
    bool valid = true;
    std::vector<Violation> violations;  // sorted by (u, v), u < v
};

// BFS distances from source; vertices farther than cap (or unreachable)
// get kUnreachable.
std::vector<int> bfs_distances(const Graph& g, Vertex source, int cap = kUnreachable);

// Reusable capped BFS. Avoids O(n) clearing between runs.
class BallSearch {
public:
    explicit BallSearch(const Graph& g);
    // Visits every vertex within distance cap of source (source included)
    // in BFS order. Returns (vertex, distance) pairs.
    const std::vector<std::pair<Vertex, int>>& run(Vertex source, int cap);
    const std::vector<std::pair<Vertex, int>>& run(std::span<const Vertex> sources, int cap);
    // Distance from the last run, or kUnreachable.
    int distance(Vertex v) const { return stamp_[v] == epoch_ ? dist_[v] : kUnreachable; }

private:
    const Graph* g_;
    std::vector<std::uint32_t> stamp_;
    std::vector<int> dist_;
    std::uint32_t epoch_ = 0;
    std::vector<std::pair<Vertex, int>> out_;
};

int distance(const Graph& g, Vertex u, Vertex v, int cap = kUnreachable);

// Throws std::invalid_argument when colors has the wrong size or a color
// outside 1..k.
Verdict verify_packing(const Graph& g, const PackingColoring& c);

struct StructuralReport {
    bool connected = false;
    bool two_connected = false;
    bool bipartite = false;
    std::optional<std::vector<int>> bipartition;  // side 0/1 per vertex
    int max_degree = 0;
    bool triangle_free = false;
    std::optional<int> girth;  // nullopt for forests
};

StructuralReport structural_report(const Graph& g);

// Articulation points and biconnected components (edge sets). Bridges
// show up as components with a single edge.
struct BlockDecomposition {
    std::vector<std::vector<std::pair<Vertex, Vertex>>> blocks;
    std::vector<bool> is_cut_vertex;
};
BlockDecomposition block_decomposition(const Graph& g);

std::vector<int> connected_components(const Graph& g);  // component id per vertex

}  // namespace packfold
