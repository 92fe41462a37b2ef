#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "packfold/graph.hpp"
#include "packfold/outerplanar.hpp"

namespace packfold {

struct GeneratedGraph {
    Graph graph;
    OuterplanarEmbedding embedding;
};

GeneratedGraph gen_cycle(int n);  // n >= 3
GeneratedGraph gen_path(int n);   // n >= 1

// Start from C_k; each round adds a k-cycle on every pair of adjacent
// degree-2 vertices, pairing greedily along the outer cycle from vertex 0.
GeneratedGraph gen_prop5_family(int k, int iterations);

// Two copies of the gadget {u,u1,u2,u3,u4,x,y} joined by an edge between
// their centers: 14 vertices, 19 edges. Vertex 0 is u, 7 is v.
GeneratedGraph gen_fig7();

// Central C_5 whose vertices each get a pendant edge into a private C_5.
GeneratedGraph gen_g25();

// Central triangle whose vertices each get a pendant edge into a private triangle.
GeneratedGraph gen_triangle_gadget();

// Depth-`depth` tree: the root has k children, every other internal vertex
// k-1 children, so internal degrees are exactly k. BFS labels, root 0.
GeneratedGraph gen_kary_tree(int k, int depth = 5);

struct Constraints {
    bool bipartite = false;
    bool subcubic = false;
    bool triangle_free = false;
    bool two_connected = false;
    std::optional<int> max_degree;

    // Comma list: bipartite, subcubic, triangle_free, two_connected, maxdeg=<d>.
    static Constraints parse(const std::string& csv);
    std::string to_string() const;
    int degree_cap() const;
};

// Throws std::invalid_argument when the constraints cannot be met for n.
GeneratedGraph gen_random_outerplanar(int n, std::uint64_t seed, const Constraints& c);

}  // namespace packfold
