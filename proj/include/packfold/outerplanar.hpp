#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "packfold/graph.hpp"

namespace packfold {

struct EmbeddingBlock {
    std::vector<Vertex> outer_cycle;
    std::vector<std::pair<Vertex, Vertex>> chords;
};

// Edges of g that lie in no block are bridges.
struct OuterplanarEmbedding {
    std::vector<EmbeddingBlock> blocks;
};

struct EmbeddingCheck {
    bool valid = true;
    std::string defect;  // first defect found
};

EmbeddingCheck validate_embedding(const Graph& g, const OuterplanarEmbedding& emb);

struct Recognition {
    std::optional<OuterplanarEmbedding> embedding;
    std::string obstruction;  // set when embedding is empty
};

Recognition recognize_outerplanar(const Graph& g);

// Recognizes or throws std::invalid_argument.
OuterplanarEmbedding embedding_or_throw(const Graph& g);

struct Face {
    std::vector<Vertex> cycle;  // in outer-cycle orientation
    int block = -1;
};

enum class LinkKind { SharedEdge, CutVertex, Bridge, DEdge };

// Edge of L_G. Node ids: faces are 0..F-1, the D-vertex d_vertices[i] is F+i.
// For Bridge and DEdge links, (x, y) is the underlying edge of G with x
// lying on the side of node a. For CutVertex links x is the cut vertex.
// For SharedEdge links (x, y) is the shared edge.
struct LEdge {
    int a = -1;
    int b = -1;
    LinkKind kind = LinkKind::SharedEdge;
    Vertex x = -1;
    Vertex y = -1;
};

struct RootedTree {
    std::vector<int> roots;   // one per component
    std::vector<int> order;   // BFS order, components concatenated
    std::vector<int> parent;  // -1 at roots
    std::vector<int> depth;
};

struct DualTrees {
    std::vector<Face> faces;
    std::vector<std::vector<int>> t_adj;  // T_G, sorted
    std::vector<std::vector<int>> vertex_faces;
    std::vector<Vertex> d_vertices;  // ascending
    std::vector<int> node_of_vertex; // L_G node of a D-vertex, else -1
    std::vector<LEdge> l_edges;
    std::vector<std::vector<int>> l_adj;  // L_G, sorted node ids

    // Filled by root_and_order (rooting of T_G).
    int root = -1;
    std::vector<int> bfs_order;
    std::vector<int> parent;
    std::vector<int> depth;

    int face_count() const { return static_cast<int>(faces.size()); }
    int l_node_count() const { return face_count() + static_cast<int>(d_vertices.size()); }
    // The L_G edge joining nodes a and b. Throws if absent.
    const LEdge& l_edge(int a, int b) const;
};

// Throws std::invalid_argument if the embedding does not validate.
DualTrees build_dual_trees(const Graph& g, const OuterplanarEmbedding& emb);

// Roots every component of a forest at its center (lowest index on ties)
// and lists nodes in BFS order with children in ascending index.
RootedTree root_forest(const std::vector<std::vector<int>>& adj);

// Roots T_G. Throws std::invalid_argument if T_G is empty or not a tree.
DualTrees root_and_order(DualTrees dt);

// The two vertices common to adjacent faces a and b, in the order they
// appear on face a. Throws std::invalid_argument if not adjacent in T_G.
std::pair<Vertex, Vertex> shared_edge(const DualTrees& dt, int a, int b);

}  // namespace packfold
