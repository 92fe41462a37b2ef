#pragma once

#include <string>
#include <vector>

#include "packfold/graph.hpp"
#include "packfold/outerplanar.hpp"

namespace packfold {

struct PropertyFailure {
    int property;                 // 1..4
    std::vector<int> witness;     // vertices, or a single face index for property 2
    std::string message;
};

struct Theorem1Report {
    bool ok = true;
    std::vector<PropertyFailure> failures;
};

// Structural properties of a seven-color big-vertex packing coloring (colors 1..7):
//  1. every vertex not colored 1 has only neighbors colored 1;
//  2. a face of size >= 6 holds exactly one big vertex, a 4-face at most one;
//  3. big vertices are pairwise at distance > 3;
//  4. vertices colored 6 or 7 are pairwise at distance > 5.
// Throws std::invalid_argument when c.big is missing.
Theorem1Report verify_theorem1_properties(const Graph& g, const PackingColoring& c,
                                          const OuterplanarEmbedding& emb);

}  // namespace packfold
