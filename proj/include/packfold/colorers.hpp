#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "packfold/graph.hpp"
#include "packfold/outerplanar.hpp"

namespace packfold {

// Input violates the theorem's hypotheses.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The construction reached a state its case analysis cannot handle.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct ColorerResult {
    PackingColoring coloring;
    // (1,1,2) only: faces completed by the exact solver instead of the
    // adapted induction.
    bool constructive_fallback = false;
    int fallback_faces = 0;
    // (1,2,2,2) only: faces where the case rules got stuck and a plain
    // backtracking fill completed the face instead.
    int retried_faces = 0;
    int faces = 0;
};

struct ColorOptions {
    // Skip the structural hypotheses (degree, bipartiteness, ...). The
    // embedding is still required to be valid.
    bool unchecked = false;
};

// The given embedding after validation, or a recognized one. Throws
// PreconditionError when neither is available.
OuterplanarEmbedding checked_embedding(const Graph& g, const std::optional<OuterplanarEmbedding>& emb);

// Packing coloring with colors 1..7 of a 2-connected bipartite subcubic
// outerplanar graph. The result carries the big-vertex set.
ColorerResult color_theorem1(const Graph& g, const std::optional<OuterplanarEmbedding>& emb = std::nullopt,
                             ColorOptions opt = {});

// (1,3,...,3) with k threes, for bipartite outerplanar graphs with max degree <= k.
ColorerResult color_one_three_k(const Graph& g, int k,
                                const std::optional<OuterplanarEmbedding>& emb = std::nullopt,
                                ColorOptions opt = {});

// (1,2,2,2) for subcubic triangle-free outerplanar graphs.
ColorerResult color_1222(const Graph& g, const std::optional<OuterplanarEmbedding>& emb = std::nullopt,
                         ColorOptions opt = {});

// (1,1,2) for subcubic triangle-free outerplanar graphs.
ColorerResult color_112(const Graph& g, const std::optional<OuterplanarEmbedding>& emb = std::nullopt,
                         ColorOptions opt = {});

}  // namespace packfold
