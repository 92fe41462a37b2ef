#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "packfold/graph.hpp"
#include "packfold/outerplanar.hpp"
#include "packfold/solver.hpp"
#include "packfold/theorem1_properties.hpp"

namespace packfold {

inline constexpr const char* kVersion = "packfold 0.1.0";

using Json = nlohmann::json;

// {"n": .., "edges": [[u,v], ..]} plus "blocks" when an embedding is given.
Json graph_to_json(const Graph& g, const OuterplanarEmbedding* emb = nullptr);
Graph graph_from_json(const Json& j);
// nullopt when the document has no "blocks" key.
std::optional<OuterplanarEmbedding> embedding_from_json(const Json& j);

// {"S": [..], "colors": [..], "big": [..]?}
Json coloring_to_json(const PackingColoring& c);
PackingColoring coloring_from_json(const Json& j);

Json outcome_to_json(const SolveOutcome& o);
Json verdict_to_json(const Verdict& v);
Json theorem1_report_to_json(const Theorem1Report& r);

// Deterministic DOT; big vertices are boxes, labels are colors when given.
std::string to_dot(const Graph& g, const PackingColoring* c = nullptr);

Json read_json_file(const std::string& path);
// Compact dump followed by a newline.
void write_json_file(const std::string& path, const Json& j);
std::string dump(const Json& j);

}  // namespace packfold
