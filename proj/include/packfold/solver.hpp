#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "packfold/graph.hpp"

namespace packfold {

enum class SolveStatus { Feasible, Infeasible, Timeout };

std::string to_string(SolveStatus s);  // "FEASIBLE", "INFEASIBLE", "TIMEOUT"

struct SolveStats {
    std::uint64_t nodes = 0;
    double wall_seconds = 0;
};

struct SolveOutcome {
    SolveStatus status = SolveStatus::Timeout;
    std::optional<PackingColoring> witness;
    SolveStats stats;
};

struct Budget {
    double seconds = 60;
    std::uint64_t nodes = 100'000'000;
    // Seconds taken from PACKFOLD_BUDGET when set, otherwise the default.
    static Budget from_env();
};

// "60", "60s", "500ms", "2m", "1h" -> seconds. Throws std::invalid_argument.
double parse_duration(const std::string& text);

SolveOutcome solve(const Graph& g, const PackingInstance& s, const Budget& budget = {});

// Extends the partial coloring `fixed` (0 = uncolored) to the vertices in
// `free_vertices`. Uncolored vertices outside that list are ignored.
SolveOutcome solve_partial(const Graph& g, const PackingInstance& s, const std::vector<Color>& fixed,
                           const std::vector<Vertex>& free_vertices, const Budget& budget = {});

struct ChiRhoOutcome {
    // Feasible: value holds chi_rho. Infeasible: chi_rho > k_max.
    SolveStatus status = SolveStatus::Timeout;
    std::optional<int> value;
    std::optional<PackingColoring> witness;
    SolveStats stats;
};

ChiRhoOutcome chi_rho(const Graph& g, int k_max, const Budget& budget = {});

// Tries all k^n colorings. Throws std::invalid_argument if k^n > 10^7.
SolveOutcome naive_enumerate(const Graph& g, const PackingInstance& s);

}  // namespace packfold
