#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "packfold/graph.hpp"

namespace packfold {

// Face subcases of the seven-color colorer, with their long-face patterns.
enum class Subcase { S1a, S1b, S2a, S2b, S2c, S3a, S3b, S3c };

inline constexpr std::array<Subcase, 8> kAllSubcases{Subcase::S1a, Subcase::S1b, Subcase::S2a, Subcase::S2b,
                                                     Subcase::S2c, Subcase::S3a, Subcase::S3b, Subcase::S3c};

std::string subcase_name(Subcase s);  // "1a", ...

// Face sizes n = period * k + offset (k >= 0), or exactly n = offset when
// period is 0. The colors for the slots are prefix, block^k, suffix.
struct PatternRow {
    int period = 0;
    int offset = 0;
    std::vector<Color> prefix;
    std::vector<Color> block;
    std::vector<Color> suffix;

    bool matches(int n) const;
    std::vector<Color> expand(int n) const;
    std::string label() const;  // "4k+8" or "6"
};

const std::vector<PatternRow>& pattern_rows(Subcase s);

// Slot colors for a face of size n; nullopt if no row applies.
std::optional<std::vector<Color>> pattern_sequence(Subcase s, int n);

// Colors the table assumes for the already-colored big vertices of the
// configuration ("u", "v", "p", "r", "s").
const std::map<std::string, Color>& pattern_anchors(Subcase s);

}  // namespace packfold
