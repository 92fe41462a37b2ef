#include "packfold/patterns.hpp"

#include <stdexcept>

namespace packfold {

std::string subcase_name(Subcase s) {
    static const char* names[] = {"1a", "1b", "2a", "2b", "2c", "3a", "3b", "3c"};
    return names[static_cast<int>(s)];
}

bool PatternRow::matches(int n) const {
    if (period == 0) return n == offset;
    return n >= offset && (n - offset) % period == 0;
}

std::vector<Color> PatternRow::expand(int n) const {
    if (!matches(n)) throw std::invalid_argument("pattern row " + label() + " does not cover " + std::to_string(n));
    std::vector<Color> out = prefix;
    int reps = period == 0 ? 0 : (n - offset) / period;
    for (int i = 0; i < reps; ++i) out.insert(out.end(), block.begin(), block.end());
    out.insert(out.end(), suffix.begin(), suffix.end());
    return out;
}

std::string PatternRow::label() const {
    if (period == 0) return std::to_string(offset);
    return std::to_string(period) + "k+" + std::to_string(offset);
}

const std::vector<PatternRow>& pattern_rows(Subcase s) {
    static const std::vector<PatternRow> rows[] = {
        // 1a
        {{4, 8, {7, 5}, {6, 4, 7, 5}, {4, 6, 5}},
         {8, 6, {5, 6}, {5, 4, 5, 7, 5, 4, 5, 6}, {5}},
         {8, 10, {5, 7, 5, 4, 5, 6}, {5, 4, 5, 7, 5, 4, 5, 6}, {5}},
         {0, 4, {5}, {}, {}}},
        // 1b
        {{4, 8, {5, 4}, {7, 5, 6, 4}, {7, 5, 4}},
         {4, 10, {5, 4, 5, 7, 4}, {5, 6, 4, 7}, {5, 4}},
         {0, 6, {4, 5, 4}, {}, {}},
         {0, 4, {4}, {}, {}}},
        // 2a
        {{4, 8, {4, 5}, {7, 4, 6, 5}, {7, 4}},
         {4, 10, {4, 5}, {7, 4, 6, 5}, {4, 7, 5, 4}},
         {0, 6, {5, 4}, {}, {}}},
        // 2b
        {{4, 6, {}, {6, 5, 7, 4}, {5, 6}},
         {4, 8, {7, 5}, {6, 4, 7, 5}, {4, 6}}},
        // 2c
        {{4, 6, {}, {7, 5, 6, 4}, {7, 5}},
         {4, 8, {}, {7, 5, 6, 4}, {5, 7, 4, 5}}},
        // 3a
        {{4, 8, {}, {7, 5, 6, 4}, {7, 5, 4}},
         {4, 10, {}, {7, 5, 6, 4}, {5, 7, 5, 4, 5}},
         {0, 6, {5}, {}, {}}},
        // 3b
        {{4, 8, {4, 5}, {7, 4, 6, 5}, {7}},
         {4, 10, {5, 4, 7, 5}, {6, 4, 7, 5}, {6}},
         {0, 6, {5}, {}, {}}},
        // 3c
        {{4, 6, {}, {7, 4, 6, 5}, {7}},
         {4, 8, {}, {7, 4, 6, 5}, {4, 7, 5}}},
    };
    return rows[static_cast<int>(s)];
}

std::optional<std::vector<Color>> pattern_sequence(Subcase s, int n) {
    for (const auto& row : pattern_rows(s))
        if (row.matches(n)) return row.expand(n);
    return std::nullopt;
}

const std::map<std::string, Color>& pattern_anchors(Subcase s) {
    static const std::map<std::string, Color> anchors[] = {
        {{"u", 4}, {"r", 5}, {"s", 7}}, {{"u", 6}, {"r", 4}, {"s", 5}},
        {{"v", 6}, {"p", 4}, {"r", 5}}, {{"v", 4}, {"p", 6}, {"r", 5}},
        {{"v", 4}, {"p", 5}, {"r", 6}}, {{"u", 4}, {"v", 6}, {"r", 5}},
        {{"u", 6}, {"v", 4}, {"r", 5}}, {{"u", 5}, {"v", 4}, {"r", 6}},
    };
    return anchors[static_cast<int>(s)];
}

}  // namespace packfold
