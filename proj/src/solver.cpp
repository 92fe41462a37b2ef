#include "packfold/solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace packfold {

std::string to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Feasible: return "FEASIBLE";
        case SolveStatus::Infeasible: return "INFEASIBLE";
        case SolveStatus::Timeout: return "TIMEOUT";
    }
    return "?";
}

double parse_duration(const std::string& text) {
    size_t used = 0;
    double v = 0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad duration: " + text);
    }
    const std::string unit = text.substr(used);
    double scale = 0;
    if (unit.empty() || unit == "s") scale = 1;
    else if (unit == "ms") scale = 1e-3;
    else if (unit == "m") scale = 60;
    else if (unit == "h") scale = 3600;
    if (scale == 0 || !(v > 0)) throw std::invalid_argument("bad duration: " + text);
    return v * scale;
}

Budget Budget::from_env() {
    Budget b;
    if (const char* e = std::getenv("PACKFOLD_BUDGET")) b.seconds = parse_duration(e);
    return b;
}

namespace {

using Clock = std::chrono::steady_clock;
using Mask = std::uint64_t;

struct Near {
    Vertex v;
    int d;
};

// Vertices within distance `cap` of each vertex, excluding itself.
std::vector<std::vector<Near>> balls(const Graph& g, int cap) {
    std::vector<std::vector<Near>> out(g.vertex_count());
    BallSearch bs(g);
    for (Vertex x = 0; x < g.vertex_count(); ++x)
        for (auto [y, d] : bs.run(x, cap))
            if (y != x) out[x].push_back({y, d});
    return out;
}

// BFS order started from a maximum-degree vertex, restarted per component.
std::vector<Vertex> variable_order(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Vertex> by_degree(n);
    for (int i = 0; i < n; ++i) by_degree[i] = i;
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    std::vector<bool> seen(n, false);
    std::vector<Vertex> order;
    for (Vertex s : by_degree) {
        if (seen[s]) continue;
        seen[s] = true;
        size_t head = order.size();
        order.push_back(s);
        for (; head < order.size(); ++head)
            for (Vertex y : g.neighbors(order[head]))
                if (!seen[y]) {
                    seen[y] = true;
                    order.push_back(y);
                }
    }
    return order;
}

class Search {
public:
    Search(const Graph& g, const std::vector<std::vector<Near>>& near, const PackingInstance& s,
           const Budget& budget)
        : g_(g), near_(near), s_(s), budget_(budget), start_(Clock::now()) {
        if (s.k() > 64) throw std::invalid_argument("at most 64 colors supported");
        const int k = s.k();
        block_of_.resize(k + 1);
        for (int c = 1; c <= k; ++c) {
            if (c > 1 && s.s(c) == s.s(c - 1)) {
                block_of_[c] = block_of_[c - 1];
            } else {
                block_of_[c] = static_cast<int>(block_lo_.size());
                block_lo_.push_back(c);
            }
        }
    }

    SolveOutcome run(std::vector<Color> colors, const std::vector<Vertex>& vars) {
        const int n = g_.vertex_count();
        const int k = s_.k();
        colors_ = std::move(colors);
        vars_ = vars;
        const Mask full = k == 64 ? ~Mask{0} : ((Mask{1} << k) - 1);
        dom_.assign(n, full);
        bool any_fixed = false;
        for (Vertex y = 0; y < n; ++y) {
            Color c = colors_[y];
            if (c == 0) continue;
            any_fixed = true;
            for (auto [x, d] : near_[y])
                if (d <= s_.s(c)) dom_[x] &= ~bit(c);
        }
        symmetry_ = !any_fixed;
        used_max_.assign(block_lo_.size(), 0);
        for (size_t b = 0; b < block_lo_.size(); ++b) used_max_[b] = block_lo_[b] - 1;

        SolveOutcome out;
        bool empty = false;
        for (Vertex x : vars_)
            if (dom_[x] == 0) empty = true;
        int r = empty ? 0 : dfs(0);
        out.stats.nodes = nodes_;
        out.stats.wall_seconds = std::chrono::duration<double>(Clock::now() - start_).count();
        if (r == 1) {
            out.status = SolveStatus::Feasible;
            out.witness = PackingColoring{s_, colors_, std::nullopt};
        } else {
            out.status = r == 0 ? SolveStatus::Infeasible : SolveStatus::Timeout;
        }
        return out;
    }

private:
    static Mask bit(Color c) { return Mask{1} << (c - 1); }

    // 1 found, 0 exhausted, -1 out of budget.
    int dfs(size_t i) {
        if (i == vars_.size()) return 1;
        const Vertex x = vars_[i];
        Mask allowed = dom_[x];
        if (symmetry_) {
            Mask sym = 0;
            for (size_t b = 0; b < block_lo_.size(); ++b) {
                int hi_block = b + 1 < block_lo_.size() ? block_lo_[b + 1] - 1 : s_.k();
                int top = std::min(used_max_[b] + 1, hi_block);
                for (int c = block_lo_[b]; c <= top; ++c) sym |= bit(c);
            }
            allowed &= sym;
        }
        while (allowed) {
            Color c = std::countr_zero(allowed) + 1;
            allowed &= allowed - 1;
            if (++nodes_ >= budget_.nodes) return -1;
            if ((nodes_ & 4095) == 0 &&
                std::chrono::duration<double>(Clock::now() - start_).count() > budget_.seconds)
                return -1;
            size_t mark = trail_.size();
            bool ok = true;
            const int reach = s_.s(c);
            for (auto [y, d] : near_[x]) {
                if (d > reach) break;
                if (colors_[y] != 0 || !(dom_[y] & bit(c))) continue;
                dom_[y] &= ~bit(c);
                trail_.push_back(y);
                if (dom_[y] == 0) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                colors_[x] = c;
                int b = block_of_[c];
                int saved = used_max_[b];
                used_max_[b] = std::max(saved, c);
                int r = dfs(i + 1);
                if (r != 0) return r;
                used_max_[b] = saved;
                colors_[x] = 0;
            }
            while (trail_.size() > mark) {
                dom_[trail_.back()] |= bit(c);
                trail_.pop_back();
            }
        }
        return 0;
    }

    const Graph& g_;
    const std::vector<std::vector<Near>>& near_;
    PackingInstance s_;
    Budget budget_;
    Clock::time_point start_;
    std::vector<int> block_of_, block_lo_, used_max_;
    bool symmetry_ = true;
    std::vector<Color> colors_;
    std::vector<Vertex> vars_;
    std::vector<Mask> dom_;
    std::vector<Vertex> trail_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

SolveOutcome solve(const Graph& g, const PackingInstance& s, const Budget& budget) {
    auto near = balls(g, s.max_s());
    return Search(g, near, s, budget).run(std::vector<Color>(g.vertex_count(), 0), variable_order(g));
}

SolveOutcome solve_partial(const Graph& g, const PackingInstance& s, const std::vector<Color>& fixed,
                           const std::vector<Vertex>& free_vertices, const Budget& budget) {
    if (static_cast<int>(fixed.size()) != g.vertex_count())
        throw std::invalid_argument("partial coloring has the wrong size");
    std::vector<bool> is_free(g.vertex_count(), false);
    for (Vertex v : free_vertices) is_free.at(v) = true;
    std::vector<Color> start = fixed;
    for (Vertex v : free_vertices) start[v] = 0;
    std::vector<Vertex> vars;
    for (Vertex v : variable_order(g))
        if (is_free[v]) vars.push_back(v);
    auto near = balls(g, s.max_s());
    return Search(g, near, s, budget).run(std::move(start), vars);
}

ChiRhoOutcome chi_rho(const Graph& g, int k_max, const Budget& budget) {
    if (k_max < 1) throw std::invalid_argument("k_max must be at least 1");
    ChiRhoOutcome out;
    const auto t0 = Clock::now();
    auto near = balls(g, k_max);
    auto order = variable_order(g);
    for (int k = 1; k <= k_max; ++k) {
        std::vector<int> seq(k);
        for (int i = 0; i < k; ++i) seq[i] = i + 1;
        Budget left = budget;
        left.seconds = budget.seconds - std::chrono::duration<double>(Clock::now() - t0).count();
        left.nodes = budget.nodes > out.stats.nodes ? budget.nodes - out.stats.nodes : 0;
        if (left.seconds <= 0 || left.nodes == 0) {
            out.status = SolveStatus::Timeout;
            break;
        }
        auto r = Search(g, near, PackingInstance(seq), left).run(std::vector<Color>(g.vertex_count(), 0), order);
        out.stats.nodes += r.stats.nodes;
        if (r.status == SolveStatus::Feasible) {
            out.status = SolveStatus::Feasible;
            out.value = k;
            out.witness = std::move(r.witness);
            break;
        }
        if (r.status == SolveStatus::Timeout) {
            out.status = SolveStatus::Timeout;
            break;
        }
        out.status = SolveStatus::Infeasible;
    }
    out.stats.wall_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return out;
}

SolveOutcome naive_enumerate(const Graph& g, const PackingInstance& s) {
    const int n = g.vertex_count();
    const int k = s.k();
    if (n * std::log10(static_cast<double>(k)) > 7 + 1e-9)
        throw std::invalid_argument("naive enumeration guard: k^n exceeds 10^7");
    const auto t0 = Clock::now();
    std::vector<std::vector<int>> dist(n);
    for (Vertex v = 0; v < n; ++v) dist[v] = bfs_distances(g, v);
    std::vector<Color> col(n, 1);
    SolveOutcome out;
    out.status = SolveStatus::Infeasible;
    while (true) {
        ++out.stats.nodes;
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            for (int b = a + 1; b < n; ++b)
                if (col[a] == col[b] && dist[a][b] <= s.s(col[a])) {
                    ok = false;
                    break;
                }
        if (ok) {
            out.status = SolveStatus::Feasible;
            out.witness = PackingColoring{s, col, std::nullopt};
            break;
        }
        int i = n - 1;
        while (i >= 0 && col[i] == k) col[i--] = 1;
        if (i < 0) break;
        ++col[i];
    }
    out.stats.wall_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return out;
}

}  // namespace packfold
