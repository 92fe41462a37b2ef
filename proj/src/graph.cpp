#include "packfold/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace packfold {

Graph::Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    adj_.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + "-" +
                                        std::to_string(v));
        if (u == v) throw std::invalid_argument("self-loop at " + std::to_string(u));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (int v = 0; v < n; ++v) {
        auto& a = adj_[v];
        std::sort(a.begin(), a.end());
        if (std::adjacent_find(a.begin(), a.end()) != a.end())
            throw std::invalid_argument("parallel edge at " + std::to_string(v));
    }
    m_ = static_cast<int>(edges.size());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(m_);
    for (int u = 0; u < vertex_count(); ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
    return d;
}

PackingInstance::PackingInstance(std::vector<int> s) : s_(std::move(s)) {
    if (s_.empty()) throw std::invalid_argument("empty packing sequence");
    for (size_t i = 0; i < s_.size(); ++i) {
        if (s_[i] < 1) throw std::invalid_argument("packing sequence entries must be positive");
        if (i > 0 && s_[i] < s_[i - 1])
            throw std::invalid_argument("packing sequence must be non-decreasing");
    }
}

PackingInstance PackingInstance::parse(const std::string& csv) {
    std::vector<int> s;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("bad packing sequence: " + csv);
        size_t used = 0;
        int x = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("bad packing sequence: " + csv);
        s.push_back(x);
    }
    return PackingInstance(std::move(s));
}

std::string PackingInstance::to_string() const {
    std::string out = "(";
    for (size_t i = 0; i < s_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s_[i]);
    }
    return out + ")";
}

std::vector<int> bfs_distances(const Graph& g, Vertex source, int cap) {
    if (source < 0 || source >= g.vertex_count()) throw std::out_of_range("source vertex out of range");
    std::vector<int> d(g.vertex_count(), kUnreachable);
    std::deque<Vertex> q{source};
    d[source] = 0;
    while (!q.empty()) {
        Vertex x = q.front();
        q.pop_front();
        if (d[x] >= cap) continue;
        for (Vertex y : g.neighbors(x))
            if (d[y] == kUnreachable) {
                d[y] = d[x] + 1;
                q.push_back(y);
            }
    }
    return d;
}

BallSearch::BallSearch(const Graph& g)
    : g_(&g), stamp_(g.vertex_count(), 0), dist_(g.vertex_count(), 0) {}

const std::vector<std::pair<Vertex, int>>& BallSearch::run(Vertex source, int cap) {
    return run(std::span<const Vertex>(&source, 1), cap);
}

const std::vector<std::pair<Vertex, int>>& BallSearch::run(std::span<const Vertex> sources, int cap) {
    if (++epoch_ == 0) {
        std::fill(stamp_.begin(), stamp_.end(), 0);
        epoch_ = 1;
    }
    out_.clear();
    for (Vertex s : sources) {
        if (stamp_[s] == epoch_) continue;
        stamp_[s] = epoch_;
        dist_[s] = 0;
        out_.emplace_back(s, 0);
    }
    for (size_t head = 0; head < out_.size(); ++head) {
        auto [x, dx] = out_[head];
        if (dx >= cap) continue;
        for (Vertex y : g_->neighbors(x)) {
            if (stamp_[y] == epoch_) continue;
            stamp_[y] = epoch_;
            dist_[y] = dx + 1;
            out_.emplace_back(y, dx + 1);
        }
    }
    return out_;
}

int distance(const Graph& g, Vertex u, Vertex v, int cap) {
    BallSearch bs(g);
    bs.run(u, cap);
    return bs.distance(v);
}

Verdict verify_packing(const Graph& g, const PackingColoring& c) {
    const int n = g.vertex_count();
    if (static_cast<int>(c.colors.size()) != n)
        throw std::invalid_argument("coloring has " + std::to_string(c.colors.size()) +
                                    " entries for " + std::to_string(n) + " vertices");
    const int k = c.instance.k();
    for (int v = 0; v < n; ++v)
        if (c.colors[v] < 1 || c.colors[v] > k)
            throw std::invalid_argument("vertex " + std::to_string(v) + " has color " +
                                        std::to_string(c.colors[v]) + " outside 1.." +
                                        std::to_string(k));
    Verdict out;
    BallSearch bs(g);
    for (Vertex u = 0; u < n; ++u) {
        Color col = c.colors[u];
        for (auto [v, d] : bs.run(u, c.instance.s(col)))
            if (v > u && c.colors[v] == col) out.violations.push_back({u, v, col, d});
    }
    std::sort(out.violations.begin(), out.violations.end(), [](const Violation& a, const Violation& b) {
        return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
    out.valid = out.violations.empty();
    return out;
}

std::vector<int> connected_components(const Graph& g) {
    std::vector<int> comp(g.vertex_count(), -1);
    int id = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            for (Vertex y : g.neighbors(x))
                if (comp[y] < 0) {
                    comp[y] = id;
                    stack.push_back(y);
                }
        }
        ++id;
    }
    return comp;
}

BlockDecomposition block_decomposition(const Graph& g) {
    const int n = g.vertex_count();
    BlockDecomposition out;
    out.is_cut_vertex.assign(n, false);
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<std::pair<Vertex, Vertex>> estack;
    struct Frame {
        Vertex v, parent;
        size_t next;
        int children;
    };
    std::vector<Frame> stack;
    int timer = 0;
    for (Vertex root = 0; root < n; ++root) {
        if (disc[root] >= 0) continue;
        disc[root] = low[root] = timer++;
        stack.push_back({root, -1, 0, 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            auto nb = g.neighbors(f.v);
            if (f.next < nb.size()) {
                Vertex w = nb[f.next++];
                if (disc[w] < 0) {
                    estack.emplace_back(f.v, w);
                    disc[w] = low[w] = timer++;
                    ++f.children;
                    stack.push_back({w, f.v, 0, 0});
                } else if (w != f.parent && disc[w] < disc[f.v]) {
                    estack.emplace_back(f.v, w);
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
                continue;
            }
            Frame done = f;
            stack.pop_back();
            if (stack.empty()) {
                if (done.children >= 2) out.is_cut_vertex[done.v] = true;
                continue;
            }
            Frame& p = stack.back();
            low[p.v] = std::min(low[p.v], low[done.v]);
            if (low[done.v] >= disc[p.v]) {
                if (p.parent >= 0) out.is_cut_vertex[p.v] = true;
                std::vector<std::pair<Vertex, Vertex>> block;
                while (true) {
                    auto e = estack.back();
                    estack.pop_back();
                    block.emplace_back(std::min(e.first, e.second), std::max(e.first, e.second));
                    if (e.first == p.v && e.second == done.v) break;
                }
                std::sort(block.begin(), block.end());
                out.blocks.push_back(std::move(block));
            }
        }
    }
    return out;
}

namespace {

std::optional<std::vector<int>> two_color(const Graph& g) {
    std::vector<int> side(g.vertex_count(), -1);
    std::deque<Vertex> q;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        q.push_back(s);
        while (!q.empty()) {
            Vertex x = q.front();
            q.pop_front();
            for (Vertex y : g.neighbors(x)) {
                if (side[y] < 0) {
                    side[y] = 1 - side[x];
                    q.push_back(y);
                } else if (side[y] == side[x]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

std::optional<int> girth(const Graph& g) {
    const int n = g.vertex_count();
    int best = kUnreachable;
    std::vector<int> dist(n), parent(n);
    std::vector<Vertex> q;
    for (Vertex s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        q.assign(1, s);
        dist[s] = 0;
        parent[s] = -1;
        for (size_t h = 0; h < q.size(); ++h) {
            Vertex x = q[h];
            if (2 * dist[x] + 1 >= best) break;
            for (Vertex y : g.neighbors(x)) {
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    q.push_back(y);
                } else if (y != parent[x]) {
                    best = std::min(best, dist[x] + dist[y] + 1);
                }
            }
        }
    }
    if (best == kUnreachable) return std::nullopt;
    return best;
}

}  // namespace

StructuralReport structural_report(const Graph& g) {
    StructuralReport r;
    const int n = g.vertex_count();
    auto comp = connected_components(g);
    r.connected = n == 0 || *std::max_element(comp.begin(), comp.end()) == 0;
    if (r.connected && n >= 3) {
        auto bd = block_decomposition(g);
        r.two_connected = std::none_of(bd.is_cut_vertex.begin(), bd.is_cut_vertex.end(),
                                       [](bool b) { return b; });
    }
    r.bipartition = two_color(g);
    r.bipartite = r.bipartition.has_value();
    r.max_degree = g.max_degree();
    r.girth = girth(g);
    r.triangle_free = !r.girth || *r.girth > 3;
    return r;
}

}  // namespace packfold
