// Colorers built on the leaf-peeling induction over L_G. Nodes are
// processed in BFS order from the root of each component, which is the
// reverse of a leaf-removal sequence.
#include <algorithm>
#include <functional>
#include <unordered_map>

#include "packfold/colorers.hpp"
#include "packfold/solver.hpp"

namespace packfold {

namespace {

struct Attach {
    std::vector<Vertex> colored;  // already colored vertices of the face
    Vertex inner = -1;            // bridge endpoint on the face
    Vertex outer = -1;            // its colored neighbor
};

class Peeler {
public:
    Peeler(const Graph& g, const OuterplanarEmbedding& emb, PackingInstance s)
        : g_(g), dt_(build_dual_trees(g, emb)), s_(std::move(s)), bs_(g), f_(g.vertex_count(), 0) {
        for (size_t i = 0; i < dt_.l_edges.size(); ++i) {
            const auto& e = dt_.l_edges[i];
            link_[key(e.a, e.b)] = static_cast<int>(i);
            link_[key(e.b, e.a)] = static_cast<int>(i);
        }
    }
    virtual ~Peeler() = default;

    ColorerResult run() {
        auto t = root_forest(dt_.l_adj);
        for (int node : t.order) {
            if (t.parent[node] < 0) {
                if (is_face(node)) base_face(dt_.faces[node].cycle);
                else base_vertex(dt_.d_vertices[node - F()]);
                continue;
            }
            const LEdge& e = dt_.l_edges[link_.at(key(t.parent[node], node))];
            if (!is_face(node)) {
                Vertex d = dt_.d_vertices[node - F()];
                extend_vertex(d, e.x == d ? e.y : e.x);
                continue;
            }
            const auto& C = dt_.faces[node].cycle;
            Attach at;
            for (Vertex v : C)
                if (f_[v] != 0) at.colored.push_back(v);
            if (at.colored.empty()) {
                if (e.kind != LinkKind::Bridge) throw InternalError("face reached without colored vertex or bridge");
                bool x_on = std::find(C.begin(), C.end(), e.x) != C.end();
                at.inner = x_on ? e.x : e.y;
                at.outer = x_on ? e.y : e.x;
            } else if (at.colored.size() > 2) {
                throw InternalError("face has more than two colored vertices when reached");
            }
            ++result_.faces;
            extend_face(node, C, at);
        }
        for (Vertex v = 0; v < g_.vertex_count(); ++v)
            if (f_[v] == 0) throw InternalError("vertex " + std::to_string(v) + " left uncolored");
        result_.coloring = PackingColoring{s_, f_, std::nullopt};
        return result_;
    }

protected:
    virtual void base_vertex(Vertex v) { set(v, 1); }
    virtual void base_face(const std::vector<Vertex>& C) = 0;
    virtual void extend_vertex(Vertex v, Vertex anchor) = 0;
    virtual void extend_face(int face, const std::vector<Vertex>& C, const Attach& at) = 0;

    int F() const { return dt_.face_count(); }
    bool is_face(int node) const { return node < F(); }
    static long long key(int a, int b) { return static_cast<long long>(a) * 1'000'003LL + b; }

    void set(Vertex v, Color c) {
        if (!can_color(v, c))
            throw InternalError("color " + std::to_string(c) + " conflicts at vertex " + std::to_string(v));
        f_[v] = c;
    }

    bool can_color(Vertex x, Color c) {
        for (auto [y, d] : bs_.run(x, s_.s(c)))
            if (y != x && f_[y] == c) return false;
        return true;
    }

    Color first_free(Vertex x, const std::vector<Color>& prefs) {
        for (Color c : prefs)
            if (can_color(x, c)) return c;
        return 0;
    }

    // Colors `order` by backtracking, trying colors in the order given by
    // prefs(x). Restores all of `order` on failure.
    bool fill(const std::vector<Vertex>& order, const std::function<std::vector<Color>(Vertex)>& prefs,
              std::uint64_t budget = 200'000) {
        std::uint64_t nodes = 0;
        std::function<bool(size_t)> go = [&](size_t i) {
            if (i == order.size()) return true;
            Vertex x = order[i];
            for (Color c : prefs(x)) {
                if (++nodes > budget) return false;
                if (!can_color(x, c)) continue;
                f_[x] = c;
                if (go(i + 1)) return true;
                f_[x] = 0;
            }
            return false;
        };
        if (go(0)) return true;
        for (Vertex x : order) f_[x] = 0;
        return false;
    }

    // Cycle C read from `start` in direction of `next`, excluding start.
    static std::vector<Vertex> walk(const std::vector<Vertex>& C, Vertex start, Vertex next) {
        const int L = static_cast<int>(C.size());
        int i = static_cast<int>(std::find(C.begin(), C.end(), start) - C.begin());
        int step = C[(i + 1) % L] == next ? 1 : L - 1;
        std::vector<Vertex> out;
        for (int j = 1; j < L; ++j) out.push_back(C[(i + j * step) % L]);
        return out;
    }

    static Vertex succ(const std::vector<Vertex>& C, Vertex v) {
        auto i = std::find(C.begin(), C.end(), v) - C.begin();
        return C[(i + 1) % C.size()];
    }
    static Vertex pred(const std::vector<Vertex>& C, Vertex v) {
        auto i = std::find(C.begin(), C.end(), v) - C.begin();
        return C[(i + C.size() - 1) % C.size()];
    }

    // Uncolored vertices of C: both cycle neighbors of `v` first, then the
    // rest of the cycle from succ(succ(v)) onwards.
    std::vector<Vertex> around(const std::vector<Vertex>& C, Vertex v) const {
        auto w = walk(C, v, succ(C, v));
        std::vector<Vertex> out;
        if (!w.empty()) out.push_back(w.front());
        if (w.size() > 1) out.push_back(w.back());
        for (size_t i = 1; i + 1 < w.size(); ++i) out.push_back(w[i]);
        out.erase(std::remove_if(out.begin(), out.end(), [&](Vertex x) { return f_[x] != 0; }), out.end());
        return out;
    }

    // For two adjacent colored vertices w1, w2 of C: the uncolored path
    // starting at the neighbor of w1 and ending at the neighbor of w2.
    static std::vector<Vertex> path_between(const std::vector<Vertex>& C, Vertex w1, Vertex w2) {
        Vertex x = succ(C, w1) == w2 ? pred(C, w1) : succ(C, w1);
        auto w = walk(C, w1, x);
        w.pop_back();  // w2
        return w;
    }

    std::vector<Color> all_colors() const {
        std::vector<Color> out;
        for (Color c = 1; c <= s_.k(); ++c) out.push_back(c);
        return out;
    }

    const Graph& g_;
    DualTrees dt_;
    PackingInstance s_;
    BallSearch bs_;
    std::vector<Color> f_;
    std::unordered_map<long long, int> link_;
    ColorerResult result_;
};

// S = (1, 3, ..., 3): color 1 goes to one side of the bipartition, the
// other side takes the 3-packing colors 2..k+1.
class OneThreeK : public Peeler {
public:
    OneThreeK(const Graph& g, const OuterplanarEmbedding& emb, int k, std::vector<int> side)
        : Peeler(g, emb, instance(k)), side_(std::move(side)), comp_(connected_components(g)),
          side_one_(g.vertex_count(), -1) {}

    static PackingInstance instance(int k) {
        std::vector<int> s(k + 1, 3);
        s[0] = 1;
        return PackingInstance(std::move(s));
    }

private:
    std::vector<Color> prefs(Vertex x) {
        if (side_one_[comp_[x]] < 0) side_one_[comp_[x]] = side_[x];
        if (side_[x] == side_one_[comp_[x]]) return {1};
        std::vector<Color> out;
        for (Color c = 2; c <= s_.k(); ++c) out.push_back(c);
        return out;
    }

    void complete(const std::vector<Vertex>& order) {
        if (!fill(order, [&](Vertex x) { return prefs(x); }))
            throw InternalError("(1,3,...,3) extension failed");
    }

    void base_vertex(Vertex v) override { complete({v}); }
    void base_face(const std::vector<Vertex>& C) override { complete(C); }
    void extend_vertex(Vertex v, Vertex) override { complete({v}); }

    void extend_face(int, const std::vector<Vertex>& C, const Attach& at) override {
        std::vector<Vertex> order;
        if (at.colored.empty()) {
            order.push_back(at.inner);
            auto rest = around(C, at.inner);
            order.insert(order.end(), rest.begin(), rest.end());
        } else if (at.colored.size() == 1) {
            order = around(C, at.colored[0]);
        } else {
            Vertex w1 = at.colored[0], w2 = at.colored[1];
            if (f_[w1] != 1 && f_[w2] == 1) std::swap(w1, w2);
            order = path_between(C, w1, w2);
        }
        complete(order);
    }

    std::vector<int> side_, comp_, side_one_;
};

// S = (1, 2, 2, 2); colors 2, 3, 4 play a1, a2, a3.
class Color1222 : public Peeler {
public:
    Color1222(const Graph& g, const OuterplanarEmbedding& emb) : Peeler(g, emb, PackingInstance({1, 2, 2, 2})) {}

private:
    static std::vector<Color> pref_any() { return {1, 2, 3, 4}; }
    static std::vector<Color> pref_a() { return {2, 3, 4}; }

    void base_face(const std::vector<Vertex>& C) override {
        const int n = static_cast<int>(C.size());
        const int q = n / 4, r = n % 4;
        std::vector<Color> p;
        for (int i = 0; i < q; ++i) p.insert(p.end(), {1, 2, 1, 3});
        if (r == 1) p.push_back(4);
        if (r == 2) p.insert(p.end(), {1, 4});
        if (r == 3) p.insert(p.end(), {1, 4, 3});
        for (int i = 0; i < n; ++i) set(C[i], p[i]);
    }

    void extend_vertex(Vertex v, Vertex anchor) override {
        Color c = f_[anchor] != 1 ? 1 : first_free(v, pref_a());
        if (c == 0 || !can_color(v, c)) c = first_free(v, pref_any());
        if (c == 0) throw InternalError("(1,2,2,2): no color for tree vertex " + std::to_string(v));
        set(v, c);
    }

    void path_fill(const std::vector<Vertex>& order, size_t a_only = 0) {
        auto pref = [&, a_only](Vertex x) {
            for (size_t i = 0; i < a_only && i < order.size(); ++i)
                if (order[i] == x) return pref_a();
            return pref_any();
        };
        if (!fill(order, pref)) throw Retry{};
    }

    struct Retry {};

    void extend_face(int face, const std::vector<Vertex>& C, const Attach& at) override {
        std::vector<Vertex> fresh;
        for (Vertex v : C)
            if (f_[v] == 0) fresh.push_back(v);
        try {
            guided(face, C, at);
        } catch (const Retry&) {
            for (Vertex v : fresh) f_[v] = 0;
            ++result_.retried_faces;
            if (!fill(fresh, [](Vertex) { return pref_any(); }, 5'000'000))
                throw InternalError("(1,2,2,2): cannot complete face " + std::to_string(face));
        }
    }

    void try_set(Vertex v, Color c) {
        if (c == 0 || !can_color(v, c)) throw Retry{};
        f_[v] = c;
    }

    bool has_neighbor_colored(Vertex v, Color c) const {
        for (Vertex y : g_.neighbors(v))
            if (f_[y] == c) return true;
        return false;
    }

    // Smallest a-color used neither by w nor by a colored neighbor of w.
    Color a_avoiding(Vertex w) const {
        for (Color c = 2; c <= 4; ++c) {
            if (f_[w] == c) continue;
            bool used = false;
            for (Vertex y : g_.neighbors(w))
                if (f_[y] == c) used = true;
            if (!used) return c;
        }
        return 0;
    }

    void guided(int face, const std::vector<Vertex>& C, const Attach& at) {
        if (at.colored.empty()) {
            const Vertex u = at.inner, v = at.outer;
            if (f_[v] == 1) {
                try_set(u, a_avoiding(v));
                path_fill(around(C, u));
            } else {
                try_set(u, 1);
                path_fill(around(C, u), 2);
            }
            return;
        }
        if (at.colored.size() == 1) {
            path_fill(around(C, at.colored[0]));
            return;
        }
        // Shared edge. Orient so that C reads w2, w1, x1, ..., x2.
        Vertex w1 = at.colored[0], w2 = at.colored[1];
        if (succ(C, w2) != w1) std::swap(w1, w2);
        if (!has_neighbor_colored(w1, 1) && f_[w1] != 1) f_[w1] = 1;
        if (!has_neighbor_colored(w2, 1) && f_[w2] != 1) f_[w2] = 1;
        const int L = static_cast<int>(C.size());
        auto path = path_between(C, w1, w2);
        const Vertex x1 = path.front(), x2 = path.back();
        if (L == 4 || L == 5) {
            if (f_[w1] == 1 || f_[w2] == 1) {
                Vertex a = w1, b = w2, xa = x1, xb = x2;
                if (f_[w1] != 1) {
                    std::swap(a, b);
                    std::swap(xa, xb);
                }
                try_set(xa, a_avoiding(a));
                try_set(xb, 1);
                if (L == 5) {
                    const auto& P = dt_.faces[parent_face(face, a, b)].cycle;
                    Vertex y = succ(P, a) == b ? pred(P, a) : succ(P, a);
                    try_set(path[1], f_[y]);
                }
            } else {
                Color a3 = 9 - f_[w1] - f_[w2];
                if (L == 4) {
                    try_set(x1, 1);
                    try_set(x2, a3);
                } else {
                    try_set(x1, 1);
                    try_set(x2, 1);
                    try_set(path[1], a3);
                }
            }
            return;
        }
        try_set(x1, a_avoiding(w1));
        try_set(x2, f_[w2] != 1 ? 1 : a_avoiding(w2));
        std::vector<Vertex> middle(path.begin() + 1, path.end() - 1);
        path_fill(middle);
    }

    // The other face of the block containing edge ab.
    int parent_face(int face, Vertex a, Vertex b) const {
        for (int f : dt_.vertex_faces[a]) {
            if (f == face) continue;
            const auto& P = dt_.faces[f].cycle;
            if (std::find(P.begin(), P.end(), b) != P.end() && (succ(P, a) == b || pred(P, a) == b)) return f;
        }
        throw InternalError("shared edge without a second face");
    }
};

// S = (1, 1, 2): colors 1 and 2 are independent sets, color 3 a 2-packing.
class Color112 : public Peeler {
public:
    Color112(const Graph& g, const OuterplanarEmbedding& emb) : Peeler(g, emb, PackingInstance({1, 1, 2})) {}

private:
    static std::vector<Color> prefs(Vertex) { return {1, 2, 3}; }

    void base_face(const std::vector<Vertex>& C) override {
        const size_t n = C.size();
        for (size_t i = 0; i < n; ++i) set(C[i], (n % 2 == 1 && i == n - 1) ? 3 : static_cast<Color>(i % 2 + 1));
    }

    void extend_vertex(Vertex v, Vertex) override {
        Color c = first_free(v, prefs(v));
        if (c == 0) throw InternalError("(1,1,2): no color for tree vertex " + std::to_string(v));
        set(v, c);
    }

    void extend_face(int face, const std::vector<Vertex>& C, const Attach& at) override {
        std::vector<Vertex> order;
        if (at.colored.empty()) {
            order.push_back(at.inner);
            auto rest = around(C, at.inner);
            order.insert(order.end(), rest.begin(), rest.end());
        } else if (at.colored.size() == 1) {
            order = around(C, at.colored[0]);
        } else {
            Vertex w1 = at.colored[0], w2 = at.colored[1];
            if (succ(C, w2) != w1) std::swap(w1, w2);
            order = path_between(C, w1, w2);
        }
        if (fill(order, prefs)) return;
        exact_fallback(face, order);
    }

    // Re-solves the face together with every colored vertex within
    // distance 2 of it; everything farther stays fixed.
    void exact_fallback(int face, const std::vector<Vertex>& fresh) {
        for (int radius : {2, 4, 6}) {
            std::vector<Vertex> region;
            for (auto [y, d] : bs_.run(std::span<const Vertex>(fresh), radius))
                if (f_[y] != 0 || std::find(fresh.begin(), fresh.end(), y) != fresh.end()) region.push_back(y);
            Budget b;
            b.seconds = 10;
            b.nodes = 5'000'000;
            auto r = solve_partial(g_, s_, f_, region, b);
            if (r.status == SolveStatus::Feasible) {
                for (Vertex y : region) f_[y] = r.witness->colors[y];
                result_.constructive_fallback = true;
                ++result_.fallback_faces;
                return;
            }
        }
        throw InternalError("(1,1,2): exact completion failed at face " + std::to_string(face));
    }
};

void require_subcubic_triangle_free(const Graph& g) {
    auto rep = structural_report(g);
    if (rep.max_degree > 3) throw PreconditionError("graph is not subcubic");
    if (!rep.triangle_free) throw PreconditionError("graph contains a triangle");
}

}  // namespace

ColorerResult color_one_three_k(const Graph& g, int k, const std::optional<OuterplanarEmbedding>& emb,
                                ColorOptions opt) {
    if (k < 3) throw PreconditionError("k must be at least 3");
    auto rep = structural_report(g);
    if (!rep.bipartite) throw PreconditionError("graph is not bipartite");
    if (!opt.unchecked && rep.max_degree > k) throw PreconditionError("maximum degree exceeds k");
    auto e = checked_embedding(g, emb);
    return OneThreeK(g, e, k, *rep.bipartition).run();
}

ColorerResult color_1222(const Graph& g, const std::optional<OuterplanarEmbedding>& emb, ColorOptions opt) {
    if (!opt.unchecked) require_subcubic_triangle_free(g);
    auto e = checked_embedding(g, emb);
    return Color1222(g, e).run();
}

ColorerResult color_112(const Graph& g, const std::optional<OuterplanarEmbedding>& emb, ColorOptions opt) {
    if (!opt.unchecked) require_subcubic_triangle_free(g);
    auto e = checked_embedding(g, emb);
    return Color112(g, e).run();
}

}  // namespace packfold
