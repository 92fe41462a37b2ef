#include <algorithm>
#include <functional>

#include "packfold/colorers.hpp"
#include "packfold/patterns.hpp"

namespace packfold {

namespace {

enum class Kind { Root, Zero, One, Two };

struct FaceInfo {
    Kind kind = Kind::Root;
    std::vector<Vertex> walk;
    Vertex u = -1;  // Kind::Two: the parent's big vertex
};

int index_of(const std::vector<Vertex>& P, Vertex x) {
    auto it = std::find(P.begin(), P.end(), x);
    if (it == P.end()) throw InternalError("vertex " + std::to_string(x) + " not on face");
    return static_cast<int>(it - P.begin());
}

// The cycle P read from start, first stepping to next.
std::vector<Vertex> walk_from(const std::vector<Vertex>& P, Vertex start, Vertex next) {
    const int L = static_cast<int>(P.size());
    int i = index_of(P, start);
    int step = P[(i + 1) % L] == next ? 1 : L - 1;
    if (P[(i + step) % L] != next) throw InternalError("walk_from: not a cycle neighbor");
    std::vector<Vertex> out(L);
    for (int j = 0; j < L; ++j) out[j] = P[(i + j * step) % L];
    return out;
}

Vertex other_neighbor(const std::vector<Vertex>& P, Vertex x, Vertex y) {
    const int L = static_cast<int>(P.size());
    int i = index_of(P, x);
    Vertex a = P[(i + 1) % L], b = P[(i + L - 1) % L];
    if (a != y && b != y) throw InternalError("other_neighbor: not a cycle neighbor");
    return a == y ? b : a;
}

int other23(int c) { return c == 2 ? 3 : 2; }

bool conflicts(Color a, Color b, int d) {
    return (a == b && d <= a) || (a >= 6 && b >= 6 && d < 6);
}

struct Perm {
    bool s45 = false;
    bool s67 = false;
    Color operator()(Color c) const {
        if (s45 && (c == 4 || c == 5)) return 9 - c;
        if (s67 && (c == 6 || c == 7)) return 13 - c;
        return c;
    }
};

class Theorem1 {
public:
    Theorem1(const Graph& g, const OuterplanarEmbedding& emb)
        : g_(g), dt_(root_and_order(build_dual_trees(g, emb))), bs_(g) {
        const int n = g.vertex_count();
        f_.assign(n, 0);
        home_.assign(n, -1);
        big_of_.assign(dt_.face_count(), -1);
        info_.assign(dt_.face_count(), {});
    }

    ColorerResult run() {
        step1();
        euler_tour();
        step2();
        ColorerResult out;
        out.coloring.instance = PackingInstance({1, 2, 3, 4, 5, 6, 7});
        for (Vertex v = 0; v < g_.vertex_count(); ++v)
            if (f_[v] == 0) throw InternalError("vertex " + std::to_string(v) + " left uncolored");
        out.coloring.colors = f_;
        std::vector<Vertex> big;
        for (Vertex v = 0; v < g_.vertex_count(); ++v)
            if (home_[v] >= 0) big.push_back(v);
        out.coloring.big = std::move(big);
        out.faces = dt_.face_count();
        return out;
    }

private:
    void set(Vertex v, Color c) {
        if (f_[v] != 0) throw InternalError("vertex " + std::to_string(v) + " colored twice in step 1");
        f_[v] = c;
    }

    void make_big(Vertex v, int face) {
        if (home_[v] >= 0) throw InternalError("vertex " + std::to_string(v) + " made big twice");
        big_of_[face] = v;
        home_[v] = face;
    }

    void step1() {
        static const int base[4] = {1, 2, 1, 3};
        const int root = dt_.root;
        const auto& R = dt_.faces[root].cycle;
        if (R.size() > 4) {
            make_big(R[0], root);
            for (size_t j = 1; j < R.size(); ++j) set(R[j], base[(j - 1) % 4]);
        } else {
            for (size_t j = 0; j < 4; ++j) set(R[j], base[j]);
        }
        for (size_t idx = 1; idx < dt_.bfs_order.size(); ++idx) {
            const int a = dt_.bfs_order[idx];
            const int w = dt_.parent[a];
            auto [s1, s2] = shared_edge(dt_, w, a);
            const auto& P = dt_.faces[a].cycle;
            const int L = static_cast<int>(P.size());
            const Vertex u = big_of_[w];
            if (u >= 0 && (u == s1 || u == s2)) {
                Vertex up = u == s1 ? s2 : s1;
                auto C = walk_from(P, u, other_neighbor(P, u, up));
                Vertex wn = other_neighbor(dt_.faces[w].cycle, up, u);
                int c = 2;
                auto even_color = [&](int j, int cc) { return (j / 2) % 2 == 1 ? cc : other23(cc); };
                if (even_color(L - 2, c) == f_[wn]) c = 3;
                for (int j = 1; j <= L - 2; ++j) set(C[j], j % 2 == 1 ? 1 : even_color(j, c));
                big_of_[a] = u;
                info_[a] = {Kind::Zero, std::move(C), -1};
            } else if (u >= 0 && (g_.has_edge(u, s1) || g_.has_edge(u, s2))) {
                Vertex up = g_.has_edge(u, s1) ? s1 : s2;
                Vertex z = up == s1 ? s2 : s1;
                auto C = walk_from(P, up, other_neighbor(P, up, z));
                if (L == 4) {
                    set(C[1], other23(f_[z]));
                    set(C[2], 1);
                } else {
                    make_big(C[L - 3], a);
                    for (int j = 1; j <= L - 2; ++j)
                        if (j != L - 3 && (L - j) % 2 == 0) set(C[j], 1);
                    const int cz = f_[z], co = other23(cz);
                    for (int d = 5; d < L; d += 2) set(C[L - d], ((L - 1 - d) / 2) % 2 == 0 ? co : cz);
                }
                info_[a] = {Kind::Two, std::move(C), u};
            } else {
                if ((f_[s1] == 1) == (f_[s2] == 1))
                    throw InternalError("1-position face without exactly one shared vertex colored 1");
                Vertex vp = f_[s1] == 1 ? s1 : s2;
                Vertex z = vp == s1 ? s2 : s1;
                auto C = walk_from(P, z, other_neighbor(P, z, vp));
                make_big(C[L - 2], a);
                const int cz = f_[z], co = other23(cz);
                for (int j = 1; j <= L - 3; ++j) set(C[j], j % 2 == 1 ? 1 : ((j / 2) % 2 == 0 ? cz : co));
                info_[a] = {Kind::One, std::move(C), -1};
            }
        }
    }

    void euler_tour() {
        const int F = dt_.face_count();
        tin_.assign(F, 0);
        tout_.assign(F, 0);
        std::vector<std::vector<int>> children(F);
        for (int a : dt_.bfs_order)
            if (dt_.parent[a] >= 0) children[dt_.parent[a]].push_back(a);
        int t = 0;
        std::vector<std::pair<int, size_t>> stack{{dt_.root, 0}};
        tin_[dt_.root] = t++;
        while (!stack.empty()) {
            auto& [a, i] = stack.back();
            if (i < children[a].size()) {
                int c = children[a][i++];
                tin_[c] = t++;
                stack.push_back({c, 0});
            } else {
                tout_[a] = t;
                stack.pop_back();
            }
        }
    }

    bool descends(int face, int ancestor) const {
        return tin_[ancestor] <= tin_[face] && tin_[face] < tout_[ancestor];
    }

    bool colored_big(Vertex x) const { return home_[x] >= 0 && f_[x] > 0; }

    // Colored big vertices at exactly distance d from x (ascending).
    std::vector<Vertex> colored_bigs_at(Vertex x, int d) {
        std::vector<Vertex> out;
        for (auto [y, dy] : bs_.run(x, d))
            if (dy == d && colored_big(y)) out.push_back(y);
        std::sort(out.begin(), out.end());
        return out;
    }

    // Exhaustive assignment of {4,...,7} to the big vertices arising from a
    // 4-face, lexicographically first.
    void local_completion(const std::vector<Vertex>& arising, int face) {
        const size_t m = arising.size();
        std::vector<std::vector<std::pair<Vertex, int>>> near(m);
        for (size_t i = 0; i < m; ++i)
            for (auto [y, d] : bs_.run(arising[i], 7))
                if (y != arising[i] && home_[y] >= 0) near[i].emplace_back(y, d);
        std::vector<Color> val(g_.vertex_count(), 0);
        for (Vertex x : arising) val[x] = -1;
        std::function<bool(size_t)> go = [&](size_t i) {
            if (i == m) return true;
            for (Color c = 4; c <= 7; ++c) {
                bool ok = true;
                for (auto [y, d] : near[i]) {
                    Color cy = val[y] > 0 ? val[y] : f_[y];
                    if (val[y] == -1 || cy == 0) continue;
                    if (conflicts(c, cy, d)) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                val[arising[i]] = c;
                if (go(i + 1)) return true;
                val[arising[i]] = -1;
            }
            return false;
        };
        if (!go(0)) throw InternalError("no big-vertex completion around 4-face " + std::to_string(face));
        for (Vertex x : arising) f_[x] = val[x];
    }

    void step2() {
        for (int a : dt_.bfs_order) {
            const auto& P = dt_.faces[a].cycle;
            const int L = static_cast<int>(P.size());
            const bool is_root = a == dt_.root;
            if (is_root && big_of_[a] >= 0) f_[big_of_[a]] = 4;

            std::vector<Vertex> arising;
            for (auto [x, d] : bs_.run(std::span<const Vertex>(P), 2))
                if (d >= 1 && home_[x] >= 0 && f_[x] == 0 && descends(home_[x], a)) arising.push_back(x);
            if (arising.empty()) continue;
            std::sort(arising.begin(), arising.end());

            const Kind kind = info_[a].kind;
            if ((is_root && big_of_[a] < 0) || (!is_root && (kind == Kind::One || kind == Kind::Two) && L == 4)) {
                local_completion(arising, a);
                continue;
            }

            std::vector<Vertex> C;
            int lo = 2, hi = 0;
            Subcase sub = Subcase::S1a;
            Perm perm;
            if (is_root) {
                C = walk_from(P, big_of_[a], P[(index_of(P, big_of_[a]) + 1) % L]);
                hi = L - 2;
            } else if (kind == Kind::Zero) {
                C = info_[a].walk;
                hi = L - 2;
                const Vertex u = C[0], up = C[L - 1];
                auto rs = colored_bigs_at(up, 3);
                if (f_[u] >= 6) {
                    sub = Subcase::S1b;
                    perm.s67 = f_[u] == 7;
                } else {
                    sub = Subcase::S1a;
                    perm.s45 = f_[u] == 5;
                    perm.s67 = std::any_of(rs.begin(), rs.end(), [&](Vertex b) { return f_[b] == 6; });
                }
            } else if (kind == Kind::One) {
                const auto& W = info_[a].walk;
                C.resize(L);
                for (int i = 0; i <= L - 2; ++i) C[i] = W[L - 2 - i];
                C[L - 1] = W[L - 1];
                hi = L - 3;
                const Vertex v = C[0], z = C[L - 2];
                Vertex p = -1, r = -1;
                for (Vertex y : colored_bigs_at(C[L - 3], 1))
                    if (y != v) {
                        p = y;
                        break;
                    }
                for (Vertex y : colored_bigs_at(z, 2))
                    if (y != v && y != p) {
                        r = y;
                        break;
                    }
                auto col = [&](Vertex x) { return x >= 0 ? f_[x] : 0; };
                Color vb;
                std::vector<std::pair<Vertex, Color>> targets;
                if (f_[v] >= 6) {
                    sub = Subcase::S2a;
                    vb = f_[v];
                    targets = {{p, 4}, {r, 5}};
                } else if (col(p) >= 6) {
                    sub = Subcase::S2b;
                    vb = f_[p];
                    targets = {{v, 4}, {r, 5}};
                } else if (col(r) >= 6) {
                    sub = Subcase::S2c;
                    vb = f_[r];
                    targets = {{v, 4}, {p, 5}};
                } else if (p < 0) {
                    sub = Subcase::S2b;
                    vb = 6;
                    targets = {{v, 4}, {r, 5}};
                } else {
                    sub = Subcase::S2c;
                    vb = 6;
                    targets = {{v, 4}, {p, 5}};
                }
                perm.s67 = vb == 7;
                perm.s45 = first_target_mismatch(targets);
            } else {
                const Vertex u = info_[a].u, v = big_of_[a];
                C.push_back(u);
                C.insert(C.end(), info_[a].walk.begin(), info_[a].walk.end());
                hi = L - 4;
                const Vertex z = C[L];
                Vertex r = -1;
                for (Vertex y : colored_bigs_at(z, 2))
                    if (y != u && y != v) {
                        r = y;
                        break;
                    }
                std::vector<std::pair<Vertex, Color>> targets;
                if (f_[u] >= 6) {
                    sub = Subcase::S3b;
                    perm.s67 = f_[u] == 7;
                    targets = {{v, 4}, {r, 5}};
                } else if (f_[v] >= 6) {
                    sub = Subcase::S3a;
                    perm.s67 = f_[v] == 7;
                    targets = {{u, 4}, {r, 5}};
                } else {
                    sub = Subcase::S3c;
                    perm.s67 = r >= 0 && f_[r] == 7;
                    targets = {{v, 4}, {u, 5}};
                }
                perm.s45 = first_target_mismatch(targets);
            }

            auto seq = pattern_sequence(sub, L);
            if (!seq)
                throw InternalError("no pattern row for subcase " + subcase_name(sub) + " and face length " +
                                    std::to_string(L));
            for (Vertex x : arising) {
                auto [j, d] = slot_of(C, x);
                if (j < lo || j > hi || (j - lo) % 2 != (d == 2 ? 0 : 1))
                    throw InternalError("big vertex " + std::to_string(x) + " arising from face " +
                                        std::to_string(a) + " at unexpected slot " + std::to_string(j));
                f_[x] = perm((*seq)[j - lo]);
            }
        }
    }

    bool first_target_mismatch(const std::vector<std::pair<Vertex, Color>>& targets) const {
        for (auto [x, want] : targets)
            if (x >= 0) return f_[x] != want;
        return false;
    }

    // Position on C of the unique nearest vertex to x, and its distance.
    std::pair<int, int> slot_of(const std::vector<Vertex>& C, Vertex x) {
        bs_.run(x, 2);
        int best = kUnreachable, at = -1, ties = 0;
        for (size_t j = 0; j < C.size(); ++j) {
            int d = bs_.distance(C[j]);
            if (d < best) {
                best = d;
                at = static_cast<int>(j);
                ties = 1;
            } else if (d == best) {
                ++ties;
            }
        }
        if (best == kUnreachable || ties != 1)
            throw InternalError("big vertex " + std::to_string(x) + " has no unique nearest face vertex");
        return {at, best};
    }

    const Graph& g_;
    DualTrees dt_;
    BallSearch bs_;
    std::vector<Color> f_;
    std::vector<int> home_;
    std::vector<Vertex> big_of_;
    std::vector<FaceInfo> info_;
    std::vector<int> tin_, tout_;
};

}  // namespace

OuterplanarEmbedding checked_embedding(const Graph& g, const std::optional<OuterplanarEmbedding>& emb) {
    if (emb) {
        auto chk = validate_embedding(g, *emb);
        if (!chk.valid) throw PreconditionError("invalid embedding: " + chk.defect);
        return *emb;
    }
    auto r = recognize_outerplanar(g);
    if (!r.embedding) throw PreconditionError("not outerplanar: " + r.obstruction);
    return std::move(*r.embedding);
}

ColorerResult color_theorem1(const Graph& g, const std::optional<OuterplanarEmbedding>& emb, ColorOptions opt) {
    if (!opt.unchecked) {
        auto rep = structural_report(g);
        if (!rep.two_connected) throw PreconditionError("graph is not 2-connected");
        if (!rep.bipartite) throw PreconditionError("graph is not bipartite");
        if (rep.max_degree > 3) throw PreconditionError("graph is not subcubic");
    }
    auto e = checked_embedding(g, emb);
    if (e.blocks.size() != 1) throw PreconditionError("embedding must consist of a single block");
    return Theorem1(g, e).run();
}

}  // namespace packfold
