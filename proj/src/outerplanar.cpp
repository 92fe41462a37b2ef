#include "packfold/outerplanar.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace packfold {

namespace {

using Edge = std::pair<Vertex, Vertex>;

Edge norm(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

std::string edge_str(Vertex a, Vertex b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

// Position pairs (i < j) of a block's chords; empty optional plus a
// message on the first malformed chord.
struct ChordPositions {
    std::vector<std::pair<int, int>> pos;
    std::string defect;
};

ChordPositions chord_positions(const EmbeddingBlock& b, const std::unordered_map<Vertex, int>& at) {
    ChordPositions out;
    const int L = static_cast<int>(b.outer_cycle.size());
    for (auto [x, y] : b.chords) {
        auto ix = at.find(x), iy = at.find(y);
        if (ix == at.end() || iy == at.end()) {
            out.defect = "chord " + edge_str(x, y) + " has an endpoint off the outer cycle";
            return out;
        }
        int i = std::min(ix->second, iy->second), j = std::max(ix->second, iy->second);
        if (i == j || j - i == 1 || (i == 0 && j == L - 1)) {
            out.defect = "chord " + edge_str(x, y) + " joins consecutive outer-cycle vertices";
            return out;
        }
        out.pos.emplace_back(i, j);
    }
    return out;
}

}  // namespace

EmbeddingCheck validate_embedding(const Graph& g, const OuterplanarEmbedding& emb) {
    auto fail = [](std::string msg) { return EmbeddingCheck{false, std::move(msg)}; };
    const int n = g.vertex_count();
    std::set<Edge> covered;
    for (size_t bi = 0; bi < emb.blocks.size(); ++bi) {
        const auto& b = emb.blocks[bi];
        const int L = static_cast<int>(b.outer_cycle.size());
        const std::string where = "block " + std::to_string(bi) + ": ";
        if (L < 3) return fail(where + "outer cycle shorter than 3");
        std::unordered_map<Vertex, int> at;
        for (int i = 0; i < L; ++i) {
            Vertex v = b.outer_cycle[i];
            if (v < 0 || v >= n) return fail(where + "vertex " + std::to_string(v) + " out of range");
            if (!at.emplace(v, i).second)
                return fail(where + "vertex " + std::to_string(v) + " repeated on outer cycle");
        }
        auto add = [&](Vertex x, Vertex y) -> std::string {
            if (!g.has_edge(x, y)) return where + edge_str(x, y) + " is not an edge of the graph";
            if (!covered.insert(norm(x, y)).second)
                return where + "edge " + edge_str(x, y) + " used twice";
            return {};
        };
        for (int i = 0; i < L; ++i)
            if (auto e = add(b.outer_cycle[i], b.outer_cycle[(i + 1) % L]); !e.empty()) return fail(e);
        auto cp = chord_positions(b, at);
        if (!cp.defect.empty()) return fail(where + cp.defect);
        for (auto [x, y] : b.chords)
            if (auto e = add(x, y); !e.empty()) return fail(e);
        auto pos = cp.pos;
        std::vector<int> idx(pos.size());
        for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
        std::sort(idx.begin(), idx.end(), [&](int a, int c) {
            return pos[a].first != pos[c].first ? pos[a].first < pos[c].first
                                                : pos[a].second > pos[c].second;
        });
        std::vector<int> open;
        for (int id : idx) {
            auto [i, j] = pos[id];
            while (!open.empty() && pos[open.back()].second <= i) open.pop_back();
            if (!open.empty() && j > pos[open.back()].second) {
                auto c1 = b.chords[open.back()], c2 = b.chords[id];
                return fail(where + "chords " + edge_str(c1.first, c1.second) + " and " +
                            edge_str(c2.first, c2.second) + " cross");
            }
            open.push_back(id);
        }
    }
    // Blocks must be exactly the nontrivial biconnected components.
    auto bd = block_decomposition(g);
    for (const auto& blk : bd.blocks) {
        if (blk.size() == 1) {
            if (covered.count(blk[0]))
                return fail("bridge " + edge_str(blk[0].first, blk[0].second) + " placed inside a block");
            continue;
        }
        for (auto e : blk)
            if (!covered.count(e))
                return fail("edge " + edge_str(e.first, e.second) + " missing from the embedding");
    }
    // Covered edges of one embedded block must come from one component.
    std::map<Edge, int> comp_of;
    for (size_t c = 0; c < bd.blocks.size(); ++c)
        for (auto e : bd.blocks[c]) comp_of[e] = static_cast<int>(c);
    for (size_t bi = 0; bi < emb.blocks.size(); ++bi) {
        const auto& cyc = emb.blocks[bi].outer_cycle;
        int c0 = comp_of[norm(cyc[0], cyc[1])];
        for (size_t i = 0; i < cyc.size(); ++i)
            if (comp_of[norm(cyc[i], cyc[(i + 1) % cyc.size()])] != c0)
                return fail("block " + std::to_string(bi) + " spans several biconnected components");
        for (auto [x, y] : emb.blocks[bi].chords)
            if (comp_of[norm(x, y)] != c0)
                return fail("block " + std::to_string(bi) + " has a chord from another component");
        if (bd.blocks[c0].size() != cyc.size() + emb.blocks[bi].chords.size())
            return fail("block " + std::to_string(bi) + " does not cover its biconnected component");
    }
    return {};
}

namespace {

// Degree-2 reduction of one biconnected component. Every multigraph edge
// carries the number of its sides already claimed by a removed vertex.
// An outerplanar block never needs more than two.
std::optional<EmbeddingBlock> reduce_block(const std::vector<Edge>& edges, std::string& why) {
    std::map<Vertex, std::map<Vertex, int>> adj;
    for (auto [a, b] : edges) adj[a][b] = adj[b][a] = 0;
    std::vector<Vertex> queue;
    for (auto& [v, nb] : adj)
        if (nb.size() == 2) queue.push_back(v);
    std::set<Vertex> alive;
    for (auto& [v, nb] : adj) alive.insert(v);
    struct Removal {
        Vertex v, a, b;
    };
    std::vector<Removal> removed;
    while (alive.size() > 2) {
        Vertex v = -1;
        while (!queue.empty()) {
            Vertex x = queue.back();
            queue.pop_back();
            if (alive.count(x) && adj[x].size() == 2) {
                v = x;
                break;
            }
        }
        if (v < 0) {
            why = "no degree-2 vertex left (K4 minor)";
            return std::nullopt;
        }
        auto it = adj[v].begin();
        auto [a, sa] = *it++;
        auto [b, sb] = *it;
        if (sa >= 2 || sb >= 2) {
            why = "vertex " + std::to_string(v) + " is enclosed by inner faces (K2,3 minor)";
            return std::nullopt;
        }
        adj[a].erase(v);
        adj[b].erase(v);
        adj[v].clear();
        alive.erase(v);
        auto ab = adj[a].find(b);
        if (ab != adj[a].end()) {
            int s = ++ab->second;
            adj[b][a] = s;
            if (s > 2) {
                why = "three parallel paths between " + std::to_string(a) + " and " + std::to_string(b) +
                      " (K2,3 minor)";
                return std::nullopt;
            }
        } else {
            adj[a][b] = adj[b][a] = 1;
        }
        removed.push_back({v, a, b});
        for (Vertex x : {a, b})
            if (adj[x].size() == 2) queue.push_back(x);
    }
    std::map<Vertex, Vertex> next;
    auto base = alive.begin();
    Vertex a0 = *base, b0 = *std::next(base);
    next[a0] = b0;
    next[b0] = a0;
    for (auto r = removed.rbegin(); r != removed.rend(); ++r) {
        if (next[r->a] == r->b) {
            next[r->v] = r->b;
            next[r->a] = r->v;
        } else if (next[r->b] == r->a) {
            next[r->v] = r->a;
            next[r->b] = r->v;
        } else {
            throw std::logic_error("outer cycle reconstruction lost adjacency");
        }
    }
    EmbeddingBlock blk;
    Vertex start = next.begin()->first;
    Vertex x = start;
    do {
        blk.outer_cycle.push_back(x);
        x = next[x];
    } while (x != start);
    std::set<Edge> outer;
    const size_t L = blk.outer_cycle.size();
    for (size_t i = 0; i < L; ++i) outer.insert(norm(blk.outer_cycle[i], blk.outer_cycle[(i + 1) % L]));
    for (auto e : edges)
        if (!outer.count(e)) blk.chords.push_back(e);
    return blk;
}

}  // namespace

Recognition recognize_outerplanar(const Graph& g) {
    Recognition out;
    OuterplanarEmbedding emb;
    auto bd = block_decomposition(g);
    for (const auto& blk : bd.blocks) {
        if (blk.size() == 1) continue;
        std::string why;
        auto eb = reduce_block(blk, why);
        if (!eb) {
            out.obstruction = why;
            return out;
        }
        emb.blocks.push_back(std::move(*eb));
    }
    out.embedding = std::move(emb);
    return out;
}

OuterplanarEmbedding embedding_or_throw(const Graph& g) {
    auto r = recognize_outerplanar(g);
    if (!r.embedding) throw std::invalid_argument("graph is not outerplanar: " + r.obstruction);
    return std::move(*r.embedding);
}

const LEdge& DualTrees::l_edge(int a, int b) const {
    for (const auto& e : l_edges)
        if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) return e;
    throw std::invalid_argument("nodes " + std::to_string(a) + " and " + std::to_string(b) +
                                " are not adjacent in L_G");
}

namespace {

// Inner faces of one block by sweeping the outer cycle with a stack.
std::vector<std::vector<Vertex>> block_faces(const EmbeddingBlock& b) {
    const int L = static_cast<int>(b.outer_cycle.size());
    std::unordered_map<Vertex, int> at;
    for (int i = 0; i < L; ++i) at[b.outer_cycle[i]] = i;
    std::vector<std::vector<int>> closing(L);  // chord left ends, keyed by right end
    for (auto [x, y] : b.chords) {
        int i = at[x], j = at[y];
        if (i > j) std::swap(i, j);
        closing[j].push_back(i);
    }
    std::vector<std::vector<Vertex>> faces;
    std::vector<int> stack;
    for (int j = 0; j < L; ++j) {
        auto& cl = closing[j];
        std::sort(cl.rbegin(), cl.rend());
        for (int i : cl) {
            std::vector<Vertex> face;
            auto it = std::find(stack.begin(), stack.end(), i);
            for (auto p = it; p != stack.end(); ++p) face.push_back(b.outer_cycle[*p]);
            face.push_back(b.outer_cycle[j]);
            stack.erase(it + 1, stack.end());
            faces.push_back(std::move(face));
        }
        stack.push_back(j);
    }
    std::vector<Vertex> last;
    for (int p : stack) last.push_back(b.outer_cycle[p]);
    faces.push_back(std::move(last));
    return faces;
}

}  // namespace

DualTrees build_dual_trees(const Graph& g, const OuterplanarEmbedding& emb) {
    auto chk = validate_embedding(g, emb);
    if (!chk.valid) throw std::invalid_argument("invalid embedding: " + chk.defect);
    const int n = g.vertex_count();
    DualTrees dt;
    dt.vertex_faces.assign(n, {});
    std::vector<std::vector<int>> vertex_blocks(n);
    for (size_t bi = 0; bi < emb.blocks.size(); ++bi) {
        for (auto& f : block_faces(emb.blocks[bi])) dt.faces.push_back({std::move(f), static_cast<int>(bi)});
        for (Vertex v : emb.blocks[bi].outer_cycle) vertex_blocks[v].push_back(static_cast<int>(bi));
    }
    const int F = dt.face_count();
    dt.t_adj.assign(F, {});
    std::map<Edge, std::vector<int>> edge_faces;
    std::set<Edge> block_edges;
    for (int f = 0; f < F; ++f) {
        const auto& c = dt.faces[f].cycle;
        for (size_t i = 0; i < c.size(); ++i) {
            Edge e = norm(c[i], c[(i + 1) % c.size()]);
            edge_faces[e].push_back(f);
            block_edges.insert(e);
        }
        for (Vertex v : c) dt.vertex_faces[v].push_back(f);
    }
    for (auto& [e, fs] : edge_faces)
        if (fs.size() == 2) {
            dt.t_adj[fs[0]].push_back(fs[1]);
            dt.t_adj[fs[1]].push_back(fs[0]);
            dt.l_edges.push_back({fs[0], fs[1], LinkKind::SharedEdge, e.first, e.second});
        }
    for (auto& a : dt.t_adj) std::sort(a.begin(), a.end());

    dt.node_of_vertex.assign(n, -1);
    for (Vertex v = 0; v < n; ++v)
        if (dt.vertex_faces[v].empty()) {
            dt.node_of_vertex[v] = F + static_cast<int>(dt.d_vertices.size());
            dt.d_vertices.push_back(v);
        }
    auto lowest_face = [&](Vertex v) { return dt.vertex_faces[v].front(); };
    auto in_d = [&](Vertex v) { return dt.node_of_vertex[v] >= 0; };

    for (auto [u, v] : g.edges()) {
        if (block_edges.count({u, v})) continue;
        if (in_d(u) && in_d(v)) {
            dt.l_edges.push_back({dt.node_of_vertex[u], dt.node_of_vertex[v], LinkKind::DEdge, u, v});
        } else if (in_d(u) || in_d(v)) {
            Vertex d = in_d(u) ? u : v, a = in_d(u) ? v : u;
            dt.l_edges.push_back({lowest_face(a), dt.node_of_vertex[d], LinkKind::Bridge, a, d});
        } else {
            dt.l_edges.push_back({lowest_face(u), lowest_face(v), LinkKind::Bridge, u, v});
        }
    }
    for (Vertex u = 0; u < n; ++u) {
        const auto& bl = vertex_blocks[u];
        if (bl.size() < 2) continue;
        auto face_in = [&](int b) {
            for (int f : dt.vertex_faces[u])
                if (dt.faces[f].block == b) return f;
            throw std::logic_error("cut vertex without a face in its block");
        };
        int a1 = face_in(bl[0]);
        for (size_t i = 1; i < bl.size(); ++i) dt.l_edges.push_back({a1, face_in(bl[i]), LinkKind::CutVertex, u, -1});
    }
    dt.l_adj.assign(dt.l_node_count(), {});
    for (const auto& e : dt.l_edges) {
        dt.l_adj[e.a].push_back(e.b);
        dt.l_adj[e.b].push_back(e.a);
    }
    for (auto& a : dt.l_adj) std::sort(a.begin(), a.end());
    return dt;
}

RootedTree root_forest(const std::vector<std::vector<int>>& adj) {
    const int N = static_cast<int>(adj.size());
    RootedTree t;
    t.parent.assign(N, -1);
    t.depth.assign(N, -1);
    std::vector<int> comp(N, -1);
    std::vector<std::vector<int>> members;
    for (int s = 0; s < N; ++s) {
        if (comp[s] >= 0) continue;
        members.emplace_back();
        std::vector<int> q{s};
        comp[s] = static_cast<int>(members.size()) - 1;
        for (size_t h = 0; h < q.size(); ++h)
            for (int y : adj[q[h]])
                if (comp[y] < 0) {
                    comp[y] = comp[s];
                    q.push_back(y);
                }
        members.back() = std::move(q);
    }
    std::vector<int> dist(N, -1), from(N, -1);
    for (auto& mem : members) {
        size_t edges2 = 0;
        for (int x : mem) edges2 += adj[x].size();
        if (edges2 != 2 * (mem.size() - 1)) throw std::invalid_argument("graph is not a forest");
        // Tree center: middle of a longest path.
        auto far = [&](int src) {
            std::vector<int> q{src};
            dist[src] = 0;
            from[src] = -1;
            for (size_t h = 0; h < q.size(); ++h)
                for (int y : adj[q[h]])
                    if (dist[y] < 0) {
                        dist[y] = dist[q[h]] + 1;
                        from[y] = q[h];
                        q.push_back(y);
                    }
            int best = q.back();
            for (int x : q) dist[x] = -1;
            return best;
        };
        int a = far(mem[0]);
        int b = far(a);
        std::vector<int> path;
        for (int x = b; x >= 0; x = from[x]) path.push_back(x);
        const size_t D = path.size() - 1;
        int root = path[D / 2];
        if (D % 2 == 1) root = std::min(root, path[D / 2 + 1]);
        t.roots.push_back(root);
        size_t start = t.order.size();
        t.order.push_back(root);
        t.depth[root] = 0;
        for (size_t h = start; h < t.order.size(); ++h) {
            int x = t.order[h];
            for (int y : adj[x])
                if (t.depth[y] < 0) {
                    t.depth[y] = t.depth[x] + 1;
                    t.parent[y] = x;
                    t.order.push_back(y);
                }
        }
    }
    return t;
}

DualTrees root_and_order(DualTrees dt) {
    if (dt.faces.empty()) throw std::invalid_argument("T_G is empty");
    auto t = root_forest(dt.t_adj);
    if (t.roots.size() != 1) throw std::invalid_argument("T_G is not connected");
    dt.root = t.roots[0];
    dt.bfs_order = std::move(t.order);
    dt.parent = std::move(t.parent);
    dt.depth = std::move(t.depth);
    return dt;
}

std::pair<Vertex, Vertex> shared_edge(const DualTrees& dt, int a, int b) {
    const auto& adj = dt.t_adj.at(a);
    if (!std::binary_search(adj.begin(), adj.end(), b))
        throw std::invalid_argument("faces " + std::to_string(a) + " and " + std::to_string(b) +
                                    " are not adjacent");
    const auto& ca = dt.faces[a].cycle;
    const auto& cb = dt.faces[b].cycle;
    std::vector<Vertex> common;
    for (Vertex v : ca)
        if (std::find(cb.begin(), cb.end(), v) != cb.end()) common.push_back(v);
    if (common.size() != 2) throw std::logic_error("adjacent faces share " + std::to_string(common.size()) + " vertices");
    return {common[0], common[1]};
}

}  // namespace packfold
