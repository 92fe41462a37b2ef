#include "packfold/generators.hpp"

#include <algorithm>
#include <climits>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace packfold {

namespace {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

GeneratedGraph recognized(int n, const EdgeList& edges) {
    Graph g(n, edges);
    return {g, embedding_or_throw(g)};
}

// Single block given by its outer cycle; every other edge is a chord.
GeneratedGraph single_block(int n, const std::vector<Vertex>& outer, const EdgeList& edges) {
    Graph g(n, edges);
    EmbeddingBlock b;
    b.outer_cycle = outer;
    std::set<std::pair<Vertex, Vertex>> on_cycle;
    for (size_t i = 0; i < outer.size(); ++i) {
        Vertex a = outer[i], c = outer[(i + 1) % outer.size()];
        on_cycle.insert({std::min(a, c), std::max(a, c)});
    }
    for (auto e : g.edges())
        if (!on_cycle.count(e)) b.chords.push_back(e);
    return {g, OuterplanarEmbedding{{b}}};
}

}  // namespace

GeneratedGraph gen_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    EdgeList e;
    std::vector<Vertex> outer(n);
    for (int i = 0; i < n; ++i) {
        e.emplace_back(i, (i + 1) % n);
        outer[i] = i;
    }
    return single_block(n, outer, e);
}

GeneratedGraph gen_path(int n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    EdgeList e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return {Graph(n, e), {}};
}

GeneratedGraph gen_prop5_family(int k, int iterations) {
    if (k < 4 || k % 2 != 0) throw std::invalid_argument("prop5 family needs an even k >= 4");
    if (iterations < 1) throw std::invalid_argument("prop5 family needs at least one iteration");
    std::vector<Vertex> outer(k);
    EdgeList edges;
    std::vector<int> deg(k, 2);
    for (int i = 0; i < k; ++i) {
        outer[i] = i;
        edges.emplace_back(i, (i + 1) % k);
    }
    int n = k;
    for (int round = 2; round <= iterations; ++round) {
        const int L = static_cast<int>(outer.size());
        std::vector<bool> paired(L, false);
        std::vector<std::vector<Vertex>> insert_after(L);
        for (int p = 0; p < L; ++p) {
            int q = (p + 1) % L;
            if (paired[p] || paired[q] || deg[outer[p]] != 2 || deg[outer[q]] != 2) continue;
            paired[p] = paired[q] = true;
            Vertex prev = outer[p];
            for (int j = 0; j < k - 2; ++j) {
                deg.push_back(2);
                insert_after[p].push_back(n);
                edges.emplace_back(prev, n);
                prev = n++;
            }
            edges.emplace_back(prev, outer[q]);
            deg[outer[p]] = deg[outer[q]] = 3;
        }
        std::vector<Vertex> next;
        for (int p = 0; p < L; ++p) {
            next.push_back(outer[p]);
            next.insert(next.end(), insert_after[p].begin(), insert_after[p].end());
        }
        outer = std::move(next);
    }
    return single_block(n, outer, edges);
}

GeneratedGraph gen_fig7() {
    EdgeList e;
    for (int base : {0, 7}) {
        const int u = base, u1 = base + 1, u2 = base + 2, u3 = base + 3, u4 = base + 4, x = base + 5, y = base + 6;
        e.insert(e.end(), {{u, u1}, {u, u2}, {u1, u3}, {u2, u4}, {u3, u4}, {u1, x}, {u3, x}, {u2, y}, {u4, y}});
    }
    e.emplace_back(0, 7);
    return recognized(14, e);
}

GeneratedGraph gen_g25() {
    EdgeList e;
    for (int c = 0; c < 6; ++c)
        for (int i = 0; i < 5; ++i) e.emplace_back(5 * c + i, 5 * c + (i + 1) % 5);
    for (int i = 0; i < 5; ++i) e.emplace_back(i, 5 + 5 * i);
    return recognized(30, e);
}

GeneratedGraph gen_triangle_gadget() {
    EdgeList e;
    for (int c = 0; c < 4; ++c)
        for (int i = 0; i < 3; ++i) e.emplace_back(3 * c + i, 3 * c + (i + 1) % 3);
    for (int i = 0; i < 3; ++i) e.emplace_back(i, 3 + 3 * i);
    return recognized(12, e);
}

GeneratedGraph gen_kary_tree(int k, int depth) {
    if (k < 3) throw std::invalid_argument("k-ary tree needs k >= 3");
    if (depth < 0) throw std::invalid_argument("negative depth");
    EdgeList e;
    std::vector<Vertex> level{0};
    int n = 1;
    for (int d = 0; d < depth; ++d) {
        std::vector<Vertex> next;
        const int kids = d == 0 ? k : k - 1;
        for (Vertex p : level)
            for (int c = 0; c < kids; ++c) {
                e.emplace_back(p, n);
                next.push_back(n++);
            }
        level = std::move(next);
    }
    return {Graph(n, e), {}};
}

Constraints Constraints::parse(const std::string& csv) {
    Constraints c;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        if (tok == "bipartite") c.bipartite = true;
        else if (tok == "subcubic") c.subcubic = true;
        else if (tok == "triangle_free") c.triangle_free = true;
        else if (tok == "two_connected") c.two_connected = true;
        else if (tok.rfind("maxdeg=", 0) == 0) c.max_degree = std::stoi(tok.substr(7));
        else throw std::invalid_argument("unknown constraint: " + tok);
    }
    return c;
}

std::string Constraints::to_string() const {
    std::vector<std::string> parts;
    if (bipartite) parts.push_back("bipartite");
    if (subcubic) parts.push_back("subcubic");
    if (triangle_free) parts.push_back("triangle_free");
    if (two_connected) parts.push_back("two_connected");
    if (max_degree) parts.push_back("maxdeg=" + std::to_string(*max_degree));
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + parts[i];
    return out;
}

int Constraints::degree_cap() const {
    int d = max_degree.value_or(INT_MAX);
    if (subcubic) d = std::min(d, 3);
    return d;
}

namespace {

class RandomBuilder {
public:
    RandomBuilder(std::uint64_t seed, const Constraints& c) : rng_(seed), c_(c), cap_(c.degree_cap()) {}

    int min_block() const { return c_.triangle_free || c_.bipartite ? 4 : 3; }
    bool block_len_ok(int L) const { return L >= min_block() && (!c_.bipartite || L % 2 == 0); }

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin(double p) { return std::bernoulli_distribution(p)(rng_); }

    Vertex new_vertex() {
        deg_.push_back(0);
        return static_cast<Vertex>(deg_.size()) - 1;
    }

    void add_edge(Vertex a, Vertex b) {
        edges_.emplace_back(a, b);
        ++deg_[a];
        ++deg_[b];
    }

    // Adds a cycle through `cyc` and random non-crossing chords.
    void block(const std::vector<Vertex>& cyc) {
        const int L = static_cast<int>(cyc.size());
        for (int i = 0; i < L; ++i) add_edge(cyc[i], cyc[(i + 1) % L]);
        EmbeddingBlock b;
        b.outer_cycle = cyc;
        std::vector<std::vector<Vertex>> faces{cyc};
        const int side_min = c_.triangle_free || c_.bipartite ? 4 : 3;
        const int attempts = uniform(0, 2 * L);
        for (int t = 0; t < attempts; ++t) {
            auto& P = faces[uniform(0, static_cast<int>(faces.size()) - 1)];
            const int m = static_cast<int>(P.size());
            if (m < 2 * side_min - 2) continue;
            int i = uniform(0, m - 1), j = uniform(0, m - 1);
            if (i > j) std::swap(i, j);
            const int s1 = j - i + 1, s2 = m - (j - i) + 1;
            if (s1 < side_min || s2 < side_min) continue;
            if (c_.bipartite && (s1 % 2 != 0 || s2 % 2 != 0)) continue;
            if (deg_[P[i]] >= cap_ || deg_[P[j]] >= cap_) continue;
            add_edge(P[i], P[j]);
            b.chords.emplace_back(P[i], P[j]);
            std::vector<Vertex> f1(P.begin() + i, P.begin() + j + 1);
            std::vector<Vertex> f2(P.begin() + j, P.end());
            f2.insert(f2.end(), P.begin(), P.begin() + i + 1);
            P = std::move(f1);
            faces.push_back(std::move(f2));
        }
        blocks_.push_back(std::move(b));
    }

    std::vector<Vertex> with_spare(int need) const {
        std::vector<Vertex> out;
        for (Vertex v = 0; v < static_cast<int>(deg_.size()); ++v)
            if (deg_[v] + need <= cap_) out.push_back(v);
        return out;
    }

    GeneratedGraph two_connected(int n) {
        std::vector<Vertex> cyc;
        for (int i = 0; i < n; ++i) cyc.push_back(new_vertex());
        block(cyc);
        return finish();
    }

    Vertex pick(const std::vector<Vertex>& from) { return from[uniform(0, static_cast<int>(from.size()) - 1)]; }

    // Blocks and pendant vertices attached by gluing at a cut vertex or by
    // a bridge, as the degree budget allows.
    GeneratedGraph mixed(int n) {
        int remaining = n;
        while (remaining > 0) {
            const bool first = deg_.empty();
            const auto glue_at = with_spare(2);
            const auto bridge_at = with_spare(1);
            const bool glue = !first && !glue_at.empty() && coin(0.4);
            if (cap_ >= 2 && coin(0.55)) {
                const int hi = std::min(remaining + (glue ? 1 : 0), min_block() + 24);
                std::vector<int> lens;
                for (int L = min_block(); L <= hi; ++L)
                    if (block_len_ok(L)) lens.push_back(L);
                const bool bridged = !first && !glue && !bridge_at.empty();
                if (!lens.empty() && (!bridged || cap_ >= 3)) {
                    const int L = lens[uniform(0, static_cast<int>(lens.size()) - 1)];
                    std::vector<Vertex> cyc;
                    if (glue) cyc.push_back(pick(glue_at));
                    while (static_cast<int>(cyc.size()) < L) cyc.push_back(new_vertex());
                    remaining -= L - (glue ? 1 : 0);
                    if (bridged) add_edge(pick(bridge_at), cyc[0]);
                    block(cyc);
                    continue;
                }
            }
            Vertex v = new_vertex();
            --remaining;
            if (!first && !bridge_at.empty()) add_edge(pick(bridge_at), v);
        }
        return finish();
    }

    GeneratedGraph finish() {
        Graph g(static_cast<int>(deg_.size()), edges_);
        return {g, OuterplanarEmbedding{blocks_}};
    }

private:
    std::mt19937_64 rng_;
    Constraints c_;
    int cap_;
    std::vector<int> deg_;
    EdgeList edges_;
    std::vector<EmbeddingBlock> blocks_;
};

}  // namespace

GeneratedGraph gen_random_outerplanar(int n, std::uint64_t seed, const Constraints& c) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    RandomBuilder b(seed, c);
    if (c.two_connected) {
        if (n < 3) throw std::invalid_argument("2-connected instance needs n >= 3");
        if (c.bipartite && n % 2 != 0) throw std::invalid_argument("2-connected bipartite instance needs even n");
        if ((c.bipartite || c.triangle_free) && n < 4) throw std::invalid_argument("triangle-free cycle needs n >= 4");
        if (c.degree_cap() < 2) throw std::invalid_argument("2-connected instance needs max degree >= 2");
        return b.two_connected(n);
    }
    return b.mixed(n);
}

}  // namespace packfold
