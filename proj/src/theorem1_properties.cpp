#include "packfold/theorem1_properties.hpp"

#include <algorithm>
#include <stdexcept>

namespace packfold {

Theorem1Report verify_theorem1_properties(const Graph& g, const PackingColoring& c,
                                          const OuterplanarEmbedding& emb) {
    if (!c.big) throw std::invalid_argument("coloring carries no big-vertex set");
    if (static_cast<int>(c.colors.size()) != g.vertex_count())
        throw std::invalid_argument("coloring size does not match the graph");
    Theorem1Report r;
    auto fail = [&](int p, std::vector<int> w, std::string msg) {
        r.ok = false;
        r.failures.push_back({p, std::move(w), std::move(msg)});
    };
    const int n = g.vertex_count();
    for (Vertex v = 0; v < n; ++v) {
        if (c.colors[v] == 1) continue;
        for (Vertex u : g.neighbors(v))
            if (c.colors[u] != 1) {
                fail(1, {v, u}, "adjacent vertices " + std::to_string(v) + " and " + std::to_string(u) +
                                    " both avoid color 1");
                break;
            }
    }
    std::vector<bool> is_big(n, false);
    for (Vertex b : *c.big) is_big.at(b) = true;
    auto dt = build_dual_trees(g, emb);
    for (int f = 0; f < dt.face_count(); ++f) {
        const auto& cyc = dt.faces[f].cycle;
        int cnt = static_cast<int>(std::count_if(cyc.begin(), cyc.end(), [&](Vertex v) { return is_big[v]; }));
        bool good = cyc.size() >= 6 ? cnt == 1 : cnt <= 1;
        if (!good)
            fail(2, {f}, "face " + std::to_string(f) + " of size " + std::to_string(cyc.size()) + " holds " +
                             std::to_string(cnt) + " big vertices");
    }
    BallSearch bs(g);
    std::vector<Vertex> bigs = *c.big;
    std::sort(bigs.begin(), bigs.end());
    for (Vertex b : bigs) {
        for (auto [x, d] : bs.run(b, 3))
            if (x > b && is_big[x])
                fail(3, {b, x}, "big vertices " + std::to_string(b) + " and " + std::to_string(x) +
                                    " at distance " + std::to_string(d));
    }
    for (Vertex v = 0; v < n; ++v) {
        if (c.colors[v] < 6) continue;
        for (auto [x, d] : bs.run(v, 5))
            if (x > v && c.colors[x] >= 6)
                fail(4, {v, x}, "very big vertices " + std::to_string(v) + " and " + std::to_string(x) +
                                    " at distance " + std::to_string(d));
    }
    return r;
}

}  // namespace packfold
