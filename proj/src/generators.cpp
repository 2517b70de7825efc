#include "gspec/graph.hpp"

#include <string>

namespace gspec {

Graph gen_star(std::size_t n) {
    if (n < 2) throw std::invalid_argument("star needs at least 2 vertices, got " + std::to_string(n));
    GraphBuilder b(n);
    for (std::size_t leaf = 1; leaf < n; ++leaf) b.add_edge(0, leaf);
    return b.build();
}

Graph gen_complete(std::size_t k) {
    if (k < 1) throw std::invalid_argument("complete graph needs at least 1 vertex");
    GraphBuilder b(k);
    for (std::size_t u = 0; u < k; ++u) {
        for (std::size_t v = u + 1; v < k; ++v) b.add_edge(u, v);
    }
    return b.build();
}

Graph gen_graph_c(std::size_t k) {
    if (k < 2) throw std::invalid_argument("graph C(k) needs k >= 2, got " + std::to_string(k));
    constexpr std::size_t pairs = 9;
    Graph g = gen_complete(k);
    const Graph k2 = gen_complete(2);
    for (std::size_t p = 0; p < pairs; ++p) g = disjoint_union(g, k2);
    return g;
}

Graph gen_bipartite_b() {
    constexpr std::size_t part = 17;
    GraphBuilder b(2 * part);
    b.add_edge(0, part);
    for (std::size_t x = 1; x < part; ++x) {
        for (std::size_t y = part; y < 2 * part; ++y) b.add_edge(x, y);
    }
    return b.build();
}

}  // namespace gspec
