#include "bchroma/graph.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace bchroma {

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
    if (n < 1) throw GraphError("graph needs at least one vertex, got n=" + std::to_string(n));
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n)
            throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") has an endpoint outside 1.." + std::to_string(n));
        if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
        edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    adjacency_.resize(static_cast<std::size_t>(n));
    for (auto [u, v] : edges_) {
        adjacency_[u - 1].push_back(v);
        adjacency_[v - 1].push_back(u);
    }
    for (auto &nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

void Graph::check_vertex(Vertex v) const {
    if (v < 1 || v > n_)
        throw GraphError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
}

std::span<const Vertex> Graph::neighbours(Vertex v) const {
    check_vertex(v);
    return adjacency_[v - 1];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    auto nbrs = neighbours(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

bool Graph::is_connected() const {
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::vector<Vertex> stack{1};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : adjacency_[v - 1]) {
            if (seen[w - 1]) continue;
            seen[w - 1] = 1;
            ++reached;
            stack.push_back(w);
        }
    }
    return reached == n_;
}

Graph build_graph(int n, std::span<const Edge> edges) { return Graph(n, edges); }

int max_degree(const Graph &g) {
    int best = 0;
    for (Vertex v = 1; v <= g.order(); ++v) best = std::max(best, g.degree(v));
    return best;
}

namespace {

void require(bool ok, const char *family, const char *what, int value) {
    if (!ok) throw GraphError(std::string(family) + ": " + what + ", got " + std::to_string(value));
}

}  // namespace

Graph path(int n) {
    require(n >= 1, "path", "n must be >= 1", n);
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, edges);
}

Graph cycle(int n) {
    require(n >= 3, "cycle", "n must be >= 3", n);
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(n, 1);
    return Graph(n, edges);
}

Graph complete(int n) {
    require(n >= 1, "complete", "n must be >= 1", n);
    std::vector<Edge> edges;
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph complete_bipartite(int a, int b) {
    require(a >= 1, "complete_bipartite", "a must be >= 1", a);
    require(b >= 1, "complete_bipartite", "b must be >= 1", b);
    std::vector<Edge> edges;
    for (Vertex u = 1; u <= a; ++u)
        for (Vertex v = a + 1; v <= a + b; ++v) edges.emplace_back(u, v);
    return Graph(a + b, edges);
}

Graph wheel(int n) {
    require(n >= 3, "wheel", "rim size n must be >= 3", n);
    std::vector<Edge> edges(cycle(n).edges());
    for (Vertex v = 1; v <= n; ++v) edges.emplace_back(v, n + 1);
    return Graph(n + 1, edges);
}

Graph sunlet(int n) {
    require(n >= 3, "sunlet", "n must be >= 3", n);
    return corona_with_k1(cycle(n));
}

Graph closed_ladder(int n) {
    require(n >= 3, "closed_ladder", "n must be >= 3", n);
    return cartesian_product(cycle(n), path(2));
}

Graph random_connected_graph(int n, std::uint64_t seed, int edge_percent) {
    require(n >= 1, "random_connected_graph", "n must be >= 1", n);
    require(edge_percent >= 0 && edge_percent <= 100, "random_connected_graph", "edge_percent must be in 0..100",
            edge_percent);
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    // Vertex v attaches to a uniformly chosen earlier vertex.
    for (Vertex v = 2; v <= n; ++v) edges.emplace_back(static_cast<Vertex>(rng() % static_cast<std::uint64_t>(v - 1)) + 1, v);
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v)
            if (rng() % 100 < static_cast<std::uint64_t>(edge_percent)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph corona(const Graph &g, const Graph &h) {
    const int gn = g.order();
    const int hn = h.order();
    std::vector<Edge> edges(g.edges());
    for (Vertex i = 1; i <= gn; ++i) {
        const int offset = gn + (i - 1) * hn;
        for (auto [u, v] : h.edges()) edges.emplace_back(offset + u, offset + v);
        for (Vertex w = 1; w <= hn; ++w) edges.emplace_back(i, offset + w);
    }
    return Graph(gn + gn * hn, edges);
}

Graph corona_with_k1(const Graph &g) { return corona(g, Graph(1, {})); }

Graph cartesian_product(const Graph &g, const Graph &h) {
    const int gn = g.order();
    const int hn = h.order();
    auto id = [gn](Vertex u, Vertex w) { return (w - 1) * gn + u; };
    std::vector<Edge> edges;
    edges.reserve(g.size() * static_cast<std::size_t>(hn) + h.size() * static_cast<std::size_t>(gn));
    for (Vertex w = 1; w <= hn; ++w)
        for (auto [a, b] : g.edges()) edges.emplace_back(id(a, w), id(b, w));
    for (Vertex u = 1; u <= gn; ++u)
        for (auto [a, b] : h.edges()) edges.emplace_back(id(u, a), id(u, b));
    return Graph(gn * hn, edges);
}

}  // namespace bchroma
