#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bchroma {

/// Vertices are numbered 1..n throughout the library.
using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph. Immutable after construction.
///
/// Edges are stored canonically: each as (u, v) with u < v, sorted and
/// deduplicated, so two graphs built from the same edge set compare equal
/// regardless of the order or orientation the pairs were given in.
class Graph {
public:
    /// Throws GraphError on n < 1, an endpoint outside 1..n, or a self-loop.
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    int order() const { return n_; }
    std::size_t size() const { return edges_.size(); }
    const std::vector<Edge> &edges() const { return edges_; }

    std::span<const Vertex> neighbours(Vertex v) const;
    int degree(Vertex v) const { return static_cast<int>(neighbours(v).size()); }
    bool adjacent(Vertex u, Vertex v) const;

    bool is_connected() const;
    /// K1: a single vertex and no edges.
    bool is_trivial() const { return n_ == 1; }

    friend bool operator==(const Graph &a, const Graph &b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    void check_vertex(Vertex v) const;

    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;  // adjacency_[v - 1], sorted
};

Graph build_graph(int n, std::span<const Edge> edges);

/// Δ(G).
int max_degree(const Graph &g);

// Generators. Numbering is fixed:
//   path/cycle           1..n in traversal order
//   complete_bipartite   left side 1..a, right side a+1..a+b
//   wheel(n)             rim cycle 1..n, hub n+1
//   sunlet(n)            cycle 1..n, pendant of i is n+i
//   closed_ladder(n)     inner cycle 1..n, outer cycle n+1..2n, rung i -- n+i
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph complete_bipartite(int a, int b);
Graph wheel(int n);
Graph sunlet(int n);
Graph closed_ladder(int n);

/// Random spanning tree plus each remaining pair with probability
/// edge_percent/100. Uses raw mt19937_64 output only, so the graph for a
/// given seed is the same on every platform.
Graph random_connected_graph(int n, std::uint64_t seed, int edge_percent = 50);

/// G ⊙ H: vertex i of g keeps its number; its copy of h occupies
/// |V(g)| + (i-1)|V(h)| + 1 .. |V(g)| + i|V(h)|, and i is joined to all of it.
Graph corona(const Graph &g, const Graph &h);
Graph corona_with_k1(const Graph &g);

/// G □ H: pair (u, w) is vertex (w-1)|V(g)| + u.
Graph cartesian_product(const Graph &g, const Graph &h);

}  // namespace bchroma
