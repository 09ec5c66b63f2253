#include "bchroma/enumerate.hpp"

#include <string>

namespace bchroma {

namespace {

void check_cap(const Graph &g, const SearchLimits &limits) {
    if (g.order() > limits.max_enumeration_order)
        throw SearchCapExceeded("graph has " + std::to_string(g.order()) + " vertices; enumeration is capped at " +
                                std::to_string(limits.max_enumeration_order));
}

/// Every proper assignment in lexicographic order.
void for_each_proper(const Graph &g, int k, const std::function<bool(const std::vector<int> &)> &visit) {
    const int n = g.order();
    std::vector<int> colour(static_cast<std::size_t>(n), 0);
    std::function<bool(Vertex)> descend = [&](Vertex v) -> bool {
        if (v > n) return visit(colour);
        for (int c = 1; c <= k; ++c) {
            bool clash = false;
            for (Vertex w : g.neighbours(v))
                if (w < v && colour[w - 1] == c) clash = true;
            if (clash) continue;
            colour[v - 1] = c;
            if (!descend(v + 1)) return false;
        }
        colour[v - 1] = 0;
        return true;
    };
    descend(1);
}

bool enough_high_degree_vertices(const Graph &g, int k) {
    int count = 0;
    for (Vertex v = 1; v <= g.order(); ++v)
        if (g.degree(v) >= k - 1) ++count;
    return count >= k;
}

enum class Direction { Min, Max };

bool ranks_before(Direction dir, const ExtremalColouring &a, const ExtremalColouring &b) {
    if (a.stats.mean != b.stats.mean) return dir == Direction::Min ? a.stats.mean < b.stats.mean : a.stats.mean > b.stats.mean;
    if (a.stats.variance != b.stats.variance) return a.stats.variance < b.stats.variance;
    if (a.strengths != b.strengths) return a.strengths < b.strengths;
    return a.colouring.assignment() < b.colouring.assignment();
}

std::optional<ExtremalColouring> extreme(const Graph &g, int k, Direction dir, const SearchLimits &limits) {
    std::optional<ExtremalColouring> best;
    for_each_b_colouring(
        g, k,
        [&](const Colouring &c) {
            auto d = distribution(g, c);
            ExtremalColouring candidate{c, d.strengths, stats_of(d)};
            if (!best || ranks_before(dir, candidate, *best)) best = std::move(candidate);
            return true;
        },
        limits);
    return best;
}

}  // namespace

void for_each_b_colouring(const Graph &g, int k, const std::function<bool(const Colouring &)> &visit,
                          const SearchLimits &limits) {
    check_cap(g, limits);
    if (k < 1 || k > g.order()) return;
    for_each_proper(g, k, [&](const std::vector<int> &assignment) {
        Colouring c(k, assignment);
        if (!is_b_colouring(g, c)) return true;
        return visit(c);
    });
}

std::vector<Colouring> enumerate_b_colourings(const Graph &g, int k, const SearchLimits &limits) {
    std::vector<Colouring> out;
    for_each_b_colouring(
        g, k,
        [&](const Colouring &c) {
            out.push_back(c);
            return true;
        },
        limits);
    return out;
}

namespace naive {

int b_chromatic_number(const Graph &g, const SearchLimits &limits) {
    check_cap(g, limits);
    for (int k = max_degree(g) + 1; k >= 1; --k) {
        if (!enough_high_degree_vertices(g, k)) continue;
        bool found = false;
        for_each_b_colouring(
            g, k,
            [&](const Colouring &) {
                found = true;
                return false;
            },
            limits);
        if (found) return k;
    }
    return 1;
}

std::optional<ExtremalColouring> min_mean_b_colouring(const Graph &g, int k, const SearchLimits &limits) {
    return extreme(g, k, Direction::Min, limits);
}

std::optional<ExtremalColouring> max_mean_b_colouring(const Graph &g, int k, const SearchLimits &limits) {
    return extreme(g, k, Direction::Max, limits);
}

int chromatic_number(const Graph &g, const SearchLimits &limits) {
    check_cap(g, limits);
    for (int k = 1;; ++k) {
        bool found = false;
        for_each_proper(g, k, [&](const std::vector<int> &) {
            found = true;
            return false;
        });
        if (found) return k;
    }
}

}  // namespace naive

}  // namespace bchroma
