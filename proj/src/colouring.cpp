#include "bchroma/colouring.hpp"

#include <algorithm>
#include <string>

namespace bchroma {

Colouring::Colouring(int k, std::vector<int> assignment) : k_(k), assignment_(std::move(assignment)) {
    if (k < 1) throw ColouringError("colour count must be >= 1, got " + std::to_string(k));
    if (assignment_.empty()) throw ColouringError("colouring must cover at least one vertex");
    for (std::size_t i = 0; i < assignment_.size(); ++i) {
        int c = assignment_[i];
        if (c < 1 || c > k)
            throw ColouringError("vertex " + std::to_string(i + 1) + " has colour " + std::to_string(c) +
                                 " outside 1.." + std::to_string(k));
    }
}

int Colouring::colour_of(Vertex v) const {
    if (v < 1 || v > order()) throw ColouringError("vertex " + std::to_string(v) + " not coloured");
    return assignment_[v - 1];
}

Colouring Colouring::reversed() const {
    std::vector<int> out(assignment_);
    for (int &c : out) c = k_ + 1 - c;
    return Colouring(k_, std::move(out));
}

Colouring Colouring::relabelled(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != k_) throw ColouringError("permutation length differs from k");
    std::vector<int> check(perm.begin(), perm.end());
    std::sort(check.begin(), check.end());
    for (int i = 0; i < k_; ++i)
        if (check[i] != i + 1) throw ColouringError("relabelling is not a permutation of 1..k");
    std::vector<int> out(assignment_);
    for (int &c : out) c = perm[c - 1];
    return Colouring(k_, std::move(out));
}

namespace {

void require_cover(const Graph &g, const Colouring &c) {
    if (g.order() != c.order())
        throw ColouringError("colouring covers " + std::to_string(c.order()) + " vertices but graph has " +
                             std::to_string(g.order()));
}

bool dominates_other_classes(const Graph &g, const Colouring &c, Vertex v) {
    const int k = c.colours();
    const int own = c.colour_of(v);
    std::vector<char> seen(static_cast<std::size_t>(k + 1), 0);
    int hit = 0;
    for (Vertex w : g.neighbours(v)) {
        int col = c.colour_of(w);
        if (col != own && !seen[col]) {
            seen[col] = 1;
            ++hit;
        }
    }
    return hit == k - 1;
}

}  // namespace

bool is_proper(const Graph &g, const Colouring &c) {
    require_cover(g, c);
    return std::none_of(g.edges().begin(), g.edges().end(),
                        [&](const Edge &e) { return c.colour_of(e.first) == c.colour_of(e.second); });
}

std::vector<Vertex> b_vertices(const Graph &g, const Colouring &c, int colour) {
    require_cover(g, c);
    if (colour < 1 || colour > c.colours())
        throw ColouringError("colour " + std::to_string(colour) + " outside 1.." + std::to_string(c.colours()));
    std::vector<Vertex> out;
    for (Vertex v = 1; v <= g.order(); ++v)
        if (c.colour_of(v) == colour && dominates_other_classes(g, c, v)) out.push_back(v);
    return out;
}

std::vector<int> classes_without_b_vertex(const Graph &g, const Colouring &c) {
    require_cover(g, c);
    std::vector<char> has_b(static_cast<std::size_t>(c.colours() + 1), 0);
    for (Vertex v = 1; v <= g.order(); ++v)
        if (!has_b[c.colour_of(v)] && dominates_other_classes(g, c, v)) has_b[c.colour_of(v)] = 1;
    std::vector<int> out;
    for (int col = 1; col <= c.colours(); ++col)
        if (!has_b[col]) out.push_back(col);
    return out;
}

bool is_b_colouring(const Graph &g, const Colouring &c) {
    return is_proper(g, c) && classes_without_b_vertex(g, c).empty();
}

ColourDistribution ColourDistribution::from_strengths(std::vector<int> strengths) {
    if (strengths.empty()) throw ColouringError("distribution needs at least one colour");
    ColourDistribution d;
    d.k = static_cast<int>(strengths.size());
    for (int s : strengths) {
        if (s < 0) throw ColouringError("negative colour strength");
        d.n += s;
    }
    if (d.n == 0) throw ColouringError("distribution over an empty vertex set");
    d.pmf.reserve(strengths.size());
    for (int s : strengths) d.pmf.push_back(make_rational(s, d.n));
    d.strengths = std::move(strengths);
    return d;
}

ColourDistribution distribution(const Graph &g, const Colouring &c) {
    require_cover(g, c);
    std::vector<int> strengths(static_cast<std::size_t>(c.colours()), 0);
    for (int col : c.assignment()) ++strengths[col - 1];
    return ColourDistribution::from_strengths(std::move(strengths));
}

Rational mean(const ColourDistribution &d) {
    Rational sum = 0;
    for (int i = 1; i <= d.k; ++i) sum += i * d.pmf[i - 1];
    return sum;
}

Rational variance(const ColourDistribution &d) {
    Rational second = 0;
    for (int i = 1; i <= d.k; ++i) second += i * i * d.pmf[i - 1];
    Rational m = mean(d);
    return second - m * m;
}

ChromaStats stats_of(const ColourDistribution &d) { return {mean(d), variance(d)}; }

}  // namespace bchroma
