#pragma once

#include "bchroma/graph.hpp"
#include "bchroma/rational.hpp"

#include <span>
#include <stdexcept>
#include <vector>

namespace bchroma {

class ColouringError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Total assignment of colours 1..k to vertices 1..n.
///
/// Surjectivity is not required here; the validators below check it.
class Colouring {
public:
    /// assignment[v-1] is the colour of vertex v. Throws ColouringError if
    /// k < 1, the assignment is empty, or any colour falls outside 1..k.
    Colouring(int k, std::vector<int> assignment);

    int colours() const { return k_; }
    int order() const { return static_cast<int>(assignment_.size()); }
    int colour_of(Vertex v) const;
    const std::vector<int> &assignment() const { return assignment_; }

    /// Colour i becomes k+1-i.
    Colouring reversed() const;
    /// Colour i becomes perm[i-1]; perm must be a permutation of 1..k.
    Colouring relabelled(std::span<const int> perm) const;

    friend bool operator==(const Colouring &, const Colouring &) = default;

private:
    int k_;
    std::vector<int> assignment_;
};

// All validators throw ColouringError when the colouring does not cover
// exactly the vertices of g.

bool is_proper(const Graph &g, const Colouring &c);

/// Proper, every colour 1..k used, and every class holds a b-vertex. For
/// k = 1 the b-vertex condition is vacuous.
bool is_b_colouring(const Graph &g, const Colouring &c);

/// Vertices of the given class adjacent to every other class. Throws
/// ColouringError if colour is outside 1..k.
std::vector<Vertex> b_vertices(const Graph &g, const Colouring &c, int colour);

/// Colours whose class is empty or has no b-vertex.
std::vector<int> classes_without_b_vertex(const Graph &g, const Colouring &c);

/// Strength vector θ and p.m.f. f(i) = θ(c_i)/n.
struct ColourDistribution {
    int k = 0;
    int n = 0;
    std::vector<int> strengths;
    std::vector<Rational> pmf;

    /// Throws ColouringError on an empty vector or a negative strength.
    static ColourDistribution from_strengths(std::vector<int> strengths);
};

/// Accepts improper colourings; the p.m.f. is defined for any assignment.
ColourDistribution distribution(const Graph &g, const Colouring &c);

/// Σ i f(i).
Rational mean(const ColourDistribution &d);
/// Σ i² f(i) - (Σ i f(i))².
Rational variance(const ColourDistribution &d);

struct ChromaStats {
    Rational mean;
    Rational variance;

    friend bool operator==(const ChromaStats &, const ChromaStats &) = default;
};

ChromaStats stats_of(const ColourDistribution &d);

}  // namespace bchroma
