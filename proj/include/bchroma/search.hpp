#pragma once

#include "bchroma/colouring.hpp"
#include "bchroma/graph.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bchroma {

struct SearchLimits {
    int max_search_order = 32;       ///< pruned search; hard ceiling is 64
    int max_enumeration_order = 12;  ///< naive enumeration oracle
    bool allow_disconnected = false;
};

class SearchCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NoBColouring : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An optimal b-colouring together with its strength vector and statistics.
struct ExtremalColouring {
    Colouring colouring;
    std::vector<int> strengths;
    ChromaStats stats;
};

/// Everything full_report computes. phi and chi satisfy chi <= phi <= Δ+1,
/// and both realizing colourings are b-colourings with phi colours.
struct SearchReport {
    int chi = 0;
    int phi = 0;
    ExtremalColouring min;
    ExtremalColouring max;
    std::uint64_t nodes_explored = 0;
    std::chrono::duration<double> elapsed{};
    std::vector<std::string> warnings;
};

/// Exact backtracking search over the colourings of one graph.
///
/// Colour classes are opened in first-use order, so each unlabelled
/// partition is visited once; labels are attached afterwards. A branch is
/// cut when it creates a monochromatic edge, when some class can no longer
/// contain a b-vertex, or (for the optimisation searches) when the best
/// mean any completion could reach is already worse than the incumbent.
///
/// Optima are ranked by mean, then variance, then the strength vector
/// (lexicographically), and the realizing colouring is the
/// lexicographically smallest assignment with the winning strength vector.
/// Results are therefore deterministic.
///
/// Throws SearchCapExceeded when the graph has more vertices than the
/// limits allow, and GraphError for a disconnected graph unless
/// allow_disconnected is set.
class ExactSearch {
public:
    explicit ExactSearch(const Graph &g, SearchLimits limits = {});

    int chromatic_number();
    int b_chromatic_number();

    /// Some b-colouring with exactly k colours, if one exists.
    std::optional<Colouring> find_b_colouring(int k);

    /// Throw NoBColouring when g has no b-colouring with k colours.
    ExtremalColouring min_mean_b_colouring(int k);
    ExtremalColouring max_mean_b_colouring(int k);

    SearchReport full_report();

    std::uint64_t nodes_explored() const { return nodes_; }

private:
    const Graph &graph_;
    SearchLimits limits_;
    std::uint64_t nodes_ = 0;
};

int chromatic_number(const Graph &g, const SearchLimits &limits = {});
int b_chromatic_number(const Graph &g, const SearchLimits &limits = {});
ExtremalColouring min_mean_b_colouring(const Graph &g, int k, const SearchLimits &limits = {});
ExtremalColouring max_mean_b_colouring(const Graph &g, int k, const SearchLimits &limits = {});
SearchReport full_report(const Graph &g, const SearchLimits &limits = {});

}  // namespace bchroma
