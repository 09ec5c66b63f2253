#pragma once

#include "bchroma/colouring.hpp"
#include "bchroma/graph.hpp"
#include "bchroma/search.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace bchroma {

/// Calls visit on every labelled b-colouring of g with exactly k colours,
/// in lexicographic order of the assignment vector. Only monochromatic
/// edges are cut during the walk; everything else is checked on complete
/// assignments. visit returns false to stop early.
///
/// Throws SearchCapExceeded above limits.max_enumeration_order vertices.
void for_each_b_colouring(const Graph &g, int k, const std::function<bool(const Colouring &)> &visit,
                          const SearchLimits &limits = {});

std::vector<Colouring> enumerate_b_colourings(const Graph &g, int k, const SearchLimits &limits = {});

// Brute-force reference answers built only on the enumeration above and the
// statistics in colouring.hpp. Used to cross-check ExactSearch.
namespace naive {

/// Largest k admitting a b-colouring. Values of k for which fewer than k
/// vertices have degree >= k-1 are skipped without enumeration.
int b_chromatic_number(const Graph &g, const SearchLimits &limits = {});

std::optional<ExtremalColouring> min_mean_b_colouring(const Graph &g, int k, const SearchLimits &limits = {});
std::optional<ExtremalColouring> max_mean_b_colouring(const Graph &g, int k, const SearchLimits &limits = {});

/// χ(G) by trying k = 1, 2, ... over all proper assignments.
int chromatic_number(const Graph &g, const SearchLimits &limits = {});

}  // namespace naive

}  // namespace bchroma
