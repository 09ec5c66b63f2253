#pragma once

#include "bchroma/closed_forms.hpp"
#include "bchroma/search.hpp"

#include <string>
#include <vector>

namespace bchroma {

/// Where a graph came from: a named family with parameters, or a file.
struct GraphDescriptor {
    std::string family;
    std::vector<int> parameters;
    std::string path;
};

// Machine-readable output. Rationals are written as {"num": p, "den": q}
// (CSV: "p/q") in lowest terms with q > 0; keys appear in a fixed order and
// nothing run-dependent (timings) is included, so identical inputs give
// byte-identical output.

std::string report_json(const GraphDescriptor &source, const SearchReport &report, const SearchLimits &limits);
std::string report_csv(const GraphDescriptor &source, const SearchReport &report);

std::string phi_json(const GraphDescriptor &source, int chi, int phi, int max_degree);
std::string phi_csv(const GraphDescriptor &source, int chi, int phi, int max_degree);

struct ColouringSummary {
    ColourDistribution distribution;
    ChromaStats stats;
    bool proper = false;
    bool b_colouring = false;
    std::vector<int> classes_without_b_vertex;
};

ColouringSummary summarise(const Graph &g, const Colouring &c);

std::string colouring_json(const GraphDescriptor &source, const ColouringSummary &summary);
std::string colouring_csv(const GraphDescriptor &source, const ColouringSummary &summary);

std::string sweep_json(Family f, int from, int to, const std::vector<ClosedFormEntry> &rows,
                       const SearchLimits &limits);
std::string sweep_csv(const std::vector<ClosedFormEntry> &rows);

}  // namespace bchroma
