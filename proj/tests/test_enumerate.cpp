#include "bchroma/enumerate.hpp"

#include <doctest.h>

#include <algorithm>

using namespace bchroma;

namespace {

/// All k^n assignments, no pruning at all.
std::vector<Colouring> every_assignment_filtered(const Graph &g, int k) {
    const int n = g.order();
    std::vector<int> a(static_cast<std::size_t>(n), 1);
    std::vector<Colouring> out;
    while (true) {
        Colouring c(k, a);
        if (is_b_colouring(g, c)) out.push_back(c);
        int i = n - 1;
        while (i >= 0 && a[i] == k) a[i--] = 1;
        if (i < 0) break;
        ++a[i];
    }
    return out;
}

}  // namespace

TEST_CASE("enumerate_b_colourings: small cases") {
    auto c4 = enumerate_b_colourings(cycle(4), 2);
    REQUIRE(c4.size() == 2);
    CHECK(c4[0].assignment() == std::vector<int>{1, 2, 1, 2});
    CHECK(c4[1].assignment() == std::vector<int>{2, 1, 2, 1});

    CHECK(enumerate_b_colourings(complete(3), 3).size() == 6);
    CHECK(enumerate_b_colourings(path(2), 2).size() == 2);
    CHECK(enumerate_b_colourings(cycle(4), 3).empty());
    CHECK(enumerate_b_colourings(path(3), 4).empty());
    CHECK(enumerate_b_colourings(Graph(1, {}), 1).size() == 1);
}

TEST_CASE("enumerate_b_colourings: matches the unpruned k^n filter, in lexicographic order") {
    std::vector<Graph> graphs{path(5), cycle(5), cycle(6), wheel(4), sunlet(3), closed_ladder(3)};
    for (std::uint64_t seed = 0; seed < 10; ++seed) graphs.push_back(random_connected_graph(6, seed));
    for (const Graph &g : graphs) {
        for (int k = 1; k <= 4; ++k) {
            auto fast = enumerate_b_colourings(g, k);
            auto slow = every_assignment_filtered(g, k);
            CHECK(fast == slow);
            CHECK(std::is_sorted(fast.begin(), fast.end(), [](const Colouring &a, const Colouring &b) {
                return a.assignment() < b.assignment();
            }));
        }
    }
}

TEST_CASE("for_each_b_colouring stops early") {
    int seen = 0;
    for_each_b_colouring(complete(4), 4, [&](const Colouring &) { return ++seen < 3; });
    CHECK(seen == 3);
}

TEST_CASE("enumeration cap") {
    CHECK_THROWS_AS(enumerate_b_colourings(path(13), 3), SearchCapExceeded);
    SearchLimits raised;
    raised.max_enumeration_order = 13;
    CHECK(!enumerate_b_colourings(path(13), 3, raised).empty());
}

TEST_CASE("naive oracles") {
    CHECK(naive::chromatic_number(cycle(5)) == 3);
    CHECK(naive::chromatic_number(complete(6)) == 6);
    CHECK(naive::chromatic_number(cycle(6)) == 2);
    CHECK(naive::b_chromatic_number(path(5)) == 3);
    CHECK(naive::b_chromatic_number(path(4)) == 2);
    CHECK(naive::b_chromatic_number(cycle(4)) == 2);
    CHECK(naive::b_chromatic_number(sunlet(5)) == 3);
    CHECK(naive::b_chromatic_number(Graph(1, {})) == 1);

    auto mn = naive::min_mean_b_colouring(path(6), 3);
    REQUIRE(mn);
    CHECK(mn->stats == ChromaStats{make_rational(5, 3), make_rational(5, 9)});
    CHECK_FALSE(naive::min_mean_b_colouring(cycle(4), 3));
}
