#include "bchroma/enumerate.hpp"
#include "bchroma/search.hpp"

#include <doctest.h>

using namespace bchroma;

namespace {

Rational r(long long p, long long q = 1) { return make_rational(p, q); }

ChromaStats st(Rational m, Rational v) { return {std::move(m), std::move(v)}; }

}  // namespace

TEST_CASE("chromatic_number") {
    CHECK(chromatic_number(cycle(5)) == 3);
    CHECK(chromatic_number(complete(6)) == 6);
    CHECK(chromatic_number(cycle(6)) == 2);
    CHECK(chromatic_number(Graph(1, {})) == 1);
    CHECK(chromatic_number(wheel(5)) == 4);
    CHECK(chromatic_number(complete_bipartite(3, 4)) == 2);
}

TEST_CASE("b_chromatic_number") {
    CHECK(b_chromatic_number(path(5)) == 3);
    CHECK(b_chromatic_number(cycle(4)) == 2);
    CHECK(b_chromatic_number(sunlet(5)) == 3);
    CHECK(b_chromatic_number(path(4)) == 2);
    CHECK(b_chromatic_number(wheel(4)) == 3);
    CHECK(b_chromatic_number(wheel(6)) == 4);
    CHECK(b_chromatic_number(Graph(1, {})) == 1);
    CHECK(b_chromatic_number(complete_bipartite(3, 3)) == 2);
}

TEST_CASE("min_mean_b_colouring: examples") {
    auto p6 = min_mean_b_colouring(path(6), 3);
    CHECK(p6.stats == st(r(5, 3), r(5, 9)));
    CHECK(p6.strengths == std::vector<int>{3, 2, 1});
    CHECK(is_b_colouring(path(6), p6.colouring));

    auto k4 = min_mean_b_colouring(complete(4), 4);
    CHECK(k4.stats == st(r(5, 2), r(5, 4)));

    // Prism: every 3-colouring uses each colour twice (enumeration below).
    Graph prism = cartesian_product(cycle(3), path(2));
    auto oracle = naive::min_mean_b_colouring(prism, 3);
    REQUIRE(oracle);
    CHECK(oracle->stats == st(r(2), r(2, 3)));
    CHECK(min_mean_b_colouring(prism, 3).stats == st(r(2), r(2, 3)));
}

TEST_CASE("max_mean_b_colouring: examples") {
    auto p6 = max_mean_b_colouring(path(6), 3);
    CHECK(p6.stats.mean == r(7, 3));
    CHECK(naive::max_mean_b_colouring(path(6), 3)->stats.mean == r(7, 3));

    for (int n = 1; n <= 7; ++n) {
        auto lo = min_mean_b_colouring(complete(n), n);
        auto hi = max_mean_b_colouring(complete(n), n);
        CHECK(lo.stats == hi.stats);
    }

    auto c5 = max_mean_b_colouring(cycle(5), 3);
    CHECK(c5.stats == st(r(11, 5), r(14, 25)));
    CHECK(naive::max_mean_b_colouring(cycle(5), 3)->stats == st(r(11, 5), r(14, 25)));
    CHECK(c5.strengths == std::vector<int>{1, 2, 2});
}

TEST_CASE("optimisation with no b-colouring") {
    CHECK_THROWS_AS(min_mean_b_colouring(cycle(4), 3), NoBColouring);
    CHECK_THROWS_AS(max_mean_b_colouring(path(4), 3), NoBColouring);
    CHECK_THROWS_AS(min_mean_b_colouring(path(3), 5), NoBColouring);
    CHECK_THROWS_AS(min_mean_b_colouring(path(3), 0), NoBColouring);
}

TEST_CASE("realizing colouring is the lexicographically smallest optimum") {
    for (const Graph &g : {path(7), cycle(6), wheel(5), sunlet(4), closed_ladder(4)}) {
        int phi = b_chromatic_number(g);
        auto fast = min_mean_b_colouring(g, phi);
        auto slow = naive::min_mean_b_colouring(g, phi);
        REQUIRE(slow);
        CHECK(fast.colouring == slow->colouring);
        auto fast_max = max_mean_b_colouring(g, phi);
        auto slow_max = naive::max_mean_b_colouring(g, phi);
        CHECK(fast_max.colouring == slow_max->colouring);
    }
}

TEST_CASE("full_report: examples") {
    auto w5 = full_report(wheel(4));
    CHECK(w5.phi == 3);
    CHECK(w5.min.stats == st(r(9, 5), r(14, 25)));

    auto s4 = full_report(sunlet(4));
    CHECK(s4.phi == 4);
    CHECK(s4.min.stats == st(r(5, 2), r(5, 4)));

    auto p2 = full_report(path(2));
    CHECK(p2.phi == 2);
    CHECK(p2.min.stats == st(r(3, 2), r(1, 4)));

    auto k1 = full_report(Graph(1, {}));
    CHECK(k1.phi == 1);
    CHECK(k1.chi == 1);
    CHECK(k1.min.stats == st(r(1), r(0)));
    CHECK(k1.warnings.size() == 1);

    CHECK(w5.nodes_explored > 0);
    CHECK(w5.chi <= w5.phi);
    CHECK(w5.min.stats.mean <= w5.max.stats.mean);
}

TEST_CASE("full_report is deterministic") {
    for (const Graph &g : {closed_ladder(6), sunlet(6), random_connected_graph(9, 42)}) {
        auto a = full_report(g);
        auto b = full_report(g);
        CHECK(a.phi == b.phi);
        CHECK(a.min.colouring == b.min.colouring);
        CHECK(a.max.colouring == b.max.colouring);
        CHECK(a.nodes_explored == b.nodes_explored);
    }
}

TEST_CASE("limits") {
    CHECK_THROWS_AS(full_report(path(33)), SearchCapExceeded);
    SearchLimits raised;
    raised.max_search_order = 40;
    CHECK(b_chromatic_number(path(33), raised) == 3);
    raised.max_search_order = 100;
    CHECK_THROWS_AS(full_report(path(65), raised), SearchCapExceeded);

    Graph split(4, {{1, 2}, {3, 4}});
    CHECK_THROWS_AS(full_report(split), GraphError);
    SearchLimits lenient;
    lenient.allow_disconnected = true;
    auto rep = full_report(split, lenient);
    CHECK(rep.phi == 2);
    CHECK(rep.min.stats == st(r(3, 2), r(1, 4)));
}
