#include "bchroma/closed_forms.hpp"
#include "bchroma/enumerate.hpp"

#include <doctest.h>

#include <algorithm>
#include <sstream>

using namespace bchroma;

namespace {

Rational r(long long p, long long q = 1) { return make_rational(p, q); }

/// Minimum-mean statistics straight from the exhaustive enumeration.
ChromaStats enumerated_minimum(Family f, int n) {
    Graph g = family_graph(f, n);
    int phi = naive::b_chromatic_number(g);
    return naive::min_mean_b_colouring(g, phi)->stats;
}

}  // namespace

TEST_CASE("family names") {
    for (Family f : all_families()) CHECK(parse_family(family_name(f)) == f);
    CHECK(parse_family("closed-ladder") == Family::ClosedLadder);
    CHECK_THROWS_AS(parse_family("petersen"), std::invalid_argument);
    CHECK(family_graph(Family::Wheel, 5) == wheel(5));
}

TEST_CASE("paper_value: printed formulas") {
    auto p7 = paper_value(Family::Path, 7);
    CHECK(*p7.mean == r(12, 7));
    CHECK(*p7.variance == r(24, 49));
    CHECK(p7.mean_expr == "(3n+3)/(2n)");

    auto w5 = paper_value(Family::Wheel, 5);
    CHECK(*w5.mean == r(13, 6));
    CHECK(*w5.variance == r(41, 36));

    auto s5 = paper_value(Family::Sunlet, 5);
    CHECK(*s5.mean == r(17, 10));
    CHECK(*s5.variance == r(61, 100));

    CHECK(*paper_value(Family::Path, 2).mean == r(3, 2));
    CHECK(*paper_value(Family::Path, 3).variance == r(2, 9));
    CHECK(*paper_value(Family::Cycle, 4).variance == r(1, 4));
    CHECK(*paper_value(Family::Cycle, 6).variance == r(7, 6));
    CHECK(*paper_value(Family::Wheel, 4).mean == r(9, 5));
    CHECK(*paper_value(Family::Sunlet, 6).variance == r(197, 144));
    CHECK(*paper_value(Family::ClosedLadder, 3).mean == r(5));
    CHECK(*paper_value(Family::ClosedLadder, 5).variance == r(131, 144));
    CHECK_FALSE(paper_value(Family::ClosedLadder, 6).variance.has_value());
    CHECK(*paper_value(Family::ClosedLadder, 7).mean == r(29, 14));
    CHECK(*paper_value(Family::ClosedLadder, 8).variance == r(207, 256));
    for (int n = 1; n <= 8; ++n) {
        CHECK(*paper_value(Family::Complete, n).mean == r(n + 1, 2));
        CHECK(*paper_value(Family::Complete, n).variance == r(n * n - 1, 12));
    }
}

TEST_CASE("paper_value / corrected_value: domains") {
    CHECK_THROWS_AS(paper_value(Family::Path, 1), std::domain_error);
    CHECK_THROWS_AS(paper_value(Family::Cycle, 2), std::domain_error);
    CHECK_THROWS_AS(corrected_value(Family::ClosedLadder, 2), std::domain_error);
    CHECK_THROWS_AS(paper_value(Family::Complete, 0), std::domain_error);
    CHECK_NOTHROW(paper_value(Family::Complete, 1));
    // every n in the domain lands in exactly one branch: values exist for a long stretch
    for (Family f : all_families())
        for (int n = family_min_n(f); n <= 60; ++n) {
            auto p = paper_value(f, n);
            CHECK(p.mean.has_value());
            auto c = corrected_value(f, n);
            CHECK(c.mean >= 1);
            CHECK(c.variance >= 0);
        }
}

TEST_CASE("corrected_value: examples confirmed by enumeration") {
    auto c6 = corrected_value(Family::Cycle, 6);
    CHECK(c6.variance == r(2, 3));
    CHECK(enumerated_minimum(Family::Cycle, 6) == ChromaStats{c6.mean, c6.variance});

    auto s6 = corrected_value(Family::Sunlet, 6);
    CHECK(s6.mean == r(2));
    CHECK(s6.variance == r(4, 3));
    CHECK(enumerated_minimum(Family::Sunlet, 6) == ChromaStats{s6.mean, s6.variance});

    auto cl3 = corrected_value(Family::ClosedLadder, 3);
    CHECK(cl3.mean == r(2));
    CHECK(cl3.variance == r(2, 3));
    CHECK(enumerated_minimum(Family::ClosedLadder, 3) == ChromaStats{cl3.mean, cl3.variance});

    CHECK(corrected_value(Family::Sunlet, 5).mean == r(8, 5));
    CHECK(corrected_value(Family::ClosedLadder, 6).mean == r(25, 12));
    CHECK(corrected_value(Family::Path, 4).mean == r(3, 2));
    CHECK(!corrected_value(Family::Path, 4).note.empty());
    CHECK(corrected_value(Family::Path, 6).note.empty());
}

TEST_CASE("corrected_value equals exhaustive enumeration on small instances") {
    for (Family f : all_families()) {
        for (int n = family_min_n(f);; ++n) {
            Graph g = family_graph(f, n);
            if (g.order() > (f == Family::Complete ? 7 : 10)) break;
            CAPTURE(family_name(f));
            CAPTURE(n);
            auto c = corrected_value(f, n);
            CHECK(enumerated_minimum(f, n) == ChromaStats{c.mean, c.variance});
        }
    }
}

TEST_CASE("errata registry agrees with the value tables") {
    for (Family f : all_families()) {
        for (int n = family_min_n(f); n <= 40; ++n) {
            auto p = paper_value(f, n);
            auto c = corrected_value(f, n);
            unsigned differs = 0;
            if (!p.mean || *p.mean != c.mean) differs |= kMeanField;
            if (!p.variance || *p.variance != c.variance) differs |= kVarianceField;
            CAPTURE(family_name(f));
            CAPTURE(n);
            CHECK(differs == registered_errata(f, n));
            CHECK(c.note.empty() == (differs == 0));
        }
    }
    CHECK(registered_errata(Family::Wheel, 9) == 0);
    CHECK(registered_errata(Family::Cycle, 8) == kVarianceField);
    CHECK(registered_errata(Family::Cycle, 4) == 0);
}

TEST_CASE("errata CSV") {
    std::ostringstream out;
    write_errata_csv(out);
    std::string csv = out.str();
    CHECK(csv.rfind("family,n_condition,paper_expression,corrected_expression,note\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + static_cast<long>(errata_registry().size()));
    CHECK(csv.find("cycle,\"n even, n != 4\",(n^2+16n+36)/(4n^2),(n^2+16n-36)/(4n^2)") != std::string::npos);
}

TEST_CASE("sweep") {
    auto complete_rows = sweep(Family::Complete, 1, 8);
    REQUIRE(complete_rows.size() == 8);
    for (const auto &row : complete_rows) {
        CHECK(row.status == RowStatus::Ok);
        CHECK(row.errata == 0);
        CHECK(row.search->stats.mean == r(row.n + 1, 2));
    }

    auto cycles = sweep(Family::Cycle, 3, 10);
    REQUIRE(cycles.size() == 8);
    for (const auto &row : cycles) {
        CHECK(row.status == RowStatus::Ok);
        bool expected = row.n % 2 == 0 && row.n != 4;
        CHECK(row.errata == (expected ? unsigned{kVarianceField} : 0u));
    }

    auto paths = sweep(Family::Path, 2, 10);
    REQUIRE(paths.size() == 9);
    for (const auto &row : paths) {
        CHECK(row.status == RowStatus::Ok);
        CHECK((row.errata != 0) == (row.n == 4));
    }

    SearchLimits tight;
    tight.max_search_order = 8;
    auto capped = sweep(Family::Sunlet, 3, 5, tight);
    CHECK(capped[0].status == RowStatus::Ok);
    CHECK(capped[1].status == RowStatus::Ok);
    CHECK(capped[2].status == RowStatus::CapExceeded);
    CHECK_FALSE(capped[2].search.has_value());

    CHECK_THROWS_AS(sweep(Family::Cycle, 2, 5), std::domain_error);
    CHECK_THROWS_AS(sweep(Family::Cycle, 6, 5), std::invalid_argument);
}
