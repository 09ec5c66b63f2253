#include "bchroma/closed_forms.hpp"

#include <array>
#include <ostream>
#include <stdexcept>

namespace bchroma {

namespace {

constexpr std::array kFamilies{Family::Path,   Family::Cycle,  Family::Complete,
                               Family::Wheel,  Family::Sunlet, Family::ClosedLadder};

Rational q(long long num, long long den = 1) { return make_rational(num, den); }

bool even(int n) { return n % 2 == 0; }

void require_domain(Family f, int n) {
    if (n < family_min_n(f))
        throw std::domain_error(std::string(family_name(f)) + ": n=" + std::to_string(n) + " below the minimum " +
                                std::to_string(family_min_n(f)));
}

struct Formula {
    Rational value;
    std::string expr;
};

Formula constant(long long num, long long den = 1) {
    Rational r = q(num, den);
    return {r, to_string(r)};
}

// (a n + b) / (c n)
Formula linear_over_n(int n, long long a, long long b, long long c, std::string expr) {
    return {q(a * n + b, c * n), std::move(expr)};
}

// (n² + a n + b) / (4 n²)
Formula quadratic_over_4n2(int n, long long a, long long b, std::string expr) {
    long long nn = n;
    return {q(nn * nn + a * nn + b, 4 * nn * nn), std::move(expr)};
}

PaperValue printed(Formula mean, Formula variance) {
    return {std::move(mean.value), std::move(variance.value), std::move(mean.expr), std::move(variance.expr)};
}

}  // namespace

std::string_view family_name(Family f) {
    switch (f) {
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
    case Family::Complete: return "complete";
    case Family::Wheel: return "wheel";
    case Family::Sunlet: return "sunlet";
    case Family::ClosedLadder: return "closed-ladder";
    }
    throw std::logic_error("unknown family");
}

Family parse_family(std::string_view name) {
    for (Family f : kFamilies)
        if (family_name(f) == name) return f;
    throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

std::span<const Family> all_families() { return kFamilies; }

int family_min_n(Family f) {
    switch (f) {
    case Family::Path: return 2;
    case Family::Complete: return 1;
    default: return 3;
    }
}

Graph family_graph(Family f, int n) {
    require_domain(f, n);
    switch (f) {
    case Family::Path: return path(n);
    case Family::Cycle: return cycle(n);
    case Family::Complete: return complete(n);
    case Family::Wheel: return wheel(n);
    case Family::Sunlet: return sunlet(n);
    case Family::ClosedLadder: return closed_ladder(n);
    }
    throw std::logic_error("unknown family");
}

PaperValue paper_value(Family f, int n) {
    require_domain(f, n);
    const long long nn = n;
    switch (f) {
    case Family::Path:
        if (n == 2) return printed(constant(3, 2), constant(1, 4));
        if (n == 3) return printed(constant(4, 3), constant(2, 9));
        if (even(n))
            return printed(linear_over_n(n, 3, 2, 2, "(3n+2)/(2n)"), quadratic_over_4n2(n, 8, -4, "(n^2+8n-4)/(4n^2)"));
        return printed(linear_over_n(n, 3, 3, 2, "(3n+3)/(2n)"), quadratic_over_4n2(n, 8, -9, "(n^2+8n-9)/(4n^2)"));

    case Family::Cycle:
        if (n == 4) return printed(constant(3, 2), constant(1, 4));
        if (even(n))
            return printed(linear_over_n(n, 3, 6, 2, "(3n+6)/(2n)"),
                           quadratic_over_4n2(n, 16, 36, "(n^2+16n+36)/(4n^2)"));
        return printed(linear_over_n(n, 3, 3, 2, "(3n+3)/(2n)"), quadratic_over_4n2(n, 8, -9, "(n^2+8n-9)/(4n^2)"));

    case Family::Complete:
        return printed({q(nn + 1, 2), "(n+1)/2"}, {q(nn * nn - 1, 12), "(n^2-1)/12"});

    case Family::Wheel:
        if (n == 4) return printed(constant(9, 5), constant(14, 25));
        if (even(n))
            return printed({q(3 * nn + 14, 2 * nn + 2), "(3n+14)/(2n+2)"},
                           {q(nn * nn + 42 * nn - 80, 4 * (nn + 1) * (nn + 1)), "(n^2+42n-80)/(4(n+1)^2)"});
        return printed({q(3 * nn + 11, 2 * nn + 2), "(3n+11)/(2n+2)"},
                       {q(nn * nn + 34 * nn - 31, 4 * (nn + 1) * (nn + 1)), "(n^2+34n-31)/(4(n+1)^2)"});

    case Family::Sunlet:
        if (n == 3) return printed(constant(5, 3), constant(5, 9));
        if (n == 4) return printed(constant(5, 2), constant(5, 4));
        if (n == 5) return printed(constant(17, 10), constant(61, 100));
        return printed(linear_over_n(n, 3, 7, 2, "(3n+7)/(2n)"), quadratic_over_4n2(n, 35, -49, "(n^2+35n-49)/(4n^2)"));

    case Family::ClosedLadder: {
        // As printed, including n = 3 and 5.
        if (n == 3) return printed(constant(5), constant(2));
        if (n == 4) return printed(constant(5, 2), constant(5, 4));
        if (n == 5) return printed(constant(23, 10), constant(131, 144));
        if (n == 6) {
            auto mean = constant(23, 12);
            return {mean.value, std::nullopt, mean.expr, "(not printed)"};
        }
        if (even(n))
            return printed(linear_over_n(n, 3, 7, 2, "(3n+7)/(2n)"),
                           quadratic_over_4n2(n, 24, -49, "(n^2+24n-49)/(4n^2)"));
        return printed(linear_over_n(n, 3, 8, 2, "(3n+8)/(2n)"), quadratic_over_4n2(n, 28, -64, "(n^2+28n-64)/(4n^2)"));
    }
    }
    throw std::logic_error("unknown family");
}

namespace {

CorrectedValue corrected(Formula mean, Formula variance) {
    return {std::move(mean.value), std::move(variance.value), std::move(mean.expr), std::move(variance.expr), {}};
}

CorrectedValue corrected_formula(Family f, int n) {
    const long long nn = n;
    switch (f) {
    case Family::Path:
        if (n == 2 || n == 4) return corrected(constant(3, 2), constant(1, 4));
        if (n == 3) return corrected(constant(4, 3), constant(2, 9));
        if (even(n))
            return corrected(linear_over_n(n, 3, 2, 2, "(3n+2)/(2n)"), quadratic_over_4n2(n, 8, -4, "(n^2+8n-4)/(4n^2)"));
        return corrected(linear_over_n(n, 3, 3, 2, "(3n+3)/(2n)"), quadratic_over_4n2(n, 8, -9, "(n^2+8n-9)/(4n^2)"));

    case Family::Cycle:
        if (n == 4) return corrected(constant(3, 2), constant(1, 4));
        if (even(n))
            return corrected(linear_over_n(n, 3, 6, 2, "(3n+6)/(2n)"),
                             quadratic_over_4n2(n, 16, -36, "(n^2+16n-36)/(4n^2)"));
        return corrected(linear_over_n(n, 3, 3, 2, "(3n+3)/(2n)"), quadratic_over_4n2(n, 8, -9, "(n^2+8n-9)/(4n^2)"));

    case Family::Complete:
        return corrected({q(nn + 1, 2), "(n+1)/2"}, {q(nn * nn - 1, 12), "(n^2-1)/12"});

    case Family::Wheel: {
        auto p = paper_value(f, n);
        return {*p.mean, *p.variance, p.mean_expr, p.variance_expr, {}};
    }

    case Family::Sunlet:
        if (n == 3) return corrected(constant(5, 3), constant(5, 9));
        if (n == 4) return corrected(constant(5, 2), constant(5, 4));
        if (n == 5) return corrected(constant(8, 5), constant(11, 25));
        return corrected(linear_over_n(n, 3, 6, 2, "(3n+6)/(2n)"), quadratic_over_4n2(n, 32, -36, "(n^2+32n-36)/(4n^2)"));

    case Family::ClosedLadder:
        if (n == 3) return corrected(constant(2), constant(2, 3));
        if (n == 4) return corrected(constant(5, 2), constant(5, 4));
        if (n == 5) return corrected(constant(23, 10), constant(121, 100));
        return corrected(linear_over_n(n, 3, 7, 2, "(3n+7)/(2n)"), quadratic_over_4n2(n, 24, -49, "(n^2+24n-49)/(4n^2)"));
    }
    throw std::logic_error("unknown family");
}

// Every rule below was found by exhaustive search on the generated
// instances before being written down; see tests/test_closed_forms.cpp.
const std::array<ErratumRule, 8> kRegistry{{
    {Family::Path, "n = 4", kMeanField | kVarianceField, "(3n+2)/(2n); (n^2+8n-4)/(4n^2)", "3/2; 1/4",
     "phi(P4) = 2: only two vertices have degree 2, so the three-colour branch starts at n = 5",
     [](int n) { return n == 4; }},
    {Family::Cycle, "n even, n != 4", kVarianceField, "(n^2+16n+36)/(4n^2)", "(n^2+16n-36)/(4n^2)",
     "the printed p.m.f. ((n-2)/2n, (n-2)/2n, 2/n) itself gives -36",
     [](int n) { return n % 2 == 0 && n != 4; }},
    {Family::Sunlet, "n = 5", kMeanField | kVarianceField, "17/10; 61/100", "8/5; 11/25",
     "strengths (5,4,1) form a b-colouring with smaller mean than the printed (5,3,2)",
     [](int n) { return n == 5; }},
    {Family::Sunlet, "n >= 6", kMeanField | kVarianceField, "(3n+7)/(2n); (n^2+35n-49)/(4n^2)",
     "(3n+6)/(2n); (n^2+32n-36)/(4n^2)",
     "minimum is attained by strengths (n, n-4, 2, 2); the printed colouring (n-1, n-3, 2, 2) is not minimal and "
     "its own variance is (n^2+32n-49)/(4n^2)",
     [](int n) { return n >= 6; }},
    {Family::ClosedLadder, "n = 3", kMeanField | kVarianceField, "5; 2", "2; 2/3",
     "statement mean 5 contradicts the proof's 2; the uniform p.m.f. on {1,2,3} has variance 2/3",
     [](int n) { return n == 3; }},
    {Family::ClosedLadder, "n = 5", kVarianceField, "131/144", "121/100",
     "statement variance list is shifted; 121/100 is the value derived in the proof for n = 5",
     [](int n) { return n == 5; }},
    {Family::ClosedLadder, "n = 6", kMeanField | kVarianceField, "23/12; (not printed)", "25/12; 131/144",
     "strengths (5,4,2,1) admit no b-colouring of CL6; minimum uses (4,4,3,1), whose variance is also 131/144",
     [](int n) { return n == 6; }},
    {Family::ClosedLadder, "n odd, n >= 7", kMeanField | kVarianceField, "(3n+8)/(2n); (n^2+28n-64)/(4n^2)",
     "(3n+7)/(2n); (n^2+24n-49)/(4n^2)",
     "strengths (n-2, n-2, 3, 1) are attainable for odd n too, so the even-n formula holds for every n >= 6",
     [](int n) { return n >= 7 && n % 2 == 1; }},
}};

}  // namespace

CorrectedValue corrected_value(Family f, int n) {
    require_domain(f, n);
    CorrectedValue value = corrected_formula(f, n);
    for (const auto &rule : kRegistry)
        if (rule.family == f && rule.applies(n)) value.note = rule.note;
    return value;
}

std::span<const ErratumRule> errata_registry() { return kRegistry; }

unsigned registered_errata(Family f, int n) {
    unsigned mask = 0;
    for (const auto &rule : kRegistry)
        if (rule.family == f && rule.applies(n)) mask |= rule.fields;
    return mask;
}

namespace {

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

void write_errata_csv(std::ostream &out) {
    out << "family,n_condition,paper_expression,corrected_expression,note\n";
    for (const auto &rule : kRegistry)
        out << family_name(rule.family) << ',' << csv_field(rule.n_condition) << ',' << csv_field(rule.paper_expr) << ','
            << csv_field(rule.corrected_expr) << ',' << csv_field(rule.note) << '\n';
}

std::string_view status_name(RowStatus s) {
    switch (s) {
    case RowStatus::Ok: return "ok";
    case RowStatus::Unregistered: return "unregistered-erratum";
    case RowStatus::Mismatch: return "search-mismatch";
    case RowStatus::CapExceeded: return "cap-exceeded";
    }
    return "?";
}

std::vector<ClosedFormEntry> sweep(Family f, int from, int to, const SearchLimits &limits) {
    require_domain(f, from);
    if (to < from) throw std::invalid_argument("empty range");
    std::vector<ClosedFormEntry> rows;
    for (int n = from; n <= to; ++n) {
        ClosedFormEntry row{.family = f, .n = n, .paper = paper_value(f, n), .corrected = corrected_value(f, n),
                            .phi = {},
                            .search = {},
                            .errata = 0,
                            .registered = 0,
                            .status = RowStatus::Ok,
                            .message = {}};
        if (!row.paper.mean || *row.paper.mean != row.corrected.mean) row.errata |= kMeanField;
        if (!row.paper.variance || *row.paper.variance != row.corrected.variance) row.errata |= kVarianceField;
        row.registered = registered_errata(f, n);
        try {
            Graph g = family_graph(f, n);
            auto report = full_report(g, limits);
            row.phi = report.phi;
            row.search = std::move(report.min);
        } catch (const SearchCapExceeded &e) {
            row.status = RowStatus::CapExceeded;
            row.message = e.what();
            rows.push_back(std::move(row));
            continue;
        }
        if (row.search->stats.mean != row.corrected.mean || row.search->stats.variance != row.corrected.variance) {
            row.status = RowStatus::Mismatch;
            row.message = "exact search gives mean " + to_string(row.search->stats.mean) + ", variance " +
                          to_string(row.search->stats.variance);
        } else if (row.errata != row.registered) {
            row.status = RowStatus::Unregistered;
            row.message = "errata fields differ from the registry";
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace bchroma
