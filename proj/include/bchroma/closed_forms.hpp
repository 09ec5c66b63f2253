#pragma once

#include "bchroma/colouring.hpp"
#include "bchroma/graph.hpp"
#include "bchroma/rational.hpp"
#include "bchroma/search.hpp"

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bchroma {

/// Graph families with published b-chromatic mean/variance formulas.
enum class Family { Path, Cycle, Complete, Wheel, Sunlet, ClosedLadder };

std::string_view family_name(Family f);  // "path", "closed-ladder", ...
Family parse_family(std::string_view name);
std::span<const Family> all_families();

/// Smallest n for which the family's formulas are defined.
int family_min_n(Family f);
/// The instance the formulas describe (wheel(n) has n+1 vertices, etc.).
Graph family_graph(Family f, int n);

/// Values as originally published. A field is empty when the
/// statement prints nothing for that n (closed ladder variance at n = 6).
struct PaperValue {
    std::optional<Rational> mean;
    std::optional<Rational> variance;
    std::string mean_expr;
    std::string variance_expr;
};

/// Minimum-mean b-colouring statistics as established by exhaustive search.
struct CorrectedValue {
    Rational mean;
    Rational variance;
    std::string mean_expr;
    std::string variance_expr;
    std::string note;  ///< empty unless an erratum is registered for this n
};

/// Both throw std::domain_error for n below family_min_n.
PaperValue paper_value(Family f, int n);
CorrectedValue corrected_value(Family f, int n);

enum ErrataField : unsigned { kMeanField = 1u, kVarianceField = 2u };

/// One registered disagreement between printed and corrected values.
struct ErratumRule {
    Family family;
    std::string n_condition;
    unsigned fields;
    std::string paper_expr;
    std::string corrected_expr;
    std::string note;
    bool (*applies)(int n);
};

std::span<const ErratumRule> errata_registry();

/// Registered fields for (f, n), as a mask of ErrataField.
unsigned registered_errata(Family f, int n);

/// Columns: family, n-condition, printed expression, corrected expression, note.
void write_errata_csv(std::ostream &out);

enum class RowStatus {
    Ok,           ///< corrected == search, and errata match the registry
    Unregistered, ///< paper and corrected disagree on a field the registry omits, or vice versa
    Mismatch,     ///< corrected value differs from exact search
    CapExceeded,  ///< exact search refused the instance
};

std::string_view status_name(RowStatus s);

struct ClosedFormEntry {
    Family family;
    int n = 0;
    PaperValue paper;
    CorrectedValue corrected;
    std::optional<int> phi;
    std::optional<ExtremalColouring> search;  ///< empty if the cap was hit
    unsigned errata = 0;                      ///< fields where printed != corrected
    unsigned registered = 0;
    RowStatus status = RowStatus::Ok;
    std::string message;
};

/// One row per n in [from, to], each cross-checked against
/// ExactSearch::full_report. A search cap is reported on its row.
std::vector<ClosedFormEntry> sweep(Family f, int from, int to, const SearchLimits &limits = {});

}  // namespace bchroma
