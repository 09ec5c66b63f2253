#include "bchroma/records.hpp"

#include <json.hpp>

#include <sstream>

namespace bchroma {

namespace {

using Json = nlohmann::ordered_json;

Json integer(const BigInt &value) {
    if (value > std::numeric_limits<long long>::max() || value < std::numeric_limits<long long>::min())
        return value.str();  // beyond int64; kept exact as a decimal string
    return static_cast<long long>(value);
}

Json rational(const Rational &r) { return Json{{"num", integer(numerator_of(r))}, {"den", integer(denominator_of(r))}}; }

Json optional_rational(const std::optional<Rational> &r) { return r ? rational(*r) : Json(nullptr); }

Json header(const char *command) {
    return Json{{"tool", "bchroma"}, {"version", BCHROMA_VERSION}, {"command", command}};
}

Json descriptor(const GraphDescriptor &source) {
    if (!source.path.empty()) return Json{{"file", source.path}};
    return Json{{"family", source.family}, {"parameters", source.parameters}};
}

Json extremal(const ExtremalColouring &e) {
    return Json{{"mean", rational(e.stats.mean)},
                {"variance", rational(e.stats.variance)},
                {"strengths", e.strengths},
                {"colouring", e.colouring.assignment()}};
}

std::string dump(const Json &j) { return j.dump(2) + "\n"; }

std::string descriptor_text(const GraphDescriptor &source) {
    if (!source.path.empty()) return source.path;
    std::string out = source.family;
    for (int p : source.parameters) out += ":" + std::to_string(p);
    return out;
}

std::string join(const std::vector<int> &values, char sep = ' ') {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(values[i]);
    }
    return out;
}

std::string fields_text(unsigned mask) {
    if (mask == (kMeanField | kVarianceField)) return "mean+variance";
    if (mask == kMeanField) return "mean";
    if (mask == kVarianceField) return "variance";
    return "";
}

}  // namespace

std::string report_json(const GraphDescriptor &source, const SearchReport &report, const SearchLimits &limits) {
    Json j = header("stats");
    j["graph"] = descriptor(source);
    j["parameters"] = Json{{"max_n", limits.max_search_order}, {"allow_disconnected", limits.allow_disconnected}};
    j["order"] = report.min.colouring.order();
    j["chi"] = report.chi;
    j["phi"] = report.phi;
    j["min"] = extremal(report.min);
    j["max"] = extremal(report.max);
    j["nodes_explored"] = report.nodes_explored;
    j["warnings"] = report.warnings;
    return dump(j);
}

std::string report_csv(const GraphDescriptor &source, const SearchReport &report) {
    std::ostringstream out;
    out << "graph,order,chi,phi,min_mean,min_variance,min_strengths,max_mean,max_variance,max_strengths\n";
    out << descriptor_text(source) << ',' << report.min.colouring.order() << ',' << report.chi << ',' << report.phi
        << ',' << to_string(report.min.stats.mean) << ',' << to_string(report.min.stats.variance) << ','
        << join(report.min.strengths) << ',' << to_string(report.max.stats.mean) << ','
        << to_string(report.max.stats.variance) << ',' << join(report.max.strengths) << '\n';
    return out.str();
}

std::string phi_json(const GraphDescriptor &source, int chi, int phi, int max_degree) {
    Json j = header("phi");
    j["graph"] = descriptor(source);
    j["chi"] = chi;
    j["phi"] = phi;
    j["max_degree"] = max_degree;
    return dump(j);
}

std::string phi_csv(const GraphDescriptor &source, int chi, int phi, int max_degree) {
    std::ostringstream out;
    out << "graph,chi,phi,max_degree\n" << descriptor_text(source) << ',' << chi << ',' << phi << ',' << max_degree << '\n';
    return out.str();
}

ColouringSummary summarise(const Graph &g, const Colouring &c) {
    auto dist = distribution(g, c);
    ChromaStats stats = stats_of(dist);
    bool proper = is_proper(g, c);
    auto failing = classes_without_b_vertex(g, c);
    bool b = proper && failing.empty();
    return {std::move(dist), std::move(stats), proper, b, std::move(failing)};
}

std::string colouring_json(const GraphDescriptor &source, const ColouringSummary &s) {
    Json j = header("stats");
    j["graph"] = descriptor(source);
    j["k"] = s.distribution.k;
    j["strengths"] = s.distribution.strengths;
    Json pmf = Json::array();
    for (const auto &f : s.distribution.pmf) pmf.push_back(rational(f));
    j["pmf"] = pmf;
    j["mean"] = rational(s.stats.mean);
    j["variance"] = rational(s.stats.variance);
    j["proper"] = s.proper;
    j["b_colouring"] = s.b_colouring;
    j["classes_without_b_vertex"] = s.classes_without_b_vertex;
    return dump(j);
}

std::string colouring_csv(const GraphDescriptor &source, const ColouringSummary &s) {
    std::ostringstream out;
    out << "graph,k,strengths,pmf,mean,variance,proper,b_colouring,classes_without_b_vertex\n";
    std::string pmf;
    for (std::size_t i = 0; i < s.distribution.pmf.size(); ++i) pmf += (i ? " " : "") + to_string(s.distribution.pmf[i]);
    out << descriptor_text(source) << ',' << s.distribution.k << ',' << join(s.distribution.strengths) << ',' << pmf
        << ',' << to_string(s.stats.mean) << ',' << to_string(s.stats.variance) << ',' << (s.proper ? "yes" : "no")
        << ',' << (s.b_colouring ? "yes" : "no") << ',' << join(s.classes_without_b_vertex) << '\n';
    return out.str();
}

std::string sweep_json(Family f, int from, int to, const std::vector<ClosedFormEntry> &rows,
                       const SearchLimits &limits) {
    Json j = header("sweep");
    j["family"] = std::string(family_name(f));
    j["range"] = Json{{"from", from}, {"to", to}};
    j["parameters"] = Json{{"max_n", limits.max_search_order}};
    Json table = Json::array();
    int errata_rows = 0;
    int failing_rows = 0;
    for (const auto &row : rows) {
        Json r;
        r["n"] = row.n;
        r["paper"] = Json{{"mean", optional_rational(row.paper.mean)},
                          {"variance", optional_rational(row.paper.variance)},
                          {"mean_expr", row.paper.mean_expr},
                          {"variance_expr", row.paper.variance_expr}};
        r["corrected"] = Json{{"mean", rational(row.corrected.mean)},
                              {"variance", rational(row.corrected.variance)},
                              {"mean_expr", row.corrected.mean_expr},
                              {"variance_expr", row.corrected.variance_expr}};
        if (row.search) {
            r["search"] = extremal(*row.search);
            r["search"]["phi"] = *row.phi;
        } else {
            r["search"] = nullptr;
        }
        r["errata"] = fields_text(row.errata);
        r["registered"] = fields_text(row.registered);
        r["note"] = row.corrected.note;
        r["status"] = std::string(status_name(row.status));
        if (!row.message.empty()) r["message"] = row.message;
        if (row.errata) ++errata_rows;
        if (row.status != RowStatus::Ok) ++failing_rows;
        table.push_back(std::move(r));
    }
    j["rows"] = std::move(table);
    j["summary"] = Json{{"rows", rows.size()}, {"errata_rows", errata_rows}, {"failing_rows", failing_rows}};
    return dump(j);
}

std::string sweep_csv(const std::vector<ClosedFormEntry> &rows) {
    std::ostringstream out;
    out << "family,n,phi,paper_mean,paper_variance,corrected_mean,corrected_variance,search_mean,search_variance,"
           "strengths,errata,status\n";
    auto opt = [](const std::optional<Rational> &r) { return r ? to_string(*r) : std::string("-"); };
    for (const auto &row : rows) {
        out << family_name(row.family) << ',' << row.n << ',' << (row.phi ? std::to_string(*row.phi) : "-") << ','
            << opt(row.paper.mean) << ',' << opt(row.paper.variance) << ',' << to_string(row.corrected.mean) << ','
            << to_string(row.corrected.variance) << ',';
        if (row.search)
            out << to_string(row.search->stats.mean) << ',' << to_string(row.search->stats.variance) << ','
                << join(row.search->strengths);
        else
            out << "-,-,-";
        out << ',' << fields_text(row.errata) << ',' << status_name(row.status) << '\n';
    }
    return out.str();
}

}  // namespace bchroma
