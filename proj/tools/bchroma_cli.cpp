// bchroma: b-colouring statistics from the command line.
//
// Exit codes: 0 success, 1 I/O failure, 2 usage or invalid input,
// 3 search cap exceeded, 4 verification regression.

#include "bchroma/closed_forms.hpp"
#include "bchroma/graph_io.hpp"
#include "bchroma/records.hpp"
#include "bchroma/search.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace bchroma;

enum ExitCode { kOk = 0, kIoError = 1, kUsage = 2, kCapExceeded = 3, kRegression = 4 };

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Options {
    std::string family;
    int n = 0;
    int b = 0;
    std::uint64_t seed = 1;
    std::string range;
    std::string format;
    std::string colouring_file;
    std::string graph_file;
    std::string out_file;
    int max_n = SearchLimits{}.max_search_order;
    bool allow_disconnected = false;
    bool registry = false;
};

SearchLimits limits_from(const Options &opt) {
    SearchLimits limits;
    limits.max_search_order = opt.max_n;
    limits.allow_disconnected = opt.allow_disconnected;
    return limits;
}

Graph generate(const Options &opt) {
    if (opt.family.empty()) throw UsageError("--family is required");
    if (opt.family == "path") return path(opt.n);
    if (opt.family == "cycle") return cycle(opt.n);
    if (opt.family == "complete") return complete(opt.n);
    if (opt.family == "complete-bipartite") return complete_bipartite(opt.n, opt.b > 0 ? opt.b : opt.n);
    if (opt.family == "wheel") return wheel(opt.n);
    if (opt.family == "sunlet") return sunlet(opt.n);
    if (opt.family == "closed-ladder") return closed_ladder(opt.n);
    if (opt.family == "random") return random_connected_graph(opt.n, opt.seed);
    throw UsageError("unknown family '" + opt.family + "'");
}

GraphDescriptor describe(const Options &opt) {
    if (!opt.graph_file.empty()) return {{}, {}, opt.graph_file};
    GraphDescriptor d{opt.family, {opt.n}, {}};
    if (opt.family == "complete-bipartite") d.parameters.push_back(opt.b > 0 ? opt.b : opt.n);
    if (opt.family == "random") d.parameters.push_back(static_cast<int>(opt.seed));
    return d;
}

/// DIMACS if the first non-blank line is a "c" or "p" line, edge list otherwise.
GraphFormat sniff_format(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        return (line[pos] == 'c' || line[pos] == 'p') ? GraphFormat::Dimacs : GraphFormat::EdgeList;
    }
    return GraphFormat::EdgeList;
}

std::string slurp(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("failed reading '" + path + "'");
    return buf.str();
}

Graph load_graph(const Options &opt) {
    if (opt.graph_file.empty()) return generate(opt);
    if (!opt.family.empty()) throw UsageError("give either a graph file or --family, not both");
    std::string text = slurp(opt.graph_file);
    std::istringstream in(text);
    return read_graph(in, sniff_format(text));
}

class Output {
public:
    explicit Output(const std::string &path) {
        if (path.empty()) return;
        file_.open(path, std::ios::binary);
        if (!file_) throw IoError("cannot open '" + path + "' for writing");
    }
    std::ostream &stream() { return file_.is_open() ? static_cast<std::ostream &>(file_) : std::cout; }
    void finish() {
        stream().flush();
        if (!stream()) throw IoError("write failed");
    }

private:
    std::ofstream file_;
};

bool wants_csv(const Options &opt) {
    if (opt.format.empty() || opt.format == "json") return false;
    if (opt.format == "csv") return true;
    throw UsageError("--format must be json or csv for this command");
}

std::pair<int, int> parse_range(const std::string &text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) throw UsageError("--range must look like A..B");
    try {
        std::size_t used_a = 0, used_b = 0;
        int a = std::stoi(text.substr(0, dots), &used_a);
        int b = std::stoi(text.substr(dots + 2), &used_b);
        if (used_a != dots || used_b != text.size() - dots - 2 || a > b) throw UsageError("bad range");
        return {a, b};
    } catch (const std::logic_error &) {
        throw UsageError("--range must look like A..B with A <= B");
    }
}

void warn_trivial(const Graph &g) {
    if (g.is_trivial()) std::cerr << "warning: trivial graph (K1)\n";
}

int cmd_gen(const Options &opt) {
    Graph g = generate(opt);
    GraphFormat format = opt.format.empty() ? GraphFormat::EdgeList : parse_graph_format(opt.format);
    warn_trivial(g);
    Output out(opt.out_file);
    write_graph(out.stream(), g, format);
    out.finish();
    return kOk;
}

int cmd_stats(const Options &opt) {
    Graph g = load_graph(opt);
    const bool csv = wants_csv(opt);
    warn_trivial(g);
    auto source = describe(opt);
    std::string text;
    if (!opt.colouring_file.empty()) {
        std::istringstream in(slurp(opt.colouring_file));
        Colouring c = read_colouring(in, g.order());
        auto summary = summarise(g, c);
        text = csv ? colouring_csv(source, summary) : colouring_json(source, summary);
        for (int col : summary.classes_without_b_vertex)
            std::cerr << "colour class " << col << " has no b-vertex\n";
    } else {
        auto limits = limits_from(opt);
        auto report = full_report(g, limits);
        text = csv ? report_csv(source, report) : report_json(source, report, limits);
    }
    Output out(opt.out_file);
    out.stream() << text;
    out.finish();
    return kOk;
}

int cmd_phi(const Options &opt) {
    Graph g = load_graph(opt);
    const bool csv = wants_csv(opt);
    ExactSearch search(g, limits_from(opt));
    int chi = search.chromatic_number();
    int phi = search.b_chromatic_number();
    auto source = describe(opt);
    Output out(opt.out_file);
    out.stream() << (csv ? phi_csv(source, chi, phi, max_degree(g)) : phi_json(source, chi, phi, max_degree(g)));
    out.finish();
    return kOk;
}

int cmd_sweep(const Options &opt, bool gate) {
    const bool csv = wants_csv(opt);
    if (opt.registry) {
        Output out(opt.out_file);
        write_errata_csv(out.stream());
        out.finish();
        return kOk;
    }
    if (opt.family.empty()) throw UsageError("--family is required");
    if (opt.range.empty()) throw UsageError("--range is required");
    Family family = parse_family(opt.family);
    auto [from, to] = parse_range(opt.range);
    auto limits = limits_from(opt);
    auto rows = sweep(family, from, to, limits);

    Output out(opt.out_file);
    out.stream() << (csv ? sweep_csv(rows) : sweep_json(family, from, to, rows, limits));
    out.finish();

    bool capped = false;
    bool regression = false;
    for (const auto &row : rows) {
        if (row.status == RowStatus::CapExceeded) capped = true;
        if (row.status == RowStatus::Mismatch || row.status == RowStatus::Unregistered) {
            regression = true;
            std::cerr << family_name(family) << " n=" << row.n << ": " << status_name(row.status) << ": "
                      << row.message << '\n';
        }
    }
    if (gate && regression) return kRegression;
    return capped ? kCapExceeded : kOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"b-colouring statistics: b-chromatic number, minimum/maximum-mean b-colourings, closed-form checks"};
    app.set_version_flag("--version", BCHROMA_VERSION);
    app.require_subcommand(1);

    Options opt;
    const std::string families = "path|cycle|complete|complete-bipartite|wheel|sunlet|closed-ladder|random";

    auto add_family = [&](CLI::App *cmd) {
        cmd->add_option("--family", opt.family, families);
        cmd->add_option("--n", opt.n, "family parameter (left side size for complete-bipartite)");
        cmd->add_option("--b", opt.b, "right side size for complete-bipartite (default: --n)");
        cmd->add_option("--seed", opt.seed, "seed for --family random");
    };
    auto add_common = [&](CLI::App *cmd) {
        cmd->add_option("--out", opt.out_file, "write output here instead of stdout");
        cmd->add_option("--max-n", opt.max_n, "largest graph the exact search accepts")->check(CLI::Range(1, 64));
        cmd->add_flag("--allow-disconnected", opt.allow_disconnected, "compute statistics on disconnected graphs");
    };

    auto *gen = app.add_subcommand("gen", "write a family graph");
    add_family(gen);
    gen->add_option("--format", opt.format, "dimacs|edgelist (default edgelist)");
    gen->add_option("--out", opt.out_file, "write output here instead of stdout");

    auto *stats = app.add_subcommand("stats", "colouring statistics, or the full b-chromatic report");
    stats->add_option("graph", opt.graph_file, "graph file (DIMACS or edge list)");
    add_family(stats);
    add_common(stats);
    stats->add_option("--colouring", opt.colouring_file, "colouring file: k, then 'vertex colour' lines");
    stats->add_option("--format", opt.format, "json|csv (default json)");

    auto *phi = app.add_subcommand("phi", "chromatic and b-chromatic numbers");
    phi->add_option("graph", opt.graph_file, "graph file (DIMACS or edge list)");
    add_family(phi);
    add_common(phi);
    phi->add_option("--format", opt.format, "json|csv (default json)");

    auto *verify = app.add_subcommand("verify", "check closed forms against exact search; exit 4 on regression");
    auto *sweep_cmd = app.add_subcommand("sweep", "tabulate closed forms against exact search");
    for (auto *cmd : {verify, sweep_cmd}) {
        cmd->add_option("--family", opt.family, "path|cycle|complete|wheel|sunlet|closed-ladder");
        cmd->add_option("--range", opt.range, "A..B");
        cmd->add_option("--format", opt.format, "json|csv (default json)");
        add_common(cmd);
    }
    sweep_cmd->add_flag("--registry", opt.registry, "print the errata registry as CSV and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*gen) return cmd_gen(opt);
        if (*stats) return cmd_stats(opt);
        if (*phi) return cmd_phi(opt);
        if (*verify) return cmd_sweep(opt, true);
        if (*sweep_cmd) return cmd_sweep(opt, false);
    } catch (const IoError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const SearchCapExceeded &e) {
        std::cerr << "error: " << e.what() << " (raise with --max-n)\n";
        return kCapExceeded;
    } catch (const ParseError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument &e) {  // GraphError, ColouringError, UsageError
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::domain_error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIoError;
    }
    return kUsage;
}
