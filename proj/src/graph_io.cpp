#include "bchroma/graph_io.hpp"

#include <array>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace bchroma {

ParseError::ParseError(const std::string &what, int line)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

namespace {

struct LineReader {
    std::istream &in;
    int number = 0;

    bool next(std::string &line) {
        if (!std::getline(in, line)) return false;
        ++number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        return true;
    }
};

bool is_blank(const std::string &s) { return s.find_first_not_of(" \t") == std::string::npos; }

/// Parses exactly `count` integers and nothing else from a line.
template <std::size_t Count>
bool parse_ints(std::istringstream &ss, std::array<long long, Count> &out) {
    for (auto &x : out)
        if (!(ss >> x)) return false;
    std::string rest;
    return !(ss >> rest);
}

Edge checked_edge(long long u, long long v, long long n, int line) {
    if (u < 1 || u > n || v < 1 || v > n)
        throw ParseError("endpoint out of range 1.." + std::to_string(n), line);
    if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), line);
    return {static_cast<Vertex>(u), static_cast<Vertex>(v)};
}

Graph finish(long long n, long long m, std::vector<Edge> &edges, int line) {
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError("header declares " + std::to_string(m) + " edges but " + std::to_string(edges.size()) +
                             " were listed",
                         line);
    return Graph(static_cast<int>(n), edges);
}

Graph read_edge_list(std::istream &in) {
    LineReader reader{in};
    std::string line;
    long long n = -1, m = -1;
    std::vector<Edge> edges;
    while (reader.next(line)) {
        if (is_blank(line)) continue;
        std::istringstream ss(line);
        std::array<long long, 2> vals{};
        if (!parse_ints(ss, vals)) throw ParseError("expected two integers", reader.number);
        if (n < 0) {
            n = vals[0];
            m = vals[1];
            if (n < 1 || m < 0) throw ParseError("malformed header: need n >= 1 and m >= 0", reader.number);
            continue;
        }
        edges.push_back(checked_edge(vals[0], vals[1], n, reader.number));
    }
    if (in.bad()) throw std::runtime_error("I/O failure while reading graph");
    if (n < 0) throw ParseError("missing header line", 0);
    return finish(n, m, edges, reader.number);
}

Graph read_dimacs(std::istream &in) {
    LineReader reader{in};
    std::string line;
    long long n = -1, m = -1;
    std::vector<Edge> edges;
    while (reader.next(line)) {
        if (is_blank(line)) continue;
        std::istringstream ss(line);
        std::string tag;
        ss >> tag;
        if (tag == "c") continue;
        if (tag == "p") {
            if (n >= 0) throw ParseError("duplicate problem line", reader.number);
            std::string kind;
            ss >> kind;
            if (kind != "edge" && kind != "col") throw ParseError("malformed header: expected 'p edge <n> <m>'", reader.number);
            std::array<long long, 2> vals{};
            if (!parse_ints(ss, vals) || vals[0] < 1 || vals[1] < 0)
                throw ParseError("malformed header: expected 'p edge <n> <m>'", reader.number);
            n = vals[0];
            m = vals[1];
        } else if (tag == "e") {
            if (n < 0) throw ParseError("edge line before problem line", reader.number);
            std::array<long long, 2> vals{};
            if (!parse_ints(ss, vals)) throw ParseError("expected 'e <u> <v>'", reader.number);
            edges.push_back(checked_edge(vals[0], vals[1], n, reader.number));
        } else {
            throw ParseError("unknown line type '" + tag + "'", reader.number);
        }
    }
    if (in.bad()) throw std::runtime_error("I/O failure while reading graph");
    if (n < 0) throw ParseError("missing problem line", 0);
    return finish(n, m, edges, reader.number);
}

}  // namespace

Graph read_graph(std::istream &in, GraphFormat format) {
    return format == GraphFormat::Dimacs ? read_dimacs(in) : read_edge_list(in);
}

void write_graph(std::ostream &out, const Graph &g, GraphFormat format) {
    if (format == GraphFormat::Dimacs) {
        out << "p edge " << g.order() << ' ' << g.size() << '\n';
        for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
    } else {
        out << g.order() << ' ' << g.size() << '\n';
        for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    }
    if (!out) throw std::runtime_error("I/O failure while writing graph");
}

Colouring read_colouring(std::istream &in, int n) {
    LineReader reader{in};
    std::string line;
    long long k = -1;
    std::vector<int> assignment(static_cast<std::size_t>(n), 0);
    int seen = 0;
    while (reader.next(line)) {
        if (is_blank(line)) continue;
        std::istringstream ss(line);
        if (k < 0) {
            std::array<long long, 1> vals{};
            if (!parse_ints(ss, vals) || vals[0] < 1) throw ParseError("expected colour count k >= 1", reader.number);
            k = vals[0];
            continue;
        }
        std::array<long long, 2> vals{};
        if (!parse_ints(ss, vals)) throw ParseError("expected 'vertex colour'", reader.number);
        auto [v, col] = vals;
        if (v < 1 || v > n) throw ParseError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n), reader.number);
        if (col < 1 || col > k) throw ParseError("colour " + std::to_string(col) + " outside 1.." + std::to_string(k), reader.number);
        if (assignment[v - 1] != 0) throw ParseError("vertex " + std::to_string(v) + " coloured twice", reader.number);
        assignment[v - 1] = static_cast<int>(col);
        ++seen;
    }
    if (in.bad()) throw std::runtime_error("I/O failure while reading colouring");
    if (k < 0) throw ParseError("missing colour count line", 0);
    if (seen != n)
        throw ParseError("colouring covers " + std::to_string(seen) + " of " + std::to_string(n) + " vertices", 0);
    return Colouring(static_cast<int>(k), std::move(assignment));
}

void write_colouring(std::ostream &out, const Colouring &c) {
    out << c.colours() << '\n';
    for (Vertex v = 1; v <= c.order(); ++v) out << v << ' ' << c.colour_of(v) << '\n';
}

GraphFormat parse_graph_format(std::string_view name) {
    if (name == "dimacs" || name == "col") return GraphFormat::Dimacs;
    if (name == "edgelist" || name == "edge-list") return GraphFormat::EdgeList;
    throw std::invalid_argument("unknown graph format '" + std::string(name) + "'");
}

}  // namespace bchroma
