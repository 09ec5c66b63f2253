#include "bchroma/search.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

namespace bchroma {

namespace {

using Mask = std::uint64_t;
constexpr int kMaskBits = 64;

Mask bit(int v) { return Mask{1} << v; }

/// Integer ranking key of a labelled strength vector. With n fixed, the
/// mean is weighted/n and, for equal means, the variance orders like
/// squares, so comparisons never touch rationals.
struct Key {
    long long weighted = 0;  // Σ i θ_i
    long long squares = 0;   // Σ i² θ_i
    std::vector<int> strengths;
};

Key key_of(std::vector<int> strengths) {
    Key key;
    for (std::size_t i = 0; i < strengths.size(); ++i) {
        long long label = static_cast<long long>(i) + 1;
        key.weighted += label * strengths[i];
        key.squares += label * label * strengths[i];
    }
    key.strengths = std::move(strengths);
    return key;
}

enum class Goal { MinMean, MaxMean };

/// true if a ranks strictly before b.
bool better(Goal goal, const Key &a, const Key &b) {
    if (a.weighted != b.weighted)
        return goal == Goal::MinMean ? a.weighted < b.weighted : a.weighted > b.weighted;
    if (a.squares != b.squares) return a.squares < b.squares;
    return a.strengths < b.strengths;
}

/// Mutable colouring state shared by all the searches. Vertices are 0-based
/// here; colour 0 means uncoloured.
class State {
public:
    State(const Graph &g, int k, std::uint64_t &nodes)
        : n_(g.order()), k_(k), nbr_(static_cast<std::size_t>(n_), 0), degree_(static_cast<std::size_t>(n_), 0),
          colour_(static_cast<std::size_t>(n_), 0), classes_(static_cast<std::size_t>(k + 1), 0),
          sizes_(static_cast<std::size_t>(k + 1), 0), uncoloured_(n_ == kMaskBits ? ~Mask{0} : bit(n_) - 1),
          nodes_(nodes) {
        for (auto [u, v] : g.edges()) {
            nbr_[u - 1] |= bit(v - 1);
            nbr_[v - 1] |= bit(u - 1);
        }
        for (int v = 0; v < n_; ++v) degree_[v] = std::popcount(nbr_[v]);
    }

    int order() const { return n_; }
    int colours() const { return k_; }
    int degree(int v) const { return degree_[v]; }
    int remaining() const { return std::popcount(uncoloured_); }
    int size(int c) const { return sizes_[c]; }

    bool can_take(int v, int c) const { return (nbr_[v] & classes_[c]) == 0; }

    void assign(int v, int c) {
        colour_[v] = c;
        classes_[c] |= bit(v);
        ++sizes_[c];
        uncoloured_ &= ~bit(v);
    }

    void unassign(int v) {
        int c = colour_[v];
        colour_[v] = 0;
        classes_[c] &= ~bit(v);
        --sizes_[c];
        uncoloured_ |= bit(v);
    }

    void count_node() { ++nodes_; }

    /// Number of colours other than c that v does not yet see.
    int missing_for(int v, int c) const {
        int missing = 0;
        for (int d = 1; d <= k_; ++d)
            if (d != c && (nbr_[v] & classes_[d]) == 0) ++missing;
        return missing;
    }

    /// Whether class c can still end up with a b-vertex: either a member of
    /// c, or an uncoloured vertex free to take c, with enough uncoloured
    /// neighbours left to supply every colour it does not see yet.
    bool class_has_candidate(int c) const {
        for (int v = 0; v < n_; ++v) {
            if (colour_[v] == c) {
                if (missing_for(v, c) <= std::popcount(nbr_[v] & uncoloured_)) return true;
            } else if (colour_[v] == 0 && degree_[v] >= k_ - 1 && can_take(v, c)) {
                if (missing_for(v, c) <= std::popcount(nbr_[v] & uncoloured_)) return true;
            }
        }
        return false;
    }

    bool all_classes_have_candidates() const {
        for (int c = 1; c <= k_; ++c)
            if (!class_has_candidate(c)) return false;
        return true;
    }

    /// Complete colourings only.
    bool is_b_colouring() const {
        for (int c = 1; c <= k_; ++c) {
            if (sizes_[c] == 0) return false;
            bool found = false;
            for (Mask members = classes_[c]; members && !found; members &= members - 1) {
                int v = std::countr_zero(members);
                found = missing_for(v, c) == 0;
            }
            if (!found) return false;
        }
        return true;
    }

    Colouring to_colouring() const {
        return Colouring(k_, std::vector<int>(colour_.begin(), colour_.end()));
    }

    std::vector<int> strengths() const { return {sizes_.begin() + 1, sizes_.end()}; }

private:
    int n_;
    int k_;
    std::vector<Mask> nbr_;
    std::vector<int> degree_;
    std::vector<int> colour_;
    std::vector<Mask> classes_;
    std::vector<int> sizes_;
    Mask uncoloured_;
    std::uint64_t &nodes_;
};

/// At least k vertices of degree >= k-1 are needed to host k b-vertices.
bool enough_high_degree_vertices(const State &s, int k) {
    int count = 0;
    for (int v = 0; v < s.order(); ++v)
        if (s.degree(v) >= k - 1) ++count;
    return count >= k;
}

std::vector<int> descending_degree_order(const State &s) {
    std::vector<int> order(static_cast<std::size_t>(s.order()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return s.degree(a) > s.degree(b); });
    return order;
}

/// Visits proper colourings up to renaming of colours: vertex order[i] may
/// only open colour `opened + 1`. `on_leaf` returns false to stop;
/// `prune` sees the partial state after each assignment.
class PartitionWalk {
public:
    PartitionWalk(State &state, bool need_b, std::function<bool(int opened)> prune,
                  std::function<bool(int opened)> on_leaf)
        : s_(state), order_(descending_degree_order(state)), need_b_(need_b), prune_(std::move(prune)),
          on_leaf_(std::move(on_leaf)) {}

    void run() {
        s_.count_node();
        if (need_b_ && (!enough_high_degree_vertices(s_, s_.colours()) || !s_.all_classes_have_candidates())) return;
        descend(0, 0);
    }

private:
    bool descend(std::size_t depth, int opened) {
        if (depth == order_.size()) return opened < s_.colours() || on_leaf_(opened);
        const int v = order_[depth];
        const int top = std::min(opened + 1, s_.colours());
        for (int c = 1; c <= top; ++c) {
            if (!s_.can_take(v, c)) continue;
            const int now_open = std::max(opened, c);
            s_.assign(v, c);
            s_.count_node();
            bool keep_going = true;
            if (s_.remaining() >= s_.colours() - now_open && (!need_b_ || s_.all_classes_have_candidates()) &&
                !(prune_ && prune_(now_open)))
                keep_going = descend(depth + 1, now_open);
            s_.unassign(v);
            if (!keep_going) return false;
        }
        return true;
    }

    State &s_;
    std::vector<int> order_;
    bool need_b_;
    std::function<bool(int)> prune_;
    std::function<bool(int)> on_leaf_;
};

/// Smallest Σ i θ_i over the non-increasingly labelled strength vectors
/// reachable from the current partial partition. Unopened classes need one
/// vertex each; the rest all going to the largest class is optimal.
long long min_weighted_reachable(const State &s, int opened) {
    const int k = s.colours();
    std::vector<int> sizes(static_cast<std::size_t>(k), 1);
    for (int c = 1; c <= opened; ++c) sizes[c - 1] = s.size(c);
    int spare = s.remaining() - (k - opened);
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    sizes[0] += spare;
    long long weighted = 0;
    for (int i = 0; i < k; ++i) weighted += static_cast<long long>(i + 1) * sizes[i];
    return weighted;
}

std::vector<int> sorted_strengths(const State &s, Goal goal) {
    auto strengths = s.strengths();
    if (goal == Goal::MinMean)
        std::sort(strengths.begin(), strengths.end(), std::greater<>());
    else
        std::sort(strengths.begin(), strengths.end());
    return strengths;
}

/// Lexicographically smallest b-colouring (vertex 1 first, colours
/// ascending) whose strength vector is exactly `target`.
std::optional<Colouring> first_with_strengths(State &s, const std::vector<int> &target) {
    const int n = s.order();
    const int k = s.colours();
    std::optional<Colouring> found;
    std::function<bool(int)> descend = [&](int v) -> bool {
        if (v == n) {
            if (!s.is_b_colouring()) return true;
            found = s.to_colouring();
            return false;
        }
        for (int c = 1; c <= k; ++c) {
            if (s.size(c) >= target[c - 1] || !s.can_take(v, c)) continue;
            s.assign(v, c);
            s.count_node();
            bool keep_going = !s.all_classes_have_candidates() || descend(v + 1);
            s.unassign(v);
            if (!keep_going) return false;
        }
        return true;
    };
    s.count_node();
    descend(0);
    return found;
}

}  // namespace

ExactSearch::ExactSearch(const Graph &g, SearchLimits limits) : graph_(g), limits_(limits) {
    const int cap = std::min(limits_.max_search_order, kMaskBits);
    if (g.order() > cap)
        throw SearchCapExceeded("graph has " + std::to_string(g.order()) + " vertices; exact search is capped at " +
                                std::to_string(cap));
    if (!limits_.allow_disconnected && !g.is_connected())
        throw GraphError("graph is disconnected; statistics require a connected graph");
}

int ExactSearch::chromatic_number() {
    for (int k = 1;; ++k) {
        State s(graph_, k, nodes_);
        bool found = false;
        PartitionWalk walk(s, false, nullptr, [&](int) {
            found = true;
            return false;
        });
        walk.run();
        if (found) return k;
    }
}

std::optional<Colouring> ExactSearch::find_b_colouring(int k) {
    if (k < 1 || k > graph_.order()) return std::nullopt;
    State s(graph_, k, nodes_);
    std::optional<Colouring> found;
    PartitionWalk walk(s, true, nullptr, [&](int) {
        if (!s.is_b_colouring()) return true;
        found = s.to_colouring();
        return false;
    });
    walk.run();
    return found;
}

int ExactSearch::b_chromatic_number() {
    for (int k = max_degree(graph_) + 1; k >= 1; --k)
        if (find_b_colouring(k)) return k;
    // Unreachable: a single colour class of K1, or any χ-colouring, is a b-colouring.
    throw NoBColouring("no b-colouring found");
}

namespace {

ExtremalColouring optimise(const Graph &g, int k, Goal goal, std::uint64_t &nodes) {
    if (k < 1 || k > g.order()) throw NoBColouring("no b-colouring with " + std::to_string(k) + " colours");
    const long long n = g.order();
    State s(g, k, nodes);
    std::optional<Key> best;

    auto prune = [&](int opened) {
        if (!best) return false;
        long long low = min_weighted_reachable(s, opened);
        if (goal == Goal::MinMean) return low > best->weighted;
        return (k + 1) * n - low < best->weighted;
    };
    auto on_leaf = [&](int) {
        if (!s.is_b_colouring()) return true;
        Key key = key_of(sorted_strengths(s, goal));
        if (!best || better(goal, key, *best)) best = std::move(key);
        return true;
    };
    PartitionWalk(s, true, prune, on_leaf).run();
    if (!best) throw NoBColouring("no b-colouring with " + std::to_string(k) + " colours");

    State fresh(g, k, nodes);
    auto colouring = first_with_strengths(fresh, best->strengths);
    // The strength vector came from a b-colouring, so a labelled one exists.
    if (!colouring) throw std::logic_error("optimal strength vector has no realizing colouring");
    auto dist = ColourDistribution::from_strengths(best->strengths);
    return {std::move(*colouring), best->strengths, stats_of(dist)};
}

}  // namespace

ExtremalColouring ExactSearch::min_mean_b_colouring(int k) { return optimise(graph_, k, Goal::MinMean, nodes_); }

ExtremalColouring ExactSearch::max_mean_b_colouring(int k) { return optimise(graph_, k, Goal::MaxMean, nodes_); }

SearchReport ExactSearch::full_report() {
    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t nodes_before = nodes_;
    SearchReport report{.chi = chromatic_number(),
                        .phi = b_chromatic_number(),
                        .min = {Colouring(1, {1}), {}, {}},
                        .max = {Colouring(1, {1}), {}, {}},
                        .nodes_explored = 0,
                        .elapsed = {},
                        .warnings = {}};
    report.min = min_mean_b_colouring(report.phi);
    report.max = max_mean_b_colouring(report.phi);
    report.nodes_explored = nodes_ - nodes_before;
    report.elapsed = std::chrono::steady_clock::now() - start;
    if (graph_.is_trivial()) report.warnings.emplace_back("trivial graph (K1): phi defined as 1");
    return report;
}

int chromatic_number(const Graph &g, const SearchLimits &limits) { return ExactSearch(g, limits).chromatic_number(); }

int b_chromatic_number(const Graph &g, const SearchLimits &limits) {
    return ExactSearch(g, limits).b_chromatic_number();
}

ExtremalColouring min_mean_b_colouring(const Graph &g, int k, const SearchLimits &limits) {
    return ExactSearch(g, limits).min_mean_b_colouring(k);
}

ExtremalColouring max_mean_b_colouring(const Graph &g, int k, const SearchLimits &limits) {
    return ExactSearch(g, limits).max_mean_b_colouring(k);
}

SearchReport full_report(const Graph &g, const SearchLimits &limits) { return ExactSearch(g, limits).full_report(); }

}  // namespace bchroma
