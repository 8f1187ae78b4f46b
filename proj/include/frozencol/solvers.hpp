#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "frozencol/graph.hpp"
#include "frozencol/partition.hpp"
#include "frozencol/patterns.hpp"

namespace frozencol {

/// Exact solvers refuse graphs above `max_order` vertices rather than approximate.
/// The bit-parallel kernels cap the override at 64.
struct SolverOptions {
    int max_order = 40;
};

inline constexpr int solver_hard_limit = 64;

struct ColouringResult {
    int value = 0;
    BlockPartition witness;
};

struct SetResult {
    int value = 0;
    VertexSet witness;
};

namespace detail {

using Mask = std::uint64_t;

inline void check_bound(const Graph& g, const SolverOptions& opt, const char* what) {
    const int bound = std::min(opt.max_order, solver_hard_limit);
    if (g.order() > bound)
        throw LimitExceeded(std::string(what) + ": graph has " + std::to_string(g.order()) + " vertices, exact bound is " +
                            std::to_string(bound));
}

inline std::vector<Mask> adjacency_masks(const Graph& g) {
    std::vector<Mask> adj(g.order(), 0);
    for (int v = 0; v < g.order(); ++v)
        for (int w : g.neighbours(v)) adj[v] |= Mask{1} << w;
    return adj;
}

// Maximum clique by branch and bound with a greedy colouring bound.
class MaxClique {
public:
    explicit MaxClique(const Graph& g) : n_(g.order()), adj_(adjacency_masks(g)) {}

    Mask run() {
        Mask all = n_ == 64 ? ~Mask{0} : ((Mask{1} << n_) - 1);
        expand(0, all);
        return best_;
    }

private:
    void expand(Mask current, Mask cand) {
        std::vector<int> order;
        std::vector<int> bound;
        colour_sort(cand, order, bound);
        const int size = std::popcount(current);
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (size + bound[i] <= best_size_) return;
            const int v = order[i];
            const Mask next = current | (Mask{1} << v);
            const Mask sub = cand & adj_[v];
            if (sub == 0) {
                if (size + 1 > best_size_) {
                    best_size_ = size + 1;
                    best_ = next;
                }
            } else {
                expand(next, sub);
            }
            cand &= ~(Mask{1} << v);
        }
    }

    // Greedy colouring of the candidates in index order; bound[i] is the
    // number of colours used up to order[i].
    void colour_sort(Mask cand, std::vector<int>& order, std::vector<int>& bound) const {
        int colour = 0;
        while (cand) {
            ++colour;
            Mask avail = cand;
            while (avail) {
                int v = std::countr_zero(avail);
                avail &= ~(Mask{1} << v);
                avail &= ~adj_[v];
                cand &= ~(Mask{1} << v);
                order.push_back(v);
                bound.push_back(colour);
            }
        }
    }

    int n_;
    std::vector<Mask> adj_;
    Mask best_ = 0;
    int best_size_ = 0;
};

// DSATUR-driven search for a k-colouring.
class Colourer {
public:
    Colourer(const Graph& g, int k)
        : g_(g), n_(g.order()), k_(k), adj_(adjacency_masks(g)), colour_(n_, -1), count_(n_ * k, 0), seen_(n_, 0) {}

    std::optional<std::vector<int>> run() {
        if (n_ == 0) return colour_;
        if (k_ <= 0) return std::nullopt;
        if (search(0, 0)) return colour_;
        return std::nullopt;
    }

private:
    int pick() const {
        int best = -1;
        int best_sat = -1;
        int best_deg = -1;
        for (int v = 0; v < n_; ++v) {
            if (colour_[v] >= 0) continue;
            int sat = std::popcount(seen_[v]);
            int deg = g_.degree(v);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    void assign(int v, int c) {
        colour_[v] = c;
        for (Mask m = adj_[v]; m; m &= m - 1) {
            int w = std::countr_zero(m);
            if (count_[w * k_ + c]++ == 0) seen_[w] |= Mask{1} << c;
        }
    }

    void unassign(int v) {
        int c = colour_[v];
        colour_[v] = -1;
        for (Mask m = adj_[v]; m; m &= m - 1) {
            int w = std::countr_zero(m);
            if (--count_[w * k_ + c] == 0) seen_[w] &= ~(Mask{1} << c);
        }
    }

    bool search(int placed, int used) {
        if (placed == n_) return true;
        const int v = pick();
        if (std::popcount(seen_[v]) >= k_) return false;
        const int top = std::min(used + 1, k_);
        for (int c = 0; c < top; ++c) {
            if (seen_[v] & (Mask{1} << c)) continue;
            assign(v, c);
            if (search(placed + 1, std::max(used, c + 1))) return true;
            unassign(v);
        }
        return false;
    }

    const Graph& g_;
    int n_;
    int k_;
    std::vector<Mask> adj_;
    std::vector<int> colour_;
    std::vector<int> count_;
    std::vector<Mask> seen_;
};

// DSATUR without backtracking: an upper bound and a witness.
inline std::vector<int> greedy_dsatur(const Graph& g) {
    const int n = g.order();
    std::vector<int> colour(n, -1);
    std::vector<Mask> seen(n, 0);
    auto adj = adjacency_masks(g);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (colour[v] >= 0) continue;
            if (best < 0 || std::popcount(seen[v]) > std::popcount(seen[best]) ||
                (std::popcount(seen[v]) == std::popcount(seen[best]) && g.degree(v) > g.degree(best)))
                best = v;
        }
        int c = std::countr_zero(~seen[best]);
        colour[best] = c;
        for (Mask m = adj[best]; m; m &= m - 1) seen[std::countr_zero(m)] |= Mask{1} << c;
    }
    return colour;
}

inline VertexSet mask_to_set(int n, Mask m) {
    VertexSet s(n);
    for (; m; m &= m - 1) s.insert(std::countr_zero(m));
    return s;
}

}  // namespace detail

inline SetResult clique_number(const Graph& g, const SolverOptions& opt = {}) {
    detail::check_bound(g, opt, "clique_number");
    VertexSet w = detail::mask_to_set(g.order(), detail::MaxClique(g).run());
    if (!is_clique(g, w)) throw InternalCheckFailed("clique_number: witness is not a clique");
    return {w.size(), std::move(w)};
}

inline SetResult independence_number(const Graph& g, const SolverOptions& opt = {}) {
    detail::check_bound(g, opt, "independence_number");
    VertexSet w = detail::mask_to_set(g.order(), detail::MaxClique(complement(g)).run());
    if (!is_independent(g, w)) throw InternalCheckFailed("independence_number: witness is not independent");
    return {w.size(), std::move(w)};
}

/// Whether g has a proper colouring with at most k colours; returns one if so.
inline std::optional<BlockPartition> find_colouring(const Graph& g, int k, const SolverOptions& opt = {}) {
    detail::check_bound(g, opt, "find_colouring");
    if (k > solver_hard_limit) k = solver_hard_limit;
    auto c = detail::Colourer(g, k).run();
    if (!c) return std::nullopt;
    return BlockPartition::from_colours(*c, std::max(k, 0));
}

/// Exact chromatic number: clique lower bound, DSATUR upper bound, then
/// decide k-colourability upward from the lower bound.
inline ColouringResult chromatic_number(const Graph& g, const SolverOptions& opt = {}) {
    detail::check_bound(g, opt, "chromatic_number");
    const int n = g.order();
    if (n == 0) return {0, BlockPartition(0, {})};
    const int lower = clique_number(g, opt).value;
    auto greedy = detail::greedy_dsatur(g);
    const int upper = *std::max_element(greedy.begin(), greedy.end()) + 1;
    ColouringResult r{upper, BlockPartition::from_colours(greedy, upper)};
    for (int k = lower; k < upper; ++k) {
        auto c = detail::Colourer(g, k).run();
        if (c) {
            r = {k, BlockPartition::from_colours(*c, k)};
            break;
        }
    }
    if (!is_proper_colouring(g, r.witness) || r.witness.nonempty_count() != r.value)
        throw InternalCheckFailed("chromatic_number: witness check failed");
    return r;
}

/// Clique partition number, computed as the chromatic number of the complement.
inline ColouringResult clique_cover_number(const Graph& g, const SolverOptions& opt = {}) {
    auto r = chromatic_number(complement(g), opt);
    if (!is_clique_partition(g, r.witness)) throw InternalCheckFailed("clique_cover_number: witness check failed");
    return r;
}

struct InvariantReport {
    int order = 0;
    int edge_count = 0;
    int chi = 0;
    int theta = 0;
    int alpha = 0;
    int omega = 0;
    bool c4_free = false;
    bool two_k2_free = false;
    bool p4_free = false;
    bool p5_free = false;
    BlockPartition chi_witness;
    BlockPartition theta_witness;
    VertexSet alpha_witness;
    VertexSet omega_witness;
};

inline InvariantReport analyze(const Graph& g, const SolverOptions& opt = {}) {
    InvariantReport r;
    r.order = g.order();
    r.edge_count = g.edge_count();
    auto chi = chromatic_number(g, opt);
    auto theta = clique_cover_number(g, opt);
    auto alpha = independence_number(g, opt);
    auto omega = clique_number(g, opt);
    r.chi = chi.value;
    r.theta = theta.value;
    r.alpha = alpha.value;
    r.omega = omega.value;
    r.chi_witness = std::move(chi.witness);
    r.theta_witness = std::move(theta.witness);
    r.alpha_witness = std::move(alpha.witness);
    r.omega_witness = std::move(omega.witness);
    r.c4_free = is_free_of(g, Pattern::C4);
    r.two_k2_free = is_free_of(g, Pattern::TwoK2);
    r.p4_free = is_free_of(g, Pattern::P4);
    r.p5_free = is_free_of(g, Pattern::P5);
    const int n = g.order();
    if (r.omega > r.chi || r.alpha > r.theta || r.alpha * r.chi < n || r.omega * r.theta < n)
        throw InternalCheckFailed("analyze: invariant inequalities violated");
    return r;
}

inline nlohmann::json report_to_json(const InvariantReport& r) {
    return {
        {"n", r.order},
        {"edges", r.edge_count},
        {"chi", r.chi},
        {"theta", r.theta},
        {"alpha", r.alpha},
        {"omega", r.omega},
        {"c4_free", r.c4_free},
        {"2k2_free", r.two_k2_free},
        {"p4_free", r.p4_free},
        {"p5_free", r.p5_free},
        {"witnesses",
         {{"chi", partition_to_json(r.chi_witness)},
          {"theta", partition_to_json(r.theta_witness)},
          {"alpha", r.alpha_witness.members()},
          {"omega", r.omega_witness.members()}}},
    };
}

}  // namespace frozencol
