#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "frozencol/graph.hpp"

namespace frozencol {

/// The small forbidden induced subgraphs the toolkit detects.
enum class Pattern { C4, TwoK2, P4, P5, K3, Diamond };

inline std::string_view to_string(Pattern p) {
    switch (p) {
        case Pattern::C4: return "C4";
        case Pattern::TwoK2: return "2K2";
        case Pattern::P4: return "P4";
        case Pattern::P5: return "P5";
        case Pattern::K3: return "K3";
        case Pattern::Diamond: return "DIAMOND";
    }
    return "?";
}

inline Pattern parse_pattern(std::string_view s) {
    if (s == "C4") return Pattern::C4;
    if (s == "2K2") return Pattern::TwoK2;
    if (s == "P4") return Pattern::P4;
    if (s == "P5") return Pattern::P5;
    if (s == "K3") return Pattern::K3;
    if (s == "DIAMOND") return Pattern::Diamond;
    throw InvalidInput("unknown pattern: " + std::string(s));
}

/// The pattern itself as a graph (used by oracles and documentation).
inline Graph pattern_graph(Pattern p) {
    switch (p) {
        case Pattern::C4: return cycle_graph(4);
        case Pattern::TwoK2: return graph_from_edges(4, {{0, 1}, {2, 3}});
        case Pattern::P4: return path_graph(4);
        case Pattern::P5: return path_graph(5);
        case Pattern::K3: return complete_graph(3);
        case Pattern::Diamond: return graph_from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    }
    throw InvalidInput("unknown pattern");
}

namespace detail {

// Induced C4 in g, or in the complement of g when `in_complement` is set
// (a C4 of the complement is a 2K2 of g). Outer loop over the non-adjacent
// pair {a, b} with a < b, so the result is deterministic.
inline std::optional<VertexSet> find_c4(const Graph& g, bool in_complement) {
    const int n = g.order();
    auto nbr = [&](int v) { return in_complement ? ~g.closed_neighbourhood(v) : g.neighbours(v); };
    for (int a = 0; a < n; ++a) {
        VertexSet na = nbr(a);
        for (int b = a + 1; b < n; ++b) {
            if (na.contains(b)) continue;
            VertexSet common = na & nbr(b);
            for (int c : common) {
                VertexSet others = common - nbr(c);
                int d = others.next(c);
                if (d >= 0) return VertexSet::of(n, {a, b, c, d});
            }
        }
    }
    return std::nullopt;
}

inline std::optional<VertexSet> find_k3(const Graph& g) {
    const int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int b = g.neighbours(a).next(a); b >= 0; b = g.neighbours(a).next(b)) {
            VertexSet common = g.neighbours(a) & g.neighbours(b);
            int c = common.next(b);
            if (c >= 0) return VertexSet::of(n, {a, b, c});
        }
    return std::nullopt;
}

inline std::optional<VertexSet> find_diamond(const Graph& g) {
    const int n = g.order();
    for (auto [x, y] : g.edges())
        if (is_diamond_middle_edge(g, x, y)) {
            VertexSet common = g.neighbours(x) & g.neighbours(y);
            for (int a : common) {
                int b = (common - g.closed_neighbourhood(a)).next(a);
                if (b >= 0) return VertexSet::of(n, {x, y, a, b});
            }
        }
    return std::nullopt;
}

// Induced path a-b-c-d over every middle edge bc.
inline std::optional<VertexSet> find_p4(const Graph& g) {
    const int n = g.order();
    for (auto [b0, c0] : g.edges()) {
        for (int flip = 0; flip < 2; ++flip) {
            int b = flip ? c0 : b0;
            int c = flip ? b0 : c0;
            VertexSet ends_b = g.neighbours(b) - g.closed_neighbourhood(c);
            VertexSet ends_c = g.neighbours(c) - g.closed_neighbourhood(b);
            for (int a : ends_b) {
                VertexSet ds = ends_c - g.neighbours(a);
                int d = ds.first();
                if (d >= 0) return VertexSet::of(n, {a, b, c, d});
            }
        }
    }
    return std::nullopt;
}

// Induced path a-b-c-d-e around the centre c.
inline std::optional<VertexSet> find_p5(const Graph& g) {
    const int n = g.order();
    for (int c = 0; c < n; ++c) {
        const VertexSet& nc = g.neighbours(c);
        for (int b : nc)
            for (int d = nc.next(b); d >= 0; d = nc.next(d)) {
                if (g.adjacent(b, d)) continue;
                VertexSet as = g.neighbours(b) - g.closed_neighbourhood(c) - g.neighbours(d);
                as.erase(d);
                VertexSet es = g.neighbours(d) - g.closed_neighbourhood(c) - g.neighbours(b);
                es.erase(b);
                for (int a : as) {
                    VertexSet cand = es - g.closed_neighbourhood(a);
                    int e = cand.first();
                    if (e >= 0) return VertexSet::of(n, {a, b, c, d, e});
                }
            }
    }
    return std::nullopt;
}

}  // namespace detail

/// A vertex set inducing `p` in g, or nothing when g is p-free.
inline std::optional<VertexSet> find_induced(const Graph& g, Pattern p) {
    switch (p) {
        case Pattern::C4: return detail::find_c4(g, false);
        case Pattern::TwoK2: return detail::find_c4(g, true);
        case Pattern::P4: return detail::find_p4(g);
        case Pattern::P5: return detail::find_p5(g);
        case Pattern::K3: return detail::find_k3(g);
        case Pattern::Diamond: return detail::find_diamond(g);
    }
    return std::nullopt;
}

inline bool is_free_of(const Graph& g, Pattern p) { return !find_induced(g, p).has_value(); }

}  // namespace frozencol
