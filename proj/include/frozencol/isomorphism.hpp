#pragma once

#include <algorithm>
#include <optional>
#include <tuple>
#include <vector>

#include "frozencol/graph.hpp"

namespace frozencol {

inline constexpr int default_isomorphism_limit = 20;

namespace detail {

// Per-vertex invariant: degree, sorted neighbour degrees, triangles through v.
struct VertexSignature {
    int degree = 0;
    int triangles = 0;
    std::vector<int> neighbour_degrees;
    friend auto operator<=>(const VertexSignature&, const VertexSignature&) = default;
};

inline std::vector<VertexSignature> signatures(const Graph& g) {
    std::vector<VertexSignature> out(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) {
        auto& s = out[static_cast<std::size_t>(v)];
        s.degree = g.degree(v);
        for (int w : g.neighbours(v)) {
            s.neighbour_degrees.push_back(g.degree(w));
            s.triangles += (g.neighbours(v) & g.neighbours(w)).size();
        }
        s.triangles /= 2;
        std::sort(s.neighbour_degrees.begin(), s.neighbour_degrees.end());
    }
    return out;
}

class IsomorphismSearch {
public:
    IsomorphismSearch(const Graph& g, const Graph& h) : g_(g), h_(h), sig_g_(signatures(g)), sig_h_(signatures(h)) {}

    std::optional<std::vector<int>> run() {
        const int n = g_.order();
        auto sorted = [](std::vector<VertexSignature> v) {
            std::sort(v.begin(), v.end());
            return v;
        };
        if (sorted(sig_g_) != sorted(sig_h_)) return std::nullopt;
        order_ = matching_order();
        map_.assign(static_cast<std::size_t>(n), -1);
        used_.assign(static_cast<std::size_t>(n), false);
        if (!extend(0)) return std::nullopt;
        return map_;
    }

private:
    // Next vertex = most neighbours already placed, then rarest signature, then index.
    std::vector<int> matching_order() const {
        const int n = g_.order();
        std::vector<int> rarity(static_cast<std::size_t>(n), 0);
        for (int v = 0; v < n; ++v)
            for (int w = 0; w < n; ++w)
                if (sig_g_[static_cast<std::size_t>(v)] == sig_g_[static_cast<std::size_t>(w)]) ++rarity[static_cast<std::size_t>(v)];
        std::vector<int> order;
        std::vector<bool> placed(static_cast<std::size_t>(n), false);
        std::vector<int> links(static_cast<std::size_t>(n), 0);
        for (int step = 0; step < n; ++step) {
            int best = -1;
            for (int v = 0; v < n; ++v) {
                if (placed[static_cast<std::size_t>(v)]) continue;
                if (best < 0 || std::make_tuple(-links[static_cast<std::size_t>(v)], rarity[static_cast<std::size_t>(v)], -g_.degree(v)) <
                                    std::make_tuple(-links[static_cast<std::size_t>(best)], rarity[static_cast<std::size_t>(best)], -g_.degree(best)))
                    best = v;
            }
            placed[static_cast<std::size_t>(best)] = true;
            order.push_back(best);
            for (int w : g_.neighbours(best)) ++links[static_cast<std::size_t>(w)];
        }
        return order;
    }

    bool extend(std::size_t depth) {
        if (depth == order_.size()) return true;
        const int v = order_[depth];
        for (int cand = 0; cand < h_.order(); ++cand) {
            if (used_[static_cast<std::size_t>(cand)]) continue;
            if (sig_g_[static_cast<std::size_t>(v)] != sig_h_[static_cast<std::size_t>(cand)]) continue;
            bool ok = true;
            for (std::size_t i = 0; i < depth && ok; ++i) {
                int u = order_[i];
                ok = g_.adjacent(v, u) == h_.adjacent(cand, map_[static_cast<std::size_t>(u)]);
            }
            if (!ok) continue;
            map_[static_cast<std::size_t>(v)] = cand;
            used_[static_cast<std::size_t>(cand)] = true;
            if (extend(depth + 1)) return true;
            used_[static_cast<std::size_t>(cand)] = false;
            map_[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    }

    const Graph& g_;
    const Graph& h_;
    std::vector<VertexSignature> sig_g_;
    std::vector<VertexSignature> sig_h_;
    std::vector<int> order_;
    std::vector<int> map_;
    std::vector<bool> used_;
};

}  // namespace detail

/// True when `map` is a bijection V(g) -> V(h) preserving adjacency and non-adjacency.
inline bool is_isomorphism(const Graph& g, const Graph& h, const std::vector<int>& map) {
    if (g.order() != h.order() || static_cast<int>(map.size()) != g.order()) return false;
    std::vector<bool> hit(static_cast<std::size_t>(h.order()), false);
    for (int x : map) {
        if (x < 0 || x >= h.order() || hit[static_cast<std::size_t>(x)]) return false;
        hit[static_cast<std::size_t>(x)] = true;
    }
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.adjacent(u, v) != h.adjacent(map[static_cast<std::size_t>(u)], map[static_cast<std::size_t>(v)])) return false;
    return true;
}

/// An adjacency-preserving bijection from g to h (map[v] is the image of v), or nothing.
/// Backtracking with signature pruning; refuses graphs above `limit` vertices.
inline std::optional<std::vector<int>> are_isomorphic(const Graph& g, const Graph& h, int limit = default_isomorphism_limit) {
    if (g.order() > limit || h.order() > limit)
        throw LimitExceeded("are_isomorphic: order exceeds limit " + std::to_string(limit));
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) return std::nullopt;
    auto map = detail::IsomorphismSearch(g, h).run();
    if (map && !is_isomorphism(g, h, *map)) throw InternalCheckFailed("are_isomorphic: mapping failed re-verification");
    return map;
}

}  // namespace frozencol
