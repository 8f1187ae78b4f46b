#pragma once

// Brute-force reference implementations used only by tests. They read the
// adjacency relation and nothing else from the library, so a bug in a
// solver or finder cannot hide behind the same bug here.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "frozencol/graph.hpp"

namespace oracle {

using frozencol::Graph;

// Calls f(labels, block_count) for every set partition of {0..n-1}
// as a restricted growth string.
inline void for_each_set_partition(int n, const std::function<void(const std::vector<int>&, int)>& f) {
    std::vector<int> a(n, 0);
    std::function<void(int, int)> rec = [&](int i, int used) {
        if (i == n) {
            f(a, used);
            return;
        }
        for (int c = 0; c <= used; ++c) {
            a[i] = c;
            rec(i + 1, std::max(used, c + 1));
        }
    };
    rec(0, 0);
}

inline int min_partition(const Graph& g, bool want_cliques) {
    const int n = g.order();
    int best = n;
    for_each_set_partition(n, [&](const std::vector<int>& a, int used) {
        if (used >= best) return;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (a[u] == a[v] && g.adjacent(u, v) != want_cliques) return;
        best = used;
    });
    return best;
}

inline int chromatic(const Graph& g) { return min_partition(g, false); }
inline int clique_cover(const Graph& g) { return min_partition(g, true); }

inline int largest_subset(const Graph& g, bool want_clique) {
    const int n = g.order();
    int best = 0;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        int size = __builtin_popcount(s);
        if (size <= best) continue;
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if ((s >> u & 1) && (s >> v & 1) && g.adjacent(u, v) != want_clique) ok = false;
        if (ok) best = size;
    }
    return best;
}

inline int alpha(const Graph& g) { return largest_subset(g, false); }
inline int omega(const Graph& g) { return largest_subset(g, true); }

// Does some ordered choice of |p| distinct vertices of g reproduce p exactly?
inline bool contains_induced(const Graph& g, const Graph& p) {
    const int n = g.order();
    const int k = p.order();
    std::vector<int> pick;
    std::vector<bool> used(n, false);
    std::function<bool()> rec = [&]() {
        const int i = static_cast<int>(pick.size());
        if (i == k) return true;
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) ok = g.adjacent(v, pick[j]) == p.adjacent(i, j);
            if (!ok) continue;
            used[v] = true;
            pick.push_back(v);
            if (rec()) return true;
            pick.pop_back();
            used[v] = false;
        }
        return false;
    };
    return rec();
}

// Induced subgraph on `vs` (in the given order) equals p up to some relabelling.
inline bool induces(const Graph& g, std::vector<int> vs, const Graph& p) {
    if (static_cast<int>(vs.size()) != p.order()) return false;
    std::sort(vs.begin(), vs.end());
    do {
        bool ok = true;
        for (int i = 0; i < p.order() && ok; ++i)
            for (int j = i + 1; j < p.order() && ok; ++j) ok = g.adjacent(vs[i], vs[j]) == p.adjacent(i, j);
        if (ok) return true;
    } while (std::next_permutation(vs.begin(), vs.end()));
    return false;
}

inline bool isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order()) return false;
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < g.order() && ok; ++u)
            for (int v = u + 1; v < g.order() && ok; ++v) ok = g.adjacent(u, v) == h.adjacent(perm[u], perm[v]);
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline bool proper(const Graph& g, const std::vector<int>& colour) {
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.adjacent(u, v) && colour[u] == colour[v]) return false;
    return true;
}

// Number of proper k-colourings one recolouring away: the degree in R_k(g).
inline int reconfig_degree(const Graph& g, std::vector<int> colour, int k) {
    int degree = 0;
    for (int v = 0; v < g.order(); ++v) {
        const int old = colour[v];
        for (int c = 0; c < k; ++c) {
            if (c == old) continue;
            colour[v] = c;
            if (proper(g, colour)) ++degree;
        }
        colour[v] = old;
    }
    return degree;
}

// Every proper k-colouring, as colour vectors, in lexicographic order.
inline std::vector<std::vector<int>> all_colourings(const Graph& g, int k) {
    std::vector<std::vector<int>> out;
    const int n = g.order();
    std::vector<int> c(n, 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            out.push_back(c);
            return;
        }
        for (int x = 0; x < k; ++x) {
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) ok = !(g.adjacent(i, j) && c[j] == x);
            if (!ok) continue;
            c[i] = x;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<frozencol::Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return frozencol::graph_from_edges(n, edges);
}

inline Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<frozencol::Edge> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask >> bit & 1) edges.emplace_back(u, v);
    return frozencol::graph_from_edges(n, edges);
}

}  // namespace oracle
