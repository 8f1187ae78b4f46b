#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "frozencol/graph.hpp"
#include "frozencol/partition.hpp"
#include "frozencol/solvers.hpp"

namespace frozencol {

struct ReconfigCaps {
    std::int64_t max_colourings = 20'000'000;
    std::int64_t max_unions = 100'000'000;
};

struct ReconfigReport {
    int k = 0;
    std::int64_t colouring_count = 0;
    std::int64_t component_count = 0;
    std::vector<std::int64_t> component_sizes;  // largest first
    std::vector<BlockPartition> frozen_colourings;
    /// Diameter of R_k when it is connected; otherwise see component_diameters.
    std::optional<int> diameter;
    std::vector<int> component_diameters;  // same order as component_sizes
    bool truncated = false;
};

namespace detail {

/// The proper k-colourings of g indexed by their base-k code, vertex 0 most
/// significant; the code order is the lexicographic order of colour vectors.
class ColouringSpace {
public:
    ColouringSpace(const Graph& g, int k, std::int64_t cap) : g_(g), n_(g.order()), k_(k) {
        if (k < 0) throw InvalidInput("colour budget must be non-negative");
        weight_.assign(n_, 1);
        std::uint64_t w = 1;
        for (int v = n_ - 1; v >= 0; --v) {
            weight_[v] = w;
            if (v > 0 && k > 1 && w > (std::uint64_t{1} << 62) / static_cast<std::uint64_t>(k))
                throw LimitExceeded("colouring space k^n too large to index");
            w *= static_cast<std::uint64_t>(std::max(k, 1));
        }
        std::vector<int> colour(n_, 0);
        enumerate(0, 0, colour, cap);
    }

    std::int64_t size() const { return static_cast<std::int64_t>(codes_.size()); }
    std::uint64_t code(std::int64_t i) const { return codes_[i]; }

    std::vector<int> colours(std::int64_t i) const {
        std::vector<int> c(n_);
        std::uint64_t x = codes_[i];
        for (int v = 0; v < n_; ++v) {
            c[v] = static_cast<int>(x / weight_[v]);
            x %= weight_[v];
        }
        return c;
    }

    std::int64_t index_of(std::uint64_t code) const {
        auto it = std::lower_bound(codes_.begin(), codes_.end(), code);
        if (it == codes_.end() || *it != code) return -1;
        return it - codes_.begin();
    }

    /// Calls f(j) for every colouring j one recolouring away from colouring i.
    template <typename F>
    void for_each_neighbour(std::int64_t i, F&& f) const {
        const auto c = colours(i);
        for (int v = 0; v < n_; ++v) {
            std::uint64_t blocked = 0;
            for (int w : g_.neighbours(v)) blocked |= std::uint64_t{1} << c[w];
            for (int x = 0; x < k_; ++x) {
                if (x == c[v] || (blocked >> x & 1)) continue;
                std::uint64_t other = codes_[i] - weight_[v] * c[v] + weight_[v] * x;
                f(index_of(other));
            }
        }
    }

private:
    void enumerate(int v, std::uint64_t code, std::vector<int>& colour, std::int64_t cap) {
        if (v == n_) {
            if (static_cast<std::int64_t>(codes_.size()) >= cap)
                throw LimitExceeded("more than " + std::to_string(cap) + " colourings");
            codes_.push_back(code);
            return;
        }
        for (int x = 0; x < k_; ++x) {
            bool ok = true;
            for (int w : g_.neighbours(v)) {
                if (w >= v) break;
                if (colour[w] == x) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            colour[v] = x;
            enumerate(v + 1, code + weight_[v] * x, colour, cap);
        }
    }

    const Graph& g_;
    int n_;
    int k_;
    std::vector<std::uint64_t> weight_;
    std::vector<std::uint64_t> codes_;
};

inline void check_palette(int k) {
    if (k > 64) throw LimitExceeded("colour budget above 64");
}

}  // namespace detail

/// Every proper k-colouring as an ordered k-block partition, in lexicographic
/// order of colour vectors. Throws LimitExceeded beyond `cap` colourings.
inline std::vector<BlockPartition> enumerate_colourings(const Graph& g, int k, std::int64_t cap = ReconfigCaps{}.max_colourings) {
    detail::check_palette(k);
    detail::ColouringSpace space(g, k, cap);
    std::vector<BlockPartition> out;
    out.reserve(static_cast<std::size_t>(space.size()));
    for (std::int64_t i = 0; i < space.size(); ++i) out.push_back(BlockPartition::from_colours(space.colours(i), k));
    return out;
}

namespace detail {

struct UnionFind {
    std::vector<std::int64_t> parent;
    explicit UnionFind(std::int64_t n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
    std::int64_t find(std::int64_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::int64_t a, std::int64_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

// Largest BFS eccentricity inside the component `members`.
inline int component_diameter(const ColouringSpace& space, const std::vector<std::int64_t>& members) {
    std::vector<int> dist(static_cast<std::size_t>(space.size()), -1);
    int best = 0;
    for (std::int64_t s : members) {
        for (std::int64_t m : members) dist[m] = -1;
        std::deque<std::int64_t> queue{s};
        dist[s] = 0;
        while (!queue.empty()) {
            auto x = queue.front();
            queue.pop_front();
            best = std::max(best, dist[x]);
            space.for_each_neighbour(x, [&](std::int64_t y) {
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            });
        }
    }
    return best;
}

}  // namespace detail

/// Components of R_k(g) by union-find over the implicit single-recolouring
/// relation. With `with_diameters`, also the exact diameter of every component.
inline ReconfigReport reconfiguration_components(const Graph& g, int k, const ReconfigCaps& caps = {}, bool with_diameters = false) {
    detail::check_palette(k);
    detail::ColouringSpace space(g, k, caps.max_colourings);
    ReconfigReport r;
    r.k = k;
    r.colouring_count = space.size();
    detail::UnionFind uf(space.size());
    std::int64_t unions = 0;
    std::vector<int> degree(static_cast<std::size_t>(space.size()), 0);
    for (std::int64_t i = 0; i < space.size() && !r.truncated; ++i) {
        space.for_each_neighbour(i, [&](std::int64_t j) {
            ++degree[i];
            if (j > i && !r.truncated) {
                if (++unions > caps.max_unions) {
                    r.truncated = true;
                    return;
                }
                uf.unite(i, j);
            }
        });
    }
    std::vector<std::vector<std::int64_t>> comps;
    std::vector<std::int64_t> comp_of(static_cast<std::size_t>(space.size()), -1);
    for (std::int64_t i = 0; i < space.size(); ++i) {
        auto root = uf.find(i);
        if (comp_of[root] < 0) {
            comp_of[root] = static_cast<std::int64_t>(comps.size());
            comps.emplace_back();
        }
        comps[comp_of[root]].push_back(i);
    }
    std::stable_sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
    r.component_count = static_cast<std::int64_t>(comps.size());
    for (const auto& c : comps) r.component_sizes.push_back(static_cast<std::int64_t>(c.size()));
    // The empty graph's single colouring is isolated but has empty classes, so it is not frozen.
    if (!r.truncated && g.order() > 0)
        for (std::int64_t i = 0; i < space.size(); ++i)
            if (degree[i] == 0) {
                auto p = BlockPartition::from_colours(space.colours(i), k);
                if (!is_frozen_colouring(g, p)) throw InternalCheckFailed("isolated colouring fails the frozen checker");
                r.frozen_colourings.push_back(std::move(p));
            }
    if (with_diameters && !r.truncated) {
        for (const auto& c : comps) r.component_diameters.push_back(detail::component_diameter(space, c));
        if (comps.size() == 1) r.diameter = r.component_diameters.front();
        if (comps.empty()) r.diameter = 0;
    }
    return r;
}

/// Whether R_k(g) is connected. No colourings at all counts as (vacuously) mixing.
inline bool is_k_mixing(const Graph& g, int k, const ReconfigCaps& caps = {}) {
    auto r = reconfiguration_components(g, k, caps);
    if (r.truncated) throw LimitExceeded("union cap reached before connectivity was decided");
    return r.component_count <= 1;
}

/// Exact diameter of R_k(g), or one diameter per component (largest component first).
inline std::vector<int> recolouring_diameter(const Graph& g, int k, const ReconfigCaps& caps = {}) {
    auto r = reconfiguration_components(g, k, caps, true);
    if (r.truncated) throw LimitExceeded("union cap reached");
    return r.component_diameters;
}

namespace detail {

// Backtracking search for a frozen k-colouring. Colours are introduced in
// order (symmetry breaking); a vertex is abandoned as soon as the colours it
// already sees plus its uncoloured neighbours cannot cover the other k-1 colours.
class FrozenSearch {
public:
    FrozenSearch(const Graph& g, int k)
        : g_(g), n_(g.order()), k_(k), adj_(adjacency_masks(g)), colour_(n_, -1), count_(n_ * std::max(k, 1), 0), seen_(n_, 0) {}

    std::optional<std::vector<int>> run() {
        if (k_ <= 0 || k_ > n_) return std::nullopt;
        for (int v = 0; v < n_; ++v)
            if (g_.degree(v) < k_ - 1) return std::nullopt;
        uncoloured_ = n_ == 64 ? ~Mask{0} : ((Mask{1} << n_) - 1);
        if (search(0)) return colour_;
        return std::nullopt;
    }

private:
    bool viable(int v) const {
        if (colour_[v] < 0) return true;
        const int have = std::popcount(seen_[v] & ~(Mask{1} << colour_[v]));
        return have + std::popcount(adj_[v] & uncoloured_) >= k_ - 1;
    }

    void assign(int v, int c) {
        colour_[v] = c;
        uncoloured_ &= ~(Mask{1} << v);
        for (Mask m = adj_[v]; m; m &= m - 1) {
            int w = std::countr_zero(m);
            if (count_[w * k_ + c]++ == 0) seen_[w] |= Mask{1} << c;
        }
    }

    void unassign(int v) {
        const int c = colour_[v];
        colour_[v] = -1;
        uncoloured_ |= Mask{1} << v;
        for (Mask m = adj_[v]; m; m &= m - 1) {
            int w = std::countr_zero(m);
            if (--count_[w * k_ + c] == 0) seen_[w] &= ~(Mask{1} << c);
        }
    }

    int pick() const {
        int best = -1;
        int best_free = 0;
        for (Mask m = uncoloured_; m; m &= m - 1) {
            int v = std::countr_zero(m);
            int free = k_ - std::popcount(seen_[v]);
            if (best < 0 || free < best_free || (free == best_free && g_.degree(v) > g_.degree(best))) {
                best = v;
                best_free = free;
            }
        }
        return best;
    }

    bool search(int used) {
        const int left = std::popcount(uncoloured_);
        if (left == 0) return used == k_;
        if (left < k_ - used) return false;
        const int v = pick();
        const int top = std::min(used + 1, k_);
        for (int c = 0; c < top; ++c) {
            if (seen_[v] >> c & 1) continue;
            assign(v, c);
            bool ok = viable(v);
            for (Mask m = adj_[v]; ok && m; m &= m - 1) ok = viable(std::countr_zero(m));
            if (ok && search(std::max(used, c + 1))) return true;
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
    Mask uncoloured_ = 0;
};

}  // namespace detail

/// A frozen k-colouring of g if one exists, found without enumerating R_k.
inline std::optional<BlockPartition> find_frozen(const Graph& g, int k, const SolverOptions& opt = {}) {
    detail::check_bound(g, opt, "find_frozen");
    detail::check_palette(k);
    auto c = detail::FrozenSearch(g, k).run();
    if (!c) return std::nullopt;
    auto p = BlockPartition::from_colours(*c, k);
    if (!is_frozen_colouring(g, p)) throw InternalCheckFailed("find_frozen: witness is not frozen");
    return p;
}

struct MixingVerdict {
    int k = 0;
    std::optional<bool> mixing;  // absent when a cap stopped the computation
    std::string note;
};

/// Mixing verdicts for k = chi+1..k_max. A bounded probe: it does not decide
/// recolourability, which quantifies over every k > chi.
inline std::vector<MixingVerdict> recolourable_up_to(const Graph& g, int k_max, const ReconfigCaps& caps = {}) {
    const int chi = chromatic_number(g).value;
    std::vector<MixingVerdict> out;
    for (int k = chi + 1; k <= k_max; ++k) {
        MixingVerdict v{k, std::nullopt, ""};
        try {
            v.mixing = is_k_mixing(g, k, caps);
        } catch (const LimitExceeded& e) {
            v.note = e.what();
        }
        out.push_back(std::move(v));
    }
    return out;
}

inline nlohmann::json reconfig_to_json(const ReconfigReport& r) {
    nlohmann::json frozen = nlohmann::json::array();
    for (const auto& p : r.frozen_colourings) frozen.push_back(to_colour_line(p));
    nlohmann::json j{{"k", r.k},
                     {"colouring_count", r.colouring_count},
                     {"component_count", r.component_count},
                     {"component_sizes", r.component_sizes},
                     {"frozen_colourings", frozen},
                     {"mixing", r.truncated ? nlohmann::json(nullptr) : nlohmann::json(r.component_count <= 1)},
                     {"truncated", r.truncated}};
    j["diameter"] = r.diameter ? nlohmann::json(*r.diameter) : nlohmann::json(nullptr);
    if (!r.component_diameters.empty()) j["component_diameters"] = r.component_diameters;
    return j;
}

/// R_k(g) in Graphviz DOT; nodes are named by colour lines. Refuses more than `limit` colourings.
inline std::string reconfig_dot(const Graph& g, int k, std::int64_t limit = 10'000) {
    detail::check_palette(k);
    detail::ColouringSpace space(g, k, limit);
    std::ostringstream os;
    os << "graph R" << k << " {\n";
    for (std::int64_t i = 0; i < space.size(); ++i)
        os << "  n" << i << " [label=\"" << to_colour_line(BlockPartition::from_colours(space.colours(i), k)) << "\"];\n";
    for (std::int64_t i = 0; i < space.size(); ++i)
        space.for_each_neighbour(i, [&](std::int64_t j) {
            if (j > i) os << "  n" << i << " -- n" << j << ";\n";
        });
    os << "}\n";
    return os.str();
}

}  // namespace frozencol
