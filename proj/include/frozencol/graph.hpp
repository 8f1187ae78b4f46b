#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "frozencol/error.hpp"
#include "frozencol/vertex_set.hpp"

namespace frozencol {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1 with bit-row adjacency.
///
/// Values are immutable once built; use GraphBuilder or graph_from_edges.
/// Optional labels tag vertices with human-readable names such as "u0" or "v12".
class Graph {
public:
    Graph() = default;

    int order() const noexcept { return static_cast<int>(rows_.size()); }

    bool adjacent(int u, int v) const { return rows_.at(static_cast<std::size_t>(u)).contains(v); }

    const VertexSet& neighbours(int v) const { return rows_.at(static_cast<std::size_t>(v)); }

    VertexSet closed_neighbourhood(int v) const {
        VertexSet s = neighbours(v);
        s.insert(v);
        return s;
    }

    int degree(int v) const { return neighbours(v).size(); }

    int edge_count() const noexcept {
        int twice = 0;
        for (const auto& r : rows_) twice += r.size();
        return twice / 2;
    }

    /// Edges as (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (int u = 0; u < order(); ++u)
            for (int v = rows_[static_cast<std::size_t>(u)].next(u); v >= 0; v = rows_[static_cast<std::size_t>(u)].next(v))
                out.emplace_back(u, v);
        return out;
    }

    bool has_labels() const noexcept { return !labels_.empty(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    std::string label(int v) const {
        if (has_labels()) return labels_.at(static_cast<std::size_t>(v));
        return std::to_string(v);
    }

    /// Index of the vertex carrying `name`, or -1.
    int find_label(const std::string& name) const {
        auto it = std::find(labels_.begin(), labels_.end(), name);
        return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
    }

    VertexSet vertices() const { return VertexSet::full(order()); }

    /// Equality of vertex count and edge sets; labels are metadata and ignored.
    friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

private:
    friend class GraphBuilder;
    std::vector<VertexSet> rows_;
    std::vector<std::string> labels_;
};

/// Mutable construction phase of a Graph.
class GraphBuilder {
public:
    explicit GraphBuilder(int n) {
        if (n < 0) throw InvalidInput("graph order must be non-negative");
        g_.rows_.assign(static_cast<std::size_t>(n), VertexSet(n));
    }

    /// Starts from a copy of an existing graph, optionally growing it by `extra` isolated vertices.
    explicit GraphBuilder(const Graph& base, int extra = 0) : GraphBuilder(base.order() + extra) {
        for (auto [u, v] : base.edges()) add_edge(u, v);
        if (base.has_labels()) {
            g_.labels_ = base.labels();
            for (int i = 0; i < extra; ++i) g_.labels_.push_back(std::to_string(base.order() + i));
        }
    }

    int order() const noexcept { return g_.order(); }

    GraphBuilder& add_edge(int u, int v) {
        check_pair(u, v);
        g_.rows_[static_cast<std::size_t>(u)].insert(v);
        g_.rows_[static_cast<std::size_t>(v)].insert(u);
        return *this;
    }

    GraphBuilder& remove_edge(int u, int v) {
        check_pair(u, v);
        g_.rows_[static_cast<std::size_t>(u)].erase(v);
        g_.rows_[static_cast<std::size_t>(v)].erase(u);
        return *this;
    }

    bool has_edge(int u, int v) const { return g_.adjacent(u, v); }

    GraphBuilder& set_labels(std::vector<std::string> labels) {
        if (!labels.empty()) {
            if (static_cast<int>(labels.size()) != order())
                throw InvalidInput("label list length differs from graph order");
            std::set<std::string> seen(labels.begin(), labels.end());
            if (static_cast<int>(seen.size()) != order()) throw InvalidInput("vertex labels must be unique");
        }
        g_.labels_ = std::move(labels);
        return *this;
    }

    GraphBuilder& set_label(int v, std::string name) {
        if (g_.labels_.empty()) {
            for (int i = 0; i < order(); ++i) g_.labels_.push_back(std::to_string(i));
        }
        g_.labels_.at(static_cast<std::size_t>(v)) = std::move(name);
        return *this;
    }

    Graph build() && {
        if (!g_.labels_.empty()) {
            std::set<std::string> seen(g_.labels_.begin(), g_.labels_.end());
            if (seen.size() != g_.labels_.size()) throw InvalidInput("vertex labels must be unique");
        }
        return std::move(g_);
    }

private:
    void check_pair(int u, int v) const {
        if (u < 0 || v < 0 || u >= order() || v >= order())
            throw InvalidInput("edge endpoint out of range: " + std::to_string(u) + "-" + std::to_string(v));
        if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
    }

    Graph g_;
};

inline Graph graph_from_edges(int n, const std::vector<Edge>& edges, std::vector<std::string> labels = {}) {
    GraphBuilder b(n);
    for (auto [u, v] : edges) b.add_edge(u, v);
    b.set_labels(std::move(labels));
    return std::move(b).build();
}

inline Graph complement(const Graph& g) {
    const int n = g.order();
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) b.add_edge(u, v);
    b.set_labels(g.labels());
    return std::move(b).build();
}

/// Disjoint union of g and h plus every edge between them; h's vertices are shifted by |g|.
inline Graph join(const Graph& g, const Graph& h) {
    const int n = g.order();
    GraphBuilder b(n + h.order());
    for (auto [u, v] : g.edges()) b.add_edge(u, v);
    for (auto [u, v] : h.edges()) b.add_edge(n + u, n + v);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < h.order(); ++v) b.add_edge(u, n + v);
    return std::move(b).build();
}

/// Subgraph induced by `keep`, vertices renumbered in increasing order.
inline Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
    std::vector<int> vs = keep.members();
    GraphBuilder b(static_cast<int>(vs.size()));
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (g.adjacent(vs[i], vs[j])) b.add_edge(static_cast<int>(i), static_cast<int>(j));
        if (g.has_labels()) labels.push_back(g.label(vs[i]));
    }
    b.set_labels(std::move(labels));
    return std::move(b).build();
}

/// Graph with vertex v renamed perm[v].
inline Graph permuted(const Graph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.order()) throw InvalidInput("permutation length differs from graph order");
    GraphBuilder b(g.order());
    for (auto [u, v] : g.edges()) b.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    if (g.has_labels()) {
        std::vector<std::string> labels(g.labels().size());
        for (int v = 0; v < g.order(); ++v) labels[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] = g.label(v);
        b.set_labels(std::move(labels));
    }
    return std::move(b).build();
}

inline Graph complete_graph(int n) {
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
    return std::move(b).build();
}

inline Graph empty_graph(int n) { return GraphBuilder(n).build(); }

inline Graph cycle_graph(int n) {
    if (n < 3) throw InvalidInput("cycle needs at least 3 vertices");
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
    return std::move(b).build();
}

inline Graph path_graph(int n) {
    GraphBuilder b(n);
    for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
    return std::move(b).build();
}

inline bool is_independent(const Graph& g, const VertexSet& s) {
    for (int v : s)
        if (g.neighbours(v).intersects(s)) return false;
    return true;
}

inline bool is_clique(const Graph& g, const VertexSet& s) {
    for (int v : s) {
        VertexSet others = s;
        others.erase(v);
        if (!others.is_subset_of(g.neighbours(v))) return false;
    }
    return true;
}

/// Every triangle once, as sorted vertex sets in lexicographic order.
inline std::vector<VertexSet> triangles(const Graph& g) {
    std::vector<VertexSet> out;
    const int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int b = g.neighbours(a).next(a); b >= 0; b = g.neighbours(a).next(b)) {
            VertexSet common = g.neighbours(a) & g.neighbours(b);
            for (int c = common.next(b); c >= 0; c = common.next(c)) out.push_back(VertexSet::of(n, {a, b, c}));
        }
    return out;
}

/// True when x and y have two non-adjacent common neighbours, i.e. xy is the
/// edge joining the two degree-3 vertices of an induced diamond.
inline bool is_diamond_middle_edge(const Graph& g, int x, int y) {
    if (!g.adjacent(x, y)) throw InvalidInput("is_diamond_middle_edge: xy is not an edge");
    VertexSet common = g.neighbours(x) & g.neighbours(y);
    for (int a : common) {
        VertexSet rest = common - g.closed_neighbourhood(a);
        if (rest.next(a) >= 0) return true;
    }
    return false;
}

}  // namespace frozencol
