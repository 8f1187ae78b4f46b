#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "frozencol/families.hpp"
#include "frozencol/graph.hpp"
#include "frozencol/partition.hpp"
#include "frozencol/patterns.hpp"
#include "frozencol/solvers.hpp"

namespace frozencol {

struct TransformOptions {
    /// Refuse case-1 inputs whose edge is the middle edge of a diamond.
    bool strict = true;
    /// 0 picks the case automatically; 1 or 2 forces it.
    int force_case = 0;
};

struct TransformResult {
    Graph graph_out;
    BlockPartition q_out;
    BlockPartition f_out;
    int case_used = 0;
    int u = -1;
    int v = -1;
    bool input_free = false;   // C4-free input (2K2-free on the colouring side)
    bool output_free = false;
    /// Input free implies output free.
    bool c4_preserved = true;
    std::optional<bool> theta_incremented;
};

/// Replaces the edge xy by the path x, u, v, y with u = n and v = n + 1.
inline Graph subdivide_edge(const Graph& h, int x, int y) {
    if (x < 0 || y < 0 || x >= h.order() || y >= h.order()) throw InvalidInput("subdivide_edge: endpoint out of range");
    if (!h.adjacent(x, y)) throw PreconditionFailed("subdivide_edge: xy is not an edge");
    const int n = h.order();
    GraphBuilder b(h, 2);
    if (h.has_labels()) {
        int step = 1;
        for (const auto& l : h.labels())
            if (l.rfind("u@", 0) == 0) ++step;
        b.set_label(n, "u@" + std::to_string(step));
        b.set_label(n + 1, "v@" + std::to_string(step));
    }
    b.remove_edge(x, y).add_edge(x, n).add_edge(n, n + 1).add_edge(n + 1, y);
    return std::move(b).build();
}

/// Subdivides xy and transports the clique partition q and the frozen clique
/// partition f to the new graph. Case 2 applies when {x, y} is a block of f,
/// case 1 when x and y lie in different blocks of f.
inline TransformResult subdivide_with_certificates(const Graph& h, const BlockPartition& q, const BlockPartition& f, int x, int y,
                                                   const TransformOptions& opt = {}) {
    if (x < 0 || y < 0 || x >= h.order() || y >= h.order() || x == y) throw InvalidInput("subdivide: bad endpoints");
    if (!h.adjacent(x, y)) throw PreconditionFailed("subdivide: xy is not an edge");
    if (!is_clique_partition(h, q)) throw PreconditionFailed("subdivide: q is not a clique partition");
    if (q.block_of(x) == q.block_of(y)) throw PreconditionFailed("subdivide: x,y share a Q block");
    if (!is_clique_partition(h, f) || !is_frozen_clique_partition(h, f))
        throw PreconditionFailed("subdivide: f is not a frozen clique partition");

    const int fx = f.block_of(x);
    const bool case2 = f.block(fx).size() == 2 && f.block_of(y) == fx;
    const bool case1 = f.block_of(y) != fx;
    int which = case2 ? 2 : (case1 ? 1 : 0);
    if (opt.force_case != 0) {
        if ((opt.force_case == 2 && !case2) || (opt.force_case == 1 && !case1))
            throw PreconditionFailed("subdivide: forced case " + std::to_string(opt.force_case) + " does not apply");
        which = opt.force_case;
    }
    if (which == 0) throw PreconditionFailed("subdivide: x,y share an F block larger than {x,y}");
    if (which == 1 && opt.strict && is_diamond_middle_edge(h, x, y))
        throw PreconditionFailed("subdivide: xy is the middle edge of a diamond");

    const int n = h.order();
    TransformResult r;
    r.graph_out = subdivide_edge(h, x, y);
    r.case_used = which;
    r.u = n;
    r.v = n + 1;
    const VertexSet uv = VertexSet::of(n + 2, {n, n + 1});

    auto widen = [n](const BlockPartition& p) {
        std::vector<VertexSet> blocks;
        for (const auto& b : p.blocks()) {
            VertexSet w(n + 2);
            for (int a : b) w.insert(a);
            blocks.push_back(w);
        }
        return blocks;
    };
    auto qb = widen(q);
    qb.push_back(uv);
    r.q_out = BlockPartition(n + 2, std::move(qb));
    auto fb = widen(f);
    if (which == 1) {
        fb.push_back(uv);
    } else {
        fb[static_cast<std::size_t>(fx)] = VertexSet::of(n + 2, {x, n});
        fb.push_back(VertexSet::of(n + 2, {n + 1, y}));
    }
    r.f_out = BlockPartition(n + 2, std::move(fb));

    if (!is_clique_partition(r.graph_out, r.q_out)) throw InternalCheckFailed("subdivide: transported Q is not a clique partition");
    if (!is_clique_partition(r.graph_out, r.f_out) || !is_frozen_clique_partition(r.graph_out, r.f_out))
        throw InternalCheckFailed("subdivide: transported F is not frozen");
    r.input_free = is_free_of(h, Pattern::C4);
    r.output_free = is_free_of(r.graph_out, Pattern::C4);
    r.c4_preserved = !r.input_free || r.output_free;
    return r;
}

struct ThetaCheck {
    bool ok = false;
    int theta_in = 0;
    int theta_out = 0;
    std::string diagnostic;
};

/// Whether theta(h) = k and theta(graph_out) = k + 1, by the exact solver.
inline ThetaCheck theta_increment_check(TransformResult& result, const Graph& h, int k, const SolverOptions& opt = {}) {
    ThetaCheck c;
    c.theta_in = clique_cover_number(h, opt).value;
    c.theta_out = clique_cover_number(result.graph_out, opt).value;
    c.ok = c.theta_in == k && c.theta_out == k + 1;
    if (c.theta_in != k)
        c.diagnostic = "theta(H) is " + std::to_string(c.theta_in) + ", not " + std::to_string(k);
    else if (!c.ok)
        c.diagnostic = "theta(H') is " + std::to_string(c.theta_out) + ", expected " + std::to_string(k + 1);
    result.theta_incremented = c.ok;
    return c;
}

/// Colouring-side form: x and y nonadjacent in g, beta a colouring with
/// beta(x) != beta(y), gamma a frozen colouring. In the output x and y are
/// adjacent, u misses only x and v, v misses only u and y. The freeness flags
/// refer to 2K2 in g.
inline TransformResult expand_nonedge(const Graph& g, int x, int y, const BlockPartition& beta, const BlockPartition& gamma,
                                      const TransformOptions& opt = {}) {
    if (x < 0 || y < 0 || x >= g.order() || y >= g.order() || x == y) throw InvalidInput("expand: bad endpoints");
    if (g.adjacent(x, y)) throw PreconditionFailed("expand: x and y are adjacent");
    if (!is_proper_colouring(g, beta)) throw PreconditionFailed("expand: beta is not a proper colouring");
    if (!is_proper_colouring(g, gamma) || !is_frozen_colouring(g, gamma))
        throw PreconditionFailed("expand: gamma is not a frozen colouring");
    auto r = subdivide_with_certificates(complement(g), beta, gamma, x, y, opt);
    r.graph_out = complement(r.graph_out);
    if (!is_proper_colouring(r.graph_out, r.q_out) || !is_frozen_colouring(r.graph_out, r.f_out))
        throw InternalCheckFailed("expand: certificates do not transfer");
    return r;
}

/// The chain recipe: starting from ME_2's complement with its certificates,
/// subdivide t - 4 times, always at x = u_1 and the current neighbour of u_1 on the path.
inline TransformResult chain_by_subdivision(int t) {
    if (t < 5) throw InvalidInput("chain_by_subdivision needs t >= 5");
    auto base = me_complement(2);
    const int x = 1;
    int y = 2;
    TransformResult r;
    r.graph_out = base.graph;
    r.q_out = base.canonical;
    r.f_out = *base.frozen;
    for (int step = 0; step < t - 4; ++step) {
        r = subdivide_with_certificates(r.graph_out, r.q_out, r.f_out, x, y);
        y = r.u;
    }
    return r;
}

inline nlohmann::json transform_to_json(const TransformResult& r) {
    nlohmann::json j{{"case", r.case_used},
                     {"u", r.u},
                     {"v", r.v},
                     {"q_out", partition_to_json(r.q_out)},
                     {"f_out", partition_to_json(r.f_out)},
                     {"input_free", r.input_free},
                     {"output_free", r.output_free},
                     {"c4_preserved", r.c4_preserved}};
    j["theta_incremented"] = r.theta_incremented ? nlohmann::json(*r.theta_incremented) : nlohmann::json(nullptr);
    return j;
}

}  // namespace frozencol
