#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "frozencol/graph.hpp"
#include "frozencol/partition.hpp"

namespace frozencol {

enum class Family { ME, ME_STAR, KM, KE, KE_CUSTOM, B, H, CHAIN, CYCLE };

inline std::string to_string(Family f) {
    switch (f) {
        case Family::ME: return "ME";
        case Family::ME_STAR: return "ME_STAR";
        case Family::KM: return "KM";
        case Family::KE: return "KE";
        case Family::KE_CUSTOM: return "KE_CUSTOM";
        case Family::B: return "B";
        case Family::H: return "H";
        case Family::CHAIN: return "CHAIN";
        case Family::CYCLE: return "CYCLE";
    }
    return "?";
}

inline Family parse_family(const std::string& s) {
    for (Family f : {Family::ME, Family::ME_STAR, Family::KM, Family::KE, Family::KE_CUSTOM, Family::B, Family::H, Family::CHAIN,
                     Family::CYCLE})
        if (to_string(f) == s) return f;
    throw InvalidInput("unknown family: " + s);
}

/// Values the constructions promise. `alpha` is absent when no closed form is claimed.
struct ExpectedInvariants {
    int order = 0;
    int edge_count = 0;
    int theta = 0;
    std::optional<int> alpha;
    int frozen_blocks = 0;
    bool c4_free_asserted = false;
    std::vector<std::string> notes;
};

/// A family member on the clique-partition side, with its two certificates.
/// `frozen` is absent only for cycles whose length is not a multiple of 3.
struct FamilyInstance {
    Family family = Family::ME;
    int param = 0;
    Graph graph;
    BlockPartition canonical;
    std::optional<BlockPartition> frozen;
    ExpectedInvariants expected;
    /// Independent set of size theta from the constructions, when one is known.
    std::optional<VertexSet> alpha_witness;
};

namespace detail {

// Shared numbering for ME / ME* / KM: u_i = i for i = 0..q+1, then
// v_i1, v_i2, v_i3 for triangle i in cycle order.
struct MeIndex {
    int q;
    int u(int i) const { return i; }
    int v(int i, int j) const { return q + 2 + 3 * (i - 1) + (j - 1); }
    int order() const { return 4 * q + 2; }

    std::vector<std::string> labels() const {
        std::vector<std::string> out;
        for (int i = 0; i <= q + 1; ++i) out.push_back("u" + std::to_string(i));
        for (int i = 1; i <= q; ++i)
            for (int j = 1; j <= 3; ++j) out.push_back("v" + std::to_string(i) + std::to_string(j));
        return out;
    }
};

inline void require_param(bool ok, const std::string& msg) {
    if (!ok) throw InvalidInput(msg);
}

inline GraphBuilder me_builder(int q) {
    MeIndex ix{q};
    GraphBuilder b(ix.order());
    std::vector<int> cycle;
    for (int i = 0; i <= q + 1; ++i) cycle.push_back(ix.u(i));
    for (int i = 1; i <= q; ++i)
        for (int j = 1; j <= 3; ++j) cycle.push_back(ix.v(i, j));
    for (std::size_t i = 0; i < cycle.size(); ++i) b.add_edge(cycle[i], cycle[(i + 1) % cycle.size()]);
    for (int i = 1; i <= q; ++i) {
        b.add_edge(ix.u(i), ix.v(i, 2));
        b.add_edge(ix.v(i, 1), ix.v(i, 3));
    }
    b.set_labels(ix.labels());
    return b;
}

inline std::vector<std::vector<int>> me_triangles(const MeIndex& ix) {
    std::vector<std::vector<int>> out;
    for (int i = 1; i <= ix.q; ++i) out.push_back({ix.v(i, 1), ix.v(i, 2), ix.v(i, 3)});
    return out;
}

inline std::vector<std::vector<int>> me_frozen_blocks(const MeIndex& ix) {
    const int q = ix.q;
    std::vector<std::vector<int>> out;
    for (int i = 1; i <= q; ++i) out.push_back({ix.u(i), ix.v(i, 2)});
    for (int i = 1; i < q; ++i) out.push_back({ix.v(i, 3), ix.v(i + 1, 1)});
    out.push_back({ix.v(q, 3), ix.u(0)});
    out.push_back({ix.u(q + 1), ix.v(1, 1)});
    return out;
}

inline std::vector<std::vector<int>> me_canonical_blocks(const MeIndex& ix) {
    const int q = ix.q;
    auto out = me_triangles(ix);
    if (q % 2 == 0) {
        for (int i = 0; i <= q; i += 2) out.push_back({ix.u(i), ix.u(i + 1)});
    } else {
        for (int i = 0; i < q; i += 2) out.push_back({ix.u(i), ix.u(i + 1)});
        out.push_back({ix.u(q + 1)});
    }
    return out;
}

inline VertexSet me_alpha_witness(const MeIndex& ix) {
    const int q = ix.q;
    VertexSet s(ix.order());
    if (q % 2 == 0) {
        for (int i = 0; i <= q; i += 2) s.insert(ix.u(i));
        for (int i = 1; i <= q; ++i) s.insert(ix.v(i, 1));
    } else {
        for (int i = 0; i <= q - 1; i += 2) s.insert(ix.u(i));
        s.insert(ix.u(q + 1));
        s.insert(ix.v(1, 2));
        for (int i = 2; i <= q; ++i) s.insert(ix.v(i, 1));
    }
    return s;
}

inline int me_theta(int q) { return q % 2 == 0 ? (3 * q + 2) / 2 : (3 * q + 3) / 2; }

}  // namespace detail

/// Complement of ME_q: Hamiltonian cycle u_0..u_{q+1}, v_11..v_q3, plus u_i v_i2 and v_i1 v_i3.
inline FamilyInstance me_complement(int q) {
    detail::require_param(q >= 2, "ME needs q >= 2");
    detail::MeIndex ix{q};
    FamilyInstance f;
    f.family = Family::ME;
    f.param = q;
    f.graph = detail::me_builder(q).build();
    f.canonical = BlockPartition::from_blocks(ix.order(), detail::me_canonical_blocks(ix));
    f.frozen = BlockPartition::from_blocks(ix.order(), detail::me_frozen_blocks(ix));
    f.alpha_witness = detail::me_alpha_witness(ix);
    f.expected = {ix.order(), 6 * q + 2, detail::me_theta(q), detail::me_theta(q), 2 * q + 1, true, {}};
    return f;
}

/// Complement of ME*_q: ME_q's complement plus the edge u_0 u_{q+1}.
inline FamilyInstance me_star_complement(int q) {
    detail::require_param(q >= 2, "ME_STAR needs q >= 2");
    detail::MeIndex ix{q};
    FamilyInstance f;
    f.family = Family::ME_STAR;
    f.param = q;
    auto b = detail::me_builder(q);
    b.add_edge(ix.u(0), ix.u(q + 1));
    f.graph = std::move(b).build();
    f.canonical = BlockPartition::from_blocks(ix.order(), detail::me_canonical_blocks(ix));
    f.frozen = BlockPartition::from_blocks(ix.order(), detail::me_frozen_blocks(ix));
    const int theta = detail::me_theta(q);
    f.expected = {ix.order(), 6 * q + 3, theta, theta, 2 * q + 1, q >= 3, {}};
    if (q % 2 == 0) {
        f.alpha_witness = detail::me_alpha_witness(ix);
    } else {
        // q triangles plus the induced odd cycle u_0..u_{q+1} bound alpha by q + (q+1)/2.
        f.expected.alpha = (3 * q + 1) / 2;
        f.expected.notes.push_back("odd q: alpha is (3q+1)/2, one less than theta");
    }
    if (q == 2) f.expected.notes.push_back("q=2: C4-freeness not asserted; {u0,u1,u2,u3} induces C4");
    return f;
}

/// Complement of KM_q: ME_q's complement without the path u_1 u_2 ... u_q.
inline FamilyInstance km_complement(int q) {
    detail::require_param(q >= 2, "KM needs q >= 2");
    detail::MeIndex ix{q};
    auto b = detail::me_builder(q);
    for (int i = 1; i < q; ++i) b.remove_edge(ix.u(i), ix.u(i + 1));
    FamilyInstance f;
    f.family = Family::KM;
    f.param = q;
    f.graph = std::move(b).build();
    auto blocks = detail::me_triangles(ix);
    blocks.push_back({ix.u(0), ix.u(1)});
    blocks.push_back({ix.u(q), ix.u(q + 1)});
    for (int i = 2; i < q; ++i) blocks.push_back({ix.u(i)});
    f.canonical = BlockPartition::from_blocks(ix.order(), blocks);
    f.frozen = BlockPartition::from_blocks(ix.order(), detail::me_frozen_blocks(ix));
    VertexSet w(ix.order());
    for (int i = 1; i <= q; ++i) {
        w.insert(ix.u(i));
        w.insert(ix.v(i, 1));
    }
    f.alpha_witness = w;
    f.expected = {ix.order(), 6 * q + 2 - (q - 1), 2 * q, 2 * q, 2 * q + 1, true, {}};
    return f;
}

namespace detail {

inline int ke_v(int i, int j) { return 3 * (i - 1) + (j - 1); }

// KE-style graph on 2q triangles with the given pairs of middle indices (1-based).
inline FamilyInstance ke_build(Family fam, int q, const std::vector<std::pair<int, int>>& pairs) {
    const int n = 6 * q;
    const int m = 2 * q;
    GraphBuilder b(n);
    for (int x = 0; x < n; ++x) b.add_edge(x, (x + 1) % n);
    for (int i = 1; i <= m; ++i) b.add_edge(ke_v(i, 1), ke_v(i, 3));
    for (auto [i, j] : pairs) b.add_edge(ke_v(i, 2), ke_v(j, 2));
    std::vector<std::string> labels;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= 3; ++j) labels.push_back("v" + std::to_string(i) + std::to_string(j));
    b.set_labels(labels);

    FamilyInstance f;
    f.family = fam;
    f.param = q;
    f.graph = std::move(b).build();
    std::vector<std::vector<int>> canonical;
    for (int i = 1; i <= m; ++i) canonical.push_back({ke_v(i, 1), ke_v(i, 2), ke_v(i, 3)});
    f.canonical = BlockPartition::from_blocks(n, canonical);
    std::vector<std::vector<int>> frozen;
    for (auto [i, j] : pairs) frozen.push_back({ke_v(i, 2), ke_v(j, 2)});
    for (int i = 1; i <= m; ++i) frozen.push_back({ke_v(i, 3), ke_v(i % m + 1, 1)});
    f.frozen = BlockPartition::from_blocks(n, frozen);
    VertexSet w(n);
    for (int i = 1; i <= m; ++i) w.insert(ke_v(i, 1));
    f.alpha_witness = w;
    f.expected = {n, 9 * q, 2 * q, 2 * q, 3 * q, q >= 2, {"triangle chords v_i1 v_i3 included for every i"}};
    return f;
}

}  // namespace detail

/// Complement of KE_q: cycle v_11..v_{2q,3}, chords v_i1 v_i3, and v_i2 v_{i+q,2}.
inline FamilyInstance ke_complement(int q) {
    detail::require_param(q >= 1, "KE needs q >= 1");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= q; ++i) pairs.emplace_back(i, i + q);
    return detail::ke_build(Family::KE, q, pairs);
}

/// KE variant with a caller-chosen perfect matching on the 2q middle vertices.
/// Pairs of cyclically consecutive middles (i, i+1) and (2q, 1) are refused.
inline FamilyInstance ke_custom(int q, const std::vector<std::pair<int, int>>& pairs) {
    detail::require_param(q >= 2, "KE_CUSTOM needs q >= 2");
    const int m = 2 * q;
    if (static_cast<int>(pairs.size()) != q) throw InvalidInput("KE_CUSTOM: need exactly q pairs");
    std::vector<bool> used(m + 1, false);
    for (auto [i, j] : pairs) {
        if (i < 1 || i > m || j < 1 || j > m || i == j) throw InvalidInput("KE_CUSTOM: pair index out of range");
        if (used[i] || used[j]) throw InvalidInput("KE_CUSTOM: pairing is not a matching");
        used[i] = used[j] = true;
        const int lo = std::min(i, j);
        const int hi = std::max(i, j);
        if (hi - lo == 1 || (lo == 1 && hi == m))
            throw InvalidInput("KE_CUSTOM: pair (" + std::to_string(i) + "," + std::to_string(j) + ") joins consecutive triangles");
    }
    return detail::ke_build(Family::KE_CUSTOM, q, pairs);
}

/// Complement of B_t: two copies of K_t (a_1..a_t, b_1..b_t) joined by the matching a_i b_i.
inline FamilyInstance b_t(int t) {
    detail::require_param(t >= 2, "B needs t >= 2");
    GraphBuilder b(2 * t);
    std::vector<std::string> labels;
    for (int i = 0; i < t; ++i) labels.push_back("a" + std::to_string(i + 1));
    for (int i = 0; i < t; ++i) labels.push_back("b" + std::to_string(i + 1));
    for (int i = 0; i < t; ++i) {
        for (int j = i + 1; j < t; ++j) {
            b.add_edge(i, j);
            b.add_edge(t + i, t + j);
        }
        b.add_edge(i, t + i);
    }
    b.set_labels(labels);
    FamilyInstance f;
    f.family = Family::B;
    f.param = t;
    f.graph = std::move(b).build();
    std::vector<int> a_side, b_side;
    std::vector<std::vector<int>> matching;
    for (int i = 0; i < t; ++i) {
        a_side.push_back(i);
        b_side.push_back(t + i);
        matching.push_back({i, t + i});
    }
    f.canonical = BlockPartition::from_blocks(2 * t, {a_side, b_side});
    f.frozen = BlockPartition::from_blocks(2 * t, matching);
    f.alpha_witness = VertexSet::of(2 * t, {0, 2 * t - 1});
    f.expected = {2 * t, t * (t - 1) + t, 2, 2, t, false, {}};
    return f;
}

/// Complement of H_t: B_t's complement with every matching edge but a_t b_t
/// replaced by a path a_i, s_i, r_i, b_i.
inline FamilyInstance h_t_complement(int t) {
    detail::require_param(t >= 3, "H needs t >= 3");
    const int n = 4 * t - 2;
    auto s = [t](int i) { return 2 * t + 2 * (i - 1); };
    auto r = [t](int i) { return 2 * t + 2 * (i - 1) + 1; };
    GraphBuilder b(n);
    std::vector<std::string> labels;
    for (int i = 1; i <= t; ++i) labels.push_back("a" + std::to_string(i));
    for (int i = 1; i <= t; ++i) labels.push_back("b" + std::to_string(i));
    for (int i = 1; i < t; ++i) {
        labels.push_back("s" + std::to_string(i));
        labels.push_back("r" + std::to_string(i));
    }
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) {
            b.add_edge(i, j);
            b.add_edge(t + i, t + j);
        }
    b.add_edge(t - 1, 2 * t - 1);
    for (int i = 1; i < t; ++i) {
        b.add_edge(i - 1, s(i));
        b.add_edge(s(i), r(i));
        b.add_edge(r(i), t + i - 1);
    }
    b.set_labels(labels);
    FamilyInstance f;
    f.family = Family::H;
    f.param = t;
    f.graph = std::move(b).build();
    std::vector<int> a_side, b_side;
    for (int i = 0; i < t; ++i) {
        a_side.push_back(i);
        b_side.push_back(t + i);
    }
    std::vector<std::vector<int>> canonical{a_side, b_side};
    std::vector<std::vector<int>> frozen{{t - 1, 2 * t - 1}};
    for (int i = 1; i < t; ++i) {
        canonical.push_back({s(i), r(i)});
        frozen.push_back({i - 1, s(i)});
        frozen.push_back({r(i), t + i - 1});
    }
    f.canonical = BlockPartition::from_blocks(n, canonical);
    f.frozen = BlockPartition::from_blocks(n, frozen);
    f.expected = {n, t * (t - 1) + 1 + 3 * (t - 1), t + 1, std::nullopt, 2 * t - 1, true,
                  {"theta = t+1 is an upper bound from the construction; equality is checked by the solver"}};
    return f;
}

/// ME_2's complement with u_1 u_2 replaced by the path u_1, w_1, ..., w_{2(t-4)}, u_2.
inline FamilyInstance chain_complement(int t) {
    detail::require_param(t >= 4, "CHAIN needs t >= 4");
    detail::MeIndex ix{2};
    const int extra = 2 * (t - 4);
    const int n = ix.order() + extra;
    auto base = detail::me_builder(2).build();
    GraphBuilder b(base, extra);
    for (int k = 1; k <= extra; ++k) b.set_label(9 + k, "w" + std::to_string(k));
    if (extra > 0) {
        b.remove_edge(ix.u(1), ix.u(2));
        std::vector<int> path{ix.u(1)};
        for (int k = 0; k < extra; ++k) path.push_back(10 + k);
        path.push_back(ix.u(2));
        for (std::size_t i = 0; i + 1 < path.size(); ++i) b.add_edge(path[i], path[i + 1]);
    }
    FamilyInstance f;
    f.family = Family::CHAIN;
    f.param = t;
    f.graph = std::move(b).build();
    auto canonical = detail::me_canonical_blocks(ix);
    auto frozen = detail::me_frozen_blocks(ix);
    for (int k = 0; k < extra; k += 2) {
        canonical.push_back({10 + k, 11 + k});
        frozen.push_back({10 + k, 11 + k});
    }
    f.canonical = BlockPartition::from_blocks(n, canonical);
    f.frozen = BlockPartition::from_blocks(n, frozen);
    f.expected = {n, 14 + 2 * (t - 4), t, t, t + 1, true, {}};
    return f;
}

/// The colouring 1,2,3,1,2,3,... of C_n when 3 divides n; it is frozen exactly then.
inline std::optional<BlockPartition> cycle_frozen_3(int n) {
    detail::require_param(n >= 3, "cycle needs n >= 3");
    if (n % 3 != 0) return std::nullopt;
    std::vector<int> colour(n);
    for (int i = 0; i < n; ++i) colour[i] = i % 3;
    return BlockPartition::from_colours(colour, 3);
}

/// Complement of C_n; the certificates are colourings of C_n read as clique partitions.
inline FamilyInstance cycle_instance(int n) {
    detail::require_param(n >= 3, "CYCLE needs n >= 3");
    FamilyInstance f;
    f.family = Family::CYCLE;
    f.param = n;
    f.graph = complement(cycle_graph(n));
    std::vector<int> colour(n);
    for (int i = 0; i < n; ++i) colour[i] = i % 2;
    if (n % 2 == 1) colour[n - 1] = 2;
    f.canonical = BlockPartition::from_colours(colour);
    f.frozen = cycle_frozen_3(n);
    const int theta = n % 2 == 0 ? 2 : 3;
    f.expected = {n, n * (n - 1) / 2 - n, theta, n == 3 ? 3 : 2, n % 3 == 0 ? 3 : 0, false, {}};
    return f;
}

/// Dispatch by family name. `pairs` is used only by KE_CUSTOM.
inline FamilyInstance build_family(Family fam, int param, const std::vector<std::pair<int, int>>& pairs = {}) {
    switch (fam) {
        case Family::ME: return me_complement(param);
        case Family::ME_STAR: return me_star_complement(param);
        case Family::KM: return km_complement(param);
        case Family::KE: return ke_complement(param);
        case Family::KE_CUSTOM: return ke_custom(param, pairs);
        case Family::B: return b_t(param);
        case Family::H: return h_t_complement(param);
        case Family::CHAIN: return chain_complement(param);
        case Family::CYCLE: return cycle_instance(param);
    }
    throw InvalidInput("unknown family");
}

inline nlohmann::json expected_to_json(const ExpectedInvariants& e) {
    nlohmann::json j{{"n", e.order},
                     {"edges", e.edge_count},
                     {"theta", e.theta},
                     {"frozen_blocks", e.frozen_blocks},
                     {"c4_free_asserted", e.c4_free_asserted}};
    j["alpha"] = e.alpha ? nlohmann::json(*e.alpha) : nlohmann::json(nullptr);
    if (!e.notes.empty()) j["notes"] = e.notes;
    return j;
}

}  // namespace frozencol
