#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "frozencol/graph.hpp"
#include "frozencol/partition.hpp"
#include "frozencol/patterns.hpp"
#include "frozencol/solvers.hpp"

// Colours are 0-based here: an ell-colouring uses colours 0..ell-1.

namespace frozencol {

struct MoveSequence {
    BlockPartition start;
    std::vector<std::pair<int, int>> moves;  // (vertex, new colour)
    int ell = 0;
    std::string route;  // branch of the canonical procedure that produced it
};

struct MoveStats {
    bool valid = true;
    int bad_index = -1;  // first move that breaks properness
    std::string reason;
    std::vector<int> per_vertex;
    int max_per_vertex = 0;
    int total = 0;
    std::vector<int> final_colours;
};

/// Replays seq from its start; every intermediate colouring must be a proper ell-colouring.
inline MoveStats verify_moves(const Graph& g, const MoveSequence& seq) {
    MoveStats s;
    const int n = g.order();
    s.per_vertex.assign(n, 0);
    if (seq.start.ground() != n || seq.start.block_count() > seq.ell || !is_proper_colouring(g, seq.start)) {
        s.valid = false;
        s.reason = "start is not a proper ell-colouring";
        return s;
    }
    s.final_colours = seq.start.colours();
    for (std::size_t i = 0; i < seq.moves.size(); ++i) {
        auto [v, c] = seq.moves[i];
        auto fail = [&](const char* why) {
            s.valid = false;
            s.bad_index = static_cast<int>(i);
            s.reason = why;
        };
        if (v < 0 || v >= n) {
            fail("vertex out of range");
            return s;
        }
        if (c < 0 || c >= seq.ell) {
            fail("colour out of range");
            return s;
        }
        if (s.final_colours[v] == c) {
            fail("move does not change the colour");
            return s;
        }
        for (int w : g.neighbours(v))
            if (s.final_colours[w] == c) {
                fail("neighbour already has the colour");
                return s;
            }
        s.final_colours[v] = c;
        ++s.per_vertex[v];
    }
    s.total = static_cast<int>(seq.moves.size());
    for (int x : s.per_vertex) s.max_per_vertex = std::max(s.max_per_vertex, x);
    return s;
}

inline BlockPartition final_colouring(const Graph& g, const MoveSequence& seq) {
    auto s = verify_moves(g, seq);
    if (!s.valid) throw InvalidInput("move sequence invalid at move " + std::to_string(s.bad_index) + ": " + s.reason);
    return BlockPartition::from_colours(s.final_colours, seq.ell);
}

/// Parts A_1..A_p of an optimal colouring with A_1 maximal independent, and
/// per part j >= 1 the vertex x_j of A_1 with the most neighbours in A_j.
struct CanonicalContext {
    std::vector<VertexSet> parts;
    std::vector<int> complete_vertices;  // index j for part j; entry 0 unused (-1)
};

namespace detail {

// Applies moves to a working colouring and refuses any improper step.
class Walk {
public:
    Walk(const Graph& g, std::vector<int> colour, int ell) : g_(g), colour_(std::move(colour)), ell_(ell) {}

    int colour(int v) const { return colour_[v]; }
    const std::vector<int>& colours() const { return colour_; }

    bool allowed(int v, int c) const {
        for (int w : g_.neighbours(v))
            if (colour_[w] == c) return false;
        return true;
    }

    bool has_neighbour_coloured(int v, int c, const VertexSet& within) const {
        for (int w : g_.neighbours(v) & within)
            if (colour_[w] == c) return true;
        return false;
    }

    void move(int v, int c, const char* step) {
        if (colour_[v] == c) return;
        if (c < 0 || c >= ell_ || !allowed(v, c))
            throw InternalCheckFailed(std::string("recolour: improper move in step '") + step + "'");
        colour_[v] = c;
        moves_.emplace_back(v, c);
    }

    void move_all(const VertexSet& s, int c, const char* step) {
        for (int v : s) move(v, c, step);
    }

    std::vector<std::pair<int, int>> take() { return std::move(moves_); }

private:
    const Graph& g_;
    std::vector<int> colour_;
    int ell_;
    std::vector<std::pair<int, int>> moves_;
};

inline std::vector<int> start_colours(const Graph& g, const BlockPartition& p, int ell) {
    if (p.ground() != g.order()) throw InvalidInput("colouring does not match the graph");
    if (p.block_count() > ell) throw InvalidInput("colouring uses more than ell colours");
    if (!is_proper_colouring(g, p)) throw PreconditionFailed("colouring is not proper");
    return p.colours();
}

inline MoveSequence finish(const Graph& g, const BlockPartition& start, int ell, std::vector<std::pair<int, int>> moves,
                           std::string route = {}) {
    MoveSequence seq{start.padded(ell - start.block_count()), std::move(moves), ell, std::move(route)};
    auto s = verify_moves(g, seq);
    if (!s.valid) throw InternalCheckFailed("recolour: emitted sequence fails replay at move " + std::to_string(s.bad_index));
    return seq;
}

inline std::string describe_2k2(const Graph& g, const VertexSet& w) {
    std::string out = "graph contains an induced 2K2 on";
    for (int v : w) out += " " + g.label(v);
    return out;
}

inline void require_2k2_free(const Graph& g) {
    if (auto w = find_induced(g, Pattern::TwoK2)) throw PreconditionFailed(describe_2k2(g, *w));
}

inline int smallest_colour_except(int ell, std::initializer_list<int> used) {
    for (int c = 0; c < ell; ++c)
        if (std::find(used.begin(), used.end(), c) == used.end()) return c;
    throw PreconditionFailed("not enough colours");
}

}  // namespace detail

/// Splits V(g) into `parts_needed` independent sets from an optimal colouring,
/// grows A_1 to a maximal independent set, and records the x_j candidates.
inline CanonicalContext maximal_first_partition(const Graph& g, int parts_needed, const SolverOptions& opt = {}) {
    auto chi = chromatic_number(g, opt);
    if (chi.value > parts_needed)
        throw PreconditionFailed("chromatic number " + std::to_string(chi.value) + " exceeds " + std::to_string(parts_needed));
    const int n = g.order();
    CanonicalContext ctx;
    std::vector<VertexSet> blocks;
    for (const auto& b : chi.witness.blocks())
        if (!b.empty()) blocks.push_back(b);
    // Largest block seeds A_1; ties and the remaining parts go by first vertex.
    std::sort(blocks.begin(), blocks.end(), [](const VertexSet& a, const VertexSet& b) {
        return a.size() != b.size() ? a.size() > b.size() : a.first() < b.first();
    });
    if (blocks.size() > 2)
        std::sort(blocks.begin() + 1, blocks.end(), [](const VertexSet& a, const VertexSet& b) { return a.first() < b.first(); });
    VertexSet a1 = blocks.empty() ? VertexSet(n) : blocks.front();
    for (int v = 0; v < n; ++v)
        if (!a1.contains(v) && !g.neighbours(v).intersects(a1)) a1.insert(v);
    ctx.parts.push_back(a1);
    for (std::size_t i = 1; i < blocks.size(); ++i) ctx.parts.push_back(blocks[i] - a1);
    while (static_cast<int>(ctx.parts.size()) < parts_needed) ctx.parts.emplace_back(n);
    ctx.complete_vertices.assign(ctx.parts.size(), -1);
    for (std::size_t j = 1; j < ctx.parts.size(); ++j) {
        int best = -1, best_count = -1;
        for (int x : a1) {
            int c = (g.neighbours(x) & ctx.parts[j]).size();
            if (c > best_count) {
                best = x;
                best_count = c;
            }
        }
        ctx.complete_vertices[j] = best;
    }
    return ctx;
}

/// x_j in A_1 adjacent to all of A_j. Requires g to be 2K2-free.
inline int complete_vertex(const Graph& g, const CanonicalContext& ctx, int j) {
    if (j < 1 || j >= static_cast<int>(ctx.parts.size())) throw InvalidInput("complete_vertex: part index out of range");
    detail::require_2k2_free(g);
    const int x = ctx.complete_vertices[j];
    if (x < 0 || !ctx.parts[j].is_subset_of(g.neighbours(x)))
        throw InternalCheckFailed("complete_vertex: no vertex of A_1 is complete to A_" + std::to_string(j + 1));
    return x;
}

/// Colour per part if `colour` is monochromatic on every nonempty part with distinct colours.
inline std::optional<std::vector<int>> part_colours(const CanonicalContext& ctx, const std::vector<int>& colour) {
    std::vector<int> out;
    for (const auto& p : ctx.parts) {
        if (p.empty()) {
            out.push_back(-1);
            continue;
        }
        const int c = colour[p.first()];
        for (int v : p)
            if (colour[v] != c) return std::nullopt;
        if (std::find(out.begin(), out.end(), c) != out.end()) return std::nullopt;
        out.push_back(c);
    }
    return out;
}

/// Recolours beta into gamma when both induce the same classes, moving every
/// vertex at most twice: classes shift along the colour permutation, and each
/// cycle is opened through a colour no class currently occupies.
inline MoveSequence rename_moves(const Graph& g, const BlockPartition& beta, const BlockPartition& gamma, int ell) {
    auto b = detail::start_colours(g, beta, ell);
    auto c = detail::start_colours(g, gamma, ell);
    if (beta.class_system() != gamma.class_system()) throw PreconditionFailed("rename: colourings induce different classes");
    std::vector<int> target(ell, -1);  // beta colour -> gamma colour
    std::vector<int> where(ell, -1);   // beta colour -> current colour
    std::vector<int> occupant(ell, -1);
    for (int v = 0; v < g.order(); ++v) {
        target[b[v]] = c[v];
        where[b[v]] = b[v];
        occupant[b[v]] = b[v];
    }
    std::vector<VertexSet> cls(ell, VertexSet(g.order()));
    for (int v = 0; v < g.order(); ++v) cls[b[v]].insert(v);
    detail::Walk walk(g, b, ell);
    auto shift = [&](int a, int to) {
        occupant[where[a]] = -1;
        walk.move_all(cls[a], to, "rename");
        where[a] = to;
        occupant[to] = a;
    };
    while (true) {
        bool pending = false, progressed = false;
        for (int a = 0; a < ell; ++a) {
            if (target[a] < 0 || where[a] == target[a]) continue;
            pending = true;
            if (occupant[target[a]] < 0) {
                shift(a, target[a]);
                progressed = true;
            }
        }
        if (!pending) break;
        if (progressed) continue;
        int a = 0;
        while (target[a] < 0 || where[a] == target[a]) ++a;
        int spare = 0;
        while (spare < ell && occupant[spare] >= 0) ++spare;
        if (spare == ell) throw PreconditionFailed("rename: no spare colour to break a cycle");
        shift(a, spare);
    }
    return detail::finish(g, beta, ell, walk.take(), "rename");
}

/// Two-part case: A_1 takes beta(x_2), then A_2 takes the smallest other colour.
/// Every vertex moves at most once.
inline MoveSequence bipartite_canonical_moves(const Graph& g, const CanonicalContext& ctx, const BlockPartition& beta, int ell) {
    if (ctx.parts.size() != 2) throw InvalidInput("bipartite pipeline needs a two-part context");
    if (ell < 3) throw PreconditionFailed("bipartite pipeline needs ell >= 3");
    auto b = detail::start_colours(g, beta, ell);
    detail::Walk walk(g, b, ell);
    if (!ctx.parts[0].empty()) {
        const int x = ctx.parts[1].empty() ? ctx.parts[0].first() : complete_vertex(g, ctx, 1);
        const int bx = walk.colour(x);
        walk.move_all(ctx.parts[0], bx, "A_1 to beta(x)");
        walk.move_all(ctx.parts[1], detail::smallest_colour_except(ell, {bx}), "A_2 to other colour");
    }
    return detail::finish(g, beta, ell, walk.take(), "bipartite");
}

namespace detail {

// Part i is monochromatic; reach a canonical colouring without touching A_i.
// X = A_j - A and Y = A_k - A where A holds colour c_i. X' adds to X the
// vertices of Y with no neighbour in X, which makes X' maximal in G - A, so
// some x in X' is complete to the rest of Y.
inline void claim_one(const Graph& g, const CanonicalContext& ctx, Walk& walk, int i, int ell) {
    const auto& ai = ctx.parts[i];
    if (ai.empty()) throw PreconditionFailed("single-colour part is empty");
    const int ci = walk.colour(ai.first());
    for (int v : ai)
        if (walk.colour(v) != ci) throw PreconditionFailed("part A_" + std::to_string(i + 1) + " is not monochromatic");
    const int j = i == 0 ? 1 : 0;
    const int k = 3 - i - j;
    const int n = g.order();
    VertexSet a(n);
    for (int v = 0; v < n; ++v)
        if (walk.colour(v) == ci) a.insert(v);
    const VertexSet x_side = ctx.parts[j] - a;
    const VertexSet y_side = ctx.parts[k] - a;
    VertexSet fold = x_side;
    for (int y : y_side)
        if (!g.neighbours(y).intersects(x_side)) fold.insert(y);
    const VertexSet rest = y_side - fold;
    const int cj = smallest_colour_except(ell, {ci});
    const int ck = smallest_colour_except(ell, {ci, cj});
    if (!fold.empty()) {
        int x = -1;
        for (int v : fold)
            if (rest.is_subset_of(g.neighbours(v))) {
                x = v;
                break;
            }
        if (x < 0) throw InternalCheckFailed("recolour: no vertex of the folded part is complete to the rest");
        const int d1 = walk.colour(x);
        const int d2 = smallest_colour_except(ell, {ci, d1, cj});
        walk.move_all(fold, d1, "fold to d1");
        walk.move_all(rest, d2, "rest to d2");
        walk.move_all(fold & y_side, d2, "unfold");
    }
    walk.move_all(x_side, cj, "X to c_j");
    walk.move_all(y_side, ck, "Y to c_k");
    walk.move_all(ctx.parts[j] & a, cj, "A in A_j");
    walk.move_all(ctx.parts[k] & a, ck, "A in A_k");
}

inline void require_three_parts(const Graph& g, const CanonicalContext& ctx, int ell) {
    if (ctx.parts.size() != 3) throw InvalidInput("three-part context required");
    if (ell < 4) throw PreconditionFailed("ell must be at least 4");
    for (const auto& p : ctx.parts)
        if (p.empty()) throw PreconditionFailed("context has an empty part; chromatic number below 3");
    require_2k2_free(g);
}

}  // namespace detail

/// Fold-and-shift step: psi is monochromatic on part i (0-based); vertices of
/// A_i never move, every other vertex moves at most four times.
inline MoveSequence single_colour_part_moves(const Graph& g, const CanonicalContext& ctx, const BlockPartition& psi, int i, int ell) {
    detail::require_three_parts(g, ctx, ell);
    if (i < 0 || i > 2) throw InvalidInput("part index out of range");
    detail::Walk walk(g, detail::start_colours(g, psi, ell), ell);
    detail::claim_one(g, ctx, walk, i, ell);
    return detail::finish(g, psi, ell, walk.take(), "single-colour part");
}

/// From any ell-colouring of a 3-chromatic 2K2-free graph to a colouring whose
/// classes are exactly the three parts, moving every vertex at most six times.
inline MoveSequence canonical_moves(const Graph& g, const CanonicalContext& ctx, const BlockPartition& beta, int ell) {
    detail::require_three_parts(g, ctx, ell);
    const int n = g.order();
    detail::Walk walk(g, detail::start_colours(g, beta, ell), ell);
    const auto& a1 = ctx.parts[0];
    const auto& a2 = ctx.parts[1];
    const auto& a3 = ctx.parts[2];
    auto done = [&](int i, const char* route) {
        detail::claim_one(g, ctx, walk, i, ell);
        return detail::finish(g, beta, ell, walk.take(), route);
    };

    // A vertex adjacent to everything outside its own part.
    for (int i = 0; i < 3; ++i) {
        const VertexSet outside = VertexSet::full(n) - ctx.parts[i];
        for (int x : ctx.parts[i])
            if (outside.is_subset_of(g.neighbours(x))) {
                walk.move_all(ctx.parts[i], walk.colour(x), "dominating part");
                return done(i, "dominating vertex");
            }
    }

    const int x2 = complete_vertex(g, ctx, 1);
    const int x3 = complete_vertex(g, ctx, 2);
    const int c1 = walk.colour(x2);
    const int c2 = walk.colour(x3);
    if (c1 == c2) {
        walk.move_all(a1, c1, "A_1 to shared anchor colour");
        return done(0, "shared anchor");
    }

    // zeta
    for (int v : a2)
        if (!walk.has_neighbour_coloured(v, c2, a1)) walk.move(v, c2, "zeta A_2");
    for (int v : a3)
        if (!walk.has_neighbour_coloured(v, c1, a1)) walk.move(v, c1, "zeta A_3");
    for (int v : a1) {
        if (walk.colour(v) == c1 || walk.colour(v) == c2) continue;
        if (!walk.has_neighbour_coloured(v, c1, a3))
            walk.move(v, c1, "zeta A_1");
        else if (!walk.has_neighbour_coloured(v, c2, a2))
            walk.move(v, c2, "zeta A_1");
    }

    // Case 1: an A_1 vertex outside the anchor colours; nothing outside A_1 shares its colour.
    for (int v : a1)
        if (walk.colour(v) != c1 && walk.colour(v) != c2) {
            const int c = walk.colour(v);
            for (int w = 0; w < n; ++w)
                if (!a1.contains(w) && walk.colour(w) == c) throw InternalCheckFailed("recolour: Case 1 colour appears outside A_1");
            walk.move_all(a1, c, "case 1");
            return done(0, "case 1");
        }

    auto present = [&](int c, const VertexSet& part) {
        for (int v : part)
            if (walk.colour(v) == c) return true;
        return false;
    };

    // Case 2(a): some other colour missing from A_j; the remaining part takes it.
    for (int j = 1; j <= 2; ++j)
        for (int c = 0; c < ell; ++c) {
            if (c == c1 || c == c2 || present(c, ctx.parts[j])) continue;
            const int i = 3 - j;
            walk.move_all(ctx.parts[i], c, "case 2(a)");
            return done(i, "case 2(a)");
        }

    // Case 2(b): both parts carry every other colour.
    const int c = detail::smallest_colour_except(ell, {c1, c2});
    const int cp = detail::smallest_colour_except(ell, {c1, c2, c});
    auto blocked = [&](int from, int to) {
        for (int v : a2)
            if (walk.colour(v) == from && walk.has_neighbour_coloured(v, to, VertexSet::full(n))) return true;
        return false;
    };
    int from = cp, to = c;
    if (blocked(from, to)) std::swap(from, to);
    if (blocked(from, to)) throw InternalCheckFailed("recolour: both Case 2(b) orientations blocked");
    for (int v : a2)
        if (walk.colour(v) == from) walk.move(v, to, "case 2(b) merge");
    walk.move_all(a3, from, "case 2(b) A_3");
    return done(2, "case 2(b)");
}

namespace detail {

inline std::vector<std::pair<int, int>> reversed(const MoveSequence& seq) {
    auto colour = seq.start.colours();
    std::vector<std::pair<int, int>> undo;
    for (auto [v, c] : seq.moves) {
        undo.emplace_back(v, colour[v]);
        colour[v] = c;
    }
    std::reverse(undo.begin(), undo.end());
    return undo;
}

}  // namespace detail

/// A recolouring path from beta to gamma in R_ell(g) for 2K2-free g with
/// chromatic number at most 3: both ends go to canonical colourings, which
/// are joined by renaming.
inline MoveSequence path_between(const Graph& g, const BlockPartition& beta, const BlockPartition& gamma, int ell,
                                 const SolverOptions& opt = {}) {
    detail::require_2k2_free(g);
    const int chi = chromatic_number(g, opt).value;
    if (chi > 3) throw PreconditionFailed("chromatic number above 3");
    if (ell < chi + 1) throw PreconditionFailed("ell must exceed the chromatic number");
    detail::start_colours(g, beta, ell);
    detail::start_colours(g, gamma, ell);
    if (g.order() == 0) return {beta, {}, ell, "empty"};
    MoveSequence to_b, to_g;
    if (chi <= 2) {
        if (ell < 3) throw PreconditionFailed("bipartite pipeline needs ell >= 3");
        auto ctx = maximal_first_partition(g, 2, opt);
        to_b = bipartite_canonical_moves(g, ctx, beta, ell);
        to_g = bipartite_canonical_moves(g, ctx, gamma, ell);
    } else {
        auto ctx = maximal_first_partition(g, 3, opt);
        to_b = canonical_moves(g, ctx, beta, ell);
        to_g = canonical_moves(g, ctx, gamma, ell);
    }
    auto mid = rename_moves(g, final_colouring(g, to_b), final_colouring(g, to_g), ell);
    std::vector<std::pair<int, int>> moves = to_b.moves;
    moves.insert(moves.end(), mid.moves.begin(), mid.moves.end());
    auto back = detail::reversed(to_g);
    moves.insert(moves.end(), back.begin(), back.end());
    return detail::finish(g, beta, ell, std::move(moves), to_b.route + " / " + to_g.route);
}

/// Moves as [vertex, colour] with colours 1-based, matching the colour lines.
inline nlohmann::json moves_to_json(const Graph& g, const MoveSequence& seq) {
    auto s = verify_moves(g, seq);
    nlohmann::json moves = nlohmann::json::array();
    for (auto [v, c] : seq.moves) moves.push_back({v, c + 1});
    return {{"ell", seq.ell},
            {"start", to_colour_line(seq.start)},
            {"moves", moves},
            {"valid", s.valid},
            {"route", seq.route},
            {"per_vertex_max", s.max_per_vertex},
            {"total", s.total}};
}

}  // namespace frozencol
