#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "frozencol/graph.hpp"

namespace frozencol {

/// Ordered sequence of k vertex blocks partitioning {0..n-1}; blocks may be empty.
///
/// The same type is a colouring (blocks are colour classes, block i is colour i)
/// and a clique partition. Block order matters: swapping two blocks gives a
/// different colouring.
class BlockPartition {
public:
    BlockPartition() = default;

    BlockPartition(int ground, std::vector<VertexSet> blocks) : ground_(ground), blocks_(std::move(blocks)) {
        VertexSet seen(ground_);
        for (const auto& b : blocks_) {
            if (b.universe() != ground_) throw InvalidInput("partition block over a different vertex range");
            if (b.intersects(seen)) throw InvalidInput("partition blocks overlap");
            seen |= b;
        }
        if (seen.size() != ground_) throw InvalidInput("partition blocks do not cover every vertex");
    }

    static BlockPartition from_blocks(int ground, const std::vector<std::vector<int>>& blocks) {
        std::vector<VertexSet> sets;
        sets.reserve(blocks.size());
        for (const auto& b : blocks) {
            VertexSet s(ground);
            for (int v : b) {
                if (v < 0 || v >= ground) throw InvalidInput("partition vertex out of range: " + std::to_string(v));
                if (s.contains(v)) throw InvalidInput("partition repeats vertex " + std::to_string(v));
                s.insert(v);
            }
            sets.push_back(std::move(s));
        }
        return {ground, std::move(sets)};
    }

    /// colour[v] in [0, k); k defaults to the largest colour plus one.
    static BlockPartition from_colours(const std::vector<int>& colour, int k = -1) {
        const int n = static_cast<int>(colour.size());
        int top = 0;
        for (int c : colour) {
            if (c < 0) throw InvalidInput("negative colour");
            top = std::max(top, c + 1);
        }
        if (k < 0) k = top;
        if (top > k) throw InvalidInput("colour index exceeds block count");
        std::vector<VertexSet> sets(k, VertexSet(n));
        for (int v = 0; v < n; ++v) sets[colour[v]].insert(v);
        return {n, std::move(sets)};
    }

    int ground() const noexcept { return ground_; }
    int block_count() const noexcept { return static_cast<int>(blocks_.size()); }
    const VertexSet& block(int i) const { return blocks_.at(i); }
    const std::vector<VertexSet>& blocks() const noexcept { return blocks_; }

    int nonempty_count() const {
        return static_cast<int>(std::count_if(blocks_.begin(), blocks_.end(), [](const VertexSet& b) { return !b.empty(); }));
    }

    int block_of(int v) const {
        for (int i = 0; i < block_count(); ++i)
            if (blocks_[i].contains(v)) return i;
        throw InvalidInput("vertex not in partition: " + std::to_string(v));
    }

    std::vector<int> colours() const {
        std::vector<int> c(ground_, -1);
        for (int i = 0; i < block_count(); ++i)
            for (int v : blocks_[i]) c[v] = i;
        return c;
    }

    /// Same block sequence with `extra` empty blocks appended.
    BlockPartition padded(int extra) const {
        auto b = blocks_;
        for (int i = 0; i < extra; ++i) b.emplace_back(ground_);
        return {ground_, std::move(b)};
    }

    /// The unordered set system of nonempty blocks (what a colouring induces).
    std::vector<VertexSet> class_system() const {
        std::vector<VertexSet> out;
        for (const auto& b : blocks_)
            if (!b.empty()) out.push_back(b);
        std::sort(out.begin(), out.end());
        return out;
    }

    friend bool operator==(const BlockPartition&, const BlockPartition&) = default;

private:
    int ground_ = 0;
    std::vector<VertexSet> blocks_;
};

namespace detail {
inline void require_ground(const Graph& g, const BlockPartition& p) {
    if (p.ground() != g.order())
        throw InvalidInput("partition covers " + std::to_string(p.ground()) + " vertices but graph has " + std::to_string(g.order()));
}
}  // namespace detail

inline bool is_proper_colouring(const Graph& g, const BlockPartition& p) {
    detail::require_ground(g, p);
    return std::all_of(p.blocks().begin(), p.blocks().end(), [&](const VertexSet& b) { return is_independent(g, b); });
}

inline bool is_clique_partition(const Graph& g, const BlockPartition& p) {
    detail::require_ground(g, p);
    return std::all_of(p.blocks().begin(), p.blocks().end(), [&](const VertexSet& b) { return is_clique(g, b); });
}

/// Every block nonempty, and every vertex has a neighbour in every block other than its own.
/// Throws when p is not a proper colouring of g.
inline bool is_frozen_colouring(const Graph& g, const BlockPartition& p) {
    if (!is_proper_colouring(g, p)) throw InvalidInput("is_frozen_colouring: not a proper colouring");
    for (int i = 0; i < p.block_count(); ++i) {
        if (p.block(i).empty()) return false;
        for (int v : p.block(i))
            for (int j = 0; j < p.block_count(); ++j)
                if (j != i && !g.neighbours(v).intersects(p.block(j))) return false;
    }
    return true;
}

/// Every block nonempty, and every vertex has a non-neighbour in every block other than its own.
/// Throws when p is not a clique partition of g.
inline bool is_frozen_clique_partition(const Graph& g, const BlockPartition& p) {
    if (!is_clique_partition(g, p)) throw InvalidInput("is_frozen_clique_partition: not a clique partition");
    for (int i = 0; i < p.block_count(); ++i) {
        if (p.block(i).empty()) return false;
        for (int v : p.block(i))
            for (int j = 0; j < p.block_count(); ++j)
                if (j != i && p.block(j).is_subset_of(g.neighbours(v))) return false;
    }
    return true;
}

/// Frozen-ness of a partition into 2-cliques, decided from triangles alone:
/// frozen iff every triangle meets three distinct blocks.
inline bool frozen_by_triangles(const Graph& g, const BlockPartition& p) {
    detail::require_ground(g, p);
    for (const auto& b : p.blocks()) {
        if (b.size() != 2) throw InvalidInput("frozen_by_triangles: every block must have exactly two vertices");
        if (!g.adjacent(b.first(), b.next(b.first()))) throw InvalidInput("frozen_by_triangles: a block is not an edge");
    }
    const auto owner = p.colours();
    for (const auto& t : triangles(g)) {
        auto vs = t.members();
        int a = owner[vs[0]], b = owner[vs[1]], c = owner[vs[2]];
        if (a == b || b == c || a == c) return false;
    }
    return true;
}

/// Partition of join(g, h): pG's blocks followed by pH's blocks shifted by |g|.
inline BlockPartition join_certificates(const BlockPartition& pg, const BlockPartition& ph) {
    const int n = pg.ground() + ph.ground();
    std::vector<VertexSet> blocks;
    for (const auto& b : pg.blocks()) {
        VertexSet s(n);
        for (int v : b) s.insert(v);
        blocks.push_back(std::move(s));
    }
    for (const auto& b : ph.blocks()) {
        VertexSet s(n);
        for (int v : b) s.insert(pg.ground() + v);
        blocks.push_back(std::move(s));
    }
    return {n, std::move(blocks)};
}

// ---------------------------------------------------------------------------
// Serialisation. Colour lines use 1-based colour numbers, as in the figures;
// vertex ids are 0-based everywhere.
// ---------------------------------------------------------------------------

inline std::string to_colour_line(const BlockPartition& p) {
    std::string out;
    for (int c : p.colours()) {
        if (!out.empty()) out.push_back(' ');
        out += std::to_string(c + 1);
    }
    return out;
}

inline BlockPartition parse_colour_line(const std::string& line, int k = -1) {
    std::istringstream in(line);
    std::vector<int> colour;
    std::string tok;
    while (in >> tok) {
        int c = 0;
        try {
            std::size_t used = 0;
            c = std::stoi(tok, &used);
            if (used != tok.size()) throw InvalidInput("");
        } catch (const std::exception&) {
            throw InvalidInput("colour line: bad token '" + tok + "'");
        }
        if (c < 1) throw InvalidInput("colour line: colours are numbered from 1");
        colour.push_back(c - 1);
    }
    return BlockPartition::from_colours(colour, k);
}

inline nlohmann::json partition_to_json(const BlockPartition& p) {
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& b : p.blocks()) blocks.push_back(b.members());
    return {{"k", p.block_count()}, {"blocks", std::move(blocks)}};
}

inline BlockPartition partition_from_json(const nlohmann::json& j, int ground) {
    try {
        auto blocks = j.at("blocks").get<std::vector<std::vector<int>>>();
        int k = j.contains("k") ? j.at("k").get<int>() : static_cast<int>(blocks.size());
        if (k < static_cast<int>(blocks.size())) throw InvalidInput("partition JSON: k smaller than block list");
        blocks.resize(static_cast<std::size_t>(k));
        return BlockPartition::from_blocks(ground, blocks);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("partition JSON: ") + e.what());
    }
}

}  // namespace frozencol
