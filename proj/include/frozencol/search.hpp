#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "frozencol/graph.hpp"
#include "frozencol/io.hpp"
#include "frozencol/isomorphism.hpp"
#include "frozencol/partition.hpp"
#include "frozencol/patterns.hpp"
#include "frozencol/reconfig.hpp"
#include "frozencol/solvers.hpp"

namespace frozencol {

struct PredicateSpec {
    bool require_2k2_free = false;
    bool require_p5_free = false;
    bool require_c4_free = false;
    /// Apply the freeness filters to the complement instead of the graph.
    bool on_complement = false;
    /// Look for frozen (chi + gap)-colourings and beyond.
    int gap = 1;
    /// Largest k tried; -1 means the order of the graph.
    int max_k = -1;
};

struct SearchHit {
    std::string graph6;
    int order = 0;
    int chi = 0;
    int k = 0;
    std::string frozen;  // colour line
};

struct SearchReport {
    std::int64_t graphs_scanned = 0;
    std::int64_t passed_filters = 0;
    std::int64_t malformed = 0;
    std::vector<SearchHit> hits;  // sorted by (order, graph6), isomorphism-reduced
    std::int64_t dedup_count = 0;  // hits dropped as isomorphic to an earlier hit
    double runtime_seconds = 0;
};

inline void validate(const PredicateSpec& spec) {
    if (spec.gap < 1) throw InvalidInput("gap must be at least 1");
    if (spec.max_k != -1 && spec.max_k < 1) throw InvalidInput("max_k must be positive");
}

inline bool passes_filters(const Graph& g, const PredicateSpec& spec) {
    if (!spec.require_2k2_free && !spec.require_p5_free && !spec.require_c4_free) return true;
    const Graph h = spec.on_complement ? complement(g) : g;
    if (spec.require_2k2_free && !is_free_of(h, Pattern::TwoK2)) return false;
    if (spec.require_c4_free && !is_free_of(h, Pattern::C4)) return false;
    if (spec.require_p5_free && !is_free_of(h, Pattern::P5)) return false;
    return true;
}

/// The smallest k in chi+gap..max_k with a frozen k-colouring, re-verified.
inline std::optional<SearchHit> evaluate(const Graph& g, const PredicateSpec& spec) {
    const int chi = chromatic_number(g, {.max_order = solver_hard_limit}).value;
    const int top = spec.max_k < 0 ? g.order() : std::min(spec.max_k, g.order());
    for (int k = chi + spec.gap; k <= top; ++k) {
        auto f = find_frozen(g, k, {.max_order = solver_hard_limit});
        if (!f) continue;
        if (!is_frozen_colouring(g, *f) || chromatic_number(g, {.max_order = solver_hard_limit}).value != chi)
            throw InternalCheckFailed("search hit failed re-verification");
        return SearchHit{encode_graph6(g), g.order(), chi, k, to_colour_line(*f)};
    }
    return std::nullopt;
}

namespace detail {

inline void sort_and_dedup(SearchReport& r) {
    std::sort(r.hits.begin(), r.hits.end(), [](const SearchHit& a, const SearchHit& b) {
        return a.order != b.order ? a.order < b.order : a.graph6 < b.graph6;
    });
    std::vector<SearchHit> kept;
    std::vector<Graph> kept_graphs;
    for (auto& h : r.hits) {
        Graph g = decode_graph6(h.graph6);
        bool dup = false;
        for (std::size_t i = 0; i < kept.size() && !dup; ++i)
            dup = kept[i].order == h.order && kept[i].chi == h.chi && kept[i].k == h.k &&
                  are_isomorphic(kept_graphs[i], g, solver_hard_limit).has_value();
        if (dup) {
            ++r.dedup_count;
            continue;
        }
        kept.push_back(std::move(h));
        kept_graphs.push_back(std::move(g));
    }
    r.hits = std::move(kept);
}

// Runs task(i) for i in [0, count) on `threads` workers.
inline void parallel_for(std::int64_t count, int threads, const std::function<void(std::int64_t)>& task) {
    threads = std::max(1, threads);
    if (threads == 1 || count < 2) {
        for (std::int64_t i = 0; i < count; ++i) task(i);
        return;
    }
    std::atomic<std::int64_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            try {
                for (std::int64_t i = next++; i < count; i = next++) task(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                next = count;
            }
        });
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

inline nlohmann::json hit_to_json(const SearchHit& h) {
    return {{"graph6", h.graph6}, {"n", h.order}, {"chi", h.chi}, {"k", h.k}, {"frozen", h.frozen}};
}

inline SearchHit hit_from_json(const nlohmann::json& j) {
    return {j.at("graph6").get<std::string>(), j.at("n").get<int>(), j.at("chi").get<int>(), j.at("k").get<int>(),
            j.at("frozen").get<std::string>()};
}

}  // namespace detail

struct ScanOptions {
    int threads = 1;
    /// Lines handled per batch; the checkpoint is rewritten after each batch.
    std::int64_t batch = 4096;
    std::string checkpoint;  // empty: no checkpointing
};

/// Scans a graph6 stream (one graph per line; blank lines and lines starting
/// with '>' are ignored). With a checkpoint file, a rerun resumes after the last
/// completed batch and keeps the hits found so far.
inline SearchReport scan_stream(std::istream& in, const PredicateSpec& spec, const ScanOptions& opt = {}) {
    validate(spec);
    const auto t0 = std::chrono::steady_clock::now();
    SearchReport r;
    std::int64_t skip = 0;
    if (!opt.checkpoint.empty()) {
        std::ifstream cp(opt.checkpoint);
        if (cp) {
            auto j = nlohmann::json::parse(cp);
            skip = j.at("lines_done").get<std::int64_t>();
            r.graphs_scanned = j.at("graphs_scanned").get<std::int64_t>();
            r.passed_filters = j.at("passed_filters").get<std::int64_t>();
            r.malformed = j.at("malformed").get<std::int64_t>();
            for (const auto& h : j.at("hits")) r.hits.push_back(detail::hit_from_json(h));
        }
    }
    std::int64_t line_no = 0;
    std::string line;
    while (line_no < skip && std::getline(in, line)) ++line_no;

    std::vector<std::string> batch;
    auto flush = [&] {
        std::vector<std::optional<Graph>> graphs(batch.size());
        std::vector<std::optional<SearchHit>> found(batch.size());
        std::vector<char> passed(batch.size(), 0);
        for (std::size_t i = 0; i < batch.size(); ++i) {
            try {
                graphs[i] = decode_graph6(batch[i]);
            } catch (const InvalidInput&) {
                ++r.malformed;
            }
        }
        detail::parallel_for(static_cast<std::int64_t>(batch.size()), opt.threads, [&](std::int64_t i) {
            if (!graphs[i] || !passes_filters(*graphs[i], spec)) return;
            passed[i] = 1;
            found[i] = evaluate(*graphs[i], spec);
        });
        for (std::size_t i = 0; i < batch.size(); ++i) {
            r.graphs_scanned += graphs[i].has_value();
            r.passed_filters += passed[i];
            if (found[i]) r.hits.push_back(*found[i]);
        }
        batch.clear();
        if (!opt.checkpoint.empty()) {
            nlohmann::json hits = nlohmann::json::array();
            for (const auto& h : r.hits) hits.push_back(detail::hit_to_json(h));
            nlohmann::json j{{"lines_done", line_no},
                             {"graphs_scanned", r.graphs_scanned},
                             {"passed_filters", r.passed_filters},
                             {"malformed", r.malformed},
                             {"hits", hits}};
            std::ofstream(opt.checkpoint) << j.dump() << '\n';
        }
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '>') continue;
        batch.push_back(line);
        if (static_cast<std::int64_t>(batch.size()) >= opt.batch) flush();
    }
    flush();
    detail::sort_and_dedup(r);
    r.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

inline constexpr int exhaustive_limit = 7;

/// Every labelled graph on 1..n_max vertices.
inline SearchReport exhaustive_small(int n_max, const PredicateSpec& spec, int threads = 1) {
    validate(spec);
    if (n_max > exhaustive_limit) throw LimitExceeded("exhaustive_small is capped at n = 7");
    const auto t0 = std::chrono::steady_clock::now();
    SearchReport r;
    std::mutex m;
    for (int n = 1; n <= n_max; ++n) {
        std::vector<Edge> slots;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
        const std::int64_t total = std::int64_t{1} << slots.size();
        std::atomic<std::int64_t> passed{0};
        detail::parallel_for(total, threads, [&](std::int64_t mask) {
            GraphBuilder b(n);
            for (std::size_t e = 0; e < slots.size(); ++e)
                if (mask >> e & 1) b.add_edge(slots[e].first, slots[e].second);
            Graph g = std::move(b).build();
            if (!passes_filters(g, spec)) return;
            ++passed;
            if (auto h = evaluate(g, spec)) {
                std::lock_guard lock(m);
                r.hits.push_back(*h);
            }
        });
        r.graphs_scanned += total;
        r.passed_filters += passed;
    }
    detail::sort_and_dedup(r);
    r.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

/// All k in chi+1..max_k with a frozen k-colouring, each with a witness.
inline std::vector<std::pair<int, BlockPartition>> frozen_gap_finder(const Graph& g, int max_k, const SolverOptions& opt = {}) {
    std::vector<std::pair<int, BlockPartition>> out;
    const int chi = chromatic_number(g, opt).value;
    for (int k = chi + 1; k <= std::min(max_k, g.order()); ++k)
        if (auto f = find_frozen(g, k, opt)) out.emplace_back(k, std::move(*f));
    return out;
}

/// Representatives up to isomorphism of the graphs on exactly 0..n_max vertices
/// avoiding `forbidden` as induced subgraphs. Forbidden-subgraph classes are
/// closed under vertex deletion, so extending every representative by one
/// vertex in all ways reaches every class member.
inline std::vector<std::vector<Graph>> free_graphs_up_to_iso(int n_max, const std::vector<Pattern>& forbidden) {
    if (n_max > 10) throw LimitExceeded("free_graphs_up_to_iso is capped at n = 10");
    std::vector<std::vector<Graph>> levels{{Graph{}}};
    for (int n = 1; n <= n_max; ++n) {
        std::map<std::vector<detail::VertexSignature>, std::vector<Graph>> buckets;
        std::vector<Graph> level;
        for (const auto& base : levels.back()) {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
                GraphBuilder b(n);
                for (auto [u, v] : base.edges()) b.add_edge(u, v);
                for (int u = 0; u < n - 1; ++u)
                    if (mask >> u & 1) b.add_edge(u, n - 1);
                Graph g = std::move(b).build();
                if (std::any_of(forbidden.begin(), forbidden.end(), [&](Pattern p) { return !is_free_of(g, p); })) continue;
                auto key = detail::signatures(g);
                std::sort(key.begin(), key.end());
                auto& bucket = buckets[key];
                if (std::any_of(bucket.begin(), bucket.end(), [&](const Graph& h) { return are_isomorphic(g, h).has_value(); }))
                    continue;
                bucket.push_back(g);
                level.push_back(std::move(g));
            }
        }
        levels.push_back(std::move(level));
    }
    return levels;
}

/// Runtime is left out unless asked for, so reports are reproducible byte for byte.
inline nlohmann::json search_report_to_json(const SearchReport& r, bool with_runtime = false) {
    nlohmann::json hits = nlohmann::json::array();
    for (const auto& h : r.hits) hits.push_back(detail::hit_to_json(h));
    nlohmann::json j{{"graphs_scanned", r.graphs_scanned},
                     {"passed_filters", r.passed_filters},
                     {"malformed", r.malformed},
                     {"hits", hits},
                     {"dedup_count", r.dedup_count}};
    if (with_runtime) j["runtime_seconds"] = r.runtime_seconds;
    return j;
}

}  // namespace frozencol
