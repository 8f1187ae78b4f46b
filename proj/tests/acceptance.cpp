// Acceptance run: one PASS/FAIL line per criterion, with runtime and a short
// summary. Exits 1 when any criterion fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "frozencol/frozencol.hpp"
#include "oracles.hpp"

using namespace frozencol;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

// Records the first few failures; everything after that is only counted.
struct Failures {
    int count = 0;
    std::ostringstream first;
    void add(const std::string& what) {
        if (count++ < 3) first << (count > 1 ? "; " : "") << what;
    }
    Outcome outcome(const std::string& summary) const {
        if (count == 0) return {true, summary};
        return {false, std::to_string(count) + " failure(s): " + first.str()};
    }
};

int failed = 0;

void run(int id, const std::string& name, double budget_s, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget_s > 0 && s > budget_s) {
        o.ok = false;
        o.detail += " (over the " + std::to_string(static_cast<int>(budget_s)) + " s budget)";
    }
    if (!o.ok) ++failed;
    std::printf("%s %2d %-28s %8.2f s  %s\n", o.ok ? "PASS" : "FAIL", id, name.c_str(), s, o.detail.c_str());
    std::fflush(stdout);
}

// Colour classes relabelled by first appearance.
std::vector<int> normalised(const std::vector<int>& c) {
    std::map<int, int> seen;
    std::vector<int> out;
    for (int x : c) out.push_back(seen.emplace(x, static_cast<int>(seen.size())).first->second);
    return out;
}

// Random proper colouring: random order, uniform choice among free colours, restart when stuck.
std::vector<int> random_colouring(const Graph& g, int ell, std::mt19937_64& rng) {
    const int n = g.order();
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    while (true) {
        std::shuffle(order.begin(), order.end(), rng);
        std::vector<int> c(n, -1);
        bool stuck = false;
        for (int v : order) {
            std::vector<int> free;
            for (int a = 0; a < ell; ++a) {
                bool used = false;
                for (int w : g.neighbours(v))
                    if (c[w] == a) used = true;
                if (!used) free.push_back(a);
            }
            if (free.empty()) {
                stuck = true;
                break;
            }
            c[v] = free[std::uniform_int_distribution<std::size_t>(0, free.size() - 1)(rng)];
        }
        if (!stuck) return c;
    }
}

// 3-chromatic 2K2-free graph grown one vertex at a time inside the class.
Graph grow_2k2_free(int n, std::mt19937_64& rng) {
    while (true) {
        Graph g = empty_graph(0);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        while (g.order() < n) {
            const double p = 0.2 + 0.6 * unit(rng);
            bool added = false;
            for (int attempt = 0; attempt < 200 && !added; ++attempt) {
                GraphBuilder b(g, 1);
                for (int v = 0; v < g.order(); ++v)
                    if (unit(rng) < p) b.add_edge(v, g.order());
                Graph h = std::move(b).build();
                if (is_free_of(h, Pattern::TwoK2) && chromatic_number(h).value <= 3) {
                    g = std::move(h);
                    added = true;
                }
            }
            if (!added) break;
        }
        if (g.order() == n && chromatic_number(g).value == 3) return g;
    }
}

std::string fmt(const char* f, long long a, long long b = 0, long long c = 0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

}  // namespace

int main() {
    run(1, "family tables", 10, [] {
        Failures f;
        for (int q = 2; q <= 8; ++q) {
            auto me = me_complement(q);
            const Graph& g = me.graph;
            if (g.order() != 4 * q + 2) f.add("q=" + std::to_string(q) + " order");
            if (g.edge_count() != 6 * q + 2) f.add("q=" + std::to_string(q) + " edges");
            if (!me.frozen || me.frozen->nonempty_count() != 2 * q + 1 || !is_clique_partition(g, *me.frozen) ||
                !is_frozen_clique_partition(g, *me.frozen))
                f.add("q=" + std::to_string(q) + " frozen partition");
            if (q <= 4) {
                const int want = q % 2 == 0 ? (3 * q + 2) / 2 : (3 * q + 3) / 2;
                auto th = clique_cover_number(g);
                auto al = independence_number(g);
                if (th.value != want || al.value != want) f.add("q=" + std::to_string(q) + " theta/alpha");
                if (!is_clique_partition(g, th.witness) || !is_independent(g, al.witness)) f.add("witness");
            }
        }
        return f.outcome("q=2..8 sizes and frozen partitions, theta=alpha exact for q<=4");
    });

    run(2, "freeness", 5, [] {
        Failures f;
        auto square_free = [&](const FamilyInstance& inst, const std::string& tag) {
            if (find_induced(inst.graph, Pattern::C4)) f.add(tag + " has C4");
            if (find_induced(complement(inst.graph), Pattern::TwoK2)) f.add(tag + " complement has 2K2");
        };
        for (int q = 2; q <= 8; ++q) square_free(me_complement(q), "ME" + std::to_string(q));
        for (int q = 3; q <= 8; ++q) square_free(me_star_complement(q), "ME*" + std::to_string(q));
        for (int q = 2; q <= 8; ++q) square_free(km_complement(q), "KM" + std::to_string(q));
        for (int q = 2; q <= 8; ++q) square_free(ke_complement(q), "KE" + std::to_string(q));
        for (int t = 4; t <= 8; ++t) square_free(chain_complement(t), "chain" + std::to_string(t));
        for (int t = 3; t <= 6; ++t) square_free(h_t_complement(t), "H" + std::to_string(t));
        auto s2 = me_star_complement(2);
        auto w = find_induced(complement(s2.graph), Pattern::TwoK2);
        std::vector<int> want;
        for (const char* l : {"u0", "u1", "u2", "u3"}) want.push_back(s2.graph.find_label(l));
        std::sort(want.begin(), want.end());
        if (!w || w->members() != want) f.add("ME*2 2K2 witness");
        return f.outcome("all families square-free; ME*2 2K2 on u0..u3");
    });

    run(3, "figure fixtures", 0, [] {
        Failures f;
        const std::vector<std::pair<int, int>> stated{{4, 5}, {6, 7}, {4, 5}, {6, 7}, {4, 6}, {6, 9},
                                                      {5, 6}, {7, 8}, {4, 5}, {5, 7}, {7, 8}};
        const auto& figs = figures();
        if (figs.size() != stated.size()) f.add("figure count");
        for (std::size_t i = 0; i < figs.size() && i < stated.size(); ++i) {
            for (bool right : {false, true}) {
                const auto path = std::string(FROZENCOL_SOURCE_DIR) + "/fixtures/figures/" + figs[i].name +
                                  (right ? "_right.json" : "_left.json");
                std::ifstream file(path);
                if (!file) {
                    f.add("missing " + path);
                    continue;
                }
                auto j = nlohmann::json::parse(file);
                Graph g = decode_graph6(j["graph6"].get<std::string>());
                auto p = partition_from_json(j["partition"], g.order());
                const int want = right ? stated[i].second : stated[i].first;
                const bool ok = p.nonempty_count() == want && is_clique_partition(g, p) &&
                                (!right || is_frozen_clique_partition(g, p));
                if (!ok) f.add(figs[i].name + (right ? " right" : " left"));
            }
        }
        return f.outcome(std::to_string(figs.size()) + " figures, both panels");
    });

    run(4, "KE gaps", 0, [] {
        Failures f;
        for (int q = 1; q <= 5; ++q) {
            auto ke = ke_complement(q);
            Graph g = complement(ke.graph);
            auto chi = chromatic_number(g);
            if (chi.value != 2 * q || !is_proper_colouring(g, chi.witness)) f.add("q=" + std::to_string(q) + " chi");
            if (!ke.frozen || ke.frozen->nonempty_count() != 3 * q || !is_proper_colouring(g, *ke.frozen) ||
                !is_frozen_colouring(g, *ke.frozen))
                f.add("q=" + std::to_string(q) + " frozen");
        }
        return f.outcome("q=1..5: chi=2q, frozen 3q-colouring");
    });

    run(5, "transform chain", 60, [] {
        Failures f;
        for (int t = 4; t <= 8; ++t) {
            Graph g;
            BlockPartition fr;
            if (t == 4) {
                auto base = me_complement(2);
                g = base.graph;
                fr = *base.frozen;
            } else {
                auto r = chain_by_subdivision(t);
                g = r.graph_out;
                fr = r.f_out;
            }
            auto th = clique_cover_number(g);
            if (th.value != t || !is_clique_partition(g, th.witness)) f.add("t=" + std::to_string(t) + " theta");
            if (fr.nonempty_count() != t + 1 || !is_frozen_clique_partition(g, fr)) f.add("t=" + std::to_string(t) + " frozen");
            if (find_induced(g, Pattern::C4)) f.add("t=" + std::to_string(t) + " C4");
        }
        return f.outcome("t=4..8: theta=t, frozen (t+1)-partition, C4-free");
    });

    run(6, "isomorphism", 0, [] {
        Graph a = h_t_complement(3).graph;
        Graph b = km_complement(2).graph;
        auto iso = are_isomorphic(a, b);
        if (!iso) return Outcome{false, "no bijection found"};
        if (!is_isomorphism(a, b, *iso)) return Outcome{false, "bijection does not verify"};
        return Outcome{true, "H3-complement ~ KM2-complement, bijection verified"};
    });

    run(7, "reconfiguration", 120, [] {
        Failures f;
        auto k3 = reconfiguration_components(complete_graph(3), 3);
        if (k3.component_count != 6 || k3.frozen_colourings.size() != 6) f.add("K3");
        auto c6 = reconfiguration_components(cycle_graph(6), 3);
        if (c6.frozen_colourings.empty()) f.add("C6");
        auto c5 = reconfiguration_components(cycle_graph(5), 3);
        if (!c5.frozen_colourings.empty()) f.add("C5");
        const auto& fig = figure("me2");
        Graph me2 = complement(fig.graph());
        auto r = reconfiguration_components(me2, 5);
        const auto want = normalised(fig.right_partition().colours());
        bool found = false;
        for (const auto& p : r.frozen_colourings) found = found || normalised(p.colours()) == want;
        if (!found) f.add("ME2 figure colouring not isolated in R_5");
        return f.outcome(fmt("K3: 6 frozen; C6: %lld isolated; C5: none; ME2: %lld colourings, figure colouring isolated",
                             static_cast<long long>(c6.frozen_colourings.size()), r.colouring_count));
    });

    run(8, "recolouring bounds", 900, [] {
        Failures f;
        std::vector<Graph> graphs;
        auto levels = free_graphs_up_to_iso(8, {Pattern::TwoK2});
        int exhaustive = 0;
        for (const auto& level : levels)
            for (const auto& g : level)
                if (chromatic_number(g).value == 3) {
                    graphs.push_back(g);
                    ++exhaustive;
                }
        std::mt19937_64 grow(20240);
        for (int i = 0; i < 500; ++i) graphs.push_back(grow_2k2_free(8 + i % 5, grow));

        std::mt19937_64 rng(8);
        long long paths = 0;
        int worst_vertex = 0;
        long long worst_ratio_num = 0, worst_ratio_den = 1;
        for (const auto& g : graphs) {
            const int n = g.order();
            for (int ell = 4; ell <= 5; ++ell)
                for (int pair = 0; pair < 20; ++pair) {
                    auto b = BlockPartition::from_colours(random_colouring(g, ell, rng), ell);
                    auto c = BlockPartition::from_colours(random_colouring(g, ell, rng), ell);
                    auto seq = path_between(g, b, c, ell);
                    auto s = verify_moves(g, seq);
                    ++paths;
                    worst_vertex = std::max(worst_vertex, s.max_per_vertex);
                    if (s.total * worst_ratio_den > worst_ratio_num * n) {
                        worst_ratio_num = s.total;
                        worst_ratio_den = n;
                    }
                    if (!s.valid || s.final_colours != c.colours()) f.add(encode_graph6(g) + " path does not verify");
                    else if (s.max_per_vertex > 14 || s.total > 14LL * n) f.add(encode_graph6(g) + " bound exceeded");
                }
        }

        // Bipartite 2K2-free graphs: two canonical legs and a rename.
        int bip = 0, worst_bip = 0;
        for (const auto& level : levels)
            for (const auto& g : level) {
                if (g.edge_count() == 0 || chromatic_number(g).value != 2) continue;
                ++bip;
                for (int ell = 3; ell <= 4; ++ell)
                    for (int pair = 0; pair < 20; ++pair) {
                        auto b = BlockPartition::from_colours(random_colouring(g, ell, rng), ell);
                        auto c = BlockPartition::from_colours(random_colouring(g, ell, rng), ell);
                        auto s = verify_moves(g, path_between(g, b, c, ell));
                        worst_bip = std::max(worst_bip, s.max_per_vertex);
                        if (!s.valid || s.final_colours != c.colours() || s.max_per_vertex > 4)
                            f.add(encode_graph6(g) + " bipartite");
                    }
            }

        // Renaming between canonical colourings: the three parts under two random colour assignments.
        int worst_rename = 0;
        for (const auto& g : graphs) {
            auto ctx = maximal_first_partition(g, 3);
            for (int ell = 4; ell <= 5; ++ell) {
                std::vector<int> perm(ell), other(ell);
                for (int a = 0; a < ell; ++a) perm[a] = other[a] = a;
                std::shuffle(perm.begin(), perm.end(), rng);
                std::shuffle(other.begin(), other.end(), rng);
                std::vector<int> base(g.order()), renamed(g.order());
                for (int j = 0; j < 3; ++j)
                    for (int v : ctx.parts[j]) {
                        base[v] = perm[j];
                        renamed[v] = other[j];
                    }
                auto seq = rename_moves(g, BlockPartition::from_colours(base, ell), BlockPartition::from_colours(renamed, ell), ell);
                auto s = verify_moves(g, seq);
                worst_rename = std::max(worst_rename, s.max_per_vertex);
                if (!s.valid || s.final_colours != renamed || s.max_per_vertex > 2) f.add(encode_graph6(g) + " rename");
            }
        }
        char ratio[32];
        std::snprintf(ratio, sizeof ratio, "%.2f", static_cast<double>(worst_ratio_num) / static_cast<double>(worst_ratio_den));
        return f.outcome(std::to_string(exhaustive) + " exhaustive + 500 sampled graphs, " + std::to_string(paths) +
                         " paths; worst per-vertex " + std::to_string(worst_vertex) + ", worst total/n " + ratio +
                         "; bipartite " + std::to_string(bip) + " graphs worst " + std::to_string(worst_bip) +
                         "; rename worst " + std::to_string(worst_rename));
    });

    run(9, "frozen iff isolated", 0, [] {
        Failures f;
        long long checked = 0, frozen = 0;
        // Order 0 is left out: its one colouring is isolated but has only empty classes.
        auto levels = free_graphs_up_to_iso(6, {});
        for (std::size_t n = 1; n < levels.size(); ++n)
            for (const auto& g : levels[n])
                for (int k = 1; k <= 4; ++k) {
                    auto r = reconfiguration_components(g, k);
                    std::set<std::vector<int>> isolated;
                    for (const auto& p : r.frozen_colourings) isolated.insert(p.colours());
                    for (const auto& c : oracle::all_colourings(g, k)) {
                        ++checked;
                        const bool deg0 = oracle::reconfig_degree(g, c, k) == 0;
                        const bool fz = is_frozen_colouring(g, BlockPartition::from_colours(c, k));
                        frozen += fz;
                        if (deg0 != fz || isolated.count(c) != static_cast<std::size_t>(deg0))
                            f.add(encode_graph6(g) + " k=" + std::to_string(k));
                    }
                }
        return f.outcome(fmt("%lld colourings over all graphs 1<=n<=6, k<=4; %lld frozen; zero mismatches", checked, frozen));
    });

    run(10, "search replication", 0, [] {
        Failures f;
        PredicateSpec spec;
        spec.require_2k2_free = true;
        auto ex = exhaustive_small(6, spec);
        if (!ex.hits.empty()) f.add("exhaustive n<=6 has hits");
        std::istringstream in(encode_graph6(complement(me_complement(2).graph)) + "\n" +
                              encode_graph6(complement(km_complement(2).graph)) + "\n");
        auto r = scan_stream(in, spec, ScanOptions{});
        if (r.hits.size() != 2) f.add("stream hits " + std::to_string(r.hits.size()));
        for (const auto& h : r.hits) {
            Graph g = decode_graph6(h.graph6);
            auto p = parse_colour_line(h.frozen, h.k);
            if (h.chi != 4 || h.k != 5 || chromatic_number(g).value != 4 || !is_frozen_colouring(g, p)) f.add("hit " + h.graph6);
        }
        return f.outcome(fmt("exhaustive n<=6: %lld graphs, 0 hits; ME2/KM2 stream: 2 hits, chi 4, frozen 5", ex.graphs_scanned));
    });

    run(11, "duality", 0, [] {
        Failures f;
        std::mt19937_64 rng(11);
        std::uniform_int_distribution<int> order(1, 10);
        std::uniform_real_distribution<double> dens(0.1, 0.9);
        for (int i = 0; i < 1000; ++i) {
            Graph g = oracle::random_graph(order(rng), dens(rng), rng);
            Graph h = complement(g);
            auto chi = chromatic_number(g);
            auto th = clique_cover_number(h);
            auto al = independence_number(g);
            auto om = clique_number(h);
            if (chi.value != th.value || al.value != om.value) f.add(encode_graph6(g) + " values");
            if (!is_proper_colouring(g, chi.witness) || chi.witness.nonempty_count() > chi.value ||
                !is_clique_partition(h, th.witness) || th.witness.nonempty_count() > th.value ||
                !is_independent(g, al.witness) || al.witness.size() != al.value || !is_clique(h, om.witness) ||
                om.witness.size() != om.value)
                f.add(encode_graph6(g) + " witness");
        }
        return f.outcome("1000 random graphs n<=10: chi(G)=theta(co-G), alpha(G)=omega(co-G)");
    });

    return failed == 0 ? 0 : 1;
}
