// Builds ME_2, checks its frozen 5-colouring, grows it by one colour with the
// non-edge expansion, and finds a short recolouring path on C5.

#include <iostream>

#include "frozencol/frozencol.hpp"

using namespace frozencol;

int main() {
    auto me = me_complement(2);
    Graph g = complement(me.graph);
    std::cout << "ME_2: n=" << g.order() << " chi=" << chromatic_number(g).value
              << " 2K2-free=" << is_free_of(g, Pattern::TwoK2) << '\n';
    std::cout << "frozen 5-colouring " << to_colour_line(*me.frozen) << " checks: " << is_frozen_colouring(g, *me.frozen) << '\n';

    // Grow to a 5-chromatic graph with a frozen 6-colouring. Not every non-edge qualifies.
    auto beta = chromatic_number(g).witness;
    auto expand_somewhere = [&] {
        for (int x = 0; x < g.order(); ++x)
            for (int y = x + 1; y < g.order(); ++y) {
                if (g.adjacent(x, y) || beta.block_of(x) == beta.block_of(y)) continue;
                try {
                    auto r = expand_nonedge(g, x, y, beta, *me.frozen);
                    std::cout << "expanded at " << x << "," << y << ": n=" << r.graph_out.order()
                              << " chi=" << chromatic_number(r.graph_out).value << " frozen " << r.f_out.nonempty_count()
                              << "-colouring " << to_colour_line(r.f_out) << '\n';
                    return;
                } catch (const PreconditionFailed&) {
                }
            }
    };
    expand_somewhere();

    Graph c5 = cycle_graph(5);
    auto from = parse_colour_line("1 2 1 2 3", 4);
    auto to = parse_colour_line("2 3 4 1 3", 4);
    auto seq = path_between(c5, from, to, 4);
    auto stats = verify_moves(c5, seq);
    std::cout << "C5 path: " << stats.total << " moves, at most " << stats.max_per_vertex
              << " per vertex, valid=" << stats.valid << '\n';
    std::cout << moves_to_json(c5, seq).dump() << '\n';
}
