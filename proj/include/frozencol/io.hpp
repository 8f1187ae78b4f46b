#pragma once

#include <istream>
#include <sstream>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "frozencol/graph.hpp"

namespace frozencol {

// ---------------------------------------------------------------------------
// graph6: N(n) followed by the upper triangle in column order (x(0,1), x(0,2),
// x(1,2), x(0,3), ...), packed six bits per byte, each byte offset by 63.
// ---------------------------------------------------------------------------

inline std::string encode_graph6(const Graph& g) {
    const long n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
    int acc = 0;
    int bits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                bits = 0;
            }
        }
    if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
    return out;
}

inline Graph decode_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
    if (text.empty()) throw InvalidInput("graph6: empty line");
    for (char c : text)
        if (c < 63 || c > 126) throw InvalidInput("graph6: byte outside 63..126");
    auto val = [&](std::size_t i) { return static_cast<long>(text[i]) - 63; };
    long n = 0;
    std::size_t pos = 0;
    if (val(0) < 63) {
        n = val(0);
        pos = 1;
    } else if (text.size() >= 4 && val(1) < 63) {
        n = (val(1) << 12) | (val(2) << 6) | val(3);
        pos = 4;
    } else if (text.size() >= 8) {
        for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | val(i);
        pos = 8;
    } else {
        throw InvalidInput("graph6: truncated size header");
    }
    const long pairs = n * (n - 1) / 2;
    const std::size_t need = static_cast<std::size_t>((pairs + 5) / 6);
    if (text.size() - pos != need)
        throw InvalidInput("graph6: expected " + std::to_string(need) + " data bytes, found " + std::to_string(text.size() - pos));
    GraphBuilder b(static_cast<int>(n));
    long k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            long byte = val(pos + static_cast<std::size_t>(k / 6));
            if ((byte >> (5 - k % 6)) & 1) b.add_edge(i, j);
        }
    if (pairs % 6 != 0) {
        long last = val(text.size() - 1);
        if (last & ((1L << (6 - pairs % 6)) - 1)) throw InvalidInput("graph6: non-zero padding bits");
    }
    return std::move(b).build();
}

// ---------------------------------------------------------------------------
// DIMACS .col: "c" comments, "p edge n m", "e u v" with 1-based vertices.
// ---------------------------------------------------------------------------

inline std::string write_dimacs(const Graph& g) {
    std::ostringstream os;
    os << "p edge " << g.order() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) os << "e " << u + 1 << ' ' << v + 1 << '\n';
    return os.str();
}

inline Graph read_dimacs(std::istream& in) {
    std::string line;
    int n = -1;
    std::vector<Edge> edges;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag == "c") continue;
        if (tag == "p") {
            std::string kind;
            long m = 0;
            if (!(ls >> kind >> n >> m) || n < 0) throw InvalidInput("DIMACS: bad problem line " + std::to_string(line_no));
        } else if (tag == "e") {
            int u = 0;
            int v = 0;
            if (n < 0) throw InvalidInput("DIMACS: edge before problem line");
            if (!(ls >> u >> v)) throw InvalidInput("DIMACS: bad edge line " + std::to_string(line_no));
            edges.emplace_back(u - 1, v - 1);
        } else {
            throw InvalidInput("DIMACS: unknown line tag '" + tag + "'");
        }
    }
    if (n < 0) throw InvalidInput("DIMACS: missing problem line");
    return graph_from_edges(n, edges);
}

inline Graph read_dimacs(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read_dimacs(in);
}

// ---------------------------------------------------------------------------
// JSON edge list: {"n": .., "edges": [[u, v], ...], "labels": [...]}
// ---------------------------------------------------------------------------

inline nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.order();
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    if (g.has_labels()) j["labels"] = g.labels();
    return j;
}

inline Graph graph_from_json(const nlohmann::json& j) {
    try {
        int n = j.at("n").get<int>();
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        std::vector<std::string> labels;
        if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
        return graph_from_edges(n, edges, std::move(labels));
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("graph JSON: ") + e.what());
    }
}

}  // namespace frozencol
