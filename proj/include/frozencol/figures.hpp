#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frozencol/families.hpp"
#include "frozencol/graph.hpp"
#include "frozencol/partition.hpp"

namespace frozencol {

/// A drawn graph with its two labelled panels: a small clique partition on
/// the left and a frozen clique partition on the right. Vertex ids follow
/// the drawing clockwise from the top; colour lines are 1-based clique numbers.
struct FigureData {
    std::string name;
    int order;
    std::vector<Edge> edges;
    std::string left;
    std::string right;
    int left_blocks;
    int right_blocks;
    /// The family member the drawing depicts, when there is one.
    std::optional<std::pair<Family, int>> family;

    Graph graph() const { return graph_from_edges(order, edges); }
    BlockPartition left_partition() const { return parse_colour_line(left, left_blocks); }
    BlockPartition right_partition() const { return parse_colour_line(right, right_blocks); }
};

namespace detail {

inline std::vector<Edge> ring(int n, bool closed, std::vector<Edge> chords) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    if (closed) e.emplace_back(n - 1, 0);
    e.insert(e.end(), chords.begin(), chords.end());
    return e;
}

}  // namespace detail

inline const std::vector<FigureData>& figures() {
    using detail::ring;
    static const std::vector<FigureData> data{
        {"me2", 10, ring(10, true, {{0, 2}, {1, 7}, {3, 5}, {4, 8}}),
         "2 2 2 1 1 1 4 4 3 3", "4 2 3 3 1 5 5 2 1 4", 4, 5, std::pair{Family::ME, 2}},
        {"me3", 14, ring(14, true, {{0, 9}, {1, 13}, {2, 4}, {3, 10}, {5, 7}, {6, 11}}),
         "3 3 2 2 2 1 1 1 6 5 5 4 4 3", "3 5 5 2 4 4 1 7 7 3 2 1 6 6", 6, 7, std::pair{Family::ME, 3}},
        {"km2", 10, ring(10, false, {{0, 6}, {2, 4}, {3, 9}, {5, 7}}),
         "3 3 2 2 2 1 1 1 4 4", "1 4 4 2 3 3 1 5 5 2", 4, 5, std::pair{Family::KM, 2}},
        {"km3", 14, ring(13, false, {{0, 9}, {2, 4}, {3, 12}, {8, 10}, {5, 7}, {6, 13}}),
         "4 4 3 3 3 2 2 2 1 1 1 6 6 5", "1 6 6 3 5 5 2 4 4 1 7 7 3 2", 6, 7, std::pair{Family::KM, 3}},
        {"ke2", 12, ring(12, true, {{0, 6}, {1, 11}, {2, 4}, {3, 9}, {5, 7}, {8, 10}}),
         "3 3 2 2 2 1 1 1 4 4 4 3", "1 4 4 2 3 3 1 6 6 2 5 5", 4, 6, std::pair{Family::KE, 2}},
        {"ke3", 18,
         ring(18, true, {{0, 9}, {1, 17}, {2, 4}, {3, 12}, {5, 7}, {6, 15}, {8, 10}, {11, 13}, {14, 16}}),
         "4 4 3 3 3 2 2 2 1 1 1 6 6 6 5 5 5 4", "1 6 6 3 5 5 2 4 4 1 9 9 3 8 8 2 7 7", 6, 9, std::pair{Family::KE, 3}},
        {"chain5", 12, ring(12, true, {{0, 2}, {1, 7}, {3, 5}, {4, 10}}),
         "2 2 2 1 1 1 5 5 4 4 3 3", "4 2 3 3 1 6 6 2 5 5 1 4", 5, 6, std::pair{Family::CHAIN, 5}},
        {"chain7", 16, ring(16, true, {{0, 2}, {1, 7}, {3, 5}, {4, 14}}),
         "2 2 2 1 1 1 7 7 6 6 5 5 4 4 3 3", "4 2 3 3 1 8 8 2 7 7 6 6 5 5 1 4", 7, 8, std::pair{Family::CHAIN, 7}},
        {"h3", 10,
         {{0, 2}, {0, 1}, {0, 6}, {2, 1}, {1, 8}, {8, 9}, {2, 4}, {3, 7}, {6, 7}, {5, 3}, {3, 4}, {4, 5}, {9, 5}},
         "1 1 1 2 2 2 3 3 4 4", "1 2 3 4 3 5 1 4 2 5", 4, 5, std::pair{Family::H, 3}},
        {"h4", 14,
         {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 13}, {2, 3}, {2, 5}, {3, 6}, {4, 7},
          {5, 8}, {6, 9}, {7, 12}, {8, 10}, {9, 11}, {10, 11}, {10, 12}, {10, 13}, {11, 12}, {11, 13}, {12, 13}},
         "1 1 1 1 3 4 5 3 4 5 2 2 2 2", "1 4 2 3 1 2 3 5 6 7 6 7 5 4", 5, 7, std::pair{Family::H, 4}},
        {"fm16", 16,
         {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {6, 7}, {7, 8}, {8, 9}, {9, 10}, {10, 11}, {11, 12}, {12, 13},
          {13, 14}, {14, 15}, {15, 0}, {0, 2}, {1, 6}, {4, 9}, {8, 10}, {11, 13}, {5, 12}},
         "3 3 3 7 7 6 1 1 4 4 4 2 2 2 5 5", "5 3 8 8 6 7 3 1 1 6 4 4 7 2 2 5", 7, 8, std::nullopt},
    };
    return data;
}

inline const FigureData& figure(const std::string& name) {
    for (const auto& f : figures())
        if (f.name == name) return f;
    throw InvalidInput("unknown figure: " + name);
}

}  // namespace frozencol
