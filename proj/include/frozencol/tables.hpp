#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "frozencol/families.hpp"

namespace frozencol {

/// One printed row of a parameter table. `value` is theta (= alpha) for the
/// clique-partition side and chi (= omega) for the colouring side.
struct TableRow {
    int q = 0;
    int order = 0;
    int min_degree = 0;
    int max_degree = 0;
    int edges = 0;
    int value = 0;
    int frozen = 0;
    int gap = 0;
};

struct ParameterTable {
    std::string name;
    Family family;
    bool complement_side;  // rows describe the clique-partition side graph
    std::vector<TableRow> rows;
};

/// A printed entry that disagrees with the construction, and the value the construction gives.
struct TableErratum {
    std::string table;
    int q;
    std::string field;
    int printed;
    int corrected;
};

inline const std::vector<ParameterTable>& parameter_tables() {
    static const std::vector<ParameterTable> tables{
        {"me_complement",
         Family::ME,
         true,
         {{2, 10, 2, 3, 14, 4, 5, 1},
          {3, 14, 2, 3, 20, 6, 7, 1},
          {4, 18, 2, 3, 26, 7, 9, 2},
          {5, 22, 2, 3, 32, 9, 11, 2},
          {6, 26, 2, 3, 38, 10, 13, 3},
          {7, 30, 2, 3, 44, 12, 15, 3},
          {8, 34, 2, 3, 48, 13, 17, 4}}},
        {"me",
         Family::ME,
         false,
         {{2, 10, 6, 7, 31, 4, 5, 1},
          {3, 14, 10, 11, 71, 6, 7, 1},
          {4, 18, 14, 15, 127, 7, 9, 2},
          {5, 22, 18, 19, 199, 9, 11, 2},
          {6, 26, 22, 23, 287, 10, 13, 3},
          {7, 30, 26, 27, 391, 12, 15, 3},
          {8, 34, 30, 31, 511, 13, 17, 4}}},
        {"km",
         Family::KM,
         false,
         {{2, 10, 6, 7, 32, 4, 5, 1},
          {3, 14, 10, 12, 63, 6, 7, 1},
          {4, 18, 14, 16, 130, 8, 9, 1},
          {5, 22, 18, 20, 203, 10, 11, 1},
          {6, 26, 22, 24, 292, 12, 13, 1},
          {7, 30, 26, 28, 397, 14, 15, 1},
          {8, 36, 30, 32, 518, 16, 17, 1}}},
        {"ke",
         Family::KE,
         false,
         {{1, 6, 2, 2, 6, 2, 3, 1},
          {2, 12, 8, 8, 48, 4, 6, 2},
          {3, 18, 14, 14, 126, 6, 9, 3},
          {4, 24, 20, 20, 240, 8, 12, 4},
          {5, 30, 26, 26, 390, 10, 15, 5},
          {6, 36, 32, 32, 576, 12, 18, 6},
          {7, 42, 38, 38, 798, 14, 21, 7},
          {8, 48, 44, 44, 1036, 16, 24, 8}}},
    };
    return tables;
}

inline const std::vector<TableErratum>& table_errata() {
    static const std::vector<TableErratum> errata{
        {"me_complement", 8, "edges", 48, 50},
        {"km", 3, "edges", 63, 73},
        {"km", 8, "n", 36, 34},
        {"ke", 8, "edges", 1036, 1056},
    };
    return errata;
}

/// The row as the construction produces it: order, degrees and edge count are
/// measured on the built graph (or its complement); value, frozen and gap come
/// from the certificates attached to the instance.
inline TableRow construction_row(const ParameterTable& table, int q) {
    FamilyInstance f = build_family(table.family, q);
    Graph g = table.complement_side ? f.graph : complement(f.graph);
    TableRow r;
    r.q = q;
    r.order = g.order();
    r.min_degree = g.order();
    for (int v = 0; v < g.order(); ++v) {
        r.min_degree = std::min(r.min_degree, g.degree(v));
        r.max_degree = std::max(r.max_degree, g.degree(v));
    }
    r.edges = g.edge_count();
    r.value = f.canonical.nonempty_count();
    r.frozen = f.frozen ? f.frozen->block_count() : 0;
    r.gap = r.frozen - r.value;
    return r;
}

inline nlohmann::json table_row_to_json(const TableRow& r) {
    return {{"q", r.q},           {"n", r.order}, {"min_degree", r.min_degree}, {"max_degree", r.max_degree},
            {"edges", r.edges},   {"value", r.value}, {"frozen", r.frozen},    {"gap", r.gap}};
}

}  // namespace frozencol
