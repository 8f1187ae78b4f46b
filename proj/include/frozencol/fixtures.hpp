#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "frozencol/families.hpp"
#include "frozencol/figures.hpp"
#include "frozencol/io.hpp"
#include "frozencol/tables.hpp"

namespace frozencol {

/// One panel of a drawn figure: the clique-partition-side graph with the
/// partition shown (left: a theta-partition, right: a frozen partition).
inline nlohmann::json figure_fixture_json(const FigureData& f, bool right) {
    Graph g = f.graph();
    BlockPartition p = right ? f.right_partition() : f.left_partition();
    nlohmann::json j{{"name", f.name},
                     {"panel", right ? "right" : "left"},
                     {"property", right ? "frozen-clique-partition" : "clique-partition"},
                     {"graph6", encode_graph6(g)},
                     {"graph", graph_to_json(g)},
                     {"colours", right ? f.right : f.left},
                     {"partition", partition_to_json(p)}};
    j["family"] = f.family ? nlohmann::json{{"name", to_string(f.family->first)}, {"param", f.family->second}} : nlohmann::json(nullptr);
    return j;
}

/// A parameter table as printed, the rows the construction gives, and the errata between them.
inline nlohmann::json table_fixture_json(const ParameterTable& t) {
    nlohmann::json printed = nlohmann::json::array();
    nlohmann::json built = nlohmann::json::array();
    for (const auto& r : t.rows) {
        printed.push_back(table_row_to_json(r));
        built.push_back(table_row_to_json(construction_row(t, r.q)));
    }
    nlohmann::json errata = nlohmann::json::array();
    for (const auto& e : table_errata())
        if (e.table == t.name)
            errata.push_back({{"q", e.q}, {"field", e.field}, {"printed", e.printed}, {"corrected", e.corrected}});
    return {{"name", t.name},
            {"family", to_string(t.family)},
            {"complement_side", t.complement_side},
            {"printed", printed},
            {"construction", built},
            {"errata", errata}};
}

/// Every fixture file as (path relative to the fixture root, content).
inline std::vector<std::pair<std::string, std::string>> fixture_files() {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& f : figures()) {
        out.emplace_back("figures/" + f.name + "_left.json", figure_fixture_json(f, false).dump(2) + "\n");
        out.emplace_back("figures/" + f.name + "_right.json", figure_fixture_json(f, true).dump(2) + "\n");
    }
    for (const auto& t : parameter_tables()) out.emplace_back("tables/" + t.name + ".json", table_fixture_json(t).dump(2) + "\n");
    return out;
}

}  // namespace frozencol
