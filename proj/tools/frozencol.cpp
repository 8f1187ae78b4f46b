// Command-line front end. Exit status: 0 success, 1 a checked property or
// certificate is false, 2 usage or input error (including exceeded caps).

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "frozencol/frozencol.hpp"

namespace fs = std::filesystem;
using namespace frozencol;
using nlohmann::json;

namespace {

struct VerificationFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GraphInput {
    std::string graph6;
    std::string path;
    std::string format;  // graph6, dimacs, json; empty: by extension
};

void add_graph_options(CLI::App* app, GraphInput& in) {
    app->add_option("--graph6", in.graph6, "Graph as a graph6 string");
    app->add_option("-i,--input", in.path, "Graph file ('-' for stdin)");
    app->add_option("--format", in.format, "Input format")->check(CLI::IsMember({"graph6", "dimacs", "json"}));
}

std::string read_all(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream f(path);
    if (!f) throw InvalidInput("cannot read " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

// A graph plus, for JSON fixtures, the partition stored with it.
struct Loaded {
    Graph graph;
    std::optional<json> partition;
};

Loaded load_graph(const GraphInput& in) {
    if (!in.graph6.empty()) return {decode_graph6(in.graph6), std::nullopt};
    if (in.path.empty()) throw InvalidInput("give --graph6 or --input");
    std::string format = in.format;
    if (format.empty()) {
        auto ext = fs::path(in.path).extension().string();
        format = ext == ".json" ? "json" : (ext == ".col" || ext == ".dimacs") ? "dimacs" : "graph6";
    }
    const std::string text = read_all(in.path);
    if (format == "dimacs") return {read_dimacs(text), std::nullopt};
    if (format == "graph6") {
        std::istringstream is(text);
        std::string line;
        while (std::getline(is, line))
            if (!line.empty() && line[0] != '>') return {decode_graph6(line), std::nullopt};
        throw InvalidInput("no graph in input");
    }
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("JSON input: ") + e.what());
    }
    Loaded out;
    if (j.contains("graph")) out.graph = graph_from_json(j["graph"]);
    else if (j.contains("graph6")) out.graph = decode_graph6(j["graph6"].get<std::string>());
    else out.graph = graph_from_json(j);
    if (j.contains("partition")) out.partition = j["partition"];
    return out;
}

BlockPartition load_partition(const std::string& path, const std::string& colours, const Loaded& g, int k = -1) {
    if (!colours.empty()) return parse_colour_line(colours, k);
    if (!path.empty()) {
        json j;
        try {
            j = json::parse(read_all(path));
        } catch (const json::exception& e) {
            throw InvalidInput(std::string("partition JSON: ") + e.what());
        }
        if (j.contains("partition")) j = j["partition"];
        return partition_from_json(j, g.graph.order());
    }
    if (g.partition) return partition_from_json(*g.partition, g.graph.order());
    throw InvalidInput("no partition given");
}

void emit(const json& j, const std::string& out) {
    if (out.empty() || out == "-") {
        std::cout << j.dump(2) << '\n';
        return;
    }
    std::ofstream f(out);
    if (!f) throw InvalidInput("cannot write " + out);
    f << j.dump(2) << '\n';
}

std::vector<std::pair<int, int>> parse_pairs(const std::string& text) {
    // "1,3;2,4"
    std::vector<std::pair<int, int>> out;
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ';')) {
        auto comma = item.find(',');
        if (comma == std::string::npos) throw InvalidInput("pairs look like 1,3;2,4");
        try {
            out.emplace_back(std::stoi(item.substr(0, comma)), std::stoi(item.substr(comma + 1)));
        } catch (const std::exception&) {
            throw InvalidInput("pairs look like 1,3;2,4");
        }
    }
    return out;
}

ReconfigCaps caps_from_env(std::int64_t cli_cap) {
    ReconfigCaps caps;
    if (const char* env = std::getenv("FROZENCOL_CAP")) {
        try {
            caps.max_colourings = std::stoll(env);
        } catch (const std::exception&) {
            throw InvalidInput("FROZENCOL_CAP must be an integer");
        }
    }
    if (cli_cap > 0) caps.max_colourings = cli_cap;
    if (caps.max_colourings <= 0) throw InvalidInput("cap must be positive");
    return caps;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Frozen colourings, clique partitions and recolouring"};
    app.require_subcommand(1);
    bool no_verify = false;
    std::string out;
    app.add_flag("--no-verify", no_verify, "Skip re-checking emitted certificates");
    app.add_option("-o,--output", out, "Write the JSON result here instead of stdout");

    // family
    auto* fam = app.add_subcommand("family", "Build a family member with its certificates");
    std::string fam_name;
    int fam_q = 0;
    std::string fam_pairs;
    fam->add_option("--name", fam_name, "ME, ME_STAR, KM, KE, KE_CUSTOM, B, H, CHAIN, CYCLE")->required();
    fam->add_option("--q,--param", fam_q, "Family parameter")->required();
    fam->add_option("--pairs", fam_pairs, "KE_CUSTOM middle pairs, e.g. 1,3;2,4");

    // check
    auto* chk = app.add_subcommand("check", "Check a partition against a graph");
    GraphInput chk_in;
    add_graph_options(chk, chk_in);
    std::string chk_part, chk_colours;
    bool chk_frozen = false, chk_cp = false, chk_proper = false;
    chk->add_option("--partition", chk_part, "Partition JSON file");
    chk->add_option("--colours", chk_colours, "Colour line, 1-based");
    chk->add_flag("--frozen", chk_frozen, "Require frozen");
    chk->add_flag("--clique-partition", chk_cp, "Read the partition on the clique side");
    chk->add_flag("--proper", chk_proper, "Require a proper colouring / clique partition");

    // solve
    auto* slv = app.add_subcommand("solve", "Exact chi, theta, alpha, omega and freeness");
    GraphInput slv_in;
    add_graph_options(slv, slv_in);
    int slv_max = SolverOptions{}.max_order;
    slv->add_option("--max-order", slv_max, "Solver bound (at most 64)");

    // reconfig
    auto* rec = app.add_subcommand("reconfig", "Components of the k-recolouring graph");
    GraphInput rec_in;
    add_graph_options(rec, rec_in);
    int rec_k = 0;
    std::int64_t rec_cap = 0;
    bool rec_diam = false;
    std::string rec_dot;
    rec->add_option("-k", rec_k, "Colour budget")->required();
    rec->add_option("--cap", rec_cap, "Colouring cap (default 2e7 or FROZENCOL_CAP)");
    rec->add_flag("--diameter", rec_diam, "Compute component diameters");
    rec->add_option("--dot", rec_dot, "Also write R_k as Graphviz DOT");

    // subdivide
    auto* sub = app.add_subcommand("subdivide", "Subdivide an edge and carry the certificates along");
    GraphInput sub_in;
    add_graph_options(sub, sub_in);
    std::string sub_q, sub_f;
    int sub_x = -1, sub_y = -1, sub_case = 0;
    bool sub_loose = false, sub_theta = false, sub_colouring = false;
    sub->add_option("--q", sub_q, "Clique partition (colouring with --colouring-side) JSON")->required();
    sub->add_option("--f", sub_f, "Frozen partition JSON")->required();
    sub->add_option("-x", sub_x)->required();
    sub->add_option("-y", sub_y)->required();
    sub->add_option("--case", sub_case, "Force case 1 or 2")->check(CLI::Range(0, 2));
    sub->add_flag("--no-strict", sub_loose, "Allow a diamond middle edge");
    sub->add_flag("--theta", sub_theta, "Confirm theta increases by one with the exact solver");
    sub->add_flag("--colouring-side", sub_colouring, "Input is the colouring side; xy must be a non-edge");

    // recolour
    auto* rcl = app.add_subcommand("recolour", "Recolouring path between two colourings");
    GraphInput rcl_in;
    add_graph_options(rcl, rcl_in);
    std::string rcl_from, rcl_to;
    int rcl_ell = 0;
    rcl->add_option("--from", rcl_from, "Start colour line, 1-based")->required();
    rcl->add_option("--to", rcl_to, "Target colour line, 1-based")->required();
    rcl->add_option("--ell", rcl_ell, "Number of colours")->required();

    // search
    auto* sch = app.add_subcommand("search", "Look for frozen colourings above the chromatic number");
    std::string sch_stream;
    int sch_exh = 0;
    PredicateSpec spec;
    ScanOptions scan;
    bool sch_timing = false;
    sch->add_option("--stream", sch_stream, "graph6 stream file ('-' for stdin)");
    sch->add_option("--exhaustive", sch_exh, "All labelled graphs up to this order (at most 7)");
    sch->add_flag("--2k2-free", spec.require_2k2_free);
    sch->add_flag("--p5-free", spec.require_p5_free);
    sch->add_flag("--c4-free", spec.require_c4_free);
    sch->add_flag("--complement", spec.on_complement, "Apply freeness filters to the complement");
    sch->add_option("--gap", spec.gap, "Look for frozen (chi+gap)-colourings")->check(CLI::PositiveNumber);
    sch->add_option("--max-k", spec.max_k);
    sch->add_option("--threads", scan.threads)->check(CLI::PositiveNumber);
    sch->add_option("--checkpoint", scan.checkpoint, "Resumable progress file");
    sch->add_flag("--timing", sch_timing, "Include runtime in the report");

    // fixtures
    auto* fix = app.add_subcommand("fixtures", "Write or compare the figure and table fixtures");
    std::string fix_dir = "fixtures";
    bool fix_check = false;
    fix->add_option("--dir", fix_dir, "Fixture root");
    fix->add_flag("--check", fix_check, "Compare instead of writing; exit 1 on any difference");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*fam) {
            auto inst = build_family(parse_family(fam_name), fam_q, parse_pairs(fam_pairs));
            if (!no_verify) {
                if (!is_clique_partition(inst.graph, inst.canonical)) throw VerificationFailed("canonical partition is not a clique partition");
                if (inst.frozen && !is_frozen_clique_partition(inst.graph, *inst.frozen))
                    throw VerificationFailed("frozen partition does not check");
            }
            json j{{"family", to_string(inst.family)},
                   {"param", inst.param},
                   {"side", "clique-partition"},
                   {"graph6", encode_graph6(inst.graph)},
                   {"colouring_side_graph6", encode_graph6(complement(inst.graph))},
                   {"graph", graph_to_json(inst.graph)},
                   {"canonical", partition_to_json(inst.canonical)},
                   {"expected", expected_to_json(inst.expected)}};
            j["frozen"] = inst.frozen ? partition_to_json(*inst.frozen) : json(nullptr);
            emit(j, out);
            return 0;
        }
        if (*chk) {
            auto in = load_graph(chk_in);
            auto p = load_partition(chk_part, chk_colours, in);
            const Graph& g = in.graph;
            json j{{"n", g.order()}, {"blocks", p.block_count()}, {"side", chk_cp ? "clique-partition" : "colouring"}};
            bool ok = true;
            const bool valid = chk_cp ? is_clique_partition(g, p) : is_proper_colouring(g, p);
            j[chk_cp ? "clique_partition" : "proper"] = valid;
            if (chk_proper || !chk_frozen) ok = ok && valid;
            if (chk_frozen) {
                if (!valid) {
                    j["frozen"] = false;
                    ok = false;
                } else {
                    const bool frozen = chk_cp ? is_frozen_clique_partition(g, p) : is_frozen_colouring(g, p);
                    j["frozen"] = frozen;
                    ok = ok && frozen;
                }
            }
            j["ok"] = ok;
            emit(j, out);
            return ok ? 0 : 1;
        }
        if (*slv) {
            auto in = load_graph(slv_in);
            auto r = analyze(in.graph, {.max_order = slv_max});
            emit(report_to_json(r), out);
            return 0;
        }
        if (*rec) {
            auto in = load_graph(rec_in);
            auto caps = caps_from_env(rec_cap);
            auto r = reconfiguration_components(in.graph, rec_k, caps, rec_diam);
            if (!rec_dot.empty()) {
                std::ofstream f(rec_dot);
                if (!f) throw InvalidInput("cannot write " + rec_dot);
                f << reconfig_dot(in.graph, rec_k);
            }
            emit(reconfig_to_json(r), out);
            return 0;
        }
        if (*sub) {
            auto in = load_graph(sub_in);
            auto q = load_partition(sub_q, "", in);
            auto f = load_partition(sub_f, "", in);
            TransformOptions opt{.strict = !sub_loose, .force_case = sub_case};
            auto r = sub_colouring ? expand_nonedge(in.graph, sub_x, sub_y, q, f, opt)
                                   : subdivide_with_certificates(in.graph, q, f, sub_x, sub_y, opt);
            if (sub_theta) {
                const Graph before = sub_colouring ? complement(in.graph) : in.graph;
                TransformResult side = r;
                if (sub_colouring) side.graph_out = complement(r.graph_out);
                auto c = theta_increment_check(side, before, q.nonempty_count());
                r.theta_incremented = c.ok;
            }
            if (!no_verify) {
                const bool good = sub_colouring ? is_proper_colouring(r.graph_out, r.q_out) && is_frozen_colouring(r.graph_out, r.f_out)
                                                : is_clique_partition(r.graph_out, r.q_out) && is_frozen_clique_partition(r.graph_out, r.f_out);
                if (!good) throw VerificationFailed("transported certificates do not check");
            }
            auto j = transform_to_json(r);
            j["graph6"] = encode_graph6(r.graph_out);
            j["side"] = sub_colouring ? "colouring" : "clique-partition";
            emit(j, out);
            return r.theta_incremented == false ? 1 : 0;
        }
        if (*rcl) {
            auto in = load_graph(rcl_in);
            auto b = parse_colour_line(rcl_from, rcl_ell);
            auto c = parse_colour_line(rcl_to, rcl_ell);
            auto seq = path_between(in.graph, b, c, rcl_ell);
            if (!no_verify) {
                auto s = verify_moves(in.graph, seq);
                if (!s.valid || s.final_colours != c.colours()) throw VerificationFailed("move sequence does not replay");
            }
            emit(moves_to_json(in.graph, seq), out);
            return 0;
        }
        if (*sch) {
            SearchReport r;
            if (sch_exh > 0) {
                r = exhaustive_small(sch_exh, spec, scan.threads);
            } else if (sch_stream == "-" || sch_stream.empty()) {
                r = scan_stream(std::cin, spec, scan);
            } else {
                std::ifstream f(sch_stream);
                if (!f) throw InvalidInput("cannot read " + sch_stream);
                r = scan_stream(f, spec, scan);
            }
            emit(search_report_to_json(r, sch_timing), out);
            return 0;
        }
        if (*fix) {
            int differences = 0;
            for (const auto& [rel, content] : fixture_files()) {
                const fs::path path = fs::path(fix_dir) / rel;
                if (fix_check) {
                    std::ifstream f(path);
                    std::ostringstream os;
                    if (f) os << f.rdbuf();
                    if (!f || os.str() != content) {
                        std::cerr << "differs: " << path.string() << '\n';
                        ++differences;
                    }
                } else {
                    fs::create_directories(path.parent_path());
                    std::ofstream(path) << content;
                }
            }
            emit(json{{"files", fixture_files().size()}, {"differences", differences}, {"mode", fix_check ? "check" : "write"}}, out);
            return differences == 0 ? 0 : 1;
        }
    } catch (const VerificationFailed& e) {
        std::cerr << "verification failed: " << e.what() << '\n';
        return 1;
    } catch (const PreconditionFailed& e) {
        std::cerr << "precondition failed: " << e.what() << '\n';
        return 1;
    } catch (const InternalCheckFailed& e) {
        std::cerr << "internal check failed: " << e.what() << '\n';
        return 1;
    } catch (const LimitExceeded& e) {
        std::cerr << "limit exceeded: " << e.what() << '\n';
        return 2;
    } catch (const InvalidInput& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
