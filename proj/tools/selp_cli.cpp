// selp: community detection with evidential label propagation.
//
// Subcommands: detect, experiment, generate. Every file output gets a
// <path>.manifest.json sidecar recording the full parameter set, input file
// fingerprints, and RNG seeds needed to reproduce the run.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "selp/baselines.hpp"
#include "selp/benchgen.hpp"
#include "selp/datasets.hpp"
#include "selp/engine.hpp"
#include "selp/errors.hpp"
#include "selp/eval.hpp"
#include "selp/experiment.hpp"
#include "selp/graph.hpp"
#include "selp/report.hpp"

namespace {

using nlohmann::json;

constexpr const char* kToolVersion = "0.1.0";

std::uint64_t fnv1a64(std::istream& in) {
    std::uint64_t h = 1469598103934665603ULL;
    char c;
    while (in.get(c)) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    return h;
}

std::uint64_t file_fingerprint(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw selp::input_error("cannot open " + path);
    return fnv1a64(in);
}

void write_manifest(const std::string& out_path, const std::string& command, json params,
                    const std::vector<std::string>& input_files) {
    if (out_path.empty() || out_path == "-") return;
    json manifest;
    manifest["command"] = command;
    manifest["parameters"] = std::move(params);
    json inputs = json::object();
    for (const auto& f : input_files) {
        std::ostringstream hex;
        hex << std::hex << file_fingerprint(f);
        inputs[f] = hex.str();
    }
    manifest["input_fingerprints"] = inputs;
    manifest["tool_version"] = kToolVersion;
    std::ofstream out(out_path + ".manifest.json");
    if (!out) throw selp::input_error("cannot write manifest for " + out_path);
    out << manifest.dump(2) << '\n';
}

struct OutputTarget {
    std::string path;  // "-" = stdout
    std::ofstream file;

    std::ostream& stream() {
        if (path == "-") return std::cout;
        if (!file.is_open()) {
            file.open(path);
            if (!file) throw selp::input_error("cannot write " + path);
        }
        return file;
    }
};

// Inline seed spec "1:w1,34:w2" or a file of `node_id label` lines.
// Frame label order is first appearance.
std::pair<selp::LabelFrame, selp::SeedSet> parse_seeds(const selp::Graph& g,
                                                       const std::string& inline_spec,
                                                       const std::string& file_path) {
    std::vector<std::pair<std::string, std::string>> pairs;
    if (!inline_spec.empty()) {
        std::istringstream ss(inline_spec);
        std::string item;
        while (std::getline(ss, item, ',')) {
            auto colon = item.find(':');
            if (colon == std::string::npos || colon == 0 || colon + 1 == item.size()) {
                throw selp::input_error("bad seed entry '" + item + "', expected id:label");
            }
            pairs.emplace_back(item.substr(0, colon), item.substr(colon + 1));
        }
    } else if (!file_path.empty()) {
        std::ifstream in(file_path);
        if (!in) throw selp::input_error("cannot open seeds file: " + file_path);
        std::string line;
        int line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            std::istringstream ls(line);
            std::string node, label, extra;
            if (!(ls >> node) || node[0] == '#') continue;
            if (!(ls >> label) || (ls >> extra)) {
                throw selp::parse_error("seeds file line " + std::to_string(line_no) +
                                        ": expected 'node_id label'");
            }
            pairs.emplace_back(node, label);
        }
    }
    if (pairs.empty()) {
        throw selp::input_error("no seeds given (use --seeds or --seeds-file)");
    }
    std::vector<std::string> labels;
    for (const auto& [_, label] : pairs) {
        if (std::find(labels.begin(), labels.end(), label) == labels.end()) {
            labels.push_back(label);
        }
    }
    selp::LabelFrame frame(labels);
    selp::SeedSet seeds;
    for (const auto& [node, label] : pairs) {
        int idx = g.index_of(node);
        if (idx < 0) throw selp::input_error("seed node not in graph: " + node);
        seeds.assignments[idx] = frame.index_of(label);
    }
    return {std::move(frame), std::move(seeds)};
}

struct CommonFlags {
    std::string graph_path;
    std::string dataset;
    bool gml = false;
};

std::pair<selp::Graph, std::optional<selp::GroundTruth>> load_graph(const CommonFlags& flags,
                                                                    const std::string& truth_path) {
    if (!flags.dataset.empty()) {
        if (flags.dataset != "karate") {
            throw selp::config_error("unknown dataset: " + flags.dataset);
        }
        auto [g, truth] = selp::karate_club();
        return {std::move(g), std::move(truth)};
    }
    if (flags.graph_path.empty()) {
        throw selp::config_error("either --graph or --dataset is required");
    }
    selp::Graph g = [&] {
        if (flags.gml) {
            std::ifstream in(flags.graph_path);
            if (!in) throw selp::input_error("cannot open graph: " + flags.graph_path);
            return selp::load_gml(in);
        }
        return selp::load_edge_list_file(flags.graph_path);
    }();
    if (!truth_path.empty()) {
        auto [g2, truth] = selp::load_labeled_benchmark(flags.graph_path, truth_path);
        (void)g2;
        return {std::move(g), std::move(truth)};
    }
    return {std::move(g), std::nullopt};
}

selp::SelpConfig make_config(double alpha0, double beta, const std::string& gamma,
                             double eta, int max_iterations, const std::string& tie_break,
                             std::uint64_t seed) {
    selp::SelpConfig cfg;
    cfg.alpha0 = alpha0;
    cfg.beta = beta;
    if (gamma != "auto") {
        try {
            cfg.gamma = std::stod(gamma);
        } catch (const std::exception&) {
            throw selp::config_error("--gamma must be 'auto' or a positive number");
        }
    }
    cfg.eta = eta;
    cfg.max_iterations = max_iterations;
    if (tie_break == "lowest") {
        cfg.tie_break = selp::TieBreak::kDeterministicLowestLabel;
    } else if (tie_break == "random") {
        cfg.tie_break = selp::TieBreak::kSeededRandom;
    } else {
        throw selp::config_error("--tie-break must be 'lowest' or 'random'");
    }
    cfg.rng_seed = seed;
    cfg.validate();
    return cfg;
}

json detection_to_json(const selp::Graph& g, const selp::LabelFrame& frame,
                       const selp::DetectionResult& result) {
    json rows = json::array();
    for (int i = 0; i < g.node_count(); ++i) {
        const auto& m = result.masses[i];
        json masses = json::object();
        for (int k = 0; k < frame.size(); ++k) masses[frame.label(k)] = m.singleton(k);
        masses["OMEGA"] = m.omega();
        rows.push_back({{"node_id", g.id(i)},
                        {"label", result.labels[i] == selp::kOutlier
                                      ? "OUTLIER"
                                      : frame.label(result.labels[i])},
                        {"mass", masses},
                        {"phase", selp::phase_name(result, i)}});
    }
    return {{"nodes", rows},
            {"iterations", result.iterations},
            {"hit_iteration_cap", result.hit_iteration_cap}};
}

int cmd_detect(const CommonFlags& common, const std::string& seeds_inline,
               const std::string& seeds_file, const std::string& algo_name,
               const selp::SelpConfig& cfg, const std::string& gamma_flag,
               std::uint64_t seed, const std::string& out_path, bool as_json) {
    auto [g, truth] = load_graph(common, "");
    selp::Algorithm algo = selp::parse_algorithm(algo_name);
    OutputTarget out{out_path, {}};

    json params = {{"algorithm", algo_name},
                   {"rng_seed", seed},
                   {"graph", common.graph_path.empty() ? common.dataset : common.graph_path}};
    std::vector<std::string> inputs;
    if (!common.graph_path.empty()) inputs.push_back(common.graph_path);

    if (algo == selp::Algorithm::kLpa) {
        if (!seeds_inline.empty() || !seeds_file.empty()) {
            std::cerr << "warning: --seeds ignored for lpa\n";
        }
        auto labels = selp::lpa(g, seed);
        if (as_json) {
            json rows = json::array();
            for (int i = 0; i < g.node_count(); ++i) {
                rows.push_back({{"node_id", g.id(i)}, {"label", labels[i]}});
            }
            out.stream() << json{{"nodes", rows}}.dump(2) << '\n';
        } else {
            selp::write_labels_csv(g, labels, {}, out.stream());
        }
        write_manifest(out_path, "detect", params, inputs);
        return 0;
    }

    auto [frame, seeds] = parse_seeds(g, seeds_inline, seeds_file);
    if (!seeds_file.empty()) inputs.push_back(seeds_file);
    params["seeds_inline"] = seeds_inline;
    params["seeds_file"] = seeds_file;

    if (algo == selp::Algorithm::kSlp) {
        auto labels = selp::slp(g, frame, seeds, seed);
        if (as_json) {
            json rows = json::array();
            for (int i = 0; i < g.node_count(); ++i) {
                rows.push_back({{"node_id", g.id(i)}, {"label", frame.label(labels[i])}});
            }
            out.stream() << json{{"nodes", rows}}.dump(2) << '\n';
        } else {
            selp::write_labels_csv(g, labels, frame.labels(), out.stream());
        }
        write_manifest(out_path, "detect", params, inputs);
        return 0;
    }

    params["alpha0"] = cfg.alpha0;
    params["beta"] = cfg.beta;
    params["gamma"] = gamma_flag;
    params["eta"] = cfg.eta;
    params["max_iterations"] = cfg.max_iterations;
    params["tie_break"] =
        cfg.tie_break == selp::TieBreak::kDeterministicLowestLabel ? "lowest" : "random";
    auto result = selp::propagate(g, frame, seeds, cfg);
    if (as_json) {
        out.stream() << detection_to_json(g, frame, result).dump(2) << '\n';
    } else {
        selp::write_detection_csv(g, frame, result, out.stream());
    }
    write_manifest(out_path, "detect", params, inputs);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Semi-supervised evidential label propagation toolkit"};
    app.require_subcommand(1);

    // ---- detect ----
    auto* detect = app.add_subcommand("detect", "Run one detection and export per-node labels");
    CommonFlags dflags;
    std::string d_seeds, d_seeds_file, d_algo = "selp", d_gamma = "auto";
    std::string d_tie = "lowest", d_out = "-";
    double d_alpha0 = 1.0, d_beta = 2.0, d_eta = 0.7;
    int d_max_it = 100;
    std::uint64_t d_seed = 0;
    bool d_json = false;
    detect->add_option("--graph", dflags.graph_path, "Edge-list file");
    detect->add_flag("--gml", dflags.gml, "Parse --graph as GML (nodes/edges subset)");
    detect->add_option("--dataset", dflags.dataset, "Embedded dataset name (karate)");
    detect->add_option("--seeds", d_seeds, "Inline seeds, e.g. 1:w1,34:w2");
    detect->add_option("--seeds-file", d_seeds_file, "Seeds file: one 'node_id label' per line");
    detect->add_option("--algo", d_algo, "selp | lpa | slp")->capture_default_str();
    detect->add_option("--alpha0", d_alpha0)->capture_default_str();
    detect->add_option("--beta", d_beta)->capture_default_str();
    detect->add_option("--gamma", d_gamma, "'auto' or a positive value")->capture_default_str();
    detect->add_option("--eta", d_eta)->capture_default_str();
    detect->add_option("--max-iterations", d_max_it)->capture_default_str();
    detect->add_option("--tie-break", d_tie, "lowest | random")->capture_default_str();
    detect->add_option("--seed", d_seed, "RNG seed")->capture_default_str();
    detect->add_option("--out", d_out, "Output CSV path ('-' = stdout)")->capture_default_str();
    detect->add_flag("--json", d_json, "Emit JSON instead of CSV");

    // ---- experiment ----
    auto* experiment =
        app.add_subcommand("experiment", "Repeated paired trials, aggregated per group");
    CommonFlags eflags;
    std::string e_truth, e_out = "-", e_trials_out, e_algos = "selp,slp";
    std::string e_gamma = "auto", e_tie = "lowest";
    std::vector<int> e_labeled;
    std::vector<double> e_mu;
    int e_trials = 50, e_max_it = 100;
    double e_alpha0 = 1.0, e_beta = 2.0, e_eta = 0.7;
    std::uint64_t e_seed = 0;
    bool e_json = false;
    int e_n = 300, e_cmin = 20, e_cmax = 50;
    double e_k = 15.0;
    experiment->add_option("--graph", eflags.graph_path, "Edge-list file");
    experiment->add_option("--truth", e_truth, "Community file for --graph");
    experiment->add_option("--dataset", eflags.dataset, "Embedded dataset name (karate)");
    experiment->add_option("--algos", e_algos, "Comma list of selp,slp,lpa")->capture_default_str();
    experiment->add_option("--labeled-per-community", e_labeled,
                           "Labeled count(s) per community (sweep variable unless --mu-list)");
    experiment->add_option("--mu-list", e_mu, "Mixing values; sweeps planted graphs");
    experiment->add_option("--trials", e_trials)->capture_default_str();
    experiment->add_option("--seed", e_seed, "Base RNG seed")->capture_default_str();
    experiment->add_option("--alpha0", e_alpha0)->capture_default_str();
    experiment->add_option("--beta", e_beta)->capture_default_str();
    experiment->add_option("--gamma", e_gamma)->capture_default_str();
    experiment->add_option("--eta", e_eta)->capture_default_str();
    experiment->add_option("--max-iterations", e_max_it)->capture_default_str();
    experiment->add_option("--tie-break", e_tie)->capture_default_str();
    experiment->add_option("--planted-n", e_n, "Planted graph size for --mu-list")
        ->capture_default_str();
    experiment->add_option("--planted-degree", e_k)->capture_default_str();
    experiment->add_option("--planted-cmin", e_cmin)->capture_default_str();
    experiment->add_option("--planted-cmax", e_cmax)->capture_default_str();
    experiment->add_option("--out", e_out, "Summary CSV path ('-' = stdout)")
        ->capture_default_str();
    experiment->add_option("--per-trial", e_trials_out, "Optional per-trial detail CSV path");
    experiment->add_flag("--json", e_json, "Emit JSON instead of CSV");

    // ---- generate ----
    auto* generate = app.add_subcommand("generate", "Write a planted-partition benchmark");
    selp::PlantedConfig gcfg;
    std::string g_out_dir = ".";
    generate->add_option("--n", gcfg.n)->capture_default_str();
    generate->add_option("--avg-degree", gcfg.avg_degree)->capture_default_str();
    generate->add_option("--mu", gcfg.mu)->capture_default_str();
    generate->add_option("--cmin", gcfg.cmin)->capture_default_str();
    generate->add_option("--cmax", gcfg.cmax)->capture_default_str();
    generate->add_option("--seed", gcfg.rng_seed)->capture_default_str();
    generate->add_option("--out-dir", g_out_dir)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (detect->parsed()) {
            auto cfg = make_config(d_alpha0, d_beta, d_gamma, d_eta, d_max_it, d_tie, d_seed);
            return cmd_detect(dflags, d_seeds, d_seeds_file, d_algo, cfg, d_gamma, d_seed,
                              d_out, d_json);
        }
        if (experiment->parsed()) {
            auto cfg = make_config(e_alpha0, e_beta, e_gamma, e_eta, e_max_it, e_tie, e_seed);
            std::vector<selp::Algorithm> algos;
            std::istringstream ss(e_algos);
            std::string name;
            while (std::getline(ss, name, ',')) algos.push_back(selp::parse_algorithm(name));
            if (algos.empty()) throw selp::config_error("--algos must name at least one algorithm");

            selp::SweepResult result;
            json params = {{"algorithms", e_algos}, {"trials", e_trials}, {"base_seed", e_seed}};
            std::vector<std::string> inputs;
            if (!e_mu.empty()) {
                int labeled = e_labeled.empty() ? 3 : e_labeled.front();
                if (e_labeled.size() > 1) {
                    throw selp::config_error(
                        "--mu-list sweeps mu; give at most one --labeled-per-community value");
                }
                selp::PlantedConfig base;
                base.n = e_n;
                base.avg_degree = e_k;
                base.cmin = e_cmin;
                base.cmax = e_cmax;
                result = selp::run_mu_sweep(base, e_mu, labeled, algos, e_trials, e_seed, cfg);
                params["mu_list"] = e_mu;
                params["labeled_per_community"] = labeled;
                params["planted"] = {{"n", e_n}, {"avg_degree", e_k}, {"cmin", e_cmin},
                                     {"cmax", e_cmax}};
            } else {
                if (e_labeled.empty()) e_labeled = {1, 2, 3, 4, 5};
                auto [g, truth] = load_graph(eflags, e_truth);
                if (!truth) {
                    throw selp::config_error("experiment needs ground truth (--truth or --dataset)");
                }
                result = selp::run_labeled_sweep(g, *truth, algos, e_labeled, e_trials, e_seed,
                                                 cfg);
                params["labeled_counts"] = e_labeled;
                params["graph"] =
                    eflags.graph_path.empty() ? eflags.dataset : eflags.graph_path;
                if (!eflags.graph_path.empty()) inputs.push_back(eflags.graph_path);
                if (!e_truth.empty()) inputs.push_back(e_truth);

                if (!e_trials_out.empty()) {
                    std::ofstream tout(e_trials_out);
                    if (!tout) throw selp::input_error("cannot write " + e_trials_out);
                    selp::write_trials_csv(g, result.reports, tout);
                }
            }
            OutputTarget out{e_out, {}};
            if (e_json) {
                json rows = json::array();
                for (const auto& s : result.summaries) {
                    rows.push_back({{"group", s.group},
                                    {"algorithm", selp::algorithm_name(s.algorithm)},
                                    {"trials", s.trials},
                                    {"mean_error", s.mean_error},
                                    {"sd_error", s.sd_error},
                                    {"mean_nmi", s.mean_nmi},
                                    {"sd_nmi", s.sd_nmi}});
                }
                out.stream() << json{{"summaries", rows}}.dump(2) << '\n';
            } else {
                selp::write_sweep_csv(result.summaries, out.stream());
            }
            write_manifest(e_out, "experiment", params, inputs);
            return 0;
        }
        if (generate->parsed()) {
            auto [g, truth] = selp::generate_planted(gcfg);
            std::string prefix = g_out_dir + "/" + gcfg.fingerprint();
            selp::save_labeled_benchmark(g, truth, prefix);
            json params = {{"n", gcfg.n},       {"avg_degree", gcfg.avg_degree},
                           {"mu", gcfg.mu},     {"cmin", gcfg.cmin},
                           {"cmax", gcfg.cmax}, {"rng_seed", gcfg.rng_seed}};
            write_manifest(prefix + ".edges", "generate", params, {});
            std::cout << prefix << ".edges\n" << prefix << ".communities\n";
            return 0;
        }
    } catch (const selp::config_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const selp::input_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 2;
}
