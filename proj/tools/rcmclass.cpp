// Command-line front end: classify state files, verify the bundled catalog,
// report subfamily counts, export the entanglement pyramid, and run random
// local-operator invariance trials.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rcm/catalog.hpp"
#include "rcm/ilo.hpp"
#include "rcm/state_io.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;
constexpr int kExitAmbiguous = 3;

json signature_json(const rcm::RankSignature& sig) {
    json cuts = json::array();
    for (std::size_t i = 0; i < sig.per_cut.size(); ++i) {
        json ranks = json::array();
        const auto& cut = sig.per_cut[i];
        for (std::size_t j = 0; j < cut.ranks.size(); ++j)
            ranks.push_back({{"sigma", cut.perms.members[j].to_string()},
                             {"rank", cut.ranks[j]}});
        cuts.push_back({{"l", i + 1}, {"ranks", ranks}});
    }
    return cuts;
}

json result_json(const rcm::ClassificationResult& r) {
    return json{{"label", r.label},
                {"family", r.family.to_string()},
                {"genuinely_entangled", r.genuinely_entangled},
                {"signature", signature_json(r.signature)},
                {"warnings", r.warnings}};
}

void print_envelope(const std::string& command, const json& inputs, const json& results,
                    const json& warnings) {
    json envelope{{"command", command},
                  {"inputs", inputs},
                  {"results", results},
                  {"warnings", warnings}};
    std::cout << envelope.dump(2) << "\n";
}

void print_text_result(const rcm::ClassificationResult& r) {
    std::cout << "label: " << r.label << "\n";
    std::cout << "family: " << r.family.to_string() << "\n";
    std::cout << "genuinely_entangled: " << (r.genuinely_entangled ? "true" : "false") << "\n";
    std::cout << "ranks:\n";
    for (std::size_t i = 0; i < r.signature.per_cut.size(); ++i) {
        const auto& cut = r.signature.per_cut[i];
        std::cout << "  l=" << i + 1 << ":";
        for (std::size_t j = 0; j < cut.ranks.size(); ++j)
            std::cout << " " << cut.perms.members[j].to_string() << "=" << cut.ranks[j];
        std::cout << "\n";
    }
    if (r.warnings.empty()) {
        std::cout << "warnings: none\n";
    } else {
        std::cout << "warnings:\n";
        for (const auto& w : r.warnings) std::cout << "  " << w << "\n";
    }
}

// "l1:(a,b,c,d);l2:(e,f,g)" -> "(a,b,c,d)-(e,f,g)" node names of the figure.
std::string pyramid_node_name(const std::string& label) {
    std::string out;
    bool first = true;
    std::size_t pos = 0;
    while ((pos = label.find('(', pos)) != std::string::npos) {
        std::size_t end = label.find(')', pos);
        if (!first) out += "-";
        out += label.substr(pos, end - pos + 1);
        first = false;
        pos = end;
    }
    return out;
}

// Rank entries of a label, flattened across cuts: "l1:(2,2);l2:(4)" -> 2,2,4.
std::vector<int> label_rank_vector(const std::string& label) {
    std::vector<int> ranks;
    std::string num;
    bool in_parens = false;
    for (char ch : label) {
        if (ch == '(') {
            in_parens = true;
        } else if (ch == ')' || (in_parens && ch == ',')) {
            if (!num.empty()) ranks.push_back(std::stoi(num));
            num.clear();
            if (ch == ')') in_parens = false;
        } else if (in_parens && std::isdigit(static_cast<unsigned char>(ch))) {
            num += ch;
        }
    }
    return ranks;
}

int run_classify(const std::string& path, const std::string& backend, double tol, bool as_json,
                 bool strict) {
    rcm::ClassifyOptions opts;
    opts.tol_rel = tol;
    if (backend == "exact") opts.backend = rcm::RankBackend::exact;
    if (backend == "numeric") opts.backend = rcm::RankBackend::numeric;

    rcm::ClassificationResult result;
    try {
        result = rcm::classify(rcm::load_state_file(path), opts);
    } catch (const rcm::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }

    if (as_json)
        print_envelope("classify",
                       json{{"path", path}, {"backend", backend}, {"tol", tol}},
                       result_json(result), result.warnings);
    else
        print_text_result(result);

    bool ambiguous = std::any_of(result.warnings.begin(), result.warnings.end(),
                                 [](const std::string& w) {
                                     return w.find("RANK_AMBIGUOUS") != std::string::npos;
                                 });
    if (strict && ambiguous) return kExitAmbiguous;
    return kExitOk;
}

int run_catalog_list(const rcm::Catalog& catalog, const std::string& system) {
    for (const auto& e : catalog.entries()) {
        if (!system.empty() && e.system != system) continue;
        std::cout << e.id << "  " << e.system << "  min_d=" << e.min_d << "  "
                  << e.expected_label << "\n";
    }
    return kExitOk;
}

int run_catalog_verify(const rcm::Catalog& catalog, const std::string& system, int d,
                       bool as_json) {
    std::vector<std::string> systems =
        system.empty() ? std::vector<std::string>{"2x2x4", "2x2x2xd"}
                       : std::vector<std::string>{system};

    json report = json::array();
    int failures = 0;
    bool ambiguous = false;
    std::map<std::string, std::set<std::string>> labels_by_system;
    for (const auto& sys : systems) {
        for (const auto& e : catalog.representatives(sys, d)) {
            auto result = rcm::classify(e.state);
            bool ok = result.label == e.expected_label && result.family == e.expected_family;
            for (const auto& w : result.warnings)
                if (w.find("RANK_AMBIGUOUS") != std::string::npos) ambiguous = true;
            labels_by_system[sys].insert(result.label);
            if (!ok) ++failures;
            report.push_back({{"id", e.id},
                              {"ok", ok},
                              {"expected", e.expected_label},
                              {"computed", result.label},
                              {"family", result.family.to_string()}});
            if (!as_json)
                std::cout << (ok ? "pass  " : "FAIL  ") << e.id << "  " << result.label
                          << (ok ? "" : "  expected " + e.expected_label) << "\n";
        }
    }

    json dispute_report = json::array();
    bool include_disputes =
        std::find(systems.begin(), systems.end(), "2x2x2xd") != systems.end();
    if (include_disputes) {
        for (const auto& dsp : catalog.disputes()) {
            auto computed = rcm::classify(dsp.printed_state).label;
            bool as_recorded = computed == dsp.printed_label;
            if (!as_recorded) ++failures;
            dispute_report.push_back({{"printed_file", dsp.printed_file},
                                      {"claimed", dsp.claimed_label},
                                      {"computed", computed},
                                      {"recorded", dsp.printed_label},
                                      {"corrected_entry", dsp.corrected_entry}});
            if (!as_json)
                std::cout << "dispute  " << dsp.printed_file << "  claimed "
                          << dsp.claimed_label << "  computes to " << computed
                          << "  (corrected by " << dsp.corrected_entry << ")\n";
        }
    }

    if (as_json) {
        json counts = json::object();
        for (const auto& [sys, labels] : labels_by_system) counts[sys] = labels.size();
        print_envelope("catalog-verify",
                       json{{"system", system.empty() ? "all" : system}, {"d", d}},
                       json{{"entries", report},
                            {"disputes", dispute_report},
                            {"distinct_labels", counts},
                            {"failures", failures}},
                       json::array());
    } else {
        for (const auto& [sys, labels] : labels_by_system) {
            std::cout << "distinct " << sys << " labels";
            if (sys == "2x2x2xd") std::cout << " at d=" << d;
            std::cout << ": " << labels.size() << "\n";
        }
        std::cout << (failures == 0 ? "catalog verified" : "catalog verification FAILED")
                  << "\n";
    }
    if (failures > 0) return kExitMismatch;
    if (ambiguous) return kExitAmbiguous;
    return kExitOk;
}

int run_report_counts(const rcm::Catalog& catalog, int dmax, const std::string& out_path) {
    std::string csv = "d,count\n";
    for (int d = 2; d <= dmax; ++d)
        csv += std::to_string(d) + "," + std::to_string(catalog.subfamily_count(d)) + "\n";
    if (out_path.empty()) {
        std::cout << csv;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return kExitInput;
        }
        out << csv;
    }
    return kExitOk;
}

int run_pyramid(const rcm::Catalog& catalog, int d, const std::string& format) {
    std::set<std::string> labels;
    for (const auto& e : catalog.representatives("2x2x2xd", d))
        labels.insert(rcm::classify(e.state).label);

    // Layers by total rank sum, apex (fully separable) first.
    std::map<int, std::vector<std::string>> layers;
    std::map<std::string, std::vector<int>> vectors;
    for (const auto& label : labels) {
        auto v = label_rank_vector(label);
        int sum = 0;
        for (int r : v) sum += r;
        layers[sum].push_back(label);
        vectors[label] = v;
    }

    // Edges: componentwise cover relation between realized labels.
    auto dominates = [&](const std::string& a, const std::string& b) {
        const auto& va = vectors[a];
        const auto& vb = vectors[b];
        if (va == vb) return false;
        for (std::size_t i = 0; i < va.size(); ++i)
            if (vb[i] > va[i]) return false;
        return true;
    };
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& a : labels) {
        for (const auto& b : labels) {
            if (!dominates(a, b)) continue;
            bool covered = false;
            for (const auto& c : labels)
                if (c != a && c != b && dominates(a, c) && dominates(c, b)) {
                    covered = true;
                    break;
                }
            if (!covered) edges.emplace_back(a, b);
        }
    }

    std::vector<std::string> warnings;
    if (d == 4 && layers.size() != 22)
        warnings.push_back("rank-sum layering yields " + std::to_string(layers.size()) +
                           " layers at d=4; the source figure shows 22 under an unspecified "
                           "layer key");

    if (format == "json") {
        json jlayers = json::array();
        for (const auto& [sum, members] : layers) {
            json nodes = json::array();
            for (const auto& label : members)
                nodes.push_back({{"label", label}, {"node", pyramid_node_name(label)}});
            jlayers.push_back({{"rank_sum", sum}, {"nodes", nodes}});
        }
        json jedges = json::array();
        for (const auto& [a, b] : edges)
            jedges.push_back({{"from", pyramid_node_name(a)}, {"to", pyramid_node_name(b)}});
        print_envelope("pyramid", json{{"d", d}},
                       json{{"node_count", labels.size()},
                            {"layer_count", layers.size()},
                            {"layers", jlayers},
                            {"edges", jedges}},
                       warnings);
        return kExitOk;
    }

    // DOT
    std::cout << "digraph pyramid {\n";
    std::cout << "  rankdir=BT;\n";
    std::cout << "  // d=" << d << ": " << labels.size() << " subfamilies in " << layers.size()
              << " rank-sum layers\n";
    for (const auto& w : warnings) std::cout << "  // " << w << "\n";
    for (const auto& [sum, members] : layers) {
        std::cout << "  { rank=same;";
        for (const auto& label : members) std::cout << " \"" << pyramid_node_name(label) << "\";";
        std::cout << " } // rank sum " << sum << "\n";
    }
    for (const auto& [a, b] : edges)
        std::cout << "  \"" << pyramid_node_name(a) << "\" -> \"" << pyramid_node_name(b)
                  << "\";\n";
    std::cout << "}\n";
    return kExitOk;
}

int run_slocc_test(const rcm::Catalog& catalog, const std::string& state_ref, int trials,
                   std::uint64_t seed) {
    rcm::PureState state = [&]() {
        if (const auto* e = catalog.find(state_ref)) return e->state;
        return rcm::load_state_file(state_ref);
    }();
    if (state.kind() != rcm::Scalar::Kind::exact) {
        std::cerr << "error: invariance trials need an exact-amplitude state\n";
        return kExitInput;
    }

    rcm::Rng rng(seed);
    int passed = 0;
    for (int t = 0; t < trials; ++t) {
        auto report = rcm::invariance_trial(state, rng);
        if (report.passed)
            ++passed;
        else
            std::cout << "trial " << t << " FAILED: " << report.label_before << " -> "
                      << report.label_after << "\n";
    }
    std::cout << "passed " << passed << "/" << trials << "\n";
    return passed == trials ? kExitOk : kExitMismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"SLOCC subfamily classification via coefficient-matrix ranks"};
    app.require_subcommand(1);

    // classify
    std::string classify_path, backend;
    double tol = 1e-9;
    bool as_json = false, strict = false;
    auto* cmd_classify = app.add_subcommand("classify", "classify a state file");
    cmd_classify->add_option("path", classify_path, "state file")->required();
    cmd_classify->add_option("--backend", backend, "exact|numeric")
        ->check(CLI::IsMember({"exact", "numeric"}));
    cmd_classify->add_option("--tol", tol, "numeric pivot tolerance (relative)");
    cmd_classify->add_flag("--json", as_json, "JSON report");
    cmd_classify->add_flag("--strict", strict, "fail on rank ambiguity");

    // catalog
    std::string cat_action, cat_system;
    int cat_d = 8;
    bool cat_json = false;
    auto* cmd_catalog = app.add_subcommand("catalog", "verify or list the catalog");
    cmd_catalog->add_option("action", cat_action, "verify|list")
        ->required()
        ->check(CLI::IsMember({"verify", "list"}));
    cmd_catalog->add_option("--system", cat_system, "2x2x4|2x2x2xd");
    cmd_catalog->add_option("--d", cat_d, "last qudit dimension for 2x2x2xd");
    cmd_catalog->add_flag("--json", cat_json, "JSON report");

    // report-counts
    int dmax = 12;
    std::string counts_out;
    auto* cmd_counts = app.add_subcommand("report-counts", "subfamily count per d as CSV");
    cmd_counts->add_option("--dmax", dmax, "largest d");
    cmd_counts->add_option("--out", counts_out, "output CSV path");

    // pyramid
    int pyr_d = 8;
    std::string pyr_format = "dot";
    auto* cmd_pyramid = app.add_subcommand("pyramid", "entanglement pyramid export");
    cmd_pyramid->add_option("--d", pyr_d, "last qudit dimension");
    cmd_pyramid->add_option("--format", pyr_format, "dot|json")
        ->check(CLI::IsMember({"dot", "json"}));

    // slocc-test
    std::string trial_state;
    int trials = 100;
    std::uint64_t seed = 1;
    auto* cmd_trials = app.add_subcommand("slocc-test", "random ILO invariance trials");
    cmd_trials->add_option("--state", trial_state, "catalog id or state file")->required();
    cmd_trials->add_option("--trials", trials, "number of trials");
    cmd_trials->add_option("--seed", seed, "rng seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_classify->parsed())
            return run_classify(classify_path, backend, tol, as_json, strict);

        auto catalog = rcm::Catalog::load();
        if (cmd_catalog->parsed())
            return cat_action == "list" ? run_catalog_list(catalog, cat_system)
                                        : run_catalog_verify(catalog, cat_system, cat_d,
                                                             cat_json);
        if (cmd_counts->parsed()) return run_report_counts(catalog, dmax, counts_out);
        if (cmd_pyramid->parsed()) return run_pyramid(catalog, pyr_d, pyr_format);
        if (cmd_trials->parsed()) return run_slocc_test(catalog, trial_state, trials, seed);
    } catch (const rcm::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
