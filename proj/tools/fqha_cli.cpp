// fqha: batch verification runner. Each subcommand runs one suite; verify-all
// runs everything. Exit 0 when every check passes, 2 on partial failure.

#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fqha/errors.hpp"
#include "fqha/suites.hpp"

namespace {

void apply_config_file(const std::string& path, fqha::RunConfig& cfg,
                       std::vector<std::string>& suites) {
    std::ifstream in(path);
    if (!in) throw fqha::ConfigError("cannot open config: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw fqha::ConfigError(std::string("config parse error: ") + e.what());
    }
    if (!j.is_object()) throw fqha::ConfigError("config root must be an object");
    for (const auto& [key, val] : j.items()) {
        if (key == "suites") {
            if (!val.is_array()) throw fqha::ConfigError("config field 'suites' must be an array");
            suites.clear();
            for (const auto& s : val) {
                if (!s.is_string()) throw fqha::ConfigError("config field 'suites' must hold strings");
                suites.push_back(s.get<std::string>());
            }
        } else if (key == "seed") {
            if (!val.is_number_unsigned() && !val.is_number_integer())
                throw fqha::ConfigError("config field 'seed' must be an integer");
            cfg.seed = val.get<uint64_t>();
        } else if (key == "exploratory") {
            if (!val.is_boolean()) throw fqha::ConfigError("config field 'exploratory' must be a boolean");
            cfg.exploratory = val.get<bool>();
        } else if (key == "cap") {
            if (!val.is_number_integer()) throw fqha::ConfigError("config field 'cap' must be an integer");
            cfg.q_cap = val.get<long long>();
        } else if (key == "space_cap") {
            if (!val.is_number_integer()) throw fqha::ConfigError("config field 'space_cap' must be an integer");
            cfg.space_cap = val.get<long long>();
        } else if (key == "coverage_trials") {
            if (!val.is_number_integer()) throw fqha::ConfigError("config field 'coverage_trials' must be an integer");
            cfg.coverage_trials = val.get<int>();
        } else if (key == "out_dir") {
            if (!val.is_string()) throw fqha::ConfigError("config field 'out_dir' must be a string");
            cfg.out_dir = val.get<std::string>();
        } else if (key == "field_matrix") {
            if (!val.is_object()) throw fqha::ConfigError("config field 'field_matrix' must be an object");
            for (const auto& [fk, fv] : val.items()) {
                if (fk == "residue_mod4") {
                    if (!fv.is_number_integer() ||
                        (fv.get<int>() != 0 && fv.get<int>() != 1 && fv.get<int>() != 3))
                        throw fqha::ConfigError(
                            "config field 'field_matrix.residue_mod4' must be 0, 1 or 3");
                } else if (fk == "cap") {
                    if (!fv.is_number_integer())
                        throw fqha::ConfigError("config field 'field_matrix.cap' must be an integer");
                    cfg.q_cap = fv.get<long long>();
                } else if (fk == "primes_only") {
                    if (!fv.is_boolean())
                        throw fqha::ConfigError("config field 'field_matrix.primes_only' must be a boolean");
                } else {
                    throw fqha::ConfigError("unknown config field 'field_matrix." + fk + "'");
                }
            }
        } else {
            throw fqha::ConfigError("unknown config field '" + key + "'");
        }
    }
}

int run(const std::vector<std::string>& suites, const fqha::RunConfig& cfg) {
    auto results = fqha::run_suites(suites, cfg);
    bool all_pass = true;
    for (const auto& r : results) {
        for (const auto& c : r.checks) {
            std::printf("%-9s %-42s %s  observed=%.6g threshold=%.6g\n", r.name.c_str(),
                        c.id.c_str(), c.pass ? "PASS" : "FAIL", c.observed, c.threshold);
            all_pass = all_pass && c.pass;
        }
    }
    std::printf("%s\n", all_pass ? "all checks passed" : "some checks failed");
    return all_pass ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-field harmonic analysis verification suites"};
    app.require_subcommand(0, 1);

    std::string config_path;
    fqha::RunConfig cfg;
    bool exploratory = false;
    app.add_option("--config", config_path, "JSON config file");
    app.add_option("--seed", cfg.seed, "master RNG seed");
    app.add_option("--out-dir", cfg.out_dir, "directory for CSV and summary.json output");
    app.add_flag("--exploratory", exploratory, "run hypothesis-gated checks outside their gates");
    app.add_option("--cap", cfg.q_cap, "largest allowed field size q");

    // subcommand -> suite
    const std::vector<std::pair<std::string, std::string>> commands = {
        {"fields", "classical"},   {"variety", "identity"},   {"incidence", "incidence"},
        {"cone", "cone"},          {"energy", "energy"},      {"extension", "extension"},
        {"distance", "distance"},  {"coverage", "coverage"},  {"exponents", "exponents"},
    };
    std::vector<std::string> selected;
    for (const auto& [name, suite] : commands) {
        auto* sub = app.add_subcommand(name, "run the " + suite + " suite");
        sub->fallthrough();
        sub->callback([&selected, suite = suite] { selected.push_back(suite); });
    }
    auto* all = app.add_subcommand("verify-all", "run every suite");
    all->fallthrough();
    all->callback([&selected] { selected = fqha::suite_names(); });

    CLI11_PARSE(app, argc, argv);

    try {
        std::vector<std::string> suites = selected;
        if (!config_path.empty()) apply_config_file(config_path, cfg, suites);
        cfg.exploratory = cfg.exploratory || exploratory;
        if (suites.empty()) suites = fqha::suite_names();
        return run(suites, cfg);
    } catch (const fqha::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const fqha::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
