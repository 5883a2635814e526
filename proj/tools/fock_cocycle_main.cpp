/**
 * Copyright 2026 The fock-cocycle authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "fock/errors.hpp"
#include "fock/group_element.hpp"
#include "fock/harness.hpp"
#include "fock/json_io.hpp"
#include "fock/rng.hpp"

namespace {

std::map<std::string, double> parse_tol_args(const std::vector<std::string>& raw) {
    std::map<std::string, double> out;
    for (const auto& item : raw) {
        const auto pos = item.find('=');
        if (pos == std::string::npos)
            throw fock::InvalidConfig("--tol expects name=value, got '" + item + "'");
        const std::string name = item.substr(0, pos);
        double value = 0.0;
        try {
            std::size_t used = 0;
            value = std::stod(item.substr(pos + 1), &used);
            if (used != item.size() - pos - 1)
                throw fock::InvalidConfig("trailing characters in '" + item + "'");
        } catch (const std::logic_error&) {
            throw fock::InvalidConfig("--tol value in '" + item + "' is not a number");
        }
        out[name] = value;
    }
    return out;
}

void write_out(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    f << text;
    if (!f.good()) throw fock::Error("could not write '" + path + "'");
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f.good()) throw fock::SerializationError("could not read '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::vector<fock::GroupElement> load_or_draw_elements(const std::string& src,
                                                      fock::GroupKind kind, int m,
                                                      std::uint64_t seed) {
    std::vector<fock::GroupElement> out;
    if (src.rfind("seed:", 0) == 0) {
        int n = 0;
        try {
            std::size_t used = 0;
            n = std::stoi(src.substr(5), &used);
            if (used != src.size() - 5) throw std::invalid_argument("trailing");
        } catch (const std::logic_error&) {
            throw fock::InvalidConfig("--elements seed:N needs an integer N");
        }
        if (n < 1 || n > 64)
            throw fock::InvalidConfig("--elements seed:N needs 1 <= N <= 64");
        fock::Rng rng(seed);
        const fock::RandomKind rk = kind == fock::GroupKind::Symplectic
                                        ? fock::RandomKind::Sp
                                        : fock::RandomKind::SO;
        for (int i = 0; i < n; ++i)
            out.push_back(fock::random_element(rk, m, rng));
        return out;
    }
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_file(src));
    } catch (const nlohmann::json::exception& e) {
        throw fock::SerializationError(std::string("element file is not valid JSON: ") +
                                       e.what());
    }
    if (!j.is_array())
        throw fock::SerializationError("element file must hold a JSON array");
    for (const auto& el : j) out.push_back(fock::deserialize(el.dump()));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Closed-form 2-cocycles of the metaplectic and spin projective "
                 "representations, with property-based verification"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand(
        "run", "Run randomized invariant batteries and emit a JSON-lines report");
    std::string run_suite_name = "all";
    std::string run_out;
    std::string run_format = "jsonl";
    int run_m = 2;
    int run_trials = 100;
    int run_trunc = 20;
    std::uint64_t run_seed = 1;
    std::vector<std::string> run_tols;
    run->add_option("--suite", run_suite_name, "core|boson|fermion|pin|all")
        ->check(CLI::IsMember({"core", "boson", "fermion", "pin", "all"}));
    run->add_option("--m", run_m, "number of modes");
    run->add_option("--trials", run_trials, "trials per suite");
    run->add_option("--seed", run_seed, "master seed");
    run->add_option("--trunc-degree", run_trunc,
                    "truncation degree for oracle comparisons");
    run->add_option("--tol", run_tols,
                    "tolerance override name=value (repeatable); names: "
                    "membership, identity-residual, oracle-comparison, scalarness");
    run->add_option("--out", run_out, "report path (default stdout)");
    run->add_option("--format", run_format, "jsonl|csv")
        ->check(CLI::IsMember({"jsonl", "csv"}));

    auto* table = app.add_subcommand(
        "table", "Pairwise cocycle values for a list of group elements");
    std::string table_kind = "bos";
    std::string table_elements;
    std::string table_out;
    std::string table_format = "csv";
    int table_m = 2;
    std::uint64_t table_seed = 1;
    table->add_option("--kind", table_kind, "bos|fer")
        ->check(CLI::IsMember({"bos", "fer"}))
        ->required();
    table->add_option("--elements", table_elements,
                      "JSON file with an array of elements, or seed:N")
        ->required();
    table->add_option("--m", table_m, "modes when drawing via seed:N");
    table->add_option("--seed", table_seed, "seed when drawing via seed:N");
    table->add_option("--out", table_out, "output path (default stdout)");
    table->add_option("--format", table_format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* replay = app.add_subcommand(
        "replay", "Re-run one recorded trial from a failure record");
    std::string replay_path;
    bool replay_no_validate = false;
    std::vector<std::string> replay_tols;
    replay->add_option("record", replay_path, "failure record path")->required();
    replay->add_flag("--no-validate", replay_no_validate,
                     "skip group-membership validation of stored elements");
    replay->add_option("--tol", replay_tols, "tolerance override name=value");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (run->parsed()) {
            fock::TrialConfig cfg;
            cfg.suite = fock::suite_from_name(run_suite_name);
            cfg.m = run_m;
            cfg.trials = run_trials;
            cfg.seed = run_seed;
            cfg.trunc_degree = run_trunc;
            for (const auto& kv : parse_tol_args(run_tols))
                cfg.tol.set(kv.first, kv.second);

            const fock::SuiteReport rep = fock::run_suite(cfg);
            write_out(run_out, run_format == "csv" ? fock::report_csv(rep)
                                                   : rep.jsonl);
            std::cerr << "trials " << rep.results.size() << ", failures "
                      << rep.failures << ", wall " << rep.wall_ms << " ms\n";
            if (rep.failures > 0) {
                const std::string fpath =
                    run_out.empty() ? "failure.json" : run_out + ".failure.json";
                write_out(fpath,
                          fock::failure_record(rep.results[rep.first_failure], cfg) +
                              "\n");
                std::cerr << "first failing trial recorded at " << fpath << "\n";
                return 1;
            }
            return 0;
        }

        if (table->parsed()) {
            const fock::GroupKind kind = table_kind == "bos"
                                             ? fock::GroupKind::Symplectic
                                             : fock::GroupKind::Orthogonal;
            if (table_m < 1 || table_m > 24)
                throw fock::InvalidConfig("table m must lie in [1, 24]");
            const auto elements =
                load_or_draw_elements(table_elements, kind, table_m, table_seed);
            const auto rows = fock::cocycle_table(kind, elements);
            write_out(table_out, table_format == "json" ? fock::table_json(rows)
                                                        : fock::table_csv(rows));
            return 0;
        }

        if (replay->parsed()) {
            const std::string text = read_file(replay_path);
            const auto overrides = parse_tol_args(replay_tols);
            const fock::TrialResult r =
                fock::replay_record(text, !replay_no_validate, overrides);
            for (const auto& c : r.checks) {
                std::cout << (c.pass ? "[pass] " : "[FAIL] ") << c.name
                          << " residual " << fock::format_double(c.residual)
                          << " tol " << fock::format_double(c.tol) << "\n";
            }
            std::cout << (r.pass ? "PASS" : "FAIL") << "\n";
            return r.pass ? 0 : 1;
        }
    } catch (const fock::InvalidConfig& e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return 2;
    } catch (const fock::SerializationError& e) {
        std::cerr << "serialization error: " << e.what() << "\n";
        return 2;
    } catch (const fock::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
