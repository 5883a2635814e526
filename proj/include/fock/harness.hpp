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

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fock/complex_structure.hpp"
#include "fock/group_element.hpp"

namespace fock {

// Named tolerances with their defaults. Values must be >= 0; zero is
// accepted (it makes every floating-point check fail, which exercises the
// plumbing), negative values are rejected as invalid configuration.
struct ToleranceSet {
    double membership = 1e-10;
    double identity_residual = 1e-9;
    double oracle_comparison = 1e-8;
    double scalarness = 1e-10;

    void set(const std::string& name, double value);
    double get(const std::string& name) const;
    static const std::vector<std::string>& names();
};

enum class Suite { Core, Boson, Fermion, Pin, All };

Suite suite_from_name(const std::string& name);
std::string suite_name(Suite s);

struct TrialConfig {
    Suite suite = Suite::All;
    int m = 2;
    int trials = 100;
    std::uint64_t seed = 1;
    int trunc_degree = 20;
    ToleranceSet tol;

    void validate() const;  // throws InvalidConfig
};

struct CheckResult {
    std::string name;
    double residual = 0.0;
    double tol = 0.0;
    bool pass = false;
};

// Everything a trial consumes. Drawn deterministically from the trial seed,
// or reloaded from a failure record for replay.
struct TrialInputs {
    int m = 0;
    std::vector<GroupElement> elements;
    std::vector<CMat> labels;
    std::vector<Vec> vectors;
};

struct TrialResult {
    std::string suite;
    int trial = 0;
    int m = 0;
    std::uint64_t trial_seed = 0;
    std::vector<CheckResult> checks;
    bool pass = true;
    TrialInputs inputs;
};

// Deterministic input draw; resamples internally until the battery's
// stratum and resolvent preconditions hold.
TrialInputs draw_trial_inputs(Suite suite, int m, std::uint64_t trial_seed);

// One invariant battery on explicit inputs.
std::vector<CheckResult> run_battery(Suite suite, const TrialInputs& inputs,
                                     const TrialConfig& cfg);

TrialResult run_trial(Suite suite, int index, const TrialConfig& cfg);

struct SuiteReport {
    std::vector<TrialResult> results;
    int failures = 0;
    int first_failure = -1;  // index into results
    std::string jsonl;       // byte-deterministic JSON-lines report
    double wall_ms = 0.0;    // not part of the report bytes
};

// Runs all trials of the configured suite(s); trials are independent and
// run on a pool capped by FOCK_COCYCLE_THREADS, with the report assembled
// in trial order so parallel and serial runs emit identical bytes.
SuiteReport run_suite(const TrialConfig& cfg);

// Thread count: FOCK_COCYCLE_THREADS when set, hardware concurrency
// otherwise, at least 1.
int thread_cap();

// Lossy flat CSV view of a report.
std::string report_csv(const SuiteReport& report);

// Self-contained record of one trial (inputs serialized in full) for replay.
std::string failure_record(const TrialResult& r, const TrialConfig& cfg);

// Re-executes exactly one recorded trial. `validate` gates the membership
// check when deserializing the stored elements.
TrialResult replay_record(const std::string& json_text, bool validate,
                          const std::map<std::string, double>& tol_overrides);

struct TableRow {
    int i = 0;
    int j = 0;
    cplx c;
    double arg = 0.0;
    std::string status;  // "ok" or "undefined"
};

// Pairwise cocycle table; stratum violations become "undefined" rows.
std::vector<TableRow> cocycle_table(GroupKind kind,
                                    const std::vector<GroupElement>& elements);
std::string table_csv(const std::vector<TableRow>& rows);
std::string table_json(const std::vector<TableRow>& rows);

}  // namespace fock
