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

#include <cmath>
#include <complex>
#include <cstdlib>
#include <limits>
#include <string>

#include <nlohmann/json.hpp>

#include "doctest.h"

#include "fock/boson_space.hpp"
#include "fock/errors.hpp"
#include "fock/group_element.hpp"
#include "fock/harness.hpp"
#include "fock/rng.hpp"

using namespace fock;

namespace {

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

GroupElement stratum_zero_so(int m, Rng& rng) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        GroupElement g = random_element(RandomKind::SO, m, rng);
        if (stratum_k(g, 1e-6) == 0) return g;
    }
    throw Error("no top-stratum draw");
}

}  // namespace

TEST_CASE("tolerance sets are validated by name") {
    ToleranceSet tol;
    CHECK(ToleranceSet::names().size() == 4);
    for (const std::string& name : ToleranceSet::names()) {
        CHECK(tol.get(name) > 0.0);
        tol.set(name, 0.5);
        CHECK(tol.get(name) == 0.5);
        tol.set(name, 0.0);  // zero is allowed
    }
    CHECK_THROWS_AS(tol.set("bogus", 1.0), InvalidConfig);
    CHECK_THROWS_AS((void)tol.get("bogus"), InvalidConfig);
    CHECK_THROWS_AS(tol.set("membership", -1.0), InvalidConfig);
    CHECK_THROWS_AS(
        tol.set("membership", std::numeric_limits<double>::quiet_NaN()),
        InvalidConfig);
}

TEST_CASE("suite names round-trip and reject unknowns") {
    for (Suite s : {Suite::Core, Suite::Boson, Suite::Fermion, Suite::Pin,
                    Suite::All}) {
        CHECK(suite_from_name(suite_name(s)) == s);
    }
    CHECK_THROWS_AS(suite_from_name("bogus"), InvalidConfig);
}

TEST_CASE("trial configurations are range-checked") {
    TrialConfig cfg;
    CHECK_NOTHROW(cfg.validate());

    TrialConfig bad = cfg;
    bad.m = 0;
    CHECK_THROWS_AS(bad.validate(), InvalidConfig);
    bad = cfg;
    bad.trials = 0;
    CHECK_THROWS_AS(bad.validate(), InvalidConfig);
    bad = cfg;
    bad.trunc_degree = 1;
    CHECK_THROWS_AS(bad.validate(), InvalidConfig);
    bad = cfg;
    bad.trunc_degree = 61;
    CHECK_THROWS_AS(bad.validate(), InvalidConfig);

    // Mode caps depend on the suite's densest representation.
    bad = cfg;
    bad.suite = Suite::Boson;
    bad.m = 7;
    CHECK_THROWS_AS(bad.validate(), InvalidConfig);
    bad.suite = Suite::Fermion;
    bad.m = 11;
    CHECK_THROWS_AS(bad.validate(), InvalidConfig);
    bad.suite = Suite::Core;
    bad.m = 12;
    CHECK_NOTHROW(bad.validate());
}

TEST_CASE("input draws and trials are deterministic") {
    const TrialInputs a = draw_trial_inputs(Suite::Core, 2, 1234567);
    const TrialInputs b = draw_trial_inputs(Suite::Core, 2, 1234567);
    REQUIRE(a.elements.size() == b.elements.size());
    for (size_t i = 0; i < a.elements.size(); ++i)
        CHECK(a.elements[i].matrix() == b.elements[i].matrix());
    REQUIRE(a.vectors.size() == b.vectors.size());
    for (size_t i = 0; i < a.vectors.size(); ++i)
        CHECK(a.vectors[i] == b.vectors[i]);

    TrialConfig cfg;
    cfg.suite = Suite::Core;
    cfg.m = 2;
    const TrialResult r1 = run_trial(Suite::Core, 3, cfg);
    const TrialResult r2 = run_trial(Suite::Core, 3, cfg);
    REQUIRE(r1.checks.size() == r2.checks.size());
    for (size_t i = 0; i < r1.checks.size(); ++i) {
        CHECK(r1.checks[i].name == r2.checks[i].name);
        CHECK(r1.checks[i].residual == r2.checks[i].residual);
    }
    CHECK(r1.pass);
}

TEST_CASE("reports are byte-identical across thread counts") {
    TrialConfig cfg;
    cfg.suite = Suite::Core;
    cfg.m = 2;
    cfg.trials = 6;
    cfg.seed = 7;

    setenv("FOCK_COCYCLE_THREADS", "1", 1);
    CHECK(thread_cap() == 1);
    const SuiteReport serial = run_suite(cfg);
    setenv("FOCK_COCYCLE_THREADS", "4", 1);
    CHECK(thread_cap() == 4);
    const SuiteReport parallel = run_suite(cfg);
    unsetenv("FOCK_COCYCLE_THREADS");

    CHECK(serial.failures == 0);
    CHECK(serial.jsonl == parallel.jsonl);
    CHECK(count_lines(serial.jsonl) == cfg.trials + 2);
    CHECK(serial.jsonl.rfind("{\"config\":", 0) == 0);
    CHECK(serial.jsonl.find("\"summary\"") != std::string::npos);

    const std::string csv = report_csv(serial);
    CHECK(csv.rfind("suite,trial,m,seed,check,residual,tol,pass\n", 0) == 0);
    CHECK(count_lines(csv) ==
          1 + cfg.trials * static_cast<int>(serial.results[0].checks.size()));
}

TEST_CASE("zero tolerances force reported failures") {
    TrialConfig cfg;
    cfg.suite = Suite::Core;
    cfg.m = 1;
    cfg.trials = 2;
    for (const std::string& name : ToleranceSet::names())
        cfg.tol.set(name, 0.0);

    const SuiteReport rep = run_suite(cfg);
    CHECK(rep.failures > 0);
    CHECK(rep.first_failure == 0);
    CHECK(rep.jsonl.find("\"pass\":false") != std::string::npos);
}

TEST_CASE("failure records replay to the same outcome") {
    TrialConfig cfg;
    cfg.suite = Suite::Fermion;
    cfg.m = 2;
    const TrialResult r = run_trial(Suite::Fermion, 0, cfg);
    REQUIRE(r.pass);

    const std::string rec = failure_record(r, cfg);
    const TrialResult replayed = replay_record(rec, true, {});
    CHECK(replayed.pass);
    REQUIRE(replayed.checks.size() == r.checks.size());
    for (size_t i = 0; i < r.checks.size(); ++i) {
        CHECK(replayed.checks[i].name == r.checks[i].name);
        CHECK(replayed.checks[i].residual == r.checks[i].residual);
    }

    // Tolerance overrides apply on top of the recorded ones.
    const TrialResult forced =
        replay_record(rec, true, {{"identity-residual", 0.0}});
    CHECK(!forced.pass);
}

TEST_CASE("tampered records are rejected unless validation is waived") {
    TrialConfig cfg;
    cfg.suite = Suite::Core;
    cfg.m = 2;
    const TrialResult r = run_trial(Suite::Core, 1, cfg);
    const std::string rec = failure_record(r, cfg);

    nlohmann::json doc = nlohmann::json::parse(rec);
    REQUIRE(doc.contains("elements"));
    REQUIRE(!doc["elements"].empty());
    nlohmann::json el = doc["elements"][0];
    el["matrix"][0][0] = el["matrix"][0][0].get<double>() + 1e-3;
    doc["elements"][0] = el;
    const std::string tampered = doc.dump();

    CHECK_THROWS_AS(replay_record(tampered, true, {}), SerializationError);
    const TrialResult loose = replay_record(tampered, false, {});
    CHECK(!loose.pass);

    CHECK_THROWS_AS(replay_record("{\"foo\":1}", true, {}), SerializationError);
    CHECK_THROWS_AS(replay_record("not json", true, {}), SerializationError);
}

TEST_CASE("cocycle tables flag undefined pairs") {
    Rng rng(701);
    OneParticleSpace V(2);
    std::vector<GroupElement> so;
    so.push_back(stratum_zero_so(2, rng));
    so.push_back(stratum_zero_so(2, rng));
    so.push_back(GroupElement(GroupKind::Orthogonal,
                              reflection_matrix(V, random_unit_vector(4, rng))));

    const std::vector<TableRow> rows = cocycle_table(GroupKind::Orthogonal, so);
    REQUIRE(rows.size() == 9);
    int undefined = 0;
    for (const TableRow& row : rows) {
        if (row.status == "undefined") {
            ++undefined;
            const bool involves_reflection = row.i == 2 || row.j == 2;
            CHECK(involves_reflection);
        } else {
            CHECK(row.status == "ok");
            CHECK(std::abs(std::abs(row.c) - 1.0) < 1e-10);
        }
    }
    CHECK(undefined >= 5);  // every pair touching the reflection

    const std::string csv = table_csv(rows);
    CHECK(csv.rfind("i,j,re,im,arg,status\n", 0) == 0);
    CHECK(count_lines(csv) == 10);
    const nlohmann::json parsed = nlohmann::json::parse(table_json(rows));
    CHECK(parsed.is_array());
    CHECK(parsed.size() == 9);

    // Symplectic elements always pair, and rows recompute exactly.
    Rng rng2(702);
    std::vector<GroupElement> sp;
    sp.push_back(random_element(RandomKind::Sp, 2, rng2));
    sp.push_back(random_element(RandomKind::Sp, 2, rng2));
    for (const TableRow& row : cocycle_table(GroupKind::Symplectic, sp)) {
        CHECK(row.status == "ok");
        const cplx direct = cocycle_b(sp[row.i], sp[row.j]).value;
        CHECK(std::abs(row.c - direct) < 1e-12);
    }

    // The identity alone gives a 1x1 table with value 1.
    std::vector<GroupElement> only_id;
    only_id.push_back(GroupElement(GroupKind::Symplectic, Mat::Identity(4, 4)));
    const std::vector<TableRow> id_rows =
        cocycle_table(GroupKind::Symplectic, only_id);
    REQUIRE(id_rows.size() == 1);
    CHECK(std::abs(id_rows[0].c - cplx(1.0, 0.0)) < 1e-12);

    // Two unitaries give an all-ones fermionic table.
    std::vector<GroupElement> us;
    us.push_back(random_element(RandomKind::U_J, 2, rng2));
    us.push_back(random_element(RandomKind::U_J, 2, rng2));
    for (const TableRow& row : cocycle_table(GroupKind::Orthogonal, us)) {
        CHECK(row.status == "ok");
        CHECK(std::abs(row.c - cplx(1.0, 0.0)) < 1e-10);
    }

    // Mixed kinds or sizes are configuration errors.
    std::vector<GroupElement> mixed = sp;
    mixed.push_back(so[0]);
    CHECK_THROWS_AS(cocycle_table(GroupKind::Symplectic, mixed), InvalidConfig);
    std::vector<GroupElement> sizes;
    sizes.push_back(stratum_zero_so(2, rng2));
    sizes.push_back(stratum_zero_so(3, rng2));
    CHECK_THROWS_AS(cocycle_table(GroupKind::Orthogonal, sizes), InvalidConfig);
}

TEST_CASE("every suite runs clean at small sizes") {
    TrialConfig cfg;
    cfg.m = 2;
    cfg.trials = 2;
    cfg.seed = 99;
    cfg.trunc_degree = 14;
    for (Suite s : {Suite::Boson, Suite::Fermion, Suite::Pin}) {
        cfg.suite = s;
        const SuiteReport rep = run_suite(cfg);
        CHECK(rep.failures == 0);
        CHECK(count_lines(rep.jsonl) == cfg.trials + 2);
    }
    cfg.suite = Suite::All;
    const SuiteReport rep = run_suite(cfg);
    CHECK(rep.failures == 0);
    CHECK(count_lines(rep.jsonl) == 4 * cfg.trials + 2);
}
