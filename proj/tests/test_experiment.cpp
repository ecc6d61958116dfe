// Copyright 2026 The initfree Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <string>

#include "initfree/experiment.hpp"

using namespace initfree;

namespace {

std::string field_of(const ExperimentConfig& c) {
    try {
        validate(c);
    } catch (const ConfigError& e) {
        return e.field();
    }
    return "";
}

ExperimentConfig simon_config(unsigned n) {
    ExperimentConfig c;
    c.problem = Problem::simon;
    c.n = n;
    return c;
}

ExperimentConfig period_config(unsigned n, unsigned m) {
    ExperimentConfig c;
    c.problem = Problem::period;
    c.n = n;
    c.m = m;
    return c;
}

nlohmann::json strip_time(nlohmann::json j) {
    j.erase("wall_time_seconds");
    return j;
}

const std::filesystem::path kFixtures = INITFREE_FIXTURE_DIR;

} // namespace

TEST_CASE("validate") {
    CHECK(field_of(simon_config(4)).empty());
    CHECK(field_of(simon_config(1)) == "n");
    CHECK(field_of(simon_config(13)) == "n");
    {
        auto c = period_config(4, 11);
        c.mode = AveragingMode::sampled;
        CHECK(field_of(c).empty());
    }
    {
        auto c = simon_config(3);
        c.hidden = BitString(3, 0);
        CHECK(field_of(c) == "hidden");
        c.hidden = BitString(2, 1);
        CHECK(field_of(c) == "hidden");
    }
    {
        auto c = simon_config(3);
        c.period = 2;
        CHECK(field_of(c) == "period");
    }
    CHECK(field_of(period_config(4, 0)) == "m");
    CHECK(field_of(period_config(4, 11)) == "m");
    {
        auto c = period_config(4, 2);
        c.period = 5;
        CHECK(field_of(c) == "period");
        c.period = 4;
        CHECK(field_of(c).empty());
    }
    {
        auto c = period_config(2, 3);
        c.period = 4;
        CHECK(field_of(c) == "period");
    }
    {
        auto c = simon_config(3);
        c.trials = 0;
        CHECK(field_of(c) == "trials");
    }
    {
        auto c = simon_config(3);
        c.aux = AuxKind::random_mixed;
        c.aux_rank = 9;
        CHECK(field_of(c) == "aux");
    }
    CHECK_THROWS_AS(parse_aux_kind("warm"), ConfigError);
    CHECK(parse_aux_kind("random-pure") == AuxKind::random_pure);
    CHECK(parse_mode("sampled") == AveragingMode::sampled);
    CHECK(parse_problem("period") == Problem::period);
}

TEST_CASE("make_aux_ensemble") {
    SplitMix64 rng(3);
    CHECK(make_aux_ensemble(AuxKind::zero, 3, 2, rng).size() == 1);
    CHECK(make_aux_ensemble(AuxKind::random_pure, 3, 2, rng).size() == 1);
    CHECK(make_aux_ensemble(AuxKind::maximally_mixed, 3, 2, rng).size() == 8);
    const auto mixed = make_aux_ensemble(AuxKind::random_mixed, 3, 3, rng);
    CHECK(mixed.size() == 3);
    double total = 0.0;
    for (const auto& m : mixed.members()) total += m.weight;
    CHECK(total == doctest::Approx(1.0));
}

TEST_CASE("run is deterministic apart from wall time") {
    for (auto c : {simon_config(4), period_config(5, 3)}) {
        c.trials = 5;
        c.seed = 99;
        c.aux = AuxKind::random_mixed;
        const auto a = run(c);
        const auto b = run(c);
        CHECK(dump_report(strip_time(a.envelope)) == dump_report(strip_time(b.envelope)));
        CHECK(a.breaches.empty());
        CHECK(a.envelope.at("trials").size() == 5);
        c.seed = 100;
        CHECK(dump_report(strip_time(run(c).envelope)) != dump_report(strip_time(a.envelope)));
    }
}

TEST_CASE("run envelope") {
    auto c = period_config(6, 4);
    c.period = 5;
    c.trials = 20;
    c.seed = 7;
    const auto r = run(c);
    const auto& env = r.envelope;
    CHECK(env.at("tool") == "initfree");
    CHECK(env.at("version") == kToolVersion);
    CHECK(env.at("command") == "period");
    CHECK(env.at("config").at("period") == 5);
    CHECK(env.at("aggregate").at("success_rate").get<double>() >= 0.9);
    CHECK(env.at("aggregate").at("max_distribution_error").get<double>() < kExactnessGate);
    CHECK(env.at("trials").at(0).contains("good_mass_original"));
    CHECK(env.contains("wall_time_seconds"));
    CHECK(nlohmann::json::parse(dump_report(env)) == env);
    CHECK_FALSE(render_table(env).empty());

    SUBCASE("sampled mode reports total variation") {
        auto s = simon_config(4);
        s.mode = AveragingMode::sampled;
        s.samples = 20000;
        const auto sampled = run(s);
        const auto tv = sampled.envelope.at("trials").at(0).at("sampled_total_variation").get<double>();
        CHECK(tv <= 0.05);
    }
}

TEST_CASE("compare") {
    SUBCASE("simon") {
        auto c = simon_config(3);
        c.trials = 3;
        const auto r = compare(c);
        CHECK(r.breaches.empty());
        for (const auto& t : r.envelope.at("trials")) {
            const auto& d = t.at("max_abs_diff");
            CHECK(d.at("original_channel").get<double>() < kExactnessGate);
            CHECK(d.at("original_formula").get<double>() < kExactnessGate);
            CHECK(d.at("channel_formula").get<double>() < kExactnessGate);
            CHECK(t.at("original").size() == 8);
        }
    }
    SUBCASE("period") {
        auto c = period_config(4, 3);
        c.period = 3;
        const auto r = compare(c);
        CHECK(r.breaches.empty());
        CHECK(r.envelope.at("trials").at(0).at("original").at(0).get<double>() == doctest::Approx(0.3359375));
    }
    SUBCASE("sampled mode is rejected") {
        auto c = simon_config(3);
        c.mode = AveragingMode::sampled;
        CHECK_THROWS_AS(compare(c), ConfigError);
    }
}

TEST_CASE("fixtures") {
    SUBCASE("simon fixture fixes h") {
        auto c = simon_config(3);
        c.function_file = kFixtures / "simon_n3_h101.json";
        c.trials = 4;
        const auto r = run(c);
        CHECK(r.breaches.empty());
        for (const auto& t : r.envelope.at("trials")) CHECK(t.at("run").at("recovered_h") == "101");
        c.hidden = BitString::parse("011");
        CHECK(field_of(c) == "hidden");
    }
    SUBCASE("period fixture fixes T") {
        auto c = period_config(4, 2);
        c.function_file = kFixtures / "period_n4_T3.json";
        c.trials = 4;
        const auto r = run(c);
        CHECK(r.breaches.empty());
        CHECK(r.envelope.at("aggregate").at("success_rate").get<double>() == 1.0);
        c.n = 5;
        CHECK(field_of(c) == "function-file");
    }
    SUBCASE("missing file") {
        auto c = simon_config(3);
        c.function_file = kFixtures / "absent.json";
        CHECK(field_of(c) == "function-file");
    }
}
