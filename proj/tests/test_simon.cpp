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

#include "initfree/simon.hpp"
#include "test_helpers.hpp"

using namespace initfree;

namespace {

double uniform_on_orthogonal_gap(const SimonInstance& inst, const OutcomeDistribution& d) {
    double worst = 0.0;
    const double level = 2.0 / static_cast<double>(pow2(inst.n));
    for (std::uint64_t y = 0; y < pow2(inst.n); ++y) {
        const double want = dot(y, inst.h.value()) == 0 ? level : 0.0;
        worst = std::max(worst, std::abs(d[y] - want));
    }
    return worst;
}

} // namespace

TEST_CASE("simon_original") {
    SUBCASE("n = 2, h = 11 splits evenly over 00 and 11") {
        const auto inst = simon_from_table(FunctionTable(2, 2, {1, 2, 2, 1}));
        const auto d = simon_original(inst);
        CHECK(d[0] == doctest::Approx(0.5));
        CHECK(d[3] == doctest::Approx(0.5));
        CHECK(d[1] == 0.0);
        CHECK(d[2] == 0.0);
    }
    SUBCASE("support lies in the orthogonal subgroup, exhaustively to n = 5") {
        SplitMix64 rng(21);
        for (unsigned n = 2; n <= 5; ++n) {
            for (std::uint64_t h = 1; h < pow2(n); ++h) {
                const auto inst = make_simon(n, BitString(n, h), rng);
                CHECK(uniform_on_orthogonal_gap(inst, simon_original(inst)) < 1e-12);
            }
        }
    }
}

TEST_CASE("simon_initfree_fixed_w") {
    const auto inst = simon_from_table(FunctionTable(2, 2, {1, 2, 2, 1}));
    SUBCASE("w = 0 is a point mass on 00") {
        const auto run = simon_initfree_fixed_w(inst, Amplitudes{1.0, 0.0, 0.0, 0.0}, BitString(2, 0));
        CHECK(run.distribution[0] == doctest::Approx(1.0));
        CHECK(run.aux_fidelity == doctest::Approx(1.0));
    }
    SUBCASE("w = 01 flips every coset phase into 11") {
        const auto run = simon_initfree_fixed_w(inst, Amplitudes{1.0, 0.0, 0.0, 0.0}, BitString(2, 1));
        CHECK(run.distribution[3] == doctest::Approx(1.0));
    }
    SUBCASE("arbitrary aux states come back intact for every key") {
        SplitMix64 rng(23);
        const auto random = make_simon(4, std::nullopt, rng);
        for (int trial = 0; trial < 5; ++trial) {
            const auto aux = test::random_unit_vector(16, rng);
            for (std::uint64_t w = 0; w < 16; ++w) {
                const auto run = simon_initfree_fixed_w(random, aux, BitString(4, w));
                CHECK(run.aux_fidelity == doctest::Approx(1.0).epsilon(1e-12));
                CHECK(equal_up_to_phase(run.aux_out, aux));
                for (std::uint64_t y = 0; y < 16; ++y)
                    if (dot(y, random.h.value()) != 0) CHECK(run.distribution[y] == 0.0);
            }
        }
    }
    SUBCASE("key width must match the aux register") {
        CHECK_THROWS_AS(simon_initfree_fixed_w(inst, Amplitudes{1.0, 0.0, 0.0, 0.0}, BitString(3, 1)),
                        std::invalid_argument);
    }
}

TEST_CASE("simon_channel matches the original") {
    SplitMix64 rng(29);
    for (int trial = 0; trial < 20; ++trial) {
        const auto inst = make_simon(4, std::nullopt, rng);
        const auto original = simon_original(inst);
        CHECK(simon_channel(inst, AuxEnsemble::maximally_mixed(4), ExactAveraging{}).max_abs_diff(original) < 1e-10);
        CHECK(simon_channel(inst, AuxEnsemble::basis(4, 0), ExactAveraging{}).max_abs_diff(original) < 1e-10);
        const auto pure = AuxEnsemble::pure(test::random_unit_vector(16, rng));
        CHECK(simon_channel(inst, pure, ExactAveraging{}).max_abs_diff(original) < 1e-10);
    }
    SUBCASE("sampled averaging lands within 0.05 total variation") {
        const auto inst = make_simon(4, std::nullopt, rng);
        const auto sampled = simon_channel(inst, AuxEnsemble::maximally_mixed(4), SampledAveraging{10000, 31});
        CHECK(sampled.total_variation(simon_original(inst)) <= 0.05);
    }
}

TEST_CASE("simon_channel_density") {
    SplitMix64 rng(37);
    for (unsigned n = 2; n <= 4; ++n) {
        const auto inst = make_simon(n, std::nullopt, rng);
        const AuxEnsemble ens(n, {{0.6, test::random_unit_vector(pow2(n), rng)},
                                  {0.4, test::random_unit_vector(pow2(n), rng)}});
        const auto joint = simon_channel_density(inst, ens);
        const auto marginal = control_marginal(joint, n, n);
        CHECK(marginal.max_abs_diff(simon_original(inst)) < 1e-10);
        const auto rho_b = ensemble_to_density(ens);
        for (std::uint64_t y = 0; y < pow2(n); ++y) {
            if (marginal[y] <= 1e-12) continue;
            CHECK(trace_distance(conditional_aux_density(joint, n, n, y), rho_b) < 1e-10);
        }
    }
}

TEST_CASE("Gf2System and solve_hidden_shift") {
    SUBCASE("{110, 101} leaves 111") {
        Gf2System sys(3);
        CHECK(sys.add(BitString::parse("110")));
        CHECK(sys.add(BitString::parse("101")));
        CHECK_FALSE(sys.add(BitString::parse("011")));
        CHECK(sys.rank() == 2);
        CHECK(solve_hidden_shift(sys) == BitString::parse("111"));
    }
    SUBCASE("{00} is not enough") {
        Gf2System sys(2);
        CHECK_FALSE(sys.add(BitString::parse("00")));
        CHECK_FALSE(solve_hidden_shift(sys).has_value());
    }
    SUBCASE("{11} gives 11") {
        Gf2System sys(2);
        sys.add(BitString::parse("11"));
        CHECK(solve_hidden_shift(sys) == BitString::parse("11"));
    }
    SUBCASE("full rank is a contradiction") {
        Gf2System sys(2);
        sys.add(BitString::parse("10"));
        sys.add(BitString::parse("01"));
        CHECK_THROWS_AS(solve_hidden_shift(sys), std::domain_error);
    }
    SUBCASE("random rank n - 1 systems agree with a brute-force nullspace") {
        SplitMix64 rng(41);
        for (int trial = 0; trial < 50; ++trial) {
            const unsigned n = 2 + static_cast<unsigned>(rng.below(7));
            const std::uint64_t h = 1 + rng.below(pow2(n) - 1);
            Gf2System sys(n);
            while (sys.rank() < n - 1) {
                const std::uint64_t y = rng.below(pow2(n));
                if (dot(y, h) == 0) sys.add(BitString(n, y));
            }
            std::vector<std::uint64_t> kernel;
            for (std::uint64_t x = 1; x < pow2(n); ++x) {
                bool ok = true;
                for (const auto& r : sys.rows()) ok = ok && dot(x, r.value()) == 0;
                if (ok) kernel.push_back(x);
            }
            REQUIRE(kernel.size() == 1);
            CHECK(kernel.front() == h);
            CHECK(solve_hidden_shift(sys)->value() == h);
        }
    }
}

TEST_CASE("simon_end_to_end") {
    SplitMix64 rng(43);
    int successes = 0;
    for (std::uint64_t t = 0; t < 100; ++t) {
        SplitMix64 trial = rng.split(t);
        SplitMix64 instance_rng = trial.split(0);
        SplitMix64 run_rng = trial.split(2);
        const auto inst = make_simon(4, std::nullopt, instance_rng);
        const auto report = simon_end_to_end(inst, AuxEnsemble::maximally_mixed(4), run_rng, 64);
        if (report.success) {
            ++successes;
            CHECK(*report.recovered_h == inst.h);
        }
        CHECK(report.aux_recovery_distance < 1e-10);
        for (std::uint64_t y = 0; y < 16; ++y)
            if (dot(y, inst.h.value()) != 0) CHECK(report.distribution[y] == 0.0);
    }
    CHECK(successes >= 99);

    SUBCASE("report serializes") {
        SplitMix64 r(5);
        const auto inst = make_simon(3, BitString::parse("101"), r);
        const nlohmann::json j = simon_end_to_end(inst, AuxEnsemble::basis(3, 0), r, 64);
        CHECK(j.at("instance_id") == "simon-n3-h101");
        CHECK(j.at("mode") == "initfree-channel");
        CHECK(j.contains("recovered_h"));
    }
}
