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

#include <cmath>
#include <numbers>

#include "initfree/qops.hpp"
#include "test_helpers.hpp"

using namespace initfree;
using test::max_abs_diff;

namespace {

FunctionTable random_table(unsigned n, unsigned m, SplitMix64& rng) {
    std::vector<std::uint64_t> v(pow2(n));
    for (auto& x : v) x = rng.below(pow2(m));
    return FunctionTable(n, m, std::move(v));
}

StateVector basis_state(unsigned n, unsigned m, std::uint64_t control, std::uint64_t aux) {
    Amplitudes a(pow2(n + m), Complex{});
    a[control * pow2(m) + aux] = 1.0;
    return StateVector(n, m, std::move(a));
}

} // namespace

TEST_CASE("dot") {
    CHECK(dot(BitString::parse("000"), BitString::parse("110")) == 0);
    CHECK(dot(BitString::parse("101"), BitString::parse("110")) == 1);
    CHECK(dot(BitString::parse("111"), BitString::parse("111")) == 1);
    CHECK_THROWS_AS(dot(BitString::parse("11"), BitString::parse("111")), std::invalid_argument);

    SUBCASE("bilinear, exhaustive up to n = 6") {
        for (unsigned n = 1; n <= 6; ++n) {
            const std::uint64_t size = pow2(n);
            for (std::uint64_t x = 0; x < size; ++x)
                for (std::uint64_t y = 0; y < size; ++y)
                    for (std::uint64_t z = 0; z < size; ++z) {
                        const BitString bx(n, x), by(n, y), bz(n, z);
                        REQUIRE(dot(bx ^ by, bz) == (dot(bx, bz) ^ dot(by, bz)));
                    }
        }
    }
}

TEST_CASE("BitString parsing and bounds") {
    CHECK(BitString::parse("110").value() == 6);
    CHECK(BitString(4, 5).to_string() == "0101");
    CHECK_THROWS_AS(BitString(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(BitString::parse("10a"), std::invalid_argument);
}

TEST_CASE("walsh_hadamard") {
    SUBCASE("|0> on one qubit") {
        const auto s = walsh_hadamard(basis_state(1, 0, 0, 0), Register::control);
        CHECK(s.amps()[0].real() == doctest::Approx(1 / std::sqrt(2.0)));
        CHECK(s.amps()[1].real() == doctest::Approx(1 / std::sqrt(2.0)));
    }
    SUBCASE("|11> gives signs (-1)^{x.y}") {
        const auto s = walsh_hadamard(basis_state(2, 0, 3, 0), Register::control);
        const Amplitudes expected{0.5, -0.5, -0.5, 0.5};
        CHECK(max_abs_diff(s.amps(), expected) < 1e-15);
    }
    SUBCASE("involution on both registers") {
        SplitMix64 rng(21);
        for (int t = 0; t < 10; ++t) {
            const StateVector s = test::random_state(3, 2, rng);
            for (Register r : {Register::control, Register::aux}) {
                const auto back = walsh_hadamard(walsh_hadamard(s, r), r);
                CHECK(max_abs_diff(back.amps(), s.amps()) < 1e-12);
            }
        }
    }
    SUBCASE("acts on the aux register only when asked") {
        const auto s = walsh_hadamard(basis_state(1, 1, 1, 0), Register::aux);
        CHECK(std::abs(s(0, 0)) == 0.0);
        CHECK(s(1, 0).real() == doctest::Approx(1 / std::sqrt(2.0)));
        CHECK(s(1, 1).real() == doctest::Approx(1 / std::sqrt(2.0)));
    }
}

TEST_CASE("qft") {
    SUBCASE("N = 2 matches walsh_hadamard") {
        SplitMix64 rng(4);
        const StateVector s = test::random_state(1, 2, rng);
        CHECK(max_abs_diff(qft(s, Register::control).amps(), walsh_hadamard(s, Register::control).amps()) < 1e-15);
    }
    SUBCASE("|1> with N = 4") {
        const auto s = qft(basis_state(2, 0, 1, 0), Register::control);
        const Amplitudes expected{{0.5, 0.0}, {0.0, 0.5}, {-0.5, 0.0}, {0.0, -0.5}};
        CHECK(max_abs_diff(s.amps(), expected) < 1e-15);
    }
    SUBCASE("preserves inner products") {
        SplitMix64 rng(8);
        for (int t = 0; t < 10; ++t) {
            const StateVector a = test::random_state(4, 1, rng);
            const StateVector b = test::random_state(4, 1, rng);
            for (Register r : {Register::control, Register::aux}) {
                const Complex before = test::inner(a.amps(), b.amps());
                const Complex after = test::inner(qft(a, r).amps(), qft(b, r).amps());
                CHECK(std::abs(before - after) < 1e-12);
            }
        }
    }
    SUBCASE("fast path agrees with the dense loop") {
        SplitMix64 rng(10);
        for (unsigned n = 1; n <= 8; ++n) {
            const StateVector s = test::random_state(n, 2, rng);
            CHECK(max_abs_diff(qft(s, Register::control).amps(), qft_fast(s, Register::control).amps()) < 1e-12);
            CHECK(max_abs_diff(qft(s, Register::aux).amps(), qft_fast(s, Register::aux).amps()) < 1e-12);
        }
    }
}

TEST_CASE("phase_string") {
    SplitMix64 rng(12);
    SUBCASE("w = 0 is the identity") {
        const StateVector s = test::random_state(2, 3, rng);
        CHECK(max_abs_diff(phase_string(s, BitString(3, 0)).amps(), s.amps()) == 0.0);
    }
    SUBCASE("w = 11 on aux |10>") {
        const auto s = phase_string(basis_state(1, 2, 0, 2), BitString::parse("11"));
        CHECK(s(0, 2).real() == doctest::Approx(-1.0));
    }
    SUBCASE("involution and control untouched") {
        for (int t = 0; t < 10; ++t) {
            const StateVector s = test::random_state(2, 3, rng);
            const BitString w(3, rng.below(8));
            CHECK(max_abs_diff(phase_string(phase_string(s, w), w).amps(), s.amps()) < 1e-12);
            CHECK(control_marginal(phase_string(s, w)).max_abs_diff(control_marginal(s)) < 1e-15);
        }
    }
    SUBCASE("width mismatch") {
        CHECK_THROWS_AS(phase_string(basis_state(1, 2, 0, 0), BitString(3, 1)), std::invalid_argument);
    }
}

TEST_CASE("phase_negate") {
    SUBCASE("w = 0 is the negation permutation") {
        for (std::uint64_t k = 0; k < 8; ++k) {
            const auto s = phase_negate(basis_state(1, 3, 1, k), 0, 8);
            CHECK(s(1, (8 - k) % 8).real() == doctest::Approx(1.0));
        }
    }
    SUBCASE("M = 4, w = 1, |1> -> i|3>") {
        const auto s = phase_negate(basis_state(0, 2, 0, 1), 1, 4);
        CHECK(std::abs(s(0, 3) - Complex(0.0, 1.0)) < 1e-15);
    }
    SUBCASE("|0> is fixed for every w") {
        for (std::uint64_t w = 0; w < 8; ++w) {
            const auto s = phase_negate(basis_state(0, 3, 0, 0), w, 8);
            CHECK(std::abs(s(0, 0) - Complex(1.0)) < 1e-15);
        }
    }
    SUBCASE("norm preserved") {
        SplitMix64 rng(14);
        const StateVector s = test::random_state(2, 3, rng);
        CHECK(std::abs(squared_norm(phase_negate(s, 5, 8).amps()) - 1.0) < 1e-12);
    }
    SUBCASE("rejects bad modulus or key") {
        CHECK_THROWS_AS(phase_negate(basis_state(0, 2, 0, 0), 0, 8), std::invalid_argument);
        CHECK_THROWS_AS(phase_negate(basis_state(0, 2, 0, 0), 4, 4), std::invalid_argument);
    }
}

TEST_CASE("oracle_xor") {
    SplitMix64 rng(16);
    SUBCASE("f = 0 is the identity") {
        const StateVector s = test::random_state(2, 2, rng);
        const FunctionTable zero(2, 2, {0, 0, 0, 0});
        CHECK(max_abs_diff(oracle_xor(s, zero).amps(), s.amps()) == 0.0);
    }
    SUBCASE("|1>|0> -> |1>|1> for f(x) = x") {
        const auto s = oracle_xor(basis_state(1, 1, 1, 0), FunctionTable(1, 1, {0, 1}));
        CHECK(s(1, 1).real() == doctest::Approx(1.0));
    }
    SUBCASE("self-inverse") {
        for (int t = 0; t < 10; ++t) {
            const StateVector s = test::random_state(3, 3, rng);
            const FunctionTable f = random_table(3, 3, rng);
            CHECK(max_abs_diff(oracle_xor(oracle_xor(s, f), f).amps(), s.amps()) < 1e-12);
        }
    }
    SUBCASE("table size mismatch") {
        CHECK_THROWS_AS(oracle_xor(basis_state(2, 2, 0, 0), FunctionTable(1, 1, {0, 1})), std::invalid_argument);
    }
}

TEST_CASE("oracle_add") {
    SplitMix64 rng(18);
    SUBCASE("f = 0 is the identity") {
        const StateVector s = test::random_state(2, 2, rng);
        CHECK(max_abs_diff(oracle_add(s, FunctionTable(2, 2, {0, 0, 0, 0}), 4).amps(), s.amps()) == 0.0);
    }
    SUBCASE("|3>|2> -> |3>|1> for f(x) = x, M = 4") {
        const auto s = oracle_add(basis_state(2, 2, 3, 2), FunctionTable(2, 2, {0, 1, 2, 3}), 4);
        CHECK(s(3, 1).real() == doctest::Approx(1.0));
    }
    SUBCASE("adding M - f undoes f") {
        for (int t = 0; t < 10; ++t) {
            const StateVector s = test::random_state(3, 3, rng);
            const FunctionTable f = random_table(3, 3, rng);
            std::vector<std::uint64_t> inv(f.values().size());
            for (std::size_t x = 0; x < inv.size(); ++x) inv[x] = (8 - f(x)) % 8;
            const auto back = oracle_add(oracle_add(s, f, 8), FunctionTable(3, 3, inv), 8);
            CHECK(max_abs_diff(back.amps(), s.amps()) < 1e-12);
        }
    }
    SUBCASE("modulus must match the register") {
        CHECK_THROWS_AS(oracle_add(basis_state(1, 2, 0, 0), FunctionTable(1, 2, {0, 3}), 8), std::invalid_argument);
    }
}

TEST_CASE("sandwich identities") {
    SplitMix64 rng(20);
    SUBCASE("XOR oracle around S_w imprints (-1)^{w.f(x)}") {
        for (unsigned n = 1; n <= 4; ++n) {
            const FunctionTable f = random_table(n, n, rng);
            for (std::uint64_t w = 0; w < pow2(n); ++w) {
                const BitString key(n, w);
                for (std::uint64_t x = 0; x < pow2(n); ++x) {
                    const auto aux = test::random_unit_vector(pow2(n), rng);
                    const StateVector in = make_product_state(BitString(n, x), aux);
                    StateVector s = oracle_xor(in, f);
                    s = phase_string(s, key);
                    s = oracle_xor(s, f);
                    s = phase_string(s, key);
                    const double sign = dot(w, f(x)) ? -1.0 : 1.0;
                    Amplitudes expected(in.amps().begin(), in.amps().end());
                    for (Complex& a : expected) a *= sign;
                    REQUIRE(max_abs_diff(s.amps(), expected) < 1e-12);
                }
            }
        }
    }
    SUBCASE("additive oracle around U_w imprints e^{2 pi i w f(x) / M}") {
        for (unsigned n = 1; n <= 3; ++n) {
            for (unsigned m = 1; m <= 3; ++m) {
                const std::uint64_t M = pow2(m);
                const FunctionTable f = random_table(n, m, rng);
                for (std::uint64_t w = 0; w < M; ++w) {
                    for (std::uint64_t x = 0; x < pow2(n); ++x) {
                        const auto aux = test::random_unit_vector(M, rng);
                        const StateVector in = make_product_state(BitString(n, x), aux);
                        StateVector s = oracle_add(in, f, M);
                        s = phase_negate(s, w, M);
                        s = oracle_add(s, f, M);
                        s = phase_negate(s, w, M);
                        const double angle = 2 * std::numbers::pi * static_cast<double>(w * f(x)) / static_cast<double>(M);
                        const Complex phase = std::polar(1.0, angle);
                        Amplitudes expected(in.amps().begin(), in.amps().end());
                        for (Complex& a : expected) a *= phase;
                        REQUIRE(max_abs_diff(s.amps(), expected) < 1e-12);
                    }
                }
            }
        }
    }
}
