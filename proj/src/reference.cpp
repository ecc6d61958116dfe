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

#include "initfree/reference.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace initfree::reference {

namespace {

constexpr double kFormulaNormTolerance = 1e-8;

/// e^{2 pi i num / den} with the numerator reduced mod den first, so large
/// products of indices never lose precision in the angle.
Complex unit_phase(std::uint64_t num, std::uint64_t den) {
    const double angle =
        2.0 * std::numbers::pi * static_cast<double>(num % den) / static_cast<double>(den);
    return {std::cos(angle), std::sin(angle)};
}

OutcomeDistribution checked(unsigned n, std::vector<double> probs, const char* formula) {
    const double total = pairwise_sum(probs);
    if (std::abs(total - 1.0) > kFormulaNormTolerance) {
        throw std::logic_error(std::string(formula) + ": probabilities sum to " + std::to_string(total));
    }
    return OutcomeDistribution(n, std::move(probs));
}

std::vector<std::uint64_t> coset_representatives(const SimonInstance& inst) {
    std::vector<std::uint64_t> reps;
    for (std::uint64_t x = 0; x < pow2(inst.n); ++x) {
        if (x < (x ^ inst.h.value())) reps.push_back(x);
    }
    return reps;
}

} // namespace

FormulaResult simon_pw_formula(const SimonInstance& inst, const BitString& w) {
    if (w.width() != inst.n) throw std::invalid_argument("simon_pw_formula: key width must equal n");
    const std::uint64_t size = pow2(inst.n);
    const auto reps = coset_representatives(inst);
    const double prefactor = 4.0 / (static_cast<double>(size) * static_cast<double>(size));
    std::vector<double> probs(size, 0.0);
    std::vector<double> terms(reps.size());
    for (std::uint64_t y = 0; y < size; ++y) {
        if (dot(y, inst.h.value()) != 0) continue;
        for (std::size_t i = 0; i < reps.size(); ++i) {
            const int sign = dot(w.value(), inst.f(reps[i])) ^ dot(reps[i], y);
            terms[i] = sign ? -1.0 : 1.0;
        }
        const double s = pairwise_sum(terms);
        probs[y] = prefactor * s * s;
    }
    return {checked(inst.n, std::move(probs), "simon_pw_formula"), "simon P_w(y), coset sum over G/H"};
}

FormulaResult simon_expected_formula(const SimonInstance& inst) {
    const std::uint64_t size = pow2(inst.n);
    std::vector<std::vector<double>> per_key(size);
    for (std::uint64_t w = 0; w < size; ++w) {
        const FormulaResult pw = simon_pw_formula(inst, BitString(inst.n, w));
        per_key[w].assign(pw.distribution.probs().begin(), pw.distribution.probs().end());
    }
    std::vector<double> probs(size);
    std::vector<double> column(size);
    for (std::uint64_t y = 0; y < size; ++y) {
        for (std::uint64_t w = 0; w < size; ++w) column[w] = per_key[w][y];
        probs[y] = pairwise_sum(column) / static_cast<double>(size);
    }
    return {checked(inst.n, std::move(probs), "simon_expected_formula"), "simon key average (1/|G|) sum_w P_w(y)"};
}

FormulaResult period_p_formula(const PeriodicInstance& inst) {
    const std::uint64_t N = inst.domain_size();
    const std::uint64_t T = inst.period;
    std::vector<double> probs(N);
    std::vector<double> outer(T);
    std::vector<Complex> inner;
    for (std::uint64_t y = 0; y < N; ++y) {
        for (std::uint64_t x = 0; x < T; ++x) {
            const std::uint64_t terms = repetition_count(N, T, x);
            inner.assign(terms, Complex{});
            for (std::uint64_t j = 0; j < terms; ++j) inner[j] = unit_phase(y * j * T, N);
            outer[x] = std::norm(pairwise_sum(inner));
        }
        probs[y] = pairwise_sum(outer) / (static_cast<double>(N) * static_cast<double>(N));
    }
    return {checked(inst.n, std::move(probs), "period_p_formula"), "period P(y), A_x-term geometric sums"};
}

FormulaResult period_pw_formula(const PeriodicInstance& inst, std::uint64_t w) {
    const std::uint64_t N = inst.domain_size();
    const std::uint64_t M = inst.modulus();
    const std::uint64_t T = inst.period;
    if (w >= M) throw std::invalid_argument("period_pw_formula: w must be below M");
    std::vector<double> probs(N);
    std::vector<Complex> terms;
    for (std::uint64_t y = 0; y < N; ++y) {
        terms.clear();
        for (std::uint64_t x = 0; x < T; ++x) {
            const Complex key_phase = unit_phase(w * inst.f(x), M);
            for (std::uint64_t j = 0; j < repetition_count(N, T, x); ++j) {
                terms.push_back(unit_phase(y * (x + j * T), N) * key_phase);
            }
        }
        probs[y] = std::norm(pairwise_sum(terms)) / (static_cast<double>(N) * static_cast<double>(N));
    }
    return {checked(inst.n, std::move(probs), "period_pw_formula"), "period P_w(y), double sum with key phase"};
}

FormulaResult period_expected_formula(const PeriodicInstance& inst) {
    const std::uint64_t N = inst.domain_size();
    const std::uint64_t M = inst.modulus();
    std::vector<std::vector<double>> per_key(M);
    for (std::uint64_t w = 0; w < M; ++w) {
        const FormulaResult pw = period_pw_formula(inst, w);
        per_key[w].assign(pw.distribution.probs().begin(), pw.distribution.probs().end());
    }
    std::vector<double> probs(N);
    std::vector<double> column(M);
    for (std::uint64_t y = 0; y < N; ++y) {
        for (std::uint64_t w = 0; w < M; ++w) column[w] = per_key[w][y];
        probs[y] = pairwise_sum(column) / static_cast<double>(M);
    }
    return {checked(inst.n, std::move(probs), "period_expected_formula"), "period key average (1/M) sum_w P_w(y)"};
}

OutcomeDistribution simon_uniform_on_orthogonal(const SimonInstance& inst) {
    const std::uint64_t size = pow2(inst.n);
    std::vector<double> probs(size, 0.0);
    for (std::uint64_t y = 0; y < size; ++y) {
        if (dot(y, inst.h.value()) == 0) probs[y] = 2.0 / static_cast<double>(size);
    }
    return OutcomeDistribution(inst.n, std::move(probs));
}

} // namespace initfree::reference
