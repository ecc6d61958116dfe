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

#include "initfree/qops.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace initfree {

namespace {

/// e^{2 pi i k / N} for k in [0, N). Angles are reduced before evaluation so
/// entries are symmetric to the last bit.
std::vector<Complex> roots_of_unity(std::uint64_t n) {
    std::vector<Complex> tw(n);
    for (std::uint64_t k = 0; k < n; ++k) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
        tw[k] = {std::cos(angle), std::sin(angle)};
    }
    // Exact values on the axes.
    if (n % 4 == 0) {
        tw[n / 4] = {0.0, 1.0};
        tw[3 * n / 4] = {0.0, -1.0};
    }
    if (n % 2 == 0) tw[n / 2] = {-1.0, 0.0};
    return tw;
}

/// Applies `kernel(std::vector<Complex>&)` to every fiber of the selected
/// register, holding the other register's index fixed.
template <typename Kernel>
StateVector apply_on_register(const StateVector& state, Register reg, Kernel&& kernel) {
    const std::uint64_t rows = state.control_dim();
    const std::uint64_t cols = state.aux_dim();
    Amplitudes out(state.amps().begin(), state.amps().end());
    if (reg == Register::control) {
        std::vector<Complex> fiber(rows);
        for (std::uint64_t a = 0; a < cols; ++a) {
            for (std::uint64_t c = 0; c < rows; ++c) fiber[c] = out[c * cols + a];
            kernel(fiber);
            for (std::uint64_t c = 0; c < rows; ++c) out[c * cols + a] = fiber[c];
        }
    } else {
        std::vector<Complex> fiber(cols);
        for (std::uint64_t c = 0; c < rows; ++c) {
            std::copy_n(out.begin() + static_cast<std::ptrdiff_t>(c * cols), cols, fiber.begin());
            kernel(fiber);
            std::copy(fiber.begin(), fiber.end(), out.begin() + static_cast<std::ptrdiff_t>(c * cols));
        }
    }
    return StateVector::from_unitary_image(state.n_control(), state.n_aux(), std::move(out));
}

void hadamard_in_place(std::vector<Complex>& v) {
    const std::size_t n = v.size();
    for (std::size_t half = 1; half < n; half <<= 1) {
        for (std::size_t base = 0; base < n; base += 2 * half) {
            for (std::size_t i = base; i < base + half; ++i) {
                const Complex a = v[i];
                const Complex b = v[i + half];
                v[i] = a + b;
                v[i + half] = a - b;
            }
        }
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (Complex& a : v) a *= scale;
}

void fft_in_place(std::vector<Complex>& v, const std::vector<Complex>& tw) {
    const std::size_t n = v.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(v[i], v[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t stride = n / len;
        for (std::size_t base = 0; base < n; base += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                const Complex u = v[base + k];
                const Complex t = v[base + k + len / 2] * tw[k * stride];
                v[base + k] = u + t;
                v[base + k + len / 2] = u - t;
            }
        }
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (Complex& a : v) a *= scale;
}

void check_table(const StateVector& state, const FunctionTable& f, const char* who) {
    if (f.domain_bits() != state.n_control()) {
        throw std::invalid_argument(std::string(who) + ": table domain has " + std::to_string(f.domain_bits()) +
                                    " bits, control register has " + std::to_string(state.n_control()));
    }
    if (f.codomain_bits() > state.n_aux()) {
        throw std::invalid_argument(std::string(who) + ": table values wider than auxiliary register");
    }
}

} // namespace

StateVector walsh_hadamard(const StateVector& state, Register reg) {
    return apply_on_register(state, reg, hadamard_in_place);
}

StateVector qft(const StateVector& state, Register reg) {
    const std::uint64_t n = reg == Register::control ? state.control_dim() : state.aux_dim();
    const std::vector<Complex> tw = roots_of_unity(n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    std::vector<Complex> terms(n);
    std::vector<Complex> out(n);
    return apply_on_register(state, reg, [&](std::vector<Complex>& v) {
        for (std::uint64_t y = 0; y < n; ++y) {
            for (std::uint64_t x = 0; x < n; ++x) terms[x] = v[x] * tw[(x * y) % n];
            out[y] = scale * pairwise_sum(terms);
        }
        v.swap(out);
    });
}

StateVector qft_fast(const StateVector& state, Register reg) {
    const std::uint64_t n = reg == Register::control ? state.control_dim() : state.aux_dim();
    const std::vector<Complex> tw = roots_of_unity(n);
    return apply_on_register(state, reg, [&](std::vector<Complex>& v) { fft_in_place(v, tw); });
}

StateVector phase_string(const StateVector& state, const BitString& w) {
    if (w.width() != state.n_aux()) {
        throw std::invalid_argument("phase_string: w has " + std::to_string(w.width()) +
                                    " bits, auxiliary register has " + std::to_string(state.n_aux()));
    }
    return apply_on_register(state, Register::aux, [&](std::vector<Complex>& v) {
        for (std::uint64_t k = 0; k < v.size(); ++k) {
            if (dot(w.value(), k)) v[k] = -v[k];
        }
    });
}

StateVector phase_negate(const StateVector& state, std::uint64_t w, std::uint64_t modulus) {
    if (modulus != state.aux_dim()) {
        throw std::invalid_argument("phase_negate: modulus " + std::to_string(modulus) +
                                    " must equal the auxiliary dimension " + std::to_string(state.aux_dim()));
    }
    if (w >= modulus) throw std::invalid_argument("phase_negate: w must be below the modulus");
    const std::vector<Complex> tw = roots_of_unity(modulus);
    std::vector<Complex> out(modulus);
    return apply_on_register(state, Register::aux, [&](std::vector<Complex>& v) {
        for (std::uint64_t k = 0; k < modulus; ++k) {
            out[(modulus - k) % modulus] = tw[(w * k) % modulus] * v[k];
        }
        v.swap(out);
    });
}

StateVector oracle_xor(const StateVector& state, const FunctionTable& f) {
    check_table(state, f, "oracle_xor");
    const std::uint64_t cols = state.aux_dim();
    Amplitudes out(state.amps().size());
    for (std::uint64_t x = 0; x < state.control_dim(); ++x) {
        const std::uint64_t fx = f(x);
        for (std::uint64_t k = 0; k < cols; ++k) out[x * cols + (k ^ fx)] = state(x, k);
    }
    return StateVector::from_unitary_image(state.n_control(), state.n_aux(), std::move(out));
}

StateVector oracle_add(const StateVector& state, const FunctionTable& f, std::uint64_t modulus) {
    check_table(state, f, "oracle_add");
    if (modulus != state.aux_dim()) {
        throw std::invalid_argument("oracle_add: modulus must equal the auxiliary dimension");
    }
    const std::uint64_t cols = state.aux_dim();
    Amplitudes out(state.amps().size());
    for (std::uint64_t x = 0; x < state.control_dim(); ++x) {
        const std::uint64_t fx = f(x);
        if (fx >= modulus) throw std::invalid_argument("oracle_add: f(" + std::to_string(x) + ") >= modulus");
        for (std::uint64_t k = 0; k < cols; ++k) out[x * cols + (k + fx) % modulus] = state(x, k);
    }
    return StateVector::from_unitary_image(state.n_control(), state.n_aux(), std::move(out));
}

} // namespace initfree
