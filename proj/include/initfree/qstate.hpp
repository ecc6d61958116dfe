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

/**
 * @file
 * Exact state substrate: composite control/auxiliary statevectors, mixed
 * auxiliary ensembles, Born-rule measurement on the control register and
 * distances between auxiliary states.
 *
 * Basis ordering is control-major. Amplitude index c * 2^n_aux + a holds
 * |c>|a>, so a state is a row-major (2^n_control x 2^n_aux) matrix and the
 * control marginal is a contiguous reduction over each row.
 */

#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "initfree/bits.hpp"

namespace initfree {

using Complex = std::complex<double>;
using Amplitudes = std::vector<Complex>;
using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kProbabilityTolerance = 1e-10;
inline constexpr double kClampThreshold = 1e-12;
inline constexpr double kDensityTolerance = 1e-10;
inline constexpr double kPhaseEqualityTolerance = 1e-10;

double squared_norm(std::span<const Complex> amps) noexcept;

/// Register width for a power-of-two length; throws otherwise.
unsigned width_for_length(std::size_t length);

class StateVector {
  public:
    /// Validates length 2^(n_control + n_aux) and unit norm within 1e-12.
    StateVector(unsigned n_control, unsigned n_aux, Amplitudes amps);

    unsigned n_control() const noexcept { return n_control_; }
    unsigned n_aux() const noexcept { return n_aux_; }
    std::uint64_t control_dim() const noexcept { return pow2(n_control_); }
    std::uint64_t aux_dim() const noexcept { return pow2(n_aux_); }

    std::span<const Complex> amps() const noexcept { return amps_; }
    const Complex& operator()(std::uint64_t control, std::uint64_t aux) const {
        return amps_[control * aux_dim() + aux];
    }

    /// Used by unitary kernels whose output is normalized by construction.
    /// Checks only the length.
    static StateVector from_unitary_image(unsigned n_control, unsigned n_aux, Amplitudes amps);

  private:
    struct NoNormCheck {};
    StateVector(unsigned n_control, unsigned n_aux, Amplitudes amps, NoNormCheck);

    unsigned n_control_;
    unsigned n_aux_;
    Amplitudes amps_;
};

/// Mixed auxiliary state as a weighted list of pure states.
class AuxEnsemble {
  public:
    struct Member {
        double weight;
        Amplitudes state;
    };

    /// Validates weights (nonnegative, summing to 1) and unit-norm members.
    AuxEnsemble(unsigned m, std::vector<Member> members);

    unsigned m() const noexcept { return m_; }
    std::uint64_t dim() const noexcept { return pow2(m_); }
    const std::vector<Member>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }

    static AuxEnsemble pure(Amplitudes state);
    static AuxEnsemble basis(unsigned m, std::uint64_t k);
    /// Uniform mixture of all 2^m basis states.
    static AuxEnsemble maximally_mixed(unsigned m);

  private:
    unsigned m_;
    std::vector<Member> members_;
};

class DensityMatrix {
  public:
    /// Checks Hermiticity, unit trace and eigenvalues >= -1e-10.
    explicit DensityMatrix(ComplexMatrix entries);

    Eigen::Index dim() const noexcept { return entries_.rows(); }
    const ComplexMatrix& entries() const noexcept { return entries_; }

  private:
    ComplexMatrix entries_;
};

/// Probability vector over control outcomes y in [0, 2^n).
class OutcomeDistribution {
  public:
    /// Entries in [-1e-12, 1e-12) are clamped to exactly 0; anything more
    /// negative, or a total off 1 by more than 1e-10, is rejected.
    OutcomeDistribution(unsigned n, std::vector<double> probs);

    unsigned n() const noexcept { return n_; }
    std::size_t size() const noexcept { return probs_.size(); }
    double operator[](std::uint64_t y) const { return probs_.at(y); }
    std::span<const double> probs() const noexcept { return probs_; }

    /// Largest elementwise absolute difference. Throws on size mismatch.
    double max_abs_diff(const OutcomeDistribution& other) const;
    double total_variation(const OutcomeDistribution& other) const;
    double mass_on(std::span<const std::uint64_t> outcomes) const;

  private:
    unsigned n_;
    std::vector<double> probs_;
};

/// |control_basis> (x) aux. Control width comes from control_basis.width().
StateVector make_product_state(const BitString& control_basis, std::span<const Complex> aux);

/// probs[y] = sum_j |amps[y * 2^m + j]|^2.
OutcomeDistribution control_marginal(const StateVector& state);

/// Normalized auxiliary vector conditioned on control outcome y.
/// Throws std::domain_error when the outcome has probability <= 1e-12.
Amplitudes collapse_on_outcome(const StateVector& state, std::uint64_t y);

DensityMatrix ensemble_to_density(const AuxEnsemble& ens);

/// Half the sum of absolute eigenvalues of a - b.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

/// |<a|b>|. Equal to 1 for states that agree up to global phase.
double overlap_magnitude(std::span<const Complex> a, std::span<const Complex> b);

bool equal_up_to_phase(std::span<const Complex> a, std::span<const Complex> b,
                       double tol = kPhaseEqualityTolerance);

// Full density-matrix route. Dense (2^(n+m))^2 storage, so callers keep
// n_control + n_aux <= kMaxDensityQubits.

inline constexpr unsigned kMaxDensityQubits = 8;

/// |0..0><0..0| (x) rho_B for an n_control-qubit control register.
ComplexMatrix joint_initial_density(unsigned n_control, const AuxEnsemble& ens);

/// Dense matrix of a linear map given by its action on basis states.
template <typename Map>
ComplexMatrix matrix_of(unsigned n_control, unsigned n_aux, Map&& map);

OutcomeDistribution control_marginal(const ComplexMatrix& joint, unsigned n_control, unsigned n_aux);

/// Auxiliary block of (|y><y| (x) I) joint (|y><y| (x) I), renormalized.
DensityMatrix conditional_aux_density(const ComplexMatrix& joint, unsigned n_control, unsigned n_aux,
                                      std::uint64_t y);

/// Pairwise (cascade) summation; keeps exhaustive sums deterministic and tight.
double pairwise_sum(std::span<const double> values) noexcept;
Complex pairwise_sum(std::span<const Complex> values) noexcept;

template <typename Map>
ComplexMatrix matrix_of(unsigned n_control, unsigned n_aux, Map&& map) {
    const auto dim = static_cast<Eigen::Index>(pow2(n_control + n_aux));
    ComplexMatrix u(dim, dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
        Amplitudes basis(static_cast<std::size_t>(dim), Complex{});
        basis[static_cast<std::size_t>(col)] = 1.0;
        const StateVector image = map(StateVector(n_control, n_aux, std::move(basis)));
        for (Eigen::Index row = 0; row < dim; ++row) {
            u(row, col) = image.amps()[static_cast<std::size_t>(row)];
        }
    }
    return u;
}

} // namespace initfree
