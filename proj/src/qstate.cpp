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

#include "initfree/qstate.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

namespace initfree {

namespace {

template <typename T>
T pairwise_sum_impl(std::span<const T> v) noexcept {
    constexpr std::size_t kBlock = 8;
    if (v.size() <= kBlock) {
        T acc{};
        for (const T& x : v) acc += x;
        return acc;
    }
    const std::size_t half = v.size() / 2;
    return pairwise_sum_impl(v.first(half)) + pairwise_sum_impl(v.subspan(half));
}

} // namespace

double pairwise_sum(std::span<const double> values) noexcept { return pairwise_sum_impl(values); }
Complex pairwise_sum(std::span<const Complex> values) noexcept { return pairwise_sum_impl(values); }

double squared_norm(std::span<const Complex> amps) noexcept {
    std::vector<double> sq(amps.size());
    for (std::size_t i = 0; i < amps.size(); ++i) sq[i] = std::norm(amps[i]);
    return pairwise_sum(sq);
}

unsigned width_for_length(std::size_t length) {
    if (length == 0 || !std::has_single_bit(length)) {
        throw std::invalid_argument("length " + std::to_string(length) + " is not a power of two");
    }
    const auto w = static_cast<unsigned>(std::countr_zero(length));
    if (w > kMaxBits) throw std::invalid_argument("register too wide");
    return w;
}

// ---------------------------------------------------------------- StateVector

StateVector::StateVector(unsigned n_control, unsigned n_aux, Amplitudes amps, NoNormCheck)
    : n_control_(n_control), n_aux_(n_aux), amps_(std::move(amps)) {
    if (n_control + n_aux > kMaxBits) {
        throw std::invalid_argument("StateVector: too many qubits");
    }
    if (amps_.size() != pow2(n_control + n_aux)) {
        throw std::invalid_argument("StateVector: expected " + std::to_string(pow2(n_control + n_aux)) +
                                    " amplitudes, got " + std::to_string(amps_.size()));
    }
}

StateVector::StateVector(unsigned n_control, unsigned n_aux, Amplitudes amps)
    : StateVector(n_control, n_aux, std::move(amps), NoNormCheck{}) {
    const double norm = squared_norm(amps_);
    if (std::abs(norm - 1.0) > kNormTolerance) {
        throw std::invalid_argument("StateVector: squared norm " + std::to_string(norm) + " is not 1");
    }
}

StateVector StateVector::from_unitary_image(unsigned n_control, unsigned n_aux, Amplitudes amps) {
    return StateVector(n_control, n_aux, std::move(amps), NoNormCheck{});
}

// ---------------------------------------------------------------- AuxEnsemble

AuxEnsemble::AuxEnsemble(unsigned m, std::vector<Member> members) : m_(m), members_(std::move(members)) {
    if (m > kMaxBits) throw std::invalid_argument("AuxEnsemble: register too wide");
    if (members_.empty()) throw std::invalid_argument("AuxEnsemble: no members");
    std::vector<double> weights;
    weights.reserve(members_.size());
    for (const Member& mem : members_) {
        if (!(mem.weight >= 0.0)) throw std::invalid_argument("AuxEnsemble: negative weight");
        if (mem.state.size() != pow2(m)) {
            throw std::invalid_argument("AuxEnsemble: member has " + std::to_string(mem.state.size()) +
                                        " amplitudes, expected " + std::to_string(pow2(m)));
        }
        if (std::abs(squared_norm(mem.state) - 1.0) > kNormTolerance) {
            throw std::invalid_argument("AuxEnsemble: member state is not normalized");
        }
        weights.push_back(mem.weight);
    }
    if (std::abs(pairwise_sum(weights) - 1.0) > kNormTolerance) {
        throw std::invalid_argument("AuxEnsemble: weights do not sum to 1");
    }
}

AuxEnsemble AuxEnsemble::pure(Amplitudes state) {
    const unsigned m = width_for_length(state.size());
    std::vector<Member> members;
    members.push_back({1.0, std::move(state)});
    return AuxEnsemble(m, std::move(members));
}

AuxEnsemble AuxEnsemble::basis(unsigned m, std::uint64_t k) {
    if (k >= pow2(m)) throw std::invalid_argument("AuxEnsemble::basis: index out of range");
    Amplitudes s(pow2(m), Complex{});
    s[k] = 1.0;
    return pure(std::move(s));
}

AuxEnsemble AuxEnsemble::maximally_mixed(unsigned m) {
    const std::uint64_t dim = pow2(m);
    std::vector<Member> members;
    members.reserve(dim);
    for (std::uint64_t k = 0; k < dim; ++k) {
        Amplitudes s(dim, Complex{});
        s[k] = 1.0;
        members.push_back({1.0 / static_cast<double>(dim), std::move(s)});
    }
    return AuxEnsemble(m, std::move(members));
}

// -------------------------------------------------------------- DensityMatrix

DensityMatrix::DensityMatrix(ComplexMatrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
        throw std::invalid_argument("DensityMatrix: not square");
    }
    if ((entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() > kDensityTolerance) {
        throw std::invalid_argument("DensityMatrix: not Hermitian");
    }
    if (std::abs(entries_.trace() - Complex{1.0}) > kDensityTolerance) {
        throw std::invalid_argument("DensityMatrix: trace is not 1");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(entries_, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -kDensityTolerance) {
        throw std::invalid_argument("DensityMatrix: negative eigenvalue");
    }
}

// -------------------------------------------------------- OutcomeDistribution

OutcomeDistribution::OutcomeDistribution(unsigned n, std::vector<double> probs)
    : n_(n), probs_(std::move(probs)) {
    if (probs_.size() != pow2(n)) {
        throw std::invalid_argument("OutcomeDistribution: expected " + std::to_string(pow2(n)) +
                                    " entries, got " + std::to_string(probs_.size()));
    }
    for (std::size_t y = 0; y < probs_.size(); ++y) {
        double& p = probs_[y];
        if (!(p >= -kClampThreshold)) {
            throw std::invalid_argument("OutcomeDistribution: entry " + std::to_string(y) +
                                        " is negative (" + std::to_string(p) + ")");
        }
        if (p < kClampThreshold) p = 0.0;
    }
    const double total = pairwise_sum(probs_);
    if (std::abs(total - 1.0) > kProbabilityTolerance) {
        throw std::invalid_argument("OutcomeDistribution: total probability " + std::to_string(total));
    }
}

double OutcomeDistribution::max_abs_diff(const OutcomeDistribution& other) const {
    if (other.size() != size()) throw std::invalid_argument("max_abs_diff: size mismatch");
    double worst = 0.0;
    for (std::size_t y = 0; y < size(); ++y) worst = std::max(worst, std::abs(probs_[y] - other.probs_[y]));
    return worst;
}

double OutcomeDistribution::total_variation(const OutcomeDistribution& other) const {
    if (other.size() != size()) throw std::invalid_argument("total_variation: size mismatch");
    std::vector<double> d(size());
    for (std::size_t y = 0; y < size(); ++y) d[y] = std::abs(probs_[y] - other.probs_[y]);
    return 0.5 * pairwise_sum(d);
}

double OutcomeDistribution::mass_on(std::span<const std::uint64_t> outcomes) const {
    double acc = 0.0;
    for (std::uint64_t y : outcomes) acc += probs_.at(y);
    return acc;
}

// ----------------------------------------------------------------- operations

StateVector make_product_state(const BitString& control_basis, std::span<const Complex> aux) {
    const unsigned m = width_for_length(aux.size());
    const unsigned n = control_basis.width();
    if (std::abs(squared_norm(aux) - 1.0) > kNormTolerance) {
        throw std::invalid_argument("make_product_state: auxiliary state is not normalized");
    }
    Amplitudes amps(pow2(n + m), Complex{});
    const std::uint64_t offset = control_basis.value() * pow2(m);
    for (std::size_t j = 0; j < aux.size(); ++j) amps[offset + j] = aux[j];
    return StateVector(n, m, std::move(amps));
}

OutcomeDistribution control_marginal(const StateVector& state) {
    const std::uint64_t rows = state.control_dim();
    const std::uint64_t cols = state.aux_dim();
    std::vector<double> probs(rows);
    std::vector<double> row(cols);
    for (std::uint64_t y = 0; y < rows; ++y) {
        for (std::uint64_t j = 0; j < cols; ++j) row[j] = std::norm(state(y, j));
        probs[y] = pairwise_sum(row);
    }
    return OutcomeDistribution(state.n_control(), std::move(probs));
}

Amplitudes collapse_on_outcome(const StateVector& state, std::uint64_t y) {
    if (y >= state.control_dim()) throw std::invalid_argument("collapse_on_outcome: outcome out of range");
    const auto row = state.amps().subspan(y * state.aux_dim(), state.aux_dim());
    const double p = squared_norm(row);
    if (p <= kClampThreshold) {
        throw std::domain_error("collapse_on_outcome: outcome " + std::to_string(y) +
                                " has zero probability");
    }
    const double scale = 1.0 / std::sqrt(p);
    Amplitudes out(row.begin(), row.end());
    for (Complex& a : out) a *= scale;
    return out;
}

DensityMatrix ensemble_to_density(const AuxEnsemble& ens) {
    const auto dim = static_cast<Eigen::Index>(ens.dim());
    ComplexMatrix rho = ComplexMatrix::Zero(dim, dim);
    for (const auto& mem : ens.members()) {
        const Eigen::Map<const Eigen::VectorXcd> psi(mem.state.data(), dim);
        rho.noalias() += mem.weight * (psi * psi.adjoint());
    }
    return DensityMatrix(std::move(rho));
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("trace_distance: dimension mismatch");
    const ComplexMatrix diff = a.entries() - b.entries();
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(diff, Eigen::EigenvaluesOnly);
    return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

double overlap_magnitude(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) throw std::invalid_argument("overlap_magnitude: size mismatch");
    std::vector<Complex> terms(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) terms[i] = std::conj(a[i]) * b[i];
    return std::abs(pairwise_sum(terms));
}

bool equal_up_to_phase(std::span<const Complex> a, std::span<const Complex> b, double tol) {
    return overlap_magnitude(a, b) >= 1.0 - tol;
}

// -------------------------------------------------------- density-matrix route

ComplexMatrix joint_initial_density(unsigned n_control, const AuxEnsemble& ens) {
    if (n_control + ens.m() > kMaxDensityQubits) {
        throw std::invalid_argument("joint_initial_density: too many qubits for the dense route");
    }
    const ComplexMatrix rho_b = ensemble_to_density(ens).entries();
    const auto dim = static_cast<Eigen::Index>(pow2(n_control + ens.m()));
    ComplexMatrix joint = ComplexMatrix::Zero(dim, dim);
    joint.topLeftCorner(rho_b.rows(), rho_b.cols()) = rho_b;
    return joint;
}

OutcomeDistribution control_marginal(const ComplexMatrix& joint, unsigned n_control, unsigned n_aux) {
    const auto aux = static_cast<Eigen::Index>(pow2(n_aux));
    std::vector<double> probs(pow2(n_control));
    for (std::size_t y = 0; y < probs.size(); ++y) {
        probs[y] = joint.diagonal().segment(static_cast<Eigen::Index>(y) * aux, aux).real().sum();
    }
    return OutcomeDistribution(n_control, std::move(probs));
}

DensityMatrix conditional_aux_density(const ComplexMatrix& joint, unsigned n_control, unsigned n_aux,
                                      std::uint64_t y) {
    if (y >= pow2(n_control)) throw std::invalid_argument("conditional_aux_density: outcome out of range");
    const auto aux = static_cast<Eigen::Index>(pow2(n_aux));
    const auto start = static_cast<Eigen::Index>(y) * aux;
    ComplexMatrix block = joint.block(start, start, aux, aux);
    const double p = block.trace().real();
    if (p <= kClampThreshold) {
        throw std::domain_error("conditional_aux_density: outcome " + std::to_string(y) +
                                " has zero probability");
    }
    return DensityMatrix(block / p);
}

} // namespace initfree
