// Copyright 2026 The qudepol Authors
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

#include "qudepol/channel_sim.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <exception>
#include <limits>
#include <numbers>
#include <string>
#include <thread>
#include <utility>

#include <unsupported/Eigen/KroneckerProduct>

#include "qudepol/errors.h"

namespace qudepol {

namespace {

using Complex = std::complex<double>;

constexpr double kZeroEigenvalue = 1e-12;
constexpr double kCompletenessTol = 1e-10;

void require_sim_dimension(int d) {
    if (d < 2) {
        throw DomainError("simulation dimension must be >= 2, got " + std::to_string(d));
    }
    if (d > kMaxSimDimension) {
        throw ResourceError("simulation dimension " + std::to_string(d) + " exceeds the limit of " +
                            std::to_string(kMaxSimDimension));
    }
}

void require_matching(const DensityMatrix& rho, const KrausSet& kraus) {
    if (rho.dim() != kraus.dim) {
        throw DimensionMismatch("state has dimension " + std::to_string(rho.dim()) +
                                " but Kraus operators act on dimension " + std::to_string(kraus.dim));
    }
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
    return (m + m.adjoint()) * 0.5;
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols() || entries_.rows() < 1) {
        throw DomainError("density matrix must be square and nonempty");
    }
    const double asym = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
    if (asym > kHermitianTol) {
        throw DomainError("density matrix is not Hermitian (deviation " + std::to_string(asym) + ")");
    }
    const double trace_err = std::abs(entries_.trace() - Complex(1.0, 0.0));
    if (trace_err > kTraceTol) {
        throw DomainError("density matrix trace deviates from 1 by " + std::to_string(trace_err));
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(entries_, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw NumericError("eigensolver failed while validating a density matrix");
    }
    if (solver.eigenvalues().minCoeff() < -kEigenTol) {
        throw DomainError("density matrix has a negative eigenvalue " +
                          std::to_string(solver.eigenvalues().minCoeff()));
    }
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
    if (dim < 1) {
        throw DomainError("dimension must be positive");
    }
    return DensityMatrix(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

DensityMatrix DensityMatrix::pure(const Eigen::VectorXcd& psi) {
    const double norm = psi.norm();
    if (!(norm > 0.0)) {
        throw DomainError("pure state vector must be nonzero");
    }
    const Eigen::VectorXcd unit = psi / norm;
    return DensityMatrix(hermitian_part(unit * unit.adjoint()));
}

double KrausSet::completeness_residual() const {
    ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
    for (const auto& k : operators) {
        sum += k.adjoint() * k;
    }
    return (sum - ComplexMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff();
}

WeylOperatorSet weyl_operators(int d) {
    require_sim_dimension(d);
    WeylOperatorSet set{.dim = d, .operators = {}};
    set.operators.reserve(static_cast<size_t>(d) * d);
    for (int j = 0; j < d; ++j) {
        for (int k = 0; k < d; ++k) {
            // (X^j Z^k)|b> = w^{kb} |b + j mod d>
            ComplexMatrix w = ComplexMatrix::Zero(d, d);
            for (int b = 0; b < d; ++b) {
                const double angle = 2.0 * std::numbers::pi * static_cast<double>((k * b) % d) / d;
                w((b + j) % d, b) = std::polar(1.0, angle);
            }
            set.operators.push_back(std::move(w));
        }
    }
    return set;
}

std::vector<ComplexMatrix> tensor_pauli_operators(int n) {
    if (n < 1 || n > 3) {
        throw ResourceError("tensor Pauli sets are built for 1 to 3 qubits only");
    }
    const Complex i(0.0, 1.0);
    ComplexMatrix id = ComplexMatrix::Identity(2, 2);
    ComplexMatrix x(2, 2), y(2, 2), z(2, 2);
    x << 0, 1, 1, 0;
    y << 0, -i, i, 0;
    z << 1, 0, 0, -1;
    const std::vector<ComplexMatrix> single{id, x, y, z};

    std::vector<ComplexMatrix> result{ComplexMatrix::Identity(1, 1)};
    for (int q = 0; q < n; ++q) {
        std::vector<ComplexMatrix> next;
        next.reserve(result.size() * 4);
        for (const auto& a : result) {
            for (const auto& s : single) {
                next.push_back(Eigen::kroneckerProduct(a, s).eval());
            }
        }
        result = std::move(next);
    }
    return result;
}

int operator_span_rank(const std::vector<ComplexMatrix>& operators) {
    if (operators.empty()) {
        return 0;
    }
    const Eigen::Index len = operators.front().size();
    ComplexMatrix columns(len, static_cast<Eigen::Index>(operators.size()));
    for (size_t c = 0; c < operators.size(); ++c) {
        columns.col(static_cast<Eigen::Index>(c)) = operators[c].reshaped();
    }
    Eigen::FullPivLU<ComplexMatrix> lu(columns);
    lu.setThreshold(1e-10);
    return static_cast<int>(lu.rank());
}

bool spans_tensor_pauli_space(const WeylOperatorSet& weyl) {
    int n = 0;
    while ((1 << n) < weyl.dim) {
        ++n;
    }
    if ((1 << n) != weyl.dim) {
        throw DomainError("tensor Pauli comparison needs a power-of-two dimension");
    }
    const auto paulis = tensor_pauli_operators(n);
    std::vector<ComplexMatrix> joint = weyl.operators;
    joint.insert(joint.end(), paulis.begin(), paulis.end());
    const int full = weyl.dim * weyl.dim;
    return operator_span_rank(weyl.operators) == full && operator_span_rank(paulis) == full &&
           operator_span_rank(joint) == full;
}

KrausSet depolarizing_kraus(int d, double p) {
    require_sim_dimension(d);
    if (!(p >= 0.0 && p <= 1.0)) {
        throw DomainError("depolarizing probability must lie in [0, 1]");
    }
    const double d2 = static_cast<double>(d) * d;
    const double identity_weight = 1.0 - p + p / d2;
    const double error_weight = p / d2;

    const WeylOperatorSet weyl = weyl_operators(d);
    KrausSet kraus{.dim = d, .operators = {}};
    if (identity_weight > 0.0) {
        kraus.operators.push_back(std::sqrt(identity_weight) * weyl.operators.front());
    }
    if (error_weight > 0.0) {
        const double amp = std::sqrt(error_weight);
        for (size_t m = 1; m < weyl.operators.size(); ++m) {
            kraus.operators.push_back(amp * weyl.operators[m]);
        }
    }
    const double residual = kraus.completeness_residual();
    if (residual > kCompletenessTol) {
        throw NumericError("depolarizing Kraus set fails completeness by " + std::to_string(residual));
    }
    return kraus;
}

DensityMatrix apply_channel(const DensityMatrix& rho, const KrausSet& kraus) {
    require_matching(rho, kraus);
    ComplexMatrix out = ComplexMatrix::Zero(kraus.dim, kraus.dim);
    for (const auto& k : kraus.operators) {
        out.noalias() += k * rho.matrix() * k.adjoint();
    }
    return DensityMatrix(hermitian_part(out));
}

DensityMatrix complementary_output(const DensityMatrix& rho, const KrausSet& kraus) {
    require_matching(rho, kraus);
    const auto m = static_cast<Eigen::Index>(kraus.operators.size());
    const Eigen::Index len = static_cast<Eigen::Index>(kraus.dim) * kraus.dim;
    // Columns vec(K_m rho) and vec(K_n): E_mn = sum_k P_km conj(V_kn).
    ComplexMatrix p(len, m);
    ComplexMatrix v(len, m);
    for (Eigen::Index c = 0; c < m; ++c) {
        const auto& k = kraus.operators[static_cast<size_t>(c)];
        p.col(c) = (k * rho.matrix()).reshaped();
        v.col(c) = k.reshaped();
    }
    ComplexMatrix env = (v.adjoint() * p).transpose();
    return DensityMatrix(hermitian_part(env));
}

double von_neumann_entropy(const DensityMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho.matrix(), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw NumericError("Hermitian eigensolver did not converge");
    }
    double entropy = 0.0;
    for (const double raw : solver.eigenvalues()) {
        const double lambda = std::clamp(raw, 0.0, 1.0);
        if (lambda > kZeroEigenvalue) {
            entropy -= lambda * std::log2(lambda);
        }
    }
    return entropy;
}

double state_coherent_information(const DensityMatrix& rho, const KrausSet& kraus) {
    return von_neumann_entropy(apply_channel(rho, kraus)) -
           von_neumann_entropy(complementary_output(rho, kraus));
}

DensityMatrix random_density_matrix(int dim, std::mt19937_64& rng) {
    if (dim < 1) {
        throw DomainError("dimension must be positive");
    }
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexMatrix g(dim, dim);
    for (Eigen::Index c = 0; c < g.cols(); ++c) {
        for (Eigen::Index r = 0; r < g.rows(); ++r) {
            const double re = normal(rng);
            const double im = normal(rng);
            g(r, c) = Complex(re, im);
        }
    }
    ComplexMatrix w = g * g.adjoint();
    w /= w.trace().real();
    return DensityMatrix(hermitian_part(w));
}

std::mt19937_64 trial_stream(std::uint64_t seed, std::uint64_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    return std::mt19937_64(seq);
}

double max_coherent_information_search(int d, double p, int trials, std::uint64_t seed,
                                       unsigned workers) {
    if (d < 2 || d > kMaxSearchDimension) {
        throw ResourceError("random search supports 2 <= d <= " + std::to_string(kMaxSearchDimension));
    }
    if (trials < 1) {
        throw DomainError("random search needs at least one trial");
    }
    const KrausSet kraus = depolarizing_kraus(d, p);
    const double baseline = state_coherent_information(DensityMatrix::maximally_mixed(d), kraus);

    workers = std::clamp(workers, 1u, static_cast<unsigned>(trials));
    std::vector<double> best(workers, -std::numeric_limits<double>::infinity());
    std::vector<std::exception_ptr> failures(workers);
    auto run = [&](unsigned w) {
        try {
            for (auto t = static_cast<std::uint64_t>(w); t < static_cast<std::uint64_t>(trials);
                 t += workers) {
                auto rng = trial_stream(seed, t);
                const double value = state_coherent_information(random_density_matrix(d, rng), kraus);
                best[w] = std::max(best[w], value);
            }
        } catch (...) {
            failures[w] = std::current_exception();
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(run, w);
        }
    }
    for (const auto& failure : failures) {
        if (failure) {
            std::rethrow_exception(failure);
        }
    }
    return std::max(baseline, *std::max_element(best.begin(), best.end()));
}

}  // namespace qudepol
