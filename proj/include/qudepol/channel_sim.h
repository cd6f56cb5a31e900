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

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace qudepol {

using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr int kMaxSimDimension = 64;
inline constexpr int kMaxSearchDimension = 8;

/// Hermitian, unit-trace, positive semidefinite matrix.
class DensityMatrix {
  public:
    static constexpr double kHermitianTol = 1e-12;
    static constexpr double kTraceTol = 1e-12;
    static constexpr double kEigenTol = 1e-10;

    /// Validates all three invariants; throws DomainError on violation.
    explicit DensityMatrix(ComplexMatrix entries);

    static DensityMatrix maximally_mixed(int dim);
    /// |psi><psi| for a (not necessarily normalized) nonzero vector.
    static DensityMatrix pure(const Eigen::VectorXcd& psi);

    int dim() const { return static_cast<int>(entries_.rows()); }
    const ComplexMatrix& matrix() const { return entries_; }

  private:
    ComplexMatrix entries_;
};

/// Clock-shift products X^j Z^k, stored at index j * d + k.
struct WeylOperatorSet {
    int dim = 0;
    std::vector<ComplexMatrix> operators;

    const ComplexMatrix& at(int j, int k) const { return operators[static_cast<size_t>(j * dim + k)]; }
};

struct KrausSet {
    int dim = 0;
    std::vector<ComplexMatrix> operators;

    /// max |sum_m K_m^dagger K_m - I|.
    double completeness_residual() const;
};

/// All d^2 Weyl operators; X|m> = |m+1 mod d>, Z|m> = w^m |m>.
/// Throws ResourceError for d > 64 and DomainError for d < 2.
WeylOperatorSet weyl_operators(int d);

/// n-fold tensor products of {I, X, Y, Z}, 4^n operators on 2^n levels.
std::vector<ComplexMatrix> tensor_pauli_operators(int n);

/// Rank of the span of the vectorized operators.
int operator_span_rank(const std::vector<ComplexMatrix>& operators);

/// True when `weyl` (with d = 2^n) spans the same operator space as the
/// n-qubit tensor Paulis.
bool spans_tensor_pauli_space(const WeylOperatorSet& weyl);

/// {sqrt(1-p+p/d^2) I} plus sqrt(p/d^2) X^j Z^k for (j,k) != (0,0).
/// Operators with zero weight are dropped, so p = 0 gives just {I}.
KrausSet depolarizing_kraus(int d, double p);

/// sum_m K_m rho K_m^dagger.
DensityMatrix apply_channel(const DensityMatrix& rho, const KrausSet& kraus);

/// Environment state E_mn = Tr(K_m rho K_n^dagger) of the Stinespring
/// dilation; M x M for M Kraus operators.
DensityMatrix complementary_output(const DensityMatrix& rho, const KrausSet& kraus);

/// -sum lambda log2 lambda over eigenvalues, in bits.
double von_neumann_entropy(const DensityMatrix& rho);

/// S(N(rho)) - S(N^c(rho)), bits per use.
double state_coherent_information(const DensityMatrix& rho, const KrausSet& kraus);

/// G G^dagger / Tr(G G^dagger) with G complex standard Gaussian.
DensityMatrix random_density_matrix(int dim, std::mt19937_64& rng);

/// Independent generator for one trial of a seeded search.
std::mt19937_64 trial_stream(std::uint64_t seed, std::uint64_t trial);

/// Max of state_coherent_information over I/d and `trials` random states.
///
/// Trial t draws from trial_stream(seed, t), so the result does not depend
/// on `workers`. This is evidence that I/d is the maximizer, not a proof.
double max_coherent_information_search(int d, double p, int trials, std::uint64_t seed,
                                       unsigned workers = 1);

}  // namespace qudepol
