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

#include <optional>

namespace qudepol {

enum class RateUnit {
    BitsPerUse,    // qubits per channel use (log2 based)
    QuditsPerUse,  // normalized by log2(d)
};

/// Dimension d and depolarizing probability p of a qudit depolarizing channel.
///
/// d is real-valued so that analysis code can differentiate in the
/// dimension; `integral()` tells whether it is a whole number, which the
/// dense simulator requires.
class ChannelParams {
  public:
    /// Throws DomainError unless d >= 2 and 0 <= p <= 1.
    ChannelParams(double d, double p);

    double d() const { return d_; }
    double p() const { return p_; }
    bool integral() const { return integral_; }

  private:
    double d_;
    double p_;
    bool integral_;
};

/// Converts a value in bits per use to `unit`.
double convert_rate(double bits_per_use, double d, RateUnit unit);

/// One-shot coherent information, attained at the maximally mixed input.
///
/// The expression is evaluated with log2(p/d^2) split into
/// log2(p) - 2 log2(d), so it stays finite for astronomically large d.
/// With `clamp` the result is max(0, .); without it the raw expression is
/// returned, which is what root finding needs.
double coherent_information(const ChannelParams& params, RateUnit unit, bool clamp = true);

/// No-cloning upper bound (1 - 2p(d+1)/d) log2 d. Not clamped: negative
/// values past the antidegradable point are returned as is.
double no_cloning_bound(const ChannelParams& params, RateUnit unit);

/// d / (2(d+1)); the channel is antidegradable for p at or above it.
double antidegradable_threshold(double d);

/// No-cloning superadditivity gain in qudits per use:
/// max(0, Q^d_nc) - max(0, Q^d_coh). Nonnegative everywhere.
double superadditivity_gain_nc(const ChannelParams& params);

/// Q_nc / Q_coh, both clamped. Throws DivergentRatio when only the
/// denominator vanishes and Indeterminate when both do.
double gain_ratio_nc(const ChannelParams& params);

struct RootResult {
    double root = 0.0;
    int iterations = 0;
};

inline constexpr double kDefaultRootTolerance = 1e-12;
inline constexpr int kMaxBisectionIterations = 200;

/// Smallest p in (0, d/(2(d+1))) where the unclamped coherent information
/// crosses zero, found by bisection. Throws BracketFailure when the bracket
/// [tol, threshold - tol] shows no sign change.
RootResult p_zero_bisection(double d, double tol = kDefaultRootTolerance);

inline double p_zero(double d, double tol = kDefaultRootTolerance) {
    return p_zero_bisection(d, tol).root;
}

/// Exact partial derivative of superadditivity_gain_nc with respect to a
/// continuous dimension d. Each clamped term contributes only where it is
/// positive.
double gain_derivative_in_d(const ChannelParams& params);

/// The simplified expression -4p/d + 4p(d^2-1)/d^3 - Q^d_coh.
///
/// Often quoted as the d-derivative of the gain, but it is not: it misses
/// the terms coming from d-dependence inside the logarithms (it gives -1 at
/// p = 0 where the gain is identically zero). Kept for comparison only.
double simplified_gain_derivative(const ChannelParams& params);

/// Limit of Q^d_coh as d -> infinity: max(0, 1 - 2p), qudits per use.
double asymptotic_coherent_information(double p);

struct PrivateBounds {
    double lower = 0.0;
    double upper = 0.0;
};

/// Coherent information <= P <= no-cloning bound, both clamped at zero.
/// Both sides are exactly zero once the channel is antidegradable.
PrivateBounds private_capacity_bounds(const ChannelParams& params, RateUnit unit);

/// Upper bound on the normalized private superadditivity gain. This is the
/// same number as superadditivity_gain_nc, not the gain itself.
double private_gain_bound(const ChannelParams& params);

struct BoundReport {
    ChannelParams params;
    double coh_unclamped;     // bits per use
    double coh;               // bits per use, clamped
    double nc;                // bits per use, unclamped
    double gain_nc;           // qudits per use
    double antideg_threshold;
    std::optional<double> p_zero;
};

BoundReport bound_report(const ChannelParams& params, bool with_p_zero = false);

}  // namespace qudepol
