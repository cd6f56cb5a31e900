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

#include "qudepol/capacity.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qudepol/errors.h"

namespace qudepol {

namespace {

constexpr double kLogGuard = 1e-300;

void require_dimension(double d) {
    if (!(d >= 2.0) || !std::isfinite(d)) {
        throw DomainError("dimension must be a finite value >= 2, got " + std::to_string(d));
    }
}

void require_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw DomainError("depolarizing probability must lie in [0, 1], got " + std::to_string(p));
    }
}

// Weight p(d^2-1)/d^2 carried by the nontrivial Weyl errors.
double error_weight(double d, double p) {
    return p * (1.0 - 1.0 / (d * d));
}

// Unclamped coherent information in bits per use, inputs already validated.
double coherent_bits(double d, double p) {
    const double log_d = std::log2(d);
    const double r = error_weight(d, p);
    const double q = 1.0 - r;
    // q log2 q with log1p for accuracy near q = 1.
    const double q_term = q <= kLogGuard ? 0.0 : q * std::log1p(-r) / std::numbers::ln2;
    const double r_term = p <= kLogGuard ? 0.0 : r * (std::log2(p) - 2.0 * log_d);
    return log_d + q_term + r_term;
}

double no_cloning_qudits(double d, double p) {
    return 1.0 - 2.0 * p * (d + 1.0) / d;
}

// max(0, Q^d_nc) with an exact zero on the antidegradable side.
double clamped_no_cloning_qudits(double d, double p) {
    if (p >= antidegradable_threshold(d)) {
        return 0.0;
    }
    return std::max(0.0, no_cloning_qudits(d, p));
}

}  // namespace

ChannelParams::ChannelParams(double d, double p) : d_(d), p_(p) {
    require_dimension(d);
    require_probability(p);
    integral_ = std::floor(d) == d;
}

double convert_rate(double bits_per_use, double d, RateUnit unit) {
    switch (unit) {
        case RateUnit::BitsPerUse:
            return bits_per_use;
        case RateUnit::QuditsPerUse:
            return bits_per_use / std::log2(d);
    }
    return bits_per_use;
}

double coherent_information(const ChannelParams& params, RateUnit unit, bool clamp) {
    double bits = coherent_bits(params.d(), params.p());
    if (clamp) {
        bits = std::max(0.0, bits);
    }
    return convert_rate(bits, params.d(), unit);
}

double no_cloning_bound(const ChannelParams& params, RateUnit unit) {
    const double qudits = no_cloning_qudits(params.d(), params.p());
    return unit == RateUnit::QuditsPerUse ? qudits : qudits * std::log2(params.d());
}

double antidegradable_threshold(double d) {
    require_dimension(d);
    return d / (2.0 * (d + 1.0));
}

double superadditivity_gain_nc(const ChannelParams& params) {
    const double nc = clamped_no_cloning_qudits(params.d(), params.p());
    const double coh = coherent_information(params, RateUnit::QuditsPerUse, true);
    return nc - coh;
}

double gain_ratio_nc(const ChannelParams& params) {
    const double coh = coherent_information(params, RateUnit::BitsPerUse, true);
    const double nc = clamped_no_cloning_qudits(params.d(), params.p()) * std::log2(params.d());
    if (coh > 0.0) {
        return nc / coh;
    }
    if (nc > 0.0) {
        throw DivergentRatio("coherent information vanishes while the no-cloning bound is positive");
    }
    throw Indeterminate("coherent information and no-cloning bound both vanish");
}

RootResult p_zero_bisection(double d, double tol) {
    require_dimension(d);
    if (!(tol > 0.0)) {
        throw DomainError("root tolerance must be positive");
    }
    double lo = tol;
    double hi = antidegradable_threshold(d) - tol;
    if (!(coherent_bits(d, lo) > 0.0)) {
        throw BracketFailure("coherent information is not positive at the lower bracket end");
    }
    if (!(coherent_bits(d, hi) < 0.0)) {
        throw BracketFailure("coherent information is not negative at the antidegradable threshold");
    }
    int iterations = 0;
    while (hi - lo > tol && iterations < kMaxBisectionIterations) {
        const double mid = 0.5 * (lo + hi);
        if (coherent_bits(d, mid) > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
        ++iterations;
    }
    return {0.5 * (lo + hi), iterations};
}

double gain_derivative_in_d(const ChannelParams& params) {
    const double d = params.d();
    const double p = params.p();
    const double ln2 = std::numbers::ln2;

    const double d_nc = p < antidegradable_threshold(d) ? 2.0 * p / (d * d) : 0.0;

    const double bits = coherent_bits(d, p);
    if (bits <= 0.0 || p <= kLogGuard) {
        // Q^d_coh is either clamped flat or identically 1 in d.
        return d_nc;
    }
    const double log_d = std::log2(d);
    const double r = error_weight(d, p);
    const double dr = 2.0 * p / (d * d * d);  // dr/dd; dq/dd = -dr
    const double d_bits = 1.0 / (d * ln2) - dr * (std::log1p(-r) / ln2 + 1.0 / ln2) +
                          dr * (std::log2(p) - 2.0 * log_d) - 2.0 * r / (d * ln2);
    const double qudits = bits / log_d;
    const double d_qudits = (d_bits - qudits / (d * ln2)) / log_d;
    return d_nc - d_qudits;
}

double simplified_gain_derivative(const ChannelParams& params) {
    const double d = params.d();
    const double p = params.p();
    return -4.0 * p / d + 4.0 * p * (d * d - 1.0) / (d * d * d) -
           coherent_information(params, RateUnit::QuditsPerUse, true);
}

double asymptotic_coherent_information(double p) {
    require_probability(p);
    return std::max(0.0, 1.0 - 2.0 * p);
}

PrivateBounds private_capacity_bounds(const ChannelParams& params, RateUnit unit) {
    const double d = params.d();
    if (params.p() >= antidegradable_threshold(d)) {
        return {0.0, 0.0};
    }
    const double lower = coherent_information(params, unit, true);
    const double upper_qudits = clamped_no_cloning_qudits(d, params.p());
    const double upper = unit == RateUnit::QuditsPerUse ? upper_qudits : upper_qudits * std::log2(d);
    return {lower, upper};
}

double private_gain_bound(const ChannelParams& params) {
    return superadditivity_gain_nc(params);
}

BoundReport bound_report(const ChannelParams& params, bool with_p_zero) {
    const double coh_raw = coherent_information(params, RateUnit::BitsPerUse, false);
    BoundReport report{
        .params = params,
        .coh_unclamped = coh_raw,
        .coh = std::max(0.0, coh_raw),
        .nc = no_cloning_bound(params, RateUnit::BitsPerUse),
        .gain_nc = superadditivity_gain_nc(params),
        .antideg_threshold = antidegradable_threshold(params.d()),
        .p_zero = std::nullopt,
    };
    if (with_p_zero) {
        report.p_zero = p_zero(params.d());
    }
    return report;
}

}  // namespace qudepol
