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
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qudepol/capacity.h"

namespace qudepol {

enum class SweepAxis { P, D };

enum class Quantity { Coh, Nc, Gain, Derivative, PZero, PrivateLower, PrivateUpper, Ratio };

std::string_view quantity_name(Quantity q);
Quantity parse_quantity(std::string_view name);

struct AxisRange {
    double start = 0.0;
    double stop = 1.0;
    int points = 2;
    bool log_spaced = false;
};

/// Parses "start:stop:points" or "start:stop:points:log".
AxisRange parse_range(std::string_view text);

struct SweepSpec {
    SweepAxis axis = SweepAxis::P;
    AxisRange range;
    std::vector<double> fixed_values;  // one output series each
    RateUnit unit = RateUnit::QuditsPerUse;
    std::vector<Quantity> quantities;

    /// Throws DomainError naming the offending field.
    void validate() const;
    std::vector<double> axis_values() const;
};

/// Fig. 1 style (gain vs p for several d) or Fig. 2 style (gain vs d for
/// several p). Accepts "fig1" and "fig2".
SweepSpec preset_spec(std::string_view name);

struct SweepCell {
    enum class Kind { Finite, Divergent, Indeterminate };
    Kind kind = Kind::Finite;
    double value = 0.0;
};

struct SweepRow {
    double axis_value = 0.0;
    double series_value = 0.0;
    std::vector<SweepCell> cells;  // parallel to SweepSpec::quantities
};

/// Rows grouped by fixed value, ascending along the axis within a group.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

/// CSV with a '#' provenance header; numbers use 17 significant digits,
/// divergent ratios the token "div", indeterminate ones "indet".
void write_csv(std::ostream& out, const SweepSpec& spec, const std::vector<SweepRow>& rows);

std::string format_number(double value);

struct ThresholdRow {
    double d;
    double p_zero;
    double threshold;
};

struct LimitCheck {
    double p;
    double deviation;  // |Q^d_coh(d_max, p) - max(0, 1 - 2p)|
    double allowance;  // 2 / log2(d_max)
};

struct ReportData {
    std::vector<ThresholdRow> thresholds;
    double d_max = 0.0;
    std::vector<LimitCheck> limits;
    int grid_points = 0;
    int monotonicity_violations = 0;
};

/// p0 / threshold table, d -> infinity limit checks, and a strict
/// monotonicity check of the gain in d on a grid below each p0.
ReportData build_report(std::span<const double> d_list);
std::string format_report(const ReportData& data);

/// Dimensions d_l, d_l+1, 2 d_l, d_l^2, 2^20 sorted without duplicates.
std::vector<double> monotonicity_dimensions(double d_low);

struct VerifyOptions {
    int d_max = 5;
    int p_points = 20;
    int trials = 200;
    std::uint64_t seed = 1;
    unsigned workers = 1;
};

struct VerifyResult {
    bool passed = true;
    double max_oracle_residual = 0.0;
    double max_search_excess = 0.0;
    std::vector<std::string> failures;
    std::string summary;
};

inline constexpr double kOracleTolerance = 1e-9;

/// Closed-form unclamped coherent information in bits, (d, p) -> value.
using ClosedForm = std::function<double(double, double)>;

/// Compares the dense simulation against the closed form for every
/// d in 2..d_max on an evenly spaced p grid over [0, 1], then checks that
/// no random input beats max(0, closed form).
VerifyResult verify(const VerifyOptions& options);
VerifyResult verify(const VerifyOptions& options, const ClosedForm& closed_form);

}  // namespace qudepol
