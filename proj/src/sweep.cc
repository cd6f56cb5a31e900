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

#include "qudepol/sweep.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

#include "qudepol/channel_sim.h"
#include "qudepol/errors.h"

namespace qudepol {

namespace {

constexpr double kLargestPresetDimension = 1048576.0;  // 2^20

struct QuantityName {
    Quantity quantity;
    std::string_view name;
};

constexpr QuantityName kQuantityNames[] = {
    {Quantity::Coh, "coh"},
    {Quantity::Nc, "nc"},
    {Quantity::Gain, "gain"},
    {Quantity::Derivative, "derivative"},
    {Quantity::PZero, "p_zero"},
    {Quantity::PrivateLower, "private_lower"},
    {Quantity::PrivateUpper, "private_upper"},
    {Quantity::Ratio, "ratio"},
};

double parse_double(std::string_view text, std::string_view field) {
    const std::string s(text);
    try {
        size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) {
            throw DomainError("");
        }
        return v;
    } catch (const std::exception&) {
        throw DomainError(std::string(field) + ": cannot parse '" + s + "' as a number");
    }
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    size_t begin = 0;
    while (true) {
        const size_t end = text.find(sep, begin);
        parts.push_back(text.substr(begin, end == std::string_view::npos ? end : end - begin));
        if (end == std::string_view::npos) {
            break;
        }
        begin = end + 1;
    }
    return parts;
}

std::string join_numbers(const std::vector<double>& values) {
    std::string out;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += format_number(values[i]);
    }
    return out;
}

SweepCell finite(double value) {
    if (!std::isfinite(value)) {
        throw NumericError("sweep produced a non-finite value");
    }
    return {SweepCell::Kind::Finite, value};
}

class PZeroCache {
  public:
    double get(double d) {
        auto it = cache_.find(d);
        if (it == cache_.end()) {
            it = cache_.emplace(d, p_zero(d)).first;
        }
        return it->second;
    }

  private:
    std::map<double, double> cache_;
};

SweepCell evaluate(Quantity q, const ChannelParams& params, RateUnit unit, PZeroCache& p_zeros) {
    switch (q) {
        case Quantity::Coh:
            return finite(coherent_information(params, unit, true));
        case Quantity::Nc:
            return finite(no_cloning_bound(params, unit));
        case Quantity::Gain:
            return finite(superadditivity_gain_nc(params));
        case Quantity::Derivative:
            return finite(gain_derivative_in_d(params));
        case Quantity::PZero:
            return finite(p_zeros.get(params.d()));
        case Quantity::PrivateLower:
            return finite(private_capacity_bounds(params, unit).lower);
        case Quantity::PrivateUpper:
            return finite(private_capacity_bounds(params, unit).upper);
        case Quantity::Ratio:
            try {
                return finite(gain_ratio_nc(params));
            } catch (const DivergentRatio&) {
                return {SweepCell::Kind::Divergent, 0.0};
            } catch (const Indeterminate&) {
                return {SweepCell::Kind::Indeterminate, 0.0};
            }
    }
    throw DomainError("unknown quantity");
}

}  // namespace

std::string_view quantity_name(Quantity q) {
    for (const auto& entry : kQuantityNames) {
        if (entry.quantity == q) {
            return entry.name;
        }
    }
    return "?";
}

Quantity parse_quantity(std::string_view name) {
    for (const auto& entry : kQuantityNames) {
        if (entry.name == name) {
            return entry.quantity;
        }
    }
    throw DomainError("quantities: unknown quantity '" + std::string(name) + "'");
}

AxisRange parse_range(std::string_view text) {
    const auto parts = split(text, ':');
    if (parts.size() != 3 && parts.size() != 4) {
        throw DomainError("range: expected start:stop:points[:log], got '" + std::string(text) + "'");
    }
    AxisRange range;
    range.start = parse_double(parts[0], "range.start");
    range.stop = parse_double(parts[1], "range.stop");
    const double points = parse_double(parts[2], "range.points");
    if (points != std::floor(points) || points < 2 || points > 1e7) {
        throw DomainError("range.points: must be an integer >= 2");
    }
    range.points = static_cast<int>(points);
    if (parts.size() == 4) {
        if (parts[3] != "log") {
            throw DomainError("range: fourth field must be 'log'");
        }
        range.log_spaced = true;
    }
    return range;
}

void SweepSpec::validate() const {
    if (range.points < 2) {
        throw DomainError("range.points: must be >= 2");
    }
    if (!(range.start < range.stop)) {
        throw DomainError("range: start must be below stop");
    }
    if (axis == SweepAxis::P && (range.start < 0.0 || range.stop > 1.0)) {
        throw DomainError("range: p axis must stay inside [0, 1]");
    }
    if (axis == SweepAxis::D && !(range.start >= 2.0 && std::isfinite(range.stop))) {
        throw DomainError("range: d axis must start at 2 or above");
    }
    if (range.log_spaced && !(range.start > 0.0)) {
        throw DomainError("range: log spacing needs a positive start");
    }
    if (fixed_values.empty()) {
        throw DomainError("fixed: at least one fixed value is required");
    }
    for (const double v : fixed_values) {
        if (axis == SweepAxis::P && !(v >= 2.0 && std::isfinite(v))) {
            throw DomainError("fixed: dimension values must be >= 2");
        }
        if (axis == SweepAxis::D && !(v >= 0.0 && v <= 1.0)) {
            throw DomainError("fixed: probability values must lie in [0, 1]");
        }
    }
    if (quantities.empty()) {
        throw DomainError("quantities: at least one quantity is required");
    }
}

std::vector<double> SweepSpec::axis_values() const {
    std::vector<double> values(static_cast<size_t>(range.points));
    const double last = range.points - 1;
    for (int i = 0; i < range.points; ++i) {
        const double t = i / last;
        if (range.log_spaced) {
            const double lo = std::log(range.start);
            const double hi = std::log(range.stop);
            values[static_cast<size_t>(i)] = std::exp(lo + (hi - lo) * t);
        } else {
            values[static_cast<size_t>(i)] = range.start + (range.stop - range.start) * t;
        }
    }
    values.front() = range.start;
    values.back() = range.stop;
    return values;
}

SweepSpec preset_spec(std::string_view name) {
    SweepSpec spec;
    spec.unit = RateUnit::QuditsPerUse;
    spec.quantities = {Quantity::Gain};
    if (name == "fig1") {
        spec.axis = SweepAxis::P;
        spec.range = {0.0, 0.5, 500, false};
        spec.fixed_values = {2.0, 4.0, 32.0, kLargestPresetDimension};
    } else if (name == "fig2") {
        spec.axis = SweepAxis::D;
        spec.range = {2.0, kLargestPresetDimension, 200, true};
        spec.fixed_values = {0.01, 0.05, 0.1, 0.2, 0.25};
    } else {
        throw DomainError("preset: unknown preset '" + std::string(name) + "'");
    }
    return spec;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    spec.validate();
    const std::vector<double> axis = spec.axis_values();
    PZeroCache p_zeros;
    std::vector<SweepRow> rows;
    rows.reserve(axis.size() * spec.fixed_values.size());
    for (const double fixed : spec.fixed_values) {
        for (const double a : axis) {
            const ChannelParams params = spec.axis == SweepAxis::P ? ChannelParams(fixed, a) : ChannelParams(a, fixed);
            SweepRow row{.axis_value = a, .series_value = fixed, .cells = {}};
            row.cells.reserve(spec.quantities.size());
            for (const Quantity q : spec.quantities) {
                row.cells.push_back(evaluate(q, params, spec.unit, p_zeros));
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string format_number(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

void write_csv(std::ostream& out, const SweepSpec& spec, const std::vector<SweepRow>& rows) {
    const bool p_axis = spec.axis == SweepAxis::P;
    out << "# qudepol sweep\n";
    out << "# axis=" << (p_axis ? "p" : "d") << " range=" << format_number(spec.range.start) << ':'
        << format_number(spec.range.stop) << ':' << spec.range.points << (spec.range.log_spaced ? ":log" : "")
        << " fixed=" << join_numbers(spec.fixed_values)
        << " unit=" << (spec.unit == RateUnit::BitsPerUse ? "bits" : "qudits") << " quantities=";
    for (size_t i = 0; i < spec.quantities.size(); ++i) {
        out << (i > 0 ? "," : "") << quantity_name(spec.quantities[i]);
    }
    out << "\n# gain and derivative are in qudits per use regardless of unit\n";

    out << (p_axis ? "p,d" : "d,p");
    for (const Quantity q : spec.quantities) {
        out << ',' << quantity_name(q);
    }
    out << '\n';
    for (const auto& row : rows) {
        out << format_number(row.axis_value) << ',' << format_number(row.series_value);
        for (const auto& cell : row.cells) {
            out << ',';
            switch (cell.kind) {
                case SweepCell::Kind::Finite:
                    out << format_number(cell.value);
                    break;
                case SweepCell::Kind::Divergent:
                    out << "div";
                    break;
                case SweepCell::Kind::Indeterminate:
                    out << "indet";
                    break;
            }
        }
        out << '\n';
    }
}

std::vector<double> monotonicity_dimensions(double d_low) {
    std::vector<double> ds{d_low, d_low + 1.0, 2.0 * d_low, d_low * d_low, kLargestPresetDimension};
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    ds.erase(std::remove_if(ds.begin(), ds.end(), [&](double d) { return d < d_low; }), ds.end());
    return ds;
}

ReportData build_report(std::span<const double> d_list) {
    if (d_list.empty()) {
        throw DomainError("report: dimension list is empty");
    }
    ReportData data;
    for (const double d : d_list) {
        data.thresholds.push_back({d, p_zero(d), antidegradable_threshold(d)});
    }
    data.d_max = *std::max_element(d_list.begin(), d_list.end());
    const double allowance = 2.0 / std::log2(data.d_max);
    for (const double p : {0.1, 0.25, 0.4}) {
        const double q = coherent_information(ChannelParams(data.d_max, p), RateUnit::QuditsPerUse, true);
        data.limits.push_back({p, std::abs(q - asymptotic_coherent_information(p)), allowance});
    }

    constexpr int kGridPoints = 100;
    for (const auto& row : data.thresholds) {
        const auto dims = monotonicity_dimensions(row.d);
        for (int k = 1; k <= kGridPoints; ++k) {
            const double p = row.p_zero * k / (kGridPoints + 1);
            ++data.grid_points;
            double previous = superadditivity_gain_nc(ChannelParams(dims.front(), p));
            for (size_t i = 1; i < dims.size(); ++i) {
                const double current = superadditivity_gain_nc(ChannelParams(dims[i], p));
                if (!(current < previous)) {
                    ++data.monotonicity_violations;
                }
                previous = current;
            }
        }
    }
    return data;
}

std::string format_report(const ReportData& data) {
    std::ostringstream out;
    char line[160];
    out << "Zero-crossing and antidegradability thresholds\n";
    std::snprintf(line, sizeof(line), "%14s  %18s  %18s  %18s\n", "d", "p_zero", "threshold", "gap");
    out << line;
    for (const auto& row : data.thresholds) {
        std::snprintf(line, sizeof(line), "%14.10g  %18.15f  %18.15f  %18.15f\n", row.d, row.p_zero,
                      row.threshold, row.threshold - row.p_zero);
        out << line;
    }
    out << "\nLarge-d limit at d = " << format_number(data.d_max) << "\n";
    for (const auto& check : data.limits) {
        std::snprintf(line, sizeof(line), "  p = %.2f  |Q_coh^d - (1-2p)| = %.6e  (allowance %.6e) %s\n", check.p,
                      check.deviation, check.allowance, check.deviation <= check.allowance ? "ok" : "EXCEEDED");
        out << line;
    }
    out << "\nGain monotonicity in d below p_zero(d_l): " << data.grid_points << " grid points, "
        << data.monotonicity_violations << " violations\n";
    return out.str();
}

VerifyResult verify(const VerifyOptions& options) {
    return verify(options, [](double d, double p) {
        return coherent_information(ChannelParams(d, p), RateUnit::BitsPerUse, false);
    });
}

VerifyResult verify(const VerifyOptions& options, const ClosedForm& closed_form) {
    if (options.d_max < 2 || options.d_max > kMaxSearchDimension) {
        throw DomainError("dmax: must lie in [2, " + std::to_string(kMaxSearchDimension) + "]");
    }
    if (options.p_points < 2) {
        throw DomainError("ppoints: must be >= 2");
    }
    if (options.trials < 1) {
        throw DomainError("trials: must be >= 1");
    }
    VerifyResult result;
    char line[200];
    for (int d = 2; d <= options.d_max; ++d) {
        const DensityMatrix mixed = DensityMatrix::maximally_mixed(d);
        for (int k = 0; k < options.p_points; ++k) {
            const double p = static_cast<double>(k) / (options.p_points - 1);
            const double expected = closed_form(d, p);
            const double simulated = state_coherent_information(mixed, depolarizing_kraus(d, p));
            const double residual = std::abs(expected - simulated);
            result.max_oracle_residual = std::max(result.max_oracle_residual, residual);
            if (!(residual <= kOracleTolerance)) {
                std::snprintf(line, sizeof(line),
                              "oracle mismatch at d=%d p=%.17g: closed form %.17g, simulation %.17g", d, p,
                              expected, simulated);
                result.failures.emplace_back(line);
            }

            const double searched = max_coherent_information_search(d, p, options.trials, options.seed,
                                                                     options.workers);
            const double excess = searched - std::max(0.0, expected);
            result.max_search_excess = std::max(result.max_search_excess, excess);
            if (!(excess <= kOracleTolerance)) {
                std::snprintf(line, sizeof(line),
                              "random search at d=%d p=%.17g found %.17g above the closed-form maximum", d, p,
                              excess);
                result.failures.emplace_back(line);
            }
        }
    }
    result.passed = result.failures.empty();

    std::ostringstream out;
    out << "verify: d = 2.." << options.d_max << ", " << options.p_points << " p values, " << options.trials
        << " random states, seed " << options.seed << '\n';
    std::snprintf(line, sizeof(line), "  max oracle residual        %.3e (tolerance %.0e)\n",
                  result.max_oracle_residual, kOracleTolerance);
    out << line;
    std::snprintf(line, sizeof(line), "  max random-search excess   %.3e (tolerance %.0e)\n", result.max_search_excess,
                  kOracleTolerance);
    out << line;
    for (const auto& failure : result.failures) {
        out << "  FAIL " << failure << '\n';
    }
    out << (result.passed ? "PASS" : "FAIL") << '\n';
    result.summary = out.str();
    return result;
}

}  // namespace qudepol
