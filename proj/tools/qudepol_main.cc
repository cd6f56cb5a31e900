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

// Command-line front end: parameter sweeps to CSV, threshold report, and
// the simulation cross-check.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qudepol/errors.h"
#include "qudepol/sweep.h"

namespace {

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> parts;
    std::string current;
    for (const char c : text) {
        if (c == ',') {
            parts.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    parts.push_back(current);
    return parts;
}

std::vector<double> parse_numbers(const std::string& text, const std::string& field) {
    std::vector<double> values;
    for (const auto& part : split_list(text)) {
        try {
            size_t used = 0;
            values.push_back(std::stod(part, &used));
            if (used != part.size()) {
                throw std::invalid_argument(part);
            }
        } catch (const std::exception&) {
            throw qudepol::DomainError(field + ": cannot parse '" + part + "' as a number");
        }
    }
    return values;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Capacity bounds of the qudit depolarizing channel"};

    std::string preset;
    std::string axis;
    std::string range;
    std::string fixed;
    std::string unit = "qudits";
    std::string quantities;
    std::string out_path;
    std::string report_dims;
    bool run_verify = false;
    qudepol::VerifyOptions verify_options;

    app.add_option("--preset", preset, "Figure preset")->check(CLI::IsMember({"fig1", "fig2"}));
    app.add_option("--axis", axis, "Sweep axis")->check(CLI::IsMember({"p", "d"}));
    app.add_option("--range", range, "start:stop:points[:log]");
    app.add_option("--fixed", fixed, "Comma-separated values of the non-axis parameter");
    app.add_option("--unit", unit, "Rate unit")->check(CLI::IsMember({"bits", "qudits"}));
    app.add_option("--quantities", quantities,
                   "Comma-separated subset of coh,nc,gain,derivative,p_zero,private_lower,private_upper,ratio");
    app.add_option("--out", out_path, "CSV output file (default: standard output)");
    app.add_option("--report", report_dims, "Comma-separated dimensions for the threshold report");
    app.add_flag("--verify", run_verify, "Cross-check closed forms against the dense simulation");
    app.add_option("--dmax", verify_options.d_max, "Largest simulated dimension (2..8)");
    app.add_option("--ppoints", verify_options.p_points, "Number of p values in [0, 1]");
    app.add_option("--trials", verify_options.trials, "Random input states per (d, p)");
    app.add_option("--seed", verify_options.seed, "Random seed");
    app.add_option("--workers", verify_options.workers, "Threads for the random search");

    CLI11_PARSE(app, argc, argv);

    try {
        const int modes = (run_verify ? 1 : 0) + (report_dims.empty() ? 0 : 1) +
                          ((!preset.empty() || !axis.empty()) ? 1 : 0);
        if (modes != 1) {
            std::cerr << "choose exactly one of --preset/--axis, --report, --verify\n";
            return 2;
        }

        if (run_verify) {
            const auto result = qudepol::verify(verify_options);
            std::cout << result.summary;
            return result.passed ? 0 : 1;
        }

        if (!report_dims.empty()) {
            const auto dims = parse_numbers(report_dims, "report");
            std::cout << qudepol::format_report(qudepol::build_report(dims));
            return 0;
        }

        qudepol::SweepSpec spec;
        if (!preset.empty()) {
            spec = qudepol::preset_spec(preset);
        } else {
            spec.axis = axis == "d" ? qudepol::SweepAxis::D : qudepol::SweepAxis::P;
            if (range.empty() || fixed.empty()) {
                std::cerr << "--axis requires --range and --fixed\n";
                return 2;
            }
            spec.range = qudepol::parse_range(range);
            spec.fixed_values = parse_numbers(fixed, "fixed");
            spec.unit = unit == "bits" ? qudepol::RateUnit::BitsPerUse : qudepol::RateUnit::QuditsPerUse;
            spec.quantities.clear();
            for (const auto& name : split_list(quantities.empty() ? std::string("gain") : quantities)) {
                spec.quantities.push_back(qudepol::parse_quantity(name));
            }
        }
        const auto rows = qudepol::run_sweep(spec);
        if (out_path.empty()) {
            qudepol::write_csv(std::cout, spec, rows);
        } else {
            std::ofstream file(out_path, std::ios::binary);
            if (!file) {
                std::cerr << "cannot open " << out_path << " for writing\n";
                return 1;
            }
            qudepol::write_csv(file, spec, rows);
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
