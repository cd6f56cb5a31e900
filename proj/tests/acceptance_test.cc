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

// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qudepol/capacity.h"
#include "qudepol/channel_sim.h"
#include "qudepol/errors.h"
#include "test_support.h"

#ifndef QUDEPOL_CLI_PATH
#error "QUDEPOL_CLI_PATH must point at the qudepol executable"
#endif

using namespace qudepol;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    double budget_seconds;
    std::function<Outcome()> run;
};

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), pattern, a, b, c);
    return buf;
}

double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

double closed_form_bits(double d, double p) {
    return coherent_information(ChannelParams(d, p), RateUnit::BitsPerUse, false);
}

double gain(double d, double p) { return superadditivity_gain_nc(ChannelParams(d, p)); }

Outcome oracle_equivalence() {
    double worst = 0.0;
    for (int d : {2, 3, 4, 5, 8}) {
        for (double p : {0.01, 0.05, 0.1, 0.2, 0.3}) {
            const double sim = state_coherent_information(DensityMatrix::maximally_mixed(d), depolarizing_kraus(d, p));
            worst = std::max(worst, std::abs(sim - closed_form_bits(d, p)));
        }
    }
    return {worst <= 1e-9, fmt("max |closed form - simulation| = %.3e bits (tol 1e-9)", worst)};
}

Outcome channel_form_equivalence() {
    std::mt19937_64 rng(20260101);
    double worst = 0.0;
    for (int d = 2; d <= 8; ++d) {
        for (double p : {0.0, 0.25, 0.5, 1.0}) {
            const auto kraus = depolarizing_kraus(d, p);
            const ComplexMatrix mixed = ComplexMatrix::Identity(d, d) / static_cast<double>(d);
            for (int i = 0; i < 100; ++i) {
                const auto rho = random_density_matrix(d, rng);
                const ComplexMatrix direct = (1.0 - p) * rho.matrix() + p * mixed;
                worst = std::max(worst, max_abs(apply_channel(rho, kraus).matrix() - direct));
            }
        }
    }
    return {worst <= 1e-12, fmt("max-norm residual = %.3e (tol 1e-12)", worst)};
}

Outcome gain_monotonicity() {
    int violations = 0;
    int points = 0;
    for (double d_low : {2.0, 4.0, 32.0}) {
        std::vector<double> dims{d_low, d_low + 1, 2 * d_low, d_low * d_low, 1048576.0};
        std::sort(dims.begin(), dims.end());
        dims.erase(std::unique(dims.begin(), dims.end()), dims.end());
        const double root = p_zero(d_low);
        for (int k = 1; k <= 100; ++k) {
            const double p = root * k / 101.0;
            ++points;
            for (size_t i = 1; i < dims.size(); ++i) {
                if (!(gain(dims[i], p) < gain(dims[i - 1], p))) ++violations;
            }
        }
    }
    return {violations == 0, fmt("%.0f violations over %.0f (d_l, p) points", violations, points)};
}

Outcome derivative_check() {
    double worst_rel = 0.0;
    double largest = -1.0;
    int points = 0;
    for (int i = 0; i < 40; ++i) {
        const double d = 2.0 + 98.0 * i / 39.0;
        const double root = p_zero(d);
        for (int k = 1; k <= 25; ++k) {
            const double p = root * k / 26.0;
            const double analytic = gain_derivative_in_d(ChannelParams(d, p));
            const auto fd = static_cast<double>(qudepol::testing::finite_difference_gain(d, p, 1e-5L));
            worst_rel = std::max(worst_rel, std::abs(analytic - fd) / std::abs(fd));
            largest = std::max(largest, analytic);
            ++points;
        }
    }
    return {worst_rel <= 1e-6 && largest < 0.0,
            fmt("%.0f points, max relative FD error %.3e (tol 1e-6), largest derivative %.3e", points, worst_rel,
                largest)};
}

Outcome asymptotics() {
    bool ok = true;
    double worst_margin = -1.0;
    for (double d : {0x1p10, 0x1p20, 0x1p40}) {
        for (double p : {0.01, 0.1, 0.25, 0.4, 0.6}) {
            const double q = coherent_information(ChannelParams(d, p), RateUnit::QuditsPerUse, true);
            const double dev = std::abs(q - std::max(0.0, 1 - 2 * p));
            const double allowance = 2.0 / std::log2(d);
            ok = ok && dev <= allowance;
            worst_margin = std::max(worst_margin, dev / allowance);
            if (p == 0.6) ok = ok && q == 0.0;
        }
    }
    return {ok, fmt("max deviation / allowance = %.3f; p = 0.6 clamps to exactly 0", worst_margin)};
}

Outcome p_zero_behavior() {
    bool ok = true;
    double previous = 0.0;
    int worst_iterations = 0;
    for (double d : {2.0, 3.0, 4.0, 8.0, 16.0, 64.0, 1024.0, 1e6}) {
        const RootResult r = p_zero_bisection(d, 1e-12);
        ok = ok && r.root > previous && r.root < d / (2 * (d + 1));
        worst_iterations = std::max(worst_iterations, r.iterations);
        // Converged: the unclamped value changes sign across +-tol.
        ok = ok && closed_form_bits(d, r.root - 1e-12) > 0 && closed_form_bits(d, r.root + 1e-12) < 0;
        previous = r.root;
    }
    ok = ok && previous > 0.45 && previous < 0.5 && worst_iterations <= 60;
    return {ok, fmt("p_zero(1e6) = %.12f, max iterations %.0f (limit 60)", previous, worst_iterations)};
}

Outcome private_sandwich() {
    bool ordered = true;
    bool zero_past_threshold = true;
    int points = 0;
    for (int i = 0; i < 100; ++i) {
        const double d = std::exp2(1.0 + 29.0 * i / 99.0);
        const double threshold = antidegradable_threshold(d);
        std::vector<double> ps;
        for (int k = 0; k < 99; ++k) ps.push_back(k / 98.0);
        ps.push_back(threshold);
        for (double p : ps) {
            for (auto unit : {RateUnit::BitsPerUse, RateUnit::QuditsPerUse}) {
                const auto b = private_capacity_bounds(ChannelParams(d, p), unit);
                ordered = ordered && b.lower <= b.upper;
                if (p >= threshold) zero_past_threshold = zero_past_threshold && b.lower == 0.0 && b.upper == 0.0;
            }
            ++points;
        }
    }
    bool shrinking = true;
    double previous = 2.0;
    for (double d : {2.0, 4.0, 16.0, 256.0, 1048576.0}) {
        const auto b = private_capacity_bounds(ChannelParams(d, 0.2), RateUnit::QuditsPerUse);
        const double width = b.upper - b.lower;
        shrinking = shrinking && width < previous;
        previous = width;
    }
    std::ostringstream detail;
    detail << points << " grid points; ordered " << (ordered ? "yes" : "no") << ", zero past threshold "
           << (zero_past_threshold ? "yes" : "no") << ", width decreasing in d " << (shrinking ? "yes" : "no");
    return {ordered && zero_past_threshold && shrinking, detail.str()};
}


Outcome representation_invariance() {
    std::mt19937_64 rng(8);
    double worst = 0.0;
    for (int d : {2, 3, 4}) {
        const auto kraus = depolarizing_kraus(d, 0.17);
        const auto m = static_cast<int>(kraus.operators.size());
        for (int trial = 0; trial < 20; ++trial) {
            const auto rho = random_density_matrix(d, rng);
            const double reference = state_coherent_information(rho, kraus);
            const ComplexMatrix u = qudepol::testing::random_unitary(m, rng);
            KrausSet remixed{.dim = d, .operators = {}};
            for (int a = 0; a < m; ++a) {
                ComplexMatrix k = ComplexMatrix::Zero(d, d);
                for (int b = 0; b < m; ++b) k += u(a, b) * kraus.operators[static_cast<size_t>(b)];
                remixed.operators.push_back(std::move(k));
            }
            worst = std::max(worst, std::abs(state_coherent_information(rho, remixed) - reference));
        }
    }
    return {worst <= 1e-9, fmt("max change under remixing = %.3e bits (tol 1e-9)", worst)};
}

Outcome random_search_support() {
    double worst = -1e300;
    for (int d : {2, 3}) {
        for (double p : {0.05, 0.1, 0.2}) {
            const double mixed = state_coherent_information(DensityMatrix::maximally_mixed(d), depolarizing_kraus(d, p));
            const double best = max_coherent_information_search(d, p, 500, 12345);
            worst = std::max(worst, best - mixed);
        }
    }
    return {worst <= 1e-9, fmt("max excess over maximally mixed input = %.3e (tol 1e-9)", worst)};
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome cli_determinism() {
    const std::filesystem::path dir = std::filesystem::temp_directory_path() / "qudepol_acceptance";
    std::filesystem::create_directories(dir);
    const std::string cli = QUDEPOL_CLI_PATH;
    const auto first = dir / "fig1_a.csv";
    const auto second = dir / "fig1_b.csv";
    const int run_a = std::system(("\"" + cli + "\" --preset fig1 --out \"" + first.string() + "\"").c_str());
    const int run_b = std::system(("\"" + cli + "\" --preset fig1 --out \"" + second.string() + "\"").c_str());
    const std::string a = slurp(first);
    const bool identical = run_a == 0 && run_b == 0 && !a.empty() && a == slurp(second);
    const int verify_status =
        std::system(("\"" + cli + "\" --verify --dmax 5 > \"" + (dir / "verify.txt").string() + "\"").c_str());
    std::filesystem::remove_all(dir);
    return {identical && verify_status == 0,
            fmt("fig1 CSV identical=%.0f (%.0f bytes); --verify --dmax 5 status %.0f", identical,
                static_cast<double>(a.size()), verify_status)};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "oracle equivalence", 10, oracle_equivalence},
        {2, "channel-form equivalence", 10, channel_form_equivalence},
        {3, "gain monotone in d", 5, gain_monotonicity},
        {4, "derivative vs finite difference", 5, derivative_check},
        {5, "large-d asymptotics", 1, asymptotics},
        {6, "zero-crossing behavior", 1, p_zero_behavior},
        {7, "private capacity sandwich", 2, private_sandwich},
        {8, "Kraus representation invariance", 10, representation_invariance},
        {9, "random-search optimality support", 60, random_search_support},
        {10, "CLI determinism and verify", 30, cli_determinism},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = seconds < c.budget_seconds;
        const bool passed = outcome.passed && in_time;
        failures += passed ? 0 : 1;
        std::printf("[%s] %2d %-34s %s (%.3f s, budget %.0f s)\n", passed ? "PASS" : "FAIL", c.id, c.name.c_str(),
                    outcome.detail.c_str(), seconds, c.budget_seconds);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
