// SPDX-License-Identifier: Apache-2.0
//
// pathloss: fitting and comparison toolkit for indoor mm-wave path loss models
// Copyright (C) 2026 pathloss contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "pathloss/error.hpp"
#include "pathloss/models.hpp"
#include "pathloss/survey.hpp"

namespace pathloss {

// Closed-form estimators. Each minimizes the shadow-fading standard
// deviation of its model over the survey:
//
//   CI:  n = sum(P L) / sum(L^2)                     P = PL - FSPL(f, d0)
//   ZMS: n = (sum(P L) - Z sum(L)) / sum(L^2)        L = 10 log10(d / d0)
//   FI:  alpha, beta from the normal equations on    L = 10 log10(d), C = PL
//
// sigma is always the population deviation sqrt(sum(residual^2) / N).

namespace detail {

struct SlopeFit {
    double n = 0.0;
    double sigma_db = 0.0;
};

// Common core of the CI and ZMS fits; correction_db = 0 reproduces the CI
// arithmetic bit-for-bit.
inline SlopeFit fit_excess_slope(const SurveyDataset& ds, double correction_db) {
    const double fspl_ref = fspl_db(ds.frequency_hz(), ds.d0_m());
    double sum_pl = 0.0;
    double sum_l = 0.0;
    double sum_l2 = 0.0;
    for (const PathLossSample& s : ds.samples()) {
        const double excess = s.path_loss_db - fspl_ref;
        const double log_dist = 10.0 * std::log10(s.distance_m / ds.d0_m());
        sum_pl += excess * log_dist;
        sum_l += log_dist;
        sum_l2 += log_dist * log_dist;
    }
    if (sum_l2 == 0.0) {
        throw DegenerateFitError("all samples at the reference distance");
    }
    const double n = (sum_pl - correction_db * sum_l) / sum_l2;

    double sum_sq = 0.0;
    for (const PathLossSample& s : ds.samples()) {
        const double excess = s.path_loss_db - fspl_ref;
        const double log_dist = 10.0 * std::log10(s.distance_m / ds.d0_m());
        const double residual = excess - n * log_dist - correction_db;
        sum_sq += residual * residual;
    }
    return {n, std::sqrt(sum_sq / static_cast<double>(ds.size()))};
}

}  // namespace detail

/// Close-in fit: single exponent anchored at FSPL(f, d0).
inline CiParams fit_ci(const SurveyDataset& ds) {
    const detail::SlopeFit fit = detail::fit_excess_slope(ds, 0.0);
    return CiParams{fit.n, fit.sigma_db, ds.frequency_hz(), ds.d0_m()};
}

/// ZMS fit: the close-in fit with the scenario correction folded into the
/// excess path loss. A zero correction gives exactly the CI result.
inline ZmsParams fit_zms(const SurveyDataset& ds, double correction_db) {
    const detail::SlopeFit fit = detail::fit_excess_slope(ds, correction_db);
    return ZmsParams{fit.n, correction_db, fit.sigma_db, ds.frequency_hz(), ds.d0_m()};
}

/// Floating-intercept fit; equal to ordinary least squares of path loss on
/// 10 log10(d). Requires at least two distinct distances.
inline FiParams fit_fi(const SurveyDataset& ds) {
    if (ds.samples().front().distance_m == ds.samples().back().distance_m) {
        throw DegenerateFitError("all samples at one distance");
    }
    const double count = static_cast<double>(ds.size());
    double sum_l = 0.0;
    double sum_c = 0.0;
    double sum_lc = 0.0;
    double sum_l2 = 0.0;
    for (const PathLossSample& s : ds.samples()) {
        const double log_dist = 10.0 * std::log10(s.distance_m);
        sum_l += log_dist;
        sum_c += s.path_loss_db;
        sum_lc += log_dist * s.path_loss_db;
        sum_l2 += log_dist * log_dist;
    }
    const double denom = sum_l * sum_l - count * sum_l2;
    if (denom == 0.0) {
        throw DegenerateFitError("all samples at one distance");
    }
    const double alpha = (sum_l * sum_lc - sum_l2 * sum_c) / denom;
    const double beta = (sum_l * sum_c - count * sum_lc) / denom;

    double sum_sq = 0.0;
    for (const PathLossSample& s : ds.samples()) {
        const double log_dist = 10.0 * std::log10(s.distance_m);
        const double residual = s.path_loss_db - beta * log_dist - alpha;
        sum_sq += residual * residual;
    }
    return FiParams{alpha, beta, std::sqrt(sum_sq / count)};
}

/// One (distance, linear path gain) pair feeding the ZMS correction.
struct PowerSample {
    double distance_m = 0.0;
    double power_lin = 0.0;
};

/// Inputs for the scenario-level ZMS correction.
///
/// primary_powers and reference_powers are aligned index-by-index after both
/// surveys are sorted by distance; los_count leading entries are the LOS
/// part of the index range, the rest NLOS. d_r_m is the average distance
/// over the reference RX positions, dl_m the longest TX-RX separation of
/// the fitted survey.
struct ZmsCorrectionInput {
    std::vector<PowerSample> primary_powers;
    std::vector<PowerSample> reference_powers;
    double d_r_m = 0.0;
    double dl_m = 0.0;
    Polarization polarization = Polarization::VV;
    Scenario scenario = Scenario::LOS;
    std::size_t los_count = 0;
};

/// Adjust factor for the V-Omni NLOS branch:
/// |(sqrt(p_primary d_t) - sqrt(p_reference d_r)) / 2|.
inline double compute_rnl(double p_primary_lin, double d_t_m, double p_reference_lin, double d_r_m) {
    if (!(p_primary_lin > 0.0) || !(d_t_m > 0.0) || !(p_reference_lin > 0.0) || !(d_r_m > 0.0)) {
        throw ValidationError("adjust factor inputs must all be positive");
    }
    return std::abs((std::sqrt(p_primary_lin * d_t_m) - std::sqrt(p_reference_lin * d_r_m)) / 2.0);
}

/// Reference polarization paired with a fitted survey, or nullopt for the
/// co-polarized LOS case whose correction is identically zero.
inline std::optional<Polarization> zms_reference_polarization(Polarization polarization,
                                                              Scenario scenario) {
    switch (polarization) {
        case Polarization::VV:
            return scenario == Scenario::LOS ? std::optional<Polarization>{}
                                             : std::optional<Polarization>{Polarization::VOmni};
        case Polarization::VH:
            return scenario == Scenario::LOS ? Polarization::VOmni : Polarization::VV;
        case Polarization::VOmni:
            return Polarization::VV;
    }
    throw ValidationError("unknown polarization");
}

/// Scenario-level ZMS correction.
///
/// One scalar per (polarization, scenario) survey pair: the summed squared
/// gap between distance-weighted root powers of the fitted survey and a
/// reference term, divided by the longest TX-RX separation D_L. The scalar
/// is applied directly as a dB correction. Branches:
///
///   V-V    LOS   0, always
///   V-V    NLOS  reference V-Omni; both terms weighted by the sample distance d_t
///   V-H    LOS   reference V-Omni; reference term weighted by d_r
///   V-H    NLOS  reference V-V;    reference term weighted by d_r
///   V-Omni LOS   reference V-V;    reference term weighted by d_r
///   V-Omni NLOS  reference term is the adjust factor R_NL from the sample
///                and the V-V reference at d_r
///
/// LOS branches sum the LOS index range, NLOS branches the NLOS range.
inline double compute_zms_correction(const ZmsCorrectionInput& in) {
    if (in.polarization == Polarization::VV && in.scenario == Scenario::LOS) {
        return 0.0;
    }
    if (!(in.dl_m > 0.0)) {
        throw ValidationError("correction: longest TX-RX distance must be positive");
    }
    if (!(in.d_r_m > 0.0)) {
        throw ValidationError("correction: average reference distance must be positive");
    }
    if (in.primary_powers.empty()) {
        throw ValidationError("correction: primary powers required for " +
                              std::string(to_string(in.polarization)) + " " +
                              std::string(to_string(in.scenario)));
    }
    if (in.reference_powers.size() != in.primary_powers.size()) {
        throw ValidationError("correction: primary has " + std::to_string(in.primary_powers.size()) +
                              " powers but reference has " + std::to_string(in.reference_powers.size()));
    }
    if (in.los_count > in.primary_powers.size()) {
        throw ValidationError("correction: LOS split exceeds the sample count");
    }

    const std::size_t begin = in.scenario == Scenario::LOS ? 0 : in.los_count;
    const std::size_t end = in.scenario == Scenario::LOS ? in.los_count : in.primary_powers.size();
    if (begin >= end) {
        throw ValidationError("correction: no " + std::string(to_string(in.scenario)) +
                              " samples in the index range");
    }

    double acc = 0.0;
    for (std::size_t i = begin; i < end; ++i) {
        const PowerSample& primary = in.primary_powers[i];
        const PowerSample& reference = in.reference_powers[i];
        if (!(primary.power_lin > 0.0) || !(primary.distance_m > 0.0)) {
            throw ValidationError("correction: non-positive primary power or distance at index " +
                                  std::to_string(i));
        }
        if (!(reference.power_lin > 0.0)) {
            throw ValidationError("correction: non-positive reference power at index " +
                                  std::to_string(i));
        }
        const double primary_term = std::sqrt(primary.power_lin * primary.distance_m);
        double reference_term = 0.0;
        if (in.polarization == Polarization::VV) {
            // NLOS only here; the reference power is weighted by the same d_t.
            reference_term = std::sqrt(reference.power_lin * primary.distance_m);
        } else if (in.polarization == Polarization::VOmni && in.scenario == Scenario::NLOS) {
            reference_term = compute_rnl(primary.power_lin, primary.distance_m,
                                         reference.power_lin, in.d_r_m);
        } else {
            reference_term = std::sqrt(reference.power_lin * in.d_r_m);
        }
        const double gap = primary_term - reference_term;
        acc += gap * gap;
    }
    return acc / in.dl_m;
}

/// Builds the correction input from a fitted survey and its paired
/// reference survey. Both must carry rx_power_lin on every sample, share
/// scenario and frequency, and have equal sample counts; the reference
/// polarization must match the pairing table.
inline ZmsCorrectionInput make_zms_correction_input(const SurveyDataset& primary,
                                                    const SurveyDataset& reference) {
    const auto expected = zms_reference_polarization(primary.polarization(), primary.scenario());
    if (!expected) {
        throw ValidationError("V-V LOS takes no reference survey; its correction is 0");
    }
    if (reference.polarization() != *expected) {
        throw ValidationError("reference polarization must be " + std::string(to_string(*expected)) +
                              " for a " + std::string(to_string(primary.polarization())) + " " +
                              std::string(to_string(primary.scenario())) + " fit, got " +
                              std::string(to_string(reference.polarization())));
    }
    if (reference.scenario() != primary.scenario()) {
        throw ValidationError("primary and reference surveys must share one scenario");
    }
    if (reference.frequency_hz() != primary.frequency_hz()) {
        throw ValidationError("primary and reference surveys must share one frequency");
    }
    if (reference.size() != primary.size()) {
        throw ValidationError("primary has " + std::to_string(primary.size()) +
                              " samples but reference has " + std::to_string(reference.size()));
    }
    if (!primary.has_rx_power()) {
        throw ValidationError("primary survey is missing rx_power_lin values");
    }
    if (!reference.has_rx_power()) {
        throw ValidationError("reference survey is missing rx_power_lin values");
    }

    ZmsCorrectionInput in;
    in.polarization = primary.polarization();
    in.scenario = primary.scenario();
    in.dl_m = primary.dl_m();
    in.los_count = primary.scenario() == Scenario::LOS ? primary.size() : 0;
    in.primary_powers.reserve(primary.size());
    in.reference_powers.reserve(reference.size());
    double distance_sum = 0.0;
    for (const PathLossSample& s : primary.samples()) {
        in.primary_powers.push_back({s.distance_m, *s.rx_power_lin});
    }
    for (const PathLossSample& s : reference.samples()) {
        in.reference_powers.push_back({s.distance_m, *s.rx_power_lin});
        distance_sum += s.distance_m;
    }
    in.d_r_m = distance_sum / static_cast<double>(reference.size());
    return in;
}

/// Result of the brute-force shadow-fading minimizer.
struct OracleFit {
    double n = 0.0;
    double sigma_db = 0.0;
};

/// Exhaustive grid search for the exponent minimizing the shadow-fading
/// deviation, evaluating the residual sum directly at every candidate.
/// correction_db = 0 is the CI objective; nonzero is the ZMS objective.
/// Default grid spans every plausible indoor exponent with margin.
inline OracleFit brute_force_fit(const SurveyDataset& ds, double correction_db = 0.0,
                                 double n_min = 0.0, double n_max = 12.0, double step = 1e-4) {
    if (!(step > 0.0)) {
        throw ValidationError("oracle: step must be positive");
    }
    if (!(n_max >= n_min) || !std::isfinite(n_min) || !std::isfinite(n_max)) {
        throw ValidationError("oracle: empty or non-finite exponent range");
    }

    const double fspl_ref = fspl_db(ds.frequency_hz(), ds.d0_m());
    std::vector<double> log_dist(ds.size());
    std::vector<double> excess(ds.size());
    for (std::size_t i = 0; i < ds.size(); ++i) {
        const PathLossSample& s = ds.samples()[i];
        log_dist[i] = 10.0 * std::log10(s.distance_m / ds.d0_m());
        excess[i] = s.path_loss_db - fspl_ref - correction_db;
    }

    const auto objective = [&](double n) {
        double sum_sq = 0.0;
        for (std::size_t i = 0; i < log_dist.size(); ++i) {
            const double residual = excess[i] - n * log_dist[i];
            sum_sq += residual * residual;
        }
        return sum_sq;
    };

    const std::size_t steps = static_cast<std::size_t>(std::floor((n_max - n_min) / step + 1e-9));
    double best_n = n_min;
    double best_sum = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k <= steps; ++k) {
        const double n = n_min + static_cast<double>(k) * step;
        const double sum_sq = objective(n);
        if (sum_sq < best_sum) {
            best_sum = sum_sq;
            best_n = n;
        }
    }
    // The grid can stop one rounding error short of n_max; cover it.
    if (n_min + static_cast<double>(steps) * step < n_max) {
        const double sum_sq = objective(n_max);
        if (sum_sq < best_sum) {
            best_sum = sum_sq;
            best_n = n_max;
        }
    }
    return {best_n, std::sqrt(best_sum / static_cast<double>(ds.size()))};
}

}  // namespace pathloss
