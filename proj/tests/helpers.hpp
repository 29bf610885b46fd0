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
#include <utility>
#include <vector>

#include "pathloss/pathloss.hpp"

namespace testutil {

// Builds a survey whose excess path loss P = PL - FSPL and log-distance
// L = 10 log10(d / d0) take the given values exactly; d = d0 * 10^(L/10).
inline pathloss::SurveyDataset dataset_from_lp(const std::vector<std::pair<double, double>>& lp,
                                               double frequency_hz = 28e9, double d0_m = 1.0,
                                               pathloss::Polarization pol = pathloss::Polarization::VV,
                                               pathloss::Scenario scen = pathloss::Scenario::LOS) {
    const double fspl = pathloss::fspl_db(frequency_hz, d0_m);
    std::vector<pathloss::PathLossSample> samples;
    samples.reserve(lp.size());
    for (const auto& [log_dist, excess] : lp) {
        pathloss::PathLossSample s;
        s.distance_m = d0_m * std::pow(10.0, log_dist / 10.0);
        s.path_loss_db = excess + fspl;
        s.frequency_hz = frequency_hz;
        s.polarization = pol;
        s.scenario = scen;
        samples.push_back(s);
    }
    return pathloss::SurveyDataset(std::move(samples), d0_m);
}

// Same survey with a constant added to every path loss value.
inline pathloss::SurveyDataset shifted_by(const pathloss::SurveyDataset& ds, double delta_db) {
    std::vector<pathloss::PathLossSample> samples = ds.samples();
    for (pathloss::PathLossSample& s : samples) {
        s.path_loss_db += delta_db;
        s.rx_power_lin.reset();
    }
    return pathloss::SurveyDataset(std::move(samples), ds.d0_m());
}

struct OlsFit {
    double alpha = 0.0;
    double beta = 0.0;
};

// Textbook least squares of path loss on 10 log10(d), in the centered
// covariance form. Kept independent of the closed forms under test.
inline OlsFit textbook_ols(const pathloss::SurveyDataset& ds) {
    const double count = static_cast<double>(ds.size());
    double mean_l = 0.0;
    double mean_c = 0.0;
    for (const pathloss::PathLossSample& s : ds.samples()) {
        mean_l += 10.0 * std::log10(s.distance_m);
        mean_c += s.path_loss_db;
    }
    mean_l /= count;
    mean_c /= count;
    double s_ll = 0.0;
    double s_lc = 0.0;
    for (const pathloss::PathLossSample& s : ds.samples()) {
        const double dl = 10.0 * std::log10(s.distance_m) - mean_l;
        const double dc = s.path_loss_db - mean_c;
        s_ll += dl * dl;
        s_lc += dl * dc;
    }
    OlsFit fit;
    fit.beta = s_lc / s_ll;
    fit.alpha = mean_c - fit.beta * mean_l;
    return fit;
}

}  // namespace testutil
