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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pathloss/error.hpp"
#include "pathloss/text.hpp"

namespace pathloss {

/// Antenna configuration of a survey: co-polarized, cross-polarized, or
/// vertical TX to omni-directional RX.
enum class Polarization { VV, VH, VOmni };

/// Propagation condition of a survey.
enum class Scenario { LOS, NLOS };

inline std::string_view to_string(Polarization p) {
    switch (p) {
        case Polarization::VV: return "VV";
        case Polarization::VH: return "VH";
        case Polarization::VOmni: return "VOMNI";
    }
    return "?";
}

/// Display form used in human-readable tables.
inline std::string_view display_name(Polarization p) {
    switch (p) {
        case Polarization::VV: return "V-V";
        case Polarization::VH: return "V-H";
        case Polarization::VOmni: return "V-Omni";
    }
    return "?";
}

inline std::string_view to_string(Scenario s) {
    return s == Scenario::LOS ? "LOS" : "NLOS";
}

/// Parses a polarization label (case-insensitive: VV, VH, VOMNI).
inline Polarization parse_polarization(std::string_view label) {
    const std::string u = detail::to_upper(detail::trim(label));
    if (u == "VV") return Polarization::VV;
    if (u == "VH") return Polarization::VH;
    if (u == "VOMNI") return Polarization::VOmni;
    throw ValidationError("unknown polarization '" + std::string(label) + "' (expected VV, VH or VOMNI)");
}

/// Parses a scenario label (case-insensitive: LOS, NLOS).
inline Scenario parse_scenario(std::string_view label) {
    const std::string u = detail::to_upper(detail::trim(label));
    if (u == "LOS") return Scenario::LOS;
    if (u == "NLOS") return Scenario::NLOS;
    throw ValidationError("unknown scenario '" + std::string(label) + "' (expected LOS or NLOS)");
}

/// One TX-RX measurement point.
///
/// rx_power_lin is the received power normalized to the transmit power
/// (dimensionless linear path gain). It is optional because only the ZMS
/// cross-polarization correction consumes it; CI and FI fits run on the
/// path loss alone.
struct PathLossSample {
    double distance_m = 0.0;
    double path_loss_db = 0.0;
    double frequency_hz = 0.0;
    Polarization polarization = Polarization::VV;
    Scenario scenario = Scenario::LOS;
    std::optional<double> rx_power_lin;
};

/// A validated survey: non-empty, one frequency, one polarization, one
/// scenario, every distance at or beyond the reference distance d0, sorted
/// ascending by distance. Immutable after construction, so datasets can be
/// shared freely across concurrent fits.
class SurveyDataset {
public:
    /// Validates and sorts; throws ValidationError on any invariant breach.
    /// dl_m defaults to the longest distance unless overridden.
    explicit SurveyDataset(std::vector<PathLossSample> samples, double d0_m = 1.0,
                           std::optional<double> dl_override_m = std::nullopt)
        : samples_(std::move(samples)), d0_m_(d0_m) {
        if (!(d0_m_ > 0.0) || !std::isfinite(d0_m_)) {
            throw ValidationError("reference distance d0 must be positive, got " + detail::format_double(d0_m_));
        }
        if (samples_.empty()) {
            throw ValidationError("dataset is empty");
        }
        for (std::size_t i = 0; i < samples_.size(); ++i) {
            const PathLossSample& s = samples_[i];
            const std::string where = "sample " + std::to_string(i + 1) + ": ";
            if (!std::isfinite(s.distance_m) || s.distance_m < d0_m_) {
                throw ValidationError(where + "distance " + detail::format_double(s.distance_m) +
                                      " m below reference distance d0 = " + detail::format_double(d0_m_) + " m");
            }
            if (!std::isfinite(s.path_loss_db) || s.path_loss_db <= 0.0) {
                throw ValidationError(where + "path loss must be positive, got " +
                                      detail::format_double(s.path_loss_db));
            }
            if (!std::isfinite(s.frequency_hz) || s.frequency_hz <= 0.0) {
                throw ValidationError(where + "frequency must be positive, got " +
                                      detail::format_double(s.frequency_hz));
            }
            if (s.rx_power_lin) {
                const double p = *s.rx_power_lin;
                if (!std::isfinite(p) || p <= 0.0 || p > 1.0) {
                    throw ValidationError(where + "rx_power_lin must be in (0, 1], got " +
                                          detail::format_double(p));
                }
            }
            if (s.frequency_hz != samples_.front().frequency_hz) {
                throw ValidationError("mixed frequency in dataset");
            }
            if (s.polarization != samples_.front().polarization) {
                throw ValidationError("mixed polarization in dataset");
            }
            if (s.scenario != samples_.front().scenario) {
                throw ValidationError("mixed scenario in dataset");
            }
        }
        std::stable_sort(samples_.begin(), samples_.end(),
                         [](const PathLossSample& a, const PathLossSample& b) {
                             return a.distance_m < b.distance_m;
                         });
        dl_m_ = dl_override_m.value_or(samples_.back().distance_m);
        if (!(dl_m_ > 0.0) || !std::isfinite(dl_m_)) {
            throw ValidationError("longest TX-RX distance must be positive, got " + detail::format_double(dl_m_));
        }
    }

    const std::vector<PathLossSample>& samples() const { return samples_; }
    std::size_t size() const { return samples_.size(); }
    double d0_m() const { return d0_m_; }
    double dl_m() const { return dl_m_; }
    double frequency_hz() const { return samples_.front().frequency_hz; }
    Polarization polarization() const { return samples_.front().polarization; }
    Scenario scenario() const { return samples_.front().scenario; }

    /// True when every sample carries a linear received power.
    bool has_rx_power() const {
        return std::all_of(samples_.begin(), samples_.end(),
                           [](const PathLossSample& s) { return s.rx_power_lin.has_value(); });
    }

private:
    std::vector<PathLossSample> samples_;
    double d0_m_;
    double dl_m_;
};

}  // namespace pathloss
