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
#include <numbers>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "pathloss/error.hpp"
#include "pathloss/text.hpp"

namespace pathloss {

inline constexpr double speed_of_light_m_s = 299'792'458.0;

/// Free-space path loss at the reference distance: 20 log10(4 pi d0 / lambda).
inline double fspl_db(double frequency_hz, double d0_m) {
    if (!(frequency_hz > 0.0)) {
        throw ValidationError("frequency must be positive, got " + detail::format_double(frequency_hz));
    }
    if (!(d0_m > 0.0)) {
        throw ValidationError("reference distance must be positive, got " + detail::format_double(d0_m));
    }
    const double wavelength_m = speed_of_light_m_s / frequency_hz;
    return 20.0 * std::log10(4.0 * std::numbers::pi * d0_m / wavelength_m);
}

/// Close-in model parameters: mean path loss FSPL(f, d0) + 10 n log10(d/d0),
/// with shadow-fading standard deviation sigma about that line.
struct CiParams {
    double n = 2.0;
    double sigma_db = 0.0;
    double frequency_hz = 0.0;
    double d0_m = 1.0;
};

/// Floating-intercept model parameters: mean path loss alpha + 10 beta log10(d).
struct FiParams {
    double alpha_db = 0.0;
    double beta = 2.0;
    double sigma_db = 0.0;
};

/// ZMS model parameters: the close-in line plus a scenario-level
/// cross-polarization correction in dB. The correction is 0 for the
/// co-polarized LOS case, where the model coincides with the CI model.
struct ZmsParams {
    double n = 2.0;
    double correction_db = 0.0;
    double sigma_db = 0.0;
    double frequency_hz = 0.0;
    double d0_m = 1.0;
};

namespace detail {

// Shared by the predictors and the synthetic generator so that the two
// evaluate bit-identical expressions.
inline double log_distance_mean_db(double n, double fspl_ref_db, double d0_m, double distance_m) {
    return fspl_ref_db + 10.0 * n * std::log10(distance_m / d0_m);
}

inline double floating_intercept_mean_db(double alpha_db, double beta, double distance_m) {
    return alpha_db + 10.0 * beta * std::log10(distance_m);
}

inline void require_at_least_reference(double distance_m, double d0_m) {
    if (!(distance_m >= d0_m)) {
        throw ValidationError("distance " + format_double(distance_m) +
                              " m below reference distance d0 = " + format_double(d0_m) + " m");
    }
}

}  // namespace detail

/// Mean CI path loss at distance d >= d0. The shadow-fading term is never
/// added here; randomness enters only through the synthetic generator.
inline double predict_ci(const CiParams& params, double distance_m) {
    detail::require_at_least_reference(distance_m, params.d0_m);
    return detail::log_distance_mean_db(params.n, fspl_db(params.frequency_hz, params.d0_m),
                                        params.d0_m, distance_m);
}

/// Mean FI path loss at distance d > 0.
inline double predict_fi(const FiParams& params, double distance_m) {
    if (!(distance_m > 0.0)) {
        throw ValidationError("distance must be positive, got " + detail::format_double(distance_m));
    }
    return detail::floating_intercept_mean_db(params.alpha_db, params.beta, distance_m);
}

/// Mean ZMS path loss at distance d >= d0. With a zero correction this is
/// exactly predict_ci for matching parameters.
inline double predict_zms(const ZmsParams& params, double distance_m) {
    detail::require_at_least_reference(distance_m, params.d0_m);
    return detail::log_distance_mean_db(params.n, fspl_db(params.frequency_hz, params.d0_m),
                                        params.d0_m, distance_m) +
           params.correction_db;
}

enum class ModelId { CI, FI, ZMS };

inline std::string_view to_string(ModelId id) {
    switch (id) {
        case ModelId::CI: return "CI";
        case ModelId::FI: return "FI";
        case ModelId::ZMS: return "ZMS";
    }
    return "?";
}

inline ModelId parse_model_id(std::string_view label) {
    const std::string u = detail::to_upper(detail::trim(label));
    if (u == "CI") return ModelId::CI;
    if (u == "FI") return ModelId::FI;
    if (u == "ZMS") return ModelId::ZMS;
    throw ValidationError("unknown model '" + std::string(label) + "' (expected CI, FI or ZMS)");
}

using ModelParams = std::variant<CiParams, FiParams, ZmsParams>;

inline ModelId model_id(const ModelParams& params) {
    if (std::holds_alternative<CiParams>(params)) return ModelId::CI;
    if (std::holds_alternative<FiParams>(params)) return ModelId::FI;
    return ModelId::ZMS;
}

inline double predict_db(const ModelParams& params, double distance_m) {
    struct Visitor {
        double distance_m;
        double operator()(const CiParams& p) const { return predict_ci(p, distance_m); }
        double operator()(const FiParams& p) const { return predict_fi(p, distance_m); }
        double operator()(const ZmsParams& p) const { return predict_zms(p, distance_m); }
    };
    return std::visit(Visitor{distance_m}, params);
}

inline double sigma_db(const ModelParams& params) {
    return std::visit([](const auto& p) { return p.sigma_db; }, params);
}

/// The distance exponent of the fitted line: n for CI/ZMS, beta for FI.
inline double distance_exponent(const ModelParams& params) {
    struct Visitor {
        double operator()(const CiParams& p) const { return p.n; }
        double operator()(const FiParams& p) const { return p.beta; }
        double operator()(const ZmsParams& p) const { return p.n; }
    };
    return std::visit(Visitor{}, params);
}

/// Parameter key/value pairs in the serialization order, names as used in
/// the model definitions: n, sigma, alpha, beta, zms_correction.
inline std::vector<std::pair<std::string, double>> params_kv(const ModelParams& params) {
    struct Visitor {
        std::vector<std::pair<std::string, double>> operator()(const CiParams& p) const {
            return {{"n", p.n}, {"sigma", p.sigma_db}};
        }
        std::vector<std::pair<std::string, double>> operator()(const FiParams& p) const {
            return {{"alpha", p.alpha_db}, {"beta", p.beta}, {"sigma", p.sigma_db}};
        }
        std::vector<std::pair<std::string, double>> operator()(const ZmsParams& p) const {
            return {{"n", p.n}, {"zms_correction", p.correction_db}, {"sigma", p.sigma_db}};
        }
    };
    return std::visit(Visitor{}, params);
}

}  // namespace pathloss
