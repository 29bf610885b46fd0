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

#include <array>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pathloss/error.hpp"
#include "pathloss/models.hpp"
#include "pathloss/survey.hpp"
#include "pathloss/text.hpp"

namespace pathloss {

/// Fit outcome over one survey: parameters, residual diagnostics, and the
/// survey context they belong to.
struct FitReport {
    ModelId model = ModelId::CI;
    ModelParams params;
    std::vector<double> residuals_db;
    double sigma_db = 0.0;
    double rmse_db = 0.0;
    std::size_t n_samples = 0;
    Polarization polarization = Polarization::VV;
    Scenario scenario = Scenario::LOS;
    double frequency_hz = 0.0;
    double d0_m = 1.0;
};

namespace detail {

inline void check_context(const SurveyDataset& ds, const ModelParams& params) {
    struct Visitor {
        const SurveyDataset& ds;
        void operator()(const CiParams& p) const { check(p.frequency_hz, p.d0_m); }
        void operator()(const FiParams&) const {}
        void operator()(const ZmsParams& p) const { check(p.frequency_hz, p.d0_m); }
        void check(double frequency_hz, double d0_m) const {
            if (frequency_hz != ds.frequency_hz()) {
                throw ValidationError("model frequency " + format_double(frequency_hz / 1e9) +
                                      " GHz does not match dataset frequency " +
                                      format_double(ds.frequency_hz() / 1e9) + " GHz");
            }
            if (d0_m != ds.d0_m()) {
                throw ValidationError("model d0 " + format_double(d0_m) +
                                      " m does not match dataset d0 " + format_double(ds.d0_m()) + " m");
            }
        }
    };
    std::visit(Visitor{ds}, params);
}

}  // namespace detail

/// Measured-minus-predicted path loss per sample, in dataset order.
inline std::vector<double> residuals(const SurveyDataset& ds, const ModelParams& params) {
    detail::check_context(ds, params);
    std::vector<double> out;
    out.reserve(ds.size());
    for (const PathLossSample& s : ds.samples()) {
        out.push_back(s.path_loss_db - predict_db(params, s.distance_m));
    }
    return out;
}

/// Root mean square error of the model against the survey.
inline double rmse(const SurveyDataset& ds, const ModelParams& params) {
    const std::vector<double> res = residuals(ds, params);
    double sum_sq = 0.0;
    for (const double r : res) sum_sq += r * r;
    return std::sqrt(sum_sq / static_cast<double>(res.size()));
}

/// Assembles the full report for fitted parameters over their survey.
inline FitReport make_report(const SurveyDataset& ds, const ModelParams& params) {
    FitReport report;
    report.model = model_id(params);
    report.params = params;
    report.residuals_db = residuals(ds, params);
    report.sigma_db = sigma_db(params);
    double sum_sq = 0.0;
    for (const double r : report.residuals_db) sum_sq += r * r;
    report.rmse_db = std::sqrt(sum_sq / static_cast<double>(report.residuals_db.size()));
    report.n_samples = ds.size();
    report.polarization = ds.polarization();
    report.scenario = ds.scenario();
    report.frequency_hz = ds.frequency_hz();
    report.d0_m = ds.d0_m();
    return report;
}

/// Deterministic train/evaluate split for holdout scoring, off by default
/// everywhere. Every sample whose index crosses a multiple of
/// 1/eval_fraction goes to the evaluation subset, spreading it evenly over
/// the distance-sorted survey. Applying the same fraction to two aligned
/// surveys keeps them aligned.
inline std::pair<SurveyDataset, SurveyDataset> split_for_holdout(const SurveyDataset& ds,
                                                                 double eval_fraction) {
    if (!(eval_fraction > 0.0) || !(eval_fraction < 1.0)) {
        throw ValidationError("holdout fraction must be in (0, 1), got " +
                              detail::format_double(eval_fraction));
    }
    std::vector<PathLossSample> train;
    std::vector<PathLossSample> eval;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        const bool into_eval = std::floor(static_cast<double>(i + 1) * eval_fraction) >
                               std::floor(static_cast<double>(i) * eval_fraction);
        (into_eval ? eval : train).push_back(ds.samples()[i]);
    }
    if (train.empty() || eval.empty()) {
        throw ValidationError("holdout split leaves an empty train or evaluation subset");
    }
    return {SurveyDataset(std::move(train), ds.d0_m()),
            SurveyDataset(std::move(eval), ds.d0_m())};
}

/// Annotation for fits whose distance exponent sits below the free-space
/// value of 2 (constructive interference / waveguiding regime). Present
/// only when the exponent is strictly below 2.
inline std::optional<std::string> flag_sub_freespace_ple(const FitReport& report) {
    const double exponent = distance_exponent(report.params);
    if (exponent < 2.0) {
        return "fitted exponent " + detail::format_double(exponent) +
               " is below the free-space exponent 2";
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Model comparison
// ---------------------------------------------------------------------------

struct ComparisonCell {
    ModelParams params;
    double sigma_db = 0.0;
    double rmse_db = 0.0;
    std::size_t n_samples = 0;
};

/// One table row: a model under one polarization, LOS and NLOS side by side.
struct ComparisonRow {
    ModelId model = ModelId::CI;
    Polarization polarization = Polarization::VV;
    std::optional<ComparisonCell> los;
    std::optional<ComparisonCell> nlos;
};

enum class Verdict { FirstLower, SecondLower, Tie };

/// Per-cell outcome of a model pair: which has the lower shadow-fading
/// deviation (RMSE breaks near-ties).
struct VerdictEntry {
    Polarization polarization = Polarization::VV;
    Scenario scenario = Scenario::LOS;
    ModelId first = ModelId::CI;
    ModelId second = ModelId::CI;
    Verdict verdict = Verdict::Tie;
    double first_sigma_db = 0.0;
    double second_sigma_db = 0.0;
};

struct ComparisonTable {
    std::vector<ComparisonRow> rows;
    std::vector<VerdictEntry> verdicts;
};

namespace detail {

inline constexpr double verdict_tie_band_db = 1e-9;

inline Verdict judge(double sigma_a, double rmse_a, double sigma_b, double rmse_b) {
    if (std::abs(sigma_a - sigma_b) > verdict_tie_band_db) {
        return sigma_a < sigma_b ? Verdict::FirstLower : Verdict::SecondLower;
    }
    if (std::abs(rmse_a - rmse_b) > verdict_tie_band_db) {
        return rmse_a < rmse_b ? Verdict::FirstLower : Verdict::SecondLower;
    }
    return Verdict::Tie;
}

inline constexpr std::array<Polarization, 3> polarization_order = {
    Polarization::VV, Polarization::VH, Polarization::VOmni};

inline constexpr std::array<Scenario, 2> scenario_order = {Scenario::LOS, Scenario::NLOS};

}  // namespace detail

/// Builds a comparison table. Verdicts are per (polarization, scenario)
/// cell; no model is declared better globally. Reports must come from
/// compatible surveys: within a cell, the same frequency, d0 and sample
/// count, and at most one report per model.
inline ComparisonTable compare_models(const std::vector<FitReport>& reports) {
    std::vector<ModelId> model_order;
    for (const FitReport& r : reports) {
        bool seen = false;
        for (const ModelId m : model_order) seen = seen || m == r.model;
        if (!seen) model_order.push_back(r.model);
    }
    if (reports.size() < 2 || model_order.size() < 2) {
        throw ValidationError("need >= 2 models to compare");
    }

    // cell key: (polarization, scenario) -> reports in model order
    const auto cell_reports = [&](Polarization pol, Scenario scen) {
        std::vector<const FitReport*> out;
        for (const ModelId m : model_order) {
            const FitReport* found = nullptr;
            for (const FitReport& r : reports) {
                if (r.model == m && r.polarization == pol && r.scenario == scen) {
                    if (found) {
                        throw ValidationError("duplicate report for " + std::string(to_string(m)) +
                                              " " + std::string(to_string(pol)) + " " +
                                              std::string(to_string(scen)));
                    }
                    found = &r;
                }
            }
            if (found) out.push_back(found);
        }
        for (const FitReport* r : out) {
            const FitReport* head = out.front();
            if (r->n_samples != head->n_samples || r->frequency_hz != head->frequency_hz ||
                r->d0_m != head->d0_m) {
                throw ValidationError("incompatible reports for " + std::string(to_string(pol)) +
                                      " " + std::string(to_string(scen)) +
                                      ": surveys differ in frequency, d0 or sample count");
            }
        }
        return out;
    };

    ComparisonTable table;
    for (const ModelId model : model_order) {
        for (const Polarization pol : detail::polarization_order) {
            ComparisonRow row;
            row.model = model;
            row.polarization = pol;
            bool any = false;
            for (const FitReport& r : reports) {
                if (r.model != model || r.polarization != pol) continue;
                ComparisonCell cell{r.params, r.sigma_db, r.rmse_db, r.n_samples};
                if (r.scenario == Scenario::LOS) {
                    row.los = cell;
                } else {
                    row.nlos = cell;
                }
                any = true;
            }
            if (any) table.rows.push_back(row);
        }
    }

    for (const Polarization pol : detail::polarization_order) {
        for (const Scenario scen : detail::scenario_order) {
            const auto cell = cell_reports(pol, scen);
            for (std::size_t i = 0; i < cell.size(); ++i) {
                for (std::size_t j = i + 1; j < cell.size(); ++j) {
                    VerdictEntry v;
                    v.polarization = pol;
                    v.scenario = scen;
                    v.first = cell[i]->model;
                    v.second = cell[j]->model;
                    v.first_sigma_db = cell[i]->sigma_db;
                    v.second_sigma_db = cell[j]->sigma_db;
                    v.verdict = detail::judge(cell[i]->sigma_db, cell[i]->rmse_db,
                                              cell[j]->sigma_db, cell[j]->rmse_db);
                    table.verdicts.push_back(v);
                }
            }
        }
    }
    return table;
}

// ---------------------------------------------------------------------------
// Serialization: machine-readable key-value report, machine comparison rows,
// and fixed-width human tables laid out like the survey literature
// (rows V-V, V-H, V-Omni; LOS and NLOS columns side by side).
// ---------------------------------------------------------------------------

namespace detail {

inline std::string params_summary(const ModelParams& params, bool fixed2) {
    std::string out;
    for (const auto& [key, value] : params_kv(params)) {
        if (key == "sigma") continue;  // rendered in its own column
        if (!out.empty()) out += ' ';
        out += key + "=" + (fixed2 ? format_fixed2(value) : format_double(value));
    }
    return out;
}

}  // namespace detail

/// Machine-readable report, one `key = value` per line. Parsers must ignore
/// unknown keys; residuals are a comma-joined list.
inline std::string report_to_text(const FitReport& report) {
    std::string out = "# path loss fit report\n";
    out += "model = " + std::string(to_string(report.model)) + "\n";
    out += "polarization = " + std::string(to_string(report.polarization)) + "\n";
    out += "scenario = " + std::string(to_string(report.scenario)) + "\n";
    out += "frequency_ghz = " + detail::format_double(report.frequency_hz / 1e9) + "\n";
    out += "d0_m = " + detail::format_double(report.d0_m) + "\n";
    out += "n_samples = " + std::to_string(report.n_samples) + "\n";
    for (const auto& [key, value] : params_kv(report.params)) {
        out += key + " = " + detail::format_double(value) + "\n";
    }
    out += "rmse = " + detail::format_double(report.rmse_db) + "\n";
    if (!report.residuals_db.empty()) {
        out += "residuals = ";
        for (std::size_t i = 0; i < report.residuals_db.size(); ++i) {
            if (i) out += ',';
            out += detail::format_double(report.residuals_db[i]);
        }
        out += '\n';
    }
    return out;
}

/// Parses the machine report format back into a FitReport. The residuals
/// line is optional. Unknown keys are ignored.
inline FitReport parse_report_text(std::string_view text) {
    std::map<std::string, std::string> kv;
    for (const std::string_view raw : detail::split(text, '\n')) {
        const std::string_view line = detail::trim(raw);
        if (line.empty() || line.front() == '#') continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ValidationError("report: expected 'key = value', got '" + std::string(line) + "'");
        }
        kv[std::string(detail::trim(line.substr(0, eq)))] = std::string(detail::trim(line.substr(eq + 1)));
    }
    const auto need = [&](const std::string& key) -> const std::string& {
        const auto it = kv.find(key);
        if (it == kv.end()) throw ValidationError("report: missing key '" + key + "'");
        return it->second;
    };

    FitReport report;
    report.model = parse_model_id(need("model"));
    report.polarization = parse_polarization(need("polarization"));
    report.scenario = parse_scenario(need("scenario"));
    report.frequency_hz = detail::parse_double(need("frequency_ghz"), "frequency_ghz") * 1e9;
    report.d0_m = detail::parse_double(need("d0_m"), "d0_m");
    report.n_samples = static_cast<std::size_t>(detail::parse_uint(need("n_samples"), "n_samples"));
    const double sigma = detail::parse_double(need("sigma"), "sigma");
    report.sigma_db = sigma;
    report.rmse_db = detail::parse_double(need("rmse"), "rmse");
    switch (report.model) {
        case ModelId::CI:
            report.params = CiParams{detail::parse_double(need("n"), "n"), sigma,
                                     report.frequency_hz, report.d0_m};
            break;
        case ModelId::FI:
            report.params = FiParams{detail::parse_double(need("alpha"), "alpha"),
                                     detail::parse_double(need("beta"), "beta"), sigma};
            break;
        case ModelId::ZMS:
            report.params = ZmsParams{detail::parse_double(need("n"), "n"),
                                      detail::parse_double(need("zms_correction"), "zms_correction"),
                                      sigma, report.frequency_hz, report.d0_m};
            break;
    }
    if (const auto it = kv.find("residuals"); it != kv.end() && !it->second.empty()) {
        for (const std::string_view field : detail::split(it->second, ',')) {
            report.residuals_db.push_back(detail::parse_double(field, "residuals"));
        }
    }
    if (sigma_db(report.params) < 0.0) {
        throw ValidationError("report: sigma must be >= 0");
    }
    return report;
}

/// Human-readable rendering of one report.
inline std::string render_report(const FitReport& report) {
    std::string out;
    out += "model:        " + std::string(to_string(report.model)) + "\n";
    out += "polarization: " + std::string(display_name(report.polarization)) + "\n";
    out += "scenario:     " + std::string(to_string(report.scenario)) + "\n";
    out += "frequency:    " + detail::format_double(report.frequency_hz / 1e9) + " GHz\n";
    out += "samples:      " + std::to_string(report.n_samples) + "\n";
    for (const auto& [key, value] : params_kv(report.params)) {
        out += key + " = " + detail::format_double(value) + "\n";
    }
    out += "rmse = " + detail::format_double(report.rmse_db) + "\n";
    if (const auto note = flag_sub_freespace_ple(report)) {
        out += "note: " + *note + "\n";
    }
    return out;
}

/// Machine-readable comparison: `row = model,pol,scen,params,sigma,rmse,N`
/// and `verdict = pol,scen,first,second,winner|tie` lines.
inline std::string comparison_to_text(const ComparisonTable& table) {
    std::string out = "# path loss model comparison\n";
    for (const ComparisonRow& row : table.rows) {
        for (const Scenario scen : detail::scenario_order) {
            const std::optional<ComparisonCell>& cell = scen == Scenario::LOS ? row.los : row.nlos;
            if (!cell) continue;
            out += "row = " + std::string(to_string(row.model)) + "," +
                   std::string(to_string(row.polarization)) + "," + std::string(to_string(scen)) +
                   "," + detail::params_summary(cell->params, false) + "," +
                   detail::format_double(cell->sigma_db) + "," + detail::format_double(cell->rmse_db) +
                   "," + std::to_string(cell->n_samples) + "\n";
        }
    }
    for (const VerdictEntry& v : table.verdicts) {
        std::string winner = "tie";
        if (v.verdict == Verdict::FirstLower) winner = std::string(to_string(v.first));
        if (v.verdict == Verdict::SecondLower) winner = std::string(to_string(v.second));
        out += "verdict = " + std::string(to_string(v.polarization)) + "," +
               std::string(to_string(v.scenario)) + "," + std::string(to_string(v.first)) + "," +
               std::string(to_string(v.second)) + "," + winner + "\n";
    }
    return out;
}

/// Fixed-width human comparison table, LOS and NLOS side by side, row order
/// V-V, V-H, V-Omni within each model block.
inline std::string render_comparison(const ComparisonTable& table) {
    std::ostringstream out;
    const auto cell_text = [](const std::optional<ComparisonCell>& cell) -> std::string {
        if (!cell) return "-";
        return detail::params_summary(cell->params, true) +
               "  sigma=" + detail::format_fixed2(cell->sigma_db);
    };
    out << detail::pad("model", 7) << detail::pad("polarization", 14) << detail::pad("LOS", 42) << "NLOS\n";
    out << std::string(100, '-') << "\n";
    for (const ComparisonRow& row : table.rows) {
        out << detail::pad(std::string(to_string(row.model)), 7)
            << detail::pad(std::string(display_name(row.polarization)), 14)
            << detail::pad(cell_text(row.los), 42) << cell_text(row.nlos) << "\n";
    }
    if (!table.verdicts.empty()) {
        out << "\nverdicts (lower sigma wins; rmse breaks ties):\n";
        for (const VerdictEntry& v : table.verdicts) {
            out << "  " << display_name(v.polarization) << " " << to_string(v.scenario) << ": ";
            if (v.verdict == Verdict::Tie) {
                out << "tie between " << to_string(v.first) << " and " << to_string(v.second);
            } else {
                const bool first_won = v.verdict == Verdict::FirstLower;
                out << to_string(first_won ? v.first : v.second) << " lower than "
                    << to_string(first_won ? v.second : v.first) << " (sigma "
                    << detail::format_fixed2(first_won ? v.first_sigma_db : v.second_sigma_db)
                    << " vs "
                    << detail::format_fixed2(first_won ? v.second_sigma_db : v.first_sigma_db) << ")";
            }
            out << "\n";
        }
    }
    return out.str();
}

}  // namespace pathloss
