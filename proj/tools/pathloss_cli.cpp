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

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pathloss/pathloss.hpp"

namespace {

// Exit codes: 0 success, 2 input/validation, 3 degenerate fit, 4 I/O.
constexpr int exit_validation = 2;
constexpr int exit_degenerate = 3;
constexpr int exit_io = 4;

// "-" means stdout.
void write_output(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw pathloss::IoError("cannot write '" + path + "'");
    }
    out << content;
    if (!out) {
        throw pathloss::IoError("failed writing '" + path + "'");
    }
}

std::string read_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw pathloss::IoError("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct FitOptions {
    std::string model;
    std::string input;
    std::string reference;
    std::string output = "-";
    double d0_m = 1.0;
    double holdout = 0.0;
    bool oracle = false;
};

int run_fit(const FitOptions& opt) {
    using namespace pathloss;
    const ModelId model = parse_model_id(opt.model);
    const SurveyDataset full = load_csv(opt.input, opt.d0_m);

    // With --holdout, parameters come from the train subset and the report
    // scores the held-out subset; off by default.
    const bool split = opt.holdout != 0.0;
    SurveyDataset train = full;
    std::optional<SurveyDataset> eval;
    if (split) {
        auto parts = split_for_holdout(full, opt.holdout);
        train = std::move(parts.first);
        eval = std::move(parts.second);
    }

    ModelParams params;
    std::optional<double> oracle_correction;
    switch (model) {
        case ModelId::CI:
            params = fit_ci(train);
            oracle_correction = 0.0;
            break;
        case ModelId::FI:
            if (opt.oracle) {
                throw ValidationError("--oracle supports the ci and zms models only");
            }
            params = fit_fi(train);
            break;
        case ModelId::ZMS: {
            double correction = 0.0;
            if (full.polarization() == Polarization::VV && full.scenario() == Scenario::LOS) {
                if (!opt.reference.empty()) {
                    throw ValidationError("V-V LOS takes no --reference; its correction is 0");
                }
            } else {
                if (opt.reference.empty()) {
                    const auto expected =
                        zms_reference_polarization(full.polarization(), full.scenario());
                    throw ValidationError("zms fit needs --reference with the paired " +
                                          std::string(to_string(*expected)) + " survey");
                }
                SurveyDataset ref = load_csv(opt.reference, opt.d0_m);
                if (split) {
                    ref = std::move(split_for_holdout(ref, opt.holdout).first);
                }
                correction = compute_zms_correction(make_zms_correction_input(train, ref));
            }
            params = fit_zms(train, correction);
            oracle_correction = correction;
            break;
        }
    }

    std::string text = report_to_text(make_report(eval ? *eval : train, params));
    if (opt.oracle) {
        const OracleFit oracle = brute_force_fit(train, *oracle_correction);
        const double closed_n = distance_exponent(params);
        text += "oracle_n = " + detail::format_double(oracle.n) + "\n";
        text += "oracle_sigma = " + detail::format_double(oracle.sigma_db) + "\n";
        text += "oracle_delta = " + detail::format_double(std::abs(closed_n - oracle.n)) + "\n";
    }
    write_output(opt.output, text);
    return 0;
}

struct PredictOptions {
    std::string params_file;
    std::string output = "-";
    double d_min_m = 0.0;
    double d_max_m = 0.0;
    double step_m = 1.0;
};

int run_predict(const PredictOptions& opt) {
    using namespace pathloss;
    const FitReport report = parse_report_text(read_input(opt.params_file));
    if (!(opt.step_m > 0.0)) {
        throw ValidationError("--step must be positive");
    }
    if (!(opt.d_min_m <= opt.d_max_m)) {
        throw ValidationError("need --dmin <= --dmax");
    }
    if (report.model != ModelId::FI && opt.d_min_m < report.d0_m) {
        throw ValidationError("--dmin " + detail::format_double(opt.d_min_m) +
                              " below the model reference distance d0 = " +
                              detail::format_double(report.d0_m));
    }

    std::string out = "# path loss curve: model=" + std::string(to_string(report.model));
    for (const auto& [key, value] : params_kv(report.params)) {
        out += " " + key + "=" + detail::format_double(value);
    }
    out += " frequency_ghz=" + detail::format_double(report.frequency_hz / 1e9);
    out += "\n# distance_m path_loss_db\n";

    // Grid d_min + k*step, plus the range endpoint when the grid stops short.
    double last = -1.0;
    for (std::size_t k = 0;; ++k) {
        const double d = opt.d_min_m + static_cast<double>(k) * opt.step_m;
        if (d > opt.d_max_m) break;
        out += detail::format_double(d) + " " + detail::format_double(predict_db(report.params, d)) + "\n";
        last = d;
    }
    if (last < opt.d_max_m) {
        out += detail::format_double(opt.d_max_m) + " " +
               detail::format_double(predict_db(report.params, opt.d_max_m)) + "\n";
    }
    write_output(opt.output, out);
    return 0;
}

struct GenerateOptions {
    std::optional<double> ci_n;
    std::optional<double> fi_alpha;
    std::optional<double> fi_beta;
    double sigma_db = 0.0;
    std::uint64_t count = 0;
    double d_min_m = 1.9;
    double d_max_m = 45.7;
    double frequency_ghz = 28.0;
    double d0_m = 1.0;
    std::string polarization = "VV";
    std::string scenario = "LOS";
    std::uint64_t seed = 0;
    std::string output = "-";
};

int run_generate(const GenerateOptions& opt) {
    using namespace pathloss;
    GeneratorSpec spec;
    if (opt.ci_n && (opt.fi_alpha || opt.fi_beta)) {
        throw ValidationError("choose a ci truth (--n) or an fi truth (--alpha and --beta), not both");
    }
    if (opt.ci_n) {
        spec.model_truth = CiTruth{*opt.ci_n};
    } else if (opt.fi_alpha && opt.fi_beta) {
        spec.model_truth = FiTruth{*opt.fi_alpha, *opt.fi_beta};
    } else {
        throw ValidationError("need a truth model: --n for ci, or --alpha and --beta for fi");
    }
    spec.sigma_db = opt.sigma_db;
    spec.n_samples = static_cast<std::size_t>(opt.count);
    spec.d_min_m = opt.d_min_m;
    spec.d_max_m = opt.d_max_m;
    spec.frequency_hz = opt.frequency_ghz * 1e9;
    spec.d0_m = opt.d0_m;
    spec.polarization = parse_polarization(opt.polarization);
    spec.scenario = parse_scenario(opt.scenario);
    spec.seed = opt.seed;
    write_output(opt.output, to_csv(generate_synthetic(spec)));
    return 0;
}

struct CompareOptions {
    std::vector<std::string> inputs;
    std::string output;
    std::string human_output;
};

int run_compare(const CompareOptions& opt) {
    using namespace pathloss;
    std::vector<FitReport> reports;
    reports.reserve(opt.inputs.size());
    for (const std::string& path : opt.inputs) {
        reports.push_back(parse_report_text(read_input(path)));
    }
    const ComparisonTable table = compare_models(reports);
    if (!opt.output.empty()) {
        write_output(opt.output, comparison_to_text(table));
    }
    if (!opt.human_output.empty()) {
        write_output(opt.human_output, render_comparison(table));
    }
    if (opt.output.empty() && opt.human_output.empty()) {
        std::cout << render_comparison(table);
    }
    return 0;
}

struct ReportOptions {
    std::string input;
    std::string output = "-";
};

int run_report(const ReportOptions& opt) {
    using namespace pathloss;
    write_output(opt.output, render_report(parse_report_text(read_input(opt.input))));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fit, evaluate and compare CI / FI / ZMS path loss models from survey data"};
    app.require_subcommand(1);

    FitOptions fit_opt;
    CLI::App* fit = app.add_subcommand("fit", "fit a model to a survey CSV and write a report");
    fit->add_option("--model", fit_opt.model, "model: ci, fi or zms")->required();
    fit->add_option("--input", fit_opt.input, "survey CSV")->required();
    fit->add_option("--reference", fit_opt.reference, "paired-polarization survey CSV (zms)");
    fit->add_option("--d0", fit_opt.d0_m, "reference distance in m (default 1)");
    fit->add_option("--holdout", fit_opt.holdout,
                    "evaluation fraction for a train/evaluate split (default 0 = off)");
    fit->add_option("-o,--output", fit_opt.output, "report file, - for stdout");
    fit->add_flag("--oracle", fit_opt.oracle, "also run the grid-search oracle and report the delta");

    PredictOptions predict_opt;
    CLI::App* predict = app.add_subcommand("predict", "evaluate a fitted model over a distance sweep");
    predict->add_option("--params", predict_opt.params_file, "fit report file")->required();
    predict->add_option("--dmin", predict_opt.d_min_m, "sweep start in m")->required();
    predict->add_option("--dmax", predict_opt.d_max_m, "sweep end in m")->required();
    predict->add_option("--step", predict_opt.step_m, "sweep step in m (default 1)");
    predict->add_option("-o,--output", predict_opt.output, "curve file, - for stdout");

    GenerateOptions gen_opt;
    CLI::App* generate = app.add_subcommand("generate", "write a deterministic synthetic survey CSV");
    generate->add_option("--n", gen_opt.ci_n, "ci truth exponent");
    generate->add_option("--alpha", gen_opt.fi_alpha, "fi truth intercept in dB");
    generate->add_option("--beta", gen_opt.fi_beta, "fi truth slope");
    generate->add_option("--sigma", gen_opt.sigma_db, "shadow-fading std in dB (default 0)");
    generate->add_option("--count", gen_opt.count, "number of samples")->required();
    generate->add_option("--dmin", gen_opt.d_min_m, "min distance in m (default 1.9)");
    generate->add_option("--dmax", gen_opt.d_max_m, "max distance in m (default 45.7)");
    generate->add_option("--freq-ghz", gen_opt.frequency_ghz, "frequency in GHz (default 28)");
    generate->add_option("--d0", gen_opt.d0_m, "reference distance in m (default 1)");
    generate->add_option("--polarization", gen_opt.polarization, "VV, VH or VOMNI (default VV)");
    generate->add_option("--scenario", gen_opt.scenario, "LOS or NLOS (default LOS)");
    generate->add_option("--seed", gen_opt.seed, "RNG seed (default 0)")->envname("PATHLOSS_SEED");
    generate->add_option("-o,--output", gen_opt.output, "CSV file, - for stdout");

    CompareOptions compare_opt;
    CLI::App* compare = app.add_subcommand("compare", "compare two or more fit reports");
    compare->add_option("--input", compare_opt.inputs, "fit report files (repeatable)")->required();
    compare->add_option("-o,--output", compare_opt.output, "machine-readable comparison file");
    compare->add_option("--human", compare_opt.human_output, "human-readable table file");

    ReportOptions report_opt;
    CLI::App* report = app.add_subcommand("report", "render a fit report for reading");
    report->add_option("--input", report_opt.input, "fit report file")->required();
    report->add_option("-o,--output", report_opt.output, "output file, - for stdout");

    try {
        app.parse(argc, argv);
        if (fit->parsed()) return run_fit(fit_opt);
        if (predict->parsed()) return run_predict(predict_opt);
        if (generate->parsed()) return run_generate(gen_opt);
        if (compare->parsed()) return run_compare(compare_opt);
        if (report->parsed()) return run_report(report_opt);
        return exit_validation;
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: usage: " << e.what() << "\n";
        return exit_validation;
    } catch (const pathloss::DegenerateFitError& e) {
        std::cerr << "error: degenerate: " << e.what() << "\n";
        return exit_degenerate;
    } catch (const pathloss::IoError& e) {
        std::cerr << "error: io: " << e.what() << "\n";
        return exit_io;
    } catch (const pathloss::ValidationError& e) {
        std::cerr << "error: validation: " << e.what() << "\n";
        return exit_validation;
    } catch (const pathloss::Error& e) {
        std::cerr << "error: validation: " << e.what() << "\n";
        return exit_validation;
    }
}
