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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "pathloss/error.hpp"
#include "pathloss/survey.hpp"
#include "pathloss/text.hpp"

namespace pathloss {

// Survey CSV schema (header required, frequency in GHz on disk):
//   distance_m,path_loss_db,frequency_ghz,polarization,scenario[,rx_power_lin]

namespace detail {

inline const std::vector<std::string>& csv_columns() {
    static const std::vector<std::string> cols = {"distance_m", "path_loss_db", "frequency_ghz",
                                                  "polarization", "scenario", "rx_power_lin"};
    return cols;
}

inline std::string csv_header(bool with_rx_power) {
    std::string out;
    const std::size_t count = with_rx_power ? 6 : 5;
    for (std::size_t i = 0; i < count; ++i) {
        if (i) out += ',';
        out += csv_columns()[i];
    }
    return out;
}

}  // namespace detail

/// Parses survey CSV text into a validated dataset. Errors carry the
/// offending line number; line 1 is the header.
inline SurveyDataset parse_csv(std::string_view text, double d0_m = 1.0) {
    std::vector<PathLossSample> samples;
    bool header_seen = false;
    bool with_rx_power = false;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        const std::string_view raw =
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (detail::trim(raw).empty()) continue;
        const std::string where = "line " + std::to_string(line_no) + ": ";
        const auto fields = detail::split(raw, ',');

        if (!header_seen) {
            if (fields.size() != 5 && fields.size() != 6) {
                throw ValidationError(where + "header must be '" + detail::csv_header(true) +
                                      "' (rx_power_lin optional)");
            }
            for (std::size_t i = 0; i < fields.size(); ++i) {
                std::string got(detail::trim(fields[i]));
                for (char& c : got) {
                    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
                }
                if (got != detail::csv_columns()[i]) {
                    throw ValidationError(where + "unexpected header column '" + got + "', expected '" +
                                          detail::csv_columns()[i] + "'");
                }
            }
            with_rx_power = fields.size() == 6;
            header_seen = true;
            continue;
        }

        if (fields.size() != (with_rx_power ? 6u : 5u)) {
            throw ValidationError(where + "expected " + std::to_string(with_rx_power ? 6 : 5) +
                                  " fields, got " + std::to_string(fields.size()));
        }
        try {
            PathLossSample s;
            s.distance_m = detail::parse_double(fields[0], "distance_m");
            s.path_loss_db = detail::parse_double(fields[1], "path_loss_db");
            s.frequency_hz = detail::parse_double(fields[2], "frequency_ghz") * 1e9;
            s.polarization = parse_polarization(fields[3]);
            s.scenario = parse_scenario(fields[4]);
            if (with_rx_power && !detail::trim(fields[5]).empty()) {
                s.rx_power_lin = detail::parse_double(fields[5], "rx_power_lin");
            }
            if (s.distance_m < d0_m) {
                throw ValidationError("distance_m " + detail::format_double(s.distance_m) +
                                      " below reference distance d0 = " + detail::format_double(d0_m));
            }
            if (s.path_loss_db <= 0.0) {
                throw ValidationError("path_loss_db must be positive, got " +
                                      detail::format_double(s.path_loss_db));
            }
            samples.push_back(s);
        } catch (const ValidationError& e) {
            throw ValidationError(where + e.what());
        }
    }

    if (!header_seen) {
        throw ValidationError("empty CSV: missing header row");
    }
    return SurveyDataset(std::move(samples), d0_m);
}

/// Loads a survey CSV from disk. Missing/unreadable file is an IoError;
/// content problems are ValidationErrors.
inline SurveyDataset load_csv(const std::filesystem::path& path, double d0_m = 1.0) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_csv(buf.str(), d0_m);
    } catch (const ValidationError& e) {
        throw ValidationError(path.string() + ": " + e.what());
    }
}

/// Renders a dataset back to CSV text, byte-deterministic. The rx_power_lin
/// column is written only when every sample carries it.
inline std::string to_csv(const SurveyDataset& ds) {
    const bool with_rx_power = ds.has_rx_power();
    std::string out = detail::csv_header(with_rx_power);
    out += '\n';
    for (const PathLossSample& s : ds.samples()) {
        out += detail::format_double(s.distance_m);
        out += ',';
        out += detail::format_double(s.path_loss_db);
        out += ',';
        out += detail::format_double(s.frequency_hz / 1e9);
        out += ',';
        out += to_string(s.polarization);
        out += ',';
        out += to_string(s.scenario);
        if (with_rx_power) {
            out += ',';
            out += detail::format_double(*s.rx_power_lin);
        }
        out += '\n';
    }
    return out;
}

inline void save_csv(const SurveyDataset& ds, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot write '" + path.string() + "'");
    }
    out << to_csv(ds);
    if (!out) {
        throw IoError("failed writing '" + path.string() + "'");
    }
}

}  // namespace pathloss
