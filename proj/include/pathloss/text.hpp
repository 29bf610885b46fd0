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

#include <charconv>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include "pathloss/error.hpp"

namespace pathloss::detail {

/// Shortest decimal form that round-trips the double exactly.
inline std::string format_double(double value) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

/// Fixed two-decimal form, for human tables.
inline std::string format_fixed2(double value) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.2f", value);
    return std::string(buf);
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t next = s.find(sep, pos);
        if (next == std::string_view::npos) {
            out.push_back(s.substr(pos));
            break;
        }
        out.push_back(s.substr(pos, next - pos));
        pos = next + 1;
    }
    return out;
}

/// Left-aligned column padding; always leaves at least one space.
inline std::string pad(const std::string& s, std::size_t width) {
    std::string out = s;
    do {
        out += ' ';
    } while (out.size() < width);
    return out;
}

inline std::string to_upper(std::string_view s) {
    std::string out(s);
    for (char& c : out) {
        if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
    }
    return out;
}

/// Strict locale-independent double parse; the whole field must be consumed.
inline double parse_double(std::string_view field, std::string_view what) {
    const std::string_view t = trim(field);
    double value{};
    const auto res = std::from_chars(t.data(), t.data() + t.size(), value);
    if (t.empty() || res.ec != std::errc{} || res.ptr != t.data() + t.size()) {
        throw ValidationError("invalid number for " + std::string(what) + ": '" + std::string(field) + "'");
    }
    return value;
}

inline std::uint64_t parse_uint(std::string_view field, std::string_view what) {
    const std::string_view t = trim(field);
    std::uint64_t value{};
    const auto res = std::from_chars(t.data(), t.data() + t.size(), value);
    if (t.empty() || res.ec != std::errc{} || res.ptr != t.data() + t.size()) {
        throw ValidationError("invalid count for " + std::string(what) + ": '" + std::string(field) + "'");
    }
    return value;
}

}  // namespace pathloss::detail
