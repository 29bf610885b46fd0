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

#include <stdexcept>

namespace pathloss {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid input: CSV content, dataset invariants, bad arguments.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Data for which the requested closed-form fit is undefined.
class DegenerateFitError : public Error {
public:
    using Error::Error;
};

/// Filesystem-level failure (missing file, unwritable output).
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace pathloss
