// SPDX-License-Identifier: Apache-2.0
//
// risesr - secrecy-rate optimization for RIS-assisted MISO wiretap links
// Copyright (C) 2026 The risesr authors
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
// ------------------------------------------------------------------------

#pragma once

#include <stdexcept>
#include <string>

namespace risesr {

// Argument outside the mathematical domain of an operation (non-positive
// distance, empty sample set, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Vector/matrix sizes that do not fit together.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An iterative numerical kernel failed to reach its tolerance.
class NumericalError : public std::runtime_error {
public:
    NumericalError(const std::string& what, int iterations, double residual)
        : std::runtime_error(what + " (iterations=" + std::to_string(iterations) +
                             ", residual=" + std::to_string(residual) + ")"),
          iterations_(iterations), residual_(residual) {}

    int iterations() const noexcept { return iterations_; }
    double residual() const noexcept { return residual_; }

private:
    int iterations_;
    double residual_;
};

// Problem size exceeds what an exhaustive oracle is willing to enumerate.
class OracleRefusal : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Monte-Carlo run had more solver failures than the resampling budget allows.
class FailureBudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad configuration text or override. line() is 0 for command-line overrides.
class ConfigError : public std::runtime_error {
public:
    ConfigError(int line, const std::string& message)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
          line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

} // namespace risesr
