// SPDX-License-Identifier: Apache-2.0
//
// mmwchan - directional millimeter-wave channel measurement processing
// Copyright (C) 2026 The mmwchan Authors
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

namespace mmwchan
{

// Malformed input document. `locus()` names the line or the record path.
class ParseError : public std::runtime_error
{
public:
    ParseError(const std::string &message, std::string locus)
        : std::runtime_error(locus.empty() ? message : locus + ": " + message), locus_(std::move(locus)) {}
    const std::string &locus() const noexcept { return locus_; }

private:
    std::string locus_;
};

// A type invariant does not hold. `field()` names the offending field path.
class ValidationError : public std::invalid_argument
{
public:
    ValidationError(std::string field, const std::string &message)
        : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}
    const std::string &field() const noexcept { return field_; }

private:
    std::string field_;
};

// Argument outside the mathematical domain of an operation (d < 1 m, p outside (0,1], ...).
class DomainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// Delay moments of a profile with no power.
class UndefinedMomentError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// Statistics requested over an empty sample set.
class EmptyStatsError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Caller violated an operation precondition (e.g. n1 < n2 for the extension exponent).
class PreconditionError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace mmwchan
