/*
 * Copyright 2026 The acm-atlas Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace acm {

/// Domain failures raised by the engine. Each kind names the violated
/// precondition so the CLI can report it verbatim.
enum class ErrorKind {
  InvalidGenus,
  NotCalabiYau,
  DegenerateFactor,
  UnknownType,
  NonPositiveDegree,
  NegativeIndex,
  NonIntegralChi,
  MissingNormalizationLevel,
  NotNormalized,
  OutOfBounds,
  DegenerateConstraint,
  UnsupportedFamily,
  NonIntegralGenus,
  NegativeGenus,
  EmptyZeroLocus,
  InconsistentSubcanonical,
  OutOfRange,
  NotElliptic,
  Internal,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidGenus: return "InvalidGenus";
    case ErrorKind::NotCalabiYau: return "NotCalabiYau";
    case ErrorKind::DegenerateFactor: return "DegenerateFactor";
    case ErrorKind::UnknownType: return "UnknownType";
    case ErrorKind::NonPositiveDegree: return "NonPositiveDegree";
    case ErrorKind::NegativeIndex: return "NegativeIndex";
    case ErrorKind::NonIntegralChi: return "NonIntegralChi";
    case ErrorKind::MissingNormalizationLevel: return "MissingNormalizationLevel";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::OutOfBounds: return "OutOfBounds";
    case ErrorKind::DegenerateConstraint: return "DegenerateConstraint";
    case ErrorKind::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorKind::NonIntegralGenus: return "NonIntegralGenus";
    case ErrorKind::NegativeGenus: return "NegativeGenus";
    case ErrorKind::EmptyZeroLocus: return "EmptyZeroLocus";
    case ErrorKind::InconsistentSubcanonical: return "InconsistentSubcanonical";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NotElliptic: return "NotElliptic";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Malformed input text (selectors, catalog files). Distinct from Error so
/// callers can separate usage mistakes from mathematical ones.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace acm
