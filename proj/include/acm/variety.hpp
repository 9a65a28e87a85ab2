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

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "acm/error.hpp"
#include "acm/rational.hpp"

namespace acm {

struct PrimeFano {
  Int genus = 0;
  friend bool operator==(const PrimeFano&, const PrimeFano&) = default;
};

/// Multidegrees are kept sorted ascending, so permutations compare equal.
struct CompleteIntersectionCY {
  std::vector<Int> multidegrees;
  friend bool operator==(const CompleteIntersectionCY&, const CompleteIntersectionCY&) = default;
};

struct CustomFamily {
  friend bool operator==(const CustomFamily&, const CustomFamily&) = default;
};

using Family = std::variant<PrimeFano, CompleteIntersectionCY, CustomFamily>;

/// Strict accepts only the documented families; permissive also admits
/// nonstandard complete intersections and generic custom classification.
enum class Mode { Strict, Permissive };

/// Genera for which a prime Fano threefold exists (g = 11 excluded).
inline constexpr std::array<Int, 10> kPrimeFanoGenera = {2, 3, 4, 5, 6, 7, 8, 9, 10, 12};

/// The five multidegree types of Calabi-Yau complete intersections, sorted.
inline const std::array<std::vector<Int>, 5>& cicy_types() {
  static const std::array<std::vector<Int>, 5> types = {
      std::vector<Int>{5}, std::vector<Int>{3, 3}, std::vector<Int>{2, 4},
      std::vector<Int>{2, 2, 3}, std::vector<Int>{2, 2, 2, 2}};
  return types;
}

/// A smooth threefold with Picard group generated by the ample class H,
/// described by the numbers the Riemann-Roch machinery needs:
/// H^3, the index r with -K = r H, and c2(T)·H.
class PolarizedThreefold {
 public:
  const Family& family() const noexcept { return family_; }
  Int degree() const noexcept { return degree_; }
  Int index() const noexcept { return index_; }
  Int c2txh() const noexcept { return c2txh_; }
  std::optional<Int> ambient_dim() const noexcept { return ambient_dim_; }
  /// Set for permissive-mode complete intersections outside the five types.
  bool nonstandard() const noexcept { return nonstandard_; }

  const PrimeFano* prime_fano() const noexcept { return std::get_if<PrimeFano>(&family_); }
  const CompleteIntersectionCY* cicy() const noexcept {
    return std::get_if<CompleteIntersectionCY>(&family_);
  }
  bool is_custom() const noexcept { return std::holds_alternative<CustomFamily>(family_); }

  std::string family_name() const {
    if (prime_fano()) return "fano";
    if (cicy()) return "cicy";
    return "custom";
  }

  /// Canonical selector string, e.g. "fano:g=3", "cicy:2x4", "custom:d=3,r=2,c2=24".
  std::string id() const {
    if (const auto* f = prime_fano()) return "fano:g=" + std::to_string(f->genus);
    if (const auto* c = cicy()) {
      std::string s = "cicy:";
      for (std::size_t i = 0; i < c->multidegrees.size(); ++i) {
        if (i) s += "x";
        s += std::to_string(c->multidegrees[i]);
      }
      return s;
    }
    return "custom:d=" + std::to_string(degree_) + ",r=" + std::to_string(index_) +
           ",c2=" + std::to_string(c2txh_);
  }

  friend bool operator==(const PolarizedThreefold&, const PolarizedThreefold&) = default;

 private:
  PolarizedThreefold(Family family, Int degree, Int index, Int c2txh, std::optional<Int> ambient,
                     bool nonstandard)
      : family_(std::move(family)),
        degree_(degree),
        index_(index),
        c2txh_(c2txh),
        ambient_dim_(ambient),
        nonstandard_(nonstandard) {}

  friend PolarizedThreefold make_prime_fano(Int genus);
  friend PolarizedThreefold make_cicy(std::span<const Int> multidegrees, Mode mode);
  friend PolarizedThreefold make_custom(Int degree, Int index, Int c2txh);

  Family family_;
  Int degree_;
  Int index_;
  Int c2txh_;
  std::optional<Int> ambient_dim_;
  bool nonstandard_;
};

inline PolarizedThreefold make_prime_fano(Int genus) {
  if (std::find(kPrimeFanoGenera.begin(), kPrimeFanoGenera.end(), genus) == kPrimeFanoGenera.end()) {
    throw Error(ErrorKind::InvalidGenus,
                "prime Fano threefolds exist only for 2 <= g <= 12, g != 11 (got g=" +
                    std::to_string(genus) + ")");
  }
  // c2(T)·H = 24 is forced by chi(O_V) = 1 at index 1.
  return PolarizedThreefold(PrimeFano{genus}, 2 * genus - 2, 1, 24, genus + 1, false);
}

/// c2(T)·H / H^3 for a complete intersection, read off
/// (1+h)^(k+4) / prod(1 + r_i h) at order h^2.
inline Int cicy_c2_coefficient(std::span<const Int> multidegrees) {
  const Int n = static_cast<Int>(multidegrees.size()) + 4;
  Int sum = 0, sum_sq = 0, pairs = 0;
  for (std::size_t i = 0; i < multidegrees.size(); ++i) {
    sum += multidegrees[i];
    sum_sq += multidegrees[i] * multidegrees[i];
    for (std::size_t j = i + 1; j < multidegrees.size(); ++j) pairs += multidegrees[i] * multidegrees[j];
  }
  return n * (n - 1) / 2 - n * sum + sum_sq + pairs;
}

inline PolarizedThreefold make_cicy(std::span<const Int> multidegrees,
                                    Mode mode = Mode::Strict) {
  std::vector<Int> sorted(multidegrees.begin(), multidegrees.end());
  std::sort(sorted.begin(), sorted.end());
  const Int k = static_cast<Int>(sorted.size());

  for (Int r : sorted) {
    if (r <= 0 || (r == 1 && mode == Mode::Strict)) {
      throw Error(ErrorKind::DegenerateFactor,
                  "every multidegree must be >= 2 (got " + std::to_string(r) + ")");
    }
  }
  const Int sum = std::accumulate(sorted.begin(), sorted.end(), Int{0});
  if (k == 0 || sum != k + 4) {
    throw Error(ErrorKind::NotCalabiYau, "sum of multidegrees " + std::to_string(sum) +
                                             " != k+4 = " + std::to_string(k + 4));
  }
  const auto& types = cicy_types();
  const bool standard = std::find(types.begin(), types.end(), sorted) != types.end();
  if (!standard && mode == Mode::Strict) {
    throw Error(ErrorKind::UnknownType, "multidegree list is not one of the five ciCY types");
  }

  const Int degree = std::accumulate(sorted.begin(), sorted.end(), Int{1}, std::multiplies<>{});
  const Int c2txh = cicy_c2_coefficient(sorted) * degree;
  return PolarizedThreefold(CompleteIntersectionCY{sorted}, degree, 0, c2txh, k + 3, !standard);
}

inline PolarizedThreefold make_cicy(std::initializer_list<Int> multidegrees,
                                    Mode mode = Mode::Strict) {
  return make_cicy(std::span<const Int>(multidegrees.begin(), multidegrees.size()), mode);
}

inline PolarizedThreefold make_custom(Int degree, Int index, Int c2txh) {
  if (degree < 1) {
    throw Error(ErrorKind::NonPositiveDegree, "degree H^3 must be >= 1 (got " + std::to_string(degree) + ")");
  }
  if (index < 0) {
    throw Error(ErrorKind::NegativeIndex, "index must be >= 0 (got " + std::to_string(index) + ")");
  }
  return PolarizedThreefold(CustomFamily{}, degree, index, c2txh, std::nullopt, false);
}

}  // namespace acm
