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

#include <optional>

#include "acm/error.hpp"
#include "acm/rational.hpp"
#include "acm/variety.hpp"

namespace acm {

/// Numerical class of a rank-two bundle E: c1 in units of H, c2 in units of
/// the line class l (H·l = 1, H^2 = deg·l), and optionally the
/// normalization level b = max{n : h0(E(-n)) != 0}.
struct BundleClass {
  Int c1 = 0;
  Int c2 = 0;
  std::optional<Int> b;

  friend bool operator==(const BundleClass&, const BundleClass&) = default;
};

/// E(n): c1 + 2n, c2 + deg·n·c1 + deg·n^2.
inline BundleClass twist(const PolarizedThreefold& v, const BundleClass& e, Int n) {
  BundleClass out;
  out.c1 = e.c1 + 2 * n;
  out.c2 = e.c2 + v.degree() * n * e.c1 + v.degree() * n * n;
  if (e.b) out.b = *e.b + n;
  return out;
}

/// Rank-two dual. b is dropped: h0(E^v(-n)) is not determined by the class.
inline BundleClass dual(const BundleClass& e) { return BundleClass{-e.c1, e.c2, std::nullopt}; }

/// 2b - c1; unchanged by twisting.
inline Int stability_margin(const BundleClass& e) {
  if (!e.b) throw Error(ErrorKind::MissingNormalizationLevel, "normalization level b is not set");
  return 2 * *e.b - e.c1;
}

inline bool is_stable(const BundleClass& e) { return stability_margin(e) < 0; }

struct NormalizedBundle {
  BundleClass bundle;
  Int shift = 0;
};

inline NormalizedBundle normalize(const PolarizedThreefold& v, const BundleClass& e) {
  if (!e.b) throw Error(ErrorKind::MissingNormalizationLevel, "normalization level b is not set");
  const Int shift = -*e.b;
  return {twist(v, e, shift), shift};
}

}  // namespace acm
