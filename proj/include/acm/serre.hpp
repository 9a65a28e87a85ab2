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

#include <string>

#include "acm/chern.hpp"
#include "acm/error.hpp"
#include "acm/rational.hpp"
#include "acm/variety.hpp"

namespace acm {

/// Numerical class of a subcanonical curve C with omega_C = O_C(a):
/// degree d (units of l), arithmetic genus p, level a, and 2p - 2 = a·d.
struct CurveClass {
  Int degree = 0;
  Int genus = 0;
  Int subcanonical_level = 0;

  friend bool operator==(const CurveClass&, const CurveClass&) = default;
};

/// Zero locus of a general section of a normalized E. By adjunction
/// omega_C = O_C(c1 + K_V) = O_C(c1 - r), hence 2p - 2 = (c1 - r)·c2.
inline CurveClass bundle_to_curve(const PolarizedThreefold& v, const BundleClass& e) {
  if (e.b && *e.b != 0) {
    throw Error(ErrorKind::NotNormalized, "bundle must be normalized (b = 0), got b=" + std::to_string(*e.b));
  }
  if (e.c2 <= 0) {
    throw Error(ErrorKind::EmptyZeroLocus, "c2 = " + std::to_string(e.c2) + " admits no curve");
  }
  const Int level = e.c1 - v.index();
  const Int twice_genus_minus_two = level * e.c2;
  if (twice_genus_minus_two % 2 != 0) {
    throw Error(ErrorKind::NonIntegralGenus, "(c1 - r)·c2 = " + std::to_string(twice_genus_minus_two) +
                                                 " is odd for (c1=" + std::to_string(e.c1) +
                                                 ", c2=" + std::to_string(e.c2) + ")");
  }
  const Int genus = twice_genus_minus_two / 2 + 1;
  if (genus < 0) {
    throw Error(ErrorKind::NegativeGenus, "genus " + std::to_string(genus) + " for (c1=" +
                                              std::to_string(e.c1) + ", c2=" + std::to_string(e.c2) + ")");
  }
  return CurveClass{e.c2, genus, level};
}

/// Serre construction 0 -> O_V -> E -> I_C(c1) -> 0. b is left unset.
inline BundleClass curve_to_bundle(const PolarizedThreefold& v, const CurveClass& c) {
  if (c.degree < 1) {
    throw Error(ErrorKind::EmptyZeroLocus, "curve degree must be >= 1 (got " + std::to_string(c.degree) + ")");
  }
  if (2 * c.genus - 2 != c.subcanonical_level * c.degree) {
    throw Error(ErrorKind::InconsistentSubcanonical,
                "2p-2 = " + std::to_string(2 * c.genus - 2) + " but a·d = " +
                    std::to_string(c.subcanonical_level * c.degree));
  }
  return BundleClass{c.subcanonical_level + v.index(), c.degree, std::nullopt};
}

/// h0(I_C(1)) for an elliptic curve on a prime Fano of genus g: g + 2 - deg C.
inline Int span_defect(const PolarizedThreefold& v, const CurveClass& c) {
  const auto* fano = v.prime_fano();
  if (!fano) throw Error(ErrorKind::UnsupportedFamily, "span defect is defined on prime Fano threefolds only");
  if (c.subcanonical_level != 0 || c.genus != 1) {
    throw Error(ErrorKind::NotElliptic, "expected an elliptic curve (p=1, a=0)");
  }
  const Int g = fano->genus;
  if (c.degree < 3 || c.degree > g + 2) {
    throw Error(ErrorKind::OutOfRange, "elliptic curve degree " + std::to_string(c.degree) +
                                           " outside [3, g+2] = [3, " + std::to_string(g + 2) + "]");
  }
  return g + 2 - c.degree;
}

}  // namespace acm
