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

#include <gtest/gtest.h>

#include "acm/catalog.hpp"
#include "acm/serre.hpp"

namespace acm {
namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

TEST(BundleToCurve, FanoRows) {
  for (Int g : kPrimeFanoGenera) {
    const auto v = make_prime_fano(g);
    EXPECT_EQ(bundle_to_curve(v, {2, 2 * g + 2, 0}), (CurveClass{2 * g + 2, g + 2, 1}));
    EXPECT_EQ(bundle_to_curve(v, {-1, 1, 0}), (CurveClass{1, 0, -2}));
    EXPECT_EQ(bundle_to_curve(v, {3, 5 * g - 1, 0}), (CurveClass{5 * g - 1, 5 * g, 2}));
  }
}

TEST(BundleToCurve, CicyTopRow) {
  for (const auto& t : cicy_types()) {
    const auto v = make_cicy(t);
    const Int r = v.degree();
    EXPECT_EQ(bundle_to_curve(v, {4, 6 * r}), (CurveClass{6 * r, 12 * r + 1, 4}));
  }
}

TEST(BundleToCurve, Errors) {
  const auto v = make_prime_fano(3);
  EXPECT_EQ(kind_of([&] { bundle_to_curve(v, {0, 3}); }), ErrorKind::NonIntegralGenus);
  EXPECT_EQ(kind_of([&] { bundle_to_curve(v, {-2, 2}); }), ErrorKind::NegativeGenus);
  EXPECT_EQ(kind_of([&] { bundle_to_curve(v, {1, 0}); }), ErrorKind::EmptyZeroLocus);
  EXPECT_EQ(kind_of([&] { bundle_to_curve(v, {1, -4}); }), ErrorKind::EmptyZeroLocus);
  EXPECT_EQ(kind_of([&] { bundle_to_curve(v, {1, 4, 1}); }), ErrorKind::NotNormalized);
  EXPECT_EQ(kind_of([&] { bundle_to_curve(make_cicy({5}), {1, 3}); }), ErrorKind::NonIntegralGenus);
}

TEST(CurveToBundle, Examples) {
  const auto v6 = make_prime_fano(4);
  EXPECT_EQ(curve_to_bundle(v6, {4, 1, 0}), (BundleClass{1, 4}));
  EXPECT_EQ(curve_to_bundle(v6, {10, 6, 1}), (BundleClass{2, 10}));
  EXPECT_EQ(kind_of([&] { curve_to_bundle(v6, {4, 2, 0}); }), ErrorKind::InconsistentSubcanonical);
  EXPECT_EQ(kind_of([&] { curve_to_bundle(v6, {0, 1, 0}); }), ErrorKind::EmptyZeroLocus);
  EXPECT_EQ(curve_to_bundle(make_cicy({5}), {30, 61, 4}), (BundleClass{4, 30}));
}

TEST(SerreProperty, RoundTripOverGrid) {
  for (const auto& entry : builtin_catalog()) {
    const auto& v = entry.variety;
    for (Int c1 = -2; c1 <= 4; ++c1) {
      for (Int c2 = 1; c2 <= 100; ++c2) {
        const Int twice = (c1 - v.index()) * c2;
        if (twice % 2 != 0) {
          ASSERT_EQ(kind_of([&] { bundle_to_curve(v, {c1, c2, 0}); }), ErrorKind::NonIntegralGenus);
          continue;
        }
        if (twice / 2 + 1 < 0) {
          ASSERT_EQ(kind_of([&] { bundle_to_curve(v, {c1, c2, 0}); }), ErrorKind::NegativeGenus);
          continue;
        }
        const auto c = bundle_to_curve(v, {c1, c2, 0});
        ASSERT_EQ(2 * c.genus - 2, c.subcanonical_level * c.degree);
        ASSERT_EQ(curve_to_bundle(v, c), (BundleClass{c1, c2}));
      }
    }
  }
}

TEST(SpanDefect, Examples) {
  EXPECT_EQ(span_defect(make_prime_fano(5), {4, 1, 0}), 3);
  EXPECT_EQ(span_defect(make_prime_fano(4), {6, 1, 0}), 0);
  EXPECT_EQ(kind_of([] { span_defect(make_prime_fano(3), {2, 1, 0}); }), ErrorKind::OutOfRange);
  EXPECT_EQ(kind_of([] { span_defect(make_prime_fano(3), {6, 1, 0}); }), ErrorKind::OutOfRange);
  EXPECT_EQ(kind_of([] { span_defect(make_prime_fano(3), {4, 3, 1}); }), ErrorKind::NotElliptic);
  EXPECT_EQ(kind_of([] { span_defect(make_cicy({5}), {4, 1, 0}); }), ErrorKind::UnsupportedFamily);
}

}  // namespace
}  // namespace acm
