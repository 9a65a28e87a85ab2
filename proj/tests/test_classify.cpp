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
#include "acm/classify.hpp"

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

TEST(C1Bounds, Windows) {
  for (Int g : kPrimeFanoGenera) EXPECT_EQ(c1_bounds(make_prime_fano(g)), (IntRange{-1, 3}));
  for (const auto& t : cicy_types()) EXPECT_EQ(c1_bounds(make_cicy(t)), (IntRange{-2, 4}));
  EXPECT_EQ(c1_bounds(make_custom(3, 2, 12)), (IntRange{0, 2}));
  EXPECT_EQ(c1_bounds(make_custom(2, 3, 8)), (IntRange{1, 1}));
  EXPECT_TRUE(c1_bounds(make_custom(1, 4, 6)).empty());
}

TEST(C1Bounds, SplittingData) {
  const auto d = splitting_bound_data(make_prime_fano(7));
  EXPECT_EQ(d.l_dot_d, 12);
  EXPECT_EQ(d.l_dot_kl, 12);
  const auto x = splitting_bound_data(make_cicy({3, 3}));
  EXPECT_EQ(x.l_dot_d, 9);
  EXPECT_EQ(x.l_dot_kl, 18);
}

TEST(SolveC2, Examples) {
  EXPECT_EQ(solve_c2(make_prime_fano(3), 3).c2, (IntRange{14, 14}));
  EXPECT_EQ(solve_c2(make_prime_fano(4), 2).c2, (IntRange{10, 10}));
  for (Int g : kPrimeFanoGenera) EXPECT_EQ(solve_c2(make_prime_fano(g), -1).c2, (IntRange{1, 1}));
  EXPECT_EQ(solve_c2(make_prime_fano(6), 1).c2, (IntRange{3, 8}));
}

TEST(SolveC2, Errors) {
  const auto v = make_prime_fano(5);
  EXPECT_EQ(kind_of([&] { solve_c2(v, 4); }), ErrorKind::OutOfBounds);
  EXPECT_EQ(kind_of([&] { solve_c2(v, -2); }), ErrorKind::OutOfBounds);
  EXPECT_EQ(kind_of([] { solve_c2(make_cicy({5}), 0); }), ErrorKind::UnsupportedFamily);
  // E(-1) with c1 = 1 has twisted c1 = -1 = -r: chi no longer sees c2
  EXPECT_EQ(kind_of([&] { solve_chi_constraint(v, 1, {-1, 0}); }), ErrorKind::DegenerateConstraint);
}

TEST(SolveC2, TraceNamesTheEquation) {
  const auto sol = solve_c2(make_prime_fano(3), -1);
  EXPECT_NE(sol.trace.find("chi(E(-1)) = -5"), std::string::npos) << sol.trace;
  EXPECT_NE(sol.trace.find("c2 = 1"), std::string::npos) << sol.trace;
}

TEST(ClassifyFano, RowsFollowTheGenusFormulas) {
  for (Int g : kPrimeFanoGenera) {
    const auto v = make_prime_fano(g);
    const auto rows = classify(v);
    ASSERT_EQ(rows.size(), 5u);
    const IntRange c2s[] = {{1, 1}, {2, 2}, {3, g + 2}, {2 * g + 2, 2 * g + 2}, {5 * g - 1, 5 * g - 1}};
    const Int genera[] = {0, 0, 1, g + 2, 5 * g};
    const RowTag tags[] = {RowTag::Line, RowTag::Conic, RowTag::Elliptic, RowTag::HalfCanonical, RowTag::TwoCanonical};
    for (std::size_t i = 0; i < 5; ++i) {
      const auto& r = rows[i];
      EXPECT_EQ(r.c1, static_cast<Int>(i) - 1);
      EXPECT_EQ(*r.c2, c2s[i]) << "g=" << g << " row " << i;
      EXPECT_EQ(r.curve_max->genus, genera[i]);
      EXPECT_EQ(r.curve_min->genus, genera[i]);
      EXPECT_EQ(r.curve_max->degree, c2s[i].hi);
      EXPECT_EQ(*r.tag, tags[i]);
      EXPECT_TRUE(r.golden);
      EXPECT_FALSE(r.trace.empty());
    }
    EXPECT_EQ(*rows[2].linear_span_defect, (IntRange{0, g - 1}));
  }
}

TEST(ClassifyFano, ConstraintsReevaluate) {
  for (Int g : kPrimeFanoGenera) {
    const auto v = make_prime_fano(g);
    for (const auto& r : classify(v)) {
      ASSERT_TRUE(r.constraint.has_value());
      EXPECT_EQ(chi_rank2(v, twist(v, {r.c1, r.c2->hi}, r.constraint->twist)), r.constraint->target)
          << "g=" << g << " c1=" << r.c1;
      if (r.c1 >= 2) {
        EXPECT_EQ(chi_rank2(v, twist(v, {r.c1, r.c2->hi}, -1)), 0);
      }
    }
  }
}

TEST(ClassifyFano, PointExamples) {
  const auto v6 = classify(make_prime_fano(4));
  EXPECT_EQ(v6[3].c2->hi, 10);
  EXPECT_EQ(v6[3].curve_max->degree, 10);
  EXPECT_EQ(v6[3].curve_max->genus, 6);
  const auto v22 = classify(make_prime_fano(12));
  EXPECT_EQ(v22[4].c2->hi, 59);
  EXPECT_EQ(v22[4].curve_max->genus, 60);
}

TEST(ClassifyFano, ExistenceLabels) {
  for (Int g : kPrimeFanoGenera) {
    const auto rows = classify(make_prime_fano(g));
    EXPECT_EQ(rows[0].existence, Existence::Known);
    EXPECT_EQ(rows[1].existence, Existence::Known);
    const bool elliptic_known = g == 4 || g == 5 || g == 6 || g == 8;
    EXPECT_EQ(rows[2].existence == Existence::Known, elliptic_known) << "g=" << g;
    EXPECT_EQ(rows[3].existence == Existence::Known, g == 4) << "g=" << g;
    EXPECT_EQ(rows[4].existence, Existence::Conjectural);
  }
}

TEST(ClassifyCicy, Rows) {
  for (const auto& t : cicy_types()) {
    const auto v = make_cicy(t);
    const Int r = v.degree();
    const bool quintic = t == std::vector<Int>{5};
    const auto rows = classify(v);
    ASSERT_EQ(rows.size(), 7u);
    const IntRange c2s[] = {{1, 1}, {2, 2}, {3, r}, {2 * r - 2, 2 * r - 2}, {1, 3 * r - 1}, {4 * r, 4 * r}, {6 * r, 6 * r}};
    const IntRange genera[] = {{0, 0}, {0, 0}, {1, 1}, {r, r}, {2, 3 * r}, {6 * r + 1, 6 * r + 1}, {12 * r + 1, 12 * r + 1}};
    for (std::size_t i = 0; i < 7; ++i) {
      const auto& row = rows[i];
      EXPECT_EQ(row.c1, static_cast<Int>(i) - 2);
      EXPECT_EQ(*row.c2, c2s[i]) << v.id() << " row " << i;
      EXPECT_EQ(row.curve_min->genus, genera[i].lo);
      EXPECT_EQ(row.curve_max->genus, genera[i].hi);
      EXPECT_EQ(row.c2_min_stated, i != 4);
      EXPECT_FALSE(row.constraint.has_value());
    }
    // genus c2 + 1 along the whole c1 = 2 range
    for (Int c2 = rows[4].c2->lo; c2 <= rows[4].c2->hi; ++c2)
      EXPECT_EQ(bundle_to_curve(v, {2, c2, 0}).genus, c2 + 1);
    EXPECT_EQ(rows[0].existence, Existence::Known);
    EXPECT_EQ(rows[1].existence, Existence::Known);
    for (std::size_t i : {2u, 3u, 6u}) EXPECT_EQ(rows[i].existence == Existence::Known, quintic) << v.id() << i;
    EXPECT_EQ(rows[4].existence, Existence::Conjectural);
    EXPECT_EQ(rows[5].existence, Existence::Conjectural);
  }
}

TEST(ClassifyCicy, Examples) {
  const auto quintic = classify(make_cicy({5}));
  EXPECT_EQ(quintic[6].c2->hi, 30);
  EXPECT_EQ(quintic[6].curve_max->genus, 61);
  EXPECT_EQ(quintic[6].existence, Existence::Known);
  const auto x9 = classify(make_cicy({3, 3}));
  EXPECT_EQ(x9[3].c2->hi, 16);
  EXPECT_EQ(x9[3].curve_max->genus, 9);
}

TEST(Classify, StabilityOfRows) {
  for (const auto& e : builtin_catalog()) {
    for (const auto& r : classify(e.variety)) {
      EXPECT_EQ(is_stable({r.c1, r.c2->hi, 0}), r.c1 >= 1) << e.name << " c1=" << r.c1;
    }
  }
}

TEST(Classify, WindowEqualsListedC1) {
  for (const auto& e : builtin_catalog()) {
    const auto window = c1_bounds(e.variety);
    const auto rows = classify(e.variety);
    ASSERT_EQ(static_cast<Int>(rows.size()), window.size());
    for (std::size_t i = 0; i < rows.size(); ++i) EXPECT_EQ(rows[i].c1, window.lo + static_cast<Int>(i));
  }
}

TEST(Classify, Custom) {
  const auto v = make_custom(3, 2, 12);
  EXPECT_EQ(kind_of([&] { classify(v); }), ErrorKind::UnsupportedFamily);
  const auto rows = classify(v, Mode::Permissive);
  ASSERT_EQ(rows.size(), 3u);
  for (const auto& r : rows) {
    EXPECT_FALSE(r.golden);
    EXPECT_FALSE(r.tag.has_value());
    EXPECT_FALSE(r.c2.has_value());
  }
  EXPECT_EQ(rows.front().c1, 0);
}

TEST(Classify, NonstandardCicyIsNotGolden) {
  const auto rows = classify(make_cicy({1, 5}, Mode::Permissive));
  ASSERT_EQ(rows.size(), 7u);
  for (const auto& r : rows) EXPECT_FALSE(r.golden);
}

}  // namespace
}  // namespace acm
