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

#include <vector>

#include <gtest/gtest.h>

#include "acm/catalog.hpp"
#include "acm/rr.hpp"
#include "oracles.hpp"

namespace acm {
namespace {

std::vector<PolarizedThreefold> all_varieties() {
  std::vector<PolarizedThreefold> out;
  for (const auto& e : builtin_catalog()) out.push_back(e.variety);
  out.push_back(make_custom(3, 2, 12));
  out.push_back(make_custom(1, 4, 6));  // P^3 with c2(T)·H = 6
  return out;
}

TEST(ChiLine, Examples) {
  EXPECT_EQ(chi_line(make_prime_fano(3), 1), 5);
  for (Int g : kPrimeFanoGenera) EXPECT_EQ(chi_line(make_prime_fano(g), 0), 1);
  EXPECT_EQ(chi_line(make_cicy({2, 4}), 1), 6);
  for (const auto& t : cicy_types()) EXPECT_EQ(chi_line(make_cicy(t), 0), 0);
}

// h0(O(1)) = g + 2 on every prime Fano, k + 4 on every ciCY.
TEST(ChiLine, HyperplaneCount) {
  for (Int g : kPrimeFanoGenera) EXPECT_EQ(chi_line(make_prime_fano(g), 1), g + 2);
  for (const auto& t : cicy_types()) EXPECT_EQ(chi_line(make_cicy(t), 1), static_cast<Int>(t.size()) + 4);
}

TEST(ChiLine, KoszulOracleOnCompleteIntersections) {
  struct Case {
    PolarizedThreefold v;
    std::vector<Int> degrees;
  };
  std::vector<Case> cases = {
      {make_prime_fano(3), {4}}, {make_prime_fano(4), {2, 3}}, {make_prime_fano(5), {2, 2, 2}},
      {make_custom(1, 4, 6), {}}, {make_custom(2, 3, 8), {2}},
  };
  for (const auto& t : cicy_types()) cases.push_back({make_cicy(t), t});
  for (const auto& c : cases) {
    for (Int n = -8; n <= 8; ++n) {
      EXPECT_EQ(chi_line_exact(c.v, n), oracle::koszul_chi(c.degrees, n)) << c.v.id() << " n=" << n;
    }
  }
}

TEST(ChiLine, NonIntegralCustomData) {
  const auto v = make_custom(1, 1, 1);
  try {
    chi_line(v, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonIntegralChi);
  }
}

TEST(ChiRank2, ExamplesFromKnownBundles) {
  EXPECT_EQ(chi_rank2(make_prime_fano(6), {1, 4}), 5);
  EXPECT_EQ(chi_rank2(make_prime_fano(8), {1, 5}), 6);
  const auto v6 = make_prime_fano(4);
  EXPECT_EQ(chi_rank2(v6, twist(v6, {2, 10}, -1)), 0);
  for (const auto& v : all_varieties()) {
    EXPECT_EQ(chi_rank2_exact(v, {0, 0}), 2 * structure_chi(v)) << v.id();
  }
}

TEST(ChiRank2, OddParityIsNonIntegral) {
  try {
    chi_rank2(make_prime_fano(3), {0, 3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonIntegralChi);
  }
}

TEST(ChiRank2, GradedRingOracle) {
  for (const auto& v : all_varieties()) {
    for (Int c1 = -6; c1 <= 6; ++c1) {
      for (Int c2 = -30; c2 <= 60; c2 += 3) {
        ASSERT_EQ(chi_rank2_exact(v, {c1, c2}),
                  oracle::hrr_integral(v.degree(), v.index(), v.c2txh(), 2, c1, c2))
            << v.id() << " c1=" << c1 << " c2=" << c2;
      }
      ASSERT_EQ(chi_line_exact(v, c1), oracle::hrr_integral(v.degree(), v.index(), v.c2txh(), 1, c1, 0));
    }
  }
}

TEST(ChiRank2, SplitAdditivity) {
  for (const auto& v : all_varieties()) {
    for (Int a = -5; a <= 5; ++a) {
      for (Int b = -5; b <= 5; ++b) {
        ASSERT_EQ(chi_rank2_exact(v, {a + b, a * b * v.degree()}), chi_line_exact(v, a) + chi_line_exact(v, b))
            << v.id() << " a=" << a << " b=" << b;
      }
    }
  }
}

TEST(ChiRank2, SerreDuality) {
  for (const auto& v : all_varieties()) {
    for (Int c1 = -6; c1 <= 6; ++c1) {
      for (Int c2 = -60; c2 <= 60; ++c2) {
        const BundleClass e{c1, c2};
        ASSERT_EQ(chi_rank2_exact(v, e), -chi_rank2_exact(v, twist(v, dual(e), -v.index())))
            << v.id() << " c1=" << c1 << " c2=" << c2;
      }
    }
  }
}

TEST(ChiRank2, IntegralExactlyOnAdmissibleParity) {
  for (const auto& e : builtin_catalog()) {
    const auto& v = e.variety;
    for (Int c1 = -6; c1 <= 6; ++c1) {
      for (Int c2 = -60; c2 <= 60; ++c2) {
        const bool even = ((c1 - v.index()) * c2) % 2 == 0;
        ASSERT_EQ(is_integral(chi_rank2_exact(v, {c1, c2})), even) << v.id() << " c1=" << c1 << " c2=" << c2;
      }
    }
  }
}

TEST(ChiPolynomial, MatchesPointwiseAndInterpolation) {
  for (const auto& v : all_varieties()) {
    for (Int c1 = -3; c1 <= 4; ++c1) {
      for (Int c2 : {-7, 0, 2, 5, 13}) {
        const BundleClass e{c1, c2};
        const auto p = chi_polynomial(v, e);
        for (Int n = -6; n <= 6; ++n) {
          ASSERT_EQ(p(n), chi_rank2_exact(v, twist(v, e, n))) << v.id() << " n=" << n;
        }
        std::array<Rational, 4> samples{};
        for (Int n = 0; n < 4; ++n) samples[static_cast<std::size_t>(n)] = chi_rank2_exact(v, twist(v, e, n));
        const auto fitted = oracle::fit_cubic(samples);
        for (std::size_t j = 0; j < 4; ++j) ASSERT_EQ(p.coeffs[j], fitted[j]) << v.id() << " coeff " << j;
        EXPECT_EQ(p.coeffs[3], Rational(v.degree(), 3));
      }
    }
  }
}

TEST(ChiPolynomial, SplitTrivialBundle) {
  const auto v = make_prime_fano(3);
  const auto p = chi_polynomial(v, {0, 0});
  for (Int n = -6; n <= 6; ++n) EXPECT_EQ(p(n), 2 * chi_line_exact(v, n));
  EXPECT_EQ(chi_polynomial(v, {0, 2})(0), chi_rank2_exact(v, {0, 2}));
  EXPECT_TRUE(p.integer_valued());
  EXPECT_FALSE(chi_polynomial(v, {0, 3}).integer_valued());
}

TEST(ClosedForm, Values) {
  EXPECT_EQ(closed_form::fano_line(3, 1), 5);
  for (Int g : kPrimeFanoGenera) EXPECT_EQ(closed_form::fano_line(g, 0), 1);
  EXPECT_EQ(closed_form::fano_rank2(5, 1, 4), 4);  // d/2 - c2 + 4 at c1 = 1
  EXPECT_EQ(closed_form::fano_rank2(6, 1, 4), 5);
  EXPECT_EQ(closed_form::fano_rank2(8, 1, 5), 6);
  EXPECT_EQ(closed_form::cicy_rank2(5, 1, 1, 8), 1);
  EXPECT_EQ(closed_form::cicy_line(5, 1), 5);
  EXPECT_EQ(closed_form::cicy_line(8, 1), 8);
}

TEST(ClosedForm, FanoEquivalence) {
  for (Int g : kPrimeFanoGenera) {
    const auto v = make_prime_fano(g);
    for (Int m = -10; m <= 10; ++m) ASSERT_EQ(closed_form::fano_line(g, m), chi_line_exact(v, m));
    for (Int c1 = -10; c1 <= 10; ++c1)
      for (Int c2 = -60; c2 <= 60; ++c2) ASSERT_EQ(closed_form::fano_rank2(g, c1, c2), chi_rank2_exact(v, {c1, c2}));
  }
}

TEST(Audit, FanoAllMatch) {
  for (Int g : kPrimeFanoGenera) {
    const auto report = audit_formulas(make_prime_fano(g));
    ASSERT_EQ(report.formulas.size(), 2u);
    for (const auto& f : report.formulas) EXPECT_TRUE(f.all_match()) << f.formula << " g=" << g;
    EXPECT_EQ(report.find("fano_line")->compared, 13);
    EXPECT_EQ(report.find("fano_rank2")->compared, 13 * 121);
  }
}

TEST(Audit, QuinticAllMatch) {
  const auto report = audit_formulas(make_cicy({5}));
  for (const auto& f : report.formulas) EXPECT_TRUE(f.all_match()) << f.formula;
}

TEST(Audit, LineFormulaErratumOffQuintic) {
  for (const auto& t : cicy_types()) {
    if (t == std::vector<Int>{5}) continue;
    const auto v = make_cicy(t);
    const auto report = audit_formulas(v);
    EXPECT_TRUE(report.find("cicy_rank2")->all_match()) << v.id();
    const auto* line = report.find("cicy_line");
    ASSERT_EQ(line->mismatches.size(), 12u) << v.id();
    const Int k = static_cast<Int>(t.size());
    const Int r = v.degree();
    for (const auto& m : line->mismatches) {
      EXPECT_NE(m.arg, 0);
      // engine: (r/6)(n^3 - n) + n(k+4); printed: (r/6)(n^3 + 5n)
      const Int n = m.arg;
      EXPECT_EQ(m.engine, Rational(r * (n * n * n - n), 6) + n * (k + 4));
      EXPECT_EQ(m.closed, Rational(r * (n * n * n + 5 * n), 6));
    }
  }
  const auto x8 = audit_formulas(make_cicy({2, 4}));
  bool found = false;
  for (const auto& m : x8.find("cicy_line")->mismatches) {
    if (m.arg == 1) {
      EXPECT_EQ(m.engine, 6);
      EXPECT_EQ(m.closed, 8);
      found = true;
    }
  }
  EXPECT_TRUE(found);
}

TEST(Audit, CustomIsEmpty) { EXPECT_TRUE(audit_formulas(make_custom(3, 2, 12)).formulas.empty()); }

}  // namespace
}  // namespace acm
