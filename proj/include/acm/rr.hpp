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

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "acm/chern.hpp"
#include "acm/error.hpp"
#include "acm/rational.hpp"
#include "acm/variety.hpp"

namespace acm {

// Hirzebruch-Riemann-Roch on a threefold with Pic = Z·H, -K = r·H:
//   td(X) = 1 + rH/2 + (r^2 H^2 + c2(T))/12 + r·H·c2(T)/24
// so every Euler characteristic below is a polynomial in the data
// (deg, r, c2(T)·H) with denominators dividing 24.

/// chi(O_V) = r·(c2(T)·H)/24.
inline Rational structure_chi(const PolarizedThreefold& v) {
  return Rational(v.index() * v.c2txh(), 24);
}

inline Rational chi_line_exact(const PolarizedThreefold& v, Int n) {
  const Int d = v.degree(), r = v.index(), t = v.c2txh();
  return Rational(d * n * n * n, 6) + Rational(r * d * n * n, 4) +
         Rational(n * (r * r * d + t), 12) + structure_chi(v);
}

inline Int chi_line(const PolarizedThreefold& v, Int n) {
  return to_integer(chi_line_exact(v, n), ErrorKind::NonIntegralChi,
                    "chi(O(" + std::to_string(n) + ")) on " + v.id());
}

inline Rational chi_rank2_exact(const PolarizedThreefold& v, const BundleClass& e) {
  const Int d = v.degree(), r = v.index(), t = v.c2txh();
  const Int c1 = e.c1, c2 = e.c2;
  return Rational(d * c1 * c1 * c1 - 3 * c1 * c2, 6) + Rational(r * (d * c1 * c1 - 2 * c2), 4) +
         Rational(c1 * (r * r * d + t), 12) + 2 * structure_chi(v);
}

inline Int chi_rank2(const PolarizedThreefold& v, const BundleClass& e) {
  return to_integer(chi_rank2_exact(v, e), ErrorKind::NonIntegralChi,
                    "chi(E) for (c1=" + std::to_string(e.c1) + ", c2=" + std::to_string(e.c2) +
                        ") on " + v.id());
}

/// n -> chi(E(n)) as a cubic with exact coefficients; coeffs[j] multiplies n^j.
struct ChiPolynomial {
  std::array<Rational, 4> coeffs{};

  Rational operator()(Int n) const {
    Rational acc = 0;
    for (int j = 3; j >= 0; --j) acc = acc * n + coeffs[static_cast<std::size_t>(j)];
    return acc;
  }

  /// True when the polynomial takes integer values on all of Z: the
  /// Newton coefficients (forward differences at 0) must be integers.
  bool integer_valued() const {
    std::array<Rational, 4> values{};
    for (Int n = 0; n < 4; ++n) values[static_cast<std::size_t>(n)] = (*this)(n);
    for (std::size_t order = 0; order < 4; ++order) {
      if (!is_integral(values[0])) return false;
      for (std::size_t i = 0; i + 1 < 4 - order; ++i) values[i] = values[i + 1] - values[i];
    }
    return true;
  }

  friend bool operator==(const ChiPolynomial&, const ChiPolynomial&) = default;
};

/// Closed form of n -> chi_rank2(v, twist(v, e, n)).
///
/// Writing u = c1(E(n)) = c1 + 2n and D = deg·c1^2 - 4·c2 (twist invariant),
///   chi = deg·u^3/24 + r·deg·u^2/8 + (D/8 + (r^2 deg + t)/12)·u + r·D/8 + 2chi(O)
/// and the cubic in u is re-expanded in n.
inline ChiPolynomial chi_polynomial(const PolarizedThreefold& v, const BundleClass& e) {
  const Int d = v.degree(), r = v.index(), t = v.c2txh();
  const Int disc = d * e.c1 * e.c1 - 4 * e.c2;
  const std::array<Rational, 4> in_u = {
      Rational(r * disc, 8) + 2 * structure_chi(v),
      Rational(disc, 8) + Rational(r * r * d + t, 12),
      Rational(r * d, 8),
      Rational(d, 24),
  };
  // (c1 + 2n)^j = sum_i C(j,i) c1^(j-i) 2^i n^i
  constexpr std::array<std::array<Int, 4>, 4> binom = {{{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 2, 1, 0}, {1, 3, 3, 1}}};
  ChiPolynomial p;
  for (std::size_t j = 0; j < 4; ++j) {
    for (std::size_t i = 0; i <= j; ++i) {
      Int c1_pow = 1;
      for (std::size_t s = 0; s < j - i; ++s) c1_pow *= e.c1;
      p.coeffs[i] += in_u[j] * (binom[j][i] * c1_pow * (Int{1} << i));
    }
  }
  return p;
}

/// The printed closed forms, evaluated literally. They serve as fixtures
/// for the engine above and are never used to produce results.
namespace closed_form {

/// chi(O_V(m)) on a prime Fano of genus g.
inline Rational fano_line(Int g, Int m) {
  return Rational((g - 1) * (m + 1) * (2 * m + 1) * m, 6) + 2 * m + 1;
}

/// chi(E) on a prime Fano of genus g.
inline Rational fano_rank2(Int g, Int c1, Int c2) {
  return Rational(2 * g - 2) * c1 * c1 * (Rational(c1, 6) + Rational(1, 4)) -
         Rational(c2 * (c1 + 1), 2) + Rational(c1 * (g + 11), 6) + 2;
}

/// chi(E) on a ciCY of degree r in P^(k+3).
inline Rational cicy_rank2(Int r, Int k, Int c1, Int c2) {
  return Rational(r * c1 * c1 * c1, 6) - Rational(c1 * c2, 2) +
         Rational(c1, 12) * (12 * (k + 4) - 2 * r);
}

/// chi(O_X(n)) on a ciCY of degree r, as printed. Agrees with the
/// engine only when k + 4 = r (the quintic).
inline Rational cicy_line(Int r, Int n) { return Rational(r, 6) * (n * n * n + 5 * n); }

}  // namespace closed_form

struct AuditGrid {
  Int radius = 6;  // |n|, |c1| <= radius
  Int c2_min = -60;
  Int c2_max = 60;
};

struct AuditMismatch {
  Int arg = 0;                // n (line bundles) or c1 (rank two)
  std::optional<Int> c2;      // rank two only
  Rational engine;
  Rational closed;
};

struct FormulaAudit {
  std::string formula;  // fano_line | fano_rank2 | cicy_rank2 | cicy_line
  Int compared = 0;
  std::vector<AuditMismatch> mismatches;

  bool all_match() const noexcept { return mismatches.empty(); }
};

struct AuditReport {
  std::string variety;
  std::vector<FormulaAudit> formulas;

  const FormulaAudit* find(const std::string& formula) const {
    for (const auto& f : formulas)
      if (f.formula == formula) return &f;
    return nullptr;
  }
};

/// Compares the engine against the closed forms for the variety's family
/// over the grid. Custom varieties produce an empty report.
inline AuditReport audit_formulas(const PolarizedThreefold& v, const AuditGrid& grid = {}) {
  AuditReport report{v.id(), {}};

  auto line_audit = [&](std::string name, auto closed) {
    FormulaAudit a{std::move(name), 0, {}};
    for (Int n = -grid.radius; n <= grid.radius; ++n) {
      const Rational engine = chi_line_exact(v, n), expect = closed(n);
      ++a.compared;
      if (engine != expect) a.mismatches.push_back({n, std::nullopt, engine, expect});
    }
    report.formulas.push_back(std::move(a));
  };
  auto rank2_audit = [&](std::string name, auto closed) {
    FormulaAudit a{std::move(name), 0, {}};
    for (Int c1 = -grid.radius; c1 <= grid.radius; ++c1) {
      for (Int c2 = grid.c2_min; c2 <= grid.c2_max; ++c2) {
        const Rational engine = chi_rank2_exact(v, {c1, c2, std::nullopt}), expect = closed(c1, c2);
        ++a.compared;
        if (engine != expect) a.mismatches.push_back({c1, c2, engine, expect});
      }
    }
    report.formulas.push_back(std::move(a));
  };

  if (const auto* f = v.prime_fano()) {
    const Int g = f->genus;
    line_audit("fano_line", [g](Int m) { return closed_form::fano_line(g, m); });
    rank2_audit("fano_rank2", [g](Int c1, Int c2) { return closed_form::fano_rank2(g, c1, c2); });
  } else if (const auto* c = v.cicy()) {
    const Int r = v.degree(), k = static_cast<Int>(c->multidegrees.size());
    rank2_audit("cicy_rank2", [r, k](Int c1, Int c2) { return closed_form::cicy_rank2(r, k, c1, c2); });
    line_audit("cicy_line", [r](Int n) { return closed_form::cicy_line(r, n); });
  }
  return report;
}

}  // namespace acm
