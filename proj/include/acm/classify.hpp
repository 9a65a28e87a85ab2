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
#include <string>
#include <string_view>
#include <vector>

#include "acm/chern.hpp"
#include "acm/error.hpp"
#include "acm/rational.hpp"
#include "acm/rr.hpp"
#include "acm/serre.hpp"
#include "acm/variety.hpp"

namespace acm {

/// Intersection numbers entering the splitting criterion, with L = D1·D2
/// a complete intersection of two members of |H|.
struct SplittingBoundData {
  Int l_dot_d = 0;   // L·D = H^3
  Int l_dot_kl = 0;  // L·K_L = (2 - r)·H^3 by adjunction
};

inline SplittingBoundData splitting_bound_data(const PolarizedThreefold& v) {
  return {v.degree(), (2 - v.index()) * v.degree()};
}

/// Window of c1 for a normalized non-split bundle without intermediate
/// cohomology: -2 L·D - L·K_L <= -L·c1 <= L·K_L, divided through by L·D.
inline IntRange c1_bounds(const PolarizedThreefold& v) {
  const auto data = splitting_bound_data(v);
  const Rational neg_c1_min(-2 * data.l_dot_d - data.l_dot_kl, data.l_dot_d);
  const Rational neg_c1_max(data.l_dot_kl, data.l_dot_d);
  // c1 in [-neg_c1_max, -neg_c1_min]; ceil/floor for the integer window
  const Rational lo = -neg_c1_max, hi = -neg_c1_min;
  auto ceil = [](const Rational& q) {
    Int f = q.numerator() / q.denominator();
    if (f * q.denominator() < q.numerator()) ++f;
    return f;
  };
  auto floor = [](const Rational& q) {
    Int f = q.numerator() / q.denominator();
    if (f * q.denominator() > q.numerator()) --f;
    return f;
  };
  return {ceil(lo), floor(hi)};
}

enum class RowTag { Line, Conic, Elliptic, HalfCanonical, TwoCanonical, Other };
enum class Existence { Known, Conjectural };

constexpr std::string_view to_string(RowTag tag) noexcept {
  switch (tag) {
    case RowTag::Line: return "line";
    case RowTag::Conic: return "conic";
    case RowTag::Elliptic: return "elliptic";
    case RowTag::HalfCanonical: return "half_canonical";
    case RowTag::TwoCanonical: return "two_canonical";
    case RowTag::Other: return "other";
  }
  return "other";
}

constexpr std::string_view to_string(Existence e) noexcept {
  return e == Existence::Known ? "known" : "conjectural";
}

/// chi(E(twist)) = target, a linear equation in c2.
struct ChiConstraint {
  Int twist = 0;
  Int target = 0;
  friend bool operator==(const ChiConstraint&, const ChiConstraint&) = default;
};

struct ConstraintSolution {
  Int c2 = 0;
  Rational slope;   // d chi / d c2
  Rational offset;  // chi at c2 = 0
};

/// Solves chi(E(twist)) = target for c2 given c1.
inline ConstraintSolution solve_chi_constraint(const PolarizedThreefold& v, Int c1,
                                               const ChiConstraint& constraint) {
  const Rational offset = chi_rank2_exact(v, twist(v, {c1, 0, std::nullopt}, constraint.twist));
  const Rational slope = chi_rank2_exact(v, twist(v, {c1, 1, std::nullopt}, constraint.twist)) - offset;
  if (slope == 0) {
    throw Error(ErrorKind::DegenerateConstraint,
                "chi(E(" + std::to_string(constraint.twist) + ")) does not depend on c2 for c1=" +
                    std::to_string(c1) + " (twisted c1 = -r)");
  }
  const Rational c2 = (Rational(constraint.target) - offset) / slope;
  return {to_integer(c2, ErrorKind::Internal, "c2 solving the chi constraint"), slope, offset};
}

struct C2Solution {
  IntRange c2;
  ChiConstraint constraint;  // at c2.hi for the elliptic range
  std::string trace;
};

/// Derives c2 for a normalized bundle without intermediate cohomology on a
/// prime Fano threefold from the chi constraint attached to each c1.
inline C2Solution solve_c2(const PolarizedThreefold& v, Int c1) {
  const auto* fano = v.prime_fano();
  if (!fano) throw Error(ErrorKind::UnsupportedFamily, "solve_c2 requires a prime Fano threefold");
  const IntRange window = c1_bounds(v);
  if (!window.contains(c1)) {
    throw Error(ErrorKind::OutOfBounds, "c1=" + std::to_string(c1) + " outside [" +
                                            std::to_string(window.lo) + ", " + std::to_string(window.hi) + "]");
  }
  const Int g = fano->genus;

  ChiConstraint constraint;
  Int expected = 0;
  std::string why;
  switch (c1) {
    case -1:
      constraint = {-1, -(g + 2)};
      expected = 1;
      why = "h0 = h1 = h2 = 0 and h3(E(-1)) = h0(O(1))";
      break;
    case 0:
      constraint = {0, 1};
      expected = 2;
      why = "h0(E) = 1, higher cohomology vanishes";
      break;
    case 1:
      // h0(E) = 1 + h0(I_C(1)); the non-degenerate curve gives the upper end
      constraint = {0, 1};
      expected = g + 2;
      why = "h0(E) = 1 + h0(I_C(1)), non-degenerate end h0(I_C(1)) = 0";
      break;
    case 2:
      constraint = {-1, 0};
      expected = 2 * g + 2;
      why = "E(-1) has no cohomology";
      break;
    case 3:
      constraint = {-1, 0};
      expected = 5 * g - 1;
      why = "E(-1) has no cohomology";
      break;
    default:
      throw Error(ErrorKind::OutOfBounds, "no constraint for c1=" + std::to_string(c1));
  }

  const auto sol = solve_chi_constraint(v, c1, constraint);
  if (sol.c2 != expected) {
    throw Error(ErrorKind::Internal, "solved c2=" + std::to_string(sol.c2) + " for c1=" +
                                         std::to_string(c1) + " but the classification states " +
                                         std::to_string(expected));
  }

  std::string trace = "chi(E(" + std::to_string(constraint.twist) + ")) = " + std::to_string(constraint.target) +
                      " [" + why + "]; chi(E(" + std::to_string(constraint.twist) + ")) = " +
                      to_string(sol.slope) + "*c2 + " + to_string(sol.offset) + " => c2 = " +
                      std::to_string(sol.c2);
  IntRange range{sol.c2, sol.c2};
  if (c1 == 1) {
    range.lo = 3;
    trace += "; degenerate curves give c2 = g+2-h0(I_C(1)) >= 3";
  }
  return {range, constraint, std::move(trace)};
}

/// One line of a classification table.
struct CandidateRow {
  Int c1 = 0;
  std::optional<IntRange> c2;      // unset for generic custom rows
  bool c2_min_stated = true;       // false when only an upper bound is known
  std::optional<CurveClass> curve_min;  // zero locus at c2.lo
  std::optional<CurveClass> curve_max;  // zero locus at c2.hi
  std::optional<RowTag> tag;
  std::optional<IntRange> linear_span_defect;  // h0(I_C(1)), prime Fano c1 = 1
  std::optional<ChiConstraint> constraint;     // prime Fano rows
  Existence existence = Existence::Conjectural;
  bool golden = true;
  std::string trace;
};

namespace detail {

inline void attach_curves(const PolarizedThreefold& v, CandidateRow& row) {
  row.curve_min = bundle_to_curve(v, {row.c1, row.c2->lo, 0});
  row.curve_max = bundle_to_curve(v, {row.c1, row.c2->hi, 0});
}

inline void expect_genus(const CandidateRow& row, Int genus_at_min, Int genus_at_max) {
  if (row.curve_min->genus != genus_at_min || row.curve_max->genus != genus_at_max) {
    throw Error(ErrorKind::Internal, "curve genus mismatch in row c1=" + std::to_string(row.c1));
  }
}

inline std::vector<CandidateRow> classify_fano(const PolarizedThreefold& v) {
  const Int g = v.prime_fano()->genus;
  std::vector<CandidateRow> rows;
  const IntRange window = c1_bounds(v);
  for (Int c1 = window.lo; c1 <= window.hi; ++c1) {
    auto sol = solve_c2(v, c1);
    CandidateRow row;
    row.c1 = c1;
    row.c2 = sol.c2;
    row.constraint = sol.constraint;
    row.trace = std::move(sol.trace);
    attach_curves(v, row);
    row.existence = Existence::Conjectural;
    switch (c1) {
      case -1:
        row.tag = RowTag::Line;
        row.existence = Existence::Known;
        expect_genus(row, 0, 0);
        break;
      case 0:
        row.tag = RowTag::Conic;
        row.existence = Existence::Known;
        expect_genus(row, 0, 0);
        break;
      case 1:
        row.tag = RowTag::Elliptic;
        row.linear_span_defect =
            IntRange{span_defect(v, *row.curve_max), span_defect(v, *row.curve_min)};
        // elliptic quartics on V_6 and V_8, Gushel's quartic on V_10 and quintic on V_14
        if (g == 4 || g == 5 || g == 6 || g == 8) row.existence = Existence::Known;
        expect_genus(row, 1, 1);
        break;
      case 2:
        row.tag = RowTag::HalfCanonical;
        // curves C^6_10 from pfaffian cubics through V_6
        if (g == 4) row.existence = Existence::Known;
        expect_genus(row, g + 2, g + 2);
        break;
      case 3:
        row.tag = RowTag::TwoCanonical;
        expect_genus(row, 5 * g, 5 * g);
        break;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::vector<CandidateRow> classify_cicy(const PolarizedThreefold& v) {
  const Int r = v.degree();
  const bool quintic = v.cicy()->multidegrees == std::vector<Int>{5};

  struct Printed {
    Int c1;
    IntRange c2;
    bool min_stated;
    RowTag tag;
    Int genus_lo, genus_hi;
  };
  const std::vector<Printed> printed = {
      {-2, {1, 1}, true, RowTag::Line, 0, 0},
      {-1, {2, 2}, true, RowTag::Conic, 0, 0},
      {0, {3, r}, true, RowTag::Elliptic, 1, 1},
      {1, {2 * r - 2, 2 * r - 2}, true, RowTag::HalfCanonical, r, r},
      {2, {1, 3 * r - 1}, false, RowTag::TwoCanonical, 2, 3 * r},
      {3, {4 * r, 4 * r}, true, RowTag::Other, 6 * r + 1, 6 * r + 1},
      {4, {6 * r, 6 * r}, true, RowTag::Other, 12 * r + 1, 12 * r + 1},
  };

  const IntRange window = c1_bounds(v);
  std::vector<CandidateRow> rows;
  for (const auto& p : printed) {
    if (!window.contains(p.c1)) {
      throw Error(ErrorKind::Internal, "listed c1=" + std::to_string(p.c1) + " outside the splitting window");
    }
    CandidateRow row;
    row.c1 = p.c1;
    row.c2 = p.c2;
    row.c2_min_stated = p.min_stated;
    row.tag = p.tag;
    row.golden = !v.nonstandard();
    attach_curves(v, row);
    expect_genus(row, p.genus_lo, p.genus_hi);
    // the class must have integral chi at both ends of its range
    chi_rank2(v, {row.c1, row.c2->lo, 0});
    chi_rank2(v, {row.c1, row.c2->hi, 0});

    const bool lines_or_conics = p.c1 <= -1;
    // on the quintic the curves for c1 <= 1 are known, and c1 = 4 comes from pfaffians
    const bool quintic_known = quintic && (p.c1 <= 1 || p.c1 == 4);
    row.existence = (lines_or_conics || quintic_known) ? Existence::Known : Existence::Conjectural;
    row.trace = "listed row; 2p-2 = (c1 - r)·c2 with r = 0";
    if (!p.min_stated) row.trace += "; only the upper bound c2 <= 3r-1 is stated, lower end is the least admissible c2";
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::vector<CandidateRow> classify_generic(const PolarizedThreefold& v) {
  std::vector<CandidateRow> rows;
  const IntRange window = c1_bounds(v);
  for (Int c1 = window.lo; c1 <= window.hi; ++c1) {
    CandidateRow row;
    row.c1 = c1;
    row.golden = false;
    row.trace = "splitting window only; c2 not constrained for a custom variety";
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace detail

/// Candidate normalized ACM rank-two bundles, c1 ascending.
/// Prime Fano: five rows solved from chi constraints. ciCY: the seven listed
/// rows, each checked against the Serre dictionary and chi integrality.
/// Custom: UnsupportedFamily in strict mode, generic window rows otherwise.
inline std::vector<CandidateRow> classify(const PolarizedThreefold& v, Mode mode = Mode::Strict) {
  if (v.prime_fano()) return detail::classify_fano(v);
  if (v.cicy()) return detail::classify_cicy(v);
  if (mode == Mode::Strict) {
    throw Error(ErrorKind::UnsupportedFamily, "classification tables exist for prime Fano and ciCY only");
  }
  return detail::classify_generic(v);
}

}  // namespace acm
