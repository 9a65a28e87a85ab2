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

#include <filesystem>
#include <fstream>
#include <future>
#include <sstream>
#include <string>
#include <vector>

#include "acm/catalog.hpp"
#include "acm/chern.hpp"
#include "acm/classify.hpp"
#include "acm/report.hpp"
#include "acm/rr.hpp"
#include "acm/serre.hpp"

namespace acm {

struct Finding {
  std::string check;
  std::string variety;
  bool ok = true;
  std::string detail;
};

struct PropertyGrid {
  Int twist_radius = 10;  // |m|, |n| for the twist laws; |n| for line integrality
  Int split_radius = 5;
  AuditGrid chi;          // c1 and c2 ranges for duality and rank-two integrality
  IntRange serre_c1{-2, 4};
  IntRange serre_c2{1, 100};
};

namespace detail {

inline std::string bundle_text(const BundleClass& e) {
  std::string s = "(c1=" + std::to_string(e.c1) + ", c2=" + std::to_string(e.c2);
  if (e.b) s += ", b=" + std::to_string(*e.b);
  return s + ")";
}

/// Bundles exercised by the twist laws.
inline std::vector<BundleClass> twist_samples() {
  std::vector<BundleClass> out;
  for (Int c1 = -2; c1 <= 4; ++c1)
    for (Int c2 : {-3, 0, 1, 10, 59})
      for (Int b : {-1, 0, 2}) out.push_back({c1, c2, b});
  return out;
}

}  // namespace detail

inline Finding check_twist_group_law(const PolarizedThreefold& v, Int radius) {
  Finding f{"twist_group_law", v.id(), true, ""};
  for (const auto& e : detail::twist_samples()) {
    for (Int m = -radius; m <= radius; ++m) {
      for (Int n = -radius; n <= radius; ++n) {
        if (twist(v, twist(v, e, m), n) != twist(v, e, m + n)) {
          return {f.check, f.variety, false,
                  detail::bundle_text(e) + " m=" + std::to_string(m) + " n=" + std::to_string(n)};
        }
      }
    }
  }
  return f;
}

inline Finding check_stability_margin_invariance(const PolarizedThreefold& v, Int radius) {
  Finding f{"stability_margin_invariance", v.id(), true, ""};
  for (const auto& e : detail::twist_samples()) {
    for (Int n = -radius; n <= radius; ++n) {
      if (stability_margin(twist(v, e, n)) != stability_margin(e)) {
        return {f.check, f.variety, false, detail::bundle_text(e) + " n=" + std::to_string(n)};
      }
    }
  }
  return f;
}

inline Finding check_dual_involution(const PolarizedThreefold& v, const AuditGrid& grid) {
  Finding f{"dual_involution", v.id(), true, ""};
  for (Int c1 = -grid.radius; c1 <= grid.radius; ++c1) {
    for (Int c2 = grid.c2_min; c2 <= grid.c2_max; ++c2) {
      const BundleClass e{c1, c2, std::nullopt};
      // E^v = E(-c1), read as E^v(c1) = E
      if (dual(dual(e)) != e || twist(v, dual(e), c1) != e) {
        return {f.check, f.variety, false, detail::bundle_text(e)};
      }
    }
  }
  return f;
}

inline Finding check_split_additivity(const PolarizedThreefold& v, Int radius) {
  Finding f{"split_additivity", v.id(), true, ""};
  for (Int a = -radius; a <= radius; ++a) {
    for (Int b = -radius; b <= radius; ++b) {
      const BundleClass split{a + b, a * b * v.degree(), std::nullopt};
      if (chi_rank2_exact(v, split) != chi_line_exact(v, a) + chi_line_exact(v, b)) {
        return {f.check, f.variety, false, "O(" + std::to_string(a) + ") + O(" + std::to_string(b) + ")"};
      }
    }
  }
  return f;
}

/// chi(E) = -chi(E^v ⊗ K) on a threefold.
inline Finding check_serre_duality(const PolarizedThreefold& v, const AuditGrid& grid) {
  Finding f{"serre_duality", v.id(), true, ""};
  for (Int c1 = -grid.radius; c1 <= grid.radius; ++c1) {
    for (Int c2 = grid.c2_min; c2 <= grid.c2_max; ++c2) {
      const BundleClass e{c1, c2, std::nullopt};
      if (chi_rank2_exact(v, e) != -chi_rank2_exact(v, twist(v, dual(e), -v.index()))) {
        return {f.check, f.variety, false, detail::bundle_text(e)};
      }
    }
  }
  return f;
}

/// chi(O(n)) is integral for all n; chi(E) is integral exactly when
/// (c1 - r)·c2 is even, the parity every rank-two bundle class satisfies.
inline Finding check_integrality(const PolarizedThreefold& v, Int line_radius, const AuditGrid& grid) {
  Finding f{"integrality", v.id(), true, ""};
  for (Int n = -line_radius; n <= line_radius; ++n) {
    if (!is_integral(chi_line_exact(v, n))) {
      return {f.check, f.variety, false, "chi(O(" + std::to_string(n) + ")) = " + to_string(chi_line_exact(v, n))};
    }
  }
  for (Int c1 = -grid.radius; c1 <= grid.radius; ++c1) {
    for (Int c2 = grid.c2_min; c2 <= grid.c2_max; ++c2) {
      const BundleClass e{c1, c2, std::nullopt};
      const bool admissible = ((c1 - v.index()) * c2) % 2 == 0;
      if (is_integral(chi_rank2_exact(v, e)) != admissible) {
        return {f.check, f.variety, false,
                detail::bundle_text(e) + " chi = " + to_string(chi_rank2_exact(v, e))};
      }
      if (admissible && !chi_polynomial(v, e).integer_valued()) {
        return {f.check, f.variety, false, "chi polynomial of " + detail::bundle_text(e)};
      }
    }
  }
  return f;
}

inline Finding check_serre_round_trip(const PolarizedThreefold& v, const IntRange& c1s, const IntRange& c2s) {
  Finding f{"serre_round_trip", v.id(), true, ""};
  for (Int c1 = c1s.lo; c1 <= c1s.hi; ++c1) {
    for (Int c2 = c2s.lo; c2 <= c2s.hi; ++c2) {
      const BundleClass e{c1, c2, 0};
      const Int twice = (c1 - v.index()) * c2;
      try {
        const auto curve = bundle_to_curve(v, e);
        const auto back = curve_to_bundle(v, curve);
        if (back.c1 != c1 || back.c2 != c2 || 2 * curve.genus - 2 != curve.subcanonical_level * curve.degree) {
          return {f.check, f.variety, false, detail::bundle_text(e) + " does not round-trip"};
        }
      } catch (const Error& err) {
        const bool expected = (err.kind() == ErrorKind::NonIntegralGenus && twice % 2 != 0) ||
                              (err.kind() == ErrorKind::NegativeGenus && twice % 2 == 0 && twice / 2 + 1 < 0);
        if (!expected) return {f.check, f.variety, false, detail::bundle_text(e) + ": " + err.what()};
      }
    }
  }
  return f;
}

/// Engine vs closed forms. Everything must match except the printed ciCY
/// line-bundle formula, which must disagree at every n != 0 unless k+4 = r.
inline Finding check_audit_pattern(const PolarizedThreefold& v, const AuditGrid& grid) {
  Finding f{"formula_audit", v.id(), true, ""};
  const auto report = audit_formulas(v, grid);
  std::ostringstream detail;
  for (const auto& a : report.formulas) {
    bool expect_erratum = false;
    if (a.formula == "cicy_line") {
      const Int k = static_cast<Int>(v.cicy()->multidegrees.size());
      expect_erratum = k + 4 != v.degree();
    }
    if (!expect_erratum) {
      if (!a.all_match()) {
        const auto& m = a.mismatches.front();
        return {f.check, f.variety, false,
                a.formula + " MISMATCH at " + std::to_string(m.arg) +
                    (m.c2 ? "," + std::to_string(*m.c2) : "") + ": engine " + to_string(m.engine) +
                    " vs " + to_string(m.closed)};
      }
      detail << a.formula << " MATCH (" << a.compared << "); ";
      continue;
    }
    const Int expected_mismatches = 2 * grid.radius;
    bool zero_hit = false;
    for (const auto& m : a.mismatches) zero_hit = zero_hit || m.arg == 0;
    if (static_cast<Int>(a.mismatches.size()) != expected_mismatches || zero_hit) {
      return {f.check, f.variety, false,
              a.formula + " erratum not reproduced: " + std::to_string(a.mismatches.size()) + " mismatches, expected " +
                  std::to_string(expected_mismatches)};
    }
    detail << a.formula << " MISMATCH at every n != 0 (expected); ";
  }
  f.detail = detail.str();
  return f;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Finding check_golden(const PolarizedThreefold& v, const std::filesystem::path& golden_dir) {
  Finding f{"golden_table", v.id(), true, ""};
  const auto path = golden_dir / golden_filename(v);
  if (!std::filesystem::exists(path)) return {f.check, f.variety, false, "missing " + path.string()};
  const std::string expected = read_file(path);
  std::string actual;
  try {
    actual = golden_document(v, classify(v)).dump(2) + "\n";
  } catch (const Error& err) {
    return {f.check, f.variety, false, err.what()};
  }
  if (expected != actual) return {f.check, f.variety, false, "rows differ from " + path.string()};
  f.detail = path.filename().string();
  return f;
}

enum class VerifyScope { All, Fano, Cicy, Formulas };

struct VerifyOptions {
  VerifyScope scope = VerifyScope::All;
  PropertyGrid grid;
  std::filesystem::path golden_dir;
};

struct VerifyResult {
  std::vector<Finding> findings;
  Int varieties = 0;

  bool passed() const {
    if (varieties == 0) return false;
    for (const auto& f : findings)
      if (!f.ok) return false;
    return true;
  }

  const Finding* first_failure() const {
    for (const auto& f : findings)
      if (!f.ok) return &f;
    return nullptr;
  }
};

inline std::vector<Finding> verify_variety(const PolarizedThreefold& v, const VerifyOptions& opts) {
  std::vector<Finding> out;
  const bool standard_family = (v.prime_fano() || v.cicy()) && !v.nonstandard();
  if (standard_family) out.push_back(check_audit_pattern(v, opts.grid.chi));
  if (opts.scope == VerifyScope::Formulas) return out;

  const auto& g = opts.grid;
  out.push_back(check_twist_group_law(v, g.twist_radius));
  out.push_back(check_stability_margin_invariance(v, g.twist_radius));
  out.push_back(check_dual_involution(v, g.chi));
  out.push_back(check_split_additivity(v, g.split_radius));
  out.push_back(check_serre_duality(v, g.chi));
  out.push_back(check_integrality(v, g.twist_radius, g.chi));
  out.push_back(check_serre_round_trip(v, g.serre_c1, g.serre_c2));
  if (standard_family) out.push_back(check_golden(v, opts.golden_dir));
  return out;
}

/// Runs the selected suites over the catalog, one task per variety.
/// An empty selection fails.
inline VerifyResult verify(const Catalog& catalog, const VerifyOptions& opts) {
  std::vector<const CatalogEntry*> selected;
  for (const auto& e : catalog) {
    const auto& v = e.variety;
    const bool take = opts.scope == VerifyScope::All ||
                      (opts.scope == VerifyScope::Fano && v.prime_fano()) ||
                      (opts.scope == VerifyScope::Cicy && v.cicy()) ||
                      (opts.scope == VerifyScope::Formulas && (v.prime_fano() || v.cicy()) && !v.nonstandard());
    if (take) selected.push_back(&e);
  }

  std::vector<std::future<std::vector<Finding>>> tasks;
  for (const auto* e : selected) {
    tasks.push_back(std::async(std::launch::async, [e, &opts] { return verify_variety(e->variety, opts); }));
  }
  VerifyResult result;
  result.varieties = static_cast<Int>(selected.size());
  for (auto& t : tasks) {
    auto findings = t.get();
    result.findings.insert(result.findings.end(), findings.begin(), findings.end());
  }
  if (selected.empty()) result.findings.push_back({"selection", "", false, "nothing to verify"});
  return result;
}

}  // namespace acm
