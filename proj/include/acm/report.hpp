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

#include <sstream>
#include <string>
#include <vector>

#include "acm/catalog.hpp"
#include "acm/classify.hpp"
#include "acm/rr.hpp"

namespace acm {

// JSON carries integers only; exact rationals appear as "p/q" strings.

inline Json to_json(const IntRange& r) {
  if (r.is_point()) return r.lo;
  return Json{{"min", r.lo}, {"max", r.hi}};
}

inline Json variety_json(const PolarizedThreefold& v) {
  Json j = {{"id", v.id()},
            {"family", v.family_name()},
            {"params", family_params(v)},
            {"degree", v.degree()},
            {"index", v.index()},
            {"c2txh", v.c2txh()}};
  j["ambient_dim"] = v.ambient_dim() ? Json(*v.ambient_dim()) : Json(nullptr);
  if (v.nonstandard()) j["warning"] = "nonstandard multidegree";
  return j;
}

inline Json row_json(const CandidateRow& row) {
  Json j = {{"c1", row.c1}};
  if (row.c2) {
    Json c2 = to_json(*row.c2);
    if (!row.c2_min_stated) c2["min_stated"] = false;
    j["c2"] = std::move(c2);
  } else {
    j["c2"] = nullptr;
  }
  if (row.curve_min && row.curve_max) {
    j["curve"] = {{"degree", to_json(IntRange{row.curve_min->degree, row.curve_max->degree})},
                  {"genus", to_json(IntRange{row.curve_min->genus, row.curve_max->genus})},
                  {"subcanonical_level", row.curve_max->subcanonical_level}};
  } else {
    j["curve"] = nullptr;
  }
  j["tag"] = row.tag ? Json(std::string(to_string(*row.tag))) : Json(nullptr);
  j["linear_span_defect"] = row.linear_span_defect ? to_json(*row.linear_span_defect) : Json(nullptr);
  j["existence"] = std::string(to_string(row.existence));
  return j;
}

inline Json rows_json(const std::vector<CandidateRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) out.push_back(row_json(r));
  return out;
}

/// Content of a shipped golden table; the classify report's rows must match
/// it byte for byte.
inline Json golden_document(const PolarizedThreefold& v, const std::vector<CandidateRow>& rows) {
  return Json{{"schema_version", kSchemaVersion}, {"variety", v.id()}, {"rows", rows_json(rows)}};
}

inline std::string golden_filename(const PolarizedThreefold& v) {
  std::string name;
  for (char c : v.id()) {
    if (c == ':') name += '_';
    else if (c != '=') name += c;
  }
  return name + ".json";
}

inline Json audit_json(const AuditReport& report) {
  Json formulas = Json::array();
  for (const auto& f : report.formulas) {
    Json mismatches = Json::array();
    const bool line = f.formula.ends_with("_line");
    for (const auto& m : f.mismatches) {
      Json mj = Json::object();
      if (line) {
        mj["n"] = m.arg;
      } else {
        mj["c1"] = m.arg;
        mj["c2"] = *m.c2;
      }
      mj["engine"] = to_string(m.engine);
      mj["closed_form"] = to_string(m.closed);
      mismatches.push_back(std::move(mj));
    }
    formulas.push_back({{"formula", f.formula},
                        {"compared", f.compared},
                        {"status", f.all_match() ? "MATCH" : "MISMATCH"},
                        {"mismatches", std::move(mismatches)}});
  }
  return Json{{"variety", report.variety}, {"formulas", std::move(formulas)}};
}

inline Json classify_report(const PolarizedThreefold& v, const std::vector<CandidateRow>& rows) {
  bool golden = true;
  Json provenance = Json::array();
  for (const auto& r : rows) {
    golden = golden && r.golden;
    Json p = {{"c1", r.c1}};
    p["constraint"] = r.constraint ? Json{{"twist", r.constraint->twist}, {"target", r.constraint->target}}
                                   : Json(nullptr);
    p["trace"] = r.trace;
    provenance.push_back(std::move(p));
  }
  return Json{{"schema_version", kSchemaVersion},
              {"command", "classify"},
              {"variety", variety_json(v)},
              {"golden", golden},
              {"rows", rows_json(rows)},
              {"provenance", std::move(provenance)},
              {"audits", Json::array()}};
}

namespace detail {

inline std::string range_text(const IntRange& r, bool min_stated = true) {
  if (!min_stated) return "<= " + std::to_string(r.hi);
  if (r.is_point()) return std::to_string(r.lo);
  return std::to_string(r.lo) + ".." + std::to_string(r.hi);
}

}  // namespace detail

/// Markdown table in c1 order.
inline std::string classify_markdown(const PolarizedThreefold& v, const std::vector<CandidateRow>& rows) {
  std::ostringstream out;
  out << "### " << v.id() << " (degree " << v.degree() << ", index " << v.index() << ")\n\n";
  out << "| c1 | c2 | curve degree | genus | a | tag | h0(I_C(1)) | existence |\n";
  out << "|---:|---:|---:|---:|---:|---|---:|---|\n";
  for (const auto& r : rows) {
    out << "| " << r.c1 << " | " << (r.c2 ? detail::range_text(*r.c2, r.c2_min_stated) : "-") << " | ";
    if (r.curve_min && r.curve_max) {
      out << detail::range_text({r.curve_min->degree, r.curve_max->degree}, r.c2_min_stated) << " | "
          << detail::range_text({r.curve_min->genus, r.curve_max->genus}, r.c2_min_stated) << " | "
          << r.curve_max->subcanonical_level << " | ";
    } else {
      out << "- | - | - | ";
    }
    out << (r.tag ? to_string(*r.tag) : "-") << " | "
        << (r.linear_span_defect ? detail::range_text(*r.linear_span_defect) : "-") << " | "
        << to_string(r.existence) << " |\n";
  }
  return out.str();
}

inline std::string classify_csv(const std::vector<CandidateRow>& rows) {
  std::ostringstream out;
  out << "c1,c2_min,c2_max,c2_min_stated,degree_min,degree_max,genus_min,genus_max,level,tag,"
         "span_defect_min,span_defect_max,existence\n";
  auto opt = [](bool has, Int v) { return has ? std::to_string(v) : std::string(); };
  for (const auto& r : rows) {
    const bool curve = r.curve_min && r.curve_max;
    out << r.c1 << ',' << opt(r.c2.has_value(), r.c2 ? r.c2->lo : 0) << ','
        << opt(r.c2.has_value(), r.c2 ? r.c2->hi : 0) << ',' << (r.c2_min_stated ? "true" : "false") << ','
        << opt(curve, curve ? r.curve_min->degree : 0) << ',' << opt(curve, curve ? r.curve_max->degree : 0) << ','
        << opt(curve, curve ? r.curve_min->genus : 0) << ',' << opt(curve, curve ? r.curve_max->genus : 0) << ','
        << opt(curve, curve ? r.curve_max->subcanonical_level : 0) << ','
        << (r.tag ? std::string(to_string(*r.tag)) : std::string()) << ','
        << opt(r.linear_span_defect.has_value(), r.linear_span_defect ? r.linear_span_defect->lo : 0) << ','
        << opt(r.linear_span_defect.has_value(), r.linear_span_defect ? r.linear_span_defect->hi : 0) << ','
        << to_string(r.existence) << '\n';
  }
  return out.str();
}

}  // namespace acm
