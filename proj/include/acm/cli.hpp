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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "acm/catalog.hpp"
#include "acm/chern.hpp"
#include "acm/classify.hpp"
#include "acm/report.hpp"
#include "acm/rr.hpp"
#include "acm/serre.hpp"
#include "acm/verify.hpp"

#ifndef ACM_ATLAS_GOLDEN_DIR
#define ACM_ATLAS_GOLDEN_DIR "golden"
#endif

namespace acm::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kDomain = 3 };

/// Thrown when arguments parse but do not make sense together.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

struct Rendered {
  std::string text;
  int code = kOk;
};

inline std::string json_text(const Json& doc) { return doc.dump(2) + "\n"; }

inline Json header(const char* command, const PolarizedThreefold& v) {
  return Json{{"schema_version", kSchemaVersion}, {"command", command}, {"variety", variety_json(v)}};
}

inline Json bundle_json(const BundleClass& e) {
  Json j = {{"c1", e.c1}, {"c2", e.c2}};
  if (e.b) j["b"] = *e.b;
  return j;
}

inline Json curve_json(const CurveClass& c) {
  return Json{{"degree", c.degree}, {"genus", c.genus}, {"subcanonical_level", c.subcanonical_level}};
}

inline std::string bundle_text(const BundleClass& e) {
  std::string s = "(c1=" + std::to_string(e.c1) + ", c2=" + std::to_string(e.c2);
  if (e.b) s += ", b=" + std::to_string(*e.b);
  return s + ")";
}

}  // namespace detail

/// Runs one command. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact classification of ACM rank-two bundle candidates on prime Fano and ciCY threefolds",
               "acm-atlas"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  std::string catalog_path;
  std::optional<Int> grid;
  bool permissive = false;
  std::string out_path;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "md", "csv"}));
  app.add_option("--catalog", catalog_path, "Catalog file (default: $ACM_ATLAS_CATALOG or built-in)");
  app.add_option("--grid", grid, "Property-suite grid radius")->check(CLI::PositiveNumber);
  app.add_flag("--permissive", permissive, "Accept nonstandard complete intersections and custom classification");
  app.add_option("--out", out_path, "Write output to a file instead of stdout");

  std::string variety_text;
  std::optional<Int> c1, c2, b, degree, genus, level;
  Int n = 0;

  auto* classify_cmd = app.add_subcommand("classify", "Candidate table for a variety");
  classify_cmd->add_option("variety", variety_text)->required();

  auto* chi_cmd = app.add_subcommand("chi", "Euler characteristic of O(n) or of a rank-two class twisted by n");
  chi_cmd->add_option("variety", variety_text)->required();
  chi_cmd->add_option("--c1", c1);
  chi_cmd->add_option("--c2", c2);
  chi_cmd->add_option("-n,--twist", n);

  auto* twist_cmd = app.add_subcommand("twist", "Twist a rank-two class by O(n)");
  twist_cmd->add_option("variety", variety_text)->required();
  twist_cmd->add_option("--c1", c1)->required();
  twist_cmd->add_option("--c2", c2)->required();
  twist_cmd->add_option("--b", b, "Normalization level");
  twist_cmd->add_option("-n,--twist", n)->required();

  auto* bounds_cmd = app.add_subcommand("bounds", "c1 window of the splitting criterion");
  bounds_cmd->add_option("variety", variety_text)->required();

  auto* curve_cmd = app.add_subcommand("curve", "Serre correspondence in either direction");
  curve_cmd->add_option("variety", variety_text)->required();
  curve_cmd->add_option("--c1", c1);
  curve_cmd->add_option("--c2", c2);
  curve_cmd->add_option("--degree", degree);
  curve_cmd->add_option("--genus", genus);
  curve_cmd->add_option("--level", level, "Subcanonical level a");

  std::string scope_text = "all";
  std::string golden_dir = ACM_ATLAS_GOLDEN_DIR;
  auto* verify_cmd = app.add_subcommand("verify", "Formula audits, property suites and golden tables");
  verify_cmd->add_option("scope", scope_text)->check(CLI::IsMember({"all", "fano", "cicy", "formulas"}));
  verify_cmd->add_option("--golden", golden_dir, "Directory of golden tables");

  auto* catalog_cmd = app.add_subcommand("catalog", "List the active catalog");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  const Mode mode = permissive ? Mode::Permissive : Mode::Strict;
  detail::Rendered rendered;
  try {
    Catalog catalog;
    if (catalog_path.empty()) {
      if (const char* env = std::getenv("ACM_ATLAS_CATALOG"); env && *env) catalog_path = env;
    }
    catalog = catalog_path.empty() ? builtin_catalog() : load_catalog(catalog_path, mode);
    auto variety = [&] { return parse_variety(variety_text, catalog, mode); };

    if (classify_cmd->parsed()) {
      const auto v = variety();
      const auto rows = classify(v, mode);
      if (format == "md") rendered.text = classify_markdown(v, rows);
      else if (format == "csv") rendered.text = classify_csv(rows);
      else rendered.text = detail::json_text(classify_report(v, rows));

    } else if (chi_cmd->parsed()) {
      const auto v = variety();
      if (c1.has_value() != c2.has_value()) throw UsageError("chi needs both --c1 and --c2, or neither");
      Json values;
      Int value = 0;
      std::string label;
      if (c1) {
        const BundleClass e{*c1, *c2, std::nullopt};
        value = chi_rank2(v, twist(v, e, n));
        values = {{"kind", "rank2"}, {"c1", *c1}, {"c2", *c2}, {"n", n}, {"chi", value}};
        label = "chi(E(" + std::to_string(n) + ")) for E = " + detail::bundle_text(e);
      } else {
        value = chi_line(v, n);
        values = {{"kind", "line"}, {"n", n}, {"chi", value}};
        label = "chi(O(" + std::to_string(n) + "))";
      }
      if (format == "md") rendered.text = label + " = " + std::to_string(value) + "\n";
      else if (format == "csv") rendered.text = "c1,c2,n,chi\n" + (c1 ? std::to_string(*c1) : "") + "," +
                                               (c2 ? std::to_string(*c2) : "") + "," + std::to_string(n) + "," +
                                               std::to_string(value) + "\n";
      else {
        Json doc = detail::header("chi", v);
        doc["values"] = std::move(values);
        rendered.text = detail::json_text(doc);
      }

    } else if (twist_cmd->parsed()) {
      const auto v = variety();
      const BundleClass e{*c1, *c2, b};
      const auto t = twist(v, e, n);
      if (format == "md") rendered.text = detail::bundle_text(e) + " twisted by " + std::to_string(n) + " -> " +
                                          detail::bundle_text(t) + "\n";
      else if (format == "csv") rendered.text = "c1,c2,n,c1_twisted,c2_twisted\n" + std::to_string(e.c1) + "," +
                                               std::to_string(e.c2) + "," + std::to_string(n) + "," +
                                               std::to_string(t.c1) + "," + std::to_string(t.c2) + "\n";
      else {
        Json doc = detail::header("twist", v);
        doc["values"] = {{"input", detail::bundle_json(e)}, {"n", n}, {"result", detail::bundle_json(t)}};
        rendered.text = detail::json_text(doc);
      }

    } else if (bounds_cmd->parsed()) {
      const auto v = variety();
      const auto window = c1_bounds(v);
      const auto data = splitting_bound_data(v);
      if (format == "md") rendered.text = window.empty() ? "c1 window is empty: every such bundle splits\n"
                                                         : "c1 in [" + std::to_string(window.lo) + ", " +
                                                               std::to_string(window.hi) + "]\n";
      else if (format == "csv") rendered.text = "c1_min,c1_max\n" + std::to_string(window.lo) + "," +
                                               std::to_string(window.hi) + "\n";
      else {
        Json doc = detail::header("bounds", v);
        doc["values"] = {{"c1_min", window.lo}, {"c1_max", window.hi},
                         {"l_dot_d", data.l_dot_d}, {"l_dot_kl", data.l_dot_kl}};
        rendered.text = detail::json_text(doc);
      }

    } else if (curve_cmd->parsed()) {
      const auto v = variety();
      const bool from_bundle = c1 || c2;
      const bool from_curve = degree || genus || level;
      if (from_bundle == from_curve || (from_bundle && !(c1 && c2)) || (from_curve && !(degree && genus && level))) {
        throw UsageError("curve needs either --c1 and --c2, or --degree, --genus and --level");
      }
      BundleClass e;
      CurveClass c;
      if (from_bundle) {
        e = {*c1, *c2, std::nullopt};
        c = bundle_to_curve(v, e);
      } else {
        c = {*degree, *genus, *level};
        e = curve_to_bundle(v, c);
      }
      if (format == "md") rendered.text = detail::bundle_text(e) + " <-> curve of degree " + std::to_string(c.degree) +
                                          ", genus " + std::to_string(c.genus) + ", omega = O(" +
                                          std::to_string(c.subcanonical_level) + ")\n";
      else if (format == "csv") rendered.text = "c1,c2,degree,genus,level\n" + std::to_string(e.c1) + "," +
                                               std::to_string(e.c2) + "," + std::to_string(c.degree) + "," +
                                               std::to_string(c.genus) + "," + std::to_string(c.subcanonical_level) + "\n";
      else {
        Json doc = detail::header("curve", v);
        doc["values"] = {{"bundle", detail::bundle_json(e)}, {"curve", detail::curve_json(c)}};
        rendered.text = detail::json_text(doc);
      }

    } else if (verify_cmd->parsed()) {
      VerifyOptions opts;
      opts.scope = scope_text == "fano"       ? VerifyScope::Fano
                   : scope_text == "cicy"     ? VerifyScope::Cicy
                   : scope_text == "formulas" ? VerifyScope::Formulas
                                              : VerifyScope::All;
      opts.golden_dir = golden_dir;
      if (grid) {
        opts.grid.twist_radius = *grid;
        opts.grid.chi.radius = *grid;
      }
      const auto result = verify(catalog, opts);

      Json audits = Json::array();
      for (const auto& e : catalog) {
        const auto& v = e.variety;
        const bool in_scope = opts.scope == VerifyScope::All || opts.scope == VerifyScope::Formulas ||
                              (opts.scope == VerifyScope::Fano && v.prime_fano()) ||
                              (opts.scope == VerifyScope::Cicy && v.cicy());
        if (in_scope && (v.prime_fano() || v.cicy()) && !v.nonstandard()) {
          audits.push_back(audit_json(audit_formulas(v, opts.grid.chi)));
        }
      }
      if (format == "md" || format == "csv") {
        std::ostringstream s;
        if (format == "md") s << "| check | variety | status | detail |\n|---|---|---|---|\n";
        else s << "check,variety,status,detail\n";
        for (const auto& f : result.findings) {
          if (format == "md") s << "| " << f.check << " | " << f.variety << " | " << (f.ok ? "PASS" : "FAIL") << " | "
                                << f.detail << " |\n";
          else s << f.check << ',' << f.variety << ',' << (f.ok ? "PASS" : "FAIL") << ",\"" << f.detail << "\"\n";
        }
        if (format == "md") s << "\n" << (result.passed() ? "PASS" : "FAIL") << "\n";
        rendered.text = s.str();
      } else {
        Json findings = Json::array();
        for (const auto& f : result.findings) {
          findings.push_back({{"check", f.check}, {"variety", f.variety}, {"status", f.ok ? "PASS" : "FAIL"},
                              {"detail", f.detail}});
        }
        rendered.text = detail::json_text(Json{{"schema_version", kSchemaVersion},
                                               {"command", "verify"},
                                               {"scope", scope_text},
                                               {"passed", result.passed()},
                                               {"varieties", result.varieties},
                                               {"findings", std::move(findings)},
                                               {"audits", std::move(audits)}});
      }
      if (!result.passed()) {
        const auto* f = result.first_failure();
        err << "verify failed: " << f->check << (f->variety.empty() ? "" : " on " + f->variety) << ": " << f->detail
            << "\n";
        rendered.code = kVerifyFailed;
      }

    } else if (catalog_cmd->parsed()) {
      if (format == "json") {
        rendered.text = detail::json_text(catalog_to_json(catalog));
      } else {
        std::ostringstream s;
        if (format == "md") s << "| name | id | degree | index | c2txh |\n|---|---|---:|---:|---:|\n";
        else s << "name,id,degree,index,c2txh\n";
        for (const auto& e : catalog) {
          const auto& v = e.variety;
          if (format == "md") s << "| " << e.name << " | " << v.id() << " | " << v.degree() << " | " << v.index()
                                << " | " << v.c2txh() << " |\n";
          else s << e.name << ',' << v.id() << ',' << v.degree() << ',' << v.index() << ',' << v.c2txh() << '\n';
        }
        rendered.text = s.str();
      }
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  }

  if (!out_path.empty()) {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << out_path << "\n";
      return kUsage;
    }
    file << rendered.text;
  } else {
    out << rendered.text;
  }
  return rendered.code;
}

}  // namespace acm::cli
