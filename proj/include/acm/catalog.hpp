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

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "acm/error.hpp"
#include "acm/variety.hpp"

namespace acm {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

struct CatalogEntry {
  std::string name;
  PolarizedThreefold variety;
};

using Catalog = std::vector<CatalogEntry>;

/// All ten prime Fano threefolds (V2 ... V22) and the five ciCY types (X5 ... X16).
inline Catalog builtin_catalog() {
  Catalog catalog;
  for (Int g : kPrimeFanoGenera) {
    auto v = make_prime_fano(g);
    catalog.push_back({"V" + std::to_string(v.degree()), std::move(v)});
  }
  for (const auto& type : cicy_types()) {
    auto v = make_cicy(type);
    catalog.push_back({"X" + std::to_string(v.degree()), std::move(v)});
  }
  return catalog;
}

inline const CatalogEntry* find_entry(const Catalog& catalog, std::string_view name) {
  for (const auto& e : catalog)
    if (e.name == name) return &e;
  return nullptr;
}

inline Json family_params(const PolarizedThreefold& v) {
  Json params = Json::object();
  if (const auto* f = v.prime_fano()) {
    params["g"] = f->genus;
  } else if (const auto* c = v.cicy()) {
    params["multidegrees"] = c->multidegrees;
  } else {
    params["degree"] = v.degree();
    params["index"] = v.index();
    params["c2txh"] = v.c2txh();
  }
  return params;
}

inline Json catalog_to_json(const Catalog& catalog) {
  Json entries = Json::array();
  for (const auto& e : catalog) {
    entries.push_back({{"name", e.name}, {"family", e.variety.family_name()}, {"params", family_params(e.variety)}});
  }
  return Json{{"schema_version", kSchemaVersion}, {"entries", std::move(entries)}};
}

namespace detail {

inline Int json_int(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key) || !obj.at(key).is_number_integer()) {
    throw ParseError(where + ": params." + key + " must be an integer");
  }
  return obj.at(key).get<Int>();
}

}  // namespace detail

/// Accepts {"entries": [...]} or a bare array of entries. Structural problems
/// raise ParseError; invalid invariants raise the constructors' Error.
inline Catalog parse_catalog(const Json& doc, Mode mode = Mode::Strict) {
  const Json* entries = &doc;
  if (doc.is_object()) {
    if (!doc.contains("entries")) throw ParseError("catalog: missing \"entries\"");
    entries = &doc.at("entries");
  }
  if (!entries->is_array()) throw ParseError("catalog: entries must be an array");

  Catalog catalog;
  for (std::size_t i = 0; i < entries->size(); ++i) {
    const Json& e = (*entries)[i];
    const std::string where = "catalog entry " + std::to_string(i);
    if (!e.is_object() || !e.contains("name") || !e.at("name").is_string() || !e.contains("family") ||
        !e.at("family").is_string() || !e.contains("params")) {
      throw ParseError(where + ": expected {\"name\", \"family\", \"params\"}");
    }
    const auto name = e.at("name").get<std::string>();
    const auto family = e.at("family").get<std::string>();
    const Json& params = e.at("params");
    if (find_entry(catalog, name)) throw ParseError(where + ": duplicate name \"" + name + "\"");

    if (family == "fano") {
      catalog.push_back({name, make_prime_fano(detail::json_int(params, "g", where))});
    } else if (family == "cicy") {
      if (!params.is_object() || !params.contains("multidegrees") || !params.at("multidegrees").is_array()) {
        throw ParseError(where + ": params.multidegrees must be an array");
      }
      std::vector<Int> degrees;
      for (const auto& d : params.at("multidegrees")) {
        if (!d.is_number_integer()) throw ParseError(where + ": multidegrees must be integers");
        degrees.push_back(d.get<Int>());
      }
      catalog.push_back({name, make_cicy(degrees, mode)});
    } else if (family == "custom") {
      catalog.push_back({name, make_custom(detail::json_int(params, "degree", where),
                                           detail::json_int(params, "index", where),
                                           detail::json_int(params, "c2txh", where))});
    } else {
      throw ParseError(where + ": unknown family \"" + family + "\"");
    }
  }
  return catalog;
}

inline Catalog load_catalog(const std::filesystem::path& path, Mode mode = Mode::Strict) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open catalog " + path.string());
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("catalog " + path.string() + ": " + e.what());
  }
  return parse_catalog(doc, mode);
}

/// Parses a strict decimal integer occupying all of `text`.
inline Int parse_int(std::string_view text, std::string_view what) {
  Int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end) {
    throw ParseError("expected an integer for " + std::string(what) + ", got \"" + std::string(text) + "\"");
  }
  return value;
}

/// Resolves `fano:g=<n>`, `cicy:<d1>x<d2>...`, `custom:d=<n>,r=<n>,c2=<n>`
/// or a catalog name.
inline PolarizedThreefold parse_variety(std::string_view text, const Catalog& catalog,
                                        Mode mode = Mode::Strict) {
  auto starts_with = [&](std::string_view prefix) { return text.substr(0, prefix.size()) == prefix; };

  if (starts_with("fano:")) {
    const auto body = text.substr(5);
    if (body.substr(0, 2) != "g=") throw ParseError("expected fano:g=<n>, got \"" + std::string(text) + "\"");
    return make_prime_fano(parse_int(body.substr(2), "genus"));
  }
  if (starts_with("cicy:")) {
    std::vector<Int> degrees;
    std::string_view rest = text.substr(5);
    while (true) {
      const auto cut = rest.find('x');
      degrees.push_back(parse_int(rest.substr(0, cut), "multidegree"));
      if (cut == std::string_view::npos) break;
      rest = rest.substr(cut + 1);
    }
    return make_cicy(degrees, mode);
  }
  if (starts_with("custom:")) {
    std::optional<Int> d, r, c2;
    std::string_view rest = text.substr(7);
    while (!rest.empty()) {
      const auto cut = rest.find(',');
      const auto item = rest.substr(0, cut);
      const auto eq = item.find('=');
      if (eq == std::string_view::npos) throw ParseError("expected key=value in \"" + std::string(item) + "\"");
      const auto key = item.substr(0, eq);
      const Int value = parse_int(item.substr(eq + 1), key);
      if (key == "d") d = value;
      else if (key == "r") r = value;
      else if (key == "c2") c2 = value;
      else throw ParseError("unknown custom key \"" + std::string(key) + "\"");
      if (cut == std::string_view::npos) break;
      rest = rest.substr(cut + 1);
    }
    if (!d || !r || !c2) throw ParseError("custom variety needs d=, r= and c2=");
    return make_custom(*d, *r, *c2);
  }
  if (const auto* entry = find_entry(catalog, text)) return entry->variety;
  throw ParseError("unknown variety \"" + std::string(text) + "\"");
}

}  // namespace acm
