#include "pqkt/manifest.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace pqkt {
namespace {

using nlohmann::json;

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error("manifest: " + where + ": " + what);
}

const json& require(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing key '") + key + "'");
  return *it;
}

PolyField parse_poly(const json& terms, const std::string& where) {
  if (!terms.is_array()) fail(where, "expected an array of terms");
  int dim = -1;
  PolyField f;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    const json& t = terms[i];
    if (!t.is_object()) fail(at, "expected a {exponents, coeff} object");
    const json& ex = require(t, "exponents", at);
    if (!ex.is_array() || ex.empty()) fail(at + ".exponents", "expected a non-empty array");
    std::vector<int> exps;
    for (const json& e : ex) {
      if (!e.is_number_integer() || e.get<int>() < 0)
        fail(at + ".exponents", "entries must be non-negative integers");
      exps.push_back(e.get<int>());
    }
    if (dim < 0) {
      dim = static_cast<int>(exps.size());
      f = PolyField(dim);
    } else if (static_cast<int>(exps.size()) != dim) {
      fail(at + ".exponents", "inconsistent coordinate count");
    }
    const json& co = require(t, "coeff", at);
    if (!co.is_number()) fail(at + ".coeff", "expected a number");
    f.add_term(std::move(exps), co.get<double>());
  }
  return f;
}

}  // namespace

Manifest parse_manifest(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    // e.byte is the offset of the failure in the input
    throw Error("manifest: parse error at byte " + std::to_string(e.byte) +
                ": " + e.what());
  }
  if (!root.is_object()) fail("$", "top level must be an object");

  Manifest m;
  const json& model = require(root, "model", "$");
  if (!model.is_object()) fail("$.model", "expected an object");
  m.model.kind = model_kind_from_string(
      require(model, "kind", "$.model").get<std::string>());
  const json& jn = require(model, "n", "$.model");
  if (!jn.is_number_integer() || jn.get<int>() < 1)
    fail("$.model.n", "n must be a positive integer");
  m.model.n = jn.get<int>();
  if (model.contains("seed")) m.model.seed = model["seed"].get<std::uint64_t>();
  if (model.contains("magnitude")) {
    m.model.magnitude = model["magnitude"].get<double>();
    if (!(m.model.magnitude > 0)) fail("$.model.magnitude", "must be positive");
  }
  if (model.contains("factor")) {
    m.model.factor = parse_poly(model["factor"], "$.model.factor");
    if (m.model.factor.dim() != 4 * m.model.n)
      fail("$.model.factor", "polynomial has " +
           std::to_string(m.model.factor.dim()) + " coordinates, chart has " +
           std::to_string(4 * m.model.n));
  }

  if (root.contains("points")) {
    m.options.points = root["points"].get<int>();
    if (m.options.points < 1) fail("$.points", "must be at least 1");
  }
  if (root.contains("seed")) m.options.seed = root["seed"].get<std::uint64_t>();
  if (root.contains("tol_scale")) {
    m.options.tol_scale = root["tol_scale"].get<double>();
    if (!(m.options.tol_scale > 0)) fail("$.tol_scale", "must be positive");
  }
  if (root.contains("suites")) {
    const json& s = root["suites"];
    if (!s.is_array()) fail("$.suites", "expected an array of suite names");
    for (const json& name : s) {
      const std::string v = name.get<std::string>();
      const auto& known = suite_names();
      if (std::find(known.begin(), known.end(), v) == known.end())
        fail("$.suites", "unknown suite '" + v + "'");
      m.options.suites.push_back(v);
    }
  }
  return m;
}

Manifest load_manifest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open manifest: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_manifest(buf.str());
}

std::string emit_manifest(const Manifest& m) {
  // hand-rendered so the key order and float format are canonical
  std::string out = "{\n  \"model\": {\n";
  if (!m.model.factor.is_zero()) {
    out += "    \"factor\": [";
    bool first = true;
    for (const auto& [exps, coeff] : m.model.factor.terms()) {
      out += first ? "\n" : ",\n";
      first = false;
      out += "      {\"coeff\": " + fmt_double(coeff) + ", \"exponents\": [";
      for (std::size_t i = 0; i < exps.size(); ++i)
        out += (i ? ", " : "") + std::to_string(exps[i]);
      out += "]}";
    }
    out += "\n    ],\n";
  }
  out += "    \"kind\": \"" + to_string(m.model.kind) + "\",\n";
  out += "    \"magnitude\": " + fmt_double(m.model.magnitude) + ",\n";
  out += "    \"n\": " + std::to_string(m.model.n) + ",\n";
  out += "    \"seed\": " + std::to_string(m.model.seed) + "\n  },\n";
  out += "  \"points\": " + std::to_string(m.options.points) + ",\n";
  out += "  \"seed\": " + std::to_string(m.options.seed) + ",\n";
  if (!m.options.suites.empty()) {
    out += "  \"suites\": [";
    for (std::size_t i = 0; i < m.options.suites.size(); ++i)
      out += (i ? ", " : "") + ("\"" + m.options.suites[i] + "\"");
    out += "],\n";
  }
  out += "  \"tol_scale\": " + fmt_double(m.options.tol_scale) + "\n}\n";
  return out;
}

}  // namespace pqkt
