#include "pqkt/report.hpp"

#include <cstdio>

namespace pqkt {
namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

bool Report::any_failed() const {
  for (const IdentityResult& r : identities)
    if (r.status == "fail") return true;
  return false;
}

Report run_report(const Manifest& m) {
  Report rep;
  char hash[24];
  std::snprintf(hash, sizeof hash, "%016llx",
                static_cast<unsigned long long>(fnv1a64(emit_manifest(m))));
  rep.model_hash = hash;
  rep.seed = m.options.seed;
  rep.identities = run_suites(m.model.build(), m.options);
  return rep;
}

std::string render_report(const Report& r) {
  std::string out = "{\n  \"identities\": [";
  bool first = true;
  for (const IdentityResult& id : r.identities) {
    out += first ? "\n" : ",\n";
    first = false;
    out += "    {\"id\": " + quote(id.id);
    out += ", \"note\": " + quote(id.note);
    out += ", \"residual\": " + fmt_double(id.residual);
    out += ", \"samples\": " + std::to_string(id.samples);
    out += ", \"status\": " + quote(id.status);
    out += ", \"suite\": " + quote(id.suite);
    out += ", \"tolerance\": " + fmt_double(id.tol) + "}";
  }
  out += "\n  ],\n  \"metadata\": {";
  out += "\"engine_version\": " + quote(r.engine_version);
  out += ", \"model_hash\": " + quote(r.model_hash);
  out += ", \"seed\": " + std::to_string(r.seed);
  out += "}\n}\n";
  return out;
}

}  // namespace pqkt
