#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "pqkt/manifest.hpp"
#include "pqkt/report.hpp"

using namespace pqkt;

namespace {

const IdentityResult* find_id(const Report& r, const std::string& id) {
  for (const IdentityResult& e : r.identities)
    if (e.id == id) return &e;
  return nullptr;
}

Manifest small_manifest(ModelKind kind, int n, int points) {
  Manifest m;
  m.model.kind = kind;
  m.model.n = n;
  if (kind == ModelKind::Conformal)
    m.model.factor = default_conformal_factor(4 * n);
  m.options.points = points;
  return m;
}

}  // namespace

TEST_CASE("manifest emit/parse round-trips") {
  Manifest m = small_manifest(ModelKind::Conformal, 2, 7);
  m.options.seed = 9;
  m.options.tol_scale = 2.0;
  m.options.suites = {"algebra", "forms"};
  Manifest back = parse_manifest(emit_manifest(m));
  CHECK(back.model.kind == m.model.kind);
  CHECK(back.model.n == m.model.n);
  CHECK(back.options.points == 7);
  CHECK(back.options.seed == 9);
  CHECK(back.options.tol_scale == 2.0);
  CHECK(back.options.suites == m.options.suites);
  CHECK(emit_manifest(back) == emit_manifest(m));
}

TEST_CASE("parse errors carry positions and paths") {
  CHECK_THROWS_WITH_AS(parse_manifest("{\"model\": {"),
                       doctest::Contains("byte"), Error);
  CHECK_THROWS_WITH_AS(parse_manifest("{}"),
                       doctest::Contains("missing key 'model'"), Error);
  CHECK_THROWS_WITH_AS(
      parse_manifest("{\"model\": {\"kind\": \"flat\", \"n\": 2}, \"suites\": [\"bogus\"]}"),
      doctest::Contains("unknown suite"), Error);
  CHECK_THROWS_WITH_AS(
      parse_manifest("{\"model\": {\"kind\": \"conformal\", \"n\": 2, "
                     "\"factor\": [{\"exponents\": [1], \"coeff\": 0.1}]}}"),
      doctest::Contains("factor"), Error);
}

TEST_CASE("flat model: full run has no failures") {
  Report r = run_report(small_manifest(ModelKind::Flat, 2, 6));
  CHECK(!r.any_failed());
  for (const IdentityResult& e : r.identities) {
    CHECK(e.status != "fail");
    CHECK(e.status != "indeterminate");
  }
}

TEST_CASE("conformal model reports the transport identities tightly") {
  Report r = run_report(small_manifest(ModelKind::Conformal, 2, 6));
  CHECK(!r.any_failed());
  const IdentityResult* z5 = find_id(r, "eq.z5");
  REQUIRE(z5);
  CHECK(z5->status == "pass");
  CHECK(z5->residual < 1e-10);
}

TEST_CASE("n = 1 gates the torsion-connection checks off") {
  Manifest m = small_manifest(ModelKind::Flat, 1, 4);
  m.options.suites = {"connections", "curvature"};
  Report r = run_report(m);
  const IdentityResult* c7 = find_id(r, "eq.c7");
  REQUIRE(c7);
  CHECK(c7->status == "not-applicable");
  const IdentityResult* e12 = find_id(r, "eq.12");
  REQUIRE(e12);
  CHECK(e12->status == "not-applicable");
  // but the degenerate n = 1 relations are exercised
  const IdentityResult* n1 = find_id(r, "cor.3.3.n1");
  REQUIRE(n1);
  CHECK(n1->status == "pass");
}

TEST_CASE("report rendering is canonical and deterministic") {
  Manifest m = small_manifest(ModelKind::Conformal, 2, 4);
  m.options.suites = {"algebra", "conformal"};
  const std::string a = render_report(run_report(m));
  const std::string b = render_report(run_report(m));
  CHECK(a == b);
  CHECK(a.find("\"metadata\"") != std::string::npos);
  CHECK(a.find("\"model_hash\"") != std::string::npos);
  CHECK(a.find("timestamp") == std::string::npos);
  // different seed, different hash
  Manifest m2 = m;
  m2.options.seed = 99;
  Report r2 = run_report(m2);
  CHECK(render_report(r2) != a);
  CHECK(r2.seed == 99);
}

TEST_CASE("suite selection restricts the report") {
  Manifest m = small_manifest(ModelKind::Flat, 2, 3);
  m.options.suites = {"algebra"};
  Report r = run_report(m);
  CHECK(!r.identities.empty());
  for (const IdentityResult& e : r.identities) CHECK(e.suite == "algebra");
}
