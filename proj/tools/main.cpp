#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pqkt/manifest.hpp"
#include "pqkt/report.hpp"

namespace {

int cmd_run(const std::string& path, const std::vector<std::string>& suites,
            int points, std::uint64_t seed, double tol_scale, bool have_points,
            bool have_seed, bool have_tol, const std::string& out_path) {
  pqkt::Manifest m = pqkt::load_manifest(path);
  if (!suites.empty()) m.options.suites = suites;
  if (have_points) m.options.points = points;
  if (have_seed) m.options.seed = seed;
  if (have_tol) m.options.tol_scale = tol_scale;

  const pqkt::Report rep = pqkt::run_report(m);
  const std::string text = pqkt::render_report(rep);
  if (out_path.empty()) {
    std::fputs(text.c_str(), stdout);
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw pqkt::Error("cannot write " + out_path);
    out << text;
  }
  int failed = 0, indet = 0;
  for (const auto& id : rep.identities) {
    if (id.status == "fail") ++failed;
    if (id.status == "indeterminate") ++indet;
  }
  std::fprintf(stderr, "%zu identities, %d failed, %d indeterminate\n",
               rep.identities.size(), failed, indet);
  return failed ? 1 : 0;
}

int cmd_emit(const std::string& kind, int n) {
  pqkt::Manifest m;
  m.model.kind = pqkt::model_kind_from_string(kind);
  m.model.n = n;
  if (m.model.kind == pqkt::ModelKind::Conformal)
    m.model.factor = pqkt::default_conformal_factor(4 * n);
  std::fputs(pqkt::emit_manifest(m).c_str(), stdout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification engine for paraquaternionic Kahler geometry with torsion"};
  app.require_subcommand(1);

  std::string manifest_path, out_path;
  std::vector<std::string> suites;
  int points = 25;
  std::uint64_t seed = 1;
  double tol_scale = 1.0;

  CLI::App* run = app.add_subcommand("run", "run identity suites on a manifest");
  run->add_option("manifest", manifest_path, "manifest JSON file")->required();
  run->add_option("--suite", suites, "suite to run (repeatable; default all)");
  CLI::Option* o_points = run->add_option("--points", points, "sample point count");
  CLI::Option* o_seed = run->add_option("--seed", seed, "sampling seed");
  CLI::Option* o_tol = run->add_option("--tol-scale", tol_scale, "tolerance multiplier");
  run->add_option("--out", out_path, "write report here instead of stdout");

  CLI::App* catalog = app.add_subcommand("catalog", "built-in test manifolds");
  catalog->require_subcommand(1);
  CLI::App* list = catalog->add_subcommand("list", "list model kinds");
  std::string kind;
  int n = 2;
  CLI::App* emit = catalog->add_subcommand("emit", "print a manifest for a model kind");
  emit->add_option("kind", kind, "flat | frame-deformed | diffeo-pushforward | conformal")
      ->required();
  emit->add_option("--n", n, "quaternionic dimension (chart dim = 4n)")
      ->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed())
      return cmd_run(manifest_path, suites, points, seed, tol_scale,
                     o_points->count() > 0, o_seed->count() > 0,
                     o_tol->count() > 0, out_path);
    if (list->parsed()) {
      std::puts("flat\nframe-deformed\ndiffeo-pushforward\nconformal");
      return 0;
    }
    if (emit->parsed()) return cmd_emit(kind, n);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
