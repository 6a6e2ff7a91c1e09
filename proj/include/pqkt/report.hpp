#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pqkt/manifest.hpp"
#include "pqkt/suites.hpp"

namespace pqkt {

constexpr const char* kEngineVersion = "1.0.0";

struct Report {
  std::string model_hash;  // hash of the canonical manifest serialization
  std::uint64_t seed = 0;
  std::string engine_version = kEngineVersion;
  std::vector<IdentityResult> identities;

  bool any_failed() const;
};

/// Build a structure from the manifest, run the selected suites, and
/// assemble the report. Deterministic for a fixed manifest.
Report run_report(const Manifest& m);

/// Canonical JSON: keys sorted, floats with 17 significant digits, no
/// timestamp, trailing newline. Byte-identical across runs.
std::string render_report(const Report& r);

std::uint64_t fnv1a64(const std::string& s);

}  // namespace pqkt
