#pragma once

#include <string>

#include "pqkt/catalog.hpp"
#include "pqkt/suites.hpp"

namespace pqkt {

/// Declarative run description: which model to build and how to sample it.
///
/// JSON schema (all keys except model.kind and model.n optional):
///   {
///     "model": {
///       "kind": "flat" | "frame-deformed" | "diffeo-pushforward" | "conformal",
///       "n": 2,
///       "seed": 1,
///       "magnitude": 0.08,
///       "factor": [{"exponents": [1,0,0,0,0,0,0,0], "coeff": 0.1}, ...]
///     },
///     "points": 25,
///     "seed": 1,
///     "tol_scale": 1.0,
///     "suites": ["algebra", "curvature"]
///   }
/// Polynomials are term lists; "exponents" has one entry per chart coordinate.
struct Manifest {
  ModelSpec model;
  SuiteOptions options;
};

/// Parse errors carry the byte offset (and JSON path for semantic errors).
Manifest parse_manifest(const std::string& text);
Manifest load_manifest(const std::string& path);

/// Canonical serialization: sorted keys, 17-significant-digit floats.
std::string emit_manifest(const Manifest& m);

}  // namespace pqkt
