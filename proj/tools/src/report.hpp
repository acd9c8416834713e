#pragma once

#include "turanforge/serialize.hpp"

#include <optional>
#include <string>

namespace turanforge::app {

inline constexpr int kSchemaVersion = 1;

/// Outcome classes, mirrored by the process exit code.
enum ExitCode : int { kOk = 0, kError = 1, kNotFound = 2, kInvalidCertificate = 3 };

struct ExtractParams {
  std::size_t r = 2;
  std::optional<double> c;
  std::optional<std::size_t> target_s;
  std::optional<std::size_t> target_t;
  std::optional<Rational> alpha;  // switches to stability mode
  std::optional<Rational> theta;
  bool full_trace = false;
};

struct ExtractRun {
  Json report;
  int exit_code = kError;
  std::optional<KrPlusWitness> witness;
};

/// Runs turan_inverted (or stability_decompose when alpha is set) and builds
/// the RunReport. Never throws for library errors; they become "error".
ExtractRun run_extract(const Graph& g, const Json& input, const ExtractParams& params);

/// Checks a certificate (a RunReport or a bare witness object) against g.
/// Returns kOk, kInvalidCertificate with the failed clause, or kError when
/// the certificate does not match the schema.
int verify_certificate(const Graph& g, const Json& certificate, std::string& diagnostic);

/// Graphviz source; witness parts become colored clusters.
std::string to_dot(const Graph& g, const std::optional<KrPlusWitness>& witness);

}  // namespace turanforge::app
