#pragma once

#include "report.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace turanforge::app {

struct SweepSpec {
  std::string family = "turan-plus-edge";  // or "random"
  std::size_t r = 2;
  std::size_t n_min = 0, n_max = 0;
  std::size_t s_min = 1, s_max = 1;
  std::size_t seeds = 1;            // instances per (n, s)
  std::uint64_t extra_edges = 1;    // random family: e = t_r(n) + extra_edges
  std::uint64_t master_seed = 0;
  std::size_t oracle_cap = 14;      // oracle frontier only when n <= cap
  bool timing = false;              // adds wall_time_ms; breaks byte identity
};

struct SweepOutput {
  std::vector<Json> reports;  // in instance order
  std::string summary_csv;
};

/// Throws PreconditionError on empty ranges or an unknown family.
void validate(const SweepSpec& spec);

/// Runs every instance on a pool of `threads` workers. Content depends only
/// on the spec, never on the thread count.
SweepOutput run_sweep(const SweepSpec& spec, std::size_t threads);

/// summary.csv, sweep.json and reports/instance_NNNNN.json under dir.
void write_sweep(const std::filesystem::path& dir, const SweepSpec& spec, const SweepOutput& out);

}  // namespace turanforge::app
