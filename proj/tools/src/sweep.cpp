#include "sweep.hpp"

#include "turanforge/generators.hpp"
#include "turanforge/oracle.hpp"
#include "turanforge/random.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

namespace turanforge::app {
namespace {

struct Instance {
  std::size_t index = 0;
  std::size_t n = 0;
  std::size_t s = 0;
  std::size_t replicate = 0;
  std::uint64_t seed = 0;
};

std::vector<Instance> instances_of(const SweepSpec& spec) {
  std::vector<Instance> out;
  for (std::size_t n = spec.n_min; n <= spec.n_max; ++n) {
    for (std::size_t s = spec.s_min; s <= spec.s_max; ++s) {
      for (std::size_t k = 0; k < spec.seeds; ++k) {
        const std::size_t i = out.size();
        out.push_back({i, n, s, k, mix_seed(spec.master_seed, i)});
      }
    }
  }
  return out;
}

Json run_instance(const SweepSpec& spec, const Instance& inst) {
  const auto start = std::chrono::steady_clock::now();
  Json input{{"generator", spec.family}, {"r", spec.r}, {"n", inst.n}};
  Graph g;
  ExtractParams params;
  params.r = spec.r;
  params.target_s = inst.s;
  ExtractRun run;
  try {
    if (spec.family == "random") {
      const std::uint64_t m = turan_edge_count(spec.r, inst.n) + spec.extra_edges;
      input["m"] = m;
      input["seed"] = inst.seed;
      g = random_graph_with_edges(inst.n, m, inst.seed);
    } else {
      g = turan_plus_edge(spec.r, inst.n);
    }
    run = run_extract(g, input, params);
  } catch (const std::exception& e) {
    return Json{{"instance", inst.index}, {"replicate", inst.replicate}, {"schema_version", kSchemaVersion},
                {"command", "extract"}, {"input", input}, {"outcome", "error"},
                {"error", {{"kind", "precondition"}, {"message", e.what()}}}};
  }
  Json rep;
  rep["instance"] = inst.index;
  rep["replicate"] = inst.replicate;
  rep.update(run.report);
  if (inst.n <= spec.oracle_cap && spec.r >= 2) {
    const std::size_t first = std::max<std::size_t>(inst.s, 2);
    const Frontier f = krplus_frontier(g, spec.r, first, inst.s);
    const std::size_t t_min = run.report.contains("parameters") ? run.report["parameters"]["t_min"].get<std::size_t>() : inst.s;
    const bool oracle_found = f.status == SearchStatus::kFound && f.t >= t_min;
    rep["oracle"] = Json{{"status", to_string(f.status)},
                         {"frontier_t", f.t},
                         {"found", oracle_found},
                         {"flagged", oracle_found && !run.witness}};
  }
  if (spec.timing) {
    rep["wall_time_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return rep;
}

std::string rate(std::size_t num, std::size_t den) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", den == 0 ? 0.0 : static_cast<double>(num) / den);
  return buf;
}

std::string lower_median(std::vector<std::size_t> v) {
  if (v.empty()) return "";
  std::sort(v.begin(), v.end());
  return std::to_string(v[(v.size() - 1) / 2]);
}

std::string summarize(const SweepSpec& spec, const std::vector<Json>& reports) {
  std::ostringstream csv;
  csv << "family,n,r,s_target,instances,successes,success_rate,min_t,median_t,"
         "oracle_checked,oracle_found,oracle_median_t,flagged,oracle_agreement\n";
  std::size_t i = 0;
  for (std::size_t n = spec.n_min; n <= spec.n_max; ++n) {
    for (std::size_t s = spec.s_min; s <= spec.s_max; ++s) {
      std::size_t successes = 0, checked = 0, found = 0, flagged = 0;
      std::vector<std::size_t> ts, oracle_ts;
      for (std::size_t k = 0; k < spec.seeds; ++k, ++i) {
        const Json& rep = reports[i];
        if (rep["outcome"] == "witness") {
          ++successes;
          ts.push_back(rep["achieved"]["t"].get<std::size_t>());
        }
        if (rep.contains("oracle")) {
          ++checked;
          oracle_ts.push_back(rep["oracle"]["frontier_t"].get<std::size_t>());
          if (rep["oracle"]["found"].get<bool>()) ++found;
          if (rep["oracle"]["flagged"].get<bool>()) ++flagged;
        }
      }
      csv << spec.family << ',' << n << ',' << spec.r << ',' << s << ',' << spec.seeds << ',' << successes << ','
          << rate(successes, spec.seeds) << ',' << (ts.empty() ? "" : std::to_string(*std::min_element(ts.begin(), ts.end())))
          << ',' << lower_median(ts) << ',' << checked << ',' << found << ',' << lower_median(oracle_ts) << ','
          << flagged << ',' << (found == 0 ? "" : rate(found - flagged, found)) << '\n';
    }
  }
  return csv.str();
}

}  // namespace

void validate(const SweepSpec& spec) {
  if (spec.family != "turan-plus-edge" && spec.family != "random") {
    throw PreconditionError("sweep: unknown family '" + spec.family + "'");
  }
  if (spec.r < 2) throw PreconditionError("sweep: r must be >= 2");
  if (spec.n_min > spec.n_max || spec.n_max == 0) throw PreconditionError("sweep: empty n-range");
  if (spec.s_min > spec.s_max || spec.s_min == 0) throw PreconditionError("sweep: empty s-range");
  if (spec.seeds == 0) throw PreconditionError("sweep: seeds must be >= 1");
  if (spec.n_min <= spec.r) throw PreconditionError("sweep: n must exceed r");
}

SweepOutput run_sweep(const SweepSpec& spec, std::size_t threads) {
  validate(spec);
  const std::vector<Instance> insts = instances_of(spec);
  SweepOutput out;
  out.reports.resize(insts.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < insts.size(); i = next++) out.reports[i] = run_instance(spec, insts[i]);
  };
  const std::size_t pool = std::clamp<std::size_t>(threads, 1, insts.size());
  std::vector<std::thread> workers;
  for (std::size_t k = 1; k < pool; ++k) workers.emplace_back(worker);
  worker();
  for (auto& t : workers) t.join();
  out.summary_csv = summarize(spec, out.reports);
  return out;
}

void write_sweep(const std::filesystem::path& dir, const SweepSpec& spec, const SweepOutput& out) {
  std::filesystem::create_directories(dir / "reports");
  std::ofstream(dir / "summary.csv", std::ios::binary) << out.summary_csv;
  const Json header{{"schema_version", kSchemaVersion},
                    {"command", "sweep"},
                    {"family", spec.family},
                    {"r", spec.r},
                    {"n_range", {spec.n_min, spec.n_max}},
                    {"s_range", {spec.s_min, spec.s_max}},
                    {"seeds", spec.seeds},
                    {"extra_edges", spec.extra_edges},
                    {"master_seed", spec.master_seed},
                    {"oracle_cap", spec.oracle_cap},
                    {"instances", out.reports.size()}};
  std::ofstream(dir / "sweep.json", std::ios::binary) << header.dump(2) << '\n';
  for (std::size_t i = 0; i < out.reports.size(); ++i) {
    char name[40];
    std::snprintf(name, sizeof name, "instance_%05zu.json", i);
    std::ofstream(dir / "reports" / name, std::ios::binary) << out.reports[i].dump(2) << '\n';
  }
}

}  // namespace turanforge::app
