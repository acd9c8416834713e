#include "report.hpp"
#include "sweep.hpp"

#include "turanforge/generators.hpp"
#include "turanforge/graph_io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace turanforge;
using namespace turanforge::app;

namespace {

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw PreconditionError("bad part size list '" + text + "'");
    }
    out.push_back(std::stoul(item));
  }
  if (out.empty()) throw PreconditionError("empty part size list");
  return out;
}

// "a..b" or "a".
std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  auto number = [&](const std::string& s) -> std::size_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw PreconditionError("bad range '" + text + "'");
    }
    return std::stoul(s);
  };
  if (dots == std::string::npos) {
    const std::size_t v = number(text);
    return {v, v};
  }
  return {number(text.substr(0, dots)), number(text.substr(dots + 2))};
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << text;
}

struct GenArgs {
  std::size_t r = 2, n = 0;
  std::uint64_t m = 0, seed = 0;
  std::string sizes;
  bool plus_edge = false;
  std::string out;
  bool graph6 = false;
};

int emit_graph(const Graph& g, const GenArgs& a, const std::string& echo) {
  std::ostringstream line;
  line << "n=" << g.order() << " m=" << g.edge_count() << " generator=" << echo << '\n';
  const std::string body = a.graph6 ? to_graph6(g) + "\n" : to_edge_list(g);
  if (a.out.empty()) {
    std::cout << body;
    std::cerr << line.str();
  } else {
    write_text(a.out, body);
    std::cout << line.str();
  }
  return kOk;
}

struct ExtractArgs {
  std::string input;
  std::size_t r = 2;
  std::optional<double> c;
  std::optional<std::size_t> target_s, target_t;
  std::string alpha, theta, json, dot;
  bool full_trace = false, timing = false;
};

int cmd_extract(const ExtractArgs& a) {
  if (!a.c && !a.target_s) throw PreconditionError("extract: give --c or --target-s");
  const Graph g = read_graph_file(a.input);
  ExtractParams p;
  p.r = a.r;
  p.c = a.c;
  p.target_s = a.target_s;
  p.target_t = a.target_t;
  if (!a.alpha.empty()) p.alpha = parse_rational(a.alpha);
  if (!a.theta.empty()) p.theta = parse_rational(a.theta);
  p.full_trace = a.full_trace;
  const auto start = std::chrono::steady_clock::now();
  ExtractRun run = run_extract(g, Json{{"file", a.input}}, p);
  if (a.timing) {
    run.report["wall_time_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  if (a.json.empty()) {
    std::cout << run.report.dump(2) << '\n';
  } else {
    write_text(a.json, run.report.dump(2) + "\n");
    std::cout << "outcome=" << run.report["outcome"].get<std::string>();
    if (run.witness) {
      std::cout << " parts=";
      const auto sizes = run.witness->part_sizes();
      for (std::size_t i = 0; i < sizes.size(); ++i) std::cout << (i ? "," : "") << sizes[i];
    }
    std::cout << '\n';
  }
  if (!a.dot.empty()) write_text(a.dot, to_dot(g, run.witness));
  if (run.exit_code != kOk) std::cerr << "extract: " << run.report["error"]["message"].get<std::string>() << '\n';
  return run.exit_code;
}

int cmd_verify(const std::string& graph_path, const std::string& cert_path) {
  const Graph g = read_graph_file(graph_path);
  Json cert;
  try {
    cert = Json::parse(read_text(cert_path));
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("certificate: ") + e.what());
  }
  std::string diagnostic;
  const int code = verify_certificate(g, cert, diagnostic);
  if (code == kOk) {
    std::cout << "valid\n";
  } else {
    std::cerr << (code == kInvalidCertificate ? "invalid: " : "error: ") << diagnostic << '\n';
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extract K_r^+ witnesses and stability decompositions from dense graphs"};
  app.require_subcommand(1);
  int code = kOk;

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance file");
  gen_cmd->require_subcommand(1);
  gen_cmd->add_option("-o,--out", gen.out, "Output file (stdout when omitted)");
  gen_cmd->add_flag("--graph6", gen.graph6, "Write graph6 instead of an edge list");
  auto* gen_turan = gen_cmd->add_subcommand("turan", "Turan graph T_r(n)")->fallthrough();
  gen_turan->add_option("-r", gen.r)->required();
  gen_turan->add_option("-n", gen.n)->required();
  gen_turan->add_flag("--plus-edge", gen.plus_edge);
  auto* gen_multi = gen_cmd->add_subcommand("multipartite", "Complete multipartite graph")->fallthrough();
  gen_multi->add_option("--sizes", gen.sizes, "Comma-separated part sizes")->required();
  gen_multi->add_flag("--plus-edge", gen.plus_edge);
  auto* gen_random = gen_cmd->add_subcommand("random", "Uniform graph with exactly m edges")->fallthrough();
  gen_random->add_option("-n", gen.n)->required();
  gen_random->add_option("-m", gen.m)->required();
  gen_random->add_option("--seed", gen.seed);
  auto* gen_krplus = gen_cmd->add_subcommand("krplus", "K_r^+(s_1, ..., s_r)")->fallthrough();
  gen_krplus->add_option("--sizes", gen.sizes)->required();

  ExtractArgs ex;
  auto* ex_cmd = app.add_subcommand("extract", "Run the extraction pipeline on a graph file");
  ex_cmd->add_option("input", ex.input, "Graph file (edge list or .g6)")->required();
  ex_cmd->add_option("-r", ex.r)->required();
  ex_cmd->add_option("--c", ex.c, "Constant c; s = floor(c ln n)");
  ex_cmd->add_option("--target-s", ex.target_s);
  ex_cmd->add_option("--target-t", ex.target_t, "Minimum last part size (default s)");
  ex_cmd->add_option("--alpha", ex.alpha, "Stability mode with this alpha, e.g. 1/4096");
  ex_cmd->add_option("--theta", ex.theta, "Pruning threshold override");
  ex_cmd->add_option("--json", ex.json, "Write the RunReport here");
  ex_cmd->add_option("--dot", ex.dot, "Write a Graphviz rendering of the witness");
  ex_cmd->add_flag("--full-trace", ex.full_trace, "Do not truncate trace sets");
  ex_cmd->add_flag("--timing", ex.timing, "Record wall time");

  std::string graph_path, cert_path;
  auto* ver_cmd = app.add_subcommand("verify", "Check a certificate against a graph");
  ver_cmd->add_option("graph", graph_path)->required();
  ver_cmd->add_option("certificate", cert_path)->required();

  SweepSpec sweep;
  std::string n_range, s_range = "1", out_dir;
  std::size_t threads = 1;
  auto* sw_cmd = app.add_subcommand("sweep", "Run a parameter sweep");
  sw_cmd->add_option("--family", sweep.family, "turan-plus-edge or random");
  sw_cmd->add_option("-r", sweep.r)->required();
  sw_cmd->add_option("--n", n_range, "Range a..b")->required();
  sw_cmd->add_option("--s", s_range, "Range a..b");
  sw_cmd->add_option("--seeds", sweep.seeds, "Instances per (n, s)");
  sw_cmd->add_option("--seed", sweep.master_seed, "Master seed");
  sw_cmd->add_option("--extra-edges", sweep.extra_edges, "Random family: edges above t_r(n)");
  sw_cmd->add_option("--oracle-cap", sweep.oracle_cap, "Largest n checked by the exact oracle");
  sw_cmd->add_option("--threads", threads);
  sw_cmd->add_option("--out", out_dir)->required();
  sw_cmd->add_flag("--timing", sweep.timing, "Record wall time per instance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kError;
  }

  try {
    if (gen_turan->parsed()) {
      const Graph g = gen.plus_edge ? turan_plus_edge(gen.r, gen.n) : turan_graph(gen.r, gen.n);
      code = emit_graph(g, gen, "turan r=" + std::to_string(gen.r) + " n=" + std::to_string(gen.n) +
                                    (gen.plus_edge ? " plus_edge" : ""));
    } else if (gen_multi->parsed() || gen_krplus->parsed()) {
      const PartSpec spec{parse_sizes(gen.sizes), gen_krplus->parsed() || gen.plus_edge};
      code = emit_graph(complete_multipartite(spec), gen,
                        std::string(gen_krplus->parsed() ? "krplus" : "multipartite") + " sizes=" + gen.sizes +
                            (spec.plus_edge && !gen_krplus->parsed() ? " plus_edge" : ""));
    } else if (gen_random->parsed()) {
      code = emit_graph(random_graph_with_edges(gen.n, gen.m, gen.seed), gen,
                        "random n=" + std::to_string(gen.n) + " m=" + std::to_string(gen.m) +
                            " seed=" + std::to_string(gen.seed));
    } else if (ex_cmd->parsed()) {
      code = cmd_extract(ex);
    } else if (ver_cmd->parsed()) {
      code = cmd_verify(graph_path, cert_path);
    } else if (sw_cmd->parsed()) {
      std::tie(sweep.n_min, sweep.n_max) = parse_range(n_range);
      std::tie(sweep.s_min, sweep.s_max) = parse_range(s_range);
      const SweepOutput out = run_sweep(sweep, threads);
      write_sweep(out_dir, sweep, out);
      std::cout << out.summary_csv;
      std::cerr << "wrote " << out.reports.size() << " reports to " << out_dir << '\n';
    }
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    code = kError;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    code = kError;
  } catch (const InternalFault& e) {
    std::cerr << "internal fault: " << e.what() << '\n';
    code = kError;
  }
  return code;
}
