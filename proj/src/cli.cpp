#include "treeplace/cli.hpp"

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "treeplace/documents.hpp"
#include "treeplace/generator.hpp"
#include "treeplace/oracle.hpp"
#include "treeplace/solver.hpp"
#include "treeplace/verifier.hpp"

namespace treeplace {

namespace {

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::string read_source(const std::string& path, Streams& io) {
  if (path == "-") {
    std::ostringstream buf;
    buf << io.in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

void write_sink(const std::string& path, const std::string& text, Streams& io) {
  if (path == "-") {
    io.out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot write '" + path + "'");
  file << text;
}

IntRange parse_range(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      const std::int64_t v = std::stoll(text);
      return {v, v};
    }
    return {std::stoll(text.substr(0, colon)), std::stoll(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw ConfigError("bad range '" + text + "', expected lo:hi");
  }
}

struct GenOptions {
  std::uint64_t seed = 1;
  std::size_t internal = 5;
  std::size_t clients = 6;
  std::string shape = "random";
  std::int64_t capacity = 15;
  std::string branching = "1:3";
  std::string bandwidth = "1:20";
  std::string requests = "0:8";
  std::string qos = "1:4";

  GenConfig config() const {
    GenConfig c;
    c.seed = seed;
    c.internal_count = internal;
    c.client_count = clients;
    c.shape = parse_shape(shape);
    c.capacity = capacity;
    c.branching = parse_range(branching);
    c.bandwidth = parse_range(bandwidth);
    c.requests = parse_range(requests);
    c.qos = parse_range(qos);
    return c;
  }
};

void add_gen_options(CLI::App* cmd, GenOptions& g) {
  cmd->add_option("--seed", g.seed, "random seed");
  cmd->add_option("--internal", g.internal, "internal node count");
  cmd->add_option("--clients", g.clients, "client count");
  cmd->add_option("--shape", g.shape, "balanced | path | random");
  cmd->add_option("--W", g.capacity, "server capacity");
  cmd->add_option("--branching", g.branching, "children per internal node, lo:hi");
  cmd->add_option("--bw", g.bandwidth, "link bandwidth range lo:hi");
  cmd->add_option("--w", g.requests, "client request range lo:hi");
  cmd->add_option("--q", g.qos, "client qos range lo:hi");
}

std::vector<std::int64_t> parse_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw ConfigError("bad list entry '" + item + "'");
    }
  }
  return out;
}

std::string compare_line(const std::string& label, const NetworkInstance& inst, BandwidthMode mode,
                         std::size_t max_n, bool& agree) {
  const SolveOutcome solved = solve(inst, mode);
  const OracleResult oracle = brute_force_min(inst, mode, max_n);
  const std::string s = solved.feasible() ? std::to_string(solved.placement->cardinality) : "infeasible";
  const std::string o = oracle.optimum ? std::to_string(oracle.optimum->cardinality) : "infeasible";
  agree = s == o;
  return label + ": " + (agree ? "agree" : "disagree") + " solver=" + s + " oracle=" + o + "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Streams io{in, out, err};
  CLI::App app{"Minimum replica placement on tree networks (Closest policy, QoS and bandwidth limits)", "treeplace"};
  app.require_subcommand(1);

  std::string mode_text = "paper-literal";
  std::string out_path = "-";
  std::string instance_path, solution_path;
  bool with_trace = false;
  std::size_t max_n = kDefaultOracleGuard;

  auto* solve_cmd = app.add_subcommand("solve", "compute a minimum replica set");
  solve_cmd->add_option("instance", instance_path, "instance document")->required();
  solve_cmd->add_option("--mode", mode_text, "paper-literal | aggregate");
  solve_cmd->add_flag("--trace", with_trace, "include the placement trace");
  solve_cmd->add_option("--out", out_path, "output path");

  auto* verify_cmd = app.add_subcommand("verify", "check a replica set against an instance");
  verify_cmd->add_option("instance", instance_path, "instance document")->required();
  verify_cmd->add_option("solution", solution_path, "solution document")->required();
  verify_cmd->add_option("--mode", mode_text, "paper-literal | aggregate");
  verify_cmd->add_option("--out", out_path, "output path");

  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive minimum for small instances");
  oracle_cmd->add_option("instance", instance_path, "instance document")->required();
  oracle_cmd->add_option("--mode", mode_text, "paper-literal | aggregate");
  oracle_cmd->add_option("--max-n", max_n, "largest internal node count to enumerate");
  oracle_cmd->add_option("--out", out_path, "output path");

  std::vector<std::string> compare_paths;
  std::string seed_span;
  auto* compare_cmd = app.add_subcommand("compare", "solver against oracle, one line per instance");
  compare_cmd->add_option("instances", compare_paths, "instance documents");
  compare_cmd->add_option("--seeds", seed_span, "seed range lo:hi of generated small instances");
  compare_cmd->add_option("--mode", mode_text, "paper-literal | aggregate");
  compare_cmd->add_option("--max-n", max_n, "oracle guard");

  GenOptions gen;
  std::string fictivize_path;
  bool dual_role = false;
  auto* gen_cmd = app.add_subcommand("gen", "generate an instance document");
  add_gen_options(gen_cmd, gen);
  gen_cmd->add_flag("--dual-role", dual_role, "emit a dual-role document instead");
  gen_cmd->add_option("--fictivize", fictivize_path, "convert a dual-role document to an instance");
  gen_cmd->add_option("--out", out_path, "output path");

  auto* transform_cmd = app.add_subcommand("transform", "dump the computation tree");
  transform_cmd->add_option("instance", instance_path, "instance document")->required();
  transform_cmd->add_option("--out", out_path, "output path");

  auto* inspect_cmd = app.add_subcommand("inspect", "render the contribution tables");
  inspect_cmd->add_option("instance", instance_path, "instance document")->required();
  inspect_cmd->add_option("--mode", mode_text, "paper-literal | aggregate");
  inspect_cmd->add_option("--out", out_path, "output path");

  std::string sizes_text, levels_text;
  std::uint64_t bench_seed = 1;
  int repeats = 3;
  auto* bench_cmd = app.add_subcommand("bench", "time the solver over a size sweep");
  bench_cmd->add_option("--sizes", sizes_text, "comma-separated node counts");
  bench_cmd->add_option("--L", levels_text, "comma-separated maximum qos values");
  bench_cmd->add_option("--seed", bench_seed, "generator seed");
  bench_cmd->add_option("--repeats", repeats, "runs per row (fastest is reported)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }

  try {
    const BandwidthMode mode = parse_mode(mode_text);

    if (solve_cmd->parsed()) {
      const auto inst = parse_instance(read_source(instance_path, io));
      if (mode == BandwidthMode::Aggregate) {
        err << "note: aggregate bandwidth mode is an experimental extension; its optimality is not established\n";
      }
      const SolveOutcome outcome = solve(inst, mode);
      write_sink(out_path, solution_document(outcome, with_trace), io);
      if (!outcome.feasible()) err << "infeasible: " << outcome.detail << "\n";
      return outcome.feasible() ? kExitOk : kExitInfeasible;
    }
    if (verify_cmd->parsed()) {
      const auto inst = parse_instance(read_source(instance_path, io));
      const auto replicas = parse_solution_replicas(read_source(solution_path, io));
      const auto report = verify_placement(inst, {replicas.begin(), replicas.end()}, mode);
      write_sink(out_path, report_document(report), io);
      return report.feasible() ? kExitOk : kExitInfeasible;
    }
    if (oracle_cmd->parsed()) {
      const auto inst = parse_instance(read_source(instance_path, io));
      const auto result = brute_force_min(inst, mode, max_n);
      write_sink(out_path, oracle_document(result), io);
      return result.optimum ? kExitOk : kExitInfeasible;
    }
    if (compare_cmd->parsed()) {
      if (compare_paths.empty() && seed_span.empty()) {
        err << "error: compare needs instance paths or --seeds\n";
        return kExitError;
      }
      std::size_t total = 0, agreed = 0;
      for (const auto& path : compare_paths) {
        bool agree = false;
        out << compare_line(path, parse_instance(read_source(path, io)), mode, max_n, agree);
        ++total;
        agreed += agree;
      }
      if (!seed_span.empty()) {
        const IntRange seeds = parse_range(seed_span);
        for (std::int64_t s = seeds.lo; s <= seeds.hi; ++s) {
          bool agree = false;
          const auto inst = generate(small_instance_config(static_cast<std::uint64_t>(s)));
          out << compare_line("seed " + std::to_string(s), inst, mode, max_n, agree);
          ++total;
          agreed += agree;
        }
      }
      out << "summary: " << total << " instances, " << agreed << " agree, " << (total - agreed) << " disagree\n";
      return agreed == total ? kExitOk : kExitInfeasible;
    }
    if (gen_cmd->parsed()) {
      if (!fictivize_path.empty()) {
        write_sink(out_path, serialize_instance(fictivize(parse_dual_role(read_source(fictivize_path, io)))), io);
      } else if (dual_role) {
        write_sink(out_path, serialize_dual_role(generate_dual_role(gen.config())), io);
      } else {
        write_sink(out_path, serialize_instance(generate(gen.config())), io);
      }
      return kExitOk;
    }
    if (transform_cmd->parsed()) {
      const auto inst = parse_instance(read_source(instance_path, io));
      write_sink(out_path, star_tree_document(transform_to_star(inst)), io);
      return kExitOk;
    }
    if (inspect_cmd->parsed()) {
      const auto inst = parse_instance(read_source(instance_path, io));
      const StarTree tree = transform_to_star(inst);
      const ContributionTable table = run_phase1(tree, mode);
      write_sink(out_path, render_tables(tree, table), io);
      return kExitOk;
    }
    if (bench_cmd->parsed()) {
      const auto sizes = parse_list(sizes_text);
      const auto levels = parse_list(levels_text);
      if (sizes.empty() || levels.empty()) {
        err << "error: bench needs a non-empty --sizes and --L sweep\n";
        return kExitError;
      }
      out << "nodes\tL\tseconds\treplicas\n";
      for (std::int64_t n : sizes) {
        for (std::int64_t l : levels) {
          const BenchRow row = bench_solve(static_cast<std::size_t>(n), l, bench_seed, repeats);
          out << row.nodes << "\t" << row.max_qos << "\t" << row.seconds << "\t" << row.replicas << "\n";
        }
      }
      return kExitOk;
    }
  } catch (const Infeasible& e) {
    err << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const SolverDefect& e) {
    err << "DEFECT: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace treeplace
