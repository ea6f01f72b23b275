// Copyright 2026 The dsplab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dsplab/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dsplab/dsp_game.hpp"
#include "dsplab/error.hpp"
#include "dsplab/generators.hpp"
#include "dsplab/graph.hpp"
#include "dsplab/io.hpp"
#include "dsplab/mechanism.hpp"
#include "dsplab/report.hpp"
#include "dsplab/solvers.hpp"

namespace dsplab {
namespace {

using io::Json;

struct GlobalOptions {
  std::string format = "json";
  unsigned threads = 0;
  bool deterministic = true;
  std::uint64_t max_profiles = 0;
  std::size_t max_parts = 0;
};

Limits make_limits(const GlobalOptions& g) {
  Limits limits;
  if (const char* env = std::getenv("DSPLAB_MAX_PROFILES"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      limits.max_profiles = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      throw InvalidInput(std::string("DSPLAB_MAX_PROFILES is not a positive integer: ") + env);
    }
  }
  if (g.max_profiles != 0) limits.max_profiles = g.max_profiles;
  if (g.max_parts != 0) limits.max_parts = g.max_parts;
  limits.threads = g.threads;
  return limits;
}

Json tuple_json(const StrategyTuple& t) {
  Json arr = Json::array();
  for (auto x : t) arr.push_back(x);
  return arr;
}

Json reports_json(const StrategyProfile& p) { return io::to_json(p)["reports"]; }

std::vector<std::size_t> parse_index_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string field;
  while (std::getline(ss, field, ',')) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(field, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != field.size()) throw InvalidInput("bad index list: " + text);
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

Json instance_summary(const Instance& inst, const std::string& path) {
  Json j;
  j["written"] = path;
  j["items"] = inst.items();
  j["bidders"] = inst.bidders();
  j["mediators"] = inst.mediator_count();
  return j;
}

// Writes the instance to `path`, or prints it when no path is given.
Json emit_instance(const Instance& inst, const std::string& path) {
  if (path.empty()) return io::to_json(inst);
  io::save_instance(inst, path);
  return instance_summary(inst, path);
}

std::string trace_csv(const DynamicsTrace& trace) {
  std::string out = "step,player,from,to,potential_before,potential_after\n";
  for (std::size_t s = 0; s < trace.steps.size(); ++s) {
    const auto& st = trace.steps[s];
    out += std::to_string(s) + "," + std::to_string(st.player) + "," + std::to_string(st.from) +
           "," + std::to_string(st.to) + "," + st.potential_before.str() + "," +
           st.potential_after.str() + "\n";
  }
  return out;
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact experiments on mediated bundling auctions", "dsplab"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--format", g.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads (0 = machine parallelism)");
  app.add_flag("--deterministic,!--no-deterministic", g.deterministic,
               "Omit timings so identical runs print identical bytes (default on)");

  auto add_caps = [&](CLI::App* cmd) {
    cmd->add_option("--max-profiles", g.max_profiles, "Enumeration cap on strategy profiles");
    cmd->add_option("--max-parts", g.max_parts, "Largest base partition to enumerate");
  };

  // gen
  auto* gen = app.add_subcommand("gen", "Generate instances");
  gen->require_subcommand(1);
  std::string out_path;

  std::size_t id_size = 4;
  std::string id_value = "1";
  auto* gen_identity_cmd = gen->add_subcommand("identity", "Uniform prior, scaled identity valuations");
  gen_identity_cmd->add_option("--size", id_size)->capture_default_str();
  gen_identity_cmd->add_option("--value", id_value)->capture_default_str();
  gen_identity_cmd->add_option("-o,--output", out_path);

  std::size_t dspn_n = 1;
  std::string dspn_eps;
  auto* gen_dspn_cmd = gen->add_subcommand("dspn", "Two-expert family with large price of stability");
  gen_dspn_cmd->add_option("--n", dspn_n)->required();
  gen_dspn_cmd->add_option("--eps", dspn_eps, "Defaults to 1/n^2 (1/2 for n = 1)");
  gen_dspn_cmd->add_option("-o,--output", out_path);

  std::string graph_path;
  std::size_t ell = 0;
  auto* gen_mis_cmd = gen->add_subcommand("mis", "Independent-set reduction instance");
  gen_mis_cmd->add_option("--graph", graph_path)->required()->check(CLI::ExistingFile);
  gen_mis_cmd->add_option("--ell", ell, "Copies per node (default N + 1)");
  gen_mis_cmd->add_option("-o,--output", out_path);

  std::size_t rnd_n = 4, rnd_k = 3, rnd_m = 2;
  std::uint64_t rnd_seed = 0;
  RandomOptions rnd_opts;
  auto* gen_random_cmd = gen->add_subcommand("random", "Seeded random instance");
  gen_random_cmd->add_option("--n", rnd_n)->capture_default_str();
  gen_random_cmd->add_option("--k", rnd_k)->capture_default_str();
  gen_random_cmd->add_option("--m", rnd_m)->capture_default_str();
  gen_random_cmd->add_option("--seed", rnd_seed)->capture_default_str();
  gen_random_cmd->add_flag("--local-experts", rnd_opts.local_experts);
  gen_random_cmd->add_option("--value-max", rnd_opts.value_max)->capture_default_str();
  gen_random_cmd->add_option("--weight-max", rnd_opts.weight_max)->capture_default_str();
  gen_random_cmd->add_option("-o,--output", out_path);

  std::string inst_path, profile_path;

  auto* revenue_cmd = app.add_subcommand("revenue", "Revenue of a strategy profile");
  revenue_cmd->add_option("-i,--instance", inst_path)->required();
  revenue_cmd->add_option("-p,--profile", profile_path)->required();

  std::string method = "exact";
  auto* solve_cmd = app.add_subcommand("solve", "Find a high-revenue joint signal");
  solve_cmd->add_option("--method", method)
      ->check(CLI::IsMember({"exact", "silent", "all-report", "local-experts"}))
      ->capture_default_str();
  solve_cmd->add_option("-i,--instance", inst_path)->required();
  add_caps(solve_cmd);

  std::string rule = "subset";
  auto* shapley_cmd = app.add_subcommand("shapley", "Shapley payments of a strategy profile");
  shapley_cmd->add_option("-i,--instance", inst_path)->required();
  shapley_cmd->add_option("-p,--profile", profile_path)->required();
  shapley_cmd->add_option("--method", rule)
      ->check(CLI::IsMember({"perm", "subset"}))
      ->capture_default_str();

  std::string start = "silent", order_text, trace_path;
  auto* brd_cmd = app.add_subcommand("brd", "Best-response dynamics");
  brd_cmd->add_option("-i,--instance", inst_path)->required();
  brd_cmd->add_option("--start", start, "silent, all-report or a profile file")
      ->capture_default_str();
  brd_cmd->add_option("--order", order_text, "Comma-separated player order");
  brd_cmd->add_option("--trace", trace_path, "Write the step trace as CSV");
  add_caps(brd_cmd);

  bool want_poa = false, want_pos = false;
  auto* eq_cmd = app.add_subcommand("equilibria", "Enumerate pure Nash equilibria");
  eq_cmd->add_option("-i,--instance", inst_path)->required();
  eq_cmd->add_flag("--poa", want_poa, "Report the price of anarchy");
  eq_cmd->add_flag("--pos", want_pos, "Report the price of stability");
  add_caps(eq_cmd);

  std::string solver = "exact";
  auto* mis_cmd = app.add_subcommand("mis-pipeline", "Independent set through the reduction");
  mis_cmd->add_option("--graph", graph_path)->required()->check(CLI::ExistingFile);
  mis_cmd->add_option("--ell", ell, "Copies per node (default N + 1)");
  mis_cmd->add_option("--solver", solver)
      ->check(CLI::IsMember({"exact", "silent", "all-report", "local-experts"}))
      ->capture_default_str();
  add_caps(mis_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    err << app.help();
    return 2;
  }

  try {
    const Limits limits = make_limits(g);
    std::optional<std::size_t> ell_opt;
    if (ell != 0) ell_opt = ell;
    Json report;

    if (gen_identity_cmd->parsed()) {
      report = emit_instance(gen_identity(id_size, Rational::parse(id_value)), out_path);
    } else if (gen_dspn_cmd->parsed()) {
      const Instance inst = dspn_eps.empty() ? gen_dspn(dspn_n)
                                             : gen_dspn(dspn_n, Rational::parse(dspn_eps));
      report = emit_instance(inst, out_path);
    } else if (gen_mis_cmd->parsed()) {
      report = emit_instance(gen_mis_reduction(read_edge_list(graph_path), ell_opt).instance,
                             out_path);
    } else if (gen_random_cmd->parsed()) {
      report = emit_instance(gen_random(rnd_n, rnd_k, rnd_m, rnd_seed, rnd_opts), out_path);
    } else if (revenue_cmd->parsed()) {
      const Instance inst = io::load_instance(inst_path);
      const StrategyProfile profile = io::load_profile(profile_path, inst);
      const Partition joint = joint_partition(inst, profile);
      report["profile"] = reports_json(profile);
      report["joint"] = io::to_json(joint);
      report["revenue"] = report::number(revenue(inst, joint));
    } else if (solve_cmd->parsed()) {
      const Instance inst = io::load_instance(inst_path);
      SolveResult result;
      switch (*parse_method(method)) {
        case Method::kExact: result = solve_exact(inst, limits); break;
        case Method::kSilent: result = baseline_silent(inst); break;
        case Method::kAllReport: result = all_report(inst); break;
        default: result = local_expert_solve(inst); break;
      }
      report = report::solve_result(result, !g.deterministic);
      report["baseline_silent"] = report::number(baseline_silent(inst).revenue);
    } else if (shapley_cmd->parsed()) {
      const Instance inst = io::load_instance(inst_path);
      const StrategyProfile profile = io::load_profile(profile_path, inst);
      const DspGame dsp = make_dsp_game(inst, limits);
      const StrategyTuple a = dsp.tuple_of(profile);
      const PaymentRule r = rule == "perm" ? PaymentRule::kPermutation : PaymentRule::kSubsets;
      const PaymentVector pay = shapley(dsp.game, a, r, limits);
      report["method"] = rule;
      report["profile"] = reports_json(profile);
      report["revenue"] = report::number(dsp.game.value(a));
      report["silent_revenue"] = report::number(dsp.game.value(dsp.silent()));
      report["payments"] = report::payments(pay);
      report["payment_total"] = report::number(pay.total());
      report["potential"] = report::number(potential(dsp.game, a, limits));
    } else if (brd_cmd->parsed()) {
      const Instance inst = io::load_instance(inst_path);
      const DspGame dsp = make_dsp_game(inst, limits);
      StrategyTuple a;
      if (start == "silent") {
        a = dsp.silent();
      } else if (start == "all-report") {
        a = dsp.all_report();
      } else {
        a = dsp.tuple_of(io::load_profile(start, inst));
      }
      std::vector<std::size_t> order;
      if (!order_text.empty()) order = parse_index_list(order_text);
      const DynamicsTrace trace = run_brd(dsp.game, a, order, limits);
      if (!trace_path.empty()) io::write_text_file(trace_path, trace_csv(trace));
      report["start"] = tuple_json(trace.start);
      report["final"] = tuple_json(trace.final);
      report["profile"] = reports_json(dsp.profile(trace.final));
      report["converged"] = trace.converged;
      report["steps"] = trace.steps.size();
      report["revenue"] = report::number(dsp.game.value(trace.final));
      report["silent_revenue"] = report::number(dsp.game.value(dsp.silent()));
      report["potential"] = report::number(potential(dsp.game, trace.final, limits));
      report["payments"] = report::payments(shapley(dsp.game, trace.final, PaymentRule::kSubsets, limits));
      report["is_nash"] = is_nash(dsp.game, trace.final, PaymentRule::kSubsets, limits);
    } else if (eq_cmd->parsed()) {
      const Instance inst = io::load_instance(inst_path);
      const DspGame dsp = make_dsp_game(inst, limits);
      const Game table = tabulate(dsp.game, limits);
      const auto eqs = enumerate_equilibria(table, limits);
      Json list = Json::array();
      for (const auto& e : eqs) {
        Json item;
        item["tuple"] = tuple_json(e.profile);
        item["profile"] = reports_json(dsp.profile(e.profile));
        item["value"] = report::number(e.value);
        item["payments"] = report::payments(e.payments);
        list.push_back(std::move(item));
      }
      report["profiles"] = table.space().size();
      report["equilibrium_count"] = eqs.size();
      report["equilibria"] = std::move(list);
      if (want_poa || want_pos) {
        const PriceReport pr = poa_pos(table, limits);
        report["opt"] = report::number(pr.opt);
        if (want_poa) {
          report["worst_equilibrium"] = report::number(pr.worst_equilibrium);
          report["poa"] = report::ratio(pr.anarchy);
        }
        if (want_pos) {
          report["best_equilibrium"] = report::number(pr.best_equilibrium);
          report["pos"] = report::ratio(pr.stability);
        }
      }
    } else if (mis_cmd->parsed()) {
      const Graph graph = read_edge_list(graph_path);
      const Method m = *parse_method(solver);
      DspSolver fn = [&](const Instance& inst) {
        switch (m) {
          case Method::kExact: return solve_exact(inst, limits);
          case Method::kSilent: return baseline_silent(inst);
          case Method::kAllReport: return all_report(inst);
          default: return local_expert_solve(inst);
        }
      };
      const MisPipelineResult res = run_mis_pipeline(graph, ell_opt, fn);
      report["nodes"] = graph.node_count();
      report["edges"] = graph.edges().size();
      report["ell"] = ell_opt.value_or(graph.node_count() + 1);
      report["independent_set"] = res.independent_set;
      report["size"] = res.independent_set.size();
      report["is_independent"] = graph.is_independent(res.independent_set);
      report["speaking"] = res.speaking;
      report["solve"] = report::solve_result(res.solve, !g.deterministic);
      if (graph.node_count() <= 20) {
        const MisResult best = brute_force_mis(graph);
        report["mis_size"] = best.size;
        report["mis_witness"] = best.witness;
      }
    }

    out << (g.format == "csv" ? report::render_csv(report) : report::render_json(report));
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace dsplab
