// ncg - network creation game toolkit command-line interface
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ncg/cycle_lp.hpp"
#include "ncg/equilibrium.hpp"
#include "ncg/json_io.hpp"

#define NCG_VERSION "1.0.0"

namespace {

using ncg::Json;

// Every report starts with the tool version and the normalized flag set that
// determines its content. Flags that cannot change the bytes of the report
// (worker count, output path) are deliberately excluded.
Json report_header(const std::string& command, Json flags) {
  Json j;
  j["version"] = NCG_VERSION;
  j["command"] = command;
  j["flags"] = std::move(flags);
  return j;
}

void emit(const Json& j, const std::string& out_path) {
  std::string text = j.dump(2);
  text.push_back('\n');
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
  }
}

Json cost_json(const std::optional<ncg::Rational>& c) {
  if (!c) return "infinite";
  return ncg::rational_to_string(*c);
}

Json verdict_json(const ncg::Verdict& v) {
  Json j;
  j["stable"] = v.stable;
  j["label"] = v.label;
  if (v.witness) {
    Json w;
    w["players"] = v.witness->players;
    w["new_strategies"] = v.witness->new_strategies;
    w["delta"] = ncg::rational_to_string(v.witness->delta);
    j["witness"] = w;
  }
  return j;
}

Json check_json(const ncg::AuditCheck& c) {
  Json j;
  j["pass"] = c.pass;
  j["witness"] = c.witness;
  return j;
}

Json audit_json(const ncg::AuditReport& r) {
  Json j;
  j["coalition"] = r.coalition;
  j["radius"] = r.radius;
  j["components"] = Json::array();
  for (const auto& c : r.components) {
    Json cj;
    cj["vertices"] = c.vertices;
    cj["average_degree"] = ncg::rational_to_string(c.average_degree);
    if (c.comp_girth)
      cj["girth"] = *c.comp_girth;
    else
      cj["girth"] = nullptr;
    cj["edge_pair"] = check_json(c.edge_pair);
    cj["neighborhood_deg3"] = check_json(c.neighborhood_deg3);
    cj["avg_degree_lower"] = check_json(c.avg_degree_lower);
    cj["avg_degree_upper"] = check_json(c.avg_degree_upper);
    cj["girth_bound"] = check_json(c.girth_bound);
    j["components"].push_back(cj);
  }
  j["all_pass"] = r.all_pass;
  return j;
}

ncg::DeviationMode parse_mode(const std::string& s) {
  if (s == "exhaustive") return ncg::DeviationMode::exhaustive();
  if (s == "local") return ncg::DeviationMode::local();
  throw CLI::ValidationError("--deviations must be exhaustive or local");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"network creation game toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", NCG_VERSION);

  std::string file, alpha_str, deviations = "exhaustive", out_path;
  int coalitions = 0;
  bool coalition = false;
  int radius = -1;

  auto* cost = app.add_subcommand("cost", "player and social costs");
  cost->add_option("file", file, "graph JSON file")->required();
  cost->add_option("--alpha", alpha_str, "edge price (p/q or decimal)")->required();

  auto* verify = app.add_subcommand("verify", "equilibrium verification");
  verify->add_option("file", file)->required();
  verify->add_option("--alpha", alpha_str)->required();
  verify->add_option("--deviations", deviations, "exhaustive|local");
  verify->add_option("--coalitions", coalitions, "0 (Nash) or 2 (pairs)")
      ->check(CLI::IsMember({0, 2}));

  auto* aud = app.add_subcommand("audit", "structural lemma audit");
  aud->add_option("file", file)->required();
  aud->add_option("--alpha", alpha_str)->required();
  aud->add_flag("--coalition", coalition, "use the coalition neighborhood radius");
  aud->add_option("--radius", radius, "neighborhood radius parameter");

  int n = 0, max_rounds = 50;
  uint64_t seed = 0;
  std::string init = "random";
  auto* dyn = app.add_subcommand("dynamics", "best-response dynamics");
  dyn->add_option("--n", n)->required();
  dyn->add_option("--alpha", alpha_str)->required();
  dyn->add_option("--init", init, "star|path|cycle|random")
      ->check(CLI::IsMember({"star", "path", "cycle", "random"}));
  dyn->add_option("--seed", seed);
  dyn->add_option("--max-rounds", max_rounds);
  dyn->add_option("--deviations", deviations, "exhaustive|local");

  int c = 0, threads = 1;
  long random_extra = -1;
  std::string bound_mode = "full", solver = "exact";
  auto* bound = app.add_subcommand("bound", "per-girth LP alpha bound");
  bound->add_option("--girth", c)->required()->check(CLI::Range(3, 15));
  bound->add_option("--mode", bound_mode)->check(CLI::IsMember({"full", "sampled"}));
  bound->add_option("--random-extra", random_extra, "extra sampled vectors");
  bound->add_option("--seed", seed);
  bound->add_option("--solver", solver)->check(CLI::IsMember({"exact", "float"}));
  bound->add_option("--threads", threads)->check(CLI::Range(1, 64));
  bound->add_option("--out", out_path);

  int s = 1, k = 0, cap = 8;
  auto* fixture = app.add_subcommand("fixture", "emit built-in fixtures");
  auto* fig1 = fixture->add_subcommand("fig1", "non-tree equilibrium family");
  fig1->add_option("--s", s)->required()->check(CLI::PositiveNumber);
  fig1->add_option("--out", out_path);
  fixture->require_subcommand(1);

  auto* onecycle = app.add_subcommand("onecycle", "unicyclic feasibility check");
  onecycle->add_option("--k", k)->required();
  onecycle->add_option("--cap", cap);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cost) {
      ncg::OwnedGraph g = ncg::load_graph(file);
      ncg::GameConfig cfg{ncg::parse_rational(alpha_str), g.n};
      cfg.validate();
      Json j = report_header("cost", {{"file", file}, {"alpha", alpha_str}});
      j["players"] = Json::array();
      for (int i = 0; i < g.n; ++i)
        j["players"].push_back(cost_json(ncg::player_cost(g, i, cfg)));
      j["social_cost"] = cost_json(ncg::social_cost(g, cfg));
      emit(j, "");
    } else if (*verify) {
      ncg::OwnedGraph g = ncg::load_graph(file);
      ncg::GameConfig cfg{ncg::parse_rational(alpha_str), g.n};
      cfg.validate();
      ncg::DeviationMode mode = parse_mode(deviations);
      ncg::Verdict v = coalitions == 2 ? ncg::is_2coalition_stable(g, cfg, mode)
                                       : ncg::is_nash(g, cfg, mode);
      Json j = report_header("verify", {{"file", file},
                                        {"alpha", alpha_str},
                                        {"deviations", deviations},
                                        {"coalitions", coalitions}});
      j.update(verdict_json(v));
      emit(j, "");
    } else if (*aud) {
      ncg::OwnedGraph g = ncg::load_graph(file);
      ncg::GameConfig cfg{ncg::parse_rational(alpha_str), g.n};
      ncg::AuditReport r = ncg::audit(g, cfg, coalition, radius);
      Json j = report_header("audit", {{"file", file},
                                       {"alpha", alpha_str},
                                       {"coalition", coalition},
                                       {"radius", r.radius}});
      j.update(audit_json(r));
      emit(j, "");
    } else if (*dyn) {
      ncg::GameConfig cfg{ncg::parse_rational(alpha_str), n};
      cfg.validate();
      ncg::DynamicsInit di = init == "star"   ? ncg::DynamicsInit::Star
                             : init == "path" ? ncg::DynamicsInit::Path
                             : init == "cycle"
                                 ? ncg::DynamicsInit::Cycle
                                 : ncg::DynamicsInit::Random;
      ncg::DynamicsResult r =
          ncg::run_dynamics(cfg, di, seed, max_rounds, parse_mode(deviations));
      Json j = report_header("dynamics", {{"n", n},
                                          {"alpha", alpha_str},
                                          {"init", init},
                                          {"seed", seed},
                                          {"max-rounds", max_rounds},
                                          {"deviations", deviations}});
      j["converged"] = r.converged;
      j["rounds"] = r.rounds;
      j["graph"] = ncg::graph_to_json(r.graph);
      emit(j, "");
    } else if (*bound) {
      ncg::BoundOptions opt;
      opt.groups.mode = bound_mode == "full"
                            ? ncg::GroupEnumOptions::Mode::Full
                            : ncg::GroupEnumOptions::Mode::Sampled;
      opt.groups.seed = seed;
      opt.groups.extra_random = random_extra;
      if (const char* ceiling = std::getenv("NCG_VECTOR_CEILING"))
        opt.groups.ceiling = std::stol(ceiling);
      opt.solver = solver == "exact" ? ncg::SolveMode::Exact : ncg::SolveMode::Float;
      opt.threads = threads;
      ncg::BoundReport r = ncg::girth_bound(c, opt);
      Json flags = {{"girth", c}, {"mode", bound_mode}, {"solver", solver}};
      if (bound_mode == "sampled") {
        flags["seed"] = seed;
        flags["random-extra"] = random_extra;
      }
      Json j = report_header("bound", flags);
      j["girth"] = r.girth;
      j["mode"] = r.mode;
      j["classes"] = Json::array();
      for (const auto& cl : r.classes)
        j["classes"].push_back({{"orientation", cl.orientation},
                                {"alpha_max", ncg::rational_to_string(cl.alpha_max)},
                                {"unique_columns", cl.unique_columns},
                                {"constraints", cl.constraints}});
      j["alpha_max"] = ncg::rational_to_string(r.alpha_max);
      j["certified"] = r.certified;
      j["notes"] = r.notes;
      emit(j, out_path);
    } else if (*fixture) {
      auto [g, cfg] = ncg::fig1_fixture(s);
      Json j = ncg::graph_to_json(g);
      j["alpha"] = ncg::rational_to_string(cfg.alpha);
      emit(j, out_path);
    } else if (*onecycle) {
      ncg::OneCycleResult r = ncg::one_cycle_feasibility(k, cap);
      Json j = report_header("onecycle", {{"k", k}, {"cap", cap}});
      j["feasible"] = r.feasible;
      if (r.feasible) {
        j["witness_sizes"] = r.witness_sizes;
        j["witness_owners"] = r.witness_owners;
      } else {
        j["trace"] = r.trace;
      }
      emit(j, "");
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
