#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pinosp/expr.hpp"

using namespace pinosp;
using json = nlohmann::ordered_json;

namespace {

struct Globals {
  std::string group = "A1@2";
  std::string kappa = "symbolic";
  std::string format = "text";
  std::uint64_t seed = 7;
  int max_degree = 3;
  int jobs = 1;
};

int print_element(const Globals& g, const std::string& src, const Element& value) {
  if (g.format == "json") {
    json j;
    j["expr"] = src;
    j["group"] = g.group;
    j["kappa"] = g.kappa;
    j["result"] = value.to_string();
    j["terms"] = value.size();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << value.to_string() << "\n";
  }
  return 0;
}

std::string join(const CoordVector& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.coords.size(); ++k) s += (k ? ", " : "") + v.coords[k].to_string();
  return s + ")";
}

int info(const Globals& g, const GroupConfig& cfg) {
  AlgebraPtr ctx = make_algebra(cfg, KappaMode::parse(g.kappa));
  const ReflectionGroup& G = ctx->group();
  const auto& gram = G.space().gram();
  if (g.format == "json") {
    json j;
    j["group"] = cfg.name;
    j["dim"] = G.dim();
    j["order"] = G.order();
    json rows = json::array();
    for (const auto& row : gram) {
      json r = json::array();
      for (const auto& c : row) r.push_back(c.to_string());
      rows.push_back(r);
    }
    j["gram"] = rows;
    j["kappa"] = json::array();
    for (int c = 0; c < ctx->kappa_classes(); ++c)
      j["kappa"].push_back({{"class", c + 1}, {"label", ctx->kappa_labels()[c]}, {"value", ctx->kappa(c).to_string()}});
    j["reflections"] = json::array();
    for (std::size_t k = 0; k < G.reflections().size(); ++k) {
      const auto& r = G.reflections()[k];
      j["reflections"].push_back({{"name", "s" + std::to_string(k + 1)},
                                  {"element", r.element},
                                  {"root", join(r.root)},
                                  {"coroot", join(r.coroot)},
                                  {"root_norm", r.root_norm.to_string()},
                                  {"class", r.cls + 1}});
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "group " << cfg.name << ": dim " << G.dim() << ", order " << G.order() << ", "
            << G.reflections().size() << " reflections, " << ctx->kappa_classes() << " classes\n";
  std::cout << "gram B(x_p, x_q):\n";
  for (const auto& row : gram) {
    std::cout << " ";
    for (const auto& c : row) std::cout << " " << c;
    std::cout << "\n";
  }
  for (int c = 0; c < ctx->kappa_classes(); ++c)
    std::cout << "class " << c + 1 << ": " << ctx->kappa_labels()[c] << " = " << ctx->kappa(c) << "\n";
  for (std::size_t k = 0; k < G.reflections().size(); ++k) {
    const auto& r = G.reflections()[k];
    std::cout << "s" << k + 1 << ": root " << join(r.root) << ", coroot " << join(r.coroot) << ", B(root, root) "
              << r.root_norm << ", class " << r.cls + 1 << ", element g" << r.element << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the deformed Weyl-Clifford superalgebra A_kappa"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--group", g.group, "A1@2, A2@3, B2@2, A1@5, A1@6, ... or custom:<file>");
  app.add_option("--kappa", g.kappa, "symbolic, or one value per reflection class: 1,-1/2");
  app.add_option("--format", g.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", g.seed, "seed for oracle samples");
  app.add_option("--max-degree", g.max_degree, "polynomial degree of oracle samples")->check(CLI::Range(0, 8));
  app.add_option("--jobs", g.jobs, "worker threads for verify")->check(CLI::PositiveNumber);

  std::string expr, expr_b;
  auto* eval = app.add_subcommand("eval", "print the normal form of an expression");
  eval->add_option("expr", expr)->required();
  auto* commute = app.add_subcommand("commute", "print the supercommutator [a, b]");
  commute->add_option("a", expr)->required();
  commute->add_option("b", expr_b)->required();

  std::string suite = "all";
  bool oracle = false, no_timing = false;
  auto* verify = app.add_subcommand("verify", "check catalog identities to exact zero");
  verify->add_option("--suite", suite, "suite id, case id or all");
  verify->add_flag("--oracle", oracle, "also compare both sides on oracle samples");
  verify->add_flag("--no-timing", no_timing, "report 0 ms for byte-stable output");

  int samples = 100;
  bool mutate = false;
  auto* cross = app.add_subcommand("crosscheck", "compare the engine with the Dunkl operator oracle");
  cross->add_option("--samples", samples, "number of oracle samples")->check(CLI::PositiveNumber);
  cross->add_flag("--mutate", mutate, "perturb one residual; the check must then fail");

  auto* list = app.add_subcommand("list-suites", "list suites and their cases");
  auto* info_cmd = app.add_subcommand("info", "group, root and reflection data");

  // The global options are accepted after the subcommand too.
  for (auto* sub : {eval, commute, verify, cross, list, info_cmd}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (list->parsed()) {
      if (g.format == "json") {
        json j = json::array();
        for (const auto& s : suite_ids()) {
          json cases = json::array();
          for (const auto& c : catalog())
            if (c.suite() == s) cases.push_back(c.id);
          j.push_back({{"suite", s}, {"cases", cases}});
        }
        std::cout << j.dump(2) << "\n";
      } else {
        for (const auto& s : suite_ids()) {
          std::cout << s << ":";
          for (const auto& c : catalog())
            if (c.suite() == s) std::cout << " " << c.id.substr(s.size() + 1);
          std::cout << "\n";
        }
      }
      return 0;
    }

    GroupConfig cfg = load_group(g.group);
    KappaMode kappa = KappaMode::parse(g.kappa);
    if (info_cmd->parsed()) return info(g, cfg);

    if (verify->parsed() || cross->parsed()) {
      std::vector<SuiteReport> reports;
      if (verify->parsed()) {
        if (suite != "all" && !find_case(suite)) {
          auto ids = suite_ids();
          if (std::find(ids.begin(), ids.end(), suite) == ids.end()) {
            std::cerr << "error: unknown suite '" << suite << "' (see list-suites)\n";
            return 2;
          }
        }
        RunOptions opts;
        opts.jobs = g.jobs;
        opts.oracle = oracle;
        opts.seed = g.seed;
        opts.max_degree = g.max_degree;
        opts.timing = !no_timing;
        reports = run_suite(suite, cfg, kappa, opts);
      } else {
        CrosscheckOptions opts;
        opts.seed = g.seed;
        opts.samples = samples;
        opts.max_degree = g.max_degree;
        opts.mutate = mutate;
        reports.push_back(run_oracle_crosscheck(cfg, kappa, opts));
      }
      std::cout << (g.format == "json" ? report_json(reports) : report_table(reports));
      bool failed = std::any_of(reports.begin(), reports.end(), [](const SuiteReport& r) { return r.status == Status::fail; });
      return failed ? 1 : 0;
    }

    Workspace ws(make_algebra(cfg, kappa));
    if (eval->parsed()) return print_element(g, expr, eval_expr(expr, ws));
    Element a = eval_expr(expr, ws), b = eval_expr(expr_b, ws);
    return print_element(g, "[" + expr + ", " + expr_b + "]", supercommutator(a, b));
  } catch (const ExprError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
