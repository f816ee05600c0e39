// Command-line front end: derive, check, run, order.
#include <CLI11.hpp>

#include <iostream>
#include <regex>

#include "csrkn/cli.hpp"

namespace {

using csrkn::Command;

void add_method_options(CLI::App* sub, Command& cmd, std::vector<std::string>& alpha,
                        std::vector<std::string>& lambda, std::string& family) {
  sub->add_option("--method,-m", cmd.method, "builtin: legendre4, chebyshev4, hermite4, hermite3");
  sub->add_option("--tableau", cmd.tableau_path, "read the tableau from a file");
  sub->add_option("--gamma", cmd.gamma, "free parameter of the builtin families");
  sub->add_option("--family", family, "custom construction: legendre, chebyshev, hermite, standard_hermite");
  sub->add_option("--xi", cmd.xi, "B(xi)");
  sub->add_option("--eta", cmd.eta, "CN(eta)");
  sub->add_option("--rho", cmd.rho, "tau-degree cap of the ansatz");
  sub->add_option("--stages", cmd.stages, "quadrature points");
  sub->add_flag("--symmetric", cmd.symmetric, "impose the symmetry constraints");
  sub->add_option("--alpha", alpha, "pin alpha(i,j), as i,j=value")->take_all();
  sub->add_option("--lambda", lambda, "set lambda_j for j >= xi, as j=value")->take_all();
  sub->add_option("--fp-tol", cmd.fp_tol, "stage iteration tolerance");
  sub->add_option("--max-iters", cmd.max_iters, "stage iteration cap");
  sub->add_option("--out,-o", cmd.out, "output file (default stdout)");
}

bool parse_params(Command& cmd, const std::vector<std::string>& alpha,
                  const std::vector<std::string>& lambda, const std::string& family) {
  static const std::regex alpha_re(R"(\s*(\d+)\s*,\s*(\d+)\s*=\s*(\S+)\s*)");
  static const std::regex lambda_re(R"(\s*(\d+)\s*=\s*(\S+)\s*)");
  try {
    for (const auto& a : alpha) {
      std::smatch m;
      if (!std::regex_match(a, m, alpha_re)) throw std::invalid_argument("bad --alpha '" + a + "'");
      cmd.alpha_params[{std::stoi(m[1]), std::stoi(m[2])}] = std::stod(m[3]);
    }
    for (const auto& l : lambda) {
      std::smatch m;
      if (!std::regex_match(l, m, lambda_re)) throw std::invalid_argument("bad --lambda '" + l + "'");
      cmd.lambda_params[std::stoi(m[1])] = std::stod(m[2]);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return false;
  }
  if (!family.empty()) {
    cmd.family = csrkn::parse_family(family);
    if (!cmd.family) {
      std::cerr << "error: unknown family '" << family << "'\n";
      return false;
    }
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symplectic RKN methods from continuous-stage constructions"};
  app.require_subcommand(1);
  // --h is the step size, so help is long-form only.
  app.set_help_flag("--help", "print help and exit");

  Command cmd;
  std::vector<std::string> alpha, lambda;
  std::string family;

  auto* derive = app.add_subcommand("derive", "write a tableau");
  add_method_options(derive, cmd, alpha, lambda, family);

  auto* check = app.add_subcommand("check", "report order conditions, symplecticity and symmetry");
  add_method_options(check, cmd, alpha, lambda, family);
  check->add_flag("--csv", cmd.csv, "condition,kappa,residual rows");

  auto* run = app.add_subcommand("run", "integrate a problem and write the trajectory CSV");
  add_method_options(run, cmd, alpha, lambda, family);
  run->add_option("--problem,-p", cmd.problem, "kepler, henon_heiles, harmonic");
  run->add_option("--h", cmd.h, "step size");
  run->add_option("--steps", cmd.steps, "number of steps");
  run->add_option("--record-every", cmd.record_every, "keep every n-th step");

  auto* order = app.add_subcommand("order", "step-halving convergence study");
  add_method_options(order, cmd, alpha, lambda, family);
  order->add_option("--problem,-p", cmd.problem, "kepler, harmonic");
  order->add_option("--h0", cmd.h0, "coarsest step");
  order->add_option("--levels", cmd.levels, "number of halvings");
  order->add_option("--T", cmd.T, "end time");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return csrkn::kExitUsage;
  }

  if (derive->parsed()) cmd.verb = csrkn::Verb::Derive;
  else if (check->parsed()) cmd.verb = csrkn::Verb::Check;
  else if (run->parsed()) cmd.verb = csrkn::Verb::Run;
  else cmd.verb = csrkn::Verb::Order;

  if (!parse_params(cmd, alpha, lambda, family)) return csrkn::kExitUsage;
  return csrkn::execute(cmd, std::cout, std::cerr);
}
