#include "csrkn/cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>

#include "csrkn/format.hpp"
#include "csrkn/integrator.hpp"
#include "csrkn/problems.hpp"
#include "csrkn/verification.hpp"

namespace csrkn {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ResolvedMethod {
  RKNTableau tableau;
  std::optional<MethodBundle> bundle;  // absent for tableaux read from file
};

ResolvedMethod resolve(const Command& cmd) {
  if (!cmd.tableau_path.empty()) {
    std::ifstream in(cmd.tableau_path);
    if (!in) throw UsageError("cannot open tableau file '" + cmd.tableau_path + "'");
    try {
      return {read_tableau(in), std::nullopt};
    } catch (const std::runtime_error& e) {
      throw UsageError(e.what());
    }
  }
  if (!cmd.method.empty() && cmd.method != "custom") {
    if (!find_builtin(cmd.method)) {
      std::string names;
      for (const auto& m : builtin_methods()) names += (names.empty() ? "" : ", ") + std::string(m.name);
      throw UsageError("unknown method '" + cmd.method + "' (known: " + names + ")");
    }
    MethodBundle b = builtin_bundle(cmd.method, cmd.gamma);
    RKNTableau t = b.tableau;
    return {std::move(t), std::move(b)};
  }
  if (!cmd.family) throw UsageError("give --method, --tableau or --family");
  if (cmd.stages < 1 || cmd.stages > kMaxBasisDegree)
    throw UsageError("--stages must be in 1.." + std::to_string(kMaxBasisDegree));
  ConstructionSpec spec;
  spec.family = *cmd.family;
  spec.xi = cmd.xi;
  spec.eta = cmd.eta;
  spec.rho = cmd.rho;
  spec.symmetric = cmd.symmetric;
  spec.alpha_params = cmd.alpha_params;
  spec.lambda_params = cmd.lambda_params;
  MethodBundle b = construct_method(spec, cmd.stages, "custom", cmd.gamma);
  RKNTableau t = b.tableau;
  return {std::move(t), std::move(b)};
}

SecondOrderProblem resolve_problem(const std::string& name) {
  auto pr = problem_by_name(name);
  if (!pr) throw UsageError("unknown problem '" + name + "' (known: kepler, henon_heiles, harmonic)");
  return std::move(*pr);
}

SolverConfig solver_config(const Command& cmd) {
  SolverConfig cfg;
  cfg.fp_tol = cmd.fp_tol;
  cfg.max_iters = cmd.max_iters;
  cfg.record_every = cmd.record_every;
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return cfg;
}

// Writes through `sink` either to cmd.out or to the given stream.
template <class F>
void with_output(const Command& cmd, std::ostream& fallback, F&& sink) {
  if (cmd.out.empty()) {
    sink(fallback);
    return;
  }
  std::ofstream file(cmd.out, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + cmd.out + "'");
  sink(file);
  if (!file) throw std::runtime_error("write to '" + cmd.out + "' failed");
}

std::string method_label(const RKNTableau& t) {
  return t.provenance ? t.provenance->method : std::string("tableau");
}

int run_derive(const Command& cmd, std::ostream& out) {
  const ResolvedMethod m = resolve(cmd);
  with_output(cmd, out, [&](std::ostream& os) { write_tableau(os, m.tableau); });
  if (!cmd.out.empty()) out << "wrote " << method_label(m.tableau) << " to " << cmd.out << '\n';
  return kExitOk;
}

int run_check(const Command& cmd, std::ostream& out) {
  const ResolvedMethod m = resolve(cmd);
  const ConditionReport discrete = check_discrete(m.tableau);
  if (cmd.csv) {
    with_output(cmd, out, [&](std::ostream& os) { write_report_csv(os, discrete); });
    return kExitOk;
  }
  with_output(cmd, out, [&](std::ostream& os) {
    os << "method " << method_label(m.tableau) << ", s = " << m.tableau.stages() << '\n';
    if (m.bundle) {
      const auto& b = *m.bundle;
      os << "family " << family_name(b.spec.family) << ", xi = " << b.spec.xi
         << ", eta = " << b.spec.eta << ", rho = " << b.spec.rho << '\n';
      os << "\ncontinuous ";
      render_report(os, check_continuous(b.coefficients, b.basis, b.spec.xi, b.spec.eta));
      const OrderBound ob =
          quadrature_order_bound(b.coefficients, b.basis, 2 * m.tableau.stages());
      os << "quadrature bound: xi = " << ob.xi << ", eta = " << ob.eta << ", zeta = " << ob.zeta
         << ", rho = " << ob.rho << ", alpha = " << ob.alpha << ", beta = " << ob.beta
         << ", order >= " << ob.order << '\n';
    }
    os << "\ndiscrete ";
    render_report(os, discrete);
  });
  return kExitOk;
}

int run_run(const Command& cmd, std::ostream& out) {
  const ResolvedMethod m = resolve(cmd);
  const SecondOrderProblem pr = resolve_problem(cmd.problem);
  const SolverConfig cfg = solver_config(cmd);
  if (cmd.steps < 1) throw UsageError("--steps must be >= 1");
  if (!(cmd.h != 0.0)) throw UsageError("--h must be nonzero");
  const Trajectory tr =
      integrate(m.tableau, pr, 0.0, pr.initial.q, pr.initial.p, cmd.h, cmd.steps, cfg);
  with_output(cmd, out, [&](std::ostream& os) { write_trajectory_csv(os, tr, pr); });
  if (!cmd.out.empty()) {
    int max_it = 0;
    for (int it : tr.iterations) max_it = std::max(max_it, it);
    out << "wrote " << tr.size() << " samples to " << cmd.out << " (max stage iterations "
        << max_it << ")\n";
  }
  return kExitOk;
}

int run_order(const Command& cmd, std::ostream& out) {
  const ResolvedMethod m = resolve(cmd);
  const SecondOrderProblem pr = resolve_problem(cmd.problem);
  if (!pr.exact) throw UsageError("problem '" + pr.name + "' has no exact solution");
  if (cmd.levels < 3) throw UsageError("--levels must be >= 3");
  if (!(cmd.h0 > 0.0) || !(cmd.T > 0.0)) throw UsageError("--h0 and --T must be positive");
  const OrderEstimate est = empirical_order(m.tableau, pr, cmd.h0, cmd.levels, cmd.T,
                                            solver_config(cmd));
  with_output(cmd, out, [&](std::ostream& os) {
    os << "h,error,slope\n";
    for (std::size_t k = 0; k < est.h.size(); ++k) {
      os << format_double(est.h[k]) << ',' << format_double(est.errors[k]) << ',';
      if (k > 0) os << format_double(est.slopes[k - 1]);
      os << '\n';
    }
    os << "# mean slope " << format_double(est.mean_slope) << '\n';
  });
  return kExitOk;
}

}  // namespace

int execute(const Command& cmd, std::ostream& out, std::ostream& err) {
  try {
    switch (cmd.verb) {
      case Verb::Derive: return run_derive(cmd, out);
      case Verb::Check: return run_check(cmd, out);
      case Verb::Run: return run_run(cmd, out);
      case Verb::Order: return run_order(cmd, out);
    }
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SolverError& e) {
    err << "solver failure";
    if (e.step()) err << " at step " << *e.step();
    err << ": " << e.what() << '\n';
    return kExitNumerical;
  } catch (const ConstructionError& e) {
    err << "construction failed: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const EigenError& e) {
    err << "quadrature failed: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
}

}  // namespace csrkn
