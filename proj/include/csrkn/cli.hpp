#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "csrkn/construction.hpp"

namespace csrkn {

enum class Verb { Derive, Check, Run, Order };

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNumerical = 2;

/// One CLI invocation. The method comes from, in order of precedence, a
/// tableau file, a builtin name, or a custom construction over `family`.
struct Command {
  Verb verb = Verb::Check;

  std::string method;
  std::string tableau_path;
  std::optional<FamilyKind> family;
  int xi = 3;
  int eta = 2;
  int rho = 2;
  int stages = 3;
  bool symmetric = false;
  std::map<AlphaKey, double> alpha_params;
  std::map<int, double> lambda_params;
  double gamma = 0.0;

  std::string problem = "kepler";
  double h = 0.1;
  long long steps = 10000;
  int record_every = 1;

  double h0 = 0.1;
  int levels = 5;
  double T = 1.0;

  double fp_tol = 1e-14;
  int max_iters = 50;

  std::string out;  // empty: write to the output stream
  bool csv = false; // check: emit condition,kappa,residual rows
};

/// Runs the command; returns kExitOk, kExitUsage or kExitNumerical.
int execute(const Command& command, std::ostream& out, std::ostream& err);

}  // namespace csrkn
