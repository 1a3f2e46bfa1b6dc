// pq-special: command-line front end for the pqsf library.
//
//   pq-special eval <function> name=value ...
//   pq-special verify <checker|all> [--n N] [--seed S] [--threads T]
//                                   [--output FILE]
//   pq-special sweep <function> --vary <param> <start:end:steps>
//                               name=value ... [--output FILE]
//
// Shared flags (all subcommands): --rel-tol X, --max-level L,
// --max-terms M.  Argument names accept the Greek spellings
// beta/gamma/delta/sigma as well as the UTF-8 letters.
//
// Exit codes: 0 success (verify: no violations), 2 usage or domain
// error, 3 numerical non-convergence, 4 at least one violated verdict.
//
// Output is line-buffered plain text; CSV uses ',' separators, '.'
// decimal points, and LF line endings.  Numbers are printed with 17
// significant digits so doubles round-trip exactly.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pqsf/extended.hpp"
#include "pqsf/quadrature.hpp"
#include "pqsf/special_core.hpp"
#include "pqsf/sweep.hpp"
#include "pqsf/verify.hpp"

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr const char* kUsage =
    "usage:\n"
    "  pq-special eval <function> name=value ...\n"
    "  pq-special verify <checker|all> [--n N] [--seed S] [--threads T]\n"
    "                    [--output FILE]\n"
    "  pq-special sweep <function> --vary <param> <start:end:steps>\n"
    "                    name=value ... [--output FILE]\n"
    "\n"
    "functions:\n"
    "  gamma x=            beta x= y=\n"
    "  gamma_p z= p=       extended_beta x= y= p= q=\n"
    "  extended_beta_single x= y= p=\n"
    "  phi_series beta= gamma= z= p= q=\n"
    "  phi_integral beta= gamma= z= p= q=\n"
    "  phi_derivative beta= gamma= z= p= q= n=\n"
    "\n"
    "checkers:\n"
    "  chebyshev_product logconvex_pq turan_pq logconvex_args\n"
    "  shifted_square ratio_monotone contiguous_product logconvex_z\n"
    "  phi_logconvex_pq beta_ratio_decreasing remark_turan\n"
    "\n"
    "shared flags: --rel-tol X  --max-level L  --max-terms M\n"
    "range syntax: start:end:steps (inclusive endpoints, steps intervals,\n"
    "              ascending, steps >= 1)\n";

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(const std::string& text, const std::string& what) {
  errno = 0;
  char* end = nullptr;
  double v = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0' || errno == ERANGE) {
    throw UsageError("cannot parse " + what + " as a number: '" + text + "'");
  }
  return v;
}

long long parse_ll(const std::string& text, const std::string& what) {
  errno = 0;
  char* end = nullptr;
  long long v = std::strtoll(text.c_str(), &end, 10);
  if (end == text.c_str() || *end != '\0' || errno == ERANGE) {
    throw UsageError("cannot parse " + what + " as an integer: '" + text +
                     "'");
  }
  return v;
}

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
  errno = 0;
  char* end = nullptr;
  unsigned long long v = std::strtoull(text.c_str(), &end, 10);
  if (end == text.c_str() || *end != '\0' || errno == ERANGE ||
      text.find('-') != std::string::npos) {
    throw UsageError("cannot parse " + what + " as an unsigned integer: '" +
                     text + "'");
  }
  return static_cast<std::uint64_t>(v);
}

// Greek argument names are accepted as UTF-8 and mapped to their ASCII
// spellings.
std::string canonical_key(const std::string& key) {
  if (key == "\xce\xb2") return "beta";   // β
  if (key == "\xce\xb3") return "gamma";  // γ
  if (key == "\xce\xb4") return "delta";  // δ
  if (key == "\xcf\x83") return "sigma";  // σ
  return key;
}

struct Cursor {
  std::vector<std::string> tokens;
  std::size_t i = 0;

  bool done() const { return i >= tokens.size(); }
  std::string next(const char* what) {
    if (done()) {
      throw UsageError(std::string("missing ") + what);
    }
    return tokens[i++];
  }
};

struct Tolerances {
  pqsf::QuadratureConfig quad;
  pqsf::SeriesConfig series;
};

// Consumes --rel-tol/--max-level/--max-terms (with their value token);
// returns false for anything else.
bool take_shared_flag(const std::string& tok, Cursor& cur, Tolerances& tol) {
  if (tok == "--rel-tol") {
    double r = parse_double(cur.next("--rel-tol value"), "--rel-tol");
    tol.quad.rel_tol = r;
    tol.series.rel_tol = r;
    return true;
  }
  if (tok == "--max-level") {
    long long lv = parse_ll(cur.next("--max-level value"), "--max-level");
    tol.quad.max_level = static_cast<int>(lv);
    if (tol.quad.min_level > tol.quad.max_level) {
      tol.quad.min_level = tol.quad.max_level;
    }
    return true;
  }
  if (tok == "--max-terms") {
    long long mt = parse_ll(cur.next("--max-terms value"), "--max-terms");
    tol.series.max_terms = static_cast<int>(mt);
    return true;
  }
  return false;
}

struct FunctionSig {
  const char* name;
  std::vector<std::string> args;
};

const std::vector<FunctionSig>& function_sigs() {
  static const std::vector<FunctionSig> specs = {
      {"gamma", {"x"}},
      {"beta", {"x", "y"}},
      {"gamma_p", {"z", "p"}},
      {"extended_beta", {"x", "y", "p", "q"}},
      {"extended_beta_single", {"x", "y", "p"}},
      {"phi_series", {"beta", "gamma", "z", "p", "q"}},
      {"phi_integral", {"beta", "gamma", "z", "p", "q"}},
      {"phi_derivative", {"beta", "gamma", "z", "p", "q", "n"}},
  };
  return specs;
}

const FunctionSig& find_function(const std::string& name) {
  for (const FunctionSig& sig : function_sigs()) {
    if (name == sig.name) {
      return sig;
    }
  }
  throw UsageError("unknown function: '" + name + "'");
}

using ArgMap = std::map<std::string, double>;

void check_arg_set(const FunctionSig& sig, const ArgMap& args) {
  for (const std::string& name : sig.args) {
    if (args.find(name) == args.end()) {
      throw UsageError(std::string(sig.name) + " requires " + name + "=");
    }
  }
  for (const auto& [name, value] : args) {
    (void)value;
    bool known = false;
    for (const std::string& want : sig.args) {
      if (want == name) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw UsageError(std::string(sig.name) + " does not take " + name +
                       "=");
    }
  }
}

int require_int_arg(const ArgMap& args, const std::string& name) {
  double v = args.at(name);
  if (!(v == static_cast<long long>(v)) || v < -1e9 || v > 1e9) {
    throw UsageError(name + "= must be an integer");
  }
  return static_cast<int>(v);
}

struct EvalOutcome {
  double value = 0.0;
  double error = 0.0;
  std::int64_t evaluations = 0;
  bool converged = true;
};

EvalOutcome from_result(const pqsf::QuadratureResult& r) {
  return {r.value, r.error_estimate, r.evaluations, r.converged};
}

// Closed-form evaluations carry a nominal relative error, matching the
// convention gamma_p uses for its p = 0 short circuit.
EvalOutcome closed_form(double v) { return {v, std::abs(v) * 1e-12, 1, true}; }

EvalOutcome evaluate_function(const FunctionSig& sig, const ArgMap& args,
                              const Tolerances& tol) {
  const std::string name = sig.name;
  if (name == "gamma") {
    return closed_form(pqsf::gamma(args.at("x")));
  }
  if (name == "beta") {
    return closed_form(pqsf::beta(args.at("x"), args.at("y")));
  }
  if (name == "gamma_p") {
    return from_result(pqsf::gamma_p(args.at("z"), args.at("p"), tol.quad));
  }
  if (name == "extended_beta") {
    return from_result(pqsf::extended_beta(
        args.at("x"), args.at("y"), {args.at("p"), args.at("q")}, tol.quad));
  }
  if (name == "extended_beta_single") {
    return from_result(pqsf::extended_beta_single(args.at("x"), args.at("y"),
                                                  args.at("p"), tol.quad));
  }
  pqsf::ConfluentArgs cargs{args.at("beta"), args.at("gamma"), args.at("z")};
  pqsf::ExtensionParams ext{args.at("p"), args.at("q")};
  if (name == "phi_integral") {
    return from_result(pqsf::phi_integral(cargs, ext, tol.quad));
  }
  if (name == "phi_series") {
    return from_result(pqsf::phi_series(cargs, ext, tol.series, tol.quad));
  }
  // phi_derivative: the value comes from the library call; the error
  // estimate and evaluation count from the shifted integral it scales.
  int n = require_int_arg(args, "n");
  double value = pqsf::phi_derivative(cargs, ext, n, tol.quad);
  pqsf::QuadratureResult shifted = pqsf::phi_integral(
      {cargs.beta + n, cargs.gamma + n, cargs.z}, ext, tol.quad);
  double factor =
      pqsf::pochhammer(cargs.beta, n) / pqsf::pochhammer(cargs.gamma, n);
  return {value, std::abs(factor) * shifted.error_estimate,
          shifted.evaluations, shifted.converged};
}

std::string csv_quote(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) {
    return text;
  }
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') {
      out += '"';
    }
    out += c;
  }
  out += '"';
  return out;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);  // binary keeps LF endings
  if (!out) {
    throw std::invalid_argument("cannot open output file: " + path);
  }
  return out;
}

// ---------------------------------------------------------------- eval

int cmd_eval(Cursor& cur) {
  Tolerances tol;
  std::string function;
  ArgMap args;
  while (!cur.done()) {
    std::string tok = cur.next("argument");
    if (take_shared_flag(tok, cur, tol)) {
      continue;
    }
    if (tok.rfind("--", 0) == 0) {
      throw UsageError("unknown flag for eval: " + tok);
    }
    std::size_t eq = tok.find('=');
    if (eq == std::string::npos) {
      if (!function.empty()) {
        throw UsageError("unexpected argument: '" + tok + "'");
      }
      function = tok;
      continue;
    }
    std::string key = canonical_key(tok.substr(0, eq));
    double value = parse_double(tok.substr(eq + 1), key + "=");
    if (!args.emplace(key, value).second) {
      throw UsageError("duplicate argument: " + key + "=");
    }
  }
  if (function.empty()) {
    throw UsageError("eval needs a function name");
  }
  const FunctionSig& sig = find_function(function);
  check_arg_set(sig, args);

  EvalOutcome out = evaluate_function(sig, args, tol);
  std::printf("%.17g %.17g %lld\n", out.value, out.error,
              static_cast<long long>(out.evaluations));
  if (!out.converged) {
    std::fprintf(stderr,
                 "warning: %s did not converge; the value above is the best "
                 "available estimate\n",
                 sig.name);
    return 3;
  }
  return 0;
}

// -------------------------------------------------------------- verify

int cmd_verify(Cursor& cur) {
  Tolerances tol;
  std::string target;
  std::optional<std::string> output;
  int threads = 0;
  pqsf::GridSpec grid;
  while (!cur.done()) {
    std::string tok = cur.next("argument");
    if (take_shared_flag(tok, cur, tol)) {
      continue;
    }
    if (tok == "--n") {
      long long n = parse_ll(cur.next("--n value"), "--n");
      if (n < 0) {
        throw UsageError("--n must be >= 0");
      }
      grid.n = static_cast<int>(n);
      continue;
    }
    if (tok == "--seed") {
      grid.seed = parse_u64(cur.next("--seed value"), "--seed");
      continue;
    }
    if (tok == "--threads") {
      threads = static_cast<int>(parse_ll(cur.next("--threads value"),
                                          "--threads"));
      continue;
    }
    if (tok == "--output") {
      output = cur.next("--output value");
      continue;
    }
    if (tok.rfind("--", 0) == 0) {
      throw UsageError("unknown flag for verify: " + tok);
    }
    if (!target.empty()) {
      throw UsageError("unexpected argument: '" + tok + "'");
    }
    target = tok;
  }
  if (target.empty()) {
    throw UsageError("verify needs a checker name or 'all'");
  }
  grid.quad = tol.quad;

  std::optional<pqsf::CheckerId> only;
  if (target != "all") {
    only = pqsf::checker_from_name(target);
    if (!only) {
      throw UsageError("unknown checker: '" + target + "'");
    }
  }

  pqsf::SweepReport report;
  if (only) {
    report = threads == 1 ? pqsf::run_suite(grid, *only)
                          : pqsf::run_suite_parallel(grid, *only, threads);
  } else {
    report = threads == 1 ? pqsf::run_suite(grid)
                          : pqsf::run_suite_parallel(grid, threads);
  }

  // Per-checker tallies, printed in declaration order.
  struct Counts {
    int holds = 0, inconclusive = 0, violated = 0, skipped = 0;
  };
  std::vector<Counts> per(pqsf::kCheckerCount);
  for (const pqsf::InequalityVerdict& v : report.verdicts) {
    auto id = pqsf::checker_from_name(v.checker);
    if (!id) {
      continue;
    }
    Counts& c = per[static_cast<int>(*id)];
    switch (v.status) {
      case pqsf::VerdictStatus::kHolds: ++c.holds; break;
      case pqsf::VerdictStatus::kInconclusive: ++c.inconclusive; break;
      case pqsf::VerdictStatus::kViolated: ++c.violated; break;
      case pqsf::VerdictStatus::kSkipped: ++c.skipped; break;
    }
  }
  for (int i = 0; i < pqsf::kCheckerCount; ++i) {
    if (only && static_cast<int>(*only) != i) {
      continue;
    }
    const Counts& c = per[i];
    std::printf("checker=%s holds=%d inconclusive=%d violated=%d skipped=%d\n",
                std::string(pqsf::checker_name(
                                static_cast<pqsf::CheckerId>(i)))
                    .c_str(),
                c.holds, c.inconclusive, c.violated, c.skipped);
  }
  std::printf("total holds=%d inconclusive=%d violated=%d skipped=%d\n",
              report.holds, report.inconclusive, report.violated,
              report.skipped);

  if (output) {
    std::ofstream out = open_output(*output);
    pqsf::write_verify_csv(report, out);
  }
  return report.violated > 0 ? 4 : 0;
}

// --------------------------------------------------------------- sweep

struct SweepRange {
  double start = 0.0;
  double end = 0.0;
  long long steps = 1;
};

SweepRange parse_range(const std::string& text) {
  std::size_t c1 = text.find(':');
  std::size_t c2 = c1 == std::string::npos ? std::string::npos
                                           : text.find(':', c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos ||
      text.find(':', c2 + 1) != std::string::npos) {
    throw UsageError("range must be start:end:steps, got '" + text + "'");
  }
  SweepRange r;
  r.start = parse_double(text.substr(0, c1), "range start");
  r.end = parse_double(text.substr(c1 + 1, c2 - c1 - 1), "range end");
  r.steps = parse_ll(text.substr(c2 + 1), "range steps");
  if (r.steps < 1) {
    throw UsageError("range steps must be >= 1");
  }
  if (!(r.start <= r.end)) {
    throw UsageError("range must be ascending (start <= end)");
  }
  return r;
}

int cmd_sweep(Cursor& cur) {
  Tolerances tol;
  std::string function;
  std::optional<std::string> output;
  std::optional<std::string> vary;
  SweepRange range;
  ArgMap fixed;
  while (!cur.done()) {
    std::string tok = cur.next("argument");
    if (take_shared_flag(tok, cur, tol)) {
      continue;
    }
    if (tok == "--vary") {
      if (vary) {
        throw UsageError("only one --vary parameter is supported");
      }
      vary = canonical_key(cur.next("--vary parameter name"));
      range = parse_range(cur.next("--vary range (start:end:steps)"));
      continue;
    }
    if (tok == "--output") {
      output = cur.next("--output value");
      continue;
    }
    if (tok.rfind("--", 0) == 0) {
      throw UsageError("unknown flag for sweep: " + tok);
    }
    std::size_t eq = tok.find('=');
    if (eq == std::string::npos) {
      if (!function.empty()) {
        throw UsageError("unexpected argument: '" + tok + "'");
      }
      function = tok;
      continue;
    }
    std::string key = canonical_key(tok.substr(0, eq));
    double value = parse_double(tok.substr(eq + 1), key + "=");
    if (!fixed.emplace(key, value).second) {
      throw UsageError("duplicate argument: " + key + "=");
    }
  }
  if (function.empty()) {
    throw UsageError("sweep needs a function name");
  }
  if (!vary) {
    throw UsageError("sweep needs --vary <param> <start:end:steps>");
  }
  const FunctionSig& sig = find_function(function);
  if (*vary == "n") {
    throw UsageError("cannot vary n (integer order)");
  }
  bool known = false;
  for (const std::string& name : sig.args) {
    if (name == *vary) {
      known = true;
      break;
    }
  }
  if (!known) {
    throw UsageError(std::string(sig.name) + " has no parameter '" + *vary +
                     "'");
  }
  if (fixed.count(*vary) != 0) {
    throw UsageError("'" + *vary + "' is varied and cannot also be fixed");
  }
  {
    ArgMap complete = fixed;
    complete.emplace(*vary, range.start);
    check_arg_set(sig, complete);
  }

  std::string csv = "param,value,error_estimate,note\n";
  for (long long i = 0; i <= range.steps; ++i) {
    double t = static_cast<double>(i) / static_cast<double>(range.steps);
    double v = i == 0 ? range.start
               : i == range.steps ? range.end
                                  : range.start + (range.end - range.start) * t;
    ArgMap args = fixed;
    args.emplace(*vary, v);
    csv += format_g17(v);
    csv += ',';
    try {
      EvalOutcome out = evaluate_function(sig, args, tol);
      csv += format_g17(out.value);
      csv += ',';
      csv += format_g17(out.error);
      csv += ',';
      if (!out.converged) {
        csv += csv_quote("not converged");
      }
    } catch (const UsageError&) {
      throw;
    } catch (const std::exception& ex) {
      csv += ",,";
      csv += csv_quote(ex.what());
    }
    csv += '\n';
  }

  if (output) {
    std::ofstream out = open_output(*output);
    out << csv;
  } else {
    std::fputs(csv.c_str(), stdout);
  }
  return 0;
}

int run(int argc, char** argv) {
  Cursor cur;
  for (int i = 1; i < argc; ++i) {
    cur.tokens.emplace_back(argv[i]);
  }
  std::string sub = cur.next("subcommand (eval, verify, or sweep)");
  if (sub == "eval") {
    return cmd_eval(cur);
  }
  if (sub == "verify") {
    return cmd_verify(cur);
  }
  if (sub == "sweep") {
    return cmd_sweep(cur);
  }
  if (sub == "--help" || sub == "-h" || sub == "help") {
    std::fputs(kUsage, stdout);
    return 0;
  }
  throw UsageError("unknown subcommand: '" + sub + "'");
}

}  // namespace

int main(int argc, char** argv) {
  std::setvbuf(stdout, nullptr, _IOLBF, 0);
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::fprintf(stderr, "error: %s\n\n%s", e.what(), kUsage);
    return 2;
  } catch (const pqsf::integrand_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::range_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 1;
  }
}
