#include <chrono>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "walks/cli.hpp"
#include "walks/combinatorics.hpp"
#include "walks/error.hpp"
#include "walks/oracle.hpp"
#include "walks/spectral.hpp"

namespace walks::cli {

namespace {

LatticeKind lattice_from(const std::string& name) {
  const auto kind = parse_lattice(name);
  if (!kind) throw Error(Errc::invalid_argument, "unknown lattice '" + name + "' (square, honeycomb)");
  return *kind;
}

struct CountArgs {
  std::string lattice = "square";
  int steps = 0;
  std::string method = "formula";
  std::string format = "pretty";
  bool paper_style = false;
  bool budget_override = false;
};

int cmd_count(const CountArgs& args, const Routes& routes, std::ostream& out) {
  const LatticeKind kind = lattice_from(args.lattice);
  const auto method = parse_method(args.method);
  if (!method) throw Error(Errc::invalid_argument, "unknown method '" + args.method + "'");
  require_closed_length(args.steps);
  if (*method == Method::oracle && !args.budget_override && args.steps > default_oracle_budget(kind)) {
    throw Error(Errc::budget_exceeded, "oracle budget for the " + args.lattice + " lattice is " +
                                           std::to_string(default_oracle_budget(kind)) +
                                           " steps; pass --budget-override to go further");
  }

  const auto start = std::chrono::steady_clock::now();
  const auto& route = *method == Method::formula ? routes.formula
                      : *method == Method::oracle ? routes.oracle
                                                  : routes.spectral;
  const AreaDistribution d = route(kind, args.steps);
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);

  const OutputRecord record = OutputRecord::from(kind, *method, d, elapsed.count());
  if (args.format == "json") {
    out << record.to_json() << '\n';
  } else if (args.format == "csv") {
    out << record.to_csv();
  } else if (args.format == "pretty") {
    out << record.to_pretty(args.paper_style);
  } else {
    throw Error(Errc::invalid_argument, "unknown format '" + args.format + "'");
  }
  return kExitSuccess;
}

struct TraceArgs {
  std::string lattice = "honeycomb";
  int q = 0;
  int p = 1;
  int power = 1;
};

int cmd_trace(const TraceArgs& args, std::ostream& out) {
  const LatticeKind kind = lattice_from(args.lattice);
  if (args.power < 1) throw Error(Errc::invalid_argument, "--power must be >= 1");
  const FluxRational flux(args.p, args.q);
  const int steps = 2 * args.power;
  const int matrix_power = spectral::matrix_power(kind, steps);
  if (matrix_power >= args.q) {
    throw Error(Errc::invalid_argument, "matrix power " + std::to_string(matrix_power) + " must stay below q = " +
                                            std::to_string(args.q) + " (umklapp terms would enter the trace)");
  }
  const double value = spectral::normalized_trace(kind, flux, steps);
  const std::string h = kind == LatticeKind::square ? "H" : "H_q";
  out << "(1/q) tr " << h << '^' << matrix_power << " at p/q = " << args.p << '/' << args.q << ": "
      << std::setprecision(15) << value << '\n';
  const AreaDistribution d = spectral::reconstruct_area_distribution(kind, steps);
  out << "expansion: " << cosine_expansion(kind, d, args.p, args.q) << '\n';
  return kExitSuccess;
}

int cmd_coefficients(const std::string& lattice, int n, std::ostream& out) {
  const LatticeKind kind = lattice_from(lattice);
  const combinatorics::CoefficientTable table = kind == LatticeKind::square
                                                    ? combinatorics::coefficient_table_square(n)
                                                    : combinatorics::coefficient_table_honeycomb(n);
  const std::string name = kind == LatticeKind::square ? "c" : "c_" + std::to_string(n);
  for (const auto& [parts, value] : table.values) out << name << parts.to_string() << " = " << value << '\n';
  out << table.values.size() << " compositions\n";
  return kExitSuccess;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed lattice walks counted by algebraic area"};
  app.require_subcommand(1);

  CountArgs count;
  CLI::App* count_cmd = app.add_subcommand("count", "Area distribution of closed walks of one length");
  count_cmd->add_option("--lattice", count.lattice, "square or honeycomb")->required();
  count_cmd->add_option("--steps", count.steps, "Walk length (even, >= 2)")->required();
  count_cmd->add_option("--method", count.method, "formula, oracle or spectral")->capture_default_str();
  count_cmd->add_option("--format", count.format, "pretty, json or csv")->capture_default_str();
  count_cmd->add_flag("--paper-style", count.paper_style, "Combine the +A and -A rows");
  count_cmd->add_flag("--budget-override", count.budget_override, "Lift the oracle length limit");

  VerifyOptions verify;
  std::string verify_lattice;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Cross-check all routes and identities");
  verify_cmd->add_option("--max-steps", verify.max_steps, "Largest walk length checked")->capture_default_str();
  verify_cmd->add_option("--lattice", verify_lattice, "Restrict to one lattice");
  verify_cmd->add_flag("--budget-override", verify.budget_override, "Run the oracle at every length");

  TraceArgs trace;
  CLI::App* trace_cmd = app.add_subcommand("trace", "Normalized trace at flux p/q and its cosine expansion");
  trace_cmd->add_option("--lattice", trace.lattice, "square or honeycomb")->required();
  trace_cmd->add_option("--q", trace.q, "Flux denominator")->required();
  trace_cmd->add_option("--p", trace.p, "Flux numerator")->capture_default_str();
  trace_cmd->add_option("--power", trace.power, "n for walks of length 2n")->required();

  std::string coeff_lattice;
  int coeff_n = 0;
  CLI::App* coeff_cmd = app.add_subcommand("coefficients", "Composition coefficients c or c_n");
  coeff_cmd->add_option("--lattice", coeff_lattice, "square or honeycomb")->required();
  coeff_cmd->add_option("--n", coeff_n, "Half the walk length")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitSuccess : kExitUsage;
  }

  try {
    if (count_cmd->parsed()) return cmd_count(count, Routes::standard(), out);
    if (verify_cmd->parsed()) {
      if (!verify_lattice.empty()) verify.lattice = lattice_from(verify_lattice);
      return run_verify(verify, Routes::standard(), out);
    }
    if (trace_cmd->parsed()) return cmd_trace(trace, out);
    if (coeff_cmd->parsed()) return cmd_coefficients(coeff_lattice, coeff_n, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace walks::cli
