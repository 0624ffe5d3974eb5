#include <cmath>
#include <sstream>

#include "walks/cli.hpp"
#include "walks/combinatorics.hpp"
#include "walks/error.hpp"
#include "walks/numeric.hpp"
#include "walks/oracle.hpp"
#include "walks/partition.hpp"
#include "walks/spectral.hpp"

namespace walks::cli {

namespace {

class Report {
 public:
  explicit Report(std::ostream& out) : out_(out) {}

  void check(const std::string& name, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      detail = e.what();
    }
    out_ << (ok ? "PASS  " : "FAIL  ") << name;
    if (!detail.empty()) out_ << "  [" << detail << ']';
    out_ << '\n';
    if (!ok && first_failure_.empty()) first_failure_ = name;
  }

  void skip(const std::string& name, const std::string& why) { out_ << "SKIP  " << name << "  [" << why << "]\n"; }

  int finish() {
    if (first_failure_.empty()) {
      out_ << "all checks passed\n";
      return kExitSuccess;
    }
    out_ << "first failing check: " << first_failure_ << '\n';
    return kExitVerificationFailed;
  }

 private:
  std::ostream& out_;
  std::string first_failure_;
};

std::string describe_difference(const AreaDistribution& a, const AreaDistribution& b) {
  std::map<int, BigInt> keys = a.counts();
  for (const auto& [k, v] : b.counts()) keys.emplace(k, v);
  for (const auto& [k, unused] : keys) {
    if (a.count(k) != b.count(k)) {
      return "A=" + std::to_string(k) + ": " + a.count(k).get_str() + " vs " + b.count(k).get_str();
    }
  }
  return "";
}

bool same(const AreaDistribution& a, const AreaDistribution& b, std::string& detail) {
  if (a == b) return true;
  detail = describe_difference(a, b);
  return false;
}

void verify_lattice(LatticeKind kind, const VerifyOptions& options, const Routes& routes, Report& report) {
  const std::string lattice(to_string(kind));
  for (int steps = 2; steps <= options.max_steps; steps += 2) {
    const std::string at = lattice + " steps=" + std::to_string(steps) + ": ";
    std::optional<AreaDistribution> formula;
    report.check(at + "formula total = closed walk count", [&](std::string& detail) {
      formula = routes.formula(kind, steps);
      detail = formula->total().get_str();
      return formula->total() == closed_walk_total(kind, steps) && formula->is_symmetric();
    });
    if (!formula) continue;

    const bool oracle_allowed = options.budget_override || steps <= default_oracle_budget(kind);
    if (oracle_allowed) {
      report.check(at + "oracle = formula", [&](std::string& detail) {
        const AreaDistribution o = routes.oracle(kind, steps);
        const bool bound_ok = o.max_abs_area() == area_bound(kind, steps);
        if (!bound_ok) detail = "max |A| " + std::to_string(o.max_abs_area());
        return same(o, *formula, detail) && bound_ok;
      });
    } else {
      report.skip(at + "oracle = formula", "beyond the oracle budget");
    }
    report.check(at + "spectral = formula", [&](std::string& detail) {
      return same(routes.spectral(kind, steps), *formula, detail);
    });
  }
}

void verify_identities(const VerifyOptions& options, Report& report) {
  const int nmax = options.max_steps / 2;
  for (int n = 1; n <= nmax; ++n) {
    for (const combinatorics::SumRuleCheck& rule : combinatorics::sum_rules(n)) {
      report.check("sum rule " + rule.name, [&](std::string& detail) {
        detail = rule.detail;
        return rule.passed;
      });
    }
  }

  const bool square = !options.lattice || *options.lattice == LatticeKind::square;
  const bool honeycomb = !options.lattice || *options.lattice == LatticeKind::honeycomb;
  for (int q = 1; q <= std::min(options.max_steps, 10); ++q) {
    if (square) {
      report.check("Z(n) recursion = nested sum, square q=" + std::to_string(q), [&](std::string&) {
        const partition::PartitionSeries series = partition::zn_square_recursive(q);
        for (int n = 0; n <= q / 2; ++n) {
          if (series[static_cast<std::size_t>(n)] != partition::zn_square_nested(q, n)) return false;
        }
        return true;
      });
    }
    if (honeycomb && q <= 8) {
      report.check("Z(n) recursion = diluted exclusion, honeycomb q=" + std::to_string(q), [&](std::string&) {
        return partition::zn_honeycomb_recursive(q) == partition::zn_diluted(q);
      });
    }
  }

  for (int n = 1; n <= nmax; ++n) {
    if (square) {
      const int q = next_prime_above(2 * n);
      report.check("trace bridge, square n=" + std::to_string(n) + " q=" + std::to_string(q), [&](std::string& detail) {
        const auto b = partition::cluster_coefficients(partition::zn_square_recursive(q), n);
        double worst = 0;
        for (int p = 1; p < q; ++p) {
          const FluxRational flux(p, q);
          const double predicted = partition::trace_from_cluster(LatticeKind::square, b, n, q).evaluate(flux).real();
          const double actual = spectral::normalized_trace(LatticeKind::square, flux, 2 * n);
          worst = std::max(worst, std::abs(predicted - actual) / std::max(1.0, std::abs(actual)));
        }
        detail = "max rel. deviation " + std::to_string(worst);
        return worst < 1e-9;
      });
    }
    if (honeycomb) {
      const int q = next_prime_above(n);
      report.check("trace bridge, honeycomb n=" + std::to_string(n) + " q=" + std::to_string(q),
                   [&](std::string& detail) {
                     const auto b = partition::cluster_coefficients(partition::zn_honeycomb_recursive(q), n);
                     double worst = 0;
                     for (int p = 1; p < q; ++p) {
                       const FluxRational flux(p, q);
                       const double predicted =
                           partition::trace_from_cluster(LatticeKind::honeycomb, b, n, q).evaluate(flux).real();
                       const double actual = spectral::normalized_trace(LatticeKind::honeycomb, flux, 2 * n);
                       worst = std::max(worst, std::abs(predicted - actual) / std::max(1.0, std::abs(actual)));
                     }
                     detail = "max rel. deviation " + std::to_string(worst);
                     return worst < 1e-9;
                   });
    }
  }
}

}  // namespace

Routes Routes::standard() {
  Routes r;
  r.formula = [](LatticeKind kind, int steps) {
    return kind == LatticeKind::square ? combinatorics::area_counts_square(steps)
                                       : combinatorics::area_counts_honeycomb(steps);
  };
  r.oracle = [](LatticeKind kind, int steps) { return oracle::enumerate_closed_walks(kind, steps); };
  r.spectral = [](LatticeKind kind, int steps) { return spectral::reconstruct_area_distribution(kind, steps); };
  return r;
}

int run_verify(const VerifyOptions& options, const Routes& routes, std::ostream& out) {
  if (options.max_steps < 2) throw Error(Errc::invalid_argument, "--max-steps must be >= 2");
  Report report(out);
  for (LatticeKind kind : {LatticeKind::square, LatticeKind::honeycomb}) {
    if (!options.lattice || *options.lattice == kind) verify_lattice(kind, options, routes, report);
  }
  verify_identities(options, report);
  return report.finish();
}

}  // namespace walks::cli
