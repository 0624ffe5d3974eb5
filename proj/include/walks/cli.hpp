#pragma once

#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "walks/area_distribution.hpp"
#include "walks/lattice.hpp"

namespace walks::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

enum class Method { formula, oracle, spectral };

std::string_view to_string(Method m) noexcept;
std::optional<Method> parse_method(std::string_view name) noexcept;

/// Default oracle length limits; `--budget-override` lifts them.
int default_oracle_budget(LatticeKind kind) noexcept;

/// One `count` result as printed by every output format.
struct OutputRecord {
  std::string lattice;
  int steps = 0;
  std::string method;
  std::map<int, BigInt> counts;
  BigInt total;
  long long runtime_ms = 0;

  static OutputRecord from(LatticeKind kind, Method method, const AreaDistribution& d, long long runtime_ms);

  /// {"lattice", "steps", "method", "counts": {"A": "decimal"}, "total",
  /// "runtime_ms"}; big numbers are decimal strings.
  std::string to_json() const;
  /// Throws Error(invalid_argument) on malformed input or a total that
  /// disagrees with the counts.
  static OutputRecord from_json(const std::string& text);

  /// "area,count" header, one row per area in ascending order.
  std::string to_csv() const;

  /// Aligned table. With paper_style, rows are A = 0 and |A| > 0 with
  /// C(A) + C(-A), the convention of the published tables.
  std::string to_pretty(bool paper_style) const;

  bool operator==(const OutputRecord&) const = default;
};

/// "3(1181+360cos(2π/11)+10cos(4π/11))"-style rendering of sum_A C(A) Q^A
/// at Q = exp(2 pi i p/q). The coordination number is factored out when it
/// divides every coefficient and more than one term is present.
std::string cosine_expansion(LatticeKind kind, const AreaDistribution& d, int p, int q);

/// The three independent counting routes. Tests swap in tampered routes to
/// check that verification actually fails.
struct Routes {
  std::function<AreaDistribution(LatticeKind, int)> formula;
  std::function<AreaDistribution(LatticeKind, int)> oracle;
  std::function<AreaDistribution(LatticeKind, int)> spectral;

  static Routes standard();
};

struct VerifyOptions {
  int max_steps = 10;
  std::optional<LatticeKind> lattice;  // both when empty
  bool budget_override = false;
};

/// Runs every cross-route comparison and identity up to max_steps, printing
/// one "PASS"/"FAIL"/"SKIP" line per check. Returns kExitSuccess or
/// kExitVerificationFailed (naming the first failing check).
int run_verify(const VerifyOptions& options, const Routes& routes, std::ostream& out);

/// Entry point of the `walks` tool.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace walks::cli
