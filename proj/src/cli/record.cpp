#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "walks/cli.hpp"
#include "walks/error.hpp"

namespace walks::cli {

using nlohmann::json;

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::formula: return "formula";
    case Method::oracle: return "oracle";
    case Method::spectral: return "spectral";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view name) noexcept {
  if (name == "formula") return Method::formula;
  if (name == "oracle") return Method::oracle;
  if (name == "spectral") return Method::spectral;
  return std::nullopt;
}

int default_oracle_budget(LatticeKind kind) noexcept { return kind == LatticeKind::square ? 12 : 16; }

OutputRecord OutputRecord::from(LatticeKind kind, Method method, const AreaDistribution& d, long long runtime_ms) {
  return {std::string(walks::to_string(kind)), d.steps(), std::string(to_string(method)), d.counts(), d.total(),
          runtime_ms};
}

std::string OutputRecord::to_json() const {
  json counts_json = json::object();
  for (const auto& [a, c] : counts) counts_json[std::to_string(a)] = c.get_str();
  json j{{"lattice", lattice},         {"steps", steps},         {"method", method},
         {"counts", counts_json},      {"total", total.get_str()}, {"runtime_ms", runtime_ms}};
  return j.dump();
}

OutputRecord OutputRecord::from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    OutputRecord r;
    r.lattice = j.at("lattice").get<std::string>();
    r.steps = j.at("steps").get<int>();
    r.method = j.at("method").get<std::string>();
    BigInt sum = 0;
    for (const auto& [key, value] : j.at("counts").items()) {
      BigInt c(value.get<std::string>());
      sum += c;
      r.counts.emplace(std::stoi(key), c);
    }
    r.total = BigInt(j.at("total").get<std::string>());
    r.runtime_ms = j.value("runtime_ms", 0LL);
    if (r.total != sum) throw Error(Errc::invalid_argument, "record total does not match its counts");
    return r;
  } catch (const json::exception& e) {
    throw Error(Errc::invalid_argument, std::string("malformed record: ") + e.what());
  } catch (const std::logic_error& e) {
    // gmp and stoi report unparsable or out-of-range numbers this way
    throw Error(Errc::invalid_argument, std::string("malformed number in record: ") + e.what());
  }
}

std::string OutputRecord::to_csv() const {
  std::ostringstream os;
  os << "area,count\n";
  for (const auto& [a, c] : counts) os << a << ',' << c << '\n';
  return os.str();
}

std::string OutputRecord::to_pretty(bool paper_style) const {
  std::map<int, BigInt> rows;
  if (paper_style) {
    for (const auto& [a, c] : counts) rows[a < 0 ? -a : a] += c;
  } else {
    rows = counts;
  }
  std::size_t width = total.get_str().size();
  std::ostringstream os;
  os << lattice << " lattice, " << steps << " steps, method " << method << '\n';
  os << std::setw(6) << "A" << "  " << std::setw(static_cast<int>(width)) << "C(A)" << '\n';
  for (const auto& [a, c] : rows) {
    const std::string label = paper_style && a != 0 ? "±" + std::to_string(a) : std::to_string(a);
    // "±" is two bytes in UTF-8 but one column on screen.
    const int pad = paper_style && a != 0 ? 7 : 6;
    os << std::setw(pad) << label << "  " << std::setw(static_cast<int>(width)) << c.get_str() << '\n';
  }
  os << std::setw(6) << "total" << "  " << std::setw(static_cast<int>(width)) << total.get_str() << '\n';
  return os.str();
}

std::string cosine_expansion(LatticeKind kind, const AreaDistribution& d, int p, int q) {
  const AreaDistribution::Counts combined = d.combined();
  const long g = coordination(kind);
  bool divisible = combined.size() > 1;
  for (const auto& [a, c] : combined) {
    if (c % g != 0) divisible = false;
  }
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, c] : combined) {
    const BigInt coefficient = divisible ? BigInt(c / g) : c;
    if (!first) os << '+';
    first = false;
    os << coefficient;
    if (a != 0) os << "cos(" << 2L * a * p << "π/" << q << ')';
  }
  if (first) os << '0';
  return divisible ? std::to_string(g) + "(" + os.str() + ")" : os.str();
}

}  // namespace walks::cli
