#include "tspec/symbol_config.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "tspec/errors.hpp"

namespace tspec {
namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

double to_double(const std::string& key, const std::string& text) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw PreconditionError("symbol config: bad number for " + key + ": '" + text + "'");
  }
  return v;
}

int to_int(const std::string& key, const std::string& text) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw PreconditionError("symbol config: bad integer for " + key + ": '" + text + "'");
  }
  return v;
}

FourierSeries parse_log_coeffs(const std::string& text, int order) {
  FourierSeries v(order);
  std::stringstream ss(text);
  std::string item;
  std::set<int> seen;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    std::vector<std::string> parts;
    std::stringstream is(item);
    std::string part;
    while (std::getline(is, part, ':')) parts.push_back(trim(part));
    if (parts.size() < 2 || parts.size() > 3) {
      throw PreconditionError("symbol config: log_coeffs entry '" + item + "' is not k:re[:im]");
    }
    const int k = to_int("log_coeffs", parts[0]);
    if (k < 0 || k > order) {
      throw PreconditionError("symbol config: log_coeffs index outside [0, order]");
    }
    if (!seen.insert(k).second) throw PreconditionError("symbol config: repeated log_coeffs index");
    Complex c(to_double("log_coeffs", parts[1]),
              parts.size() == 3 ? to_double("log_coeffs", parts[2]) : 0.0);
    if (k == 0 && c.imag() != 0.0) {
      throw PreconditionError("symbol config: V_0 must be real");
    }
    v.at(k) = c;
    v.at(-k) = std::conj(c);
  }
  return v;
}

}  // namespace

Symbol builtin_symbol(std::string_view name) {
  if (name == "tridiag3") return SmoothUnimodalSymbol::tridiag3();
  if (name == "expcos") return SmoothUnimodalSymbol::expcos();
  if (name == "slowdecay") return SmoothUnimodalSymbol::slowdecay();
  if (name == "twolevel-p1q4") return TwoLevelSymbol::p1q4();
  throw PreconditionError("unknown builtin symbol '" + std::string(name) + "'");
}

Symbol parse_symbol_config(std::string_view text) {
  static const std::set<std::string> kKeys = {"kind",   "name", "order", "log_coeffs", "theta1",
                                              "theta2", "p",    "q",     "gamma"};
  std::map<std::string, std::string> kv;
  std::stringstream ss{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw PreconditionError("symbol config line " + std::to_string(lineno) + ": missing '='");
    }
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    if (!kKeys.count(key)) throw PreconditionError("symbol config: unknown key '" + key + "'");
    if (!kv.emplace(key, value).second) {
      throw PreconditionError("symbol config: repeated key '" + key + "'");
    }
  }
  auto need = [&](const std::string& key) -> const std::string& {
    auto it = kv.find(key);
    if (it == kv.end()) throw PreconditionError("symbol config: missing key '" + key + "'");
    return it->second;
  };
  auto reject = [&](std::initializer_list<const char*> keys, const std::string& kind) {
    for (const char* k : keys)
      if (kv.count(k)) {
        throw PreconditionError("symbol config: key '" + std::string(k) + "' not allowed for " +
                                kind);
      }
  };
  const std::string kind = need("kind");
  const std::string name = kv.count("name") ? kv["name"] : std::string{};
  if (kind == "smooth") {
    reject({"theta1", "theta2", "p", "q", "gamma"}, kind);
    const int order = kv.count("order") ? to_int("order", kv["order"]) : kDefaultLogOrder;
    if (order < 1 || std::size_t(4 * order) > kDefaultGridSize) {
      throw PreconditionError("symbol config: order must lie in [1, 2048]");
    }
    return SmoothUnimodalSymbol::from_log_coeffs(parse_log_coeffs(need("log_coeffs"), order), name);
  }
  if (kind == "two_level") {
    reject({"order", "log_coeffs"}, kind);
    const double theta1 = to_double("theta1", need("theta1"));
    const double gamma = to_double("gamma", need("gamma"));
    const bool has_pq = kv.count("p") || kv.count("q");
    if (has_pq && kv.count("theta2")) {
      throw PreconditionError("symbol config: give either theta2 or p and q");
    }
    if (has_pq) {
      return TwoLevelSymbol::from_rational_arc(theta1, to_int("p", need("p")),
                                               to_int("q", need("q")), gamma);
    }
    return TwoLevelSymbol::from_angles(theta1, to_double("theta2", need("theta2")), gamma);
  }
  throw PreconditionError("symbol config: unknown kind '" + kind + "'");
}

Symbol load_symbol(const std::string& spec) {
  if (spec == "tridiag3" || spec == "expcos" || spec == "slowdecay" || spec == "twolevel-p1q4") {
    return builtin_symbol(spec);
  }
  std::ifstream in(spec);
  if (!in) {
    throw PreconditionError("'" + spec + "' is neither a builtin symbol nor a readable file");
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_symbol_config(buf.str());
}

const std::string& symbol_name(const Symbol& sym) {
  static const std::string kTwoLevel = "two_level";
  if (auto* s = std::get_if<SmoothUnimodalSymbol>(&sym)) return s->name();
  return kTwoLevel;
}

}  // namespace tspec
