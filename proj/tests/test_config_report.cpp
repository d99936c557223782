#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "tspec/errors.hpp"
#include "tspec/report_io.hpp"
#include "tspec/symbol_config.hpp"

using namespace tspec;
using std::numbers::pi;

TEST_SUITE("config_report") {

TEST_CASE("built-in names") {
  for (std::string name : {"tridiag3", "expcos", "slowdecay"}) {
    CHECK(symbol_name(builtin_symbol(name)) == name);
  }
  CHECK(symbol_name(builtin_symbol("twolevel-p1q4")) == "two_level");
  CHECK(std::holds_alternative<TwoLevelSymbol>(builtin_symbol("twolevel-p1q4")));
  CHECK_THROWS_AS(builtin_symbol("nope"), PreconditionError);
}

TEST_CASE("smooth config") {
  auto sym = parse_symbol_config(
      "# e^{-cos}\n"
      "kind = smooth\n"
      "name = mine\n"
      "order = 16\n"
      "log_coeffs = 1:-0.5\n");
  auto* s = std::get_if<SmoothUnimodalSymbol>(&sym);
  REQUIRE(s);
  CHECK(s->name() == "mine");
  CHECK(std::abs(s->value(1.0) - std::exp(-std::cos(1.0))) < 1e-14);
  CHECK(s->log_coeffs()[-1] == Complex(-0.5));
}

TEST_CASE("two-level config") {
  auto a = parse_symbol_config("kind = two_level\ntheta1 = 1.0\np = 2\nq = 5\ngamma = 0.1\n");
  auto* t = std::get_if<TwoLevelSymbol>(&a);
  REQUIRE(t);
  CHECK(near_period(*t) == 5);
  CHECK(std::abs(t->arc_length() - 4 * pi / 5) < 1e-14);
  auto b = parse_symbol_config("kind = two_level\ntheta1 = 1.0\ntheta2 = 2.5\ngamma = 0.1\n");
  CHECK_THROWS_AS(near_period(std::get<TwoLevelSymbol>(b)), UnsupportedError);
}

TEST_CASE("bad configs") {
  CHECK_THROWS_AS(parse_symbol_config("kind = smooth\ncolour = red\n"), PreconditionError);
  CHECK_THROWS_AS(parse_symbol_config("kind = smooth\norder = 8\norder = 9\n"), PreconditionError);
  CHECK_THROWS_AS(parse_symbol_config("kind = blob\n"), PreconditionError);
  CHECK_THROWS_AS(parse_symbol_config("kind = two_level\ntheta1 = 1\ngamma = 0.1\n"),
                  PreconditionError);
  CHECK_THROWS_AS(parse_symbol_config("kind = smooth\nlog_coeffs = -1:0.5\n"), PreconditionError);
  CHECK_THROWS(parse_symbol_config("kind = smooth\nlog_coeffs = 1:0.5\n"));
}

TEST_CASE("csv and json output") {
  Table t{{"n", "x", "label"}, {}};
  t.add({(long long)3, 0.1, std::string("a")});
  t.add({(long long)4, 1.0 / 3.0, std::string("b")});
  std::ostringstream csv;
  write_csv(csv, t);
  std::istringstream in(csv.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "n,x,label");
  std::getline(in, line);
  CHECK(line.rfind("3,", 0) == 0);
  std::getline(in, line);
  const double x = std::stod(line.substr(2, line.rfind(',') - 2));
  CHECK(x == 1.0 / 3.0);

  std::ostringstream js;
  write_json(js, t);
  auto j = nlohmann::json::parse(js.str());
  REQUIRE(j.is_array());
  CHECK(j.size() == 2);
  CHECK(j[1]["n"] == 4);
  CHECK(j[1]["label"] == "b");
  CHECK(j[0]["x"].get<double>() == 0.1);

  Table bad{{"a", "b"}, {}};
  CHECK_THROWS_AS(bad.add({1.0}), PreconditionError);
}

TEST_CASE("log-log slope") {
  std::vector<double> x{10, 20, 40, 80}, y;
  for (double v : x) y.push_back(3.0 * std::pow(v, -2.0));
  CHECK(loglog_slope(x, y) == doctest::Approx(-2.0));
}

}  // TEST_SUITE
