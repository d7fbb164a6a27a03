#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "oracles.hpp"
#include "wst/error.hpp"
#include "wst/json_io.hpp"

using namespace wst;
using io::json;

TEST_SUITE("json_io") {
  TEST_CASE("elements round trip") {
    const BaseRing Q = BaseRing::rationals();
    CHECK(io::element_to_json(Q, Q.from_rational(Rational(-3, 4))) == "-3/4");
    const BaseRing Q7 = BaseRing::padic_field(7, 20);
    const RingElement a = PAdic::approx(Rational(98), 10, 7, 20);
    const json ja = io::element_to_json(Q7, a);
    CHECK(ja.at("val") == 2);
    CHECK(Q7.equal(io::element_from_json(Q7, ja), a));
    const BaseRing C = BaseRing::complexes();
    CHECK(std::get<Complex>(io::element_from_json(C, json::array({1.5, -2}))) == Complex(1.5, -2));
  }
  TEST_CASE("rings, points and series") {
    const BaseRing R = io::ring_from_json(json{{"kind", "padic-dvr"}, {"p", 5}, {"precision", 12}});
    CHECK(R == BaseRing::padic_dvr(5, 12));
    CHECK(io::ring_from_json(io::ring_to_json(R)) == R);
    const SpectrumPoint b = io::point_from_json(json{{"kind", "arch"}, {"eps", "1/2"}});
    CHECK(b.eps == Rational(1, 2));
    const Series f = io::series_from_json(BaseRing::integers(), json{{"coeffs", {"1", "2"}}, {"outer", "3"}});
    CHECK(series_norm(f, NormKind::sum) == NormValue::of(7));
  }
  TEST_CASE("unknown keys are rejected") {
    CHECK_THROWS_AS(io::ring_from_json(json{{"kind", "rational-archimedean"}, {"colour", 1}}), Error);
    CHECK_THROWS_AS(io::point_from_json(json{{"kind", "padic"}, {"p", 4}}), Error);
  }
}

namespace {

struct Run {
  int code;
  json doc;
  std::string err;
};

Run run_cli(std::vector<std::string> args, const json& problem) {
  const std::string path = "wst_cli_test_problem.json";
  std::ofstream(path) << problem.dump();
  args.insert(args.begin(), "wst");
  args.push_back(path);
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  std::remove(path.c_str());
  Run r{code, json(), err.str()};
  if (!out.str().empty()) r.doc = json::parse(out.str());
  return r;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("divide-global") {
    const Run r = run_cli({"divide-global"}, json{{"base", "integer-archimedean"},
                                                  {"F", {"0", "0", "0", "1"}},
                                                  {"G", {"-1", "0", "1"}},
                                                  {"w", "3"}});
    CHECK(r.code == 0);
    CHECK(r.doc.at("ok") == true);
    CHECK(r.doc.at("result").at("Q").at("coeffs") == json({"0", "1"}));
    CHECK(r.doc.at("result").at("R").at("coeffs") == json({"0", "1"}));
    CHECK(r.doc.at("certificate").at("checks").at("Q_bound") == true);
  }
  TEST_CASE("hensel") {
    const Run r = run_cli({"hensel"}, json{{"base", {{"kind", "padic-dvr"}, {"p", 7}, {"precision", 40}}},
                                           {"P", {"-2", "0", "1"}},
                                           {"f0", "3"},
                                           {"precision", 40}});
    REQUIRE(r.code == 0);
    const Integer h(r.doc.at("result").at("residue").get<std::string>());
    const Integer m = ipow(Integer(7), 40);
    CHECK(mod(h * h - 2, m) == 0);
    CHECK(h == oracle::newton_root_mod({-2, 0, 1}, 3, 7, 40));
  }
  TEST_CASE("checked failure exits 2, bad input exits 1") {
    const json bad_root{{"base", {{"kind", "padic-dvr"}, {"p", 2}}}, {"P", {"-2", "0", "1"}}, {"f0", "3"}};
    const Run math = run_cli({"hensel"}, bad_root);
    CHECK(math.code == 2);
    CHECK(math.doc.at("error").at("code") == "NotUnit");
    const Run input = run_cli({"divide-global"}, json{{"base", "integer-archimedean"}, {"F", {"1"}}, {"G", {"1", "1"}}, {"x", 1}});
    CHECK(input.code == 1);
    CHECK(input.err.find("unknown key") != std::string::npos);
  }
  TEST_CASE("output is deterministic for a fixed seed") {
    const json p{{"base", {{"kind", "padic-field"}, {"p", 7}}}, {"P", {"1", "2", "0", "1"}}, {"samples", 5}};
    const Run a = run_cli({"endo-check", "--seed", "9"}, p);
    const Run b = run_cli({"endo-check", "--seed", "9"}, p);
    CHECK(a.code == 0);
    CHECK(a.doc.dump() == b.doc.dump());
  }
  TEST_CASE("suite runs the selected criteria") {
    const Run r = run_cli({"suite", "--filter", "4,5"}, json::object());
    CHECK(r.code == 0);
    CHECK(r.doc.at("result").at("criteria").size() == 2);
  }
}
