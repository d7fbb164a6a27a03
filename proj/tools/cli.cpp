#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "criteria.hpp"
#include "wst/conditions.hpp"
#include "wst/division_global.hpp"
#include "wst/division_local.hpp"
#include "wst/endo_checks.hpp"
#include "wst/error.hpp"
#include "wst/hensel.hpp"
#include "wst/json_io.hpp"

namespace wst::cli {

namespace {

using io::json;

struct Settings {
  std::optional<std::string> tol;
  std::optional<int> max_iter;
  std::optional<long> truncation;
  std::optional<std::uint64_t> seed;
  std::string filter;
};

struct Payload {
  json result = json::object();
  json certificate = json::object();
  json log = json::array();
  bool ok = true;
};

const std::initializer_list<const char*> kCommon = {"task", "tol", "max_iter", "truncation", "seed"};

void check_keys(const json& j, std::initializer_list<const char*> own, const std::string& where) {
  std::vector<const char*> all(kCommon);
  all.insert(all.end(), own.begin(), own.end());
  require(j.is_object(), Errc::invalid_argument, where + ": problem must be a JSON object");
  for (const auto& [k, v] : j.items()) {
    bool known = false;
    for (const char* a : all) known = known || k == a;
    require(known, Errc::invalid_argument, where + ": unknown key \"" + k + "\"");
  }
}

// Flags win over problem-file scalars.
void merge_settings(Settings& s, const json& j) {
  if (!s.tol && j.contains("tol")) s.tol = j.at("tol").is_string() ? j.at("tol").get<std::string>() : j.at("tol").dump();
  if (!s.max_iter && j.contains("max_iter")) s.max_iter = static_cast<int>(io::integer_from_json(j.at("max_iter")));
  if (!s.truncation && j.contains("truncation")) s.truncation = io::integer_from_json(j.at("truncation"));
  if (!s.seed && j.contains("seed")) s.seed = static_cast<std::uint64_t>(io::integer_from_json(j.at("seed")));
}

std::uint64_t seed_of(const Settings& s) { return s.seed.value_or(1); }

Rational opt_rational(const json& j, const char* key, const Rational& fallback) {
  return j.contains(key) ? io::rational_from_json(j.at(key)) : fallback;
}

json local_to_json(const LocalElement& f) {
  json rows = json::array();
  for (int i = 0; i < f.degree(); ++i) {
    json row = json::array();
    for (long k = 0; k <= f.window(); ++k) row.push_back(io::element_to_json(f.ring(), f.at(i, k)));
    rows.push_back(row);
  }
  return rows;
}

json residual_log(const std::vector<NormValue>& log) {
  json out = json::array();
  for (std::size_t k = 0; k < log.size(); ++k) out.push_back({{"step", k}, {"residual", io::norm_to_json(log[k])}});
  return out;
}

Payload divide_global_cmd(const json& j, const Settings& s) {
  check_keys(j, {"base", "F", "G", "w"}, "divide-global");
  const BaseRing ring = io::ring_from_json(io::field(j, "base", "divide-global"));
  const MonicPolynomial G(io::polynomial_from_json(ring, io::field(j, "G", "divide-global")));
  const NormValue v = threshold_v(G);
  const Rational w = j.contains("w") ? io::rational_from_json(j.at("w"))
                                      : Rational(ceil(v.rational() ? *v.rational() : Rational(std::ceil(v.upper())))) + 1;
  json fj = io::field(j, "F", "divide-global");
  if (fj.is_array()) fj = json{{"coeffs", fj}};
  if (!fj.contains("outer")) fj["outer"] = to_string(w);
  Series F = io::series_from_json(ring, fj);
  if (s.truncation) F = F.truncated(*s.truncation);
  const DivisionCertificate cert = divide_global(F, G, w);

  Payload out;
  out.result = {{"Q", io::series_to_json(cert.Q)},
                {"R", io::series_to_json(cert.R)},
                {"w", to_string(w)},
                {"v", io::norm_to_json(cert.v)},
                {"C", io::norm_to_json(cert.C)},
                {"rho", io::norm_to_json(cert.rho)}};
  const Polynomial diff = F.to_polynomial() - (cert.Q.to_polynomial() * G.poly() + cert.R.to_polynomial());
  const bool exact = diff.is_zero();
  const NormValue bound = cert.C * cert.norm_F;
  out.certificate = {{"norm_F", io::norm_to_json(cert.norm_F)},
                     {"norm_Q", io::norm_to_json(cert.norm_Q)},
                     {"norm_R", io::norm_to_json(cert.norm_R)},
                     {"checks",
                      {{"Q_bound", cert.norm_Q <= bound},
                       {"R_bound", cert.norm_R <= bound},
                       {"deg_R_below_d", cert.R.hi() < G.degree()},
                       {"window_identity_exact", exact}}}};
  if (!exact) out.certificate["checks"]["window_identity_defect"] = io::norm_to_json(poly_norm(diff, w));
  return out;
}

LocalContext local_context_from(const json& j, const Settings& s, const std::string& where, BaseRing& ring) {
  ring = io::ring_from_json(io::field(j, "base", where));
  const SpectrumPoint b = io::point_from_json(io::field(j, "point", where));
  const Polynomial P = io::polynomial_from_json(ring, io::field(j, "P", where));
  LocalOptions opt;
  opt.r = opt_rational(j, "r", opt.r);
  opt.s = opt_rational(j, "s", opt.s);
  if (j.contains("window")) opt.window = io::integer_from_json(j.at("window"));
  if (s.truncation) opt.window = *s.truncation;
  if (s.tol) opt.tol = NormValue::of(parse_rational(*s.tol));
  if (s.max_iter) opt.max_iter = *s.max_iter;
  const LocalContext ctx = make_local_context(b, FiberPoint::rigid(P), ring, opt);
  if (j.contains("eps")) {
    const NormValue eps = NormValue::of(io::rational_from_json(j.at("eps")));
    require(ctx.eps <= eps, Errc::invalid_argument,
            where + ": computed deviation " + ctx.eps.str() + " exceeds the requested eps " + eps.str());
  }
  return ctx;
}

json context_to_json(const LocalContext& ctx) {
  return {{"P_eps", io::polynomial_to_json(ctx.P_eps.poly())},
          {"eps", io::norm_to_json(ctx.eps)},
          {"class", rigid_class_name(ctx.cls)},
          {"window", ctx.window},
          {"r", to_string(ctx.r)},
          {"s", to_string(ctx.s)}};
}

Payload divide_local_cmd(const json& j, const Settings& s) {
  check_keys(j, {"base", "point", "P", "G", "F", "r", "s", "eps", "window"}, "divide-local");
  BaseRing ring;
  const LocalContext ctx = local_context_from(j, s, "divide-local", ring);
  const Polynomial G = io::polynomial_from_json(ring, io::field(j, "G", "divide-local")).change_ring(ctx.ring);
  const Polynomial F = io::polynomial_from_json(ring, io::field(j, "F", "divide-local")).change_ring(ctx.ring);
  const LocalDivisionResult res =
      divide_local(LocalElement::from_polynomial(ctx, F), LocalElement::from_polynomial(ctx, G), ctx);
  Payload out;
  out.result = {{"Q", local_to_json(res.Q)}, {"R", io::polynomial_to_json(res.R)}, {"n", res.n}};
  out.certificate = {{"context", context_to_json(ctx)},
                     {"theta", io::norm_to_json(res.theta)},
                     {"C_hat", io::norm_to_json(res.C_hat)},
                     {"iterations", res.iterations},
                     {"residual", io::norm_to_json(res.residual)}};
  out.log = residual_log(res.residual_log);
  return out;
}

Payload prepare_cmd(const json& j, const Settings& s) {
  check_keys(j, {"base", "point", "P", "G", "r", "s", "eps", "window"}, "prepare");
  BaseRing ring;
  const LocalContext ctx = local_context_from(j, s, "prepare", ring);
  const Polynomial G = io::polynomial_from_json(ring, io::field(j, "G", "prepare")).change_ring(ctx.ring);
  const Preparation prep = prepare(LocalElement::from_polynomial(ctx, G), ctx);
  Payload out;
  out.result = {{"Omega", io::polynomial_to_json(prep.Omega.poly())},
                {"E", local_to_json(prep.E)},
                {"E_inv", local_to_json(prep.E_inv)},
                {"n", prep.n}};
  out.certificate = {{"context", context_to_json(ctx)},
                     {"omega_deviation", io::norm_to_json(prep.omega_deviation)},
                     {"residual", io::norm_to_json(prep.residual)},
                     {"theta", io::norm_to_json(prep.division.theta)},
                     {"iterations", prep.division.iterations}};
  out.log = residual_log(prep.division.residual_log);
  return out;
}

Payload hensel_cmd(const json& j, const Settings& s) {
  check_keys(j, {"base", "P", "f0", "precision", "K"}, "hensel");
  const BaseRing ring = io::ring_from_json(io::field(j, "base", "hensel"));
  HenselProblem prob{ring, io::polynomial_from_json(ring, io::field(j, "P", "hensel")),
                     io::element_from_json(ring, io::field(j, "f0", "hensel")), std::nullopt, 0};
  if (j.contains("K")) prob.K = NormValue::of(io::rational_from_json(j.at("K")));
  std::int64_t target = ring.precision();
  if (j.contains("precision")) target = io::integer_from_json(j.at("precision"));
  if (s.truncation) target = *s.truncation;
  const HenselResult res = hensel_lift(prob, target);
  Payload out;
  out.result = {{"h", io::element_to_json(ring, res.h)}, {"residue", res.h.residue(target).get_str()}, {"precision", target}};
  bool contraction = true;
  for (const auto& st : res.log) {
    contraction = contraction && st.contraction_ok;
    out.log.push_back({{"step", st.step},
                       {"certified_precision", st.certified_precision},
                       {"contraction_lhs", io::norm_to_json(st.contraction_lhs)},
                       {"contraction_rhs", io::norm_to_json(st.contraction_rhs)},
                       {"contraction_ok", st.contraction_ok}});
  }
  out.certificate = {{"K", io::norm_to_json(res.K)},
                     {"contraction_ok", contraction},
                     {"certified_precision", res.log.back().certified_precision}};
  return out;
}

Payload factor_dg_cmd(const json& j, const Settings& s) {
  check_keys(j, {"base", "G", "point", "precision"}, "factor-dg");
  const BaseRing ring = io::ring_from_json(io::field(j, "base", "factor-dg"));
  const MonicPolynomial G(io::polynomial_from_json(ring, io::field(j, "G", "factor-dg")));
  const SpectrumPoint b = io::point_from_json(io::field(j, "point", "factor-dg"));
  std::int64_t N = j.contains("precision") ? io::integer_from_json(j.at("precision")) : 20;
  if (s.truncation) N = *s.truncation;
  const FactorizationDG f = factor_DG(G, b, N, seed_of(s));
  Payload out;
  json factors = json::array();
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    json res = json::array();
    for (const auto& c : f.residues[i]) res.push_back(c.get_str());
    factors.push_back({{"H", io::polynomial_to_json(f.factors[i])}, {"residue", res}, {"multiplicity", f.multiplicities[i]}});
  }
  out.result = {{"factors", factors}, {"r", f.factors.size()}};
  out.certificate = {{"precision", f.precision}, {"residual", io::norm_to_json(f.residual)}};
  return out;
}

Payload eval_point_cmd(const json& j, const Settings&) {
  check_keys(j, {"base", "point", "fiber", "P"}, "eval-point");
  const BaseRing ring = io::ring_from_json(io::field(j, "base", "eval-point"));
  const SpectrumPoint b = io::point_from_json(io::field(j, "point", "eval-point"));
  const Polynomial P = io::polynomial_from_json(ring, io::field(j, "P", "eval-point"));
  Payload out;
  if (j.contains("fiber")) {
    const FiberPoint x = io::fiber_from_json(ring, j.at("fiber"));
    out.result = {{"value", io::norm_to_json(evaluate_fiber(b, x, P))}};
    if (x.kind == FiberPoint::Kind::rigid) out.certificate = {{"class", rigid_class_name(classify_rigid(b, x, ring))}};
  } else {
    out.result = {{"value", io::norm_to_json(evaluate_boundary(BoundaryPoint{b, std::nullopt}, P))}};
  }
  return out;
}

Payload norm_cmd(const json& j, const Settings& s) {
  check_keys(j, {"base", "F", "kind", "grid"}, "norm");
  const BaseRing ring = io::ring_from_json(io::field(j, "base", "norm"));
  Series F = io::series_from_json(ring, io::field(j, "F", "norm"));
  if (s.truncation) F = F.truncated(*s.truncation);
  NormKind kind = ring.is_padic() ? NormKind::ultrametric_max : NormKind::sum;
  if (j.contains("kind")) {
    const std::string k = j.at("kind").get<std::string>();
    require(k == "sum" || k == "max", Errc::invalid_argument, "norm kind must be \"sum\" or \"max\"");
    kind = k == "sum" ? NormKind::sum : NormKind::ultrametric_max;
  }
  Payload out;
  out.result = {{"norm", io::norm_to_json(series_norm(F, kind))}};
  if (j.contains("grid")) {
    const SupBracket br = sup_bracket(F, static_cast<std::size_t>(io::integer_from_json(j.at("grid"))));
    out.certificate = {{"sup_lower", io::norm_to_json(br.lower)}, {"sup_upper", io::norm_to_json(br.upper)}};
  }
  return out;
}

Payload pi_content_cmd(const json& j, const Settings&) {
  check_keys(j, {"base", "F"}, "pi-content");
  const BaseRing ring = io::ring_from_json(io::field(j, "base", "pi-content"));
  const PiContent pc = pi_content(io::series_from_json(ring, io::field(j, "F", "pi-content")));
  Payload out;
  out.result = {{"v", pc.v}, {"g", io::series_to_json(pc.g)}};
  return out;
}

json report_to_json(const ConditionReport& rep) {
  json out{{"condition", rep.condition}, {"verdict", verdict_name(rep.verdict)}, {"samples", rep.samples}};
  if (rep.m_U) out["m_U"] = io::norm_to_json(*rep.m_U);
  if (rep.constant) out["constant"] = io::norm_to_json(*rep.constant);
  if (rep.witness) out["witness"] = io::polynomial_to_json(*rep.witness);
  if (rep.witness_estimate) out["witness_estimate"] = io::norm_to_json(*rep.witness_estimate);
  if (!rep.detail.empty()) out["detail"] = rep.detail;
  return out;
}

Payload check_rg_cmd(const json& j, const Settings&) {
  check_keys(j, {"base", "G", "boundary"}, "check-rg");
  const BaseRing ring = io::ring_from_json(io::field(j, "base", "check-rg"));
  const MonicPolynomial G(io::polynomial_from_json(ring, io::field(j, "G", "check-rg")));
  AnalyticBoundary gamma;
  for (const auto& x : io::field(j, "boundary", "check-rg")) {
    io::expect_keys(x, {"point", "fiber"}, "boundary point");
    BoundaryPoint bp{io::point_from_json(io::field(x, "point", "boundary point")), std::nullopt};
    if (x.contains("fiber")) bp.fiber = io::fiber_from_json(ring, x.at("fiber"));
    gamma.push_back(bp);
  }
  const ConditionReport rep = check_RG(G, gamma);
  Payload out;
  out.result = report_to_json(rep);
  json rb = json::array();
  for (const auto& x : gamma) rb.push_back({{"point", x.str(ring)}, {"root_bound", io::norm_to_json(root_bound(G, x.base))}});
  out.certificate = {{"root_bounds", rb}};
  return out;
}

Payload estimate_ng_cmd(const json& j, const Settings& s) {
  check_keys(j, {"base", "G", "w", "samples", "k"}, "estimate-ng");
  const BaseRing ring = io::ring_from_json(io::field(j, "base", "estimate-ng"));
  const MonicPolynomial G(io::polynomial_from_json(ring, io::field(j, "G", "estimate-ng")));
  const NormValue v = threshold_v(G);
  const Rational w = j.contains("w") ? io::rational_from_json(j.at("w"))
                                      : Rational(ceil(v.rational() ? *v.rational() : Rational(std::ceil(v.upper())))) + 1;
  const std::size_t samples = j.contains("samples") ? static_cast<std::size_t>(io::integer_from_json(j.at("samples"))) : 32;
  const int k = j.contains("k") ? static_cast<int>(io::integer_from_json(j.at("k"))) : 6;
  std::mt19937_64 rng(seed_of(s));
  Payload out;
  out.result = report_to_json(estimate_NG(G, w, samples, rng, k));
  out.certificate = {{"w", to_string(w)}, {"seed", seed_of(s)}, {"k", k}};
  return out;
}

Payload shilov_cmd(const json& j, const Settings&) {
  check_keys(j, {"point", "inner", "outer"}, "shilov");
  const SpectrumPoint b = io::point_from_json(io::field(j, "point", "shilov"));
  const AnalyticBoundary gamma =
      shilov_point(b, opt_rational(j, "inner", Rational(0)), io::rational_from_json(io::field(j, "outer", "shilov")));
  const BaseRing Q = BaseRing::rationals();
  Payload out;
  json pts = json::array();
  for (const auto& x : gamma) pts.push_back({{"point", io::point_to_json(x.base)}, {"fiber", io::fiber_to_json(Q, *x.fiber)}});
  out.result = {{"boundary", pts}};
  return out;
}

RingElement random_sigma(const BaseRing& ring, std::mt19937_64& rng) {
  if (ring.is_padic()) return random_element(ring, rng, 20);
  if (ring.kind() == RingKind::complex_arch) {
    std::uniform_real_distribution<double> u(-0.7, 0.7);
    return Complex(u(rng), u(rng));
  }
  if (ring.kind() == RingKind::integer_arch) {
    std::uniform_int_distribution<int> u(-1, 1);
    return Integer(u(rng));
  }
  std::uniform_int_distribution<int> den(1, 9);
  const int d = den(rng);
  std::uniform_int_distribution<int> num(-d, d);
  Rational q(num(rng), d);
  q.canonicalize();
  return ring.from_rational(q);
}

Payload endo_check_cmd(const json& j, const Settings& s) {
  check_keys(j, {"base", "P", "h", "samples", "window", "outer", "points"}, "endo-check");
  const BaseRing ring = io::ring_from_json(io::field(j, "base", "endo-check"));
  const EndoContext ctx(io::polynomial_from_json(ring, io::field(j, "P", "endo-check")));
  std::mt19937_64 rng(seed_of(s));
  Rational outer = 1;
  if (!ring.is_padic()) {
    NormValue sum = NormValue::one();
    for (int k = 0; k < ctx.degree(); ++k) {
      const RingElement c = ctx.P.coeff(static_cast<std::size_t>(k));
      if (!ring.is_zero(c)) sum = sum + abs_bound_at(SpectrumPoint::arch(1), ring, c);
    }
    outer = Rational(ceil(Rational(std::ceil(sum.upper()))));
  }
  outer = opt_rational(j, "outer", outer);
  EndoElement h;
  if (j.contains("h")) {
    for (const auto& c : j.at("h")) {
      json cj = c.is_array() ? json{{"coeffs", c}} : c;
      if (!cj.contains("outer")) cj["outer"] = to_string(outer);
      h.coords.push_back(io::series_from_json(ring, cj));
    }
  } else {
    long window = j.contains("window") ? io::integer_from_json(j.at("window")) : 12;
    if (s.truncation) window = *s.truncation;
    h = random_endo_element(ctx, window, outer, rng);
  }
  std::vector<RingElement> sigmas;
  if (j.contains("points")) {
    for (const auto& e : j.at("points")) sigmas.push_back(io::element_from_json(ring, e));
  } else {
    const long n = j.contains("samples") ? io::integer_from_json(j.at("samples")) : 50;
    for (long i = 0; i < n; ++i) sigmas.push_back(random_sigma(ring, rng));
  }
  Payload out;
  std::size_t agree = 0;
  for (const auto& sigma : sigmas) {
    const PullbackValue pv = pullback_eval(h, FiberPoint::rational_point(sigma), ctx);
    if (pv.agree) ++agree;
    out.log.push_back({{"sigma", io::element_to_json(ring, sigma)},
                       {"via_T", io::element_to_json(ring, pv.via_T)},
                       {"via_S", io::element_to_json(ring, pv.via_S)},
                       {"abs_P_sigma", io::norm_to_json(pv.abs_P_sigma)},
                       {"agree", pv.agree}});
  }
  out.ok = agree == sigmas.size();
  out.result = {{"samples", sigmas.size()}, {"agreements", agree}};
  json coords = json::array();
  for (const auto& c : h.coords) coords.push_back(io::series_to_json(c));
  out.certificate = {{"h", coords}, {"outer", to_string(outer)}};
  return out;
}

Payload suite_cmd(const json&, const Settings& s) {
  Payload out;
  json rows = json::array();
  for (const auto& o : acceptance::run_all(s.filter, s.seed.value_or(20261015))) {
    out.ok = out.ok && o.pass;
    rows.push_back({{"id", o.id}, {"name", o.name}, {"pass", o.pass}, {"detail", o.detail}});
  }
  out.result = {{"criteria", rows}};
  return out;
}

bool input_error(Errc c) { return c == Errc::invalid_argument || c == Errc::malformed_element; }

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  using Handler = std::function<Payload(const json&, const Settings&)>;
  const std::map<std::string, Handler> handlers = {
      {"divide-global", divide_global_cmd}, {"divide-local", divide_local_cmd}, {"prepare", prepare_cmd},
      {"hensel", hensel_cmd},               {"factor-dg", factor_dg_cmd},       {"eval-point", eval_point_cmd},
      {"norm", norm_cmd},                   {"pi-content", pi_content_cmd},     {"check-rg", check_rg_cmd},
      {"estimate-ng", estimate_ng_cmd},     {"shilov", shilov_cmd},             {"endo-check", endo_check_cmd},
      {"suite", suite_cmd}};

  CLI::App app{"Weierstrass division and preparation toolkit"};
  app.require_subcommand(1);
  Settings settings;
  std::string input, output;
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, h] : handlers) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("problem", input, "problem JSON file (default: standard input)");
    sub->add_option("--input", input, "problem JSON file");
    sub->add_option("--output", output, "write the result here instead of standard output");
    sub->add_option("--tol", settings.tol, "stopping tolerance (rational)");
    sub->add_option("--max-iter", settings.max_iter, "iteration cap");
    sub->add_option("--truncation", settings.truncation, "window / precision override");
    sub->add_option("--seed", settings.seed, "random seed");
    if (name == "suite") sub->add_option("--filter", settings.filter, "criteria ids, comma separated, or \"acceptance\"");
    subs[name] = sub;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return 1;
  }
  std::string name;
  for (const auto& [n, sub] : subs) {
    if (sub->parsed()) name = n;
  }

  json problem = json::object();
  if (name != "suite" || !input.empty()) {
    try {
      if (input.empty() || input == "-") {
        problem = json::parse(std::cin);
      } else {
        std::ifstream in(input);
        if (!in) {
          err << "cannot open " << input << "\n";
          return 1;
        }
        problem = json::parse(in);
      }
    } catch (const json::exception& e) {
      err << "malformed JSON: " << e.what() << "\n";
      return 1;
    }
  }

  json doc;
  int code = 0;
  try {
    if (problem.is_object()) merge_settings(settings, problem);
    const Payload p = handlers.at(name)(problem, settings);
    doc = {{"ok", p.ok}, {"result", p.result}, {"certificate", p.certificate}, {"log", p.log}};
    code = p.ok ? 0 : 2;
  } catch (const Error& e) {
    if (input_error(e.code())) {
      err << name << ": " << errc_name(e.code()) << ": " << e.what() << "\n";
      return 1;
    }
    doc = {{"ok", false},
           {"error", {{"code", errc_name(e.code())}, {"message", e.what()}}},
           {"result", nullptr},
           {"certificate", nullptr},
           {"log", json::array()}};
    code = 2;
  } catch (const json::exception& e) {
    err << name << ": malformed input: " << e.what() << "\n";
    return 1;
  }

  const std::string text = doc.dump(2) + "\n";
  if (output.empty()) {
    out << text;
  } else {
    std::ofstream f(output);
    if (!f) {
      err << "cannot write " << output << "\n";
      return 1;
    }
    f << text;
  }
  return code;
}

}  // namespace wst::cli
