#include "wst/json_io.hpp"

#include <cstdio>

#include "wst/error.hpp"

namespace wst::io {

void expect_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  require(j.is_object(), Errc::invalid_argument, where + ": expected an object");
  for (const auto& item : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || item.key() == a;
    require(ok, Errc::invalid_argument, where + ": unknown key \"" + item.key() + "\"");
  }
}

const json& field(const json& j, const char* key, const std::string& where) {
  require(j.is_object() && j.contains(key), Errc::invalid_argument, where + ": missing \"" + key + "\"");
  return j.at(key);
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  require(j.is_string(), Errc::malformed_element, "expected a rational string, got " + j.dump());
  return parse_rational(j.get<std::string>());
}

long integer_from_json(const json& j) {
  if (j.is_number_integer()) return static_cast<long>(j.get<long long>());
  const Rational q = rational_from_json(j);
  require(is_integer(q) && q.get_num().fits_slong_p(), Errc::malformed_element, "expected a machine integer");
  return q.get_num().get_si();
}

BaseRing ring_from_json(const json& j) {
  if (j.is_string()) return ring_from_json(json{{"kind", j}});
  expect_keys(j, {"kind", "p", "precision"}, "base");
  const std::string kind = field(j, "kind", "base").get<std::string>();
  if (kind == "integer-archimedean") return BaseRing::integers();
  if (kind == "rational-archimedean") return BaseRing::rationals();
  if (kind == "complex-archimedean") return BaseRing::complexes();
  if (kind == "trivially-valued-rational") return BaseRing::trivial_rationals();
  const long p = integer_from_json(field(j, "p", "base"));
  require(p >= 2 && is_prime(static_cast<unsigned long>(p)), Errc::invalid_argument, "base: p must be prime");
  const long prec = j.contains("precision") ? integer_from_json(j.at("precision")) : 40;
  if (kind == "padic-field") return BaseRing::padic_field(static_cast<unsigned long>(p), prec);
  if (kind == "padic-dvr") return BaseRing::padic_dvr(static_cast<unsigned long>(p), prec);
  fail(Errc::invalid_argument, "base: unknown kind \"" + kind + "\"");
}

json ring_to_json(const BaseRing& ring) {
  json j{{"kind", ring.name()}};
  if (ring.is_padic()) {
    j["p"] = ring.prime();
    j["precision"] = ring.precision();
  }
  return j;
}

RingElement element_from_json(const BaseRing& ring, const json& j) {
  RingElement x;
  if (ring.kind() == RingKind::complex_arch) {
    auto part = [](const json& v) {
      if (v.is_number()) return v.get<double>();
      require(v.is_string(), Errc::malformed_element, "complex parts must be numbers or strings");
      return std::stod(v.get<std::string>());
    };
    if (j.is_array()) {
      require(j.size() == 2, Errc::malformed_element, "complex values are [re, im]");
      x = Complex(part(j[0]), part(j[1]));
    } else {
      x = Complex(part(j), 0.0);
    }
  } else if (ring.is_padic() && j.is_object()) {
    expect_keys(j, {"val", "unit", "rel"}, "p-adic element");
    const long val = integer_from_json(field(j, "val", "p-adic element"));
    const Rational unit = rational_from_json(field(j, "unit", "p-adic element"));
    if (j.contains("rel")) {
      require(is_integer(unit), Errc::malformed_element, "finite-precision units are integers");
      x = PAdic::from_parts(val, unit.get_num(), integer_from_json(j.at("rel")), ring.prime(), ring.precision());
    } else {
      x = PAdic::exact(unit * prime_power(ring.prime(), val), ring.prime(), ring.precision());
    }
  } else {
    x = ring.from_rational(rational_from_json(j));
  }
  ring.check(x);
  return x;
}

json element_to_json(const BaseRing& ring, const RingElement& x) {
  if (const auto* z = std::get_if<Complex>(&x)) {
    char re[40], im[40];
    std::snprintf(re, sizeof re, "%.17g", z->real());
    std::snprintf(im, sizeof im, "%.17g", z->imag());
    return json::array({re, im});
  }
  if (const auto* a = std::get_if<PAdic>(&x)) {
    if (a->is_exact_zero()) return "0";
    json j{{"val", a->valuation()}, {"unit", to_string(a->unit())}};
    if (a->state() == PAdic::State::approx_zero) {
      j["unit"] = "0";
      j["rel"] = 0;
    } else if (!a->is_exact()) {
      j["rel"] = a->relative_precision();
    }
    return j;
  }
  return ring.to_string(x);
}

Polynomial polynomial_from_json(const BaseRing& ring, const json& j) {
  require(j.is_array(), Errc::invalid_argument, "polynomials are coefficient arrays, low degree first");
  std::vector<RingElement> c;
  for (const auto& e : j) c.push_back(element_from_json(ring, e));
  return Polynomial(ring, std::move(c));
}

json polynomial_to_json(const Polynomial& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(element_to_json(p.ring(), c));
  return a;
}

SpectrumPoint point_from_json(const json& j) {
  expect_keys(j, {"kind", "p", "eps"}, "point");
  const std::string kind = field(j, "kind", "point").get<std::string>();
  const Rational eps = j.contains("eps") ? rational_from_json(j.at("eps")) : Rational(1);
  if (kind == "trivial") return SpectrumPoint::trivial();
  if (kind == "arch") return SpectrumPoint::arch(eps);
  const long p = integer_from_json(field(j, "p", "point"));
  require(p >= 2 && is_prime(static_cast<unsigned long>(p)), Errc::invalid_argument, "point: p must be prime");
  if (kind == "padic") return SpectrumPoint::padic(static_cast<unsigned long>(p), eps);
  if (kind == "padic-residue") return SpectrumPoint::padic_residue(static_cast<unsigned long>(p));
  fail(Errc::invalid_argument, "point: unknown kind \"" + kind + "\"");
}

json point_to_json(const SpectrumPoint& b) {
  switch (b.kind) {
    case SpectrumPoint::Kind::trivial: return {{"kind", "trivial"}};
    case SpectrumPoint::Kind::arch: return {{"kind", "arch"}, {"eps", to_string(b.eps)}};
    case SpectrumPoint::Kind::padic: return {{"kind", "padic"}, {"p", b.p}, {"eps", to_string(b.eps)}};
    case SpectrumPoint::Kind::padic_residue: return {{"kind", "padic-residue"}, {"p", b.p}};
  }
  return {};
}

FiberPoint fiber_from_json(const BaseRing& ring, const json& j) {
  expect_keys(j, {"kind", "center", "radius", "min_poly"}, "fiber point");
  const std::string kind = field(j, "kind", "fiber point").get<std::string>();
  if (kind == "rational") return FiberPoint::rational_point(element_from_json(ring, field(j, "center", "fiber point")));
  if (kind == "disk") {
    const RingElement c = j.contains("center") ? element_from_json(ring, j.at("center")) : ring.zero();
    return FiberPoint::disk(c, rational_from_json(field(j, "radius", "fiber point")));
  }
  if (kind == "rigid") return FiberPoint::rigid(polynomial_from_json(ring, field(j, "min_poly", "fiber point")));
  fail(Errc::invalid_argument, "fiber point: unknown kind \"" + kind + "\"");
}

json fiber_to_json(const BaseRing& ring, const FiberPoint& x) {
  switch (x.kind) {
    case FiberPoint::Kind::rational: return {{"kind", "rational"}, {"center", element_to_json(ring, x.center)}};
    case FiberPoint::Kind::disk:
      return {{"kind", "disk"}, {"center", element_to_json(ring, x.center)}, {"radius", to_string(x.radius)}};
    case FiberPoint::Kind::rigid: return {{"kind", "rigid"}, {"min_poly", polynomial_to_json(x.min_poly)}};
  }
  return {};
}

Series series_from_json(const BaseRing& ring, const json& j) {
  if (j.is_array()) return series_from_json(ring, json{{"coeffs", j}});
  expect_keys(j, {"lo", "coeffs", "inner", "outer", "tail"}, "series");
  std::vector<RingElement> c;
  for (const auto& e : field(j, "coeffs", "series")) c.push_back(element_from_json(ring, e));
  const long lo = j.contains("lo") ? integer_from_json(j.at("lo")) : 0;
  const Rational inner = j.contains("inner") ? rational_from_json(j.at("inner")) : Rational(0);
  const Rational outer = j.contains("outer") ? rational_from_json(j.at("outer")) : Rational(1);
  const NormValue tail = j.contains("tail") ? NormValue::of(rational_from_json(j.at("tail"))) : NormValue::zero();
  return Series(ring, lo, std::move(c), inner, outer, tail);
}

json series_to_json(const Series& f) {
  json c = json::array();
  for (const auto& x : f.coeffs()) c.push_back(element_to_json(f.ring(), x));
  return {{"lo", f.lo()},
          {"coeffs", c},
          {"inner", to_string(f.inner())},
          {"outer", to_string(f.outer())},
          {"tail", norm_to_json(f.tail())}};
}

json norm_to_json(const NormValue& v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v.approx());
  json j{{"value", v.str()}, {"approx", buf}};
  if (!v.is_exact()) {
    const auto e = v.enclosure();
    char lo[40], hi[40];
    std::snprintf(lo, sizeof lo, "%.17g", e.lo);
    std::snprintf(hi, sizeof hi, "%.17g", e.hi);
    j["lo"] = lo;
    j["hi"] = hi;
  }
  return j;
}

}  // namespace wst::io
