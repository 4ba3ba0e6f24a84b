#include "valrank/json_io.hpp"

namespace valrank {
namespace {

std::int64_t reduce_mpz(const mpz_class& z, std::int64_t m) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(m));
  return r.get_si();
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class V>
V get_as(const json& j, const char* key) {
  try {
    return field(j, key).get<V>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, std::string("field '") + key + "' has the wrong type");
  }
}

}  // namespace

ExprContext<PAdicRational> padic_context(std::int64_t p) {
  ExprContext<PAdicRational> c;
  c.integer = [p](const mpz_class& z) { return PAdicRational(Rational(z), p); };
  c.variable = [p](const std::string& name) {
    if (name != "pi" && name != "p") fail(ErrorCode::ParseError, "unknown symbol '" + name + "' (p-adic scalars use pi)");
    return PAdicRational(Rational(p), p);
  };
  c.divide = [](const PAdicRational& a, const PAdicRational& b) { return a / b; };
  c.power = [p](const PAdicRational& a, std::int64_t e) {
    return integer_power<PAdicRational>(a, e, PAdicRational(Rational(1), p),
                                        [p](const PAdicRational& x) { return PAdicRational(Rational(1), p) / x; });
  };
  return c;
}

ExprContext<TAdicFunction> tadic_context() {
  ExprContext<TAdicFunction> c;
  c.integer = [](const mpz_class& z) { return TAdicFunction(Rational(z)); };
  c.variable = [](const std::string& name) {
    if (name != "t" && name != "pi") fail(ErrorCode::ParseError, "unknown symbol '" + name + "' (t-adic scalars use t)");
    return TAdicFunction(QPoly::monomial(Rational(1), 1), QPoly::constant(Rational(1)));
  };
  c.divide = [](const TAdicFunction& a, const TAdicFunction& b) { return a / b; };
  c.power = [](const TAdicFunction& a, std::int64_t e) {
    const TAdicFunction one(Rational(1));
    return integer_power<TAdicFunction>(a, e, one, [one](const TAdicFunction& x) { return one / x; });
  };
  return c;
}

ExprContext<GRElement> ring_context(const RingPtr& ring) {
  ExprContext<GRElement> c;
  c.integer = [ring](const mpz_class& z) { return GRElement::from_integer(ring, reduce_mpz(z, ring->modulus())); };
  c.variable = [ring](const std::string& name) {
    if (name == "pi" || name == "p") return GRElement::from_integer(ring, ring->prime());
    if (name == "xi" || name == "delta") return GRElement::generator(ring);
    fail(ErrorCode::ParseError, "unknown symbol '" + name + "' (ring elements use pi and xi)");
  };
  c.divide = [](const GRElement& a, const GRElement& b) { return a.exact_quotient(b); };
  c.power = [](const GRElement& a, std::int64_t e) {
    if (e >= 0) return a.pow(static_cast<std::uint64_t>(e));
    return a.inverse().pow(static_cast<std::uint64_t>(-e));
  };
  return c;
}

PAdicRational parse_padic(const std::string& text, std::int64_t p) { return parse_expression(text, padic_context(p)); }
TAdicFunction parse_tadic(const std::string& text) { return parse_expression(text, tadic_context()); }
GRElement parse_element(const std::string& text, const RingPtr& ring) {
  return parse_expression(text, ring_context(ring));
}

json to_json(const PAdicRational& x) { return json{{"backend", "padic"}, {"p", x.prime()}, {"value", x.to_string()}}; }

json to_json(const TAdicFunction& x) {
  return json{{"backend", "tadic"}, {"num", x.numerator().to_string("t")}, {"den", x.denominator().to_string("t")}};
}

json to_json(const Valuation& v) {
  if (v.is_infinite()) return "inf";
  return v.value();
}

json to_json(const Rational& x) { return to_string(x); }

json ring_to_json(const GaloisRing& ring) {
  return json{{"p", ring.prime()}, {"k", ring.depth()}, {"n", ring.degree()}, {"h", ring.basic_irreducible()}};
}

RingPtr ring_from_json(const json& j) {
  const auto p = get_as<std::int64_t>(j, "p");
  const auto k = get_as<int>(j, "k");
  if (j.contains("h") && !j.at("h").is_null()) {
    const auto h = get_as<std::vector<std::int64_t>>(j, "h");
    RingPtr r = GaloisRing::with_modulus(p, k, h);
    if (j.contains("n") && get_as<int>(j, "n") != r->degree())
      fail(ErrorCode::InvalidArgument, "ring degree n does not match the modulus h");
    return r;
  }
  return GaloisRing::build(p, k, get_as<int>(j, "n"));
}

json element_to_json(const GRElement& x) { return x.coeffs(); }

GRElement element_from_json(const json& j, const RingPtr& ring) {
  if (j.is_string()) return parse_element(j.get<std::string>(), ring);
  if (j.is_number_integer()) return GRElement::from_integer(ring, mod_floor(j.get<std::int64_t>(), ring->modulus()));
  if (j.is_array()) {
    std::vector<std::int64_t> c;
    for (const auto& x : j) {
      if (!x.is_number_integer()) fail(ErrorCode::ParseError, "element coefficients must be integers");
      c.push_back(mod_floor(x.get<std::int64_t>(), ring->modulus()));
    }
    if (c.size() > static_cast<std::size_t>(ring->degree()))
      fail(ErrorCode::InvalidArgument, "element has more than n coefficients");
    c.resize(static_cast<std::size_t>(ring->degree()), 0);
    return GRElement(ring, c);
  }
  fail(ErrorCode::ParseError, "ring elements are coefficient arrays, integers or expressions");
}

json sigma_to_json(const SigmaPoly& f, bool with_ring) {
  json coeffs = json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back(element_to_json(c));
  json j = json::object();
  if (with_ring) j["ring"] = ring_to_json(*f.ring());
  j["coeffs"] = coeffs;
  j["text"] = f.to_string();
  return j;
}

SigmaPoly sigma_from_json(const json& j, const RingPtr& ring) {
  if (j.is_string()) return parse_sigma(j.get<std::string>(), ring);
  RingPtr r = ring;
  const json* coeffs = &j;
  if (j.is_object()) {
    if (j.contains("ring")) {
      r = ring_from_json(j.at("ring"));
      if (ring) require_same_ring(ring, r);
    }
    coeffs = &field(j, "coeffs");
  }
  if (!r) fail(ErrorCode::ParseError, "sigma-polynomial without a ring");
  if (!coeffs->is_array()) fail(ErrorCode::ParseError, "sigma-polynomial coefficients must be an array");
  std::vector<GRElement> c;
  for (const auto& x : *coeffs) c.push_back(element_from_json(x, r));
  return SigmaPoly(r, c);
}

SigmaPoly parse_sigma(const std::string& text, const RingPtr& ring) {
  std::vector<GRElement> c;
  for (const auto& part : split_top_level(text, ';')) c.push_back(parse_element(part.empty() ? "0" : part, ring));
  return SigmaPoly(ring, c);
}

json zpk_matrix_to_json(const Matrix<Zpk>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j).value());
    rows.push_back(std::move(r));
  }
  return rows;
}

json code_to_json(const CodeSpec& spec) {
  json j{{"ring", ring_to_json(*spec.ring)}};
  switch (spec.kind) {
    case CodeKind::Gabidulin:
      j["kind"] = "gabidulin";
      j["ell"] = spec.ell;
      break;
    case CodeKind::Twisted:
      j["kind"] = "twisted";
      j["ell"] = spec.ell;
      j["eta"] = element_to_json(*spec.eta);
      j["h"] = spec.h;
      break;
    case CodeKind::Custom: {
      j["kind"] = "custom";
      json gens = json::array();
      for (const auto& g : spec.generators) gens.push_back(sigma_to_json(g, false));
      j["generators"] = gens;
      break;
    }
  }
  return j;
}

CodeSpec code_from_json(const json& j) {
  const RingPtr ring = ring_from_json(field(j, "ring"));
  const auto kind = get_as<std::string>(j, "kind");
  if (kind == "gabidulin") return CodeSpec::gabidulin(ring, get_as<int>(j, "ell"));
  if (kind == "twisted") {
    const int h = j.contains("h") ? get_as<int>(j, "h") : 0;
    return CodeSpec::twisted(ring, get_as<int>(j, "ell"), element_from_json(field(j, "eta"), ring), h);
  }
  if (kind == "custom") {
    std::vector<SigmaPoly> gens;
    const json& g = field(j, "generators");
    if (!g.is_array()) fail(ErrorCode::ParseError, "generators must be an array");
    for (const auto& x : g) gens.push_back(sigma_from_json(x, ring));
    return CodeSpec::custom(ring, gens);
  }
  fail(ErrorCode::ParseError, "unknown code kind '" + kind + "'");
}

json filtration_to_json(const FiltrationReport& r) {
  json k = json::array(), v = json::array();
  for (const auto& x : r.k_values) k.push_back(to_json(x));
  for (const auto& x : r.divisor_valuations) v.push_back(to_json(x));
  return json{{"up_to", r.up_to},
              {"k_values", k},
              {"d_values", r.d_values},
              {"divisor_valuations", v},
              {"mrd_flags", r.mrd_flags}};
}

json singleton_to_json(const SingletonReport& r) {
  return json{{"min_distance", r.min_distance},
              {"bound", r.bound},
              {"free_rank", r.free_rank},
              {"is_free", r.is_free},
              {"is_mrd", r.is_mrd}};
}

Backend Backend::from_json(const json& j) {
  Backend b;
  const auto name = get_as<std::string>(j, "backend");
  if (name == "padic") {
    b.padic = true;
    b.p = get_as<std::int64_t>(j, "p");
    if (!is_prime(b.p)) fail(ErrorCode::NotPrime, std::to_string(b.p) + " is not prime");
  } else if (name == "tadic") {
    b.padic = false;
  } else {
    fail(ErrorCode::ParseError, "backend must be 'padic' or 'tadic'");
  }
  return b;
}

json Backend::to_json() const {
  if (padic) return json{{"backend", "padic"}, {"p", p}};
  return json{{"backend", "tadic"}};
}

}  // namespace valrank
