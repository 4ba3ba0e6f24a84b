#pragma once

// JSON encodings and text parsers shared by the CLI, the Python module and
// the tests.

#include <json.hpp>

#include <string>
#include <vector>

#include "valrank/buildings.hpp"
#include "valrank/chain_rings.hpp"
#include "valrank/expression.hpp"
#include "valrank/mustafin.hpp"
#include "valrank/rank_codes.hpp"
#include "valrank/skew.hpp"
#include "valrank/valued.hpp"

namespace valrank {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------- scalars

ExprContext<PAdicRational> padic_context(std::int64_t p);
ExprContext<TAdicFunction> tadic_context();
/// Integers, "pi" (= p) and "xi" (the power-basis generator).
ExprContext<GRElement> ring_context(const RingPtr& ring);

PAdicRational parse_padic(const std::string& text, std::int64_t p);
TAdicFunction parse_tadic(const std::string& text);
GRElement parse_element(const std::string& text, const RingPtr& ring);

json to_json(const PAdicRational& x);
json to_json(const TAdicFunction& x);
json to_json(const Valuation& v);
json to_json(const Rational& x);

// ---------------------------------------------------------------- rings

json ring_to_json(const GaloisRing& ring);
/// {"p","k","n"[,"h"]}; without "h" the deterministic modulus is used.
RingPtr ring_from_json(const json& j);

json element_to_json(const GRElement& x);
/// A coefficient array, an integer, or an expression string.
GRElement element_from_json(const json& j, const RingPtr& ring);

json sigma_to_json(const SigmaPoly& f, bool with_ring = true);
/// {"ring":..., "coeffs":[...]} or a bare coefficient list interpreted in `ring`.
SigmaPoly sigma_from_json(const json& j, const RingPtr& ring);
/// Coefficients separated by ';' (index i is the coefficient of sigma^i).
SigmaPoly parse_sigma(const std::string& text, const RingPtr& ring);

json zpk_matrix_to_json(const Matrix<Zpk>& m);

// ---------------------------------------------------------------- codes

json code_to_json(const CodeSpec& spec);
CodeSpec code_from_json(const json& j);
json filtration_to_json(const FiltrationReport& r);
json singleton_to_json(const SingletonReport& r);

// ---------------------------------------------------------------- matrices over valued fields

/// "I", "diag(a,b,...)" or "[[a,b],[c,d]]" with expression entries. `d` is the
/// size used by "I" (0 means unknown, which is an error for "I").
template <class T>
Matrix<T> parse_matrix_spec(const std::string& text, std::size_t d, const ExprContext<T>& ctx, const T& zero) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "I" || s == "id") {
    if (d == 0) fail(ErrorCode::ParseError, "the identity needs an explicit dimension");
    return Matrix<T>::identity(d, zero);
  }
  if (s.rfind("diag(", 0) == 0 && s.back() == ')') {
    const auto parts = split_top_level(s.substr(5, s.size() - 6), ',');
    Matrix<T> m(parts.size(), parts.size(), zero);
    for (std::size_t i = 0; i < parts.size(); ++i) m(i, i) = parse_expression(parts[i], ctx);
    return m;
  }
  if (s.size() >= 4 && s.front() == '[' && s.back() == ']') {
    std::vector<std::vector<T>> rows;
    for (const auto& row : split_top_level(s.substr(1, s.size() - 2), ',')) {
      if (row.size() < 2 || row.front() != '[' || row.back() != ']')
        fail(ErrorCode::ParseError, "matrix rows must be bracketed: " + row);
      std::vector<T> r;
      for (const auto& e : split_top_level(row.substr(1, row.size() - 2), ',')) r.push_back(parse_expression(e, ctx));
      rows.push_back(std::move(r));
    }
    return Matrix<T>::from_rows(rows, zero);
  }
  fail(ErrorCode::ParseError, "unrecognised matrix '" + text + "'");
}

template <class T>
json valued_matrix_to_json(const Matrix<T>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(to_string(m(i, j)));
    rows.push_back(std::move(r));
  }
  return rows;
}

/// Selects the field from {"backend":"padic","p":...} or {"backend":"tadic"}.
struct Backend {
  bool padic = true;
  std::int64_t p = 0;

  static Backend from_json(const json& j);
  json to_json() const;
};

template <class T>
struct BackendTraits;

template <>
struct BackendTraits<PAdicRational> {
  static ExprContext<PAdicRational> context(const Backend& b) { return padic_context(b.p); }
  static PAdicRational zero(const Backend& b) { return PAdicRational(Rational(0), b.p); }
};

template <>
struct BackendTraits<TAdicFunction> {
  static ExprContext<TAdicFunction> context(const Backend&) { return tadic_context(); }
  static TAdicFunction zero(const Backend&) { return TAdicFunction(); }
};

/// Accepts a matrix spec string or an array of rows of expression strings.
template <class T>
Matrix<T> valued_matrix_from_json(const json& j, const Backend& b, std::size_t d) {
  const auto ctx = BackendTraits<T>::context(b);
  const T zero = BackendTraits<T>::zero(b);
  if (j.is_string()) return parse_matrix_spec<T>(j.get<std::string>(), d, ctx, zero);
  if (!j.is_array()) fail(ErrorCode::ParseError, "matrix must be a string or an array of rows");
  std::vector<std::vector<T>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) fail(ErrorCode::ParseError, "matrix rows must be arrays");
    std::vector<T> r;
    for (const auto& e : row) {
      if (e.is_string()) r.push_back(parse_expression(e.get<std::string>(), ctx));
      else if (e.is_number_integer()) r.push_back(parse_expression(std::to_string(e.get<std::int64_t>()), ctx));
      else fail(ErrorCode::ParseError, "matrix entries must be strings or integers");
    }
    rows.push_back(std::move(r));
  }
  return Matrix<T>::from_rows(rows, zero);
}

template <class T>
json lattice_to_json(const Backend& b, const Matrix<T>& m) {
  json j = b.to_json();
  j["d"] = m.rows();
  j["matrix"] = valued_matrix_to_json(m);
  return j;
}

template <class T>
json vertex_report_to_json(const Backend& b, const VertexReport<T>& r) {
  json dt = json::object();
  const std::size_t n = r.rank_vector.size();
  for (std::size_t mask = 1; mask < r.d_table.size(); ++mask) {
    std::string key = "{";
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) key += (key.size() > 1 ? "," : "") + std::to_string(i + 1);
    dt[key + "}"] = r.d_table[mask];
  }
  return json{{"vertex", lattice_to_json(b, r.vertex.canonical())},
              {"rank_vector", r.rank_vector},
              {"d_table", dt},
              {"dimension", r.dimension},
              {"top_multidegrees", r.top_multidegrees},
              {"is_component", r.is_component}};
}

}  // namespace valrank
