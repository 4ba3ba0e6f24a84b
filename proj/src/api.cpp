#include "valrank/api.hpp"

#include <functional>
#include <map>

#include "valrank/local_linalg.hpp"

namespace valrank::api {
namespace {

using Handler = std::function<Response(const json&)>;

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class V>
V get_as(const json& j, const char* key) {
  try {
    return field(j, key).get<V>();
  } catch (const nlohmann::json::exception&) {
    fail(ErrorCode::ParseError, std::string("field '") + key + "' has the wrong type");
  }
}

std::vector<GRElement> elements(const json& j, const RingPtr& ring) {
  if (!j.is_array()) fail(ErrorCode::ParseError, "expected a list of ring elements");
  std::vector<GRElement> out;
  for (const auto& x : j) out.push_back(element_from_json(x, ring));
  return out;
}

json valuations_json(const std::vector<Valuation>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

// ------------------------------------------------------------ rings

Response ring_build(const json& req) {
  const RingPtr r = ring_from_json(field(req, "ring"));
  return {json{{"ring", ring_to_json(*r)},
               {"description", r->describe()},
               {"residue_field_size", r->residue_field_size()},
               {"element_count", r->element_count()},
               {"unit_count", r->unit_count()}},
          {}};
}

Response ring_teich(const json& req) {
  const RingPtr r = ring_from_json(field(req, "ring"));
  const GRElement x = element_from_json(field(req, "value"), r);
  const GRElement y = teichmuller_lift(x);
  return {json{{"value", element_to_json(x)}, {"lift", element_to_json(y)}, {"text", y.to_string()}}, {}};
}

Response ring_digits(const json& req) {
  const RingPtr r = ring_from_json(field(req, "ring"));
  const GRElement x = element_from_json(field(req, "value"), r);
  json digits = json::array();
  for (const auto& d : pi_digits(x)) digits.push_back(element_to_json(d));
  return {json{{"value", element_to_json(x)}, {"digits", digits}}, {}};
}

// ------------------------------------------------------------ codes

Response code_filtration(const json& req) {
  const CodeSpec spec = code_from_json(field(req, "code"));
  const FiltrationReport rep = filtration_report(spec, get_as<int>(req, "up_to"));
  return {json{{"code", code_to_json(spec)}, {"filtration", filtration_to_json(rep)}}, {}};
}

Response code_mindist(const json& req) {
  const CodeSpec spec = code_from_json(field(req, "code"));
  const int depth = get_as<int>(req, "depth");
  const std::uint64_t count = codeword_count(spec, depth);
  return {json{{"code", code_to_json(spec)},
               {"depth", depth},
               {"codeword_count", count},
               {"min_distance", min_distance(spec, depth)}},
          {}};
}

Response code_mrd(const json& req) {
  const CodeSpec spec = code_from_json(field(req, "code"));
  const int depth = get_as<int>(req, "depth");
  json out{{"code", code_to_json(spec)}, {"depth", depth}, {"singleton", singleton_to_json(singleton_check(spec, depth))}};
  if (spec.kind == CodeKind::Twisted) {
    const RingPtr r = spec.ring->reduced(depth);
    const Zpk norm = trace_norm(reduce_element(*spec.eta, r)).norm.to_base();
    const int n = r->degree();
    const std::int64_t sign = (static_cast<std::int64_t>(spec.ell) * n) % 2 == 0 ? 1 : r->modulus() - 1;
    out["eta_norm"] = norm.value();
    out["excluded_norm"] = sign;
    out["norm_condition"] = norm.value() != sign;
  }
  return {out, {}};
}

// ------------------------------------------------------------ skew algebra

Response skew_arith_op(const json& req) {
  const RingPtr r = ring_from_json(field(req, "ring"));
  const SigmaPoly f = sigma_from_json(field(req, "f"), r);
  const SigmaPoly g = sigma_from_json(field(req, "g"), r);
  const auto op = get_as<std::string>(req, "op");
  if (op != "add" && op != "mul") fail(ErrorCode::ParseError, "op must be 'add' or 'mul'");
  return {json{{"result", sigma_to_json(skew_arith(f, g, op == "add" ? SkewOp::Add : SkewOp::Mul), false)}}, {}};
}

Response skew_annihilator(const json& req) {
  const RingPtr r = ring_from_json(field(req, "ring"));
  const auto beta = elements(field(req, "beta"), r);
  const SigmaPoly rec = annihilator_recursive(r, beta);
  const SigmaPoly det = annihilator_determinant(r, beta);
  bool vanishes = true;
  for (const auto& b : beta) vanishes = vanishes && is_zero(evaluate(rec, b));
  return {json{{"recursive", sigma_to_json(rec, false)},
               {"determinant", sigma_to_json(det, false)},
               {"agree", rec == det},
               {"vanishes_on_module", vanishes}},
          {}};
}

Response skew_divide(const json& req) {
  const RingPtr r = ring_from_json(field(req, "ring"));
  const Division d = right_divide(sigma_from_json(field(req, "f"), r), sigma_from_json(field(req, "g"), r));
  return {json{{"quotient", sigma_to_json(d.quotient, false)}, {"remainder", sigma_to_json(d.remainder, false)}}, {}};
}

Response skew_normcheck(const json& req) {
  const RingPtr r = ring_from_json(field(req, "ring"));
  const SigmaPoly f = sigma_from_json(field(req, "f"), r);
  const int ell = req.contains("ell") ? get_as<int>(req, "ell") : f.degree();
  const NormCheck c = norm_condition_check(f, ell);
  return {json{{"holds", c.holds},
               {"norm", c.norm_value.value()},
               {"expected", c.expected.value()},
               {"inner_rank", inner_rank(matrix_rep_power(f))},
               {"n_minus_ell", r->degree() - ell}},
          {}};
}

// Rank over Q of the integer lift of a matrix over Z/p^k with entries in [0, p^k).
std::size_t lift_rank(const Matrix<Zpk>& m) {
  return field_rank(m.map([](const Zpk& x) { return Rational(x.value()); }));
}

Response skew_matrep(const json& req) {
  const RingPtr r = ring_from_json(field(req, "ring"));
  const SigmaPoly f = sigma_from_json(field(req, "f"), r);
  const Matrix<Zpk> m = req.contains("basis") ? matrix_rep(f, elements(req.at("basis"), r)) : matrix_rep_power(f);
  const RankProfile prof = rank_profile(m);
  return {json{{"matrix", zpk_matrix_to_json(m)},
               {"inner_rank", prof.inner_rank},
               {"free_rank_kernel", prof.free_rank_kernel},
               {"divisor_valuations", valuations_json(prof.divisor_valuations)},
               {"lift_rank", lift_rank(m)}},
          {}};
}

Response skew_factor(const json& req) {
  const RingPtr r = ring_from_json(field(req, "ring"));
  const MooreFactorization f = moore_factorization(r, elements(field(req, "alpha"), r));
  json beta = json::array(), divisors = json::array();
  for (const auto& b : f.beta) beta.push_back(element_to_json(b));
  for (const auto& e : f.divisors) divisors.push_back(e.value());
  return {json{{"transform", zpk_matrix_to_json(f.transform)},
               {"beta", beta},
               {"divisor_valuations", valuations_json(f.divisor_valuations)},
               {"divisors", divisors}},
          {}};
}

// ------------------------------------------------------------ buildings

Backend backend_of(const json& req) { return Backend::from_json(req); }

std::size_t dimension_of(const json& req) { return req.contains("d") ? get_as<std::size_t>(req, "d") : 0; }

template <class T>
Matrix<T> lattice_matrix(const json& j, const Backend& b, std::size_t d) {
  if (j.is_object()) {
    const Backend own = Backend::from_json(j);
    if (own.padic != b.padic || own.p != b.p) fail(ErrorCode::BackendMismatch, "lattice over a different field");
    return lattice_matrix<T>(field(j, "matrix"), b, j.contains("d") ? j.at("d").get<std::size_t>() : d);
  }
  Matrix<T> m = valued_matrix_from_json<T>(j, b, d);
  if (d != 0 && (m.rows() != d || m.cols() != d)) fail(ErrorCode::BackendMismatch, "lattice of the wrong dimension");
  return m;
}

template <class T>
std::vector<LatticeClass<T>> lattice_list(const json& j, const Backend& b, std::size_t d) {
  if (!j.is_array() || j.empty()) fail(ErrorCode::ParseError, "expected a nonempty list of lattices");
  std::vector<LatticeClass<T>> out;
  for (const auto& x : j) out.emplace_back(lattice_matrix<T>(x, b, d));
  return out;
}

template <class T>
json hull_json(const Backend& b, const std::vector<LatticeClass<T>>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(lattice_to_json(b, v.canonical()));
  return out;
}

template <class T>
Response bt_canon(const json& req, const Backend& b) {
  const LatticeClass<T> l(lattice_matrix<T>(field(req, "lattice"), b, dimension_of(req)));
  return {json{{"canonical", lattice_to_json(b, l.canonical())}}, {}};
}

template <class T>
Response bt_adjacent(const json& req, const Backend& b) {
  const std::size_t d = dimension_of(req);
  const Matrix<T> ma = lattice_matrix<T>(field(req, "a"), b, d);
  const Matrix<T> mb = lattice_matrix<T>(field(req, "b"), b, d);
  const LatticeClass<T> la(ma), lb(mb);
  return {json{{"adjacent", adjacent(la, lb)},
               {"a_contains_b", contains(ma, mb)},
               {"b_contains_a", contains(mb, ma)},
               {"a", lattice_to_json(b, la.canonical())},
               {"b", lattice_to_json(b, lb.canonical())}},
          {}};
}

template <class T>
Response bt_intersect(const json& req, const Backend& b) {
  const std::size_t d = dimension_of(req);
  const Matrix<T> m = intersect(lattice_matrix<T>(field(req, "a"), b, d), lattice_matrix<T>(field(req, "b"), b, d));
  return {json{{"intersection", lattice_to_json(b, m)}}, {}};
}

template <class T>
Response bt_hull(const json& req, const Backend& b) {
  const ConvexHull<T> h = convex_hull(lattice_list<T>(field(req, "lattices"), b, dimension_of(req)));
  return {json{{"count", h.vertices.size()}, {"vertices", hull_json(b, h.vertices)}}, {}};
}

template <class T>
Response bt_member(const json& req, const Backend& b) {
  const std::size_t d = dimension_of(req);
  const ConvexHull<T> h = convex_hull(lattice_list<T>(field(req, "lattices"), b, d));
  const LatticeClass<T> l(lattice_matrix<T>(field(req, "lattice"), b, d));
  return {json{{"member", hull_member(l, h)},
               {"lattice", lattice_to_json(b, l.canonical())},
               {"hull_size", h.vertices.size()}},
          {}};
}

// ------------------------------------------------------------ Mustafin

const char* kFiniteResidueWarning =
    "finite residue field: the component classification is stated for infinite residue fields";

template <class T>
Response mustafin_fiber(const json& req, const Backend& b) {
  const FiberReport<T> rep = special_fiber_components(lattice_list<T>(field(req, "lattices"), b, dimension_of(req)));
  json vertices = json::array(), components = json::array();
  for (const auto& v : rep.vertices) {
    json vj = vertex_report_to_json(b, v);
    if (v.is_component) components.push_back(vj);
    vertices.push_back(std::move(vj));
  }
  Response r{json{{"vertex_count", rep.vertices.size()},
                  {"component_count", rep.component_count()},
                  {"finite_residue_field", rep.finite_residue_field},
                  {"components", components},
                  {"vertices", vertices}},
             {}};
  if (rep.finite_residue_field) r.warnings.push_back(kFiniteResidueWarning);
  return r;
}

template <class T>
std::vector<Matrix<T>> matrix_family(const json& req, const Backend& b) {
  const json& list = field(req, "matrices");
  if (!list.is_array() || list.empty()) fail(ErrorCode::ParseError, "expected a nonempty list of matrices");
  // A family has exactly d members, so "I" defaults to d = list length.
  const std::size_t d = req.contains("d") ? dimension_of(req) : list.size();
  std::vector<Matrix<T>> out;
  for (const auto& m : list) out.push_back(valued_matrix_from_json<T>(m, b, d));
  return out;
}

template <class T>
json mp_json(const Backend& b, const MPReport<T>& r, bool full) {
  json bs = json::array();
  for (const auto& m : r.b_matrices) bs.push_back(valued_matrix_to_json(m));
  json out{{"saturated", r.saturated}, {"mp_dimension", r.mp_dimension}, {"b_matrices", bs}};
  if (full) {
    out["gamma"] = hull_json(b, r.gamma);
    out["hull"] = hull_json(b, r.hull);
    out["hull_contains_standard"] = r.hull_contains_standard;
    out["theorem_applies"] = r.saturated && r.mp_dimension + 1 == static_cast<int>(r.b_matrices.front().rows());
  }
  return out;
}

template <class T>
Response mustafin_mpdim(const json& req, const Backend& b) {
  return {mp_json(b, mp_dimension(matrix_family<T>(req, b)), false), {}};
}

template <class T>
Response mustafin_criterion(const json& req, const Backend& b) {
  Response r{mp_json(b, basis_criterion(matrix_family<T>(req, b)), true), {}};
  if (has_finite_residue_field<T>()) r.warnings.push_back(kFiniteResidueWarning);
  return r;
}

using BackendHandler = Response (*)(const json&, const Backend&);

Handler by_backend(BackendHandler padic, BackendHandler tadic) {
  return [padic, tadic](const json& req) {
    const Backend b = backend_of(req);
    return b.padic ? padic(req, b) : tadic(req, b);
  };
}

#define VALRANK_BOTH(fn) by_backend(fn<PAdicRational>, fn<TAdicFunction>)

struct Entry {
  Handler handler;
  std::string schema;
};

const std::map<std::string, Entry>& registry() {
  static const std::map<std::string, Entry> table = {
      {"ring.build", {ring_build, R"j({"ring":{"p":3,"k":2,"n":2}})j"}},
      {"ring.teich", {ring_teich, R"j({"ring":{"p":3,"k":2,"n":1},"value":"2"})j"}},
      {"ring.digits", {ring_digits, R"j({"ring":{"p":3,"k":2,"n":1},"value":"5"})j"}},
      {"code.filtration", {code_filtration, R"j({"code":{"ring":{...},"kind":"twisted","ell":1,"eta":"-1+pi","h":0},"up_to":2})j"}},
      {"code.mindist", {code_mindist, R"j({"code":{...},"depth":1})j"}},
      {"code.mrd", {code_mrd, R"j({"code":{...},"depth":1})j"}},
      {"skew.arith", {skew_arith_op, R"j({"ring":{...},"f":"1;xi","g":"0;1","op":"mul"})j"}},
      {"skew.annihilator", {skew_annihilator, R"j({"ring":{...},"beta":["1","xi"]})j"}},
      {"skew.divide", {skew_divide, R"j({"ring":{...},"f":"1;0;1","g":"2;1"})j"}},
      {"skew.normcheck", {skew_normcheck, R"j({"ring":{...},"f":"1;2","ell":1})j"}},
      {"skew.matrep", {skew_matrep, R"j({"ring":{...},"f":"1;1+3*xi"[,"basis":["1","xi"]]})j"}},
      {"skew.factor", {skew_factor, R"j({"ring":{...},"alpha":["1","3*xi"]})j"}},
      {"bt.canon", {VALRANK_BOTH(bt_canon), R"j({"backend":"padic","p":2,"d":2,"lattice":"[[4,0],[2,4]]"})j"}},
      {"bt.adjacent", {VALRANK_BOTH(bt_adjacent), R"j({"backend":"padic","p":2,"d":2,"a":"I","b":"diag(1,2)"})j"}},
      {"bt.intersect", {VALRANK_BOTH(bt_intersect), R"j({"backend":"tadic","d":2,"a":"I","b":"diag(1,t)"})j"}},
      {"bt.hull", {VALRANK_BOTH(bt_hull), R"j({"backend":"tadic","d":3,"lattices":["I","diag(1,t,t^2)"]})j"}},
      {"bt.member", {VALRANK_BOTH(bt_member), R"j({"backend":"tadic","d":3,"lattice":"diag(1,1,t)","lattices":[...]})j"}},
      {"mustafin.fiber", {VALRANK_BOTH(mustafin_fiber), R"j({"backend":"tadic","d":3,"lattices":["I","diag(1,t,t^2)"]})j"}},
      {"mustafin.mpdim", {VALRANK_BOTH(mustafin_mpdim), R"j({"backend":"padic","p":2,"matrices":["I","[[0,1],[1,0]]"]})j"}},
      {"mustafin.criterion", {VALRANK_BOTH(mustafin_criterion), R"j({"backend":"padic","p":2,"matrices":[...]})j"}},
  };
  return table;
}

#undef VALRANK_BOTH

}  // namespace

const std::vector<std::string>& operation_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, e] : registry()) v.push_back(k);
    return v;
  }();
  return names;
}

std::string request_schema(const std::string& op) {
  const auto it = registry().find(op);
  if (it == registry().end()) fail(ErrorCode::InvalidArgument, "unknown operation '" + op + "'");
  return it->second.schema;
}

Response run(const std::string& op, const json& request) {
  const auto it = registry().find(op);
  if (it == registry().end()) fail(ErrorCode::InvalidArgument, "unknown operation '" + op + "'");
  return it->second.handler(request);
}

}  // namespace valrank::api
