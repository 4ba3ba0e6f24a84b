// Command-line front end: flags are turned into an API request, the result is
// printed once as JSON (--json) or as plain text.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "valrank/api.hpp"

using valrank::json;

namespace {

struct Options {
  bool as_json = false;
  bool timing = false;

  std::int64_t p = 0;
  int k = 0;
  int n = 0;
  std::string modulus;
  std::string value;

  int ell = 1;
  std::string eta;
  int h = 0;
  std::string generators;
  int filtration = 0;
  int mindist = 0;
  int mrd = 0;

  std::string f, g, beta, basis, alpha, op = "mul";
  int norm_ell = -1;

  std::string backend = "padic";
  std::size_t d = 0;
  std::string matrix, a, b, lattices, lattice, matrices;
};

std::vector<std::int64_t> parse_int_list(const std::string& s) {
  std::vector<std::int64_t> out;
  for (const auto& part : valrank::split_top_level(s, ',')) {
    try {
      out.push_back(std::stoll(part));
    } catch (const std::exception&) {
      valrank::fail(valrank::ErrorCode::ParseError, "expected an integer list, got '" + s + "'");
    }
  }
  return out;
}

json string_list(const std::string& s) {
  json out = json::array();
  for (const auto& part : valrank::split_top_level(s, ',')) out.push_back(part);
  return out;
}

json ring_request(const Options& o, int min_depth) {
  json r{{"p", o.p}, {"k", o.k > 0 ? o.k : std::max(1, min_depth)}, {"n", o.n}};
  if (!o.modulus.empty()) r["h"] = parse_int_list(o.modulus);
  return r;
}

std::string read_argument(const std::string& s) {
  if (s.empty() || s[0] != '@') return s;
  std::ifstream in(s.substr(1));
  if (!in) valrank::fail(valrank::ErrorCode::InvalidArgument, "cannot read " + s.substr(1));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json backend_request(const Options& o) {
  json r{{"backend", o.backend}};
  if (o.backend == "padic") r["p"] = o.p;
  if (o.d > 0) r["d"] = o.d;
  return r;
}

// The request for "<group> <sub>" built from the parsed flags.
std::pair<std::string, json> build_request(const std::string& group, const std::string& sub, const Options& o) {
  if (group == "ring") return {"ring." + sub, json{{"ring", ring_request(o, 1)}, {"value", o.value}}};
  if (group == "code") {
    const int depth = o.filtration > 0 ? o.filtration : o.mindist > 0 ? o.mindist : o.mrd;
    json code{{"ring", ring_request(o, depth)}, {"kind", sub}};
    if (sub != "custom") code["ell"] = o.ell;
    if (sub == "twisted") {
      code["eta"] = o.eta;
      code["h"] = o.h;
    }
    if (sub == "custom") {
      const std::string text = read_argument(o.generators);
      code["generators"] = json::parse(text, nullptr, false);
      if (code["generators"].is_discarded()) {
        json gens = json::array();
        for (const auto& gtext : valrank::split_top_level(text, '|')) gens.push_back(gtext);
        code["generators"] = gens;
      }
    }
    if (o.filtration > 0) return {"code.filtration", json{{"code", code}, {"up_to", o.filtration}}};
    if (o.mindist > 0) return {"code.mindist", json{{"code", code}, {"depth", o.mindist}}};
    return {"code.mrd", json{{"code", code}, {"depth", o.mrd}}};
  }
  if (group == "skew") {
    json r{{"ring", ring_request(o, 1)}};
    if (sub == "annihilator") r["beta"] = string_list(o.beta);
    if (sub == "divide" || sub == "arith") {
      r["f"] = o.f;
      r["g"] = o.g;
    }
    if (sub == "arith") r["op"] = o.op;
    if (sub == "normcheck" || sub == "matrep") r["f"] = o.f;
    if (sub == "normcheck" && o.norm_ell >= 0) r["ell"] = o.norm_ell;
    if (sub == "matrep" && !o.basis.empty()) r["basis"] = string_list(o.basis);
    if (sub == "factor") r["alpha"] = string_list(o.alpha);
    return {"skew." + sub, r};
  }
  json r = backend_request(o);
  if (group == "bt") {
    if (sub == "canon") r["lattice"] = o.matrix;
    if (sub == "adjacent" || sub == "intersect") {
      r["a"] = o.a;
      r["b"] = o.b;
    }
    if (sub == "hull" || sub == "member") r["lattices"] = string_list(o.lattices);
    if (sub == "member") r["lattice"] = o.lattice;
    return {"bt." + sub, r};
  }
  if (sub == "fiber") r["lattices"] = string_list(o.lattices);
  else r["matrices"] = string_list(o.matrices);
  return {"mustafin." + sub, r};
}

// ------------------------------------------------------------ plain-text rendering

std::string scalar_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

bool is_scalar_list(const json& j) {
  if (!j.is_array()) return false;
  for (const auto& x : j)
    if (x.is_structured()) return false;
  return true;
}

bool is_table(const json& j) {
  if (!j.is_array() || j.empty()) return false;
  for (const auto& row : j)
    if (!is_scalar_list(row) || row.empty()) return false;
  return true;
}

void render(std::ostream& out, const json& j, const std::string& indent);

void render_table(std::ostream& out, const json& rows, const std::string& indent) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], scalar_text(row[c]).size());
    }
  for (const auto& row : rows) {
    out << indent << "|";
    for (std::size_t c = 0; c < row.size(); ++c) {
      const std::string t = scalar_text(row[c]);
      out << " " << std::string(width[c] - t.size(), ' ') << t;
    }
    out << " |\n";
  }
}

void render_entry(std::ostream& out, const std::string& key, const json& v, const std::string& indent) {
  if (!v.is_structured()) {
    out << indent << key << ": " << scalar_text(v) << "\n";
  } else if (is_scalar_list(v)) {
    out << indent << key << ": (";
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar_text(v[i]);
    out << ")\n";
  } else if (is_table(v) && v.front().size() > 0 && v.size() <= 16 && v.front().size() <= 16 &&
             std::all_of(v.begin(), v.end(), [&](const json& r) { return r.size() == v.front().size(); })) {
    out << indent << key << ":\n";
    render_table(out, v, indent + "  ");
  } else {
    out << indent << key << ":\n";
    render(out, v, indent + "  ");
  }
}

void render(std::ostream& out, const json& j, const std::string& indent) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render_entry(out, k, v, indent);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) render_entry(out, "[" + std::to_string(i) + "]", j[i], indent);
  } else {
    out << indent << scalar_text(j) << "\n";
  }
}

void emit(const std::string& text, bool to_stderr) {
  std::FILE* stream = to_stderr ? stderr : stdout;
  std::fwrite(text.data(), 1, text.size(), stream);
  std::fflush(stream);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact rank-metric codes over chain rings, lattice classes in Bruhat-Tits buildings and Mustafin fibers"};
  app.require_subcommand(1);
  // --h is the twist exponent, so help is only available as --help.
  app.set_help_flag("--help", "Print this help message and exit");
  Options o;
  app.add_flag("--json", o.as_json, "Print the result as JSON");
  app.add_flag("--timing", o.timing, "Report the wall time in the diagnostics");

  auto ring_flags = [&](CLI::App* c, bool value) {
    c->add_option("--p", o.p, "Residue characteristic")->required();
    c->add_option("--k", o.k, "Depth (Z/p^k); defaults to the largest depth requested");
    c->add_option("--n", o.n, "Extension degree")->required();
    c->add_option("--modulus", o.modulus, "Basic irreducible, constant term first, e.g. 1,0,1");
    if (value) c->add_option("--value", o.value, "Element expression over pi and xi")->required();
  };

  std::vector<std::pair<CLI::App*, std::string>> leaves;
  auto add_group = [&](const std::string& name, const std::string& help) {
    CLI::App* grp = app.add_subcommand(name, help);
    grp->require_subcommand(1);
    grp->fallthrough();
    return grp;
  };
  auto leaf = [&](CLI::App* grp, const std::string& name, const std::string& help) {
    CLI::App* c = grp->add_subcommand(name, help);
    c->fallthrough();
    leaves.emplace_back(c, grp->get_name());
    return c;
  };

  CLI::App* ring = add_group("ring", "Galois ring GR(p^k, n)");
  ring_flags(leaf(ring, "build", "Describe the ring"), false);
  ring_flags(leaf(ring, "teich", "Teichmueller lift of an element"), true);
  ring_flags(leaf(ring, "digits", "Teichmueller digits of an element"), true);

  CLI::App* code = add_group("code", "Rank-metric codes in S[G]");
  for (const char* kind : {"gabidulin", "twisted", "custom"}) {
    CLI::App* c = leaf(code, kind, std::string(kind) + " code");
    ring_flags(c, false);
    if (std::string(kind) != "custom") c->add_option("--ell", o.ell, "Number of free sigma-coefficients")->required();
    if (std::string(kind) == "twisted") {
      c->add_option("--eta", o.eta, "Twist coefficient, e.g. -1+pi^1")->required();
      c->add_option("--h", o.h, "Frobenius power applied to f_0");
    }
    if (std::string(kind) == "custom")
      c->add_option("--generators", o.generators, "Generators: JSON list, '|'-separated ';'-lists, or @file")->required();
    auto* fi = c->add_option("--filtration", o.filtration, "Report k_i and d_i for i = 1..I");
    auto* md = c->add_option("--mindist", o.mindist, "Minimum distance at depth i");
    auto* mr = c->add_option("--mrd", o.mrd, "Singleton bound and MRD verdict at depth i");
    fi->excludes(md)->excludes(mr);
    md->excludes(mr);
    c->require_option(1, 0);
  }

  CLI::App* skew = add_group("skew", "sigma-polynomials over GR(p^k, n)");
  {
    CLI::App* c = leaf(skew, "annihilator", "Monic annihilator of a free submodule");
    ring_flags(c, false);
    c->add_option("--beta", o.beta, "Comma-separated basis elements")->required();
    c = leaf(skew, "divide", "Right division f = q g + r");
    ring_flags(c, false);
    c->add_option("--f", o.f, "Coefficients of f separated by ';'")->required();
    c->add_option("--g", o.g, "Coefficients of the monic divisor g")->required();
    c = leaf(skew, "arith", "Sum or twisted product");
    ring_flags(c, false);
    c->add_option("--f", o.f, "First operand")->required();
    c->add_option("--g", o.g, "Second operand")->required();
    c->add_option("--op", o.op, "add or mul");
    c = leaf(skew, "normcheck", "Norm criterion for inner rank n - ell");
    ring_flags(c, false);
    c->add_option("--f", o.f, "Coefficients of f")->required();
    c->add_option("--ell", o.norm_ell, "Degree (defaults to deg f)");
    c = leaf(skew, "matrep", "Matrix of f and its rank profile");
    ring_flags(c, false);
    c->add_option("--f", o.f, "Coefficients of f")->required();
    c->add_option("--basis", o.basis, "Comma-separated integral basis (default: power basis)");
    c = leaf(skew, "factor", "Moore-matrix factorization of a vector");
    ring_flags(c, false);
    c->add_option("--alpha", o.alpha, "Comma-separated elements")->required();
  }

  auto field_flags = [&](CLI::App* c) {
    c->add_option("--backend", o.backend, "padic or tadic")->check(CLI::IsMember({"padic", "tadic"}));
    c->add_option("--p", o.p, "Prime for the p-adic backend");
    c->add_option("--d", o.d, "Dimension (needed for I)");
  };
  CLI::App* bt = add_group("bt", "Lattice classes in the building of PGL_d");
  {
    CLI::App* c = leaf(bt, "canon", "Canonical form of a lattice class");
    field_flags(c);
    c->add_option("--matrix", o.matrix, "I, diag(...) or [[..],[..]]")->required();
    for (const char* name : {"adjacent", "intersect"}) {
      c = leaf(bt, name, name);
      field_flags(c);
      c->add_option("--a", o.a, "First lattice")->required();
      c->add_option("--b", o.b, "Second lattice")->required();
    }
    c = leaf(bt, "hull", "Convex hull of lattice classes");
    field_flags(c);
    c->add_option("--lattices", o.lattices, "Comma-separated lattices")->required();
    c = leaf(bt, "member", "Hull membership");
    field_flags(c);
    c->add_option("--lattices", o.lattices, "Comma-separated lattices")->required();
    c->add_option("--lattice", o.lattice, "Candidate lattice")->required();
  }

  CLI::App* must = add_group("mustafin", "Special fibers of Mustafin varieties");
  {
    CLI::App* c = leaf(must, "fiber", "Vertexwise component classification over conv(Gamma)");
    field_flags(c);
    c->add_option("--lattices", o.lattices, "Comma-separated lattices")->required();
    for (const char* name : {"mpdim", "criterion"}) {
      c = leaf(must, name, std::string(name) == "mpdim" ? "Multi-projective closure dimension" : "Basis criterion");
      field_flags(c);
      c->add_option("--matrices", o.matrices, "Comma-separated d x e matrices A_1..A_d")->required();
    }
  }

  std::string group, sub;
  try {
    app.parse(argc, argv);
    for (const auto& [c, g] : leaves)
      if (c->parsed()) {
        group = g;
        sub = c->get_name();
      }
    if (sub.empty()) throw CLI::RequiredError("a subcommand");
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    msg << "usage error: " << e.what() << "\n";
    if (!sub.empty() || !group.empty()) msg << "expected request: " << valrank::api::request_schema(group + "." + sub) << "\n";
    msg << "run with --help for the command list\n";
    emit(msg.str(), true);
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  json result{{"status", "ok"}, {"command", group + " " + sub}};
  int exit_code = 0;
  std::string op;
  try {
    auto [name, request] = build_request(group, sub, o);
    op = name;
    valrank::api::Response r = valrank::api::run(op, request);
    result["payload"] = std::move(r.payload);
    json diag{{"warnings", r.warnings}};
    if (o.timing)
      diag["timing_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    result["diagnostics"] = diag;
  } catch (const valrank::Error& e) {
    result["status"] = "error";
    result["error"] = json{{"code", std::string(valrank::error_code_name(e.code()))}, {"message", e.message()}};
    if (e.code() == valrank::ErrorCode::ParseError && !op.empty())
      result["error"]["expected"] = valrank::api::request_schema(op);
    exit_code = 1;
  }

  std::ostringstream out;
  if (o.as_json) {
    out << result.dump(2) << "\n";
  } else if (exit_code == 0) {
    render(out, result["payload"], "");
    for (const auto& w : result["diagnostics"]["warnings"]) out << "warning: " << w.get<std::string>() << "\n";
    if (o.timing) out << "time: " << result["diagnostics"]["timing_ms"].get<double>() << " ms\n";
  } else {
    out << "error [" << result["error"]["code"].get<std::string>() << "]: " << result["error"]["message"].get<std::string>()
        << "\n";
  }
  emit(out.str(), exit_code != 0 && !o.as_json);
  return exit_code;
}
