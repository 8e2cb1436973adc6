/*
   Copyright 2026 The exactreal Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "exactreal/cli/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"

#include "exactreal/closure/root_finding.hpp"
#include "exactreal/linalg/complex_linalg.hpp"
#include "exactreal/linalg/pencil.hpp"
#include "exactreal/roots/isolate.hpp"

namespace exactreal::cli {

namespace {

const json& field_of(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::size_t natural(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw InputError(std::string(what) + " must be a non-negative integer");
  return static_cast<std::size_t>(j.get<long long>());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return json(z.get_si());
  return json(z.get_str());
}

}  // namespace

// ---------------------------------------------------------------- parsing

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

Rational parse_rational(const json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long long>(j.get<long long>()));
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw InputError("expected a rational literal, got " + j.dump());
}

QPoly parse_poly(const json& j) {
  if (!j.is_array()) throw InputError("polynomial literal must be an array of rationals");
  std::vector<Rational> c;
  for (const auto& x : j) c.push_back(parse_rational(x));
  return QPoly(std::move(c));
}

AlgebraicReal parse_algebraic(const json& j) {
  if (j.is_number_integer() || j.is_string()) return AlgebraicReal(parse_rational(j));
  if (!j.is_object() || j.size() == 0) throw InputError("expected an algebraic literal, got " + j.dump());
  if (j.contains("poly")) {
    if (j.size() != 2 || !j.contains("root")) throw InputError("root literal needs exactly \"poly\" and \"root\"");
    const QPoly p = parse_poly(j.at("poly"));
    if (p.is_zero()) throw InputError("root literal has the zero polynomial");
    const auto r = AlgebraicReal::from_root_index(p, natural(j.at("root"), "root index"));
    if (!r) throw InputError("root index exceeds the number of real roots");
    return *r;
  }
  if (j.size() != 1) throw InputError("expected a single-key algebraic form, got " + j.dump());
  const auto& [key, arg] = *j.items().begin();
  auto list = [&](std::size_t min_len) {
    if (!arg.is_array() || arg.size() < min_len) throw InputError("\"" + key + "\" needs an array operand");
    std::vector<AlgebraicReal> v;
    for (const auto& x : arg) v.push_back(parse_algebraic(x));
    return v;
  };
  if (key == "sqrt") {
    const AlgebraicReal x = parse_algebraic(arg);
    if (x.sign() < 0) throw InputError("square root of a negative number");
    return sqrt(x);
  }
  if (key == "neg") return -parse_algebraic(arg);
  if (key == "add" || key == "mul") {
    const auto v = list(1);
    AlgebraicReal acc = v[0];
    for (std::size_t i = 1; i < v.size(); ++i) acc = key == "add" ? acc + v[i] : acc * v[i];
    return acc;
  }
  if (key == "sub" || key == "div") {
    const auto v = list(2);
    if (v.size() != 2) throw InputError("\"" + key + "\" takes two operands");
    if (key == "sub") return v[0] - v[1];
    if (v[1].sign() == 0) throw InputError("division by zero");
    return v[0] / v[1];
  }
  throw InputError("unknown algebraic form \"" + key + "\"");
}

AlgebraicComplex parse_complex(const json& j) {
  if (j.is_object() && (j.contains("re") || j.contains("im"))) {
    for (const auto& [k, v] : j.items())
      if (k != "re" && k != "im") throw InputError("unexpected field \"" + k + "\" in complex literal");
    const AlgebraicReal re = j.contains("re") ? parse_algebraic(j.at("re")) : AlgebraicReal(0);
    const AlgebraicReal im = j.contains("im") ? parse_algebraic(j.at("im")) : AlgebraicReal(0);
    return AlgebraicComplex(re, im);
  }
  return AlgebraicComplex(parse_algebraic(j));
}

namespace {

template <class F, class Parse>
Matrix<F> parse_matrix_with(const json& j, Parse parse) {
  if (!j.is_array() || j.empty()) throw InputError("matrix literal must be a non-empty array of rows");
  std::vector<std::vector<F>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw InputError("matrix rows must be arrays");
    std::vector<F> row;
    for (const auto& x : r) row.push_back(parse(x));
    rows.push_back(std::move(row));
  }
  return Matrix<F>::from_rows(rows);
}

}  // namespace

Matrix<AlgebraicReal> parse_matrix(const json& j) { return parse_matrix_with<AlgebraicReal>(j, parse_algebraic); }

Matrix<AlgebraicComplex> parse_complex_matrix(const json& j) {
  return parse_matrix_with<AlgebraicComplex>(j, parse_complex);
}

MPoly parse_mpoly(const json& j, std::size_t vars) {
  if (!j.is_array()) throw InputError("polynomial in x1..xm must be an array of terms");
  MPoly p(vars);
  for (const auto& t : j) {
    const json& e = field_of(t, "exp");
    if (!e.is_array() || e.size() != vars) throw InputError("term exponent must list one entry per variable");
    std::vector<unsigned> exps;
    for (const auto& x : e) exps.push_back(static_cast<unsigned>(natural(x, "exponent")));
    p.add_term(std::move(exps), parse_rational(field_of(t, "coef")));
  }
  return p;
}

HyperbolicProblem parse_problem(const json& j) {
  if (!j.is_object()) throw InputError("problem file must hold a JSON object");
  HyperbolicProblem p;
  p.m = natural(field_of(j, "m"), "m");
  p.n = natural(field_of(j, "n"), "n");
  p.A = parse_matrix(field_of(j, "A"));
  const json& b = field_of(j, "B");
  if (!b.is_array()) throw InputError("B must be an array of matrices");
  for (const auto& x : b) p.B.push_back(parse_matrix(x));
  const json& phi = field_of(j, "phi");
  if (!phi.is_array()) throw InputError("phi must be an array of polynomials");
  for (const auto& x : phi) p.phi.push_back(parse_mpoly(x, p.m));
  if (j.contains("f")) {
    if (!j.at("f").is_array()) throw InputError("f must be an array of polynomials");
    for (const auto& x : j.at("f")) p.f.push_back(parse_mpoly(x, p.m));
  }
  p.M = parse_rational(field_of(j, "M"));
  p.a = natural(field_of(j, "a"), "a");
  if (j.contains("options")) {
    const json& o = j.at("options");
    if (!o.is_object()) throw InputError("options must be an object");
    for (const auto& [k, v] : o.items()) {
      if (k == "cfl_factor") p.options.cfl_factor = parse_rational(v);
      else if (k == "c0") p.options.c0 = parse_rational(v);
      else if (k == "max_refine") p.options.max_refine = natural(v, "max_refine");
      else if (k == "start_n") p.options.start_n = natural(v, "start_n");
      else throw InputError("unknown option \"" + k + "\"");
    }
  }
  return p;
}

// ---------------------------------------------------------------- printing

std::string decimal(const NFElem& x, int digits) {
  if (x.is_rational()) return x.rational_value().to_decimal(digits);
  Rational tol = pow2(-4);
  for (int i = 0; i < digits; ++i) tol /= Rational(10);
  for (std::size_t level = 8;; level += 8) {
    const RInterval e = x.enclosure(level);
    if (e.width() <= tol) return e.mid().to_decimal(digits);
  }
}

json Printer::rational(const Rational& r) const {
  if (digits) return r.to_decimal(*digits);
  return r.to_string();
}

json Printer::real(const AlgebraicReal& x) const {
  if (digits) return x.to_decimal(*digits);
  if (x.is_rational()) return x.rational_value().to_string();
  const QPoly mp = x.minimal_polynomial();
  json p = json::array();
  for (const auto& c : mp.coefficients()) p.push_back(c.to_string());
  return json{{"poly", p}, {"root", x.root_index()}};
}

json Printer::complex(const AlgebraicComplex& z) const {
  if (z.is_real()) return real(z.re);
  return json{{"re", real(z.re)}, {"im", real(z.im)}};
}

json Printer::field(const NFElem& x) const {
  if (digits) return decimal(x, *digits);
  json c = json::array();
  for (const auto& r : x.rep().coefficients()) c.push_back(r.to_string());
  if (c.empty()) c.push_back("0");
  return c;
}

json Printer::poly(const QPoly& p) const {
  json c = json::array();
  for (const auto& r : p.coefficients()) c.push_back(rational(r));
  return c;
}

json Printer::vector(const std::vector<AlgebraicReal>& v) const {
  json a = json::array();
  for (const auto& x : v) a.push_back(real(x));
  return a;
}

json Printer::matrix(const Matrix<AlgebraicReal>& m) const {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vector(m.row(i)));
  return a;
}

json Printer::matrix(const Matrix<AlgebraicComplex>& m) const {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (const auto& z : m.row(i)) r.push_back(complex(z));
    a.push_back(std::move(r));
  }
  return a;
}

// ---------------------------------------------------------------- commands

namespace {

struct Args {
  std::optional<int> digits;
  std::string poly, eps = "1", value, a, b, matrix, problem_file, out_csv, exact_out, report_file;
  unsigned bits = 53;
  std::size_t terms = 10;
  bool complex = false, normal = false, with_k = false;
};

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

void cmd_isolate(const Args& a, const Printer& pr, std::ostream& out) {
  const QPoly p = parse_poly(parse_json_text(a.poly));
  if (p.is_zero()) throw InputError("the zero polynomial has no isolating intervals");
  const Rational eps = Rational::parse(a.eps);
  if (eps.sign() <= 0) throw InputError("eps must be positive");
  for (const auto& iv : isolate_real_roots(p, eps)) {
    out << pr.rational(iv.lo).get<std::string>() << " " << pr.rational(iv.hi).get<std::string>() << "\n";
  }
}

void cmd_roots(const Args& a, const Printer& pr, std::ostream& out) {
  const json lit = parse_json_text(a.poly);
  if (!lit.is_array()) throw InputError("polynomial literal must be an array");
  json res = json::array();
  if (a.complex) {
    std::vector<AlgebraicComplex> c;
    for (const auto& x : lit) c.push_back(parse_complex(x));
    const Poly<AlgebraicComplex> p(std::move(c));
    if (p.is_zero()) throw InputError("the zero polynomial has no root list");
    for (const auto& r : complex_roots_of(p)) res.push_back({{"value", pr.complex(r.value)}, {"multiplicity", r.multiplicity}});
  } else {
    std::vector<AlgebraicReal> c;
    for (const auto& x : lit) c.push_back(parse_algebraic(x));
    const Poly<AlgebraicReal> p(std::move(c));
    if (p.is_zero()) throw InputError("the zero polynomial has no root list");
    for (const auto& r : real_roots_of(p)) res.push_back({{"value", pr.real(r.value)}, {"multiplicity", r.multiplicity}});
  }
  emit(out, res);
}

void cmd_minpoly(const Args& a, const Printer& pr, std::ostream& out) {
  const AlgebraicReal x = parse_algebraic(parse_json_text(a.value));
  emit(out, json{{"minpoly", pr.poly(x.minimal_polynomial())}, {"value", pr.real(x)}});
}

void cmd_compare(const Args& a, std::ostream& out) {
  const AlgebraicReal x = parse_algebraic(parse_json_text(a.a));
  const AlgebraicReal y = parse_algebraic(parse_json_text(a.b));
  const auto c = compare(x, y);
  out << (c < 0 ? "lt" : (c > 0 ? "gt" : "eq")) << "\n";
}

void cmd_approx(const Args& a, std::ostream& out) {
  const AlgebraicReal x = parse_algebraic(parse_json_text(a.value));
  if (a.digits) out << x.to_decimal(*a.digits) << "\n";
  else out << x.approx(a.bits).to_string() << "\n";
}

void cmd_cfrac(const Args& a, std::ostream& out) {
  const AlgebraicReal x = parse_algebraic(parse_json_text(a.value));
  json r = json::array();
  for (const auto& z : continued_fraction(x, a.terms)) r.push_back(integer_json(z));
  out << r.dump() << "\n";
}

void cmd_eig(const Args& a, const Printer& pr, std::ostream& out) {
  const json lit = parse_json_text(a.matrix);
  if (a.normal) {
    const auto d = spectral_decomposition_normal(parse_complex_matrix(lit));
    json vals = json::array(), vecs = json::array();
    for (const auto& z : d.eigenvalues) vals.push_back(pr.complex(z));
    for (const auto& v : d.eigenvectors) {
      json col = json::array();
      for (const auto& z : v) col.push_back(pr.complex(z));
      vecs.push_back(std::move(col));
    }
    emit(out, json{{"eigenvalues", vals}, {"eigenvectors", vecs}});
    return;
  }
  const auto d = spectral_decomposition(parse_matrix(lit));
  json vecs = json::array();
  for (const auto& v : d.eigenvectors) vecs.push_back(pr.vector(v));
  emit(out, json{{"eigenvalues", pr.vector(d.eigenvalues)}, {"eigenvectors", vecs}});
}

void cmd_pencil(const Args& a, const Printer& pr, std::ostream& out) {
  const auto d = pencil_decomposition(parse_matrix(parse_json_text(a.a)), parse_matrix(parse_json_text(a.b)),
                                      PencilOptions{a.with_k});
  json t = json::array();
  for (const auto& c : d.t) t.push_back(pr.vector(c));
  json r{{"mu", pr.vector(d.mu)}, {"T_columns", t}, {"L", pr.matrix(d.L)}, {"D", pr.matrix(d.D)},
         {"lambda", pr.vector(d.lambda.eigenvalues)}};
  if (d.K) r["K"] = pr.matrix(*d.K);
  emit(out, r);
}

void cmd_jordan(const Args& a, const Printer& pr, std::ostream& out) {
  const JordanForm f = jordan_form(parse_complex_matrix(parse_json_text(a.matrix)));
  json blocks = json::array();
  for (const auto& b : f.blocks) blocks.push_back({{"eigenvalue", pr.complex(b.eigenvalue)}, {"size", b.size}});
  emit(out, json{{"blocks", blocks}, {"J", pr.matrix(f.J)}, {"C", pr.matrix(f.C)}});
}

std::string grid_csv(const GridFunction& g, int digits) {
  std::ostringstream os;
  os << "l,t";
  for (std::size_t i = 1; i <= g.m; ++i) os << ",i" << i;
  for (std::size_t i = 1; i <= g.m; ++i) os << ",x" << i;
  for (std::size_t k = 1; k <= g.n; ++k) os << ",u" << k;
  os << "\n";
  for (std::size_t l = 0; l < g.levels.size(); ++l) {
    const Rational t = g.tau * Rational(static_cast<long>(l));
    for (std::size_t f = 0; f < g.levels[l].size(); ++f) {
      os << l << "," << t.to_string();
      for (long k : g.multi_index(f)) os << "," << k + 1;
      for (const auto& x : g.center(f)) os << "," << x.to_string();
      for (const auto& v : g.levels[l][f]) os << "," << decimal(v, digits);
      os << "\n";
    }
  }
  return os.str();
}

json exact_dump(const GridFunction& g, const NFContext& ctx) {
  const Printer exact;
  json levels = json::array();
  for (const auto& lev : g.levels) {
    json cells = json::array();
    for (const auto& v : lev) {
      json comps = json::array();
      for (const auto& x : v) comps.push_back(exact.field(x));
      cells.push_back(std::move(comps));
    }
    levels.push_back(std::move(cells));
  }
  json r{{"N", g.N}, {"h", g.h.to_string()}, {"tau", g.tau.to_string()}, {"levels", levels}};
  if (ctx) {
    r["minpoly"] = exact.poly(ctx->minpoly());
    r["theta"] = exact.real(ctx->theta());
  } else {
    r["minpoly"] = json::array({"0", "1"});
    r["theta"] = "0";
  }
  return r;
}

void cmd_solve_pde(const Args& a, std::ostream& out) {
  const HyperbolicProblem p = parse_problem(parse_json_text(read_file(a.problem_file)));
  const SolveReport r = solve(p);
  const Printer exact;
  json history = json::array();
  for (const auto& [n, gap] : r.history) history.push_back({{"N", n}, {"gap", gap.to_string()}});
  json rep{{"status", r.status == SolveStatus::certified ? "certified" : "uncertified"},
           {"N", r.steps.N},
           {"h", r.steps.h.to_string()},
           {"tau", r.steps.tau.to_string()},
           {"L", r.steps.L},
           {"T", r.T.to_string()},
           {"error_target", r.error_target.to_string()},
           {"aposteriori_gap", r.aposteriori_gap ? json(r.aposteriori_gap->to_string()) : json(nullptr)},
           {"apriori_N", r.apriori_n},
           {"energy_stable", r.energy_stable},
           {"history", history}};
  const std::string text = rep.dump(2) + "\n";
  out << text;
  if (!a.report_file.empty()) write_file(a.report_file, text);
  if (!a.out_csv.empty()) write_file(a.out_csv, grid_csv(r.solution, a.digits.value_or(6)));
  if (!a.exact_out.empty()) {
    write_file(a.exact_out, exact_dump(r.solution, r.context).dump() + "\n");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact real algebraic computation and certified PDE solving"};
  app.require_subcommand(1);
  Args a;
  auto digits_opt = [&](CLI::App* s) {
    s->add_option("--digits", a.digits, "Print decimals with this many places instead of exact values")
        ->check(CLI::Range(0, 1000));
  };

  auto* isolate = app.add_subcommand("isolate", "Isolating intervals of the real roots of a rational polynomial");
  isolate->add_option("--poly", a.poly, "Coefficients, constant term first")->required();
  isolate->add_option("--eps", a.eps, "Maximal interval width");
  digits_opt(isolate);

  auto* roots = app.add_subcommand("roots", "Roots of a polynomial with algebraic coefficients");
  roots->add_option("--poly", a.poly, "Coefficients, constant term first")->required();
  roots->add_flag("--complex", a.complex, "List complex roots");
  digits_opt(roots);

  auto* minpoly = app.add_subcommand("minpoly", "Minimal polynomial of an algebraic number");
  minpoly->add_option("--value", a.value, "Algebraic literal or expression")->required();
  digits_opt(minpoly);

  auto* cmp = app.add_subcommand("compare", "Compare two algebraic numbers");
  cmp->add_option("--a", a.a, "First value")->required();
  cmp->add_option("--b", a.b, "Second value")->required();

  auto* approx = app.add_subcommand("approx", "Rational approximation within 2^-bits");
  approx->add_option("--value", a.value, "Algebraic literal or expression")->required();
  approx->add_option("--bits", a.bits, "Precision in bits");
  digits_opt(approx);

  auto* eig = app.add_subcommand("eig", "Spectral decomposition of a symmetric (or normal) matrix");
  eig->add_option("--matrix", a.matrix, "Matrix literal")->required();
  eig->add_flag("--normal", a.normal, "Treat the matrix as complex normal");
  digits_opt(eig);

  auto* pencil = app.add_subcommand("pencil", "Simultaneous diagonalization of a symmetric pencil");
  pencil->add_option("--a", a.a, "Positive definite matrix A")->required();
  pencil->add_option("--b", a.b, "Symmetric nondegenerate matrix B")->required();
  pencil->add_flag("--with-k", a.with_k, "Also output the factor K");
  digits_opt(pencil);

  auto* jordan = app.add_subcommand("jordan", "Jordan normal form");
  jordan->add_option("--matrix", a.matrix, "Matrix literal")->required();
  digits_opt(jordan);

  auto* pde = app.add_subcommand("solve-pde", "Certified solve of a symmetric hyperbolic Cauchy problem");
  pde->add_option("problem", a.problem_file, "Problem file")->required();
  pde->add_option("--out", a.out_csv, "Grid CSV output");
  pde->add_option("--exact-out", a.exact_out, "Exact grid dump output");
  pde->add_option("--report", a.report_file, "Report output");
  digits_opt(pde);

  auto* cfrac = app.add_subcommand("cfrac", "Canonical continued fraction");
  cfrac->add_option("--value", a.value, "Algebraic literal or expression")->required();
  cfrac->add_option("--terms", a.terms, "Number of partial quotients");

  std::vector<const char*> argv{"exactreal"};
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const Printer pr{a.digits};
  try {
    if (*isolate) cmd_isolate(a, pr, out);
    else if (*roots) cmd_roots(a, pr, out);
    else if (*minpoly) cmd_minpoly(a, pr, out);
    else if (*cmp) cmd_compare(a, out);
    else if (*approx) cmd_approx(a, out);
    else if (*eig) cmd_eig(a, pr, out);
    else if (*pencil) cmd_pencil(a, pr, out);
    else if (*jordan) cmd_jordan(a, pr, out);
    else if (*pde) cmd_solve_pde(a, out);
    else if (*cfrac) cmd_cfrac(a, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace exactreal::cli
