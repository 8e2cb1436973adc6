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

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "exactreal/closure/complex.hpp"
#include "exactreal/linalg/matrix.hpp"
#include "exactreal/pde/solver.hpp"

namespace exactreal::cli {

using json = nlohmann::json;

/// Rational literal: "-3/7", "5" or a JSON integer.
Rational parse_rational(const json& j);
/// Array of rational literals, constant term first.
QPoly parse_poly(const json& j);
/// Rational literal, {"poly": [...], "root": k}, {"sqrt": x} or one of the
/// expression forms {"add": [...]}, {"mul": [...]}, {"sub": [a, b]},
/// {"div": [a, b]}, {"neg": a}.
AlgebraicReal parse_algebraic(const json& j);
/// Algebraic literal or {"re": x, "im": y}.
AlgebraicComplex parse_complex(const json& j);
Matrix<AlgebraicReal> parse_matrix(const json& j);
Matrix<AlgebraicComplex> parse_complex_matrix(const json& j);
/// Polynomial in x1..xm: array of {"coef": rational, "exp": [e1, ..., em]}.
MPoly parse_mpoly(const json& j, std::size_t vars);
/// Problem record {m, n, A, B, phi, f?, M, a, options?}.
HyperbolicProblem parse_problem(const json& j);

/// Parses JSON text, mapping syntax errors to InputError.
json parse_json_text(const std::string& text);

/// Output formatting: exact literals by default, decimals with `digits`.
struct Printer {
  std::optional<int> digits;

  json rational(const Rational& r) const;
  json real(const AlgebraicReal& x) const;
  json complex(const AlgebraicComplex& z) const;
  json field(const NFElem& x) const;
  json poly(const QPoly& p) const;
  json vector(const std::vector<AlgebraicReal>& v) const;
  json matrix(const Matrix<AlgebraicReal>& m) const;
  json matrix(const Matrix<AlgebraicComplex>& m) const;
};

/// Decimal text of a field element rounded to `digits` places.
std::string decimal(const NFElem& x, int digits);

/// Runs one subcommand.  Returns 0 on success, 2 on input errors and 3 on
/// failed mathematical preconditions; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace exactreal::cli
