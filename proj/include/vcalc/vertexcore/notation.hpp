#pragma once

#include <map>
#include <string>
#include <string_view>

#include "vcalc/vertexcore/calculus.hpp"

namespace vcalc {

// Text notation for states, close to the usual typeset form:
//   J^{(f_2)} + {-1/2} :\Phi_{12}J^{(e_1)}: + {(1+4*k)/2} \partial J^{(h_2)} + {c/12} |0>
// Coefficients are scalar expressions in braces; :...: is a right-nested normally
// ordered product; \partial and \partial^{n} prefix a factor; |0> is the vacuum.
std::string format_monomial(const VertexAlgebra& alg, const Monomial& m);
std::string format_state(const VertexAlgebra& alg, const State& s);
// "λ^3: {1/2}|0>; λ^1: ...; λ^0: ..." in decreasing powers, "0" when zero.
std::string format_lambda(const VertexAlgebra& alg, const LambdaPolynomial& p);

// Named states usable as factors in addition to the generators (e.g. dual fermions).
using Aliases = std::map<std::string, State, std::less<>>;

// Parses the notation above, normal ordering every product. Throws ParseError.
State parse_state(Calculus& calc, std::string_view text, const Aliases& aliases = {},
                  const std::map<std::string, Scalar>& symbols = {});

}  // namespace vcalc
