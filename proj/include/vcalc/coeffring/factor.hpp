#pragma once

#include <utility>
#include <vector>

#include <gmpxx.h>

#include "vcalc/coeffring/poly.hpp"

namespace vcalc {

// Integer polynomial, ascending powers of k.
using IntPoly = std::vector<mpz_class>;

struct RationalFactorization {
  mpq_class content;
  // Primitive irreducible factors over Q, each with a positive lowest-order nonzero
  // coefficient, sorted by (degree, coefficients).
  std::vector<std::pair<IntPoly, unsigned>> factors;
};

// Complete factorization over Q of a nonzero polynomial with rational coefficients:
// p = content * prod f^m. Throws std::invalid_argument for non-real or zero input.
RationalFactorization factor_over_q(const Poly& p);

// Prime factorization of a positive integer by trial division.
std::vector<std::pair<mpz_class, unsigned>> factor_integer(mpz_class n);

Poly to_poly(const IntPoly& p);
int compare(const IntPoly& a, const IntPoly& b);

}  // namespace vcalc
