#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "vcalc/coeffring/factor.hpp"
#include "vcalc/coeffring/rational_function.hpp"

namespace vcalc {

// A formal square root symbol r_p. p is either a prime number (degree 0) or a
// primitive integer polynomial, irreducible over Q, whose lowest-order nonzero
// coefficient is positive. Square roots of negative quantities are written with i.
struct Radicand {
  IntPoly poly;

  Poly value() const { return to_poly(poly); }
  std::string to_string() const;

  friend bool operator==(const Radicand& a, const Radicand& b) { return a.poly == b.poly; }
  friend bool operator<(const Radicand& a, const Radicand& b) { return compare(a.poly, b.poly) < 0; }
};

// Sorted product of distinct radicands; the empty key is the rational part.
using RadicalKey = std::vector<Radicand>;

// Sign choice per radicand when evaluating numerically; missing entries are +1,
// i.e. the principal square root of the radicand's value.
struct Branch {
  std::map<Radicand, int> signs;
};

// Element of Q(i)(k)[r_p ...]: sum of rational functions times products of
// distinct radicands. Immutable value type; the representation is canonical, so
// a value is zero iff it has no terms and equality is structural.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long c) : Scalar(RationalFunction(c)) {}                 // NOLINT
  Scalar(GaussRational c) : Scalar(RationalFunction(std::move(c))) {}  // NOLINT
  Scalar(Poly p) : Scalar(RationalFunction(std::move(p))) {}      // NOLINT
  Scalar(RationalFunction f) {                                    // NOLINT
    if (!f.is_zero()) terms_.emplace(RadicalKey{}, std::move(f));
  }
  static Scalar rational(long num, long den);
  static Scalar k() { return RationalFunction::k(); }
  static Scalar i() { return GaussRational::i(); }
  // Square root of a rational function with rational coefficients, normalized:
  // square factors and content are extracted, negative signs become i.
  static Scalar sqrt(const RationalFunction& f);

  const std::map<RadicalKey, RationalFunction>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
  // The radical-free part when is_rational(), else throws std::logic_error.
  RationalFunction as_rational() const;

  Scalar inverse() const;

  std::complex<double> eval(const GaussRational& k0, const Branch& branch = {}) const;
  std::complex<double> eval(std::complex<double> k0, const Branch& branch = {}) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(Scalar a);
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // Canonical text, e.g. "(2+4*k)/(1-2*k)*sqrt(1-2*k)*sqrt(5+8*k) + 3". Parses back
  // with parse_scalar() to an equal value.
  std::string to_string() const;

 private:
  std::map<RadicalKey, RationalFunction> terms_;
};

// Parser for the text form: integers, k, i, sqrt(...), + - * / ^, parentheses,
// plus any extra named symbols. Throws ParseError.
Scalar parse_scalar(const std::string& text, const std::map<std::string, Scalar>& symbols = {});

}  // namespace vcalc
