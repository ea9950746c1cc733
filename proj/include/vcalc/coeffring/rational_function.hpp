#pragma once

#include <complex>
#include <string>

#include "vcalc/coeffring/poly.hpp"

namespace vcalc {

// Element of Q(i)(k) as num/den with den monic and gcd(num, den) = 1, so equal
// values have identical representations. Zero is 0/1.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(long c) : num_(c), den_(1) {}                       // NOLINT
  RationalFunction(GaussRational c) : num_(std::move(c)), den_(1) {}   // NOLINT
  RationalFunction(Poly p) : num_(std::move(p)), den_(1) {}            // NOLINT
  RationalFunction(Poly num, Poly den);

  static RationalFunction k() { return Poly::k(); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  bool is_real() const { return num_.is_real() && den_.is_real(); }

  RationalFunction inverse() const;

  // Exact evaluation; throws EvaluationPole when the denominator vanishes.
  GaussRational eval(const GaussRational& k0) const;
  std::complex<double> eval(std::complex<double> k0) const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend RationalFunction operator-(RationalFunction a) {
    a.num_ = -a.num_;
    return a;
  }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  // "(1+2*k)/(1-2*k)"; polynomials print without a denominator.
  std::string to_string() const;

 private:
  void normalize();
  Poly num_;
  Poly den_;
};

}  // namespace vcalc
