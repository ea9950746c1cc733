#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "vcalc/coeffring/gauss_rational.hpp"

namespace vcalc {

// Dense univariate polynomial in the level k over Q(i). coeffs()[n] multiplies k^n;
// there is never a zero leading coefficient, and the zero polynomial is empty.
class Poly {
 public:
  Poly() = default;
  Poly(long c) : Poly(GaussRational(c)) {}  // NOLINT(google-explicit-constructor)
  Poly(GaussRational c) {                   // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) c_.push_back(std::move(c));
  }
  explicit Poly(std::vector<GaussRational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly k() { return Poly(std::vector<GaussRational>{0, 1}); }

  const std::vector<GaussRational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_real() const;
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const GaussRational& lead() const { return c_.back(); }
  GaussRational coeff(std::size_t n) const { return n < c_.size() ? c_[n] : GaussRational(); }
  GaussRational constant() const { return coeff(0); }

  Poly monic() const;
  Poly derivative() const;
  Poly scaled(const GaussRational& s) const;

  GaussRational eval(const GaussRational& x) const;
  std::complex<double> eval(std::complex<double> x) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) { return a.scaled(GaussRational(-1)); }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  friend int compare(const Poly& a, const Poly& b);

  // Euclidean division; throws DivisionByZero when d is zero.
  static std::pair<Poly, Poly> divmod(const Poly& n, const Poly& d);
  // Monic gcd (zero only when both inputs are zero).
  static Poly gcd(Poly a, Poly b);
  Poly pow(unsigned e) const;

  // Ascending-power text: "1+5*k+6*k^2", "(1+i)*k".
  std::string to_string() const;
  // Whether to_string() is a single product and needs no parentheses as a factor.
  bool is_atomic_text() const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<GaussRational> c_;
};

}  // namespace vcalc
