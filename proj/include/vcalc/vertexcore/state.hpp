#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "vcalc/coeffring/scalar.hpp"

namespace vcalc {

// ∂^nder applied to generator number gen. Generators are numbered in canonical
// order, so comparing factors compares (weight, name, derivative count).
struct Factor {
  std::uint32_t gen = 0;
  std::uint32_t nder = 0;

  friend auto operator<=>(const Factor&, const Factor&) = default;
};

// Right-nested normally ordered product :f_1 :f_2 ( ... f_n):: ; empty = vacuum.
using Monomial = std::vector<Factor>;

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (const auto& f : m) {
      h ^= (static_cast<std::size_t>(f.gen) << 8) ^ f.nder;
      h *= 0x100000001b3ULL;
    }
    return h;
  }
};

// Finite Scalar-linear combination of canonical monomials; never stores zeros.
class State {
 public:
  State() = default;
  static State vacuum() { return State(Monomial{}, Scalar(1)); }
  explicit State(Monomial m, Scalar c = Scalar(1)) {
    if (!c.is_zero()) terms_.emplace(std::move(m), std::move(c));
  }
  static State generator(std::uint32_t gen, std::uint32_t nder = 0) { return State(Monomial{{gen, nder}}); }

  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  // Coefficient of m (zero when absent).
  Scalar coeff(const Monomial& m) const;

  void add(const Monomial& m, const Scalar& c);
  State& operator+=(const State& o);
  State& operator-=(const State& o);
  State& operator*=(const Scalar& s);

  friend State operator+(State a, const State& b) { return a += b; }
  friend State operator-(State a, const State& b) { return a -= b; }
  friend State operator-(State a) { return a *= Scalar(-1); }
  friend State operator*(const Scalar& s, State a) { return a *= s; }
  friend State operator*(State a, const Scalar& s) { return a *= s; }
  friend bool operator==(const State& a, const State& b) { return a.terms_ == b.terms_; }

  // Applies f to every coefficient, dropping the ones that become zero.
  State map_coefficients(const std::function<Scalar(const Scalar&)>& f) const;

 private:
  std::map<Monomial, Scalar> terms_;
};

// Polynomial in λ with State coefficients: the value of a λ-bracket.
class LambdaPolynomial {
 public:
  LambdaPolynomial() = default;
  explicit LambdaPolynomial(std::vector<State> coeffs) : c_(std::move(coeffs)) { trim(); }

  const std::vector<State>& coeffs() const { return c_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const State& coeff(std::size_t j) const;

  void add(std::size_t j, const State& s);
  LambdaPolynomial& operator+=(const LambdaPolynomial& o);
  LambdaPolynomial& operator-=(const LambdaPolynomial& o);
  LambdaPolynomial& operator*=(const Scalar& s);
  friend LambdaPolynomial operator+(LambdaPolynomial a, const LambdaPolynomial& b) { return a += b; }
  friend LambdaPolynomial operator-(LambdaPolynomial a, const LambdaPolynomial& b) { return a -= b; }
  friend LambdaPolynomial operator*(const Scalar& s, LambdaPolynomial a) { return a *= s; }
  friend bool operator==(const LambdaPolynomial& a, const LambdaPolynomial& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<State> c_;
};

}  // namespace vcalc
