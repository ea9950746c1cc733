#include "vcalc/vertexcore/calculus.hpp"

#include <stdexcept>

#include "vcalc/errors.hpp"

namespace vcalc {
namespace {

Scalar binomial(unsigned n, unsigned m) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, m);
  return GaussRational(mpq_class(out));
}

Scalar factorial(unsigned n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return GaussRational(mpq_class(out));
}

Scalar reciprocal(long n) { return Scalar::rational(1, n); }

Monomial tail(const Monomial& m) { return Monomial(m.begin() + 1, m.end()); }

}  // namespace

void Calculus::clear_caches() {
  deriv_cache_.clear();
  nop_factor_cache_.clear();
  nop_cache_.clear();
  br_factor_cache_.clear();
  br_base_cache_.clear();
  br_cache_.clear();
}

std::size_t Calculus::cache_size() const {
  return deriv_cache_.size() + nop_factor_cache_.size() + nop_cache_.size() + br_factor_cache_.size() +
         br_base_cache_.size() + br_cache_.size();
}

// ---------------------------------------------------------------------------
// Derivatives

State Calculus::factor_derivative(Factor x, unsigned n) {
  if (n == 0) return State(Monomial{x});
  if (const State* rule = alg_->derivative_rule(x.gen)) return derivative(*rule, n - 1);
  return State(Monomial{{x.gen, x.nder + n}});
}

const State& Calculus::deriv_mono(const Monomial& m) {
  if (auto it = deriv_cache_.find(m); it != deriv_cache_.end()) return it->second;
  State out;
  if (m.size() == 1) {
    out = factor_derivative(m[0], 1);
  } else if (!m.empty()) {
    // ∂:a B: = :(∂a)B: + :a(∂B):
    const Monomial rest = tail(m);
    out = normal_order(factor_derivative(m[0], 1), rest);
    out += normal_order(m[0], deriv_mono(rest));
  }
  return deriv_cache_.emplace(m, std::move(out)).first->second;
}

State Calculus::derivative(const State& a, unsigned n) {
  State cur = a;
  for (unsigned step = 0; step < n && !cur.is_zero(); ++step) {
    State next;
    for (const auto& [m, c] : cur.terms()) next += c * deriv_mono(m);
    cur = std::move(next);
  }
  return cur;
}

// ---------------------------------------------------------------------------
// Normal ordering

State Calculus::normal_order(Factor x, const State& b) {
  State out;
  for (const auto& [m, c] : b.terms()) out += c * nop_factor(x, m);
  return out;
}

State Calculus::normal_order(const State& a, const Monomial& b) {
  State out;
  for (const auto& [m, c] : a.terms()) out += c * nop_mono(m, b);
  return out;
}

State Calculus::normal_order(const State& a, const State& b) {
  State out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) out += (ca * cb) * nop_mono(ma, mb);
  }
  return out;
}

State Calculus::commutator_integral(const LambdaPolynomial& p) {
  State out;
  for (std::size_t j = 0; j < p.coeffs().size(); ++j) {
    if (p.coeffs()[j].is_zero()) continue;
    Scalar c = reciprocal(static_cast<long>(j + 1));
    if (j % 2 == 1) c = -c;
    out += c * derivative(p.coeffs()[j], static_cast<unsigned>(j + 1));
  }
  return out;
}

const State& Calculus::nop_factor(Factor x, const Monomial& b) {
  auto key = std::make_pair(x, b);
  if (auto it = nop_factor_cache_.find(key); it != nop_factor_cache_.end()) return it->second;

  State out;
  const bool x_odd = alg_->is_odd(x);
  if (b.empty() || x < b[0] || (x == b[0] && !x_odd)) {
    Monomial m;
    m.reserve(b.size() + 1);
    m.push_back(x);
    m.insert(m.end(), b.begin(), b.end());
    out = State(std::move(m));
  } else {
    if (alg_->generator(x.gen).charged && alg_->is_charged(b)) {
      throw UnsupportedChargePair("normal ordering of two charged factors");
    }
    const Factor b1 = b[0];
    const Monomial rest = tail(b);
    const LambdaPolynomial p = br_factor(x, b1);
    const State correction = commutator_integral(p);

    const bool charged = alg_->generator(x.gen).charged || alg_->generator(b1.gen).charged;
    if (!charged) {
      // Rewriting must strictly decrease (factor count, generator weight).
      const mpq_class pair_weight = alg_->generator(x.gen).weight + alg_->generator(b1.gen).weight;
      for (const auto& [m, c] : correction.terms()) {
        mpq_class w = 0;
        for (const auto& f : m) w += alg_->generator(f.gen).weight;
        if (m.size() >= 2 && w >= pair_weight) {
          throw std::logic_error("normal-ordering measure did not decrease for generator " +
                                 alg_->generator(x.gen).name);
        }
      }
    }

    if (x == b1) {
      // :x:xB:: = 1/2 :(∫_{-∂}^0 [x_λ x]) B: for odd x
      out = reciprocal(2) * normal_order(correction, rest);
    } else {
      const Scalar sign = (x_odd && alg_->is_odd(b1)) ? Scalar(-1) : Scalar(1);
      State inner = nop_factor(x, rest);
      out = sign * normal_order(b1, inner);
      out += normal_order(correction, rest);
    }
  }
  return nop_factor_cache_.emplace(std::move(key), std::move(out)).first->second;
}

const State& Calculus::nop_mono(const Monomial& a, const Monomial& b) {
  if (a.size() == 1) return nop_factor(a[0], b);
  auto key = std::make_pair(a, b);
  if (auto it = nop_cache_.find(key); it != nop_cache_.end()) return it->second;

  State out;
  if (a.empty()) {
    out = State(b);
  } else if (b.empty()) {
    out = State(a);
  } else {
    const Factor a1 = a[0];
    const Monomial rest = tail(a);
    const State rest_state(rest);
    out = normal_order(a1, nop_mono(rest, b));

    // :(∫_0^∂ dλ a1)[rest_λ b]:
    const LambdaPolynomial r = br_mono(rest, b);
    for (std::size_t j = 0; j < r.coeffs().size(); ++j) {
      if (r.coeffs()[j].is_zero()) continue;
      State d = reciprocal(static_cast<long>(j + 1)) * factor_derivative(a1, static_cast<unsigned>(j + 1));
      out += normal_order(d, r.coeffs()[j]);
    }
    // (-1)^{a1 rest} :(∫_0^∂ dλ rest)[a1_λ b]:
    const LambdaPolynomial s = br_mono(Monomial{a1}, b);
    const Scalar sign = (alg_->is_odd(a1) && alg_->is_odd(rest)) ? Scalar(-1) : Scalar(1);
    for (std::size_t j = 0; j < s.coeffs().size(); ++j) {
      if (s.coeffs()[j].is_zero()) continue;
      State d = (sign * reciprocal(static_cast<long>(j + 1))) * derivative(rest_state, static_cast<unsigned>(j + 1));
      out += normal_order(d, s.coeffs()[j]);
    }
  }
  return nop_cache_.emplace(std::move(key), std::move(out)).first->second;
}

// ---------------------------------------------------------------------------
// λ-brackets

LambdaPolynomial Calculus::substitute_minus_lambda_minus_d(const LambdaPolynomial& p) {
  // (-λ-∂)^n Y = (-1)^n Σ_m C(n,m) λ^{n-m} ∂^m Y
  LambdaPolynomial out;
  for (std::size_t n = 0; n < p.coeffs().size(); ++n) {
    const State& y = p.coeffs()[n];
    if (y.is_zero()) continue;
    State dy = y;
    for (std::size_t m = 0; m <= n; ++m) {
      if (m > 0) dy = derivative(dy);
      if (dy.is_zero()) break;
      Scalar c = binomial(static_cast<unsigned>(n), static_cast<unsigned>(m));
      if (n % 2 == 1) c = -c;
      out.add(n - m, c * dy);
    }
  }
  return out;
}

LambdaPolynomial Calculus::skew(const LambdaPolynomial& p, bool a_odd, bool b_odd) {
  LambdaPolynomial out = substitute_minus_lambda_minus_d(p);
  out *= (a_odd && b_odd) ? Scalar(1) : Scalar(-1);
  return out;
}

const LambdaPolynomial& Calculus::br_base(std::uint32_t a, std::uint32_t b) {
  if (const LambdaPolynomial* direct = alg_->base_bracket(a, b)) return *direct;
  auto key = std::make_pair(a, b);
  if (auto it = br_base_cache_.find(key); it != br_base_cache_.end()) return it->second;
  LambdaPolynomial out;
  if (const LambdaPolynomial* reverse = alg_->base_bracket(b, a)) {
    out = skew(*reverse, alg_->generator(a).odd, alg_->generator(b).odd);
  } else if (alg_->generator(a).charged && alg_->generator(b).charged) {
    throw UnsupportedChargePair("bracket between charged generators " + alg_->generator(a).name + " and " +
                                alg_->generator(b).name);
  } else if (!alg_->unlisted_brackets_vanish()) {
    throw UnknownBracket("no bracket declared for " + alg_->generator(a).name + ", " + alg_->generator(b).name);
  }
  return br_base_cache_.emplace(key, std::move(out)).first->second;
}

const LambdaPolynomial& Calculus::br_factor(Factor x, Factor y) {
  if (x.nder == 0 && y.nder == 0) return br_base(x.gen, y.gen);
  auto key = std::make_pair(x, y);
  if (auto it = br_factor_cache_.find(key); it != br_factor_cache_.end()) return it->second;
  LambdaPolynomial p = br_base(x.gen, y.gen);
  // [a_λ ∂b] = (λ+∂)[a_λ b]
  for (std::uint32_t step = 0; step < y.nder; ++step) {
    LambdaPolynomial next;
    for (std::size_t j = 0; j < p.coeffs().size(); ++j) {
      next.add(j + 1, p.coeffs()[j]);
      next.add(j, derivative(p.coeffs()[j]));
    }
    p = std::move(next);
  }
  // [∂a_λ b] = -λ[a_λ b]
  if (x.nder > 0) {
    std::vector<State> shifted(x.nder);
    for (const auto& c : p.coeffs()) shifted.push_back(x.nder % 2 == 1 ? -c : c);
    p = LambdaPolynomial(std::move(shifted));
  }
  return br_factor_cache_.emplace(key, std::move(p)).first->second;
}

LambdaPolynomial Calculus::bracket(const State& a, const Monomial& b) {
  LambdaPolynomial out;
  for (const auto& [m, c] : a.terms()) out += c * br_mono(m, b);
  return out;
}

LambdaPolynomial Calculus::bracket(const State& a, const State& b) {
  LambdaPolynomial out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) out += (ca * cb) * br_mono(ma, mb);
  }
  return out;
}

const LambdaPolynomial& Calculus::br_mono(const Monomial& a, const Monomial& b) {
  static const LambdaPolynomial zero;
  if (a.empty() || b.empty()) return zero;
  if (a.size() == 1 && b.size() == 1) return br_factor(a[0], b[0]);
  auto key = std::make_pair(a, b);
  if (auto it = br_cache_.find(key); it != br_cache_.end()) return it->second;

  LambdaPolynomial out;
  if (b.size() == 1) {
    // Generator on the right: flip to the left Wick formula.
    const LambdaPolynomial flipped = br_mono(b, a);
    out = skew(flipped, alg_->is_odd(a), alg_->is_odd(b));
  } else {
    const Factor b1 = b[0];
    const Monomial rest = tail(b);
    const LambdaPolynomial p = br_mono(a, Monomial{b1});
    for (std::size_t j = 0; j < p.coeffs().size(); ++j) {
      const State& pj = p.coeffs()[j];
      if (pj.is_zero()) continue;
      out.add(j, normal_order(pj, rest));
      // ∫_0^λ [[a_λ b1]_μ rest] dμ
      const LambdaPolynomial t = bracket(pj, rest);
      for (std::size_t n = 0; n < t.coeffs().size(); ++n) {
        out.add(j + n + 1, reciprocal(static_cast<long>(n + 1)) * t.coeffs()[n]);
      }
    }
    const LambdaPolynomial r = br_mono(a, rest);
    const Scalar sign = (alg_->is_odd(a) && alg_->is_odd(b1)) ? Scalar(-1) : Scalar(1);
    for (std::size_t j = 0; j < r.coeffs().size(); ++j) {
      if (r.coeffs()[j].is_zero()) continue;
      out.add(j, sign * normal_order(b1, r.coeffs()[j]));
    }
  }
  return br_cache_.emplace(std::move(key), std::move(out)).first->second;
}

State Calculus::nth_product(const State& a, int n, const State& b) {
  if (n >= 0) return factorial(static_cast<unsigned>(n)) * bracket(a, b).coeff(static_cast<std::size_t>(n));
  const auto m = static_cast<unsigned>(-n - 1);
  if (m == 0) return normal_order(a, b);
  return normal_order(factorial(m).inverse() * derivative(a, m), b);
}

}  // namespace vcalc
