#include "vcalc/coeffring/scalar.hpp"

#include <algorithm>
#include <stdexcept>

#include "vcalc/errors.hpp"

namespace vcalc {
namespace {

// Product of two radical keys: the symmetric difference, with the shared radicands
// multiplied out into the rational factor.
RadicalKey multiply_keys(const RadicalKey& a, const RadicalKey& b, Poly& squared) {
  RadicalKey out;
  squared = Poly(1);
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && *ia < *ib)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || *ib < *ia) {
      out.push_back(*ib++);
    } else {
      squared *= ia->value();
      ++ia;
      ++ib;
    }
  }
  return out;
}

bool contains(const RadicalKey& key, const Radicand& r) {
  for (const auto& x : key) {
    if (x == r) return true;
  }
  return false;
}

RadicalKey without(const RadicalKey& key, const Radicand& r) {
  RadicalKey out;
  for (const auto& x : key) {
    if (!(x == r)) out.push_back(x);
  }
  return out;
}

}  // namespace

std::string Radicand::to_string() const { return "sqrt(" + value().to_string() + ")"; }

Scalar Scalar::rational(long num, long den) {
  mpq_class q(num, den);
  q.canonicalize();
  return GaussRational(q);
}

Scalar Scalar::sqrt(const RationalFunction& f) {
  if (f.is_zero()) return {};
  if (!f.is_real()) throw std::invalid_argument("square root of a non-real rational function");
  // sqrt(n/d) = sqrt(n*d)/d
  Poly nd = f.num() * f.den();
  RationalFactorization fac = factor_over_q(nd);

  RationalFunction rational_part(Poly(1), f.den());
  RadicalKey key;
  for (const auto& [factor, mult] : fac.factors) {
    Poly base = to_poly(factor);
    if (mult / 2 > 0) rational_part *= RationalFunction(base.pow(mult / 2));
    if (mult % 2 == 1) key.push_back(Radicand{factor});
  }
  // Content p/q: sqrt(p/q) = sqrt(p*q)/q, then square parts of p*q are pulled out.
  mpq_class content = fac.content;
  bool negative = sgn(content) < 0;
  mpz_class pq = abs(content.get_num()) * content.get_den();
  mpz_class outside = 1;
  for (const auto& [prime, mult] : factor_integer(pq)) {
    for (unsigned n = 0; n < mult / 2; ++n) outside *= prime;
    if (mult % 2 == 1) key.push_back(Radicand{IntPoly{prime}});
  }
  mpq_class scale(outside, content.get_den());
  scale.canonicalize();
  rational_part *= RationalFunction(GaussRational(scale, 0));
  if (negative) rational_part *= RationalFunction(GaussRational::i());
  std::sort(key.begin(), key.end());

  Scalar out;
  out.terms_.emplace(std::move(key), std::move(rational_part));
  return out;
}

bool Scalar::is_one() const { return is_rational() && !is_zero() && terms_.begin()->second.is_one(); }

RationalFunction Scalar::as_rational() const {
  if (!is_rational()) throw std::logic_error("scalar has radicals: " + to_string());
  return is_zero() ? RationalFunction() : terms_.begin()->second;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  for (const auto& [key, value] : o.terms_) {
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(key, value);
      continue;
    }
    it->second += value;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar out;
  if (a.is_zero() || b.is_zero()) return out;
  if (a.is_rational() && b.is_rational()) {
    out.terms_.emplace(RadicalKey{}, a.terms_.begin()->second * b.terms_.begin()->second);
    return out;
  }
  for (const auto& [ka, va] : a.terms_) {
    for (const auto& [kb, vb] : b.terms_) {
      Poly squared;
      RadicalKey key = multiply_keys(ka, kb, squared);
      RationalFunction v = va * vb;
      if (!squared.is_one()) v *= RationalFunction(squared);
      auto it = out.terms_.find(key);
      if (it == out.terms_.end()) {
        out.terms_.emplace(std::move(key), std::move(v));
      } else {
        it->second += v;
        if (it->second.is_zero()) out.terms_.erase(it);
      }
    }
  }
  return out;
}

Scalar operator-(Scalar a) {
  for (auto& [key, value] : a.terms_) value = -value;
  return a;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero scalar");
  if (terms_.size() == 1) {
    const auto& [key, value] = *terms_.begin();
    // 1/(f * r_1...r_n) = r_1...r_n / (f * p_1...p_n)
    RationalFunction denom = value;
    for (const auto& r : key) denom *= RationalFunction(r.value());
    Scalar out;
    out.terms_.emplace(key, denom.inverse());
    return out;
  }
  // Split on one radicand r: s = A + B*r, 1/s = (A - B*r) / (A^2 - B^2 * p).
  const Radicand r = [&] {
    for (const auto& [key, value] : terms_) {
      if (!key.empty()) return key.front();
    }
    throw std::logic_error("unreachable");
  }();
  Scalar a, b;
  for (const auto& [key, value] : terms_) {
    if (contains(key, r)) {
      b.terms_.emplace(without(key, r), value);
    } else {
      a.terms_.emplace(key, value);
    }
  }
  Scalar root;
  root.terms_.emplace(RadicalKey{r}, RationalFunction(1));
  Scalar norm = a * a - b * b * Scalar(r.value());
  return (a - b * root) * norm.inverse();
}

std::complex<double> Scalar::eval(const GaussRational& k0, const Branch& branch) const {
  std::complex<double> acc = 0;
  for (const auto& [key, value] : terms_) {
    std::complex<double> t = value.eval(k0).to_complex();
    for (const auto& r : key) {
      std::complex<double> root = std::sqrt(r.value().eval(k0).to_complex());
      auto it = branch.signs.find(r);
      if (it != branch.signs.end() && it->second < 0) root = -root;
      t *= root;
    }
    acc += t;
  }
  return acc;
}

std::complex<double> Scalar::eval(std::complex<double> k0, const Branch& branch) const {
  std::complex<double> acc = 0;
  for (const auto& [key, value] : terms_) {
    std::complex<double> t = value.eval(k0);
    for (const auto& r : key) {
      std::complex<double> root = std::sqrt(r.value().eval(k0));
      auto it = branch.signs.find(r);
      if (it != branch.signs.end() && it->second < 0) root = -root;
      t *= root;
    }
    acc += t;
  }
  return acc;
}

std::string Scalar::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (const auto& [key, value] : terms_) {
    std::string term = value.to_string();
    if (!key.empty()) {
      // The rational factor stays one parenthesized unit unless it is a bare product.
      const bool wrap = !value.is_polynomial() || !value.num().is_atomic_text();
      if (term == "1") {
        term.clear();
      } else if (term == "-1") {
        term = "-";
      } else if (wrap) {
        term = "(" + term + ")*";
      } else {
        term += "*";
      }
      for (std::size_t n = 0; n < key.size(); ++n) term += (n ? "*" : "") + key[n].to_string();
    }
    if (out.empty()) {
      out = term;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

}  // namespace vcalc
