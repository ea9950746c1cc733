#include "vcalc/coeffring/poly.hpp"

#include <algorithm>

#include "vcalc/errors.hpp"

namespace vcalc {

bool Poly::is_real() const {
  return std::all_of(c_.begin(), c_.end(), [](const auto& c) { return c.is_real(); });
}

Poly Poly::monic() const {
  if (is_zero() || lead().is_one()) return *this;
  return scaled(lead().inverse());
}

Poly Poly::derivative() const {
  std::vector<GaussRational> d;
  for (std::size_t n = 1; n < c_.size(); ++n) d.push_back(c_[n] * GaussRational(static_cast<long>(n)));
  return Poly(std::move(d));
}

Poly Poly::scaled(const GaussRational& s) const {
  if (s.is_zero()) return {};
  std::vector<GaussRational> out(c_);
  for (auto& c : out) c *= s;
  return Poly(std::move(out));
}

GaussRational Poly::eval(const GaussRational& x) const {
  GaussRational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<double> Poly::eval(std::complex<double> x) const {
  std::complex<double> acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_complex();
  return acc;
}

Poly& Poly::operator+=(const Poly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t n = 0; n < o.c_.size(); ++n) c_[n] += o.c_[n];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t n = 0; n < o.c_.size(); ++n) c_[n] -= o.c_[n];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussRational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(out));
}

int compare(const Poly& a, const Poly& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size() ? -1 : 1;
  for (std::size_t n = a.c_.size(); n-- > 0;) {
    if (int c = compare(a.c_[n], b.c_[n]); c != 0) return c;
  }
  return 0;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& n, const Poly& d) {
  if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (n.degree() < d.degree()) return {Poly{}, n};
  std::vector<GaussRational> q(n.c_.size() - d.c_.size() + 1);
  std::vector<GaussRational> r(n.c_);
  const GaussRational inv_lead = d.lead().inverse();
  for (std::size_t i = q.size(); i-- > 0;) {
    GaussRational t = r[i + d.c_.size() - 1] * inv_lead;
    if (t.is_zero()) continue;
    for (std::size_t j = 0; j < d.c_.size(); ++j) r[i + j] -= t * d.c_[j];
    q[i] = std::move(t);
  }
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly Poly::pow(unsigned e) const {
  Poly out(1);
  Poly base = *this;
  while (e != 0) {
    if (e & 1U) out *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return out;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t n = 0; n < c_.size(); ++n) {
    const GaussRational& c = c_[n];
    if (c.is_zero()) continue;
    std::string cs = c.to_string();
    bool negative = c.is_atomic_text() && cs[0] == '-';
    if (negative) cs.erase(0, 1);
    if (!s.empty() || negative) s += negative ? "-" : "+";
    if (n == 0) {
      s += cs;
      continue;
    }
    if (cs != "1") s += cs + "*";
    s += "k";
    if (n > 1) s += "^" + std::to_string(n);
  }
  return s;
}

bool Poly::is_atomic_text() const {
  int nonzero = 0;
  for (const auto& c : c_) nonzero += c.is_zero() ? 0 : 1;
  if (nonzero > 1) return false;
  if (nonzero == 0) return true;
  return lead().is_atomic_text();
}

}  // namespace vcalc
