#include "vcalc/coeffring/factor.hpp"

#include <algorithm>
#include <stdexcept>

namespace vcalc {
namespace {

void trim(IntPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

int degree(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

mpz_class content_of(const IntPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) g = gcd(g, c);
  return g;
}

// Primitive integer multiple of a rational polynomial, and the rational scale s with p = s * result.
std::pair<IntPoly, mpq_class> make_primitive(const Poly& p) {
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) l = lcm(l, c.re().get_den());
  IntPoly out;
  for (const auto& c : p.coeffs()) {
    mpq_class v = c.re() * l;
    out.push_back(v.get_num());
  }
  mpz_class g = content_of(out);
  for (auto& c : out) c /= g;
  mpq_class scale(g, l);
  scale.canonicalize();
  return {out, scale};
}

// Exact division of integer polynomials; returns false when b does not divide a over Z.
bool exact_divide(const IntPoly& a, const IntPoly& b, IntPoly& q) {
  if (degree(a) < degree(b)) return false;
  IntPoly r = a;
  q.assign(a.size() - b.size() + 1, 0);
  for (std::size_t i = q.size(); i-- > 0;) {
    const mpz_class& top = r[i + b.size() - 1];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.back().get_mpz_t())) return false;
    mpz_class t = top / b.back();
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] -= t * b[j];
    q[i] = t;
  }
  return std::all_of(r.begin(), r.end(), [](const mpz_class& c) { return sgn(c) == 0; });
}

mpz_class eval_int(const IntPoly& p, const mpz_class& x) {
  mpz_class acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

void normalize_sign(IntPoly& p, mpq_class& content) {
  for (const auto& c : p) {
    if (sgn(c) == 0) continue;
    if (sgn(c) < 0) {
      for (auto& x : p) x = -x;
      content = -content;
    }
    return;
  }
}

// Lagrange interpolation through (xs, ys) with rational arithmetic; degree < xs.size().
std::vector<mpq_class> interpolate(const std::vector<mpz_class>& xs, const std::vector<mpz_class>& ys) {
  const std::size_t n = xs.size();
  std::vector<mpq_class> out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<mpq_class> basis{1};
    mpq_class denom = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      std::vector<mpq_class> next(basis.size() + 1, 0);
      for (std::size_t t = 0; t < basis.size(); ++t) {
        next[t + 1] += basis[t];
        next[t] -= basis[t] * xs[j];
      }
      basis = std::move(next);
      denom *= mpq_class(xs[i] - xs[j]);
    }
    for (std::size_t t = 0; t < basis.size(); ++t) out[t] += basis[t] * ys[i] / denom;
  }
  return out;
}

// Kronecker's method: a nontrivial factor of degree d of the squarefree primitive f, if any.
bool kronecker_factor(const IntPoly& f, int d, IntPoly& factor) {
  std::vector<mpz_class> xs;
  std::vector<std::vector<mpz_class>> choices;
  for (long x = 0; static_cast<int>(xs.size()) < d + 1; x = x > 0 ? -x : -x + 1) {
    mpz_class v = eval_int(f, x);
    if (sgn(v) == 0) continue;
    xs.emplace_back(x);
    std::vector<mpz_class> divs;
    for (const auto& dv : positive_divisors(v)) {
      divs.push_back(dv);
      divs.push_back(-dv);
    }
    choices.push_back(std::move(divs));
  }
  std::vector<std::size_t> idx(xs.size(), 0);
  while (true) {
    std::vector<mpz_class> ys;
    for (std::size_t i = 0; i < xs.size(); ++i) ys.push_back(choices[i][idx[i]]);
    auto g = interpolate(xs, ys);
    bool integral = std::all_of(g.begin(), g.end(), [](const mpq_class& c) { return c.get_den() == 1; });
    if (integral) {
      IntPoly cand;
      for (const auto& c : g) cand.push_back(c.get_num());
      trim(cand);
      IntPoly q;
      if (degree(cand) == d && exact_divide(f, cand, q)) {
        factor = cand;
        return true;
      }
    }
    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] == choices[i].size()) idx[i++] = 0;
    if (i == idx.size()) return false;
  }
}

// Irreducible factors of a squarefree primitive integer polynomial of positive degree.
void split_squarefree(IntPoly f, std::vector<IntPoly>& out) {
  if (degree(f) <= 0) return;
  if (sgn(f[0]) == 0) {
    out.push_back({0, 1});
    f.erase(f.begin());
    trim(f);
  }
  // Linear factors from the rational root theorem.
  bool found = true;
  while (found && degree(f) >= 2) {
    found = false;
    for (const auto& p : positive_divisors(f[0])) {
      for (const auto& q : positive_divisors(f.back())) {
        for (int s : {1, -1}) {
          IntPoly lin{-s * p, q};
          if (gcd(p, q) != 1) continue;
          IntPoly quo;
          if (exact_divide(f, lin, quo)) {
            out.push_back(lin);
            f = quo;
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
  }
  if (degree(f) <= 3) {
    if (degree(f) >= 1) out.push_back(f);
    return;
  }
  for (int d = 2; d <= degree(f) / 2; ++d) {
    IntPoly g;
    if (kronecker_factor(f, d, g)) {
      IntPoly q;
      exact_divide(f, g, q);
      split_squarefree(g, out);
      split_squarefree(q, out);
      return;
    }
  }
  out.push_back(f);
}

}  // namespace

Poly to_poly(const IntPoly& p) {
  std::vector<GaussRational> c;
  for (const auto& x : p) c.emplace_back(mpq_class(x));
  return Poly(std::move(c));
}

int compare(const IntPoly& a, const IntPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t n = a.size(); n-- > 0;) {
    if (int c = cmp(a[n], b[n]); c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

RationalFactorization factor_over_q(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("factorization of the zero polynomial");
  if (!p.is_real()) throw std::invalid_argument("factorization over Q needs rational coefficients");
  auto [prim, scale] = make_primitive(p);
  RationalFactorization result{scale, {}};
  if (degree(prim) == 0) {
    result.content *= prim[0];
    return result;
  }
  // The squarefree kernel has the same irreducible factors.
  Poly pp = to_poly(prim);
  Poly g = Poly::gcd(pp, pp.derivative());
  IntPoly kernel = make_primitive(Poly::divmod(pp, g).first).first;
  std::vector<IntPoly> irreducible;
  split_squarefree(kernel, irreducible);

  IntPoly rest = prim;
  for (auto& f : irreducible) {
    unsigned m = 0;
    IntPoly q;
    while (exact_divide(rest, f, q)) {
      rest = q;
      ++m;
    }
    mpq_class sign = 1;
    normalize_sign(f, sign);
    if (sgn(sign) < 0 && (m % 2) == 1) result.content = -result.content;
    result.factors.emplace_back(f, m);
  }
  trim(rest);
  if (degree(rest) != 0) throw std::logic_error("incomplete factorization");
  result.content *= rest[0];
  std::sort(result.factors.begin(), result.factors.end(),
            [](const auto& a, const auto& b) { return compare(a.first, b.first) < 0; });
  return result;
}

std::vector<std::pair<mpz_class, unsigned>> factor_integer(mpz_class n) {
  std::vector<std::pair<mpz_class, unsigned>> out;
  n = abs(n);
  for (mpz_class p = 2; p * p <= n; ++p) {
    unsigned m = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      n /= p;
      ++m;
    }
    if (m != 0) out.emplace_back(p, m);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

}  // namespace vcalc
