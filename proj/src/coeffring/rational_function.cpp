#include "vcalc/coeffring/rational_function.hpp"

#include "vcalc/errors.hpp"

namespace vcalc {

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (!den_.is_constant()) {
    Poly g = Poly::gcd(num_, den_);
    if (!g.is_one()) {
      num_ = Poly::divmod(num_, g).first;
      den_ = Poly::divmod(den_, g).first;
    }
  }
  if (!den_.lead().is_one()) {
    GaussRational s = den_.lead().inverse();
    num_ = num_.scaled(s);
    den_ = den_.scaled(s);
  }
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero rational function");
  return {den_, num_};
}

GaussRational RationalFunction::eval(const GaussRational& k0) const {
  GaussRational d = den_.eval(k0);
  if (d.is_zero()) throw EvaluationPole("pole of " + to_string() + " at k = " + k0.to_string());
  return num_.eval(k0) / d;
}

std::complex<double> RationalFunction::eval(std::complex<double> k0) const {
  std::complex<double> d = den_.eval(k0);
  if (d == 0.0) throw EvaluationPole("pole of " + to_string());
  return num_.eval(k0) / d;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_one()) normalize();
    else if (num_.is_zero()) den_ = Poly(1);
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RationalFunction();
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  // Cross-cancel before multiplying; both operands are already reduced.
  Poly g1 = Poly::gcd(num_, o.den_);
  Poly g2 = Poly::gcd(o.num_, den_);
  Poly n1 = g1.is_one() ? num_ : Poly::divmod(num_, g1).first;
  Poly d2 = g1.is_one() ? o.den_ : Poly::divmod(o.den_, g1).first;
  Poly n2 = g2.is_one() ? o.num_ : Poly::divmod(o.num_, g2).first;
  Poly d1 = g2.is_one() ? den_ : Poly::divmod(den_, g2).first;
  num_ = n1 * n2;
  den_ = d1 * d2;
  if (!den_.lead().is_one()) {
    GaussRational s = den_.lead().inverse();
    num_ = num_.scaled(s);
    den_ = den_.scaled(s);
  }
  return *this;
}

std::string RationalFunction::to_string() const {
  std::string n = num_.to_string();
  if (den_.is_one()) return n;
  if (!num_.is_atomic_text()) n = "(" + n + ")";
  std::string d = den_.to_string();
  if (!den_.is_atomic_text() || d.find('/') != std::string::npos || d.find('*') != std::string::npos) {
    d = "(" + d + ")";
  }
  return n + "/" + d;
}

}  // namespace vcalc
