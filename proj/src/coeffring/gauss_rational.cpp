#include "vcalc/coeffring/gauss_rational.hpp"

#include "vcalc/errors.hpp"

namespace vcalc {

GaussRational GaussRational::inverse() const {
  const mpq_class n = norm();
  if (sgn(n) == 0) throw DivisionByZero("inverse of zero in Q(i)");
  return {re_ / n, -im_ / n};
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string GaussRational::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string imag;
  if (im_ == 1) {
    imag = "i";
  } else if (im_ == -1) {
    imag = "-i";
  } else {
    imag = im_.get_str() + "*i";
  }
  if (sgn(re_) == 0) return imag;
  return "(" + re_.get_str() + (sgn(im_) > 0 ? "+" : "") + imag + ")";
}

}  // namespace vcalc
