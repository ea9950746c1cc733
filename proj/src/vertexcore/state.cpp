#include "vcalc/vertexcore/state.hpp"

namespace vcalc {

Scalar State::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

void State::add(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

State& State::operator+=(const State& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

State& State::operator-=(const State& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

State& State::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (s.is_one()) return *this;
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

State State::map_coefficients(const std::function<Scalar(const Scalar&)>& f) const {
  State out;
  for (const auto& [m, c] : terms_) out.add(m, f(c));
  return out;
}

const State& LambdaPolynomial::coeff(std::size_t j) const {
  static const State zero;
  return j < c_.size() ? c_[j] : zero;
}

void LambdaPolynomial::add(std::size_t j, const State& s) {
  if (s.is_zero()) return;
  if (c_.size() <= j) c_.resize(j + 1);
  c_[j] += s;
  trim();
}

LambdaPolynomial& LambdaPolynomial::operator+=(const LambdaPolynomial& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] += o.c_[j];
  trim();
  return *this;
}

LambdaPolynomial& LambdaPolynomial::operator-=(const LambdaPolynomial& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] -= o.c_[j];
  trim();
  return *this;
}

LambdaPolynomial& LambdaPolynomial::operator*=(const Scalar& s) {
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

void LambdaPolynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

}  // namespace vcalc
