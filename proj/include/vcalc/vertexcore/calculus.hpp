#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>

#include "vcalc/vertexcore/algebra.hpp"

namespace vcalc {

// λ-bracket calculus over a VertexAlgebra. States are kept in the PBW normal form
// (right-nested products with non-decreasing factors, no repeated odd factor);
// every operation returns normal forms.
//
// Rewriting rules:
//   sesquilinearity  [∂a_λ b] = -λ[a_λ b],  [a_λ ∂b] = (λ+∂)[a_λ b]
//   skew-symmetry    [b_λ a] = -(-1)^{ab} [a_{-λ-∂} b]
//   left Wick        [a_λ :bc:] = :[a_λ b]c: + (-1)^{ab} :b[a_λ c]: + ∫_0^λ [[a_λ b]_μ c] dμ
//   quasi-assoc.     ::ab:c: = :a:bc:: + :(∫_0^∂ dλ a)[b_λ c]: + (-1)^{ab} :(∫_0^∂ dλ b)[a_λ c]:
//   exchange         :a:bc:: = (-1)^{ab} :b:ac:: + :(∫_{-∂}^0 [a_λ b] dλ) c:
// Integrals act termwise on λ-polynomials: ∫_{-∂}^0 λ^j dλ = (-1)^j ∂^{j+1}/(j+1), with
// ∂ applied to the λ^j coefficient; ∫_0^∂ dλ a turns λ^j into ∂^{j+1}a/(j+1).
//
// A Calculus memoizes intermediate results and is not thread-safe; use one per
// thread. The algebra it points to is shared and immutable.
class Calculus {
 public:
  explicit Calculus(AlgebraPtr algebra) : alg_(std::move(algebra)) {}

  const VertexAlgebra& algebra() const { return *alg_; }
  const AlgebraPtr& algebra_ptr() const { return alg_; }

  State derivative(const State& a, unsigned n = 1);
  State normal_order(const State& a, const State& b);
  LambdaPolynomial bracket(const State& a, const State& b);
  // a_(n)b: n! [λ^n][a_λ b] for n >= 0, :ab: for n = -1, :(∂^m a/m!) b: for n = -1-m.
  State nth_product(const State& a, int n, const State& b);

  // [a_λ b] from P = [b_λ a]; the parities are those of a and b.
  LambdaPolynomial skew(const LambdaPolynomial& p, bool a_odd, bool b_odd);
  // ∫_{-∂}^0 P(λ) dλ.
  State commutator_integral(const LambdaPolynomial& p);
  // Replaces λ by -λ-∂ (∂ acting on the coefficients).
  LambdaPolynomial substitute_minus_lambda_minus_d(const LambdaPolynomial& p);

  void clear_caches();
  std::size_t cache_size() const;

 private:
  const State& deriv_mono(const Monomial& m);
  const State& nop_factor(Factor x, const Monomial& b);
  const State& nop_mono(const Monomial& a, const Monomial& b);
  const LambdaPolynomial& br_base(std::uint32_t a, std::uint32_t b);
  const LambdaPolynomial& br_factor(Factor x, Factor y);
  const LambdaPolynomial& br_mono(const Monomial& a, const Monomial& b);

  State normal_order(Factor x, const State& b);
  State normal_order(const State& a, const Monomial& b);
  LambdaPolynomial bracket(const State& a, const Monomial& b);
  State factor_derivative(Factor x, unsigned n);

  struct PairHash {
    std::size_t operator()(const std::pair<Monomial, Monomial>& p) const noexcept {
      MonomialHash h;
      return h(p.first) * 31 + h(p.second);
    }
  };
  struct FactorMonoHash {
    std::size_t operator()(const std::pair<Factor, Monomial>& p) const noexcept {
      return MonomialHash{}(p.second) * 131 + (static_cast<std::size_t>(p.first.gen) << 16) + p.first.nder;
    }
  };
  struct FactorPairHash {
    std::size_t operator()(const std::pair<Factor, Factor>& p) const noexcept {
      return (static_cast<std::size_t>(p.first.gen) << 48) ^ (static_cast<std::size_t>(p.first.nder) << 32) ^
             (static_cast<std::size_t>(p.second.gen) << 16) ^ p.second.nder;
    }
  };

  AlgebraPtr alg_;
  std::unordered_map<Monomial, State, MonomialHash> deriv_cache_;
  std::unordered_map<std::pair<Factor, Monomial>, State, FactorMonoHash> nop_factor_cache_;
  std::unordered_map<std::pair<Monomial, Monomial>, State, PairHash> nop_cache_;
  std::unordered_map<std::pair<Factor, Factor>, LambdaPolynomial, FactorPairHash> br_factor_cache_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, LambdaPolynomial> br_base_cache_;
  std::unordered_map<std::pair<Monomial, Monomial>, LambdaPolynomial, PairHash> br_cache_;
};

}  // namespace vcalc
