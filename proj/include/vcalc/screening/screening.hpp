#pragma once

#include <string>
#include <vector>

#include "vcalc/reduction/reduction.hpp"

namespace vcalc {

// Level-one currents b_i = ν J^{(h_i)} with ν = 1/√(k+1/2), so [b_i λ b_j] = λ a_ij.
struct RescaledHeisenberg {
  Scalar nu;
  std::vector<State> b;                        // b_1, b_2 in the free-field algebra
  std::vector<std::vector<mpq_class>> cartan;  // a_ij = (h_i|h_j)
};

RescaledHeisenberg rescaled_heisenberg(const VertexAlgebra& free_alg, const SuperLieAlgebra& g);

// Polynomial part times Γ_α. The charge is the element of h (coordinates in
// h_1, h_2, level-one normalization) identified with α through the form.
// `state` lives in the charged algebra; every term ends with the Γ factor.
struct ChargedState {
  std::vector<Scalar> charge;
  State state;
};

// A free-field algebra extended by one charged generator Γ with
//   [J^{(h_i)} λ Γ] = p_i Γ,  [Φ λ Γ] = 0,  ∂Γ = :β Γ:,
// where p_i = (h_i|charge)/ν and β = Σ_m charge_m b_m.
struct ScreeningOperator {
  std::string name;
  AlgebraPtr algebra;
  std::string gamma_name;
  std::vector<Scalar> pairing;  // p_i
  ChargedState op;
  bool odd = false;
};

// Printed: Q_1 = :Φ_{-1} Γ_{α_1/ν}:, Q_2 = Γ_{-α_2/ν}, read literally with b = νJ.
// Adapted: Q_β = :Φ_β Γ_{-νβ}: for the two simple roots of the positive system on
// which x is non-negative, β = -α_1 (fermion Φ_{-1}) and β = α_1+α_2 (fermion Φ_{12}).
// Only the adapted pair annihilates the generators; see kernel_suite.
enum class ScreeningConvention { Printed, Adapted };
std::string to_string(ScreeningConvention c);
ScreeningConvention parse_screening_convention(const std::string& text);  // throws UsageError

// Roots are identified with elements of h by solving against the Cartan Gram matrix.
// Returns h_β for the root of the named basis vector.
std::vector<mpq_class> root_in_cartan(const SuperLieAlgebra& g, const std::string& root_vector);

ScreeningOperator screening_q1(const VertexAlgebra& free_alg, const SuperLieAlgebra& g,
                               ScreeningConvention conv = ScreeningConvention::Adapted);
ScreeningOperator screening_q2(const VertexAlgebra& free_alg, const SuperLieAlgebra& g,
                               ScreeningConvention conv = ScreeningConvention::Adapted);
// Γ_0 on its own: zero charge, behaves as the vacuum.
ScreeningOperator zero_charge(const VertexAlgebra& free_alg, const SuperLieAlgebra& g);
// Charged state with the given charge in h-coordinates and polynomial part `prefix`
// (a neutral state of the free-field algebra, vacuum for Γ alone).
ScreeningOperator charged_operator(const VertexAlgebra& free_alg, const SuperLieAlgebra& g, const std::string& name,
                                   const std::vector<Scalar>& charge, const State& prefix);

// Re-expresses a free-field state in the charged algebra.
State lift(const State& s, const VertexAlgebra& from, const VertexAlgebra& to);

// [a_λ x] for neutral a and charged x (both in the charged algebra). Throws
// UnsupportedChargePair when a carries a charged factor.
LambdaPolynomial charged_bracket(Calculus& calc, const State& a, const State& x);

// Q_(0)a for a neutral free-field state: the λ^0 coefficient of [Q_λ a], obtained
// by skew-symmetry from charged_bracket(a, Q). `calc` works on Q.algebra.
State zero_mode_apply(const ScreeningOperator& q, Calculus& calc, const State& a_free, const VertexAlgebra& free_alg);
// Same value computed directly as the λ^0 coefficient of [Q_λ a] (cross-check).
State zero_mode_direct(const ScreeningOperator& q, Calculus& calc, const State& a_free, const VertexAlgebra& free_alg);

// Q_(0)X = 0 for Q in {Q_1, Q_2} and X in {G, L, W, U}, plus controls Q_(0)b_i
// against their closed form -ν p_i Q.
VerificationReport kernel_suite(const GeneratorQuadruple& free_quad,
                                ScreeningConvention conv = ScreeningConvention::Adapted);

}  // namespace vcalc
