#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "vcalc/reduction/report.hpp"
#include "vcalc/superlie/superlie.hpp"
#include "vcalc/vertexcore/notation.hpp"

namespace vcalc {

enum class RealizationMode { Full, FreeField };

std::string to_string(RealizationMode mode);
// "full", "free" or "free_field"; throws UsageError otherwise.
RealizationMode parse_mode(std::string_view text);

// V_{k+1/2}(g_<=) (x) F(g_{1/2}) in full mode, V_{k+1/2}(h) (x) F(g_{1/2}) in
// free-field mode. Currents J^{(v)} have weight 1 - deg(v); the neutral
// fermions \Phi_{-1} = f_{1}, \Phi_{12} = e_{12} have weight 1/2 and bracket
// <a|b> = (f|[a,b]).
struct ReducedAlgebraSetup {
  RealizationMode mode = RealizationMode::Full;
  LieAlgebraPtr lie;
  GradedDecomposition grading;
  nlohmann::json declaration;  // vertexcore configuration the algebra was loaded from
  AlgebraPtr algebra;
  // Dual fermions \Phi^{-1}, \Phi^{12} and the spellings J^{(h_1)}, J^{(h_2)},
  // J^{(e_1)}, J^{(f_2)} used in printed formulas.
  Aliases aliases;
};

// Basis of g_<= in the order used for the currents.
const std::vector<std::string>& lower_basis();
// Fermion names paired with the basis element they come from.
const std::vector<std::pair<std::string, std::string>>& fermion_basis();

// `declaration_override` replaces the generated declaration (e.g. an
// alternative cocycle); it is validated by the vertexcore loader.
ReducedAlgebraSetup build_setup(RealizationMode mode,
                                const std::optional<nlohmann::json>& declaration_override = std::nullopt);

// Gram matrix <Φ_i|Φ_j> and the dual basis coefficients (rows: Φ^{-1}, Φ^{12}).
std::vector<std::vector<mpq_class>> fermion_gram(const SuperLieAlgebra& g);
std::vector<std::vector<mpq_class>> fermion_duals(const SuperLieAlgebra& g);

// A transcribed formula: prefactor * (sum of terms). Coefficients are scalar
// text; an empty coefficient means 1.
struct FormulaTerm {
  std::string coeff;
  std::string product;
};

struct Formula {
  std::string name;
  std::string prefactor;
  mpq_class weight;
  std::vector<FormulaTerm> terms;

  std::string body_text() const;  // notation accepted by parse_state
  const FormulaTerm* find(std::string_view product) const;
};

// Full-mode formulas: J^{\{e_1-f_{12}\}}, J^{\{f_2\}}, J^{\{f_{1122}\}}, G, L, W, U.
const std::vector<Formula>& full_formulas();
// The printed free-field G, L, W, U (used for the transcription audit only).
const std::vector<Formula>& printed_free_field_formulas();
const Formula& formula(const std::vector<Formula>& set, std::string_view name);

// Evaluates a formula in the setup's algebra. Throws FormulaError when the
// result is not homogeneous of the declared weight.
State evaluate_formula(Calculus& calc, const ReducedAlgebraSetup& setup, const Formula& f,
                       bool with_prefactor = true);

// Image of a full-mode state under g_<= -> g_0: terms containing J^{(e)} or
// J^{(f)} currents vanish.
State project_to_cartan(const State& full, const VertexAlgebra& full_alg, Calculus& free_calc);

struct GeneratorQuadruple {
  RealizationMode mode = RealizationMode::Full;
  AlgebraPtr algebra;
  State G, L, W, U;
  State J_e1_f12, J_f2, J_f1122;
  Scalar a, a1, a2;
  State L_printed;   // transcribed L
  State L_residual;  // L_printed - (1/2) G_(0)G
  int u_sign = 1;  // -1 when the transcribed U had to be negated to make [G_λW] = U
  std::vector<std::string> notes;
};

// Full mode transcribes the printed formulas; free-field mode projects them.
// L is (1/2) G_(0)G by definition; a printed L that disagrees is recorded in
// L_residual and the notes. Throws FormulaError on weight mismatches or when
// G != a J^{e_1-f_12} or W != a1 J^{f_2} + a2 J^{f_1122}.
GeneratorQuadruple build_generators(const ReducedAlgebraSetup& setup);

// Terms where the printed free-field formulas differ from the projection of the
// full formulas, one human-readable line per generator.
std::vector<std::string> audit_printed_free_field();

// ---- SW(3/2,2) targets --------------------------------------------------

struct TargetFactor {
  char symbol;  // G, L, W or U
  unsigned nder = 0;
};

struct TargetTerm {
  unsigned lambda_power = 0;
  std::string coeff_text;  // in terms of c
  Scalar coeff;            // with c = 6+18k
  std::vector<TargetFactor> product;  // right-nested; empty = vacuum
};

struct TargetBracket {
  char left, right;
  std::string display;  // e.g. "(∂+4λ)W"
  std::vector<TargetTerm> terms;
  std::string name() const;  // "[G_λU]"
};

using TargetBracketTable = std::vector<TargetBracket>;

Scalar central_charge();  // 6+18k
// Symbols for scalar text in target coefficients: c -> 6+18k.
const std::map<std::string, Scalar>& target_symbols();

// [L_λL], [L_λG], [G_λG], [G_λW], [G_λU], [W_λW], [W_λU], [U_λU].
TargetBracketTable sw32_targets();
// [L_λG], [L_λW], [L_λU] as primary fields of weight 3/2, 2, 5/2.
TargetBracketTable primary_targets();
std::string format_target(const TargetBracket& t);
// Target text of one λ-power, e.g. "{2}L + {2*κ}W"; "0" when absent.
std::string format_target_power(const TargetBracket& t, unsigned power);
const State& quad_field(const GeneratorQuadruple& q, char symbol);

LambdaPolynomial expand_target(const TargetBracket& t, const GeneratorQuadruple& quad, Calculus& calc);

// ---- verification -------------------------------------------------------

// Each identity runs on its own thread with its own Calculus; the report order
// is fixed. threads = 0 picks the hardware concurrency.
VerificationReport verify_brackets(const GeneratorQuadruple& quad, const TargetBracketTable& targets,
                                   unsigned threads = 0);
VerificationReport verify_sw32(const GeneratorQuadruple& quad, const TargetBracketTable& targets,
                               unsigned threads = 0);
// [L_λX] = (∂ + Δλ)X for X = G, W, U and G_(j)W = 0 for j = 1, 2, 3.
VerificationReport verify_primary(const GeneratorQuadruple& quad, unsigned threads = 0);

// Radicands and denominators that must not vanish at a numeric level.
const std::vector<std::string>& degenerate_expressions();
// "k = 1/3", "c = 12" lines for a report evaluated at k0. Throws
// EvaluationPole naming the expression when k0 is a degenerate level.
std::vector<std::string> specialization_header(const GaussRational& k0);
// Evaluates the target coefficients of `targets` at k0 and records one entry per
// identity: finite values, exact ring vs floating-point text agreement.
VerificationReport evaluate_targets_at(const TargetBracketTable& targets, const GaussRational& k0,
                                       double tolerance = 1e-12);

// Evaluates every target coefficient at k = 1/3 both through the exact ring
// and directly in floating point from the c-form text; checks c = 12 and the
// radicands 1-2k, 5+8k, 1+2k, 1+3k.
VerificationReport spin7_instance(double tolerance = 1e-12);

// ---- osp(3|2) data ---------------------------------------------------------

// Expected ad x eigenspaces by degree, as basis names.
const std::vector<std::pair<mpq_class, std::vector<std::string>>>& osp32_eigenspace_table();
// Integrity, eigenspace table, centralizer dimensions, h^vee and the fermion pairing.
VerificationReport liealg_suite();

// Floating-point value of scalar text with c substituted numerically.
std::complex<double> eval_text_numeric(const std::string& text, double c);

}  // namespace vcalc
