#include "vcalc/errors.hpp"
#include "vcalc/reduction/reduction.hpp"

namespace vcalc {

namespace {

struct FullStates {
  State J_e1_f12, J_f2, J_f1122, G, L, W, U;
};

FullStates evaluate_full(Calculus& calc, const ReducedAlgebraSetup& setup) {
  const auto& fs = full_formulas();
  FullStates s;
  s.J_e1_f12 = evaluate_formula(calc, setup, formula(fs, "J^{\\{e_1-f_{12}\\}}"));
  s.J_f2 = evaluate_formula(calc, setup, formula(fs, "J^{\\{f_2\\}}"));
  s.J_f1122 = evaluate_formula(calc, setup, formula(fs, "J^{\\{f_{1122}\\}}"));
  s.G = evaluate_formula(calc, setup, formula(fs, "G"));
  s.L = evaluate_formula(calc, setup, formula(fs, "L"));
  s.W = evaluate_formula(calc, setup, formula(fs, "W"));
  s.U = evaluate_formula(calc, setup, formula(fs, "U"));
  return s;
}

bool mentions_non_cartan(const std::string& product) {
  return product.find("J^{(e") != std::string::npos || product.find("J^{(f") != std::string::npos;
}

}  // namespace

GeneratorQuadruple build_generators(const ReducedAlgebraSetup& setup) {
  GeneratorQuadruple q;
  q.mode = setup.mode;
  q.algebra = setup.algebra;
  Calculus calc(setup.algebra);

  FullStates s;
  if (setup.mode == RealizationMode::Full) {
    s = evaluate_full(calc, setup);
  } else {
    const ReducedAlgebraSetup full = build_setup(RealizationMode::Full);
    Calculus full_calc(full.algebra);
    const FullStates f = evaluate_full(full_calc, full);
    const VertexAlgebra& fa = *full.algebra;
    for (auto [dst, src] : {std::pair{&s.J_e1_f12, &f.J_e1_f12}, {&s.J_f2, &f.J_f2}, {&s.J_f1122, &f.J_f1122},
                            {&s.G, &f.G}, {&s.L, &f.L}, {&s.W, &f.W}, {&s.U, &f.U}})
      *dst = project_to_cartan(*src, fa, calc);
    q.notes.push_back("free-field generators are the image of the full formulas under g_<= -> g_0");
  }
  q.J_e1_f12 = s.J_e1_f12;
  q.J_f2 = s.J_f2;
  q.J_f1122 = s.J_f1122;
  q.G = s.G;
  q.L = s.L;
  q.W = s.W;
  q.U = s.U;

  q.a = parse_scalar("2/sqrt(-1-2*k)");
  q.a1 = parse_scalar("2*sqrt(1-2*k)*sqrt(5+8*k)/(5+18*k+16*k^2)");
  q.a2 = parse_scalar("(2+8*k)/(2*k-1)") * q.a1;

  if (!(q.G == q.a * q.J_e1_f12)) throw FormulaError("G differs from a J^{e_1-f_12}");
  if (!(q.W == q.a1 * q.J_f2 + q.a2 * q.J_f1122))
    throw FormulaError("W differs from a1 J^{f_2} + a2 J^{f_1122}; residual " +
                       format_state(*q.algebra, q.W - (q.a1 * q.J_f2 + q.a2 * q.J_f1122)));
  // L is defined as (1/2) G_(0)G; the printed formula is kept for comparison.
  q.L_printed = q.L;
  q.L = Scalar::rational(1, 2) * calc.nth_product(q.G, 0, q.G);
  if (!(q.L == q.L_printed)) {
    q.L_residual = q.L_printed - q.L;
    q.notes.push_back("the printed L differs from (1/2) G_(0)G by " + format_state(*q.algebra, q.L_residual) +
                      "; L is taken as (1/2) G_(0)G");
  }

  const State gw = calc.nth_product(q.G, 0, q.W);
  if (gw == -q.U) {
    q.U = -q.U;
    q.u_sign = -1;
    q.notes.push_back("sign flip: the transcribed U equals -G_(0)W, so U is negated to make [G_λW] = U "
        "(equivalently, the other branch of sqrt(-1-2k) in a)");
  }
  return q;
}

std::vector<std::string> audit_printed_free_field() {
  std::vector<std::string> out;
  const ReducedAlgebraSetup full = build_setup(RealizationMode::Full);
  Calculus calc(full.algebra);
  for (const Formula& printed : printed_free_field_formulas()) {
    const Formula& source = formula(full_formulas(), printed.name);
    std::vector<std::string> issues;
    if (printed.prefactor != source.prefactor) issues.push_back("prefactor differs");
    for (const auto& t : printed.terms) {
      if (mentions_non_cartan(t.product)) {
        issues.push_back("keeps " + t.product + ", which contains a current outside g_0");
        continue;
      }
      const FormulaTerm* src = source.find(t.product);
      const Scalar printed_c = t.coeff.empty() ? Scalar(1) : parse_scalar(t.coeff);
      const Scalar source_c = src == nullptr ? Scalar() : (src->coeff.empty() ? Scalar(1) : parse_scalar(src->coeff));
      if (printed_c != source_c)
        issues.push_back(t.product + " has coefficient " + printed_c.to_string() + ", projection gives " +
                         source_c.to_string());
    }
    for (const auto& t : source.terms) {
      if (!mentions_non_cartan(t.product) && printed.find(t.product) == nullptr)
        issues.push_back("drops " + t.product);
    }
    // The term-level comparison above is cross-checked on normal forms.
    const State printed_state = evaluate_formula(calc, full, printed, false);
    const State source_state = evaluate_formula(calc, full, source, false);
    State projected;
    for (const auto& [m, c] : source_state.terms()) {
      bool cartan = true;
      for (const auto& f : m)
        if (mentions_non_cartan(full.algebra->generator(f.gen).name)) cartan = false;
      if (cartan) projected.add(m, c);
    }
    const State diff = printed_state - projected;
    if (issues.empty() != diff.is_zero())
      issues.push_back("normal-form difference: " + format_state(*full.algebra, diff));
    if (issues.empty()) {
      out.push_back(printed.name + ": printed free-field formula matches the projection");
    } else {
      std::string line = printed.name + ": printed free-field formula differs from the projection:";
      for (std::size_t i = 0; i < issues.size(); ++i) line += (i ? "; " : " ") + issues[i];
      out.push_back(line);
    }
  }
  return out;
}

}  // namespace vcalc
