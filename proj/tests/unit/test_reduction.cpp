#include <doctest.h>

#include <cmath>
#include <set>

#include "vcalc/errors.hpp"
#include "vcalc/reduction/reduction.hpp"

using namespace vcalc;

namespace {

Scalar S(const std::string& text) { return parse_scalar(text, target_symbols()); }

const ReducedAlgebraSetup& free_setup() {
  static const ReducedAlgebraSetup s = build_setup(RealizationMode::FreeField);
  return s;
}

const ReducedAlgebraSetup& full_setup() {
  static const ReducedAlgebraSetup s = build_setup(RealizationMode::Full);
  return s;
}

const GeneratorQuadruple& free_quad() {
  static const GeneratorQuadruple q = build_generators(free_setup());
  return q;
}

const GeneratorQuadruple& full_quad() {
  static const GeneratorQuadruple q = build_generators(full_setup());
  return q;
}

}  // namespace

TEST_CASE("free-field setup") {
  const auto& setup = free_setup();
  const VertexAlgebra& alg = *setup.algebra;
  std::set<std::string> names;
  for (const auto& g : alg.generators()) names.insert(g.name);
  CHECK(names == std::set<std::string>{"J^{(h_{1})}", "J^{(h_{2})}", "\\Phi_{-1}", "\\Phi_{12}"});
  Calculus calc(setup.algebra);
  const State h1 = alg.field("J^{(h_{1})}"), h2 = alg.field("J^{(h_{2})}");
  CHECK(calc.bracket(h1, h2) == LambdaPolynomial({State(), S("(k+1/2)/2") * State::vacuum()}));
  CHECK(calc.bracket(h1, h1).is_zero());
  CHECK(calc.bracket(h2, h2) == LambdaPolynomial({State(), S("-(k+1/2)/2") * State::vacuum()}));
  const State p1 = alg.field("\\Phi_{-1}"), p12 = alg.field("\\Phi_{12}");
  CHECK(calc.bracket(p1, p12) == LambdaPolynomial({Scalar::rational(1, 2) * State::vacuum()}));
  CHECK(calc.bracket(p12, p12) == LambdaPolynomial({Scalar::rational(-1, 4) * State::vacuum()}));
  CHECK(calc.bracket(p1, p1).is_zero());
}

TEST_CASE("dual fermions") {
  const auto& setup = free_setup();
  const VertexAlgebra& alg = *setup.algebra;
  CHECK(setup.aliases.at("\\Phi^{-1}") == alg.field("\\Phi_{-1}") + Scalar(2) * alg.field("\\Phi_{12}"));
  CHECK(setup.aliases.at("\\Phi^{12}") == Scalar(2) * alg.field("\\Phi_{-1}"));
  Calculus calc(setup.algebra);
  const char* up[] = {"\\Phi^{-1}", "\\Phi^{12}"};
  const char* down[] = {"\\Phi_{-1}", "\\Phi_{12}"};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(calc.bracket(setup.aliases.at(up[i]), alg.field(down[j])) ==
            LambdaPolynomial({Scalar(i == j ? 1 : 0) * State::vacuum()}));
}

TEST_CASE("full setup") {
  const auto& setup = full_setup();
  const VertexAlgebra& alg = *setup.algebra;
  CHECK(alg.generators().size() == 9);
  Calculus calc(setup.algebra);
  // [e_1, f_12] = -f_2/2 and (e_1|f_12) = 0
  CHECK(calc.bracket(alg.field("J^{(e_{1})}"), alg.field("J^{(f_{12})}")) ==
        LambdaPolynomial({Scalar::rational(-1, 2) * alg.field("J^{(f_{2})}")}));
  const mpq_class w[] = {1, 1, mpq_class(3, 2), mpq_class(3, 2), 2, 2, mpq_class(5, 2)};
  for (std::size_t i = 0; i < lower_basis().size(); ++i)
    CHECK(alg.generators()[alg.index(current_name(lower_basis()[i]))].weight == w[i]);
}

TEST_CASE("transcribed coefficients") {
  const Formula& L = formula(full_formulas(), "L");
  REQUIRE(L.find(":\\Phi^{-1}\\partial\\Phi^{12}:") != nullptr);
  CHECK(parse_scalar(L.find(":\\Phi^{-1}\\partial\\Phi^{12}:")->coeff) == S("(1+2*k)/8"));
  const Formula& U = formula(full_formulas(), "U");
  REQUIRE(U.find("\\partial^{2}\\Phi^{-1}") != nullptr);
  CHECK(parse_scalar(U.find("\\partial^{2}\\Phi^{-1}")->coeff) == S("(1+6*k+8*k^2)/24"));
}

TEST_CASE("generator weights and normalizations") {
  for (const auto* q : {&free_quad(), &full_quad()}) {
    const VertexAlgebra& alg = *q->algebra;
    auto weight_of = [&](const State& s) { return alg.weight(s.terms().begin()->first); };
    CHECK(weight_of(q->J_e1_f12) == mpq_class(3, 2));
    CHECK(weight_of(q->J_f2) == 2);
    CHECK(weight_of(q->J_f1122) == 2);
    CHECK(weight_of(q->G) == mpq_class(3, 2));
    CHECK(weight_of(q->L) == 2);
    CHECK(weight_of(q->W) == 2);
    CHECK(weight_of(q->U) == mpq_class(5, 2));
    CHECK(q->a == S("-2*i/sqrt(1+2*k)"));
    CHECK(q->W == q->a1 * q->J_f2 + q->a2 * q->J_f1122);
  }
}

TEST_CASE("L against its defining relation") {
  for (const auto* q : {&free_quad(), &full_quad()}) {
    Calculus calc(q->algebra);
    CHECK(q->L == Scalar::rational(1, 2) * calc.nth_product(q->G, 0, q->G));
    // The printed L carries -∂J^{(h_1)} where (1/2) G_(0)G has -k ∂J^{(h_1)}.
    const State dh1 = q->algebra->field("J^{(h_{1})}", 1);
    CHECK(q->L_residual == S("(1-k)/(1/2+k)") * dh1);
    CHECK(q->L_printed - q->L == S("-2/(1+2*k)") * (Scalar(-1) - S("-k")) * dh1);
    // With the printed L, [L_λL] misses the Virasoro form.
    TargetBracketTable ll = {sw32_targets().front()};
    GeneratorQuadruple printed = *q;
    printed.L = q->L_printed;
    CHECK(!verify_brackets(printed, ll, 1).passed());
  }
  // L = -2/(1+2k) (J^{f_2} + J^{f_1122}) in full mode.
  CHECK(full_quad().L == S("-2/(1+2*k)") * (full_quad().J_f2 + full_quad().J_f1122));
}

TEST_CASE("U sign") {
  for (const auto* q : {&free_quad(), &full_quad()}) {
    Calculus calc(q->algebra);
    CHECK(q->u_sign == -1);
    CHECK(calc.nth_product(q->G, 0, q->W) == q->U);
  }
}

TEST_CASE("free-field generators are the projection of the full ones") {
  const auto& full = full_quad();
  const auto& free = free_quad();
  Calculus calc(free.algebra);
  CHECK(project_to_cartan(full.G, *full.algebra, calc) == free.G);
  CHECK(project_to_cartan(full.W, *full.algebra, calc) == free.W);
  CHECK(project_to_cartan(full.U, *full.algebra, calc) == free.U);
  CHECK(project_to_cartan(full.L, *full.algebra, calc) == free.L);
}

TEST_CASE("printed free-field audit") {
  const auto lines = audit_printed_free_field();
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "G: printed free-field formula matches the projection");
  CHECK(lines[1].find(":J^{(h_1)}J^{(h_1)}: has coefficient 1, projection gives -1") != std::string::npos);
  CHECK(lines[1].find("keeps :\\Phi^{12}J^{(e_1)}:") != std::string::npos);
  CHECK(lines[2] == "W: printed free-field formula matches the projection");
  CHECK(lines[3] == "U: printed free-field formula matches the projection");
}

TEST_CASE("formula weight mismatch") {
  Calculus calc(free_setup().algebra);
  Formula bad{"bad", "", 2, {{"", ":\\Phi^{-1}J^{(h_1)}:"}}};
  CHECK_THROWS_AS(evaluate_formula(calc, free_setup(), bad), FormulaError);
  Formula unknown{"bad", "", 2, {{"", "J^{(e_1)}"}}};
  CHECK_THROWS_AS(evaluate_formula(calc, free_setup(), unknown), FormulaError);
}

TEST_CASE("target table") {
  const auto targets = sw32_targets();
  REQUIRE(targets.size() == 8);
  CHECK(format_target(targets[4]) == "[G_λU] = (∂+4λ)W");
  CHECK(targets[5].terms[0].coeff == S("c/12"));
  // 15-c = 9(1-2k), 21+4c = 9(5+8k)
  CHECK(S("sqrt(15-c)") == S("3*sqrt(1-2*k)"));
  CHECK(S("sqrt(21+4*c)") == S("3*sqrt(5+8*k)"));
  CHECK(S("(6+5*c)/(sqrt(15-c)*sqrt(21+4*c))") == S("2*(2+5*k)/(sqrt(1-2*k)*sqrt(5+8*k))"));
}

TEST_CASE("SW(3/2,2) brackets in both modes") {
  for (const auto* q : {&free_quad(), &full_quad()}) {
    const auto report = verify_sw32(*q, sw32_targets());
    CHECK(report.passed());
    CHECK(report.identity_count() == 13);
    for (const auto& e : report.entries) {
      CAPTURE(e.identity);
      CHECK(e.difference == "0");
    }
  }
}

TEST_CASE("primary conditions and normalization pins") {
  const auto& q = free_quad();
  CHECK(verify_primary(q).passed());
  Calculus calc(q.algebra);
  for (int j = 1; j <= 3; ++j) CHECK(calc.nth_product(q.G, j, q.W).is_zero());
  // λ^3 coefficient c/12, so the third product is 3! c/12 = c/2.
  CHECK(calc.bracket(q.W, q.W).coeff(3) == S("c/12") * State::vacuum());
  CHECK(calc.nth_product(q.W, 3, q.W) == S("c/2") * State::vacuum());
  LambdaPolynomial lw = calc.bracket(q.L, q.W);
  CHECK(lw.coeff(1) == Scalar(2) * q.W);
  CHECK(calc.bracket(q.L, q.G).coeff(2).is_zero());
}

TEST_CASE("skew-symmetry between the generators") {
  const auto& q = free_quad();
  Calculus calc(q.algebra);
  const std::pair<const State*, bool> gens[] = {{&q.G, true}, {&q.L, false}, {&q.W, false}, {&q.U, true}};
  for (const auto& [a, a_odd] : gens)
    for (const auto& [b, b_odd] : gens) CHECK(calc.bracket(*b, *a) == calc.skew(calc.bracket(*a, *b), b_odd, a_odd));
}

TEST_CASE("Spin(7) point") {
  const auto report = spin7_instance();
  CHECK(report.passed());
  CHECK(report.header == std::vector<std::string>{"k = 1/3", "c = 12"});
  CHECK_THROWS_AS(specialization_header(GaussRational(mpq_class(1, 2))), EvaluationPole);
  CHECK_THROWS_AS(specialization_header(GaussRational(mpq_class(-5, 8))), EvaluationPole);
  CHECK(std::abs(eval_text_numeric("2*(6+5*c)/(sqrt(15-c)*sqrt(21+4*c))", 12) -
                 132.0 / (std::sqrt(3.0) * std::sqrt(69.0))) < 1e-12);
}

TEST_CASE("report formats") {
  VerificationReport r;
  r.suite = "demo";
  r.entries.push_back({"[A_λB]", 1, "x", "x", "0", true, 0.5});
  r.entries.push_back({"[A_λB]", 0, "y", "z", "z-y", false, 0.5});
  CHECK(!r.passed());
  CHECK(r.identity_count() == 1);
  const auto j = r.to_json();
  CHECK(j["results"][1]["difference"] == "z-y");
  CHECK(j["pass"] == false);
  CHECK(r.to_text().find("FAIL  λ^0") != std::string::npos);
}
