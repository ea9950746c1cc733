#include <algorithm>

#include "vcalc/errors.hpp"
#include "vcalc/reduction/reduction.hpp"
#include "vcalc/vertexcore/config.hpp"

namespace vcalc {

std::string to_string(RealizationMode mode) { return mode == RealizationMode::Full ? "full" : "free"; }

RealizationMode parse_mode(std::string_view text) {
  if (text == "full") return RealizationMode::Full;
  if (text == "free" || text == "free_field") return RealizationMode::FreeField;
  throw UsageError("unknown mode '" + std::string(text) + "' (expected full or free)");
}

const std::vector<std::string>& lower_basis() {
  static const std::vector<std::string> basis = {"h_{1}", "h_{2}", "e_{1}", "f_{12}", "f_{2}", "f_{1122}", "f_{122}"};
  return basis;
}

const std::vector<std::pair<std::string, std::string>>& fermion_basis() {
  static const std::vector<std::pair<std::string, std::string>> basis = {{"\\Phi_{-1}", "f_{1}"},
                                                                         {"\\Phi_{12}", "e_{12}"}};
  return basis;
}

std::vector<std::vector<mpq_class>> fermion_gram(const SuperLieAlgebra& g) {
  const LieVector f = osp32_f(g);
  const auto& fb = fermion_basis();
  std::vector<std::vector<mpq_class>> gram(fb.size(), std::vector<mpq_class>(fb.size()));
  for (std::size_t i = 0; i < fb.size(); ++i)
    for (std::size_t j = 0; j < fb.size(); ++j)
      gram[i][j] = g.form(f, g.bracket(g.basis(fb[i].second), g.basis(fb[j].second)));
  return gram;
}

std::vector<std::vector<mpq_class>> fermion_duals(const SuperLieAlgebra& g) {
  // Φ^i = Σ_m X_{im} Φ_m with <Φ^i|Φ_j> = δ_ij, so X = Gram^{-1}.
  const auto gram = fermion_gram(g);
  const mpq_class det = gram[0][0] * gram[1][1] - gram[0][1] * gram[1][0];
  if (det == 0) throw ConstructionInconsistent("fermion pairing is degenerate");
  return {{gram[1][1] / det, -gram[0][1] / det}, {-gram[1][0] / det, gram[0][0] / det}};
}

ReducedAlgebraSetup build_setup(RealizationMode mode, const std::optional<nlohmann::json>& declaration_override) {
  ReducedAlgebraSetup setup;
  setup.mode = mode;
  setup.lie = build_osp32();
  const SuperLieAlgebra& g = *setup.lie;
  setup.grading = grade_by(g, osp32_x(g));

  if (declaration_override) {
    setup.declaration = *declaration_override;
  } else {
    std::vector<std::string> currents = lower_basis();
    if (mode == RealizationMode::FreeField) {
      // The homomorphism g_<= -> g_0 keeps the Cartan currents only.
      std::erase_if(currents, [&](const std::string& v) { return setup.grading.degree_of(g, g.basis(v)) != 0; });
    }
    nlohmann::json doc = affine_algebra_json(g, currents, "k+1/2", &setup.grading);
    doc["name"] = mode == RealizationMode::Full ? "reduced-full" : "reduced-free";
    const auto gram = fermion_gram(g);
    const auto& fb = fermion_basis();
    for (const auto& [name, vec] : fb)
      doc["generators"].push_back({{"name", name}, {"parity", "odd"}, {"weight", "1/2"}, {"charged", false}});
    for (std::size_t i = 0; i < fb.size(); ++i)
      for (std::size_t j = 0; j < fb.size(); ++j)
        if (gram[i][j] != 0)
          doc["brackets"].push_back({{"left", fb[i].first},
                                     {"right", fb[j].first},
                                     {"lambda", {{"0", "{" + gram[i][j].get_str() + "}|0>"}}}});
    setup.declaration = std::move(doc);
  }
  setup.algebra = algebra_from_json(setup.declaration);

  const VertexAlgebra& alg = *setup.algebra;
  const auto duals = fermion_duals(g);
  const char* dual_names[] = {"\\Phi^{-1}", "\\Phi^{12}"};
  const auto& fb = fermion_basis();
  for (std::size_t i = 0; i < fb.size(); ++i) {
    State s;
    for (std::size_t m = 0; m < fb.size(); ++m) {
      Scalar c(GaussRational(duals[i][m]));
      s += c * alg.field(fb[m].first);
    }
    setup.aliases[dual_names[i]] = s;
  }
  const std::pair<const char*, const char*> spellings[] = {
      {"J^{(h_1)}", "h_{1}"}, {"J^{(h_2)}", "h_{2}"}, {"J^{(e_1)}", "e_{1}"}, {"J^{(f_2)}", "f_{2}"}};
  for (const auto& [alias, basis] : spellings)
    if (auto id = alg.find(current_name(basis))) setup.aliases[alias] = State::generator(*id);
  return setup;
}

namespace {

// Common value of the weight of every term; nullopt for a mixed state.
std::optional<mpq_class> homogeneous_weight(const VertexAlgebra& alg, const State& s) {
  std::optional<mpq_class> w;
  for (const auto& [m, c] : s.terms()) {
    const mpq_class wm = alg.weight(m);
    if (w && *w != wm) return std::nullopt;
    w = wm;
  }
  return w;
}

}  // namespace

State evaluate_formula(Calculus& calc, const ReducedAlgebraSetup& setup, const Formula& f, bool with_prefactor) {
  State body;
  try {
    body = parse_state(calc, f.body_text(), setup.aliases);
  } catch (const ParseError& e) {
    throw FormulaError("formula " + f.name + ": " + e.what());
  }
  const auto w = homogeneous_weight(calc.algebra(), body);
  if (!body.is_zero() && (!w || *w != f.weight))
    throw FormulaError("formula " + f.name + " is not homogeneous of weight " + f.weight.get_str());
  if (with_prefactor && !f.prefactor.empty()) body *= parse_scalar(f.prefactor);
  return body;
}

State project_to_cartan(const State& full, const VertexAlgebra& full_alg, Calculus& free_calc) {
  const VertexAlgebra& free_alg = free_calc.algebra();
  State out;
  for (const auto& [m, c] : full.terms()) {
    std::vector<Factor> image;
    bool survives = true;
    for (const auto& f : m) {
      auto id = free_alg.find(full_alg.generator(f.gen).name);
      if (!id) {
        survives = false;
        break;
      }
      image.push_back({*id, f.nder});
    }
    if (!survives) continue;
    State s = State::vacuum();
    for (auto it = image.rbegin(); it != image.rend(); ++it) s = free_calc.normal_order(State::generator(it->gen, it->nder), s);
    out += c * s;
  }
  return out;
}

}  // namespace vcalc
