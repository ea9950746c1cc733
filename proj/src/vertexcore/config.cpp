#include "vcalc/vertexcore/config.hpp"

#include <fstream>

#include "vcalc/errors.hpp"
#include "vcalc/vertexcore/notation.hpp"

namespace vcalc {

namespace {
constexpr const char* kFormat = "vcalc-algebra/1";
}

nlohmann::json algebra_to_json(const VertexAlgebra& alg) {
  nlohmann::json doc;
  doc["format"] = kFormat;
  doc["name"] = alg.name();
  doc["unlisted_brackets_vanish"] = alg.unlisted_brackets_vanish();
  auto& gens = doc["generators"] = nlohmann::json::array();
  for (const auto& g : alg.generators()) {
    gens.push_back({{"name", g.name},
                    {"parity", g.odd ? "odd" : "even"},
                    {"weight", g.weight.get_str()},
                    {"charged", g.charged}});
  }
  auto& brackets = doc["brackets"] = nlohmann::json::array();
  for (const auto& [pair, value] : alg.bracket_table()) {
    nlohmann::json lambda = nlohmann::json::object();
    for (std::size_t j = 0; j < value.coeffs().size(); ++j) {
      if (!value.coeffs()[j].is_zero()) lambda[std::to_string(j)] = format_state(alg, value.coeffs()[j]);
    }
    brackets.push_back({{"left", alg.generator(pair.first).name},
                        {"right", alg.generator(pair.second).name},
                        {"lambda", lambda}});
  }
  auto& rules = doc["derivative_rules"] = nlohmann::json::array();
  for (std::uint32_t g = 0; g < alg.generators().size(); ++g) {
    if (const State* d = alg.derivative_rule(g)) {
      rules.push_back({{"generator", alg.generator(g).name}, {"derivative", format_state(alg, *d)}});
    }
  }
  return doc;
}

AlgebraPtr algebra_from_json(const nlohmann::json& doc) {
  try {
    if (doc.value("format", "") != kFormat) throw ConfigError("unsupported algebra format");
    std::vector<GeneratorSymbol> gens;
    for (const auto& g : doc.at("generators")) {
      GeneratorSymbol sym;
      sym.name = g.at("name").get<std::string>();
      const std::string parity = g.at("parity").get<std::string>();
      if (parity != "odd" && parity != "even") throw ConfigError("bad parity for " + sym.name);
      sym.odd = parity == "odd";
      sym.weight = mpq_class(g.at("weight").get<std::string>());
      sym.weight.canonicalize();
      sym.charged = g.value("charged", false);
      gens.push_back(std::move(sym));
    }
    auto alg = std::make_shared<VertexAlgebra>(doc.value("name", "algebra"), std::move(gens),
                                               doc.value("unlisted_brackets_vanish", true));
    Calculus parse_calc(alg);
    for (const auto& b : doc.value("brackets", nlohmann::json::array())) {
      std::vector<State> coeffs;
      for (const auto& [power, text] : b.at("lambda").items()) {
        std::size_t j = std::stoul(power);
        if (coeffs.size() <= j) coeffs.resize(j + 1);
        coeffs[j] = parse_state(parse_calc, text.get<std::string>());
      }
      alg->set_bracket(b.at("left").get<std::string>(), b.at("right").get<std::string>(),
                       LambdaPolynomial(std::move(coeffs)));
    }
    for (const auto& r : doc.value("derivative_rules", nlohmann::json::array())) {
      alg->set_derivative_rule(alg->index(r.at("generator").get<std::string>()),
                               parse_state(parse_calc, r.at("derivative").get<std::string>()));
    }
    check_skew_symmetry(alg);
    return alg;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed algebra declaration: ") + e.what());
  } catch (const ParseError& e) {
    throw ConfigError(std::string("bad state in algebra declaration: ") + e.what());
  }
}

AlgebraPtr load_algebra(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
  return algebra_from_json(doc);
}

void check_skew_symmetry(const AlgebraPtr& alg) {
  Calculus calc(alg);
  for (const auto& [pair, value] : alg->bracket_table()) {
    const LambdaPolynomial* reverse = alg->base_bracket(pair.second, pair.first);
    if (reverse == nullptr) continue;
    LambdaPolynomial expected =
        calc.skew(*reverse, alg->generator(pair.first).odd, alg->generator(pair.second).odd);
    if (!(expected == value)) {
      throw ConfigError("bracket table violates skew-symmetry for " + alg->generator(pair.first).name + ", " +
                        alg->generator(pair.second).name);
    }
  }
}

}  // namespace vcalc
