#include "vcalc/vertexcore/algebra.hpp"

#include <algorithm>
#include <set>

#include "vcalc/errors.hpp"

namespace vcalc {

VertexAlgebra::VertexAlgebra(std::string name, std::vector<GeneratorSymbol> generators, bool unlisted_brackets_vanish)
    : name_(std::move(name)), gens_(std::move(generators)), unlisted_vanish_(unlisted_brackets_vanish) {
  std::set<std::string> seen;
  for (const auto& g : gens_) {
    if (!seen.insert(g.name).second) throw ConfigError("duplicate generator name " + g.name);
    if (sgn(g.weight) < 0) throw ConfigError("negative weight for generator " + g.name);
    if (mpz_class(g.weight.get_den()) > 2) throw ConfigError("weight of " + g.name + " is not a half-integer");
  }
  std::sort(gens_.begin(), gens_.end(), [](const GeneratorSymbol& a, const GeneratorSymbol& b) {
    if (a.charged != b.charged) return !a.charged;
    if (a.weight != b.weight) return a.weight < b.weight;
    return a.name < b.name;
  });
}

std::optional<std::uint32_t> VertexAlgebra::find(std::string_view name) const {
  for (std::uint32_t g = 0; g < gens_.size(); ++g) {
    if (gens_[g].name == name) return g;
  }
  return std::nullopt;
}

std::uint32_t VertexAlgebra::index(std::string_view name) const {
  if (auto g = find(name)) return *g;
  throw ConfigError("unknown generator " + std::string(name) + " in algebra " + name_);
}

void VertexAlgebra::set_bracket(std::uint32_t a, std::uint32_t b, LambdaPolynomial value) {
  if (gens_.at(a).charged && gens_.at(b).charged) {
    throw UnsupportedChargePair("bracket between two charged generators " + gens_[a].name + ", " + gens_[b].name);
  }
  table_[{a, b}] = std::move(value);
}

void VertexAlgebra::set_derivative_rule(std::uint32_t g, State derivative) {
  if (!gens_.at(g).charged) throw ConfigError("derivative rules are only allowed for charged generators");
  derivative_rules_[g] = std::move(derivative);
}

const LambdaPolynomial* VertexAlgebra::base_bracket(std::uint32_t a, std::uint32_t b) const {
  auto it = table_.find({a, b});
  return it == table_.end() ? nullptr : &it->second;
}

const State* VertexAlgebra::derivative_rule(std::uint32_t g) const {
  auto it = derivative_rules_.find(g);
  return it == derivative_rules_.end() ? nullptr : &it->second;
}

bool VertexAlgebra::is_odd(const Monomial& m) const {
  bool odd = false;
  for (const auto& f : m) odd ^= gens_[f.gen].odd;
  return odd;
}

bool VertexAlgebra::is_charged(const Monomial& m) const {
  return std::any_of(m.begin(), m.end(), [this](const Factor& f) { return gens_[f.gen].charged; });
}

mpq_class VertexAlgebra::weight(const Monomial& m) const {
  mpq_class w = 0;
  for (const auto& f : m) w += gens_[f.gen].weight + f.nder;
  return w;
}

}  // namespace vcalc
