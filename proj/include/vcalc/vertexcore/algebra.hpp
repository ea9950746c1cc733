#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "vcalc/vertexcore/state.hpp"

namespace vcalc {

struct GeneratorSymbol {
  std::string name;
  bool odd = false;
  mpq_class weight = 0;
  // A lattice exponential Γ_α: always the last factor of a monomial, never
  // differentiated in place (its derivative comes from a rule), never paired with
  // another charged factor.
  bool charged = false;
};

// Generators, parities, weights and the base λ-brackets of a vertex superalgebra
// freely generated by its generators. Generators are renumbered into canonical
// order at construction: neutral before charged, then by weight, then by name.
class VertexAlgebra {
 public:
  VertexAlgebra(std::string name, std::vector<GeneratorSymbol> generators, bool unlisted_brackets_vanish = true);

  const std::string& name() const { return name_; }
  const std::vector<GeneratorSymbol>& generators() const { return gens_; }
  const GeneratorSymbol& generator(std::uint32_t g) const { return gens_.at(g); }
  std::optional<std::uint32_t> find(std::string_view name) const;
  // Throws ConfigError for unknown names.
  std::uint32_t index(std::string_view name) const;
  State field(std::string_view name, std::uint32_t nder = 0) const { return State::generator(index(name), nder); }

  void set_bracket(std::uint32_t a, std::uint32_t b, LambdaPolynomial value);
  void set_bracket(std::string_view a, std::string_view b, LambdaPolynomial value) {
    set_bracket(index(a), index(b), std::move(value));
  }
  void set_derivative_rule(std::uint32_t g, State derivative);

  // nullptr when the ordered pair was not declared.
  const LambdaPolynomial* base_bracket(std::uint32_t a, std::uint32_t b) const;
  const State* derivative_rule(std::uint32_t g) const;
  bool unlisted_brackets_vanish() const { return unlisted_vanish_; }
  const std::map<std::pair<std::uint32_t, std::uint32_t>, LambdaPolynomial>& bracket_table() const {
    return table_;
  }

  bool is_odd(const Factor& f) const { return gens_[f.gen].odd; }
  bool is_odd(const Monomial& m) const;
  bool is_charged(const Monomial& m) const;
  // Σ (weight + derivative count); the grading used by the weight checks.
  mpq_class weight(const Monomial& m) const;

 private:
  std::string name_;
  std::vector<GeneratorSymbol> gens_;
  bool unlisted_vanish_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, LambdaPolynomial> table_;
  std::map<std::uint32_t, State> derivative_rules_;
};

using AlgebraPtr = std::shared_ptr<const VertexAlgebra>;

}  // namespace vcalc
