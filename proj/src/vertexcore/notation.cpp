#include "vcalc/vertexcore/notation.hpp"

#include <cctype>

#include "vcalc/errors.hpp"

namespace vcalc {
namespace {

std::string format_factor(const VertexAlgebra& alg, const Factor& f) {
  std::string out;
  if (f.nder == 1) out = "\\partial ";
  if (f.nder > 1) out = "\\partial^{" + std::to_string(f.nder) + "}";
  return out + alg.generator(f.gen).name;
}

class StateParser {
 public:
  StateParser(Calculus& calc, std::string_view text, const Aliases& aliases,
              const std::map<std::string, Scalar>& symbols)
      : calc_(calc), text_(text), aliases_(aliases), symbols_(symbols) {}

  State parse() {
    State out;
    skip_space();
    if (at_end()) fail("empty state");
    bool first = true;
    while (!at_end()) {
      Scalar sign(1);
      if (!first || peek() == '+' || peek() == '-') {
        if (accept('+')) {
        } else if (accept('-')) {
          sign = Scalar(-1);
        } else {
          fail("expected '+' or '-'");
        }
      }
      first = false;
      out += sign * term();
      skip_space();
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool accept(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  State term() {
    Scalar coeff(1);
    bool has_coeff = false;
    if (accept('{')) {
      std::size_t close = text_.find('}', pos_);
      if (close == std::string_view::npos) fail("unterminated coefficient");
      coeff = parse_scalar(std::string(text_.substr(pos_, close - pos_)), symbols_);
      pos_ = close + 1;
      has_coeff = true;
      accept('*');
    }
    char c = peek();
    if (c == '\0' || c == '+' || c == '-') {
      if (!has_coeff) fail("expected a term");
      return coeff * State::vacuum();
    }
    return coeff * product();
  }

  State product() {
    if (accept("|0>")) return State::vacuum();
    if (!accept(':')) return factor();
    std::vector<State> factors;
    while (!accept(':')) {
      if (at_end()) fail("unterminated normally ordered product");
      factors.push_back(factor());
    }
    if (factors.empty()) fail("empty normally ordered product");
    State out = factors.back();
    for (std::size_t n = factors.size() - 1; n-- > 0;) out = calc_.normal_order(factors[n], out);
    return out;
  }

  State factor() {
    unsigned nder = 0;
    while (accept("\\partial")) {
      if (accept("^{")) {
        std::size_t close = text_.find('}', pos_);
        if (close == std::string_view::npos) fail("unterminated derivative order");
        nder += static_cast<unsigned>(std::stoul(std::string(text_.substr(pos_, close - pos_))));
        pos_ = close + 1;
      } else {
        ++nder;
      }
    }
    skip_space();
    // Longest matching generator or alias name.
    std::size_t best = 0;
    const State* alias = nullptr;
    std::optional<std::uint32_t> gen;
    const auto& gens = calc_.algebra().generators();
    for (std::uint32_t g = 0; g < gens.size(); ++g) {
      const std::string& name = gens[g].name;
      if (name.size() > best && text_.substr(pos_, name.size()) == name) {
        best = name.size();
        gen = g;
        alias = nullptr;
      }
    }
    for (const auto& [name, value] : aliases_) {
      if (name.size() > best && text_.substr(pos_, name.size()) == name) {
        best = name.size();
        alias = &value;
        gen.reset();
      }
    }
    if (best == 0) fail("unknown field");
    pos_ += best;
    State base = alias != nullptr ? *alias : State::generator(*gen);
    return calc_.derivative(base, nder);
  }

  Calculus& calc_;
  std::string_view text_;
  const Aliases& aliases_;
  const std::map<std::string, Scalar>& symbols_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string format_monomial(const VertexAlgebra& alg, const Monomial& m) {
  if (m.empty()) return "|0>";
  if (m.size() == 1) return format_factor(alg, m[0]);
  std::string out = ":";
  for (const auto& f : m) out += format_factor(alg, f);
  return out + ":";
}

std::string format_state(const VertexAlgebra& alg, const State& s) {
  if (s.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : s.terms()) {
    std::string term;
    if (c.is_one()) {
      term = format_monomial(alg, m);
    } else if ((-c).is_one()) {
      term = "-" + format_monomial(alg, m);
    } else {
      term = "{" + c.to_string() + "} " + format_monomial(alg, m);
    }
    if (out.empty()) {
      out = term;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

std::string format_lambda(const VertexAlgebra& alg, const LambdaPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t j = p.coeffs().size(); j-- > 0;) {
    if (p.coeffs()[j].is_zero()) continue;
    if (!out.empty()) out += "; ";
    out += "λ^" + std::to_string(j) + ": " + format_state(alg, p.coeffs()[j]);
  }
  return out;
}

State parse_state(Calculus& calc, std::string_view text, const Aliases& aliases,
                  const std::map<std::string, Scalar>& symbols) {
  return StateParser(calc, text, aliases, symbols).parse();
}

}  // namespace vcalc
