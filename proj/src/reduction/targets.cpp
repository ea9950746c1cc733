#include <cctype>

#include "vcalc/errors.hpp"
#include "vcalc/reduction/reduction.hpp"

namespace vcalc {

namespace {

const std::string kKappa = "(6+5*c)/(sqrt(15-c)*sqrt(21+4*c))";
const std::string kRoot = "(sqrt(15-c)*sqrt(21+4*c))";

// "d2G" -> ∂²G, "GdG" -> :G∂G:, "" -> vacuum.
std::vector<TargetFactor> parse_product(std::string_view text) {
  std::vector<TargetFactor> out;
  unsigned nder = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == 'd') {
      ++nder;
      if (i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1]))) nder = text[++i] - '0';
      continue;
    }
    out.push_back({ch, nder});
    nder = 0;
  }
  return out;
}

TargetTerm term(unsigned power, const std::string& coeff, std::string_view product) {
  return {power, coeff, parse_scalar(coeff, target_symbols()), parse_product(product)};
}

TargetBracket make(char l, char r, std::string display, std::vector<TargetTerm> terms) {
  return {l, r, std::move(display), std::move(terms)};
}

TargetBracket lg() { return make('L', 'G', "(∂+(3/2)λ)G", {term(0, "1", "dG"), term(1, "3/2", "G")}); }

std::string format_product(const std::vector<TargetFactor>& p) {
  if (p.empty()) return "|0>";
  std::string out;
  for (const auto& f : p) {
    if (f.nder == 1) out += "∂";
    if (f.nder == 2) out += "∂²";
    if (f.nder > 2) out += "∂^" + std::to_string(f.nder);
    out += f.symbol;
  }
  return p.size() > 1 ? ":" + out + ":" : out;
}

}  // namespace

Scalar central_charge() { return parse_scalar("6+18*k"); }

const std::map<std::string, Scalar>& target_symbols() {
  static const std::map<std::string, Scalar> symbols = {{"c", central_charge()}};
  return symbols;
}

std::string TargetBracket::name() const { return std::string("[") + left + "_λ" + right + "]"; }

std::string format_target(const TargetBracket& t) { return t.name() + " = " + t.display; }

std::string format_target_power(const TargetBracket& t, unsigned power) {
  std::string out;
  for (const auto& term : t.terms) {
    if (term.lambda_power != power) continue;
    if (!out.empty()) out += " + ";
    if (term.coeff_text != "1") out += "{" + term.coeff_text + "}";
    out += format_product(term.product);
  }
  return out.empty() ? "0" : out;
}

TargetBracketTable sw32_targets() {
  return {
      make('L', 'L', "∂L + 2λL + (c/12)λ³", {term(0, "1", "dL"), term(1, "2", "L"), term(3, "c/12", "")}),
      lg(),
      make('G', 'G', "2L + (c/3)λ²", {term(0, "2", "L"), term(2, "c/3", "")}),
      make('G', 'W', "U", {term(0, "1", "U")}),
      make('G', 'U', "(∂+4λ)W", {term(0, "1", "dW"), term(1, "4", "W")}),
      make('W', 'W', "(c/12)λ³ + (2L + 2κW)λ + ∂L + κ∂W",
           {term(3, "c/12", ""), term(1, "2", "L"), term(1, "2*" + kKappa, "W"), term(0, "1", "dL"),
            term(0, kKappa, "dW")}),
      make('W', 'U',
           "-(3/2)Gλ² + (κU - ∂G)λ + ((15-c)/(21+4c))∂²G - (2√(15-c)/√(21+4c))∂U - (54/(21+4c)):LG: "
           "- (54/(√(15-c)√(21+4c))):WG:",
           {term(2, "-3/2", "G"), term(1, kKappa, "U"), term(1, "-1", "dG"), term(0, "(15-c)/(21+4*c)", "d2G"),
            term(0, "-2*sqrt(15-c)/sqrt(21+4*c)", "dU"), term(0, "-54/(21+4*c)", "LG"),
            term(0, "-54/" + kRoot, "WG")}),
      make('U', 'U',
           "-(c/12)λ⁴ + (-5L - 2κW)λ² + (-5∂L - 2κ∂W)λ - (6(c+3)/(21+4c))∂²L + (3(6-c)/(√(15-c)√(21+4c)))∂²W "
           "- (108/(21+4c)):LL: - (108/(√(15-c)√(21+4c))):LW: + (27/(21+4c)):G∂G: + (54/(√(15-c)√(21+4c))):GU:",
           {term(4, "-c/12", ""), term(2, "-5", "L"), term(2, "-2*" + kKappa, "W"), term(1, "-5", "dL"),
            term(1, "-2*" + kKappa, "dW"), term(0, "-6*(c+3)/(21+4*c)", "d2L"),
            term(0, "3*(6-c)/" + kRoot, "d2W"), term(0, "-108/(21+4*c)", "LL"), term(0, "-108/" + kRoot, "LW"),
            term(0, "27/(21+4*c)", "GdG"), term(0, "54/" + kRoot, "GU")}),
  };
}

TargetBracketTable primary_targets() {
  return {lg(), make('L', 'W', "(∂+2λ)W", {term(0, "1", "dW"), term(1, "2", "W")}),
          make('L', 'U', "(∂+(5/2)λ)U", {term(0, "1", "dU"), term(1, "5/2", "U")})};
}

const State& quad_field(const GeneratorQuadruple& q, char symbol) {
  switch (symbol) {
    case 'G':
      return q.G;
    case 'L':
      return q.L;
    case 'W':
      return q.W;
    case 'U':
      return q.U;
  }
  throw FormulaError(std::string("unknown target symbol ") + symbol);
}

LambdaPolynomial expand_target(const TargetBracket& t, const GeneratorQuadruple& quad, Calculus& calc) {
  LambdaPolynomial out;
  for (const auto& term : t.terms) {
    State s = State::vacuum();
    for (auto it = term.product.rbegin(); it != term.product.rend(); ++it)
      s = calc.normal_order(calc.derivative(quad_field(quad, it->symbol), it->nder), s);
    out.add(term.lambda_power, term.coeff * s);
  }
  return out;
}

}  // namespace vcalc
