#include "vcalc/errors.hpp"
#include "vcalc/reduction/reduction.hpp"

namespace vcalc {

namespace {

// Bodies shared by several printed formulas.
const std::vector<FormulaTerm> kWeight32Body = {
    {"", "J^{(e_1)}"},
    {"-1", "J^{(f_{12})}"},
    {"", ":\\Phi^{-1}J^{(h_1)}:"},
    {"-1/2", ":\\Phi^{12}J^{(h_1)}:"},
    {"-1/2", ":\\Phi^{12}J^{(h_2)}:"},
    {"-(1/2+k)", "\\partial\\Phi^{-1}"},
    {"-1/2*k", "\\partial\\Phi^{12}"},
};

const char* const kPrefactorG = "2/sqrt(-1-2*k)";
const char* const kPrefactorL = "-2/(1+2*k)";
const char* const kPrefactorW = "2*sqrt(1-2*k)*sqrt(5+8*k)/(5+18*k+16*k^2)";
const char* const kPrefactorU = "12*i*sqrt(1+3*k)/(sqrt(1-2*k)*sqrt(5+8*k)*sqrt(1+5*k+6*k^2))";

}  // namespace

std::string Formula::body_text() const {
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += " + ";
    if (!t.coeff.empty()) out += "{" + t.coeff + "}";
    out += t.product;
  }
  return out;
}

const FormulaTerm* Formula::find(std::string_view product) const {
  for (const auto& t : terms)
    if (t.product == product) return &t;
  return nullptr;
}

const std::vector<Formula>& full_formulas() {
  static const std::vector<Formula> formulas = {
      {"J^{\\{e_1-f_{12}\\}}", "", mpq_class(3, 2), kWeight32Body},
      {"J^{\\{f_2\\}}",
       "",
       2,
       {
           {"", "J^{(f_2)}"},
           {"-1/2", ":\\Phi^{12}J^{(e_1)}:"},
           {"", ":\\Phi^{-1}J^{(f_{12})}:"},
           {"", ":J^{(h_2)}J^{(h_2)}:"},
           {"1/2", ":\\Phi^{-1}\\Phi^{12}J^{(h_1)}:"},
           {"1/2", ":\\Phi^{-1}\\Phi^{12}J^{(h_2)}:"},
           {"1/2*(1+4*k)", "\\partial J^{(h_2)}"},
           {"1/2*k", ":\\Phi^{-1}\\partial\\Phi^{12}:"},
       }},
      {"J^{\\{f_{1122}\\}}",
       "",
       2,
       {
           {"", "J^{(f_{1122})}"},
           {"1/2", ":J^{(f_{12})}\\Phi^{12}:"},
           {"-2", ":J^{(h_1)}J^{(h_2)}:"},
           {"-1", ":J^{(h_1)}J^{(h_1)}:"},
           {"-1", ":J^{(h_2)}J^{(h_2)}:"},
           {"-1/2", ":\\Phi^{-1}\\Phi^{12}J^{(h_1)}:"},
           {"-1/2", ":\\Phi^{-1}\\Phi^{12}J^{(h_2)}:"},
           {"-k", "\\partial J^{(h_1)}"},
           {"-k", "\\partial J^{(h_2)}"},
           {"1/8*(-1-2*k)", ":\\partial\\Phi^{-1}\\Phi^{12}:"},
           {"-1/8*(-1+2*k)", ":\\Phi^{-1}\\partial\\Phi^{12}:"},
           {"1/16*(1+2*k)", ":\\partial\\Phi^{12}\\Phi^{12}:"},
       }},
      {"G", kPrefactorG, mpq_class(3, 2), kWeight32Body},
      {"L",
       kPrefactorL,
       2,
       {
           {"", "J^{(f_2)}"},
           {"", "J^{(f_{1122})}"},
           {"-1", ":J^{(h_1)}J^{(h_1)}:"},
           {"-2", ":J^{(h_1)}J^{(h_2)}:"},
           {"", ":\\Phi^{-1}J^{(f_{12})}:"},
           {"(1+2*k)/8", ":\\Phi^{-1}\\partial\\Phi^{12}:"},
           {"-1/2", ":\\Phi^{12}J^{(e_1)}:"},
           {"-1/2", ":\\Phi^{12}J^{(f_{12})}:"},
           {"-(1+2*k)/8", ":\\partial\\Phi^{-1}\\Phi^{12}:"},
           {"(1+2*k)/16", ":\\partial\\Phi^{12}\\Phi^{12}:"},
           {"-1", "\\partial J^{(h_1)}"},
           {"(1+2*k)/2", "\\partial J^{(h_2)}"},
       }},
      {"W",
       kPrefactorW,
       2,
       {
           {"", "J^{(f_2)}"},
           {"(2+8*k)/(-1+2*k)", "J^{(f_{1122})}"},
           {"(2+8*k)/(1-2*k)", ":J^{(h_1)}J^{(h_1)}:"},
           {"(4+16*k)/(1-2*k)", ":J^{(h_1)}J^{(h_2)}:"},
           {"(3+6*k)/(1-2*k)", ":J^{(h_2)}J^{(h_2)}:"},
           {"", ":\\Phi^{-1}J^{(f_{12})}:"},
           {"(3+6*k)/(2-4*k)", ":\\Phi^{-1}\\Phi^{12}J^{(h_1)}:"},
           {"(3+6*k)/(2-4*k)", ":\\Phi^{-1}\\Phi^{12}J^{(h_2)}:"},
           {"(-1-2*k)/4", ":\\Phi^{-1}\\partial\\Phi^{12}:"},
           {"-1/2", ":\\Phi^{12}J^{(e_1)}:"},
           {"(1+4*k)/(1-2*k)", ":\\Phi^{12}J^{(f_{12})}:"},
           {"(1+6*k+8*k^2)/(4-8*k)", ":\\partial\\Phi^{-1}\\Phi^{12}:"},
           {"(1+6*k+8*k^2)/(-8+16*k)", ":\\partial\\Phi^{12}\\Phi^{12}:"},
           {"-2*k*(1+4*k)/(-1+2*k)", "\\partial J^{(h_1)}"},
           {"(1+6*k+8*k^2)/(2-4*k)", "\\partial J^{(h_2)}"},
       }},
      {"U",
       kPrefactorU,
       mpq_class(5, 2),
       {
           {"", "J^{(f_{122})}"},
           {"-1", ":J^{(h_1)}J^{(e_1)}:"},
           {"-1", ":J^{(h_2)}J^{(e_1)}:"},
           {"-1", ":J^{(h_2)}J^{(f_{12})}:"},
           {"", ":\\Phi^{-1}J^{(f_{1122})}:"},
           {"-1", ":\\Phi^{-1}J^{(h_1)}J^{(h_1)}:"},
           {"-1", ":\\Phi^{-1}J^{(h_1)}J^{(h_2)}:"},
           {"-1/4", ":\\Phi^{-1}\\Phi^{12}J^{(e_1)}:"},
           {"-1/2", ":\\Phi^{-1}\\Phi^{12}J^{(f_{12})}:"},
           {"(1+2*k)/16", ":\\Phi^{-1}\\partial\\Phi^{12}\\Phi^{12}:"},
           {"(1-2*k)/6", ":\\Phi^{-1}\\partial J^{(h_1)}:"},
           {"1/4", ":\\Phi^{12}J^{(f_2)}:"},
           {"-1/2", ":\\Phi^{12}J^{(h_1)}J^{(h_2)}:"},
           {"-1/2", ":\\Phi^{12}J^{(h_2)}J^{(h_2)}:"},
           {"(-1-4*k)/12", ":\\Phi^{12}\\partial J^{(h_1)}:"},
           {"(-1-4*k)/12", ":\\Phi^{12}\\partial J^{(h_2)}:"},
           {"(1+4*k)/6", ":\\partial\\Phi^{-1}J^{(h_1)}:"},
           {"1/2+k", ":\\partial\\Phi^{-1}J^{(h_2)}:"},
           {"(1+2*k)/8", ":\\partial\\Phi^{-1}\\Phi^{-1}\\Phi^{12}:"},
           {"(-1-4*k)/12", ":\\partial\\Phi^{12}J^{(h_1)}:"},
           {"-1/12-5*k/6", ":\\partial\\Phi^{12}J^{(h_2)}:"},
           {"(1-2*k)/6", "\\partial J^{(e_1)}"},
           {"(-1-4*k)/6", "\\partial J^{(f_{12})}"},
           {"(1+6*k+8*k^2)/24", "\\partial^{2}\\Phi^{-1}"},
           {"-k*(1+4*k)/12", "\\partial^{2}\\Phi^{12}"},
       }},
  };
  return formulas;
}

const std::vector<Formula>& printed_free_field_formulas() {
  static const std::vector<Formula> formulas = {
      {"G",
       kPrefactorG,
       mpq_class(3, 2),
       {
           {"", ":\\Phi^{-1}J^{(h_1)}:"},
           {"-1/2", ":\\Phi^{12}J^{(h_1)}:"},
           {"-1/2", ":\\Phi^{12}J^{(h_2)}:"},
           {"-(1/2+k)", "\\partial\\Phi^{-1}"},
           {"-1/2*k", "\\partial\\Phi^{12}"},
       }},
      {"L",
       kPrefactorL,
       2,
       {
           {"", ":J^{(h_1)}J^{(h_1)}:"},
           {"-2", ":J^{(h_1)}J^{(h_2)}:"},
           {"(1+2*k)/8", ":\\Phi^{-1}\\partial\\Phi^{12}:"},
           {"-1/2", ":\\Phi^{12}J^{(e_1)}:"},
           {"-(1+2*k)/8", ":\\partial\\Phi^{-1}\\Phi^{12}:"},
           {"(1+2*k)/16", ":\\partial\\Phi^{12}\\Phi^{12}:"},
           {"-1", "\\partial J^{(h_1)}"},
           {"(1+2*k)/2", "\\partial J^{(h_2)}"},
       }},
      {"W",
       kPrefactorW,
       2,
       {
           {"(2+8*k)/(1-2*k)", ":J^{(h_1)}J^{(h_1)}:"},
           {"(4+16*k)/(1-2*k)", ":J^{(h_1)}J^{(h_2)}:"},
           {"(3+6*k)/(1-2*k)", ":J^{(h_2)}J^{(h_2)}:"},
           {"(3+6*k)/(2-4*k)", ":\\Phi^{-1}\\Phi^{12}J^{(h_1)}:"},
           {"(3+6*k)/(2-4*k)", ":\\Phi^{-1}\\Phi^{12}J^{(h_2)}:"},
           {"(-1-2*k)/4", ":\\Phi^{-1}\\partial\\Phi^{12}:"},
           {"(1+6*k+8*k^2)/(4-8*k)", ":\\partial\\Phi^{-1}\\Phi^{12}:"},
           {"(1+6*k+8*k^2)/(-8+16*k)", ":\\partial\\Phi^{12}\\Phi^{12}:"},
           {"-2*k*(1+4*k)/(-1+2*k)", "\\partial J^{(h_1)}"},
           {"(1+6*k+8*k^2)/(2-4*k)", "\\partial J^{(h_2)}"},
       }},
      {"U",
       kPrefactorU,
       mpq_class(5, 2),
       {
           {"-1", ":\\Phi^{-1}J^{(h_1)}J^{(h_1)}:"},
           {"-1", ":\\Phi^{-1}J^{(h_1)}J^{(h_2)}:"},
           {"(1+2*k)/16", ":\\Phi^{-1}\\partial\\Phi^{12}\\Phi^{12}:"},
           {"(1-2*k)/6", ":\\Phi^{-1}\\partial J^{(h_1)}:"},
           {"-1/2", ":\\Phi^{12}J^{(h_1)}J^{(h_2)}:"},
           {"-1/2", ":\\Phi^{12}J^{(h_2)}J^{(h_2)}:"},
           {"(-1-4*k)/12", ":\\Phi^{12}\\partial J^{(h_1)}:"},
           {"(-1-4*k)/12", ":\\Phi^{12}\\partial J^{(h_2)}:"},
           {"(1+4*k)/6", ":\\partial\\Phi^{-1}J^{(h_1)}:"},
           {"1/2+k", ":\\partial\\Phi^{-1}J^{(h_2)}:"},
           {"(1+2*k)/8", ":\\partial\\Phi^{-1}\\Phi^{-1}\\Phi^{12}:"},
           {"(-1-4*k)/12", ":\\partial\\Phi^{12}J^{(h_1)}:"},
           {"-1/12-5*k/6", ":\\partial\\Phi^{12}J^{(h_2)}:"},
           {"(1+6*k+8*k^2)/24", "\\partial^{2}\\Phi^{-1}"},
           {"-k*(1+4*k)/12", "\\partial^{2}\\Phi^{12}"},
       }},
  };
  return formulas;
}

const Formula& formula(const std::vector<Formula>& set, std::string_view name) {
  for (const auto& f : set)
    if (f.name == name) return f;
  throw FormulaError("no formula named " + std::string(name));
}

}  // namespace vcalc
