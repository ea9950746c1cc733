#include "vcalc/superlie/superlie.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "vcalc/errors.hpp"

namespace vcalc {

namespace {

struct BracketEntry {
  const char* left;
  const char* right;
  const char* result;
  const char* coeff;
};

struct FormEntry {
  const char* left;
  const char* right;
  const char* value;
};

// Read off the 5x5 orthosymplectic realization (even indices 0,1,2, odd 3,4):
//   e1 = E30-E24, e2 = E01-E12, f1 = (E03+E42)/2, f2 = -(E10-E21)/2,
//   h_i = [e_i,f_i], (X|Y) = -str(XY).
constexpr BracketEntry kOsp32Brackets[] = {
    {"h_{1}", "e_{2}", "e_{2}", "1/2"},
    {"h_{1}", "e_{12}", "e_{12}", "1/2"},
    {"h_{1}", "e_{122}", "e_{122}", "1"},
    {"h_{1}", "e_{1122}", "e_{1122}", "1"},
    {"h_{1}", "f_{2}", "f_{2}", "-1/2"},
    {"h_{1}", "f_{12}", "f_{12}", "-1/2"},
    {"h_{1}", "f_{122}", "f_{122}", "-1"},
    {"h_{1}", "f_{1122}", "f_{1122}", "-1"},
    {"h_{2}", "e_{1}", "e_{1}", "1/2"},
    {"h_{2}", "e_{2}", "e_{2}", "-1/2"},
    {"h_{2}", "e_{122}", "e_{122}", "-1/2"},
    {"h_{2}", "f_{1}", "f_{1}", "-1/2"},
    {"h_{2}", "f_{2}", "f_{2}", "1/2"},
    {"h_{2}", "f_{122}", "f_{122}", "1/2"},
    {"e_{1}", "h_{2}", "e_{1}", "-1/2"},
    {"e_{1}", "e_{2}", "e_{12}", "1"},
    {"e_{1}", "e_{122}", "e_{1122}", "1"},
    {"e_{1}", "f_{1}", "h_{1}", "1"},
    {"e_{1}", "f_{12}", "f_{2}", "-1/2"},
    {"e_{1}", "f_{1122}", "f_{122}", "-1"},
    {"e_{2}", "h_{1}", "e_{2}", "-1/2"},
    {"e_{2}", "h_{2}", "e_{2}", "1/2"},
    {"e_{2}", "e_{1}", "e_{12}", "-1"},
    {"e_{2}", "e_{12}", "e_{122}", "1"},
    {"e_{2}", "f_{2}", "h_{2}", "1"},
    {"e_{2}", "f_{12}", "f_{1}", "1/2"},
    {"e_{2}", "f_{122}", "f_{12}", "-1/2"},
    {"e_{12}", "h_{1}", "e_{12}", "-1/2"},
    {"e_{12}", "e_{2}", "e_{122}", "-1"},
    {"e_{12}", "e_{12}", "e_{1122}", "1"},
    {"e_{12}", "f_{1}", "e_{2}", "1/2"},
    {"e_{12}", "f_{2}", "e_{1}", "-1/2"},
    {"e_{12}", "f_{12}", "h_{1}", "1/2"},
    {"e_{12}", "f_{12}", "h_{2}", "1/2"},
    {"e_{12}", "f_{122}", "f_{2}", "1/4"},
    {"e_{12}", "f_{1122}", "f_{12}", "-1/2"},
    {"e_{122}", "h_{1}", "e_{122}", "-1"},
    {"e_{122}", "h_{2}", "e_{122}", "1/2"},
    {"e_{122}", "e_{1}", "e_{1122}", "1"},
    {"e_{122}", "f_{2}", "e_{12}", "1/2"},
    {"e_{122}", "f_{12}", "e_{2}", "-1/4"},
    {"e_{122}", "f_{122}", "h_{1}", "1/4"},
    {"e_{122}", "f_{122}", "h_{2}", "1/2"},
    {"e_{122}", "f_{1122}", "f_{1}", "-1/4"},
    {"e_{1122}", "h_{1}", "e_{1122}", "-1"},
    {"e_{1122}", "f_{1}", "e_{122}", "-1"},
    {"e_{1122}", "f_{12}", "e_{12}", "-1/2"},
    {"e_{1122}", "f_{122}", "e_{1}", "-1/4"},
    {"e_{1122}", "f_{1122}", "h_{1}", "-1/2"},
    {"e_{1122}", "f_{1122}", "h_{2}", "-1/2"},
    {"f_{1}", "h_{2}", "f_{1}", "1/2"},
    {"f_{1}", "e_{1}", "h_{1}", "1"},
    {"f_{1}", "e_{12}", "e_{2}", "1/2"},
    {"f_{1}", "e_{1122}", "e_{122}", "1"},
    {"f_{1}", "f_{2}", "f_{12}", "1"},
    {"f_{1}", "f_{122}", "f_{1122}", "1"},
    {"f_{2}", "h_{1}", "f_{2}", "1/2"},
    {"f_{2}", "h_{2}", "f_{2}", "-1/2"},
    {"f_{2}", "e_{2}", "h_{2}", "-1"},
    {"f_{2}", "e_{12}", "e_{1}", "1/2"},
    {"f_{2}", "e_{122}", "e_{12}", "-1/2"},
    {"f_{2}", "f_{1}", "f_{12}", "-1"},
    {"f_{2}", "f_{12}", "f_{122}", "1"},
    {"f_{12}", "h_{1}", "f_{12}", "1/2"},
    {"f_{12}", "e_{1}", "f_{2}", "-1/2"},
    {"f_{12}", "e_{2}", "f_{1}", "-1/2"},
    {"f_{12}", "e_{12}", "h_{1}", "1/2"},
    {"f_{12}", "e_{12}", "h_{2}", "1/2"},
    {"f_{12}", "e_{122}", "e_{2}", "-1/4"},
    {"f_{12}", "e_{1122}", "e_{12}", "1/2"},
    {"f_{12}", "f_{2}", "f_{122}", "-1"},
    {"f_{12}", "f_{12}", "f_{1122}", "1"},
    {"f_{122}", "h_{1}", "f_{122}", "1"},
    {"f_{122}", "h_{2}", "f_{122}", "-1/2"},
    {"f_{122}", "e_{2}", "f_{12}", "1/2"},
    {"f_{122}", "e_{12}", "f_{2}", "1/4"},
    {"f_{122}", "e_{122}", "h_{1}", "1/4"},
    {"f_{122}", "e_{122}", "h_{2}", "1/2"},
    {"f_{122}", "e_{1122}", "e_{1}", "1/4"},
    {"f_{122}", "f_{1}", "f_{1122}", "1"},
    {"f_{1122}", "h_{1}", "f_{1122}", "1"},
    {"f_{1122}", "e_{1}", "f_{122}", "1"},
    {"f_{1122}", "e_{12}", "f_{12}", "1/2"},
    {"f_{1122}", "e_{122}", "f_{1}", "1/4"},
    {"f_{1122}", "e_{1122}", "h_{1}", "1/2"},
    {"f_{1122}", "e_{1122}", "h_{2}", "1/2"},
};

constexpr FormEntry kOsp32Form[] = {
    {"h_{1}", "h_{2}", "1/2"},
    {"h_{2}", "h_{1}", "1/2"},
    {"h_{2}", "h_{2}", "-1/2"},
    {"e_{1}", "f_{1}", "1"},
    {"e_{2}", "f_{2}", "1"},
    {"e_{12}", "f_{12}", "1/2"},
    {"e_{122}", "f_{122}", "1/4"},
    {"e_{1122}", "f_{1122}", "-1/4"},
    {"f_{1}", "e_{1}", "-1"},
    {"f_{2}", "e_{2}", "1"},
    {"f_{12}", "e_{12}", "-1/2"},
    {"f_{122}", "e_{122}", "-1/4"},
    {"f_{1122}", "e_{1122}", "-1/4"},
};

const char* const kOsp32Names[] = {"h_{1}", "h_{2}", "e_{1}",  "e_{2}",  "e_{12}",  "e_{122}",
                                   "e_{1122}", "f_{1}", "f_{2}", "f_{12}", "f_{122}", "f_{1122}"};
const bool kOsp32Odd[] = {false, false, true, false, true, true, false, true, false, true, true, false};

// Basis of the null space of the linear map whose columns are `cols`
// (each of length rows).
std::vector<LieVector> null_space(std::vector<LieVector> cols, std::size_t rows) {
  const std::size_t n = cols.size();
  std::vector<std::vector<mpq_class>> m(rows, std::vector<mpq_class>(n));
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < rows; ++r) m[r][c] = cols[c][r];
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < n && row < rows; ++c) {
    std::size_t p = row;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[row]);
    const mpq_class inv = 1 / m[row][c];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][c] == 0) continue;
      const mpq_class s = m[r][c];
      for (std::size_t cc = 0; cc < n; ++cc) m[r][cc] -= s * m[row][cc];
    }
    pivots.push_back(c);
    ++row;
  }
  std::vector<LieVector> out;
  for (std::size_t free = 0; free < n; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    LieVector v(n);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    out.push_back(std::move(v));
  }
  return out;
}

// Express the basis vectors of a subspace in coordinates of the ambient space.
LieVector combine(const std::vector<LieVector>& basis, const LieVector& coords, std::size_t dim) {
  LieVector out(dim);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) out[j] += coords[i] * basis[i][j];
  return out;
}

std::string format_rational(const mpq_class& q) { return q.get_str(); }

}  // namespace

LieVector operator+(const LieVector& a, const LieVector& b) {
  LieVector out(a);
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

LieVector operator-(const LieVector& a, const LieVector& b) {
  LieVector out(a);
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

LieVector operator*(const mpq_class& s, const LieVector& a) {
  LieVector out(a);
  for (auto& v : out) v *= s;
  return out;
}

bool is_zero(const LieVector& v) {
  return std::all_of(v.begin(), v.end(), [](const mpq_class& q) { return q == 0; });
}

SuperLieAlgebra::SuperLieAlgebra(std::vector<std::string> names, std::vector<bool> odd,
                                 std::vector<std::vector<LieVector>> structure,
                                 std::vector<std::vector<mpq_class>> form)
    : names_(std::move(names)), odd_(std::move(odd)), structure_(std::move(structure)), form_(std::move(form)) {
  const std::size_t n = names_.size();
  if (odd_.size() != n || structure_.size() != n || form_.size() != n)
    throw ConstructionInconsistent("superalgebra data has inconsistent sizes");
  for (std::size_t i = 0; i < n; ++i) {
    if (structure_[i].size() != n || form_[i].size() != n)
      throw ConstructionInconsistent("superalgebra data has inconsistent sizes");
    for (const auto& v : structure_[i])
      if (v.size() != n) throw ConstructionInconsistent("superalgebra data has inconsistent sizes");
  }
}

std::size_t SuperLieAlgebra::index(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  throw Error("unknown basis element '" + std::string(name) + "'");
}

LieVector SuperLieAlgebra::basis(std::size_t i) const {
  LieVector v(dim());
  v.at(i) = 1;
  return v;
}

LieVector SuperLieAlgebra::bracket(const LieVector& a, const LieVector& b) const {
  LieVector out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (b[j] == 0) continue;
      const mpq_class s = a[i] * b[j];
      const LieVector& c = structure_[i][j];
      for (std::size_t k = 0; k < dim(); ++k)
        if (c[k] != 0) out[k] += s * c[k];
    }
  }
  return out;
}

mpq_class SuperLieAlgebra::form(const LieVector& a, const LieVector& b) const {
  mpq_class out = 0;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j)
      if (b[j] != 0) out += a[i] * b[j] * form_[i][j];
  }
  return out;
}

bool SuperLieAlgebra::parity(const LieVector& v) const {
  int seen = -1;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (v[i] == 0) continue;
    const int p = odd_[i] ? 1 : 0;
    if (seen >= 0 && seen != p) throw GradingError("vector " + format(v) + " is not parity homogeneous");
    seen = p;
  }
  if (seen < 0) throw GradingError("zero vector has no parity");
  return seen == 1;
}

std::string SuperLieAlgebra::format(const LieVector& v) const {
  std::string out;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (v[i] == 0) continue;
    const mpq_class c = v[i];
    if (c < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    const mpq_class a = abs(c);
    if (a != 1) out += format_rational(a);
    out += names_[i];
  }
  return out.empty() ? "0" : out;
}

std::vector<std::string> integrity_violations(const SuperLieAlgebra& g) {
  std::vector<std::string> out;
  const std::size_t n = g.dim();
  auto sign = [&](std::size_t i, std::size_t j) { return (g.is_odd(i) && g.is_odd(j)) ? -1 : 1; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const LieVector& c = g.structure(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        if (c[k] != 0 && g.is_odd(k) != (g.is_odd(i) != g.is_odd(j)))
          out.push_back("[" + g.name(i) + "," + g.name(j) + "] has the wrong parity");
      }
      if (!is_zero(c + mpq_class(sign(i, j)) * g.structure(j, i)))
        out.push_back("super-antisymmetry fails for " + g.name(i) + ", " + g.name(j));
      if (g.form_entry(i, j) != 0 && g.is_odd(i) != g.is_odd(j))
        out.push_back("form pairs " + g.name(i) + " and " + g.name(j) + " of opposite parity");
      if (g.form_entry(i, j) != sign(i, j) * g.form_entry(j, i))
        out.push_back("form is not supersymmetric on " + g.name(i) + ", " + g.name(j));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const LieVector a = g.basis(i);
    for (std::size_t j = 0; j < n; ++j) {
      const LieVector b = g.basis(j);
      const LieVector ab = g.bracket(a, b);
      for (std::size_t k = 0; k < n; ++k) {
        const LieVector c = g.basis(k);
        // [a,[b,c]] = [[a,b],c] + (-1)^{ab}[b,[a,c]]
        const LieVector lhs = g.bracket(a, g.bracket(b, c));
        const LieVector rhs = g.bracket(ab, c) + mpq_class(sign(i, j)) * g.bracket(b, g.bracket(a, c));
        if (!is_zero(lhs - rhs))
          out.push_back("super-Jacobi fails for " + g.name(i) + ", " + g.name(j) + ", " + g.name(k));
        if (g.form(ab, c) != g.form(a, g.bracket(b, c)))
          out.push_back("form invariance fails for " + g.name(i) + ", " + g.name(j) + ", " + g.name(k));
      }
    }
  }
  return out;
}

LieAlgebraPtr build_osp32() {
  const std::size_t n = std::size(kOsp32Names);
  std::vector<std::string> names(std::begin(kOsp32Names), std::end(kOsp32Names));
  std::vector<bool> odd(std::begin(kOsp32Odd), std::end(kOsp32Odd));
  auto idx = [&](const char* s) {
    return static_cast<std::size_t>(std::find(names.begin(), names.end(), s) - names.begin());
  };
  std::vector<std::vector<LieVector>> structure(n, std::vector<LieVector>(n, LieVector(n)));
  for (const auto& e : kOsp32Brackets) structure[idx(e.left)][idx(e.right)][idx(e.result)] = mpq_class(e.coeff);
  std::vector<std::vector<mpq_class>> form(n, std::vector<mpq_class>(n));
  for (const auto& e : kOsp32Form) form[idx(e.left)][idx(e.right)] = mpq_class(e.value);
  for (auto& row : structure)
    for (auto& v : row)
      for (auto& q : v) q.canonicalize();
  for (auto& row : form)
    for (auto& q : row) q.canonicalize();
  auto g = std::make_shared<SuperLieAlgebra>(std::move(names), std::move(odd), std::move(structure), std::move(form));
  const auto bad = integrity_violations(*g);
  if (!bad.empty()) throw ConstructionInconsistent("osp(3|2) table: " + bad.front());
  return g;
}

mpq_class GradedDecomposition::degree_of(const SuperLieAlgebra& g, const LieVector& v) const {
  const LieVector xv = g.bracket(x, v);
  for (const auto& [j, basis] : spaces) {
    (void)basis;
    if (!is_zero(v) && is_zero(xv - j * v)) return j;
  }
  throw GradingError(g.format(v) + " is not homogeneous for ad x");
}

GradedDecomposition grade_by(const SuperLieAlgebra& g, const LieVector& x) {
  const std::size_t n = g.dim();
  std::vector<LieVector> ad(n);
  for (std::size_t i = 0; i < n; ++i) ad[i] = g.bracket(x, g.basis(i));
  GradedDecomposition out{x, {}};
  std::size_t total = 0;
  const long bound = static_cast<long>(2 * n);
  for (long twice = -bound; twice <= bound; ++twice) {
    mpq_class j(twice, 2);
    j.canonicalize();
    std::vector<LieVector> cols(n);
    for (std::size_t i = 0; i < n; ++i) cols[i] = ad[i] - j * g.basis(i);
    auto ker = null_space(cols, n);
    if (ker.empty()) continue;
    total += ker.size();
    out.spaces[j] = std::move(ker);
  }
  if (total != n)
    throw GradingError("ad " + g.format(x) + " is not diagonalizable with half-integer eigenvalues");
  return out;
}

std::size_t Centralizer::dim() const {
  std::size_t d = 0;
  for (const auto& [j, basis] : spaces) d += basis.size();
  return d;
}

Centralizer centralizer_of(const SuperLieAlgebra& g, const GradedDecomposition& grading, const LieVector& f,
                           const std::map<mpq_class, std::size_t>& expected_dims) {
  try {
    grading.degree_of(g, f);
  } catch (const GradingError&) {
    throw CentralizerError(g.format(f) + " is not homogeneous");
  }
  Centralizer out{f, {}};
  for (const auto& [j, basis] : grading.spaces) {
    std::vector<LieVector> cols;
    for (const auto& v : basis) cols.push_back(g.bracket(f, v));
    for (const auto& coords : null_space(cols, g.dim())) out.spaces[j].push_back(combine(basis, coords, g.dim()));
  }
  if (!expected_dims.empty()) {
    std::map<mpq_class, std::size_t> dims;
    for (const auto& [j, basis] : out.spaces) dims[j] = basis.size();
    if (dims != expected_dims) {
      std::ostringstream msg;
      msg << "centralizer of " << g.format(f) << " has dimensions";
      for (const auto& [j, d] : dims) msg << " " << d << "@" << j.get_str();
      throw CentralizerError(msg.str());
    }
  }
  return out;
}

mpq_class killing_form(const SuperLieAlgebra& g, const LieVector& a, const LieVector& b) {
  mpq_class out = 0;
  for (std::size_t c = 0; c < g.dim(); ++c) {
    const LieVector v = g.bracket(a, g.bracket(b, g.basis(c)));
    out += g.is_odd(c) ? -v[c] : v[c];
  }
  return out;
}

mpq_class check_dual_coxeter(const SuperLieAlgebra& g) {
  std::optional<mpq_class> ratio;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = 0; j < g.dim(); ++j) {
      const mpq_class kappa = killing_form(g, g.basis(i), g.basis(j));
      const mpq_class& form = g.form_entry(i, j);
      if (form == 0) {
        if (kappa != 0)
          throw NormalizationError("Killing form is nonzero on " + g.name(i) + ", " + g.name(j) +
                                   " where the invariant form vanishes");
        continue;
      }
      const mpq_class r = kappa / form;
      if (ratio && *ratio != r)
        throw NormalizationError("Killing form is not proportional to the invariant form at " + g.name(i) + ", " +
                                 g.name(j));
      ratio = r;
    }
  }
  if (!ratio) throw NormalizationError("invariant form vanishes identically");
  return *ratio / 2;
}

LieVector osp32_x(const SuperLieAlgebra& g) { return g.basis("h_{1}") - g.basis("h_{2}"); }
LieVector osp32_f(const SuperLieAlgebra& g) { return g.basis("f_{2}") + g.basis("f_{1122}"); }

std::string format_structure_constants(const SuperLieAlgebra& g) {
  std::ostringstream out;
  out << "# brackets\n";
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j)
      if (!is_zero(g.structure(i, j)))
        out << "[" << g.name(i) << "," << g.name(j) << "] = " << g.format(g.structure(i, j)) << "\n";
  out << "# form\n";
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j)
      if (g.form_entry(i, j) != 0)
        out << "(" << g.name(i) << "|" << g.name(j) << ") = " << g.form_entry(i, j).get_str() << "\n";
  return out.str();
}

std::string current_name(const std::string& basis_name) { return "J^{(" + basis_name + ")}"; }

nlohmann::json affine_algebra_json(const SuperLieAlgebra& g, const std::vector<std::string>& subset,
                                   const std::string& level, const GradedDecomposition* grading) {
  std::vector<std::size_t> ids;
  for (const auto& s : subset) ids.push_back(g.index(s));
  nlohmann::json gens = nlohmann::json::array();
  for (std::size_t i : ids) {
    mpq_class weight = 1;
    if (grading) weight -= grading->degree_of(g, g.basis(i));
    gens.push_back({{"name", current_name(g.name(i))},
                    {"parity", g.is_odd(i) ? "odd" : "even"},
                    {"weight", weight.get_str()},
                    {"charged", false}});
  }
  nlohmann::json brackets = nlohmann::json::array();
  for (std::size_t i : ids) {
    for (std::size_t j : ids) {
      nlohmann::json lambda = nlohmann::json::object();
      std::string constant;
      const LieVector& c = g.structure(i, j);
      for (std::size_t k = 0; k < g.dim(); ++k) {
        if (c[k] == 0) continue;
        if (std::find(ids.begin(), ids.end(), k) == ids.end())
          throw Error("[" + g.name(i) + "," + g.name(j) + "] leaves the current subset");
        if (!constant.empty()) constant += " + ";
        constant += "{" + c[k].get_str() + "}" + current_name(g.name(k));
      }
      if (!constant.empty()) lambda["0"] = constant;
      if (g.form_entry(i, j) != 0)
        lambda["1"] = "{(" + level + ")*(" + g.form_entry(i, j).get_str() + ")}|0>";
      if (!lambda.empty())
        brackets.push_back({{"left", current_name(g.name(i))}, {"right", current_name(g.name(j))}, {"lambda", lambda}});
    }
  }
  return {{"format", "vcalc-algebra/1"},
          {"name", "affine"},
          {"unlisted_brackets_vanish", true},
          {"generators", gens},
          {"brackets", brackets},
          {"derivative_rules", nlohmann::json::array()}};
}

}  // namespace vcalc
