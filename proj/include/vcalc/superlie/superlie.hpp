#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace vcalc {

// Coordinates in the basis of a SuperLieAlgebra.
using LieVector = std::vector<mpq_class>;

// Finite-dimensional Lie superalgebra over Q given by structure constants in a
// homogeneous basis and an even invariant form. For two odd arguments the
// bracket is the anticommutator.
class SuperLieAlgebra {
 public:
  SuperLieAlgebra(std::vector<std::string> names, std::vector<bool> odd,
                  std::vector<std::vector<LieVector>> structure, std::vector<std::vector<mpq_class>> form);

  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  bool is_odd(std::size_t i) const { return odd_[i]; }
  std::size_t index(std::string_view name) const;  // throws Error for unknown names
  LieVector basis(std::size_t i) const;
  LieVector basis(std::string_view name) const { return basis(index(name)); }
  LieVector zero() const { return LieVector(dim()); }

  const LieVector& structure(std::size_t i, std::size_t j) const { return structure_[i][j]; }
  const mpq_class& form_entry(std::size_t i, std::size_t j) const { return form_[i][j]; }

  LieVector bracket(const LieVector& a, const LieVector& b) const;
  mpq_class form(const LieVector& a, const LieVector& b) const;
  // Parity of a homogeneous vector; throws GradingError for a mixed or zero vector.
  bool parity(const LieVector& v) const;

  // "e_{1}-f_{12}", "1/2h_{1}+1/2h_{2}", "0".
  std::string format(const LieVector& v) const;

 private:
  std::vector<std::string> names_;
  std::vector<bool> odd_;
  std::vector<std::vector<LieVector>> structure_;
  std::vector<std::vector<mpq_class>> form_;
};

using LieAlgebraPtr = std::shared_ptr<const SuperLieAlgebra>;

LieVector operator+(const LieVector& a, const LieVector& b);
LieVector operator-(const LieVector& a, const LieVector& b);
LieVector operator*(const mpq_class& s, const LieVector& a);
bool is_zero(const LieVector& v);

// Human-readable integrity violations (super-antisymmetry, super-Jacobi, form
// evenness, supersymmetry and invariance). Empty when the data is consistent.
std::vector<std::string> integrity_violations(const SuperLieAlgebra& g);

// osp(3|2) in the basis h_{1}, h_{2}, e_{1}, e_{2}, e_{12}, e_{122}, e_{1122},
// f_{1}, f_{2}, f_{12}, f_{122}, f_{1122}. Throws ConstructionInconsistent when
// the table fails integrity_violations.
LieAlgebraPtr build_osp32();

struct GradedDecomposition {
  LieVector x;
  std::map<mpq_class, std::vector<LieVector>> spaces;  // eigenvalue -> basis of g_j

  // Degree of a homogeneous vector; throws GradingError otherwise.
  mpq_class degree_of(const SuperLieAlgebra& g, const LieVector& v) const;
};

// Eigenspaces of ad x. Throws GradingError unless ad x is diagonalizable with
// half-integer eigenvalues.
GradedDecomposition grade_by(const SuperLieAlgebra& g, const LieVector& x);

struct Centralizer {
  LieVector f;
  std::map<mpq_class, std::vector<LieVector>> spaces;  // degree -> basis of g^f_j
  std::size_t dim() const;
};

// g^f, graded by the decomposition. f must be homogeneous. When `expected_dims`
// is non-empty, any other dimension profile throws CentralizerError.
Centralizer centralizer_of(const SuperLieAlgebra& g, const GradedDecomposition& grading, const LieVector& f,
                           const std::map<mpq_class, std::size_t>& expected_dims = {});

// supertrace(ad a ad b)
mpq_class killing_form(const SuperLieAlgebra& g, const LieVector& a, const LieVector& b);
// Returns h^vee such that killing = 2 h^vee (.|.) on all basis pairs; throws
// NormalizationError when the two forms are not proportional.
mpq_class check_dual_coxeter(const SuperLieAlgebra& g);

// Reduction data for osp(3|2): x = h_{1}-h_{2}, f = f_{2}+f_{1122}.
LieVector osp32_x(const SuperLieAlgebra& g);
LieVector osp32_f(const SuperLieAlgebra& g);

// Plain-text table: one "[a,b] = c" line per nonzero bracket, then "(a|b) = v".
std::string format_structure_constants(const SuperLieAlgebra& g);
// Affine currents J^{(a)} over a basis subset spanning a subalgebra, in the
// vertexcore configuration format: [J^{(a)}_λ J^{(b)}] = J^{([a,b])} + λ level (a|b).
// `level` is scalar text. With a grading, J^{(a)} gets weight 1 - deg(a),
// otherwise 1. Throws Error when the subset is not closed under the bracket.
nlohmann::json affine_algebra_json(const SuperLieAlgebra& g, const std::vector<std::string>& subset,
                                   const std::string& level, const GradedDecomposition* grading = nullptr);
// Generator name of the current attached to a basis element: "J^{(e_{1})}".
std::string current_name(const std::string& basis_name);

}  // namespace vcalc
