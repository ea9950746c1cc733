#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "vcalc/reduction/report.hpp"
#include "vcalc/superlie/superlie.hpp"
#include "vcalc/vertexcore/algebra.hpp"

namespace vcalc {

// Numeric free-field oracle. Fields are realized as mode operators on the Fock
// space spanned by creation monomials; nothing here goes through the λ-bracket
// rewriting of Calculus. Degrees and modes are stored doubled so that
// Neveu-Schwarz fermion modes are integers.

struct OracleField {
  std::string name;  // generator name in the engine's free-field algebra
  bool odd = false;  // odd fields have weight 1/2, even ones weight 1
};

// Basis vector: sorted creation labels field * kModeStride + (doubled positive mode).
using FockMonomial = std::vector<std::int32_t>;
using FockVector = std::map<FockMonomial, std::complex<double>>;

class TruncatedFockSpace {
 public:
  static constexpr std::int32_t kModeStride = 1 << 16;

  // Bosons: [X_m, Y_n] = m c_XY δ_{m+n,0}. Fermions: {X_r, Y_s} = c_XY δ_{r+s,0}.
  TruncatedFockSpace(std::vector<OracleField> fields, std::vector<std::vector<std::complex<double>>> pairing,
                     mpq_class cutoff, mpq_class k);

  // Two currents J^{(h_i)} at level k+1/2 and the fermions Φ_{-1}, Φ_{12} with
  // ⟨a|b⟩ = (f|[a,b]), read off the Lie superalgebra.
  static TruncatedFockSpace free_field(const SuperLieAlgebra& g, const mpq_class& k, mpq_class cutoff = 4);

  const std::vector<OracleField>& fields() const { return fields_; }
  const std::complex<double>& pairing(std::size_t a, std::size_t b) const { return pairing_[a][b]; }
  mpq_class cutoff() const { return mpq_class(twice_cutoff_, 2); }
  int twice_cutoff() const { return twice_cutoff_; }
  const mpq_class& k() const { return k_; }

  // Basis monomials of degree <= cutoff.
  std::vector<FockMonomial> basis() const;
  std::size_t dimension() const { return basis().size(); }
  static int twice_degree(const FockMonomial& m);

  // Single generator mode X_m (doubled m), components of degree > twice_cap dropped.
  FockVector apply_mode(std::size_t field, int twice_m, const FockVector& v, int twice_cap) const;

 private:
  std::vector<OracleField> fields_;
  std::vector<std::vector<std::complex<double>>> pairing_;
  int twice_cutoff_;
  mpq_class k_;
};

// Vector of the state a under the state-field correspondence: a_(-1)|0⟩.
// Throws CutoffTooSmall when the weight of a exceeds the cutoff.
FockVector realize_state(const State& a, const VertexAlgebra& alg, const TruncatedFockSpace& space,
                         const Branch& branch = {});

// a_(n) applied to realize_state(b) using composite mode sums. Exact for every
// component of degree <= cutoff. Throws CutoffTooSmall when a, b or the result
// has weight above the cutoff.
FockVector numeric_nth_product(const State& a, int n, const State& b, const VertexAlgebra& alg,
                               const TruncatedFockSpace& space, const Branch& branch = {});

double max_difference(const FockVector& a, const FockVector& b);

struct CrosscheckOptions {
  std::vector<mpq_class> ks{mpq_class(1, 3), mpq_class(1), mpq_class(2)};
  mpq_class cutoff = 4;
  mpq_class max_pair_weight = 4;
  std::vector<int> ns{-1, 0, 1, 2, 3};
  double tolerance = 1e-9;
  unsigned threads = 0;  // 0: hardware concurrency
};

// Every canonical monomial pair over the free generators of combined weight at
// most max_pair_weight: symbolic nth_product realized numerically versus
// numeric_nth_product. One report entry per (k, n).
VerificationReport crosscheck(const CrosscheckOptions& options = {});

}  // namespace vcalc
