#include <doctest.h>

#include <cmath>

#include "vcalc/errors.hpp"
#include "vcalc/fockoracle/fockoracle.hpp"
#include "vcalc/reduction/reduction.hpp"
#include "vcalc/vertexcore/calculus.hpp"

using namespace vcalc;
using cplx = std::complex<double>;

namespace {

const SuperLieAlgebra& lie() {
  static const auto g = build_osp32();
  return *g;
}

const GeneratorQuadruple& quad() {
  static const GeneratorQuadruple q = build_generators(build_setup(RealizationMode::FreeField));
  return q;
}

const VertexAlgebra& alg() { return *quad().algebra; }

FockVector basis_vector(const FockMonomial& m) { return FockVector{{m, cplx(1)}}; }

FockVector combine(const FockVector& a, cplx s, const FockVector& b) {
  FockVector out = a;
  for (const auto& [m, c] : b) out[m] += s * c;
  return out;
}

double norm(const FockVector& v) { return max_difference(v, {}); }

// Coefficients of Π_{n>=1} (1-q^n)^{-2} Π_{r in N-1/2} (1+q^r)^2 in powers of q^{1/2}.
std::vector<long> character(int twice_cutoff) {
  std::vector<long> c(twice_cutoff + 1, 0);
  c[0] = 1;
  for (int boson = 0; boson < 2; ++boson)
    for (int d = 2; d <= twice_cutoff; d += 2)
      for (int i = d; i <= twice_cutoff; ++i) c[i] += c[i - d];
  for (int fermion = 0; fermion < 2; ++fermion)
    for (int d = 1; d <= twice_cutoff; d += 2)
      for (int i = twice_cutoff; i >= d; --i) c[i] += c[i - d];
  return c;
}

}  // namespace

TEST_CASE("Fock space dimensions match the character") {
  for (int twice_n = 0; twice_n <= 8; ++twice_n) {
    auto space = TruncatedFockSpace::free_field(lie(), 1, mpq_class(twice_n, 2));
    auto c = character(twice_n);
    long total = 0;
    for (long x : c) total += x;
    CHECK(space.dimension() == static_cast<std::size_t>(total));
  }
  CHECK(TruncatedFockSpace::free_field(lie(), 1, 1).dimension() == 6);
  CHECK_THROWS_AS(TruncatedFockSpace::free_field(lie(), 1, mpq_class(1, 3)), UsageError);
}

TEST_CASE("mode commutators reproduce the declared constants") {
  auto space = TruncatedFockSpace::free_field(lie(), mpq_class(2), 3);
  const int cap = 40;
  const auto basis = space.basis();
  // Bosons: level (k+1/2)(h_i|h_j). Fermions: (f|[a,b]) with ⟨Φ_{-1}|Φ_{12}⟩ = 1/2, ⟨Φ_{12}|Φ_{12}⟩ = -1/4.
  CHECK(space.pairing(0, 1) == cplx(2.5 * 0.5));
  CHECK(space.pairing(1, 1) == cplx(2.5 * -0.5));
  CHECK(space.pairing(0, 0) == cplx(0));
  CHECK(space.pairing(2, 3) == cplx(0.5));
  CHECK(space.pairing(3, 3) == cplx(-0.25));
  CHECK(space.pairing(0, 2) == cplx(0));
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y) {
      const bool ox = space.fields()[x].odd, oy = space.fields()[y].odd;
      for (int m = -4; m <= 4; ++m)
        for (int n = -4; n <= 4; ++n) {
          if ((m % 2 != 0) != ox || (n % 2 != 0) != oy) continue;
          for (std::size_t b = 0; b < basis.size(); b += 7) {
            auto v = basis_vector(basis[b]);
            auto xy = space.apply_mode(x, m, space.apply_mode(y, n, v, cap), cap);
            auto yx = space.apply_mode(y, n, space.apply_mode(x, m, v, cap), cap);
            const double sign = (ox && oy) ? 1.0 : -1.0;
            auto comm = combine(xy, sign, yx);
            cplx expected = 0;
            if (m + n == 0 && ox == oy && m != 0) expected = space.pairing(x, y) * (ox ? 1.0 : m / 2.0);
            // the zero modes vanish identically on this module
            CHECK(max_difference(comm, combine({}, expected, v)) < 1e-12);
          }
        }
    }
}

TEST_CASE("state realization") {
  auto space = TruncatedFockSpace::free_field(lie(), 1, 4);
  const auto& a = alg();
  auto vac = realize_state(State::vacuum(), a, space);
  CHECK(vac.size() == 1);
  CHECK(vac.begin()->first.empty());
  CHECK(vac.begin()->second == cplx(1));

  const auto phi = a.field("\\Phi_{-1}");
  auto v = realize_state(phi, a, space);
  REQUIRE(v.size() == 1);
  CHECK(v.begin()->first == FockMonomial{2 * TruncatedFockSpace::kModeStride + 1});

  Calculus calc(quad().algebra);
  auto two = realize_state(calc.normal_order(phi, a.field("\\Phi_{12}")), a, space);
  REQUIRE(two.size() == 1);
  CHECK(two.begin()->first.size() == 2);
  CHECK(std::abs(two.begin()->second) == doctest::Approx(1.0));
  // Annihilating Φ_{12} contracts with both factors: weights 1/2 and -1/4.
  auto back = space.apply_mode(3, 1, two, 8);
  REQUIRE(back.size() == 2);
  CHECK(std::abs(back.at(FockMonomial{3 * TruncatedFockSpace::kModeStride + 1})) == doctest::Approx(0.5));
  CHECK(std::abs(back.at(FockMonomial{2 * TruncatedFockSpace::kModeStride + 1})) == doctest::Approx(0.25));

  // ∂ is L_{-1}: (∂J)_(-1)|0⟩ = J_{-2}|0⟩.
  auto dj = realize_state(a.field("J^{(h_{1})}", 1), a, space);
  REQUIRE(dj.size() == 1);
  CHECK(dj.begin()->first == FockMonomial{4});
  CHECK(dj.begin()->second == cplx(1));

  for (const auto* s : {&quad().G, &quad().L, &quad().W, &quad().U})
    CHECK(max_difference(numeric_nth_product(*s, -1, State::vacuum(), a, space), realize_state(*s, a, space)) < 1e-12);
}

TEST_CASE("cutoff errors") {
  auto small = TruncatedFockSpace::free_field(lie(), 1, 1);
  CHECK_THROWS_AS(realize_state(quad().L, alg(), small), CutoffTooSmall);
  CHECK_THROWS_AS(numeric_nth_product(quad().L, 1, alg().field("\\Phi_{-1}"), alg(), small), CutoffTooSmall);
  auto big = TruncatedFockSpace::free_field(lie(), 1, 4);
  CHECK_THROWS_AS(numeric_nth_product(quad().W, -2, quad().W, alg(), big), CutoffTooSmall);
  CHECK_NOTHROW(numeric_nth_product(quad().W, -1, quad().W, alg(), big));
  CHECK_NOTHROW(numeric_nth_product(quad().W, 0, quad().W, alg(), big));
}

TEST_CASE("G_(0)G/2 against L at k = 1") {
  auto space = TruncatedFockSpace::free_field(lie(), 1, 4);
  auto gg = numeric_nth_product(quad().G, 0, quad().G, alg(), space);
  for (auto& [m, c] : gg) c *= 0.5;
  auto l = realize_state(quad().L, alg(), space);
  CHECK(norm(l) > 0.1);
  CHECK(max_difference(gg, l) <= 1e-9);
}

TEST_CASE("W_(3)W at k = 1/3 is c/2 times the vacuum") {
  auto space = TruncatedFockSpace::free_field(lie(), mpq_class(1, 3), 4);
  auto w3w = numeric_nth_product(quad().W, 3, quad().W, alg(), space);
  REQUIRE(w3w.size() == 1);
  CHECK(w3w.begin()->first.empty());
  // c = 12 here; the λ^3 coefficient of [W_λ W] is c/12 = 1, the 3rd product 3! times that.
  CHECK(std::abs(w3w.begin()->second - cplx(6)) < 1e-9);
  Calculus calc(quad().algebra);
  for (int n = -1; n <= 3; ++n) {
    auto symbolic = realize_state(calc.nth_product(quad().W, n, quad().W), alg(), space);
    CHECK(max_difference(numeric_nth_product(quad().W, n, quad().W, alg(), space), symbolic) < 1e-9);
  }
}

TEST_CASE("oracle detects a wrong constant") {
  auto good = TruncatedFockSpace::free_field(lie(), 1, 4);
  auto fields = good.fields();
  std::vector<std::vector<cplx>> pairing(4, std::vector<cplx>(4));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) pairing[i][j] = good.pairing(i, j);
  pairing[3][3] *= 1.001;
  TruncatedFockSpace bad(fields, pairing, 4, 1);
  Calculus calc(quad().algebra);
  const State& g = quad().G;
  auto symbolic = calc.nth_product(g, 0, g);
  CHECK(max_difference(realize_state(symbolic, alg(), good), numeric_nth_product(g, 0, g, alg(), good)) < 1e-9);
  CHECK(max_difference(realize_state(symbolic, alg(), bad), numeric_nth_product(g, 0, g, alg(), bad)) > 1e-6);
}

TEST_CASE("crosscheck over monomial pairs") {
  CrosscheckOptions opt;
  opt.ks = {mpq_class(1, 3), mpq_class(1), mpq_class(2)};
  auto report = crosscheck(opt);
  CHECK(report.entries.size() == 15);
  for (const auto& e : report.entries) {
    INFO(e.identity << ": " << e.computed);
    CHECK(e.pass);
  }
  CHECK(report.passed());
}
