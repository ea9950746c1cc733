#include "vcalc/fockoracle/fockoracle.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <sstream>
#include <thread>

#include "vcalc/errors.hpp"
#include "vcalc/reduction/reduction.hpp"
#include "vcalc/vertexcore/calculus.hpp"
#include "vcalc/vertexcore/notation.hpp"

namespace vcalc {

namespace {

using cplx = std::complex<double>;

int twice(const mpq_class& q) {
  mpq_class t = q * 2;
  if (t.get_den() != 1) throw UsageError("cutoff must be a multiple of 1/2");
  return static_cast<int>(t.get_num().get_si());
}

void axpy(FockVector& y, cplx a, const FockVector& x) {
  if (a == cplx(0)) return;
  for (const auto& [m, c] : x) {
    auto& slot = y[m];
    slot += a * c;
  }
}

void prune(FockVector& v) {
  for (auto it = v.begin(); it != v.end();) it = (it->second == cplx(0)) ? v.erase(it) : std::next(it);
}

int max_twice_degree(const FockVector& v) {
  int d = -1;
  for (const auto& [m, c] : v) d = std::max(d, TruncatedFockSpace::twice_degree(m));
  return d;
}

// Maps engine generator indices to oracle fields.
struct Realizer {
  const TruncatedFockSpace& space;
  std::vector<int> field_of;  // by generator index
  std::vector<int> twice_weight;

  Realizer(const VertexAlgebra& alg, const TruncatedFockSpace& s) : space(s) {
    for (const auto& gen : alg.generators()) {
      int found = -1;
      for (std::size_t i = 0; i < s.fields().size(); ++i)
        if (s.fields()[i].name == gen.name) found = static_cast<int>(i);
      if (found < 0) throw ConfigError("oracle has no field for generator " + gen.name);
      if (s.fields()[found].odd != gen.odd) throw ConfigError("parity mismatch for " + gen.name);
      field_of.push_back(found);
      twice_weight.push_back(gen.odd ? 1 : 2);
    }
  }

  int factor_weight(const Factor& f) const { return twice_weight[f.gen] + 2 * static_cast<int>(f.nder); }

  int weight(const Monomial& m, std::size_t from = 0) const {
    int w = 0;
    for (std::size_t i = from; i < m.size(); ++i) w += factor_weight(m[i]);
    return w;
  }

  bool odd(const Monomial& m, std::size_t from = 0) const {
    bool o = false;
    for (std::size_t i = from; i < m.size(); ++i) o ^= space.fields()[field_of[m[i].gen]].odd;
    return o;
  }

  // (∂^j X)_m = Π_{t<j} (-(m + h_X + t)) X_m
  FockVector factor_mode(const Factor& f, int twice_m, const FockVector& v, int cap) const {
    auto out = space.apply_mode(field_of[f.gen], twice_m, v, cap);
    cplx scale = 1;
    for (unsigned t = 0; t < f.nder; ++t) scale *= -(twice_m + twice_weight[f.gen] + 2 * static_cast<int>(t)) / 2.0;
    if (scale == cplx(0)) return {};
    if (scale != cplx(1))
      for (auto& [m, c] : out) c *= scale;
    return out;
  }

  // Mode n (doubled) of the right-nested product m[from..] applied to v.
  //   :AB:_n = Σ_{m <= -h_A} A_m B_{n-m} + (-1)^{AB} Σ_{m > -h_A} B_{n-m} A_m
  FockVector mode(const Monomial& m, std::size_t from, int twice_n, const FockVector& v, int cap) const {
    if (cap < 0 || v.empty()) return {};
    if (from == m.size()) {
      if (twice_n != 0) return {};
      FockVector out;
      for (const auto& [k, c] : v)
        if (TruncatedFockSpace::twice_degree(k) <= cap) out.emplace(k, c);
      return out;
    }
    const Factor& a = m[from];
    if (from + 1 == m.size()) return factor_mode(a, twice_n, v, cap);
    const int ha = factor_weight(a);
    const bool sign = space.fields()[field_of[a.gen]].odd && odd(m, from + 1);
    FockVector out;
    // Creation part: A_m raises the degree by -m, so -m <= cap.
    for (int tm = -ha; tm >= -cap; tm -= 2) {
      auto w = mode(m, from + 1, twice_n - tm, v, cap + tm);
      if (w.empty()) continue;
      axpy(out, 1, factor_mode(a, tm, w, cap));
    }
    // Annihilation part: A_m v vanishes once m exceeds the top degree of v.
    const int top = max_twice_degree(v);
    for (int tm = -ha + 2; tm <= top; tm += 2) {
      const int inner_cap = cap + twice_n - tm;
      if (inner_cap < 0) continue;
      auto w = factor_mode(a, tm, v, inner_cap);
      if (w.empty()) continue;
      axpy(out, sign ? -1.0 : 1.0, mode(m, from + 1, twice_n - tm, w, cap));
    }
    prune(out);
    return out;
  }
};

FockVector vacuum_vector() { return FockVector{{FockMonomial{}, cplx(1)}}; }

}  // namespace

TruncatedFockSpace::TruncatedFockSpace(std::vector<OracleField> fields, std::vector<std::vector<cplx>> pairing,
                                       mpq_class cutoff, mpq_class k)
    : fields_(std::move(fields)), pairing_(std::move(pairing)), twice_cutoff_(twice(cutoff)), k_(k) {
  if (twice_cutoff_ < 0) throw UsageError("cutoff must be non-negative");
  if (pairing_.size() != fields_.size()) throw UsageError("pairing matrix has the wrong size");
  for (const auto& row : pairing_)
    if (row.size() != fields_.size()) throw UsageError("pairing matrix has the wrong size");
}

TruncatedFockSpace TruncatedFockSpace::free_field(const SuperLieAlgebra& g, const mpq_class& k, mpq_class cutoff) {
  // (field name, basis element)
  const std::vector<std::pair<std::string, std::string>> table = {
      {"J^{(h_{1})}", "h_{1}"}, {"J^{(h_{2})}", "h_{2}"}, {"\\Phi_{-1}", "f_{1}"}, {"\\Phi_{12}", "e_{12}"}};
  const auto f = osp32_f(g);
  std::vector<OracleField> fields;
  for (const auto& [name, basis] : table) fields.push_back({name, g.is_odd(g.index(basis))});
  std::vector<std::vector<cplx>> pairing(table.size(), std::vector<cplx>(table.size()));
  const double level = mpq_class(k + mpq_class(1, 2)).get_d();
  for (std::size_t a = 0; a < table.size(); ++a)
    for (std::size_t b = 0; b < table.size(); ++b) {
      if (fields[a].odd != fields[b].odd) continue;
      const auto x = g.basis(table[a].second), y = g.basis(table[b].second);
      if (fields[a].odd)
        pairing[a][b] = g.form(f, g.bracket(x, y)).get_d();
      else
        pairing[a][b] = level * g.form(x, y).get_d();
    }
  return TruncatedFockSpace(std::move(fields), std::move(pairing), cutoff, k);
}

int TruncatedFockSpace::twice_degree(const FockMonomial& m) {
  int d = 0;
  for (auto label : m) d += label % kModeStride;
  return d;
}

std::vector<FockMonomial> TruncatedFockSpace::basis() const {
  // All creation labels of degree <= cutoff, in sorted order.
  std::vector<std::int32_t> labels;
  for (std::size_t f = 0; f < fields_.size(); ++f)
    for (int tm = fields_[f].odd ? 1 : 2; tm <= twice_cutoff_; tm += 2)
      labels.push_back(static_cast<std::int32_t>(f) * kModeStride + tm);
  std::sort(labels.begin(), labels.end());
  std::vector<FockMonomial> out;
  FockMonomial cur;
  auto rec = [&](auto&& self, std::size_t start, int deg) -> void {
    out.push_back(cur);
    for (std::size_t i = start; i < labels.size(); ++i) {
      const int d = labels[i] % kModeStride;
      if (deg + d > twice_cutoff_) continue;
      const bool odd = fields_[labels[i] / kModeStride].odd;
      cur.push_back(labels[i]);
      self(self, odd ? i + 1 : i, deg + d);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

FockVector TruncatedFockSpace::apply_mode(std::size_t field, int twice_m, const FockVector& v, int twice_cap) const {
  FockVector out;
  if (twice_m == 0) return out;  // boson zero modes vanish on the vacuum module
  const bool odd = fields_[field].odd;
  if (odd != (twice_m % 2 != 0)) throw UsageError("mode parity does not match the field");
  for (const auto& [mono, c] : v) {
    if (twice_m < 0) {
      if (twice_degree(mono) - twice_m > twice_cap) continue;
      const std::int32_t label = static_cast<std::int32_t>(field) * kModeStride - twice_m;
      auto pos = std::lower_bound(mono.begin(), mono.end(), label);
      if (odd && pos != mono.end() && *pos == label) continue;
      int passed = 0;
      if (odd)
        for (auto it = mono.begin(); it != pos; ++it) passed += fields_[*it / kModeStride].odd;
      FockMonomial next(mono.begin(), pos);
      next.push_back(label);
      next.insert(next.end(), pos, mono.end());
      out[next] += (passed % 2 ? -c : c);
    } else {
      if (twice_degree(mono) - twice_m > twice_cap) continue;
      int passed = 0;
      for (std::size_t j = 0; j < mono.size(); ++j) {
        const std::size_t g = mono[j] / kModeStride;
        const int tm = mono[j] % kModeStride;
        if (tm == twice_m && fields_[g].odd == odd && pairing_[field][g] != cplx(0)) {
          cplx value = pairing_[field][g] * c;
          if (!odd) value *= twice_m / 2.0;
          if (odd && passed % 2) value = -value;
          FockMonomial next = mono;
          next.erase(next.begin() + static_cast<std::ptrdiff_t>(j));
          out[next] += value;
        }
        passed += fields_[g].odd;
      }
    }
  }
  prune(out);
  return out;
}

FockVector realize_state(const State& a, const VertexAlgebra& alg, const TruncatedFockSpace& space,
                         const Branch& branch) {
  return numeric_nth_product(a, -1, State::vacuum(), alg, space, branch);
}

FockVector numeric_nth_product(const State& a, int n, const State& b, const VertexAlgebra& alg,
                               const TruncatedFockSpace& space, const Branch& branch) {
  Realizer r(alg, space);
  const int cap = space.twice_cutoff();
  const GaussRational k0(space.k());

  FockVector vb;
  for (const auto& [m, c] : b.terms()) {
    if (r.weight(m) > cap) throw CutoffTooSmall("right argument exceeds the cutoff");
    FockVector term = r.mode(m, 0, -r.weight(m), vacuum_vector(), cap);
    axpy(vb, c.eval(k0, branch), term);
  }
  FockVector out;
  const int top_b = max_twice_degree(vb);
  for (const auto& [m, c] : a.terms()) {
    const int ha = r.weight(m);
    if (ha > cap) throw CutoffTooSmall("left argument exceeds the cutoff");
    const int twice_mode = 2 * n - ha + 2;
    if (top_b - twice_mode > cap) throw CutoffTooSmall("product exceeds the cutoff");
    axpy(out, c.eval(k0, branch), r.mode(m, 0, twice_mode, vb, cap));
  }
  prune(out);
  return out;
}

double max_difference(const FockVector& a, const FockVector& b) {
  double d = 0;
  for (const auto& [m, c] : a) {
    auto it = b.find(m);
    d = std::max(d, std::abs(c - (it == b.end() ? cplx(0) : it->second)));
  }
  for (const auto& [m, c] : b)
    if (!a.count(m)) d = std::max(d, std::abs(c));
  return d;
}

namespace {

// Canonical monomials: non-decreasing factors, odd factors not repeated.
std::vector<Monomial> monomials_up_to(const VertexAlgebra& alg, int twice_max) {
  std::vector<Factor> factors;
  for (std::uint32_t g = 0; g < alg.generators().size(); ++g) {
    const int w = twice(alg.generators()[g].weight);
    for (std::uint32_t d = 0; w + 2 * static_cast<int>(d) <= twice_max; ++d) factors.push_back({g, d});
  }
  std::sort(factors.begin(), factors.end());
  std::vector<Monomial> out;
  Monomial cur;
  auto rec = [&](auto&& self, std::size_t start, int w) -> void {
    out.push_back(cur);
    for (std::size_t i = start; i < factors.size(); ++i) {
      const auto& f = factors[i];
      const int fw = twice(alg.generators()[f.gen].weight) + 2 * static_cast<int>(f.nder);
      if (w + fw > twice_max) continue;
      cur.push_back(f);
      self(self, alg.generators()[f.gen].odd ? i + 1 : i, w + fw);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

std::string format_double(double d) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << d;
  return os.str();
}

}  // namespace

VerificationReport crosscheck(const CrosscheckOptions& opt) {
  const auto setup = build_setup(RealizationMode::FreeField);
  const auto& alg = *setup.algebra;
  const auto lie = build_osp32();
  const int twice_pair = twice(opt.max_pair_weight);

  auto monos = monomials_up_to(alg, twice_pair);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < monos.size(); ++i)
    for (std::size_t j = 0; j < monos.size(); ++j)
      if (twice(alg.weight(monos[i]) + alg.weight(monos[j])) <= twice_pair) pairs.emplace_back(i, j);

  VerificationReport report;
  report.suite = "oracle";
  report.mode = "free";
  report.header.push_back("cutoff = " + mpq_class(opt.cutoff).get_str());
  report.header.push_back("monomials = " + std::to_string(monos.size()) + ", pairs = " + std::to_string(pairs.size()) +
                          " (combined weight <= " + opt.max_pair_weight.get_str() + ")");
  report.header.push_back("tolerance = " + format_double(opt.tolerance));

  unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  for (const auto& k : opt.ks) {
    const auto space = TruncatedFockSpace::free_field(*lie, k, opt.cutoff);
    for (int n : opt.ns) {
      auto t0 = std::chrono::steady_clock::now();
      std::atomic<std::size_t> next{0};
      std::mutex mu;
      double worst = 0;
      std::size_t checked = 0;
      std::string worst_case, error;
      auto worker = [&] {
        Calculus calc(setup.algebra);
        double local_worst = 0;
        std::size_t local_checked = 0;
        std::string local_case;
        try {
          for (std::size_t p; (p = next.fetch_add(1)) < pairs.size();) {
            const State a(monos[pairs[p].first]), b(monos[pairs[p].second]);
            const State symbolic = calc.nth_product(a, n, b);
            auto lhs = realize_state(symbolic, alg, space);
            auto rhs = numeric_nth_product(a, n, b, alg, space);
            const double d = max_difference(lhs, rhs);
            ++local_checked;
            if (d > local_worst || local_case.empty()) {
              local_worst = std::max(d, local_worst);
              local_case = format_state(alg, a) + " _(" + std::to_string(n) + ") " + format_state(alg, b);
            }
          }
        } catch (const std::exception& e) {
          std::lock_guard lock(mu);
          error = e.what();
        }
        std::lock_guard lock(mu);
        checked += local_checked;
        if (local_worst >= worst) {
          worst = local_worst;
          worst_case = local_case;
        }
      };
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
      for (auto& t : pool) t.join();

      ReportEntry e;
      e.identity = "k=" + k.get_str() + " n=" + std::to_string(n) + " (" + std::to_string(checked) + " pairs)";
      e.expected = "max |symbolic - numeric| <= " + format_double(opt.tolerance);
      e.computed = error.empty() ? "max " + format_double(worst) + " at " + worst_case : "error: " + error;
      e.pass = error.empty() && worst <= opt.tolerance && checked == pairs.size();
      e.difference = e.pass ? "0" : e.computed;
      e.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      report.entries.push_back(e);
    }
  }
  return report;
}

}  // namespace vcalc
