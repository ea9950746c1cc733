// Acceptance runner: one PASS/FAIL line per criterion.
//
//   acceptance [--expect-red N,M,...]
//
// Without the flag the exit status is 0 iff every criterion passes. With it, the
// status is 0 iff the failing criteria are exactly the listed ones.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "property_checks.hpp"
#include "sample_algebras.hpp"
#include "vcalc/fockoracle/fockoracle.hpp"
#include "vcalc/reduction/reduction.hpp"
#include "vcalc/screening/screening.hpp"

using namespace vcalc;

namespace {

struct Outcome {
  bool pass = false;
  std::vector<std::string> details;
};

std::string count_line(const VerificationReport& r) {
  std::size_t ok = 0;
  for (const auto& e : r.entries) ok += e.pass;
  return std::to_string(r.identity_count()) + " identities, " + std::to_string(ok) + "/" +
         std::to_string(r.entries.size()) + " coefficients pass";
}

void add_failures(Outcome& o, const VerificationReport& r, std::size_t limit = 4) {
  for (const auto& e : r.entries) {
    if (e.pass || limit == 0) continue;
    --limit;
    o.details.push_back("failing: " + e.identity + (e.lambda_power >= 0 ? " λ^" + std::to_string(e.lambda_power) : "") +
                        " difference " + e.difference.substr(0, 160));
  }
}

const GeneratorQuadruple& quad(RealizationMode m) {
  static const GeneratorQuadruple free_q = build_generators(build_setup(RealizationMode::FreeField));
  static const GeneratorQuadruple full_q = build_generators(build_setup(RealizationMode::Full));
  return m == RealizationMode::FreeField ? free_q : full_q;
}

bool has_identity(const VerificationReport& r, const std::string& id) {
  for (const auto& e : r.entries)
    if (e.identity == id) return true;
  return false;
}

Outcome sw32_closure(RealizationMode mode) {
  Outcome o;
  auto report = verify_sw32(quad(mode), sw32_targets());
  bool complete = true;
  for (const char* id : {"[L_λL]", "[L_λG]", "[G_λG]", "[G_λW]", "[G_λU]", "[W_λW]", "[W_λU]", "[U_λU]", "[L_λW]",
                         "[L_λU]"})
    complete = complete && has_identity(report, id);
  o.pass = report.passed() && complete;
  o.details.push_back(count_line(report) + ", c = 6+18k, differences identically zero");
  if (!complete) o.details.push_back("missing identities in the suite");
  add_failures(o, report);
  for (const auto& n : quad(mode).notes) o.details.push_back("note: " + n);
  return o;
}

Outcome normalization_pins() {
  Outcome o;
  const Scalar c = central_charge();
  bool literal = true, lambda3 = true, gw = true;
  for (auto mode : {RealizationMode::FreeField, RealizationMode::Full}) {
    const auto& q = quad(mode);
    Calculus calc(q.algebra);
    const State w3w = calc.nth_product(q.W, 3, q.W);
    const State pin = (c * Scalar::rational(1, 12)) * State::vacuum();
    const bool lit = w3w == pin;
    literal = literal && lit;
    const State l3 = calc.bracket(q.W, q.W).coeff(3);
    lambda3 = lambda3 && l3 == pin;
    for (int j = 1; j <= 3; ++j) gw = gw && calc.nth_product(q.G, j, q.W).is_zero();
    if (mode == RealizationMode::FreeField) {
      const Scalar ratio = w3w.coeff(Monomial{}) / c;
      o.details.push_back("W_(3)W = {" + w3w.coeff(Monomial{}).to_string() + "}|0> = (" + ratio.to_string() +
                          ") c; required c/12: " + (lit ? "PASS" : "FAIL"));
    }
  }
  o.details.push_back(std::string("[λ^3][W_λW] = c/12 (so W_(3)W = 3! c/12 = c/2), both modes: ") +
                      (lambda3 ? "PASS" : "FAIL"));
  o.details.push_back(std::string("G_(j)W = 0 for j = 1, 2, 3, both modes: ") + (gw ? "PASS" : "FAIL"));
  // Independent mode-level value at the Spin(7) point.
  auto space = TruncatedFockSpace::free_field(*build_osp32(), mpq_class(1, 3), 4);
  const auto& fq = quad(RealizationMode::FreeField);
  auto v = numeric_nth_product(fq.W, 3, fq.W, *fq.algebra, space);
  std::ostringstream os;
  os << "Fock oracle at k = 1/3 (c = 12): W_(3)W = " << (v.size() == 1 && v.begin()->first.empty() ? v.begin()->second.real() : NAN)
     << " |0>";
  o.details.push_back(os.str());
  o.details.push_back(
      "the pin c/12 is the λ^3 coefficient of [W_λW]; the third product carries the extra 3! and is not attainable");
  o.pass = literal && gw;
  return o;
}

Outcome spin7() {
  Outcome o;
  auto r = spin7_instance(1e-12);
  auto header = specialization_header(GaussRational(mpq_class(1, 3)));
  const bool c12 = std::find(header.begin(), header.end(), "c = 12") != header.end();
  o.pass = r.passed() && c12;
  o.details.push_back(header[0] + ", " + header[1]);
  o.details.push_back(count_line(r) + ", exact vs floating agreement <= 1e-12 relative");
  add_failures(o, r);
  return o;
}

Outcome screening_kernel() {
  Outcome o;
  const auto& q = quad(RealizationMode::FreeField);
  auto printed = kernel_suite(q, ScreeningConvention::Printed);
  auto adapted = kernel_suite(q, ScreeningConvention::Adapted);
  auto kernel_passes = [](const VerificationReport& r) {
    int ok = 0;
    for (const auto& e : r.entries)
      if (e.identity.find("control") == std::string::npos && e.pass) ++ok;
    return ok;
  };
  const int printed_ok = kernel_passes(printed);
  const int adapted_ok = kernel_passes(adapted);

  const auto lie = build_osp32();
  auto heis = rescaled_heisenberg(*q.algebra, *lie);
  bool control_nonzero = true;
  std::string control_text;
  for (auto conv : {ScreeningConvention::Printed, ScreeningConvention::Adapted}) {
    auto q1 = screening_q1(*q.algebra, *lie, conv);
    auto q2 = screening_q2(*q.algebra, *lie, conv);
    Calculus c1(q1.algebra), c2(q2.algebra);
    const bool b1 = !zero_mode_apply(q1, c1, heis.b[0], *q.algebra).is_zero();
    const bool b2 = !zero_mode_apply(q1, c1, heis.b[1], *q.algebra).is_zero();
    const bool q2b1 = !zero_mode_apply(q2, c2, heis.b[0], *q.algebra).is_zero();
    control_nonzero = control_nonzero && b1;
    control_text += to_string(conv) + ": Q_1(0)b_1 " + (b1 ? "!= 0" : "= 0") + ", Q_1(0)b_2 " + (b2 ? "!= 0" : "= 0") +
                    ", Q_2(0)b_1 " + (q2b1 ? "!= 0" : "= 0");
    if (conv == ScreeningConvention::Printed) control_text += "; ";
  }
  o.details.push_back("printed Q_1 = :Φ_{-1}Γ_{α_1/ν}:, Q_2 = Γ_{-α_2/ν}: " + std::to_string(printed_ok) +
                      "/8 of Q_i(0)X vanish");
  o.details.push_back("grading-adapted Q_1 = :Φ_{-1}Γ_{να_1}:, Q_2 = :Φ_{12}Γ_{-ν(α_1+α_2)}: " +
                      std::to_string(adapted_ok) + "/8 vanish, controls match closed forms: " +
                      (adapted.passed() ? "yes" : "no"));
  o.details.push_back("negative control " + control_text);
  o.details.push_back("Q_1(0)b_1 = 0 is forced: the charge of Q_1 is a multiple of h_1 and (h_1|h_1) = 0");
  o.details.push_back("no pure exponential annihilates G: Q_(0)G is linear in the charge with an invertible matrix");
  o.pass = printed_ok == 8 && control_nonzero;
  return o;
}

Outcome lie_integrity() {
  Outcome o;
  auto r = liealg_suite();
  o.pass = r.passed();
  o.details.push_back(count_line(r) + ": Jacobi and invariance, eigenspace table, dim g^f = (1,2,1), h^vee = 1/2");
  add_failures(o, r);
  return o;
}

Outcome calculus_properties() {
  Outcome o;
  using namespace vcalc::testing;
  int skew_ok = 0, skew_n = 0, jac_ok = 0, jac_n = 0, wick_ok = 0, wick_n = 0, nf_ok = 0, nf_n = 0;
  std::vector<AlgebraPtr> algebras = {mixed_affine(), quad(RealizationMode::FreeField).algebra};
  unsigned seed = 1;
  for (const auto& alg : algebras) {
    Calculus calc(alg);
    Corpus corpus{calc, std::mt19937(seed++)};
    for (int n = 0; n < 60; ++n, ++skew_n) {
      auto [a, ao] = corpus.state(3);
      auto [b, bo] = corpus.state(3);
      skew_ok += calc.bracket(b, a) == calc.skew(calc.bracket(a, b), bo, ao);
    }
    for (int n = 0; n < 50; ++n, ++jac_n) {
      auto [a, ao] = corpus.monomial(3);
      auto [b, bo] = corpus.monomial(3);
      auto [c, co] = corpus.monomial(3);
      jac_ok += jacobi_defect(calc, a, b, c, ao, bo).empty();
    }
    for (int n = 0; n < 40; ++n, ++wick_n) {
      auto [a, ao] = corpus.monomial(2);
      auto [b, bo] = corpus.monomial(2);
      auto [c, co] = corpus.monomial(2);
      wick_ok += calc.bracket(a, calc.normal_order(b, c)) == wick_rhs(calc, a, b, c, ao, bo);
    }
    for (int n = 0; n < 30; ++n, ++nf_n) {
      auto [a, ao] = corpus.state(3);
      auto [b, bo] = corpus.state(3);
      auto [c, co] = corpus.state(2);
      nf_ok += parse_state(calc, format_state(*alg, a)) == a && calc.normal_order(State::vacuum(), a) == a &&
               calc.normal_order(a + b, c) == calc.normal_order(a, c) + calc.normal_order(b, c);
    }
  }
  o.pass = skew_ok == skew_n && jac_ok == jac_n && wick_ok == wick_n && nf_ok == nf_n;
  o.details.push_back("skew-symmetry " + std::to_string(skew_ok) + "/" + std::to_string(skew_n) + ", Jacobi " +
                      std::to_string(jac_ok) + "/" + std::to_string(jac_n) + " (weight <= 3), Wick " +
                      std::to_string(wick_ok) + "/" + std::to_string(wick_n) + ", normal form " +
                      std::to_string(nf_ok) + "/" + std::to_string(nf_n) +
                      "; corpora over an affine+boson+fermion algebra and the free-field algebra");
  return o;
}

Outcome oracle() {
  Outcome o;
  CrosscheckOptions opt;  // k in {1/3, 1, 2}, cutoff 4, pairs of weight <= 4, n in -1..3, 1e-9
  auto r = crosscheck(opt);
  o.pass = r.passed();
  o.details.push_back(r.header.at(1) + ", k in {1/3, 1, 2}, n in {-1..3}, " + count_line(r));
  double worst = 0;
  for (const auto& e : r.entries) {
    auto pos = e.computed.find("max ");
    if (pos != std::string::npos) worst = std::max(worst, std::stod(e.computed.substr(pos + 4)));
  }
  std::ostringstream os;
  os << "largest componentwise deviation " << worst << " (tolerance 1e-9)";
  o.details.push_back(os.str());
  add_failures(o, r);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expect_red;
  bool expect_given = false;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--expect-red" && i + 1 < argc) {
      expect_given = true;
      std::stringstream ss(argv[++i]);
      for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) expect_red.insert(std::stoi(item));
    } else {
      std::cerr << "usage: acceptance [--expect-red N,M,...]\n";
      return 2;
    }
  }

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"SW(3/2,2) closure, free-field generators, exact in k",
       [] { return sw32_closure(RealizationMode::FreeField); }},
      {"SW(3/2,2) closure, full generators, bare (k+1/2) cocycle", [] { return sw32_closure(RealizationMode::Full); }},
      {"normalization pins W_(3)W = c/12 |0> and G_(j)W = 0", normalization_pins},
      {"Spin(7) point k = 1/3", spin7},
      {"screening kernel and negative control Q_1(0)b_1 != 0", screening_kernel},
      {"osp(3|2) integrity, grading, centralizer, dual Coxeter number", lie_integrity},
      {"lambda-bracket calculus property suites", calculus_properties},
      {"Fock-space oracle equivalence", oracle},
  };

  std::set<int> red;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i + 1);
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.details.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) red.insert(id);
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << id << ": " << criteria[i].first << " (" << timing
              << ")\n";
    for (const auto& d : o.details) std::cout << "        " << d << "\n";
    std::cout.flush();
  }

  std::cout << "\n" << (criteria.size() - red.size()) << "/" << criteria.size() << " criteria pass";
  if (!red.empty()) {
    std::cout << "; failing:";
    for (int r : red) std::cout << " " << r;
  }
  std::cout << "\n";
  if (expect_given) {
    const bool as_expected = red == expect_red;
    std::cout << "failing set " << (as_expected ? "matches" : "differs from") << " the documented expectation\n";
    return as_expected ? 0 : 1;
  }
  return red.empty() ? 0 : 1;
}
