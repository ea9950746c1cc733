#include <chrono>

#include "vcalc/errors.hpp"
#include "vcalc/reduction/reduction.hpp"

namespace vcalc {

namespace {

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : ", ") + x;
  return out.empty() ? "0" : out;
}

ReportEntry make_entry(std::string id, std::string expected, std::string computed, bool pass) {
  ReportEntry e;
  e.identity = std::move(id);
  e.expected = std::move(expected);
  e.computed = std::move(computed);
  e.pass = pass;
  e.difference = pass ? "0" : e.computed;
  return e;
}

}  // namespace

const std::vector<std::pair<mpq_class, std::vector<std::string>>>& osp32_eigenspace_table() {
  static const std::vector<std::pair<mpq_class, std::vector<std::string>>> table = {
      {mpq_class(-3, 2), {"f_{122}"}},         {mpq_class(-1), {"f_{2}", "f_{1122}"}},
      {mpq_class(-1, 2), {"e_{1}", "f_{12}"}}, {mpq_class(0), {"h_{1}", "h_{2}"}},
      {mpq_class(1, 2), {"f_{1}", "e_{12}"}},  {mpq_class(1), {"e_{2}", "e_{1122}"}},
      {mpq_class(3, 2), {"e_{122}"}}};
  return table;
}

VerificationReport liealg_suite() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto lie = build_osp32();
  const SuperLieAlgebra& g = *lie;
  VerificationReport report;
  report.suite = "liealg";
  report.mode = "exact";
  report.header.push_back("x = h_{1}-h_{2}, f = f_{2}+f_{1122}");
  report.header.push_back("dimension = " + std::to_string(g.dim()));

  auto violations = integrity_violations(g);
  report.entries.push_back(make_entry("super-Jacobi, supersymmetry and form invariance on all basis triples",
                                      "no violations", violations.empty() ? "no violations" : join(violations),
                                      violations.empty()));

  const auto grading = grade_by(g, osp32_x(g));
  for (const auto& [j, names] : osp32_eigenspace_table()) {
    std::vector<std::string> computed;
    auto it = grading.spaces.find(j);
    if (it != grading.spaces.end())
      for (const auto& v : it->second) computed.push_back(g.format(v));
    bool pass = it != grading.spaces.end() && it->second.size() == names.size();
    for (const auto& n : names) pass = pass && grading.degree_of(g, g.basis(n)) == j;
    report.entries.push_back(make_entry("g_{" + j.get_str() + "}", join(names), join(computed), pass));
  }
  {
    std::size_t total = 0;
    for (const auto& [j, sp] : grading.spaces) total += sp.size();
    report.entries.push_back(make_entry("eigenspaces exhaust g", std::to_string(g.dim()), std::to_string(total),
                                        total == g.dim() && grading.spaces.size() == osp32_eigenspace_table().size()));
  }

  const std::map<mpq_class, std::size_t> expected_dims = {{mpq_class(-3, 2), 1}, {mpq_class(-1), 2}, {mpq_class(-1, 2), 1}};
  try {
    auto c = centralizer_of(g, grading, osp32_f(g));
    std::vector<std::string> dims;
    bool pass = c.spaces.size() == expected_dims.size();
    for (const auto& [j, sp] : c.spaces) {
      dims.push_back(j.get_str() + ": " + std::to_string(sp.size()));
      auto e = expected_dims.find(j);
      pass = pass && e != expected_dims.end() && e->second == sp.size();
    }
    report.entries.push_back(make_entry("dim g^f by degree", "-3/2: 1, -1: 2, -1/2: 1", join(dims), pass));
    std::vector<std::string> half;
    for (const auto& v : c.spaces[mpq_class(-1, 2)]) half.push_back(g.format(v));
    report.notes.push_back("g^f_{-1/2} spanned by " + join(half));
  } catch (const CentralizerError& e) {
    report.entries.push_back(make_entry("dim g^f by degree", "-3/2: 1, -1: 2, -1/2: 1", e.what(), false));
  }

  try {
    const mpq_class hv = check_dual_coxeter(g);
    report.entries.push_back(make_entry("Killing = 2 h^vee (.|.)", "h^vee = 1/2", "h^vee = " + hv.get_str(),
                                        hv == mpq_class(1, 2)));
  } catch (const NormalizationError& e) {
    report.entries.push_back(make_entry("Killing = 2 h^vee (.|.)", "h^vee = 1/2", e.what(), false));
  }

  const auto gram = fermion_gram(g);
  report.entries.push_back(make_entry("<Phi_{-1}|Phi_{12}>, <Phi_{12}|Phi_{12}>", "1/2, -1/4",
                                      gram[0][1].get_str() + ", " + gram[1][1].get_str(),
                                      gram[0][1] == mpq_class(1, 2) && gram[1][1] == mpq_class(-1, 4)));
  const auto duals = fermion_duals(g);
  report.entries.push_back(make_entry(
      "dual fermions", "Phi^{-1} = Phi_{-1}+2Phi_{12}, Phi^{12} = 2Phi_{-1}",
      "Phi^{-1} = " + duals[0][0].get_str() + " Phi_{-1} + " + duals[0][1].get_str() + " Phi_{12}, Phi^{12} = " +
          duals[1][0].get_str() + " Phi_{-1} + " + duals[1][1].get_str() + " Phi_{12}",
      duals[0][0] == 1 && duals[0][1] == 2 && duals[1][0] == 2 && duals[1][1] == 0));

  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  for (auto& e : report.entries) e.seconds = secs / static_cast<double>(report.entries.size());
  return report;
}

}  // namespace vcalc
