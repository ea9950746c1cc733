#include "vcalc/cli/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "vcalc/errors.hpp"
#include "vcalc/fockoracle/fockoracle.hpp"
#include "vcalc/reduction/reduction.hpp"
#include "vcalc/screening/screening.hpp"
#include "vcalc/vertexcore/notation.hpp"

namespace vcalc::cli {

namespace {

struct VerifyOptions {
  std::string suite;
  std::string mode = "free";
  std::string at_k;
  std::string report;
  std::string config;
  std::string screening = "adapted";
  unsigned threads = 0;
  bool verbose = false;
};

struct OracleOptions {
  std::string k;
  std::string cutoff = "4";
  std::string report;
};

struct DumpOptions {
  std::string what;
  std::string format = "text";
  std::string mode = "full";
};

mpq_class parse_rational(const std::string& text, const char* what) {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0) throw UsageError(std::string(what) + " must be a rational number, got '" + text + "'");
  if (q.get_den() == 0) throw UsageError(std::string(what) + " has a zero denominator");
  q.canonicalize();
  return q;
}

std::optional<nlohmann::json> read_config(const std::string& path) {
  if (path.empty()) return std::nullopt;
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config file " + path + " is not valid JSON: " + e.what());
  }
}

void emit_report(const VerificationReport& report, const std::string& path, const std::string& stem, bool verbose,
                 std::ostream& out) {
  out << report.to_text(verbose);
  const std::string json = report.to_json().dump(2) + "\n";
  if (!path.empty()) {
    const bool as_json = std::filesystem::path(path).extension() == ".json";
    write_atomically(path, as_json ? json : report.to_text(false));
  } else if (const char* dir = std::getenv(kReportDirEnv); dir && *dir) {
    std::filesystem::create_directories(dir);
    write_atomically((std::filesystem::path(dir) / (stem + ".json")).string(), json);
    write_atomically((std::filesystem::path(dir) / (stem + ".txt")).string(), report.to_text(false));
  }
}

VerificationReport run_suite(const VerifyOptions& o, const std::string& suite, const std::optional<GaussRational>& k0) {
  const RealizationMode mode = parse_mode(o.mode);
  auto quad_for = [&](RealizationMode m) { return build_generators(build_setup(m, read_config(o.config))); };

  VerificationReport report;
  if (suite == "sw32" || suite == "primary") {
    auto quad = quad_for(mode);
    report = suite == "sw32" ? verify_sw32(quad, sw32_targets(), o.threads) : verify_primary(quad, o.threads);
    if (k0) {
      report.append(evaluate_targets_at(suite == "sw32" ? sw32_targets() : primary_targets(), *k0));
      report.suite = suite;
      report.mode = to_string(mode);
    }
  } else if (suite == "screening") {
    if (mode != RealizationMode::FreeField) throw UsageError("the screening suite runs on the free-field realization only");
    report = kernel_suite(quad_for(RealizationMode::FreeField), parse_screening_convention(o.screening));
  } else if (suite == "liealg") {
    report = liealg_suite();
  } else if (suite == "oracle") {
    CrosscheckOptions co;
    co.threads = o.threads;
    if (k0) co.ks = {k0->re()};
    report = crosscheck(co);
  } else {
    throw UsageError("unknown suite '" + suite + "'");
  }
  if (k0) {
    auto lines = specialization_header(*k0);
    report.header.insert(report.header.begin(), lines.begin(), lines.end());
  }
  return report;
}

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  std::optional<GaussRational> k0;
  if (!o.at_k.empty()) {
    k0 = GaussRational(parse_rational(o.at_k, "--at-k"));
    specialization_header(*k0);  // rejects degenerate levels up front
  }
  parse_mode(o.mode);
  parse_screening_convention(o.screening);

  VerificationReport report;
  if (o.suite == "all") {
    report.suite = "all";
    report.mode = o.mode;
    for (const char* s : {"liealg", "sw32", "primary", "screening", "oracle"}) {
      VerifyOptions sub = o;
      if (std::string(s) == "screening") sub.mode = "free";
      auto part = run_suite(sub, s, k0);
      for (const auto& h : part.header) report.header.push_back(std::string(s) + ": " + h);
      for (auto e : part.entries) {
        e.identity = std::string(s) + ": " + e.identity;
        report.entries.push_back(std::move(e));
      }
      for (const auto& n : part.notes) report.notes.push_back(std::string(s) + ": " + n);
    }
  } else {
    report = run_suite(o, o.suite, k0);
  }
  emit_report(report, o.report, o.suite + "-" + o.mode, o.verbose, out);
  return report.passed() ? kPass : kCheckFailed;
}

int cmd_oracle(const OracleOptions& o, std::ostream& out) {
  CrosscheckOptions co;
  if (!o.k.empty()) {
    const mpq_class k = parse_rational(o.k, "--k");
    specialization_header(GaussRational(k));
    co.ks = {k};
  }
  co.cutoff = parse_rational(o.cutoff, "--cutoff");
  if (co.cutoff < 0 || mpq_class(co.cutoff * 2).get_den() != 1) throw UsageError("--cutoff must be a non-negative multiple of 1/2");
  co.max_pair_weight = co.cutoff;
  auto report = crosscheck(co);
  emit_report(report, o.report, "oracle", false, out);
  return report.passed() ? kPass : kCheckFailed;
}

nlohmann::ordered_json structure_json(const SuperLieAlgebra& g) {
  nlohmann::ordered_json doc;
  doc["schema"] = "vcalc-structure/1";
  doc["basis"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < g.dim(); ++i)
    doc["basis"].push_back({{"name", g.name(i)}, {"parity", g.is_odd(i) ? "odd" : "even"}});
  doc["brackets"] = nlohmann::ordered_json::array();
  doc["form"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j) {
      const auto b = g.bracket(g.basis(i), g.basis(j));
      if (!is_zero(b)) doc["brackets"].push_back({{"left", g.name(i)}, {"right", g.name(j)}, {"value", g.format(b)}});
      if (g.form_entry(i, j) != 0)
        doc["form"].push_back({{"left", g.name(i)}, {"right", g.name(j)}, {"value", g.form_entry(i, j).get_str()}});
    }
  return doc;
}

int cmd_dump(const DumpOptions& o, std::ostream& out) {
  const bool machine = o.format == "machine";
  if (!machine && o.format != "text") throw UsageError("--format must be text or machine");
  if (o.what == "structure-constants") {
    auto g = build_osp32();
    if (machine)
      out << structure_json(*g).dump(2) << "\n";
    else
      out << format_structure_constants(*g);
  } else if (o.what == "generators") {
    const RealizationMode mode = parse_mode(o.mode);
    const auto& set = mode == RealizationMode::Full ? full_formulas() : printed_free_field_formulas();
    auto quad = build_generators(build_setup(mode));
    nlohmann::ordered_json doc;
    doc["schema"] = "vcalc-generators/1";
    doc["mode"] = to_string(mode);
    doc["generators"] = nlohmann::ordered_json::array();
    for (const auto& f : set) {
      std::string line = f.name + " = " + (f.prefactor.empty() ? "" : "{" + f.prefactor + "} ") + "(" + f.body_text() + ")";
      std::string normal;
      if (f.name.size() == 1) normal = format_state(*quad.algebra, quad_field(quad, f.name[0]));
      if (machine) {
        nlohmann::ordered_json entry;
        entry["name"] = f.name;
        entry["weight"] = f.weight.get_str();
        entry["prefactor"] = f.prefactor;
        entry["transcribed"] = f.body_text();
        if (!normal.empty()) entry["normal_form"] = normal;
        doc["generators"].push_back(entry);
      } else {
        out << line << "\n";
        if (!normal.empty()) out << "  normal form: " << normal << "\n";
      }
    }
    if (machine) {
      doc["notes"] = quad.notes;
      out << doc.dump(2) << "\n";
    } else {
      for (const auto& n : quad.notes) out << "# " << n << "\n";
    }
  } else if (o.what == "targets") {
    nlohmann::ordered_json doc;
    doc["schema"] = "vcalc-targets/1";
    doc["central_charge"] = "c = 6+18k";
    doc["targets"] = nlohmann::ordered_json::array();
    for (const auto& table : {sw32_targets(), primary_targets()})
      for (const auto& t : table) {
        if (machine) {
          nlohmann::ordered_json entry;
          entry["bracket"] = t.name();
          entry["display"] = t.display;
          entry["terms"] = nlohmann::ordered_json::array();
          for (const auto& term : t.terms) {
            std::string product;
            for (const auto& f : term.product) product += std::string(f.nder, 'd') + f.symbol;
            entry["terms"].push_back({{"lambda_power", term.lambda_power}, {"coeff", term.coeff_text}, {"product", product}});
          }
          doc["targets"].push_back(entry);
        } else {
          out << format_target(t) << "\n";
        }
      }
    if (machine) out << doc.dump(2) << "\n";
  } else {
    throw UsageError("unknown dump target '" + o.what + "'");
  }
  return kPass;
}

}  // namespace

void write_atomically(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw ConfigError("cannot write " + tmp.string());
    f << content;
    f.flush();
    if (!f) throw ConfigError("write failed for " + tmp.string());
  }
  fs::rename(tmp, target);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact lambda-bracket verification of the SW(3/2,2) reduction of osp(3|2)", "vcalc"};
  app.require_subcommand(1);

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", vo.suite, "sw32 | primary | screening | liealg | oracle | all")
      ->required()
      ->check(CLI::IsMember({"sw32", "primary", "screening", "liealg", "oracle", "all"}));
  verify->add_option("--mode", vo.mode, "full | free")->check(CLI::IsMember({"full", "free"}));
  verify->add_option("--at-k", vo.at_k, "also evaluate at this rational level");
  verify->add_option("--report", vo.report, "report file (.json for the machine format)");
  verify->add_option("--config", vo.config, "JSON algebra declaration replacing the generated one");
  verify->add_option("--screening", vo.screening, "printed | adapted")->check(CLI::IsMember({"printed", "adapted"}));
  verify->add_option("--threads", vo.threads, "worker threads (0: all cores)");
  verify->add_flag("-v,--verbose", vo.verbose, "show timings");

  OracleOptions oo;
  auto* oracle = app.add_subcommand("oracle", "numeric Fock-space oracle");
  auto* cross = oracle->add_subcommand("crosscheck", "symbolic versus mode-level n-th products");
  oracle->require_subcommand(1);
  cross->add_option("--k", oo.k, "rational level (default: 1/3, 1 and 2)");
  cross->add_option("--cutoff", oo.cutoff, "degree cutoff");
  cross->add_option("--report", oo.report, "report file");

  DumpOptions dop;
  auto* dump = app.add_subcommand("dump", "print algebra data");
  dump->add_option("what", dop.what, "structure-constants | generators | targets")
      ->required()
      ->check(CLI::IsMember({"structure-constants", "generators", "targets"}));
  dump->add_option("--format", dop.format, "text | machine")->check(CLI::IsMember({"text", "machine"}));
  dump->add_option("--mode", dop.mode, "full | free (generators only)")->check(CLI::IsMember({"full", "free"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*verify) return cmd_verify(vo, out);
    if (*oracle) return cmd_oracle(oo, out);
    return cmd_dump(dop, out);
  } catch (const EvaluationPole& e) {
    err << "usage error: degenerate level: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "config error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
}

}  // namespace vcalc::cli
