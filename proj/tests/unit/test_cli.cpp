#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "vcalc/cli/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run_vcalc(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = vcalc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "vcalc-cli-test";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("verify sw32 in both modes") {
  for (const char* mode : {"free", "full"}) {
    auto r = run_vcalc({"verify", "sw32", "--mode", mode});
    CAPTURE(r.err);
    CHECK(r.code == 0);
    CHECK(r.out.find("result: PASS (13 identities") != std::string::npos);
    for (const char* id : {"[L_λL]", "[L_λG]", "[G_λG]", "[G_λW]", "[G_λU]", "[W_λW]", "[W_λU]", "[U_λU]"})
      CHECK(r.out.find(id) != std::string::npos);
  }
}

TEST_CASE("specialization at the Spin(7) point") {
  auto r = run_vcalc({"verify", "sw32", "--at-k", "1/3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("c = 12\n") != std::string::npos);
  CHECK(r.out.find("k = 1/3\n") != std::string::npos);
}

TEST_CASE("degenerate levels are usage errors") {
  for (const char* k : {"1/2", "-1/2", "-1/3", "-5/8"}) {
    auto r = run_vcalc({"verify", "sw32", "--at-k", k});
    CHECK(r.code == 2);
    CHECK(r.err.find("degenerate level") != std::string::npos);
  }
  auto r = run_vcalc({"verify", "sw32", "--at-k", "1/2"});
  CHECK(r.err.find("1-2*k") != std::string::npos);
  CHECK(run_vcalc({"oracle", "crosscheck", "--k", "-5/8"}).code == 2);
  CHECK(run_vcalc({"verify", "sw32", "--at-k", "one"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run_vcalc({}).code == 2);
  CHECK(run_vcalc({"verify"}).code == 2);
  CHECK(run_vcalc({"verify", "bogus"}).code == 2);
  CHECK(run_vcalc({"verify", "sw32", "--mode", "half"}).code == 2);
  CHECK(run_vcalc({"verify", "screening", "--mode", "full"}).code == 2);
  CHECK(run_vcalc({"dump", "nothing"}).code == 2);
  CHECK(run_vcalc({"verify", "sw32", "--config", scratch("missing.json").string()}).code == 2);
  std::ofstream(scratch("broken.json")) << "{ not json";
  CHECK(run_vcalc({"verify", "sw32", "--config", scratch("broken.json").string()}).code == 2);
  CHECK(run_vcalc({"--help"}).code == 0);
}

TEST_CASE("suites and exit codes") {
  CHECK(run_vcalc({"verify", "primary"}).code == 0);
  CHECK(run_vcalc({"verify", "liealg"}).code == 0);
  CHECK(run_vcalc({"verify", "screening"}).code == 0);
  auto printed = run_vcalc({"verify", "screening", "--screening", "printed"});
  CHECK(printed.code == 1);
  CHECK(printed.out.find("result: FAIL") != std::string::npos);
  auto oracle = run_vcalc({"oracle", "crosscheck", "--k", "2", "--cutoff", "3"});
  CHECK(oracle.code == 0);
  CHECK(oracle.out.find("k=2 n=3") != std::string::npos);
}

TEST_CASE("reports are atomic and byte-stable") {
  const auto a = scratch("a.json"), b = scratch("b.json"), t = scratch("c.txt");
  CHECK(run_vcalc({"verify", "primary", "--mode", "full", "--report", a.string()}).code == 0);
  CHECK(run_vcalc({"verify", "primary", "--mode", "full", "--report", b.string(), "--threads", "1"}).code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK_FALSE(fs::exists(a.string() + ".tmp"));
  auto doc = nlohmann::json::parse(slurp(a));
  CHECK(doc["schema"] == "vcalc-report/1");
  CHECK(doc["suite"] == "primary");
  CHECK(doc["mode"] == "full");
  CHECK(doc["pass"] == true);
  CHECK(run_vcalc({"verify", "liealg", "--report", t.string()}).code == 0);
  CHECK(slurp(t).find("result: PASS") != std::string::npos);
}

TEST_CASE("report directory from the environment") {
  const auto dir = scratch("reports");
  fs::remove_all(dir);
  setenv(vcalc::cli::kReportDirEnv, dir.c_str(), 1);
  CHECK(run_vcalc({"verify", "liealg"}).code == 0);
  unsetenv(vcalc::cli::kReportDirEnv);
  CHECK(fs::exists(dir / "liealg-free.json"));
  CHECK(fs::exists(dir / "liealg-free.txt"));
}

TEST_CASE("dumps") {
  auto sc = run_vcalc({"dump", "structure-constants"});
  CHECK(sc.code == 0);
  CHECK(sc.out.find("(e_{122}|f_{122}) = 1/4") != std::string::npos);
  auto scm = run_vcalc({"dump", "structure-constants", "--format", "machine"});
  CHECK(nlohmann::json::parse(scm.out)["schema"] == "vcalc-structure/1");

  auto tg = run_vcalc({"dump", "targets"});
  CHECK(tg.out.find("[G_λU] = (∂+4λ)W") != std::string::npos);
  auto tgm = nlohmann::json::parse(run_vcalc({"dump", "targets", "--format", "machine"}).out);
  CHECK(tgm["targets"].size() == 11);

  auto gen = run_vcalc({"dump", "generators"});
  CHECK(gen.code == 0);
  // G as printed: 2/sqrt(-1-2k) (J^{(e_1)} - J^{(f_12)} + :Φ^{-1}J^{(h_1)}: - 1/2 :Φ^{12}J^{(h_1)}: ...)
  std::string compact;
  for (char ch : gen.out)
    if (ch != ' ') compact += ch;
  CHECK(compact.find("G={2/sqrt(-1-2*k)}(J^{(e_1)}+{-1}J^{(f_{12})}+:\\Phi^{-1}J^{(h_1)}:+{-1/2}:\\Phi^{12}J^{(h_1)}:") !=
        std::string::npos);
  auto genm = nlohmann::json::parse(run_vcalc({"dump", "generators", "--mode", "free", "--format", "machine"}).out);
  CHECK(genm["mode"] == "free");
  CHECK(genm["generators"].size() == 4);
  CHECK(run_vcalc({"dump", "generators"}).out == gen.out);
}
