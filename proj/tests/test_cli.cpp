#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "regjm/cli.hpp"

using namespace regjm;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "regjm");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("regjm_test_" + name);
}

void write(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

std::string read(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

nlohmann::json without_timing(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  j.erase("wall_seconds");
  return j;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("pure") {
  Run a = run({"pure", "--n", "1", "--k", "2", "--d", "1"});
  CHECK(a.code == kExitPass);
  CHECK(a.out.find("degree sequence (2, 3, 5), pure") != std::string::npos);
  CHECK(a.out.find("beta_0 = 2") != std::string::npos);

  Run b = run({"pure", "--n", "1", "--k", "1", "--d", "0", "--format", "json"});
  CHECK(b.code == kExitPass);
  auto j = nlohmann::json::parse(b.out);
  CHECK(j["degree_sequence"] == nlohmann::json({1, 2, 3}));
  CHECK(j["betti"]["entries"].size() == 3);

  CHECK(run({"pure", "--n", "0", "--k", "1", "--d", "0"}).code == kExitUsage);
  CHECK(run({"pure", "--k", "1", "--d", "0"}).code == kExitUsage);
  CHECK(run({"pure", "--n", "1", "--k", "1", "--d", "0", "--format", "csv"}).code == kExitUsage);
  CHECK(run({"pure", "--n", "1", "--k", "1", "--d", "0", "--prime", "100"}).code == kExitUsage);
}

TEST_CASE("construct and export") {
  Run a = run({"construct", "--n", "1", "--N", "2", "--k", "1", "--d", "0"});
  CHECK(a.code == kExitPass);
  for (const char* g : {"\ny1^2\n", "\ny1*y2\n", "\ny2^2\n", "x1*y1\n", "x0*y1\n"})
    CHECK(a.out.find(g) != std::string::npos);
  CHECK(a.err.find("5 generators") != std::string::npos);

  Run b = run({"construct", "--n", "2", "--N", "2", "--k", "1", "--d", "1"});
  CHECK(b.code == kExitHypothesis);
  CHECK(b.err.find("(d)") != std::string::npos);
  CHECK(b.out.empty());

  Run c = run({"export", "--n", "1", "--N", "2", "--k", "1", "--d", "0"});
  CHECK(c.code == kExitPass);
  CHECK(c.out.find("J = ideal(") != std::string::npos);

  auto m = temp_path("module.txt");
  write(m, "# R/(x0^2, x0 x1, x1^2) generated in degree 2\nmatrix 2 <- 4 4 4\n0: x0^2\n0: x0*x1\n0: x1^2\n");
  Run d = run({"construct", "--module", m.string(), "--k", "2", "--N", "3"});
  CHECK(d.code == kExitPass);
  CHECK(d.out.find("# ring n=1 N=3") != std::string::npos);
  CHECK(run({"construct", "--module", m.string(), "--k", "1", "--N", "3"}).code == kExitHypothesis);
  CHECK(run({"construct", "--module", (m.string() + ".missing"), "--k", "2", "--N", "3"}).code == kExitUsage);
  write(m, "matrix 2 <- 4\n0: x0^2 + \n");
  CHECK(run({"construct", "--module", m.string(), "--k", "2", "--N", "3"}).code == kExitUsage);
  std::filesystem::remove(m);
}

TEST_CASE("verify exit codes") {
  Run a = run({"verify", "--n", "1", "--N", "2", "--k", "2", "--d", "1"});
  CHECK(a.code == kExitPass);
  auto j = nlohmann::json::parse(a.out);
  CHECK(j["computed"]["degree_sequence"] == nlohmann::json({3, 5, 6, 7}));

  Run b = run({"verify", "--n", "1", "--N", "2", "--k", "1", "--d", "0", "--format", "ascii"});
  CHECK(b.code == kExitPass);
  CHECK(b.out.find("PASS") != std::string::npos);
  CHECK(nlohmann::json::parse(run({"verify", "--n", "1", "--N", "2", "--k", "1", "--d", "0"}).out)["computed"]
                                 ["regularity"] == 2);

  Run c = run({"verify", "--n", "1", "--N", "2", "--k", "2", "--d", "1", "--expect-seq", "3,5,6,8"});
  CHECK(c.code == kExitMismatch);
  CHECK(c.err.find("degree_sequence") != std::string::npos);

  CHECK(run({"verify", "--n", "2", "--N", "2", "--k", "1", "--d", "1"}).code == kExitHypothesis);
  CHECK(run({"verify", "--n", "1", "--N", "2", "--k", "1", "--d", "0", "--expect-seq", "a,b"}).code == kExitUsage);
  CHECK(run({"verify", "--n", "1", "--N", "2", "--k", "1", "--d", "0", "--strategy", "fifo"}).code == kExitPass);
  CHECK(run({"verify", "--n", "1", "--N", "2", "--k", "1", "--d", "0", "--strategy", "x"}).code == kExitUsage);
  CHECK(run({"verify", "--n", "1", "--N", "2", "--k", "2", "--d", "1", "--max-seconds", "0"}).code == kExitMismatch);
}

TEST_CASE("construct output re-verified by --input reproduces the certificate") {
  for (auto params : std::vector<std::vector<std::string>>{{"--n", "1", "--N", "2", "--k", "2", "--d", "1"},
                                                           {"--n", "2", "--N", "3", "--k", "1", "--d", "1"}}) {
    auto gens = temp_path("gens.txt");
    auto direct_args = params;
    direct_args.insert(direct_args.begin(), "verify");
    Run direct = run(direct_args);
    REQUIRE(direct.code == kExitPass);
    auto cons = params;
    cons.insert(cons.begin(), "construct");
    cons.insert(cons.end(), {"--out", gens.string()});
    REQUIRE(run(cons).code == kExitPass);
    Run again = run({"verify", "--input", gens.string()});
    CHECK(again.code == kExitPass);
    CHECK(without_timing(again.out) == without_timing(direct.out));
    std::filesystem::remove(gens);
  }
}

TEST_CASE("a tampered generator file fails verification") {
  auto gens = temp_path("tampered.txt");
  REQUIRE(run({"construct", "--n", "1", "--N", "2", "--k", "1", "--d", "0", "--out", gens.string()}).code ==
          kExitPass);
  std::string text = read(gens);
  text = text.substr(0, text.rfind('\n', text.size() - 2) + 1);
  write(gens, text);
  CHECK(run({"verify", "--input", gens.string()}).code == kExitMismatch);
  std::filesystem::remove(gens);
}

TEST_CASE("resolve") {
  auto f = temp_path("ideal.txt");
  write(f, "# ring n=1 N=2\ny1^2\ny1*y2\ny2^2\n");
  Run a = run({"resolve", "--input", f.string(), "--format", "json"});
  CHECK(a.code == kExitPass);
  auto j = nlohmann::json::parse(a.out);
  CHECK(j["entries"].size() == 2);
  CHECK(j["reg"] == 2);
  write(f, "matrix 0 <- 1 1\n0: x0\n0: x1\n");
  Run b = run({"resolve", "--input", f.string()});
  CHECK(b.code == kExitPass);
  CHECK(b.out.find("total: 1 2 1") != std::string::npos);
  std::filesystem::remove(f);
  CHECK(run({"resolve"}).code == kExitUsage);
}

TEST_CASE("scan") {
  Run a = run({"scan", "--n", "1", "--N", "3", "--k", "2..6"});
  CHECK(a.code == kExitPass);
  CHECK(a.out ==
        "k,d_max,reg_predicted,reg_computed,wall_seconds\n"
        "2,5,8,,\n3,9,13,,\n4,14,19,,\n5,20,26,,\n6,27,34,,\n");
  CHECK(a.err.find("log-log slope") != std::string::npos);
  Run b = run({"scan", "--n", "1", "--N", "3", "--k", "2..3", "--max-seconds", "30"});
  CHECK(b.code == kExitPass);
  CHECK(b.out.find("\n2,5,8,8,") != std::string::npos);
  CHECK(run({"scan", "--n", "1", "--N", "3", "--k", "6..2"}).code == kExitUsage);
  CHECK(run({"scan", "--n", "1", "--N", "3", "--k", "x"}).code == kExitUsage);
}

TEST_CASE("usage errors and help") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitPass);
  CHECK(run({"construct", "--N", "2", "--k", "1"}).code == kExitUsage);
  CHECK(run({"construct", "--n", "1", "--N", "0", "--k", "1", "--d", "0"}).code == kExitUsage);
}

}  // TEST_SUITE
