#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sys/wait.h>

#include "agt/report.hpp"
#include "helpers.hpp"

using namespace agt;
using namespace agt::testing;

namespace {

std::string runCli(const std::string& args, int* exitCode = nullptr) {
  std::string cmd = std::string(AGT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f != nullptr);
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, got);
  int rc = pclose(f);
  if (exitCode) *exitCode = WEXITSTATUS(rc);
  return out;
}

std::string writeIdeal(const MonomialIdeal& I, const std::string& name) {
  std::string path = "/tmp/agt_test_" + name + ".json";
  std::ofstream f(path);
  f << idealToJson(I).dump() << "\n";
  return path;
}

}  // namespace

TEST_CASE("corpus generation is deterministic and honors the spec") {
  CorpusSpec cs;
  cs.nVars = 3;
  cs.maxExp = 3;
  cs.targetType = 2;
  cs.count = 30;
  cs.seed = 99;
  auto a = generateCorpus(cs);
  auto b = generateCorpus(cs);
  REQUIRE(a.size() == 30);
  CHECK(a == b);
  for (const auto& I : a) {
    CHECK(isMPrimary(I));
    CHECK(irreducibleDecomposition(I).size() == 2);
  }
  // distinct up to variable permutation implies distinct as ideals
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j) CHECK(!(a[i] == a[j]));
  cs.seed = 100;
  CHECK(generateCorpus(cs) != a);
}

TEST_CASE("single-component corpus is gorenstein") {
  CorpusSpec cs;
  cs.nVars = 2;
  cs.maxExp = 4;
  cs.targetType = 1;
  cs.count = 8;
  cs.seed = 5;
  for (const auto& I : generateCorpus(cs))
    CHECK(irreducibleDecomposition(I).size() == 1);
}

TEST_CASE("infeasible corpus spec throws") {
  CorpusSpec cs;
  cs.nVars = 1;
  cs.maxExp = 2;
  cs.targetType = 2;  // no irredundant two-component ideals in one variable
  cs.count = 1;
  CHECK_THROWS(generateCorpus(cs));
}

TEST_CASE("hunt finds no candidates at type two and three") {
  CorpusSpec cs;
  cs.nVars = 3;
  cs.maxExp = 3;
  cs.count = 12;
  cs.seed = 17;
  for (int type : {2, 3}) {
    cs.targetType = type;
    auto results = hunt(generateCorpus(cs), 101, 2000000, 17, 60);
    for (const auto& r : results) CHECK(r.verdict == "consistent");
  }
}

TEST_CASE("reports are byte-identical for a fixed seed") {
  ReportOptions opt;
  opt.seed = 23;
  MonomialIdeal I = fromComps({{2, 3}, {3, 2}});
  std::string a = buildReport(I, opt).dump();
  std::string b = buildReport(I, opt).dump();
  CHECK(a == b);
}

TEST_CASE("cli classify matches the library report") {
  ReportOptions opt;
  MonomialIdeal I = fromComps({{2, 1}, {1, 2}});
  std::string path = writeIdeal(I, "classify");
  int rc = -1;
  std::string out = runCli("classify " + path, &rc);
  CHECK(rc == 0);
  json j = json::parse(out);
  CHECK(j == buildReport(I, opt));
  CHECK(j["case"] == "TypeTwo:a→Teter");
}

TEST_CASE("cli check and hilbert") {
  MonomialIdeal I = fromComps({{3, 2}, {1, 4}});
  std::string path = writeIdeal(I, "check");
  int rc = -1;
  json j = json::parse(runCli("check " + path, &rc));
  CHECK(rc == 0);
  CHECK(j["consistent"] == true);
  CHECK(j["c1"] == false);

  json h = json::parse(runCli("hilbert " + path, &rc));
  CHECK(rc == 0);
  CHECK(h["hilbert"] == json::array({1, 2, 3, 2}));
}

TEST_CASE("cli error paths") {
  int rc = -1;
  runCli("classify /nonexistent.json", &rc);
  CHECK(rc == 1);
  std::ofstream("/tmp/agt_test_bad.json") << "{not json";
  runCli("classify /tmp/agt_test_bad.json", &rc);
  CHECK(rc == 1);
}

TEST_CASE("cli prime override via flag and environment") {
  MonomialIdeal I = fromComps({{2, 2}});
  std::string path = writeIdeal(I, "prime");
  int rc = -1;
  json j = json::parse(runCli("--prime 32749 classify " + path, &rc));
  CHECK(rc == 0);
  CHECK(j["case"] == "Gorenstein");
  std::string out = runCli("corpus --nvars 2 --maxexp 3 --type 1 --count 3");
  json c = json::parse(out);
  CHECK(c.size() == 3);
}
