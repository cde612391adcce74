#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "json.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code;
  std::string out;
};

CliResult run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " \"" PICKY_CLI "\" " + args + " 2>/dev/null";
  FILE* f = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, f))
    out.append(buf, n);
  const int status = pclose(f);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("picky-cli-test-" + name);
  fs::remove_all(p);
  return p;
}

} // namespace

TEST(Cli, GroupSummary) {
  const CliResult r = run("group 'Sym(4)'");
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["group"]["order"], 24);
  EXPECT_EQ(j["classes"].size(), 5u);
}

TEST(Cli, SylowCounts) {
  const json j = json::parse(run("sylow 'Alt(5)' -p 2").out);
  EXPECT_EQ(j["sylow_order"], 4);
  EXPECT_EQ(j["sylow_count"], 5);
  EXPECT_EQ(j["normalizer_order"], 12);
}

TEST(Cli, NormalSylowAllPicky) {
  const CliResult r = run("picky 'Alt(4)' -p 2");
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["sylow_count"], 1);
  ASSERT_FALSE(j["classes"].empty());
  for (const json& c : j["classes"])
    EXPECT_TRUE(c["picky"].get<bool>());
}

TEST(Cli, SubnormAllMethodsOnDoubleTransposition) {
  const CliResult r = run("subnorm 'Sym(4)' -p 2 --class 1 --method all");
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["class"]["representative"], json({1, 0, 3, 2}));
  ASSERT_EQ(j["results"].size(), 3u);
  for (const json& res : j["results"])
    EXPECT_EQ(res["order"], 24);
  EXPECT_TRUE(j["methods_agree"].get<bool>());
}

TEST(Cli, ChartabExportAndVerify) {
  const fs::path dir = scratch("chartab");
  fs::create_directories(dir);
  const std::string file = (dir / "a5.json").string();
  ASSERT_EQ(run("chartab 'Alt(5)' --export " + file).code, 0);
  const CliResult v = run("chartab --verify " + file);
  EXPECT_EQ(v.code, 0);
  EXPECT_TRUE(json::parse(v.out)["verification"]["ok"].get<bool>());
  // same class count, different group: the power maps disagree
  EXPECT_EQ(run("chartab 'Sym(4)' --verify " + file).code, 1);
  fs::remove_all(dir);
}

TEST(Cli, ConjectureReports) {
  const CliResult r = run("conjecture 'Alt(5)' -p 5 --level plus");
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  ASSERT_EQ(j["reports"].size(), 2u);
  for (const json& rep : j["reports"]) {
    EXPECT_TRUE(rep["holds"].get<bool>());
    EXPECT_EQ(rep["subnormaliser"]["order"], 10);
  }
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("group 'Nope(3)'").code, 3);
  EXPECT_EQ(run("subnorm 'Sym(4)' -p 3 --class 1").code, 3);
  EXPECT_EQ(run("subnorm 'Sym(4)' -p 2 --class 99").code, 3);
  EXPECT_EQ(run("picky 'Sym(7)' -p 2 --enumeration-bound 100").code, 2);
  EXPECT_EQ(run("group 'Sym(4)' --enumeration-bound 0").code, 3);
  EXPECT_EQ(run("frobnicate").code, 3);
}

TEST(Cli, ReproduceWritesDocuments) {
  const fs::path dir = scratch("reproduce");
  const CliResult r = run("reproduce --claim M12-sub-whole-group --out " + dir.string());
  EXPECT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["claims"][0]["status"], "pass");
  std::ifstream in(dir / "M12-sub-whole-group.json");
  const json doc = json::parse(in);
  EXPECT_EQ(doc["status"], "pass");
  EXPECT_EQ(doc["schema_version"], 1);
  EXPECT_EQ(run("reproduce --claim not-a-claim --out " + dir.string()).code, 3);
  fs::remove_all(dir);
}

TEST(Cli, DataDirectoryOverride) {
  const fs::path dir = scratch("datadir");
  fs::create_directories(dir / "claims");
  std::ofstream(dir / "claims" / "tiny.json")
      << R"j({"id":"tiny","statement":"S3 has a normal Sylow 3-subgroup, so its 3-elements are picky.",)j"
      << R"j("kind":"subnormaliser","group":"Sym(3)","p":3,"expect":{"picky":true}})j";
  const CliResult r = run("reproduce --all --out " + (dir / "out").string(),
                    "PICKY_DATA_DIR=" + dir.string());
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(fs::exists(dir / "out" / "tiny.json"));
  EXPECT_EQ(run("reproduce --all", "PICKY_DATA_DIR=" + (dir / "missing").string()).code, 3);
  fs::remove_all(dir);
}
