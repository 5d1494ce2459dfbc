#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code;
  std::string out;
};

// Runs the CLI with stderr folded into stdout.
Run run(const std::string& args) {
  std::string cmd = std::string(JACOBIPOLY_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  while (auto n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

TEST(Verify, SatisfiedAndViolated) {
  auto ok = run("verify --ring int '-2*x+4*y'");
  EXPECT_EQ(ok.code, 0) << ok.out;
  EXPECT_NE(ok.out.find("satisfied"), std::string::npos);

  auto bad = run("verify --ring int 'x*y'");
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("3*x*y*z"), std::string::npos) << bad.out;

  auto f3 = run("verify --ring zp:3 'x*y'");
  EXPECT_EQ(f3.code, 0) << f3.out;
}

TEST(Verify, IntroductoryExample) {
  auto r = run(
      "verify --ring 'zp:3[t]' '(1-t^2)*x*y+((t+1)*(1-t^2))*(x+y)+(t*(t+1)*(1-t-t^2))'");
  EXPECT_EQ(r.code, 0) << r.out;
}

TEST(Verify, JsonWitness) {
  auto r = run("--output json verify --ring int --form j1 'x*y'");
  EXPECT_EQ(r.code, 1);
  auto j = json_of(r);
  EXPECT_EQ(j["verdict"], "violated");
  EXPECT_EQ(j["witness"]["term"], "3*x*y*z");
  EXPECT_EQ(j["witness"]["coefficient"], "3");
}

TEST(Verify, OtherForms) {
  EXPECT_EQ(run("verify --ring int --form j2 '4*x-2*y'").code, 0);
  EXPECT_EQ(run("verify --ring int --form j5 '-2*x+4*y'").code, 1);
  EXPECT_EQ(run("verify --ring zp:2 --form j6 0").code, 0);
}

TEST(Classify, JsonVerdicts) {
  auto s = run("--output json classify --ring zp:3 'x*y'");
  EXPECT_EQ(s.code, 0);
  auto j = json_of(s);
  EXPECT_EQ(j["verdict"], "solution");
  EXPECT_EQ(j["family"], "Char3Product");
  EXPECT_EQ(j["params"]["A"], "1");
  EXPECT_EQ(j["params"]["B"], "0");
  EXPECT_EQ(j["params"]["D"], "0");

  auto n = run("--output json classify --ring int 'x^2'");
  EXPECT_EQ(n.code, 1);
  auto k = json_of(n);
  EXPECT_EQ(k["verdict"], "not_jacobi");
  EXPECT_TRUE(k["witness"].contains("monomial"));

  auto lin = json_of(run("--output json classify --ring int '-2*x+4*y'"));
  EXPECT_EQ(lin["family"], "LinearBC");
  EXPECT_EQ(lin["params"]["B"], "-2");
  EXPECT_EQ(lin["params"]["C"], "4");
}

TEST(Enumerate, Json) {
  auto r = run("--output json enumerate --ring int --max-deg 1 --coeff-bound 4");
  EXPECT_EQ(r.code, 0) << r.out;
  auto j = json_of(r);
  EXPECT_EQ(j["solution_count"], 2);
  EXPECT_EQ(j["agreement"], true);
  EXPECT_EQ(j["degree_bound"], true);
  EXPECT_TRUE(j.contains("elapsed_ms"));

  auto f2 = json_of(run("--output json enumerate --ring zp:2 --max-deg 1"));
  EXPECT_EQ(f2["solutions"], nlohmann::json::array({"0"}));
}

TEST(Enumerate, RefusesOversizedOrInfiniteSpaces) {
  EXPECT_EQ(run("enumerate --ring zp:7 --max-deg 3").code, 2);
  EXPECT_EQ(run("enumerate --ring 'zp:3[t]' --max-deg 1").code, 2);
  EXPECT_EQ(run("enumerate --ring zp:3 --max-deg 2 --budget 10").code, 2);
}

TEST(Lucas, ResidueAndDigits) {
  auto r = run("lucas 10 3 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("= 0 mod 2"), std::string::npos) << r.out;
  auto j = json_of(run("--output json lucas 5 2 3"));
  EXPECT_EQ(j["residue"], 1);
  EXPECT_EQ(j["factors"].size(), 2u);
  EXPECT_EQ(run("lucas 5 2 4").code, 2);
}

TEST(Families, PerCharacteristic) {
  auto i = json_of(run("--output json families --ring int"));
  EXPECT_EQ(i["families"].size(), 1u);
  EXPECT_EQ(i["nonzero_constant_solutions"], false);
  auto t = json_of(run("--output json families --ring zp:3"));
  EXPECT_EQ(t["families"].size(), 2u);
  EXPECT_EQ(t["nonzero_constant_solutions"], true);
  auto f = json_of(run("--output json families --ring zp:5"));
  EXPECT_EQ(f["families"][0]["name"], "LinearBC");
}

TEST(Errors, ExitTwoWithMessage) {
  auto syntax = run("verify --ring int 'x+*y'");
  EXPECT_EQ(syntax.code, 2);
  EXPECT_NE(syntax.out.find("position 2"), std::string::npos) << syntax.out;
  EXPECT_EQ(run("verify --ring int --bogus x").code, 2);
  EXPECT_EQ(run("verify --ring zp:4 x").code, 2);
  EXPECT_EQ(run("verify --ring int 'x*w'").code, 2);
  EXPECT_EQ(run("verify --ring int --form j3 x").code, 2);
  EXPECT_EQ(run("").code, 2);
}

}  // namespace
