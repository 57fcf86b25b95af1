#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "grhopf/cli.hpp"
#include "grhopf/json_io.hpp"
#include "test_support.hpp"

using namespace grhopf;
using namespace grhopf::testing;

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "grhopf");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("grhopf_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
    write("funmath.g", kFunMathText);
    write("k3.g", "v a\nv b\nv c\ne a b\ne a c\ne b c\n");
    write("p3.g", "v a\nv b\nv c\ne a b\ne b c\n");
    write("bad.g", "v a\nv b\ne a q\n");
  }
  void TearDown() override { fs::remove_all(dir_); }

  void write(const std::string& name, const std::string& text) { std::ofstream(dir_ / name) << text; }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  static std::string slurp(const std::string& p) {
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), {}};
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, AntipodeAllMethodsAgree) {
  const auto r = run({"antipode", "--monoid", "AO", "--graph", path("funmath.g"), "--key", kFunMathOrientation});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("takeuchi: -q^10*[a>m,h>m,h>t,n>a,n>f,n>u,t>a,u>a,u>f,u>m]"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("AGREE"), std::string::npos);
  EXPECT_EQ(r.out.find("DISAGREE"), std::string::npos);
}

TEST_F(CliTest, EnumerateFlats) {
  const auto r = run({"enumerate", "--monoid", "FL_M", "--graph", path("k3.g"), "--list"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("count: 5"), std::string::npos);
  EXPECT_NE(r.out.find("(empty)"), std::string::npos);
  EXPECT_NE(r.out.find("ab,ac,bc"), std::string::npos);
}

TEST_F(CliTest, ProductAndCoproduct) {
  auto r = run({"product", "--monoid", "L", "--graph", path("p3.g"), "--split", "a|b,c", "--left", "a", "--right",
                "c<b"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "[a<c<b]\n");
  r = run({"coproduct", "--monoid", "L", "--graph", path("p3.g"), "--split", "a,c|b", "--key", "a<b<c"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "q*[a<c] (x) [b]\n");
}

TEST_F(CliTest, MorphismAndBasisChange) {
  auto r = run({"morphism", "--name", "phi_Pi_FL", "--graph", path("funmath.g"), "--key", "u,n/f,m,a,t/h"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "[am,at,nu]\n");
  r = run({"basis-change", "--from", "Pi_m", "--to", "Pi_p", "--graph", path("p3.g"), "--key", "a,b/c"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "[a,b/c] + [a/b/c]\n");
}

TEST_F(CliTest, VerifySmallSuite) {
  const auto r = run({"verify", "--suite", "bimonoid", "--nmax", "2", "--monoid", "all"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
}

TEST_F(CliTest, JsonOutputRoundTrips) {
  const auto j = path("anti.json");
  const auto r = run({"antipode", "--monoid", "L", "--graph", path("p3.g"), "--key", "a<b<c", "--json", j});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json doc = Json::parse(slurp(j));
  EXPECT_TRUE(doc.at("agree").get<bool>());
  const Element e = element_from_json(doc.at("results").at("takeuchi"));
  EXPECT_EQ(e.to_string(), "-q^2*t*[c<b<a]");
}

TEST_F(CliTest, IdenticalInvocationsAreByteIdentical) {
  const std::vector<std::string> args = {"verify", "--suite", "functors", "--nmax", "3", "--monoid", "all"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST_F(CliTest, InputErrorsExitWithTwo) {
  auto r = run({"antipode", "--monoid", "L", "--graph", path("p3.g"), "--key", "a<<b"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find(":"), std::string::npos);
  r = run({"enumerate", "--monoid", "Nope", "--graph", path("p3.g")});
  EXPECT_EQ(r.code, 2);
  r = run({"enumerate", "--monoid", "L", "--graph", path("bad.g")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("3:"), std::string::npos) << r.err;
  r = run({"enumerate", "--monoid", "L", "--graph", path("missing.g")});
  EXPECT_EQ(r.code, 2);
  r = run({"bogus-subcommand"});
  EXPECT_EQ(r.code, 2);
  r = run({"verify", "--suite", "bimonoid", "--nmax", "9", "--monoid", "all"});
  EXPECT_EQ(r.code, 2);
}
