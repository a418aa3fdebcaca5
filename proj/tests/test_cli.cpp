#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "ncreal/json_io.hpp"
#include "support.hpp"

namespace ncreal {
namespace {

struct Result {
  int code;
  std::string out;
  Json json() const { return Json::parse(out); }
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream os;
  const int code = cli::run(args, os);
  return {code, os.str()};
}

class TempDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("ncreal_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  void write(const std::string& name, const std::string& text) const { std::ofstream(path(name)) << text; }

 private:
  std::filesystem::path dir_;
};

TEST(JsonIo, RationalsAndMatrices) {
  MatQ a(2, 2);
  a << Rational(1, 2), Rational(-3), Rational(0), Rational(7, 9);
  const Json j = to_json(a);
  EXPECT_EQ(j.dump(), R"([["1/2","-3"],["0","7/9"]])");
  EXPECT_EQ(matrix_from_json(j), a);
  EXPECT_EQ(rational_from_json(Json(4)), Rational(4));
  EXPECT_THROW(matrix_from_json(Json::parse(R"([["1"],["1","2"]])")), FormatError);
  EXPECT_THROW(matrix_from_json(j, 3), FormatError);
  EXPECT_THROW(rational_from_json(Json("x")), FormatError);
}

TEST(JsonIo, RealizationRoundTrip) {
  const Expr e = parse("inv(z1*z2 - z2*z1)");
  const MatTuple p = *sample_domain_point(e, 2, 2, 0, 50).point;
  const Realization r = reduce(from_expr(e, p)).realization;
  const Json j = to_json(r);
  EXPECT_EQ(j["format"], kFormatTag);
  EXPECT_EQ(realization_from_json(Json::parse(j.dump())), r);
  Json bad = j;
  bad["format"] = "ncreal-0";
  EXPECT_THROW(realization_from_json(bad), FormatError);
  bad = j;
  bad.erase("format");
  EXPECT_THROW(realization_from_json(bad), FormatError);
  EXPECT_EQ(point_from_json(point_to_json(p)), p);
}

TEST(Cli, ReferenceOutputs) {
  Result k = run_cli({"kappa", "inv(z1*z2 - z2*z1)"});
  EXPECT_EQ(k.code, 0);
  EXPECT_EQ(k.out, "{\"kappa\":9}\n");
  Result d = run_cli({"degree", "--size", "2", "--seed", "0", "inv(z1*z2 - z2*z1)"});
  EXPECT_EQ(d.code, 0);
  EXPECT_EQ(d.out, "{\"sylvester_degree\":3,\"totally_reduced\":true}\n");
  Result z = run_cli({"iszero", "z1 - z1"});
  EXPECT_EQ(z.code, 0);
  EXPECT_EQ(z.json()["identity"], true);
}

TEST(Cli, NegativeAnswersExitOne) {
  EXPECT_EQ(run_cli({"iszero", "z1*z2 - z2*z1"}).code, 1);
  EXPECT_EQ(run_cli({"equal", "inv(z1*z2)", "inv(z1)*inv(z2)"}).code, 1);
  EXPECT_EQ(run_cli({"equal", "inv(z1*z2)", "inv(z2)*inv(z1)"}).code, 0);
  Result deps = run_cli({"deps", "z1", "z2", "z1*z2"});
  EXPECT_EQ(deps.code, 1);
  EXPECT_EQ(deps.json()["status"], "independent");
  Result dep = run_cli({"deps", "z1*z2", "z2*z1", "z1*z2 - z2*z1"});
  EXPECT_EQ(dep.code, 0);
  EXPECT_EQ(dep.json()["lambda"].dump(), R"(["1","-1","-1"])");
}

TEST(Cli, ErrorsAreJsonWithExitTwo) {
  for (const std::vector<std::string>& args : std::vector<std::vector<std::string>>{
           {"kappa", "z1 +"}, {"frobnicate"}, {}, {"eval", "z1"}, {"minimize", "/nonexistent.json"},
           {"--size", "0", "kappa", "z1"}, {"bounds"}}) {
    const Result r = run_cli(args);
    EXPECT_EQ(r.code, 2);
    const Json j = r.json();
    EXPECT_TRUE(j.contains("error") || j.contains("usage")) << r.out;
  }
  const Json pe = run_cli({"kappa", "z1 +"}).json();
  EXPECT_EQ(pe["error"], "ParseError");
  EXPECT_EQ(pe["offset"], 4);
  const Result help = run_cli({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_TRUE(help.json().contains("usage"));
}

TEST(Cli, Bounds) {
  const Json j = run_cli({"bounds", "--m", "2", "--kappa", "9", "--ell", "3", "--d", "2", "--N", "18"}).json();
  EXPECT_EQ(j["identity_N"], 18);
  EXPECT_EQ(j["dependence_N"], "120");
  EXPECT_EQ(j["degree_greater_than"], "10");
  EXPECT_EQ(run_cli({"bounds", "--m", "2", "inv(z1*z2 - z2*z1)"}).json()["identity_N"], 18);
}

TEST(Cli, DeterministicOutput) {
  const std::vector<std::string> args{"--seed", "11", "--size", "2", "realize", "inv(z1*z2 - z2*z1)"};
  EXPECT_EQ(run_cli(args).out, run_cli(args).out);
  const std::vector<std::string> other{"--seed", "12", "--size", "2", "realize", "inv(z1*z2 - z2*z1)"};
  EXPECT_EQ(run_cli(other).json()["n"], 9);
}

TEST_F(TempDir, RealizeOutputFeedsOtherCommands) {
  const std::string r = path("r.json"), rm = path("rm.json");
  ASSERT_EQ(run_cli({"--size", "2", "realize", "inv(z1*z2 - z2*z1)", "-o", r}).code, 0);
  const Result m = run_cli({"minimize", r, "-o", rm});
  ASSERT_EQ(m.code, 0);
  EXPECT_EQ(m.out, "{\"left\":\"trivial\",\"right\":\"trivial\",\"dim\":3,\"totally_reduced\":true,\"sylvester_degree\":3}\n");
  write("comm.json", R"({"format":"ncreal-1","point":[[["1","0"],["0","2"]],[["3","0"],["0","1"]]]})");
  write("gen.json", R"({"format":"ncreal-1","point":[[["1","1"],["0","2"]],[["3","0"],["1","1"]]]})");
  const Result out_dom = run_cli({"domaincheck", rm, "--point", path("comm.json")});
  EXPECT_EQ(out_dom.code, 1);
  EXPECT_EQ(out_dom.json()["member"], false);
  EXPECT_EQ(run_cli({"domaincheck", rm, "--point", path("gen.json")}).code, 0);
  EXPECT_EQ(run_cli({"domaincheck", r, "--point", path("gen.json")}).json()["error"], "NotTotallyReduced");
  const Json v1 = run_cli({"eval", rm, "--point", path("gen.json")}).json();
  const Json v2 = run_cli({"eval", r, "--point", path("gen.json")}).json();
  const Json v3 = run_cli({"eval", "inv(z1*z2 - z2*z1)", "--point", path("gen.json")}).json();
  EXPECT_EQ(v1, v3);
  EXPECT_EQ(v2, v3);
  EXPECT_EQ(run_cli({"minimize", rm}).json()["dim"], 3);
}

TEST_F(TempDir, SymmetricRoundTrip) {
  const std::string s = path("s.json");
  ASSERT_EQ(run_cli({"--size", "2", "realize", "--symmetric", "z1*z2 + z2*z1", "-o", s}).code, 0);
  const Result sr = run_cli({"symrealize", s});
  ASSERT_EQ(sr.code, 0) << sr.out;
  const Json j = sr.json();
  EXPECT_EQ(j["signature"][0].get<int>() + j["signature"][1].get<int>(), j["m"].get<int>() * j["n"].get<int>());
  write("zero.json", R"({"format":"ncreal-1","point":[[["0"]]]})");
  const Json k = run_cli({"symrealize", "--point", path("zero.json"), "inv(1 + z1*z1)"}).json();
  EXPECT_EQ(k["n"], 2);
  EXPECT_EQ(k["signature"].dump(), "[1,1]");
  EXPECT_EQ(k["positive_component"], false);
  const Json pos = run_cli({"symrealize", "inv(2 + z1)"}).json();
  EXPECT_EQ(pos["positive_component"], true);
  EXPECT_TRUE(pos.contains("advisory"));
  const Json fl = run_cli({"symrealize", "--float-jform", "--point", path("zero.json"), "inv(1 + 2*z1*z1)"}).json();
  EXPECT_TRUE(fl.contains("jform") || fl["float_jform"]["inexact"] == true);
  EXPECT_EQ(run_cli({"symrealize", "--size", "2", "z1*z2"}).json()["error"], "NotSymmetricFunction");
}

TEST_F(TempDir, SeriesAndDomainCheckOfExpressions) {
  write("zero.json", R"({"format":"ncreal-1","point":[[["0"]]]})");
  write("one.json", R"({"format":"ncreal-1","point":[[["1"]]]})");
  const Json s = run_cli({"--order", "2", "--point", path("zero.json"), "series", "inv(1 - z1)"}).json();
  EXPECT_EQ(s["coefficients"].dump(), R"({"1":[["1"]],"x1":[["1"]],"x1x1":[["1"]]})");
  EXPECT_EQ(run_cli({"domaincheck", "inv(1 - z1)", "--point", path("zero.json")}).code, 0);
  EXPECT_EQ(run_cli({"domaincheck", "inv(1 - z1)", "--point", path("one.json")}).code, 1);
  write("bad.json", R"({"format":"other","point":[]})");
  EXPECT_EQ(run_cli({"eval", "z1", "--point", path("bad.json")}).json()["error"], "FormatError");
}

}  // namespace
}  // namespace ncreal
