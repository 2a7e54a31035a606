#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "test_helpers.hpp"
#include "tropexp/io.hpp"

namespace tropexp {
namespace {

using io::Json;
using testing::cov;

struct CliRun {
  int code;
  std::string out;
  Json doc() const { return Json::parse(out); }
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str()};
}

std::string write_temp(const std::string& name, const Json& j) {
  const auto path = std::filesystem::temp_directory_path() / ("tropexp_cli_" + name + ".json");
  std::ofstream(path) << j.dump();
  return path.string();
}

TEST(Cli, IndexOfCoordinateTori) {
  const CliRun r = run({"index", "--field", "Q", "--dim", "2", "exp(z1)-1", "exp(z2)-1"});
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.doc()["value"], "1");
  EXPECT_EQ(r.doc()["two_pi_power"], -2);
}

TEST(Cli, DensityOfIrrationalFrequency) {
  const CliRun r = run({"density", "--field", "Qsqrt:2", "--dim", "1", "exp(sqrt2*z1)-3"});
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.doc()["value"], "sqrt2");
  EXPECT_EQ(r.doc()["two_pi_power"], -1);
  EXPECT_TRUE(r.doc().contains("approximate"));
  EXPECT_EQ(io::density_from_json(r.doc()).value, Scalar::sqrt_of(2));
}

TEST(Cli, EqualSquareFanVersusSegmentSum) {
  const TropicalFan square = skeleton_fan(unit_cube(2), 1);
  const TropicalFan sum =
      fan_sum(skeleton_fan(segment(cov({1, 0})), 1), skeleton_fan(segment(cov({0, 1})), 1));
  const std::string a = write_temp("square", io::to_json(square));
  const std::string b = write_temp("segsum", io::to_json(sum));
  const CliRun r = run({"equal", "--dim", "2", a, b});
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.doc(), (Json{{"equal", true}}));

  const std::string c = write_temp("segx", io::to_json(skeleton_fan(segment(cov({1, 0})), 1)));
  EXPECT_EQ(run({"equal", a, c}).doc()["equal"], false);
}

TEST(Cli, SeedDeterminism) {
  const std::vector<std::string> args = {"trop", "--dim", "2", "--seed", "17", "1+exp(z1)+exp(z2)", "exp(z1)-2*exp(z2)+3"};
  const CliRun a = run(args);
  const CliRun b = run(args);
  ASSERT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  const CliRun c = run({"chambers", "--field", "Qsqrt:2", "--dim", "2", "--seed", "5", "exp(z1)-1",
                     "exp(sqrt2*z1+z2)-1"});
  ASSERT_EQ(c.code, 0) << c.out;
  EXPECT_TRUE(c.doc()["consistent"].get<bool>());
  EXPECT_EQ(c.out, run({"chambers", "--field", "Qsqrt:2", "--dim", "2", "--seed", "5", "exp(z1)-1",
                        "exp(sqrt2*z1+z2)-1"})
                       .out);
}

TEST(Cli, EmittedDocumentsReparse) {
  const CliRun t = run({"trop", "--dim", "2", "1+exp(z1)+exp(z2)"});
  ASSERT_EQ(t.code, 0);
  const TropicalFan fan = io::fan_from_json(t.doc());
  EXPECT_TRUE(equality_test(fan, skeleton_fan(standard_simplex(2), 1)));

  const CliRun both = run({"trop", "--dim", "2", "--route", "both", "1+exp(z1)+exp(2*z2)"});
  ASSERT_EQ(both.code, 0) << both.out;
  EXPECT_TRUE(both.doc()["equal"].get<bool>());

  const CliRun l = run({"lattices", "--dim", "2", "exp(z1)-1", "exp(z2)-1"});
  ASSERT_EQ(l.code, 0) << l.out;
  for (const auto& lj : l.doc()["lattices"]) EXPECT_NO_THROW(io::lattice_from_json(lj));
  EXPECT_EQ(l.doc()["density"]["value"], "1");
}

TEST(Cli, PullbackMixedVolumeAndPair) {
  const std::string map = write_temp("diag", io::to_json(LinearMap(Matrix::from_rows({{1}, {1}}, 1))));
  const std::string fan = write_temp("sq", io::to_json(skeleton_fan(unit_cube(2), 1)));
  const CliRun p = run({"pullback", map, fan});
  ASSERT_EQ(p.code, 0) << p.out;
  EXPECT_TRUE(equality_test(io::fan_from_json(p.doc()), skeleton_fan(segment(cov({2})), 1)));

  const std::string sq = write_temp("sqpoly", io::to_json(unit_cube(2)));
  const std::string tri = write_temp("tri", io::to_json(standard_simplex(2)));
  const CliRun m = run({"mixedvol", sq, tri});
  ASSERT_EQ(m.code, 0) << m.out;
  EXPECT_EQ(m.doc()["value"], "1");

  const PolytopeClass g = PolytopeClass::generator(unit_cube(2));
  const PolytopeClass zero = g - PolytopeClass::generator(segment(cov({1, 0}))) -
                             PolytopeClass::generator(segment(cov({0, 1})));
  const CliRun z = run({"pair", write_temp("zero", io::to_json(zero))});
  ASSERT_EQ(z.code, 0) << z.out;
  EXPECT_EQ(z.doc()["nonzero"], false);
  const CliRun nz = run({"pair", write_temp("g", io::to_json(testing::q(2) * g - g))});
  EXPECT_EQ(nz.doc()["nonzero"], true);
  EXPECT_TRUE(nz.doc().contains("witness"));
  const CliRun pr = run({"pair", write_temp("g", io::to_json(g)), write_temp("g2", io::to_json(g))});
  EXPECT_EQ(pr.doc()["pairing"], "1");
}

TEST(Cli, ErrorsAreStructured) {
  CliRun r = run({"density", "--dim", "1", "exp(z1*z1)-1"});
  EXPECT_EQ(r.code, cli::kExitParse);
  EXPECT_EQ(r.doc()["error"]["kind"], "parse");
  EXPECT_TRUE(r.doc()["error"].contains("position"));

  r = run({"density", "--dim", "2", "exp(z1)-1"});
  EXPECT_EQ(r.code, cli::kExitPrecondition);
  EXPECT_EQ(r.doc()["error"]["kind"], "precondition");

  r = run({"density", "--field", "Q", "--dim", "1", "exp(sqrt2*z1)-1"});
  EXPECT_EQ(r.code, cli::kExitParse);

  r = run({"frobnicate"});
  EXPECT_EQ(r.code, cli::kExitParse);
  EXPECT_EQ(r.doc()["error"]["kind"], "usage");

  r = run({"equal", "/nonexistent/a.json", "/nonexistent/b.json"});
  EXPECT_EQ(r.code, cli::kExitParse);
  EXPECT_EQ(r.doc()["error"]["kind"], "input");

  r = run({"trop", "--dim", "1", "--route", "sideways", "exp(z1)-1"});
  EXPECT_EQ(r.code, cli::kExitPrecondition);
}

TEST(Cli, SummaryAndHelp) {
  const CliRun s = run({"density", "--summary", "--dim", "1", "exp(z1)-3"});
  EXPECT_EQ(s.code, 0);
  EXPECT_NE(s.out.find("weak density"), std::string::npos);
  EXPECT_EQ(run({"--help"}).code, 0);
}

}  // namespace
}  // namespace tropexp
