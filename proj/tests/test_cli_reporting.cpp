#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "urlab/errors.hpp"
#include "urlab/io.hpp"
#include "urlab/report.hpp"

using namespace urlab;
namespace fs = std::filesystem;

namespace {

int run(const std::string& args, const std::string& out = "/dev/null") {
  const std::string cmd = std::string("\"") + URLAB_CLI + "\" " + args + " > " + out + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "urlab_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

RepParams worked() {
  return io::params_from_json(io::read_file(fixture("worked-211.json")));
}

}  // namespace

TEST(Json, RationalAndMatrixRoundTrip) {
  EXPECT_EQ(io::to_json(Rational(-3, 4)), "-3/4");
  EXPECT_EQ(io::to_json(Rational(5)), "5");
  EXPECT_EQ(io::rational_from_json(io::Json(7)), Rational(7));
  EXPECT_EQ(io::rational_from_json(io::Json("6/8")), Rational(3, 4));
  EXPECT_THROW(io::rational_from_json(io::Json("1/0")), SchemaError);
  EXPECT_THROW(io::rational_from_json(io::Json(1.5)), SchemaError);
  const Matrix m{{1, Rational(-1, 2)}, {0, 3}};
  EXPECT_EQ(io::matrix_from_json(io::to_json(m)), m);
  EXPECT_THROW(io::matrix_from_json(io::parse("[[1, 2], [3]]")), SchemaError);
  EXPECT_THROW(io::parse("{"), SchemaError);
}

TEST(Json, RepresentationRoundTripGivesSameReport) {
  const Representation r = build_R(worked());
  const io::Json j = io::to_json(r);
  EXPECT_EQ(j.at("schema"), io::kSchema);
  const Representation back = io::representation_from_json(io::parse(j.dump()));
  EXPECT_EQ(back.images, r.images);
  EXPECT_TRUE(back.verified);
  const auto a = io::to_json(kernel_and_flags(r), *r.algebra);
  const auto b = io::to_json(kernel_and_flags(back), *back.algebra);
  EXPECT_EQ(a.dump(), b.dump());

  // Images only, no params: still parsed and verified.
  io::Json bare = j;
  bare.erase("params");
  const Representation from_images = io::representation_from_json(bare);
  EXPECT_TRUE(from_images.verified);
  EXPECT_EQ(from_images.images, r.images);
}

TEST(Json, MismatchedImagesAreRejected) {
  io::Json j = io::to_json(build_R(worked()));
  j["images"]["v0"][0][0] = "9";
  EXPECT_THROW(io::representation_from_json(j), SchemaError);
  io::Json unknown = io::to_json(build_R(worked()));
  unknown["images"]["q"] = unknown["images"]["x"];
  EXPECT_THROW(io::representation_from_json(unknown), SchemaError);
}

TEST(Report, FormatsAndEmptyTable) {
  EXPECT_EQ(parse_format("md"), Format::md);
  EXPECT_EQ(parse_format("csv"), Format::csv);
  EXPECT_THROW(parse_format("yaml"), std::invalid_argument);
  SweepReport empty;
  empty.kind = "faithful-sweep";
  const std::string md = render_report(empty, Format::md);
  EXPECT_NE(md.find("| n | (a,b,c) | expected | observed | seeds | pass |"), std::string::npos) << md;
  EXPECT_NE(md.find("supporting evidence"), std::string::npos);
  const std::string csv = render_report(empty, Format::csv);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "n,\"(a,b,c)\",expected,observed,seeds,pass");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1);
}

TEST(Report, RowsAndStability) {
  SweepReport rep;
  rep.kind = "faithful-sweep";
  rep.records.push_back({"3", "(2,2,2)", "faithful", "faithful", 5, true});
  rep.records.push_back({"3", "(2,1,2)", "not faithful", "faithful", 5, false});
  rep.counterexamples.push_back({"fp", "observed faithful"});
  const std::string md = render_report(rep, Format::md);
  EXPECT_NE(md.find("| 3 | (2,2,2) | faithful | faithful | 5 | pass |"), std::string::npos) << md;
  EXPECT_EQ(md, render_report(rep, Format::md));
  EXPECT_NE(md.find("**FAIL**"), std::string::npos);
  EXPECT_FALSE(rep.pass());
  const io::Json j = io::parse(render_report(rep, Format::json));
  EXPECT_EQ(j.at("records").size(), 2u);
  EXPECT_EQ(j.at("label"), "supporting evidence");
}

TEST(Report, AnalysisRendering) {
  const Representation r = build_R(worked());
  const AnalysisReport a = kernel_and_flags(r);
  const io::Json j = io::parse(render_report(a, *r.algebra, Format::json));
  EXPECT_EQ(j.at("length"), 3);
  EXPECT_EQ(j.at("faithful"), true);
  EXPECT_EQ(j.at("kernel_dim"), 0);
  EXPECT_NE(render_report(a, *r.algebra, Format::md).find("faithful"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("build " + fixture("worked-211.json")), 0);
  EXPECT_EQ(run("build " + fixture("not-a-homomorphism.json")), 1);
  EXPECT_EQ(run("build " + fixture("truncated.json")), 2);
  EXPECT_EQ(run("build /nonexistent/file.json"), 2);
  EXPECT_EQ(run("no-such-verb"), 2);
  EXPECT_EQ(run("sweep-faithful --format yaml"), 2);
  EXPECT_EQ(run("lidep " + fixture("lidep-212.json")), 0);
  EXPECT_EQ(run("build --sl2"), 0);
  EXPECT_EQ(run("crosscheck-sl2"), 0);
}

TEST(Cli, BuildAnalyzeNormalizeChain) {
  const fs::path rep = scratch("rep.json");
  const fs::path report = scratch("report.json");
  const fs::path norm = scratch("norm.json");
  ASSERT_EQ(run("build " + fixture("worked-211.json") + " -o " + rep.string()), 0);
  ASSERT_EQ(run("analyze " + rep.string() + " -o " + report.string()), 0);
  const io::Json a = io::parse(slurp(report));
  EXPECT_EQ(a.at("faithful"), true);
  EXPECT_EQ(a.at("uniserial"), true);
  ASSERT_EQ(run("normalize " + rep.string() + " -o " + norm.string()), 0);
  ASSERT_EQ(run("analyze " + rep.string() + " --compare " + norm.string() + " -o " + report.string()), 0);
  const io::Json c = io::parse(slurp(report));
  EXPECT_EQ(c.at("negative_certified"), false);
}

TEST(Cli, SweepIsByteStableUnderSeed) {
  const fs::path one = scratch("sweep1.md");
  const fs::path two = scratch("sweep2.md");
  const std::string args = "sweep-faithful --n 2..3 --samples 1 --seed 5 -f md -o ";
  ASSERT_EQ(run(args + one.string()), 0);
  ASSERT_EQ(run(args + two.string()), 0);
  EXPECT_EQ(slurp(one), slurp(two));
  EXPECT_NE(slurp(one).find("supporting evidence"), std::string::npos);
}

TEST(Cli, SmallScans) {
  EXPECT_EQ(run("reduccion --dmax 2 --samples 1"), 0);
  EXPECT_EQ(run("reduccion --sizes 1 1 1 1"), 0);
  EXPECT_EQ(run("roundtrip --trials 3 --n 2..3"), 0);
  EXPECT_EQ(run("lidep --P '[[0],[1]]' --Q '[[1]]'"), 0);
}
