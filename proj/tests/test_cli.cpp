#include "qlattice/cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = qlattice::cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

qlattice::render::Json json(const Run& r) { return qlattice::render::Json::parse(r.out); }

std::vector<std::string> strings(const qlattice::render::Json& arr) {
  std::vector<std::string> out;
  for (const auto& x : arr) out.push_back(x.get<std::string>());
  return out;
}

std::vector<long long> orbit_values(const qlattice::render::Json& doc) {
  std::vector<long long> out;
  for (const auto& e : doc["elements"]) out.push_back(e["value"].get<long long>());
  return out;
}

}  // namespace

TEST(CliQbinom, Coefficients) {
  const auto r = run({"qbinom", "4", "2", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(strings(json(r)["coefficients"]), (std::vector<std::string>{"1", "1", "2", "1", "1"}));

  const auto csv = run({"qbinom", "4", "2", "-f", "csv"});
  EXPECT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out, "power,coefficient\n0,1\n1,1\n2,2\n3,1\n4,1\n");
}

TEST(CliQbinom, EqualContentVerdict) {
  const auto five = run({"qbinom", "10", "4", "--mod", "5", "-f", "json"});
  ASSERT_EQ(five.code, 0) << five.err;
  EXPECT_TRUE(json(five)["equal_content"].get<bool>());
  const auto ten = run({"qbinom", "10", "4", "--mod", "10", "-f", "json"});
  ASSERT_EQ(ten.code, 0);
  EXPECT_FALSE(json(ten)["equal_content"].get<bool>());
  EXPECT_EQ(run({"qbinom", "10", "4", "--mod", "10", "--expect-uniform"}).code, 2);
  EXPECT_EQ(run({"qbinom", "10", "4", "--mod", "5", "--expect-uniform"}).code, 0);
}

TEST(CliDist, TableRowJsonAndCsvAgree) {
  const auto j = run({"dist", "area", "6", "4", "--mod", "10", "-f", "json"});
  ASSERT_EQ(j.code, 0) << j.err;
  const auto doc = json(j);
  EXPECT_EQ(doc["modulus"], 10);
  EXPECT_EQ(strings(doc["counts"]),
            (std::vector<std::string>{"22", "20", "22", "20", "22", "20", "22", "20", "22", "20"}));
  EXPECT_EQ(doc["total"], "210");
  EXPECT_FALSE(doc["uniform"].get<bool>());
  EXPECT_FALSE(doc.contains("first_residue"));

  const auto c = run({"dist", "area", "6", "4", "--mod", "10", "-f", "csv", "--mode", "poly"});
  ASSERT_EQ(c.code, 0);
  std::istringstream lines(c.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "residue,count");
  for (int r = 0; r < 10; ++r) {
    ASSERT_TRUE(std::getline(lines, line));
    EXPECT_EQ(line, std::to_string(r) + "," + doc["counts"][static_cast<std::size_t>(r)].get<std::string>());
  }
}

TEST(CliDist, OtherKinds) {
  const auto p = run({"dist", "product", "5", "3", "-f", "json"});
  ASSERT_EQ(p.code, 0) << p.err;
  EXPECT_EQ(strings(json(p)["counts"]), (std::vector<std::string>{"1", "1", "1", "1"}));
  EXPECT_EQ(json(p)["first_residue"], 1);
  const auto s = run({"dist", "sum", "6", "3", "--mod", "5", "-f", "json"});
  EXPECT_TRUE(json(s)["uniform"].get<bool>());
  const auto m = run({"dist", "maj", "4", "--mod", "7", "-f", "json"});
  EXPECT_EQ(json(m)["counts"][0], "10");
}

TEST(CliDist, ExitCodes) {
  EXPECT_EQ(run({"dist", "area", "3", "3", "--mod", "5", "--expect-uniform"}).code, 0);
  EXPECT_EQ(run({"dist", "area", "6", "4", "--mod", "10", "--expect-uniform"}).code, 2);
  EXPECT_EQ(run({"dist", "area", "3", "3"}).code, 1);
  EXPECT_EQ(run({"dist", "area", "3", "3", "--mod", "5", "-f", "svg"}).code, 1);
  EXPECT_EQ(run({"dist", "bogus", "3", "3"}).code, 1);
  EXPECT_EQ(run({"dist", "product", "7", "2"}).code, 1);
  EXPECT_EQ(run({"dist", "product", "7", "2", "--diagnostic"}).code, 0);
  EXPECT_EQ(run({"dist", "area", "16", "16", "--mod", "5"}).code, 3);
  EXPECT_EQ(run({"dist", "area", "16", "16", "--mod", "5", "--mode", "poly"}).code, 0);
  EXPECT_EQ(run({"nonsense"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(CliDist, StepBoundFromEnvironment) {
  ::setenv(qlattice::kStepBoundEnv, "8", 1);
  EXPECT_EQ(run({"dist", "area", "5", "4", "--mod", "3"}).code, 3);
  EXPECT_EQ(run({"dist", "area", "4", "4", "--mod", "3"}).code, 0);
  ::unsetenv(qlattice::kStepBoundEnv);
}

TEST(CliOrbit, PhiSquare) {
  const auto r = run({"orbit", "phi-square", "01101001", "-f", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = json(r);
  EXPECT_EQ(doc["modulus"], 7);
  EXPECT_EQ(doc["elements"].size(), 7u);
  EXPECT_EQ(orbit_values(doc), (std::vector<long long>{8, 11, 7, 3, 6, 2, 5}));
  EXPECT_TRUE(doc["residues_distinct"].get<bool>());
}

TEST(CliOrbit, RotateAndSequence) {
  const auto r = run({"orbit", "rotate", "ENNENEEN", "-f", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json(r)["elements"].size(), 8u);

  const auto s = run({"orbit", "phi-seq", "1,2", "--n", "2", "-f", "json"});
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_EQ(orbit_values(json(s)), (std::vector<long long>{3, 4, 5}));

  EXPECT_EQ(run({"orbit", "phi-seq", "1,2,3", "--n", "2"}).code, 1);
  EXPECT_EQ(run({"orbit", "spin", "EN"}).code, 1);
  EXPECT_EQ(run({"orbit", "phi-square", "EEN"}).code, 1);
}

TEST(CliOrbit, SvgIsDeterministic) {
  const auto a = run({"orbit", "phi-square", "01101001", "-f", "svg"});
  const auto b = run({"orbit", "phi-square", "01101001", "-f", "svg"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.rfind("<svg", 0), 0u);
  EXPECT_NE(a.out.find("</svg>"), std::string::npos);
  std::size_t polylines = 0;
  for (auto pos = a.out.find("<polyline"); pos != std::string::npos; pos = a.out.find("<polyline", pos + 1)) ++polylines;
  EXPECT_EQ(polylines, 7u);
}

TEST(CliPath, StatsAndOutputFile) {
  const auto r = run({"path", "ENNENEEN", "-f", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json(r)["area"], 8);

  const auto file = std::filesystem::temp_directory_path() / "qlattice_cli_test.svg";
  const auto w = run({"path", "ENNENEEN", "-f", "svg", "-o", file.string()});
  ASSERT_EQ(w.code, 0) << w.err;
  std::ifstream in(file);
  std::stringstream content;
  content << in.rdbuf();
  EXPECT_EQ(content.str(), run({"path", "ENNENEEN", "-f", "svg"}).out);
  std::filesystem::remove(file);
}

TEST(CliVerify, Sweeps) {
  const auto t1 = run({"verify", "t1", "--max-n", "7"});
  EXPECT_EQ(t1.code, 0) << t1.out;
  EXPECT_NE(t1.out.find("7/7 checks passed"), std::string::npos);
  const auto eq1 = run({"verify", "eq1", "--max-n", "50"});
  EXPECT_EQ(eq1.code, 0);
  EXPECT_NE(eq1.out.find("50/50 checks passed"), std::string::npos);
  EXPECT_EQ(run({"verify", "t5", "--max-n", "13"}).code, 0);
  EXPECT_EQ(run({"verify", "t7", "--max-n", "6"}).code, 0);
  EXPECT_EQ(run({"verify", "wat"}).code, 1);
}

// The n/g uniformity claim breaks at (4, 2), so the sweep reports it.
TEST(CliVerify, T6SweepReportsCounterexample) {
  const auto r = run({"verify", "t6", "--max-n", "6"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("FAIL t6 n=4 k=2"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("14/15 checks passed"), std::string::npos) << r.out;
}

TEST(CliVerify, ResourceLimitMarksPartial) {
  ::setenv(qlattice::kStepBoundEnv, "6", 1);
  const auto r = run({"verify", "t1", "--max-n", "5"});
  ::unsetenv(qlattice::kStepBoundEnv);
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.out.find("partial: 3/3 checks passed"), std::string::npos) << r.out;
}
