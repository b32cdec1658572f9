#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "maninlab/serialize.hpp"

using namespace maninlab;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + std::string(MANINLAB_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::filesystem::path temp_file(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

}  // namespace

TEST(Cli, OrbitCheckExample) {
  auto r = run("orbit-check --pair AII-adjoint --n 3 --twist outer");
  ASSERT_EQ(r.status, 0) << r.out;
  auto v = verdict_from_json(parse_json(r.out));
  EXPECT_TRUE(v.finite);
  auto inf = run("orbit-check --pair AII-adjoint --n 4 --twist outer");
  auto w = verdict_from_json(parse_json(inf.out));
  EXPECT_FALSE(w.finite);
  EXPECT_TRUE(w.witness_generator.has_value());
  EXPECT_EQ(w, check_condition_iv(maninlab::make_pair("AII-adjoint", {4, 0, 0, 0, Twist::outer})));
}

TEST(Cli, KacExample) {
  auto r = run("kac --type C --rank 4 --vertex 2 --twist inner");
  ASSERT_EQ(r.status, 0);
  auto j = parse_json(r.out);
  EXPECT_EQ(j["verdict"], "simply_connected");
  auto k = kac_result_from_json(j);
  EXPECT_EQ(k.family.series, "C II");
  auto c = choice_from_json(j["choice"]);
  EXPECT_EQ(c.vertex, 2u);
}

TEST(Cli, CatalogDefaultRunPasses) {
  auto r = run("catalog --threads 2");
  ASSERT_EQ(r.status, 0);
  auto j = parse_json(r.out);
  EXPECT_EQ(j["status"], "pass");
  auto rep = report_from_json(j);
  EXPECT_EQ(rep.mismatches, 0u);
  EXPECT_EQ(rep.entries.size(), builtin_catalog().size());
  EXPECT_EQ(run("catalog --threads 1").out, r.out);
}

TEST(Cli, CatalogDirectoryOverride) {
  auto dir = temp_file("maninlab_cli_catalog");
  std::filesystem::create_directories(dir);
  std::vector<PairDescriptor> one{maninlab::make_pair("AII-adjoint", {4, 0, 0, 0, Twist::outer})};
  one[0].expected_finite = true;  // deliberately wrong
  std::ofstream(dir / "symmetric_pairs.json") << catalog_to_json(one).dump();
  auto r = run("catalog", "MANINLAB_CATALOG_DIR=" + dir.string());
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(parse_json(r.out)["mismatches"], 1);
  std::filesystem::remove_all(dir);
}

TEST(Cli, ExponentsAndRestrictedSum) {
  auto r = run("exponents --type A --rank 2 --lambda 1,1");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(exponents_from_json(parse_json(r.out)), (ExponentPair{3, 2}));
  auto f = temp_file("maninlab_divisor.json");
  std::ofstream(f) << R"({"m": ["2", "1"], "n": ["3", "1"]})";
  auto d = parse_json(run("exponents --input " + f.string()).out);
  EXPECT_EQ(d["a"], "3/2");
  std::filesystem::remove(f);
  auto s = parse_json(run("restricted-sum --n 3").out);
  EXPECT_EQ(weight_from_json(s["coefficients"]).coefficients, (std::vector<Rational>{4, 4}));
}

TEST(Cli, CountSeriesFitPipeline) {
  auto c = parse_json(run("count --variety p1 --tmax 1.5").out);
  EXPECT_EQ(c["N"], 4);
  auto a = run("count --variety pgl2 --tmax 1.5 --engine A");
  EXPECT_EQ(parse_json(a.out)["N"], 24);

  auto csv = temp_file("maninlab_series.csv");
  ASSERT_EQ(run("series --variety pgl2 --tmax 60 --norm max --csv --out " + csv.string()).status, 0);
  std::ifstream in(csv);
  auto series = series_from_csv(in);
  EXPECT_EQ(series, count_series(builtin_variety("pgl2"), 60, {Norm::max}));
  auto fit = fit_from_json(parse_json(run("fit --input " + csv.string()).out));
  EXPECT_EQ(fit, fit_exponents(series));
  std::filesystem::remove(csv);

  auto json = run("series --variety p2 --tmax 30 --norm euclid");
  EXPECT_EQ(series_from_json(parse_json(json.out)), count_series(projective_space(2), 30, {Norm::euclid}));
}

TEST(Cli, SeriesPipedIntoFitPgl2) {
  auto r = run("series --variety pgl2 --tmax 500 --norm max --threads 2 | " + std::string(MANINLAB_CLI_PATH) + " fit");
  ASSERT_EQ(r.status, 0) << r.out;
  auto f = fit_from_json(parse_json(r.out));
  EXPECT_GE(f.a_hat, 3.8);
  EXPECT_LE(f.a_hat, 4.2);
}

TEST(Cli, LocalDensityJson) {
  auto r = run("local-density --variety sl2 --prime 2");
  EXPECT_EQ(parse_json(r.out), parse_json(R"({"p": 2, "count": 6, "dim": 3, "density": "3/4"})"));
  auto b = run("local-density --variety sl2 --prime 101 --budget 1000");
  EXPECT_NE(b.status, 0);
  auto err = parse_json(b.out)["error"];
  EXPECT_EQ(err["kind"], "budget_exceeded");
  EXPECT_NE(err["message"].get<std::string>().find("104060401"), std::string::npos);
}

TEST(Cli, ErrorsAreJsonObjects) {
  for (const char* args : {"orbit-check --pair nope", "kac --type C --rank 4 --vertex 4 --twist inner", "count --variety p1",
                           "count --variety p1 --tmax 2 --norm taxicab", "fit --input /nonexistent/file", "frobnicate"}) {
    auto r = run(args);
    EXPECT_NE(r.status, 0) << args;
    auto j = parse_json(r.out);
    EXPECT_TRUE(j.contains("error")) << args;
    EXPECT_TRUE(j["error"].contains("kind")) << args;
    EXPECT_TRUE(j["error"].contains("message")) << args;
  }
}
