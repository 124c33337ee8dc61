#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "kz/mzv.hpp"

namespace {

using nlohmann::json;

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "kzcli");
  std::vector<const char*> argv;
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = kz::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

json golden(const std::string& name) {
  std::ifstream f(std::string(GOLDEN_DIR) + "/" + name);
  EXPECT_TRUE(f.good()) << name;
  return json::parse(f);
}

// Same keys and value kinds everywhere; numbers agree to 1e-12 (absolute or
// relative) except timings, which only need to be numbers.
void expect_matches(const json& got, const json& want, const std::string& path = "") {
  if (path.ends_with("/ms")) {
    EXPECT_TRUE(got.is_number()) << path;
    return;
  }
  if (want.is_number()) {
    ASSERT_TRUE(got.is_number()) << path;
    double a = got.get<double>(), b = want.get<double>();
    EXPECT_LE(std::abs(a - b), 1e-12 * std::max(1.0, std::abs(b))) << path;
    return;
  }
  ASSERT_EQ(got.type(), want.type()) << path;
  if (want.is_object()) {
    ASSERT_EQ(got.size(), want.size()) << path;
    for (auto& [k, v] : want.items()) {
      ASSERT_TRUE(got.contains(k)) << path << "/" << k;
      expect_matches(got[k], v, path + "/" + k);
    }
  } else if (want.is_array()) {
    ASSERT_EQ(got.size(), want.size()) << path;
    for (std::size_t i = 0; i < want.size(); ++i) expect_matches(got[i], want[i], path + "/" + std::to_string(i));
  } else {
    EXPECT_EQ(got, want) << path;
  }
}

}  // namespace

TEST(Cli, FiveTermPasses) {
  auto r = run({"check", "five-term", "--z1", "0.5", "--z2", "0.5"});
  EXPECT_EQ(r.code, kz::cli::kPass);
  EXPECT_TRUE(r.out.starts_with("PASS five-term")) << r.out;
}

TEST(Cli, MplAtOneIsZeta) {
  auto r = run({"eval", "mpl", "2", "--z", "1.0"});
  ASSERT_EQ(r.code, kz::cli::kPass);
  EXPECT_NEAR(std::stod(r.out), kz::zeta(kz::MplIndex{{2}}), 1e-11);
}

TEST(Cli, TrivialPentagon) {
  EXPECT_EQ(run({"check", "pentagon", "--degree", "0"}).code, kz::cli::kPass);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, kz::cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kz::cli::kUsage);
  EXPECT_EQ(run({"eval", "mpl", "2"}).code, kz::cli::kUsage);
  EXPECT_EQ(run({"eval", "mpl", "1", "--z", "1"}).code, kz::cli::kUsage);
  EXPECT_EQ(run({"check", "landen", "--z1", "0.9", "--z2", "0.1"}).code, kz::cli::kUsage);
  EXPECT_EQ(run({"eval", "hyperlog", "1@1;2", "--z", "0.3"}).code, kz::cli::kUsage);
  EXPECT_EQ(run({"--tol", "1e-300", "check", "gif", "--z", "0.3", "--weight", "3"}).code, kz::cli::kCheckFailed);
  auto slow = run({"eval", "hyperlog", "1@1", "--z", "0.9999999"});
  EXPECT_EQ(slow.code, kz::cli::kEvalError);
  EXPECT_FALSE(slow.err.empty());
  EXPECT_EQ(run({"--help"}).code, kz::cli::kPass);
}

TEST(Cli, JsonToStdoutIsPure) {
  auto r = run({"--json", "-", "check", "five-term", "--z1", "0.5", "--z2", "0.5"});
  ASSERT_EQ(r.code, kz::cli::kPass);
  json j = json::parse(r.out);
  expect_matches(j, golden("five_term.json"));
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, GoldenReports) {
  auto p = run({"--json", "-", "check", "pentagon", "--degree", "3"});
  ASSERT_EQ(p.code, kz::cli::kPass);
  // Pentagon residuals are rounding noise; compare only the stable fields.
  json got = json::parse(p.out), want = golden("pentagon.json");
  EXPECT_EQ(got["identity"], want["identity"]);
  EXPECT_EQ(got["params"], want["params"]);
  EXPECT_EQ(got["pass"], want["pass"]);
  EXPECT_EQ(got["residuals"].size(), want["residuals"].size());

  auto g = run({"--json", "-", "check", "landen", "--grid", "2"});
  ASSERT_EQ(g.code, kz::cli::kPass);
  json grid = json::parse(g.out);
  EXPECT_EQ(grid["reports"].size(), 4u);
  for (auto& rep : grid["reports"]) EXPECT_LT(rep["max_residual"].get<double>(), 1e-10);
  EXPECT_EQ(grid["pass"], true);

  auto e = run({"--json", "-", "eval", "mpl2", "1,1", "--split", "1", "--z1", "0.3", "--z2", "0.4"});
  ASSERT_EQ(e.code, kz::cli::kPass);
  expect_matches(json::parse(e.out), golden("mpl2.json"));

  auto b = run({"--json", "-", "m05", "bar-basis", "--weight", "2", "--restricted"});
  ASSERT_EQ(b.code, kz::cli::kPass);
  expect_matches(json::parse(b.out), golden("bar_basis_2r.json"));
}

TEST(Cli, DeterministicUnderSeed) {
  auto a = run({"--seed", "42", "m05", "bar-basis", "--weight", "2"});
  auto b = run({"--seed", "42", "m05", "bar-basis", "--weight", "2"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_TRUE(a.out.starts_with("dim = 19"));
}

TEST(Cli, AssociatorFile) {
  auto path = std::filesystem::temp_directory_path() / "kz_phi_test.json";
  auto r = run({"mzv", "associator", "--degree", "3", "--out", path.string()});
  ASSERT_EQ(r.code, kz::cli::kPass);
  std::ifstream f(path);
  json j = json::parse(f);
  EXPECT_EQ(j["cap"], 3);
  EXPECT_NEAR(j["terms"]["X0.X1"].get<double>(), kz::zeta(kz::MplIndex{{2}}), 1e-14);
  std::filesystem::remove(path);
}

TEST(Cli, OtherSubcommands) {
  auto nf = run({"m05", "normal-form", "X22.X11"});
  EXPECT_EQ(nf.code, kz::cli::kPass);
  EXPECT_NE(nf.out.find("X11|X22"), std::string::npos) << nf.out;
  EXPECT_EQ(run({"transport", "--eq", "se1", "--a", "1,0.4", "--z", "0.5", "--degree", "2"}).code, kz::cli::kPass);
  EXPECT_EQ(run({"transport", "--eq", "kze9"}).code, kz::cli::kUsage);
  EXPECT_EQ(run({"mzv", "eval", "2,1", "--route", "direct"}).code, kz::cli::kPass);
  EXPECT_EQ(run({"eval", "li", "10", "--z", "0.3"}).code, kz::cli::kPass);
}
