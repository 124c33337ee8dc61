#include <gtest/gtest.h>

#include <cmath>

#include "kz/connect.hpp"
#include "kz/mzv.hpp"
#include "kz/polylog.hpp"
#include "oracles.hpp"

using namespace kz;

namespace {

using DS = TruncatedSeries<double>;

long double li2_2v(long double z1, long double z2) { return oracle::nested_sum({2}, {z2}, z1, 400); }
long double li11_2v(long double z1, long double z2) { return oracle::nested_sum({1, 1}, {1.0L, z2}, z1, 400); }

PbwMonomial left(Word w) { return PbwMonomial{std::move(w), {}}; }
PbwMonomial right(Word w) { return PbwMonomial{{}, std::move(w)}; }

}  // namespace

TEST(FundamentalSolution, DegreeOne) {
  DS L = build_L1(0.3, 4);
  EXPECT_EQ(L.coefficient({}), 1.0);
  EXPECT_NEAR(L.coefficient({0}), std::log(0.3), 1e-15);
  EXPECT_NEAR(L.coefficient({1}), -std::log(0.7), 1e-15);
  EXPECT_TRUE(is_grouplike(L, 1e-9));

  DS L1 = build_L1_at1(0.3, 4);
  EXPECT_EQ(L1.coefficient({}), 1.0);
  EXPECT_NEAR(L1.coefficient({1}), -std::log(0.7), 1e-15);
  EXPECT_TRUE(is_grouplike(L1, 1e-9));
  EXPECT_TRUE(is_grouplike(build_L1_hat(0.3, 4), 1e-9));
}

TEST(FundamentalSolution, NormalizedAtOneNearOne) {
  double z = 1 - 1e-4;
  DS L1 = build_L1_at1(z, 3);
  DS x1 = DS::generator(L1.generators(), 3, 1, std::log(1 - z));
  DS prod = L1 * exp_deg1(x1, 3);
  double worst = 0;
  for (double r : residual_by_degree(prod, DS::one(L1.generators(), 3))) worst = std::max(worst, r);
  EXPECT_LT(worst, 1e-3);
}

TEST(Connection, PassesAtSeveralPoints) {
  for (double z : {0.3, 0.5, 0.7}) {
    auto r = check_connection1(z, 4, 1e-9);
    EXPECT_TRUE(r.pass) << z;
    EXPECT_EQ(r.residuals.size(), 5u);
  }
  EXPECT_TRUE(check_connection1(0.5, 0).pass);
  EXPECT_TRUE(check_connection_constancy({0.2, 0.4, 0.6}, 4).pass);
}

TEST(Gif, WeightTwoByHand) {
  const long double z = 0.3L;
  long double s = oracle::li({2}, z) + oracle::li({1}, 1 - z) * oracle::li({1}, z) + oracle::li({2}, 1 - z);
  EXPECT_NEAR(static_cast<double>(s), oracle::zeta2, 1e-13);
  auto r = check_gif(0.3, 4);
  EXPECT_TRUE(r.pass);
  EXPECT_LT(r.max_residual, 1e-10);
}

TEST(TwoVariable, LowDegreeCoefficients) {
  auto L = build_L2(0.3, 0.4, 3);
  EXPECT_NEAR(L.coefficient({}), 1.0, 0);
  EXPECT_NEAR(L.coefficient(left({kX11})), -std::log(0.7), 1e-15);
  EXPECT_NEAR(L.coefficient(right({kX22})), -std::log(0.6), 1e-15);
  EXPECT_NEAR(L.coefficient(left({kX12})), -std::log(1 - 0.12), 1e-15);
  EXPECT_NEAR(L.coefficient(left({kX1})), 0.0, 1e-15);
  EXPECT_NEAR(L.coefficient(right({kX2})), 0.0, 1e-15);
}

TEST(TwoVariable, RoutesAgree) {
  auto a = build_L2(0.3, 0.4, 4, L2Route::OneTwo);
  auto b = build_L2(0.3, 0.4, 4, L2Route::TwoOne);
  double worst = 0;
  for (double r : (a - b).max_abs_by_degree()) worst = std::max(worst, r);
  EXPECT_LT(worst, 1e-10);
}

TEST(Decomposition, Passes) {
  auto r = check_decomposition(0.3, 0.4, 3);
  EXPECT_TRUE(r.pass);
  EXPECT_TRUE(r.named.count("itls1_vs_itls2"));
  EXPECT_TRUE(check_decomposition(0.3, 0.4, 1).pass);
  auto d = check_decomposition(0.4, 0.0, 3);
  EXPECT_TRUE(d.pass);
  EXPECT_TRUE(d.named.count("degenerate_z2"));
}

TEST(Ghpr, Hpr11AgainstNaiveSums) {
  const long double z1 = 0.3L, z2 = 0.4L;
  long double lhs = oracle::li({1}, z1) * oracle::li({1}, z2);
  long double rhs = li11_2v(z1, z2) + li2_2v(z2, z1) + li11_2v(z2, z1);
  EXPECT_NEAR(static_cast<double>(lhs - rhs), 0.0, 1e-15);
  auto r = check_hpr11(0.3, 0.4);
  EXPECT_TRUE(r.pass);
  EXPECT_LT(r.max_residual, 1e-10);
}

TEST(Ghpr, UnitAndBasis) {
  EXPECT_TRUE(check_ghpr(ShufflePoly::one(Alphabet::five()), 0.3, 0.4).pass);
  for (auto& b : cic_kernel(2, true)) EXPECT_TRUE(check_ghpr(b.poly, 0.3, 0.4).pass) << b.poly.str();
}

TEST(Landen, PullbackAndDomain) {
  auto [a, b] = tau_pullback(0.5, 0.5);
  EXPECT_NEAR(a, -0.5, 1e-15);
  EXPECT_NEAR(b, -0.5, 1e-15);
  EXPECT_TRUE(in_landen_domain(0.3, 0.4));
  EXPECT_FALSE(in_landen_domain(0.9, 0.1));
  EXPECT_THROW(check_landen_2d(0.9, 0.1), std::domain_error);
}

TEST(Landen, TwoVariableIdentities) {
  for (auto [z1, z2] : {std::pair{0.5, 0.5}, {0.3, 0.3}, {0.3, 0.45}}) {
    auto r = check_landen_2d(z1, z2);
    EXPECT_TRUE(r.pass) << z1 << " " << z2;
    EXPECT_LT(r.named.at("L1"), 1e-10);
    EXPECT_LT(r.named.at("L2"), 1e-10);
  }
}

TEST(Landen, ClassicalEdge) {
  const long double z = 0.3L;
  long double l = std::log(1 - z);
  long double lhs = oracle::li2(-z / (1 - z));
  EXPECT_NEAR(static_cast<double>(lhs + oracle::li2(z) + l * l / 2), 0.0, 1e-15);
  auto r = check_landen_classical(0.3);
  EXPECT_TRUE(r.pass);
  EXPECT_LT(r.max_residual, 1e-12);
}

TEST(FiveTerm, AgainstNaiveSums) {
  for (auto [z1, z2] : {std::pair{0.5L, 0.5L}, {0.3L, 0.4L}}) {
    long double rhs = oracle::li2(-z1 * (1 - z2) / (1 - z1)) + oracle::li2(-z2 * (1 - z1) / (1 - z2)) +
                      oracle::li2(z1) + oracle::li2(z2);
    long double l = std::log((1 - z1) / (1 - z2));
    EXPECT_NEAR(static_cast<double>(oracle::li2(z1 * z2) - rhs - l * l / 2), 0.0, 1e-15);
    auto r = check_five_term(static_cast<double>(z1), static_cast<double>(z2));
    EXPECT_TRUE(r.pass);
    EXPECT_LT(r.max_residual, 1e-12);
  }
  EXPECT_TRUE(check_five_term(0.4, 0.0).pass);
}

TEST(TransportCheck, Passes) {
  auto r = check_transport(0.5, 3);
  EXPECT_TRUE(r.pass);
  EXPECT_LT(r.named.at("flow_composition"), 1e-10);
}

TEST(Report, SchemaAndNan) {
  CheckReport r;
  r.identity = "x";
  r.residuals = {0.0, 1e-3};
  r.finish(1e-2);
  EXPECT_TRUE(r.pass);
  auto j = r.to_json();
  for (auto k : {"identity", "params", "residuals", "max_residual", "pass", "ms"}) EXPECT_TRUE(j.contains(k)) << k;
  EXPECT_EQ(j["params"]["tolerance"], 1e-2);
  r.named["nan"] = std::nan("");
  r.finish(1e-2);
  EXPECT_FALSE(r.pass);
}
