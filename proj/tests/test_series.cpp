#include <gtest/gtest.h>

#include <random>

#include "kz/mzv.hpp"
#include "kz/series.hpp"

using namespace kz;

namespace {

using QS = TruncatedSeries<Rational>;
const GeneratorSet G = GeneratorSet::x01();

QS gen(std::size_t g, int cap = 5, Rational c = 1) { return QS::generator(G, cap, g, c); }

QS random_series(std::mt19937_64& rng, int cap) {
  std::uniform_int_distribution<int> coef(-3, 3);
  QS s(G, cap);
  for (int d = 0; d <= cap; ++d)
    for (auto& x : s.degree(d)) x = coef(rng);
  return s;
}

}  // namespace

TEST(Series, MultiplyExamples) {
  QS one = QS::one(G, 4);
  QS a = one + gen(0, 4), b = one - gen(0, 4);
  EXPECT_EQ(a * b, one - gen(0, 4) * gen(0, 4));
  EXPECT_EQ(a * one, a);
  QS w = gen(0) * gen(1) * gen(1);
  EXPECT_EQ(w.coefficient(G.parse("X0.X1.X1")), 1);
}

TEST(Series, GeneratorMismatchThrows) {
  QS a = QS::one(G, 2);
  QS b = QS::one(GeneratorSet::indexed(2), 2);
  EXPECT_THROW(a * b, std::invalid_argument);
}

TEST(Series, CapIsMinimum) {
  EXPECT_EQ((QS::one(G, 3) * QS::one(G, 5)).cap(), 3);
}

TEST(Series, RingAxioms) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 5; ++t) {
    QS a = random_series(rng, 5), b = random_series(rng, 5), c = random_series(rng, 5);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a + b) * c, a * c + b * c);
  }
}

TEST(Series, Invert) {
  const int N = 6;
  QS geo(G, N);
  for (int k = 0; k <= N; ++k) geo.set(Word(k, 0), k % 2 ? -1 : 1);
  EXPECT_EQ(invert(QS::one(G, N) + gen(0, N)), geo);
  EXPECT_EQ(invert(QS::one(G, N)), QS::one(G, N));
  EXPECT_EQ(invert(exp_deg1(gen(0, N), N)), exp_deg1(gen(0, N, -1), N));
  EXPECT_THROW(invert(gen(0, N)), std::domain_error);

  std::mt19937_64 rng(2);
  for (int t = 0; t < 5; ++t) {
    QS a = random_series(rng, 5);
    a.degree(0)[0] = t + 1;
    EXPECT_EQ(a * invert(a), QS::one(G, 5));
    EXPECT_EQ(invert(a) * a, QS::one(G, 5));
  }
}

TEST(Series, ExpDeg1) {
  EXPECT_EQ(exp_deg1(QS(G, 3), 3), QS::one(G, 3));
  Rational t(3, 7);
  EXPECT_EQ(exp_deg1(gen(0, 4, t), 4).coefficient(G.parse("X0.X0")), t * t / 2);
  QS e = exp_deg1(gen(0, 2) + gen(1, 2), 2);
  for (auto w : {"X0.X0", "X0.X1", "X1.X0", "X1.X1"}) EXPECT_EQ(e.coefficient(G.parse(w)), Rational(1, 2));
  EXPECT_THROW(exp_deg1(QS::one(G, 2), 2), std::invalid_argument);
}

TEST(Series, Substitute) {
  std::vector<QS> f{-1 * gen(1), -1 * gen(0)};
  EXPECT_EQ(substitute(gen(0) * gen(1), f), gen(1) * gen(0));
  EXPECT_EQ(substitute(QS::one(G, 5), f), QS::one(G, 5));
  EXPECT_THROW(substitute(gen(0), std::vector<QS>{QS::one(G, 5), gen(0)}), std::invalid_argument);

  std::mt19937_64 rng(5);
  std::vector<QS> img{gen(0, 5, 2) - gen(1), gen(0, 5, Rational(1, 3))};
  for (int t = 0; t < 3; ++t) {
    QS a = random_series(rng, 5), b = random_series(rng, 5);
    EXPECT_EQ(substitute(a * b, img), substitute(a, img) * substitute(b, img));
  }
}

TEST(Series, AntipodeAndGrouplike) {
  EXPECT_EQ(antipode(QS::one(G, 3)), QS::one(G, 3));
  EXPECT_EQ(antipode(gen(0, 3) * gen(1, 3)), gen(1, 3) * gen(0, 3));
  QS g = exp_deg1(gen(0, 5), 5);
  EXPECT_EQ(antipode(g) * g, QS::one(G, 5));

  EXPECT_TRUE(is_grouplike(g));
  EXPECT_TRUE(is_grouplike(exp_deg1(gen(0, 5, 2) + gen(1, 5, Rational(-1, 3)), 5)));
  EXPECT_FALSE(is_grouplike(QS::one(G, 3) + gen(0, 3) * gen(1, 3)));
  EXPECT_TRUE(is_grouplike(associator(4), 1e-10));
}

TEST(Series, JsonRoundTrip) {
  QS a = QS::one(G, 3) + gen(0, 3, Rational(-2, 5)) * gen(1, 3);
  auto j = to_json(a);
  EXPECT_EQ(j["cap"], 3);
  EXPECT_EQ(j["terms"]["X0.X1"], "-2/5");
  EXPECT_EQ(series_from_json<Rational>(G, j), a);
}
