// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "kz/bar.hpp"
#include "kz/connect.hpp"
#include "kz/m05.hpp"
#include "kz/mzv.hpp"
#include "kz/shuffle.hpp"
#include "oracles.hpp"

using namespace kz;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
  // Records the worst value of a named quantity against its bound.
  void bound(const std::string& what, double value, double tol) {
    detail << " " << what << "=" << value;
    require(value <= tol, what);
  }
};

double worst(const CheckReport& r) { return std::isnan(r.max_residual) ? INFINITY : r.max_residual; }

const AlphabetPtr bin = Alphabet::binary();

Outcome regularization() {
  Outcome o;
  bool round_trip = true;
  int words = 0;
  for (int n = 0; n <= 6; ++n)
    for (auto& w : oracle::words(2, n)) {
      ++words;
      ShufflePoly u(bin, w);
      oracle::Poly right, left;
      auto rc = decompose_right(u);
      for (std::size_t j = 0; j < rc.size(); ++j)
        right = oracle::add(right, oracle::shuffle(oracle::from(rc[j]), oracle::power(0, static_cast<int>(j))));
      auto lc = decompose_left(u);
      for (std::size_t i = 0; i < lc.size(); ++i)
        left = oracle::add(left, oracle::shuffle(oracle::power(1, static_cast<int>(i)), oracle::from(lc[i])));
      oracle::Poly target{{w, 1}};
      round_trip = round_trip && right == target && left == target;
    }
  o.detail << " words=" << words;
  o.require(round_trip, "decomposition round trip");

  std::mt19937_64 rng(kDefaultSeed);
  bool hom = true;
  for (int t = 0; t < 200; ++t) {
    auto p = oracle::to_poly(bin, oracle::random_poly(rng, 2, 5, 2));
    auto q = oracle::to_poly(bin, oracle::random_poly(rng, 2, 5, 2));
    auto pq = shuffle_product(p, q);
    hom = hom && reg0(pq) == shuffle_product(reg0(p), reg0(q));
    hom = hom && reg10(pq) == shuffle_product(reg10(p), reg10(q));
  }
  o.detail << " pairs=200";
  o.require(hom, "reg homomorphism");
  return o;
}

Outcome mzv_engine() {
  Outcome o;
  o.bound("|zeta(2)-pi^2/6|", std::abs(zeta(MplIndex{{2}}) - oracle::zeta2), 1e-11);
  o.bound("|zeta(4)-pi^4/90|", std::abs(zeta(MplIndex{{4}}) - oracle::zeta4), 1e-11);
  double a = zeta_direct(MplIndex{{3}}).value, b = zeta_holder(word_from_composition({2, 1})).value;
  double c = zeta_holder(word_from_composition({3})).value, d = zeta_direct(MplIndex{{2, 1}}).value;
  o.bound("|zeta(3)-zeta(2,1)|", std::max(std::abs(a - b), std::abs(c - d)), 1e-12);
  double diff = 0;
  int count = 0;
  for (int n = 2; n <= 5; ++n)
    for (auto& w : oracle::words(2, n)) {
      if (w.front() != 0 || w.back() != 1) continue;
      ++count;
      diff = std::max(diff, std::abs(zeta_holder(w).value - zeta_direct(MplIndex{composition_of(w)}).value));
    }
  o.detail << " admissible=" << count;
  o.bound("holder_vs_direct", diff, 1e-11);
  return o;
}

Outcome duality() {
  Outcome o;
  auto r = check_duality(6, 1e-10);
  o.bound("residual", worst(r), 1e-10);
  return o;
}

Outcome gif() {
  Outcome o;
  for (double z : {0.3, 0.7}) {
    auto r = check_gif(z, 5, 1e-10);
    o.bound("z=" + std::to_string(z).substr(0, 3), worst(r), 1e-10);
  }
  return o;
}

Outcome connection() {
  Outcome o;
  double m = 0;
  for (double z : {0.2, 0.4, 0.6}) m = std::max(m, worst(check_connection1(z, 4, 1e-9)));
  o.bound("residual", m, 1e-9);
  o.bound("constancy", worst(check_connection_constancy({0.2, 0.4, 0.6}, 4, 5e-10)), 5e-10);
  return o;
}

Outcome quotient_algebra() {
  Outcome o;
  for (int s = 1; s <= 3; ++s) {
    long dim = static_cast<long>(cic_kernel(s, false).size());
    o.detail << " dimB" << s << "=" << dim;
    o.require(dim == dim_degree(s), "dim B_" + std::to_string(s));
  }
  bool confluent = true;
  int words = 0;
  for (int n = 0; n <= 4; ++n)
    for (auto& w : oracle::words(5, n)) {
      ++words;
      auto a = normal_form<Rational>(w, 4);
      confluent = confluent && a == normal_form_by_rewriting(w, RewriteOrder::Leftmost, 4) &&
                  a == normal_form_by_rewriting(w, RewriteOrder::Rightmost, 4);
    }
  o.detail << " words=" << words;
  o.require(confluent, "normal-form confluence");

  auto B = [](Letter g) { return Degree1Element::basis(g); };
  auto br = [](const Degree1Element& x, const Degree1Element& y) {
    return normal_form<Rational>(std::vector<Degree1Element>{x, y}, 2) -
           normal_form<Rational>(std::vector<Degree1Element>{y, x}, 2);
  };
  bool ir2 = br(B(kX1), B(kX2)).terms().empty() && br(B(kX11), B(kX2)).terms().empty() &&
             br(B(kX1), B(kX22)).terms().empty();
  auto c = br(B(kX11), B(kX22));
  ir2 = ir2 && c == br(Rational(-1) * B(kX11), B(kX12)) && c == br(B(kX22), B(kX12)) &&
        c == br(B(kX2) - B(kX1), B(kX12));
  o.require(ir2, "relations preserved");
  return o;
}

Outcome pentagon() {
  Outcome o;
  auto r = pentagon_check(4, 1e-8);
  o.bound("residual", worst(r), 1e-8);
  return o;
}

Outcome decomposition() {
  Outcome o;
  double m = 0, routes = 0;
  for (auto [z1, z2] : {std::pair{0.3, 0.4}, {0.5, 0.2}}) {
    auto r = check_decomposition(z1, z2, 3, 1e-9);
    m = std::max(m, worst(r));
    routes = std::max(routes, r.named.at("itls1_vs_itls2"));
  }
  o.bound("residual", m, 1e-9);
  o.bound("itls_routes", routes, 1e-10);
  return o;
}

Outcome ghpr() {
  Outcome o;
  double m = 0;
  for (auto [z1, z2] : {std::pair{0.3, 0.4}, {0.6, 0.25}}) m = std::max(m, worst(check_hpr11(z1, z2, 1e-10)));
  o.bound("hpr11", m, 1e-10);
  double b = 0;
  auto basis = cic_kernel(2, true);
  for (auto& e : basis) b = std::max(b, worst(check_ghpr(e.poly, 0.3, 0.4, 1e-10)));
  o.detail << " basis=" << basis.size();
  o.bound("B0_2", b, 1e-10);
  return o;
}

Outcome landen() {
  Outcome o;
  double l1 = 0, l2 = 0, five = 0;
  int points = 0;
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j) {
      double z1 = 0.1 + 0.5 * i / 6, z2 = 0.1 + 0.5 * j / 6;
      if (!in_landen_domain(z1, z2)) continue;
      ++points;
      auto r = check_landen_2d(z1, z2, 1e-10);
      l1 = std::max(l1, r.named.at("L1"));
      l2 = std::max(l2, r.named.at("L2"));
      five = std::max(five, worst(check_five_term(z1, z2, 1e-12)));
    }
  o.detail << " points=" << points;
  o.require(points == 25, "grid inside the series domain");
  o.bound("L1", l1, 1e-10);
  o.bound("L2", l2, 1e-10);
  o.bound("5TR", five, 1e-12);
  double classical = 0;
  for (double z : {0.1, 0.2, 0.3, 0.4}) classical = std::max(classical, worst(check_landen_classical(z, 1e-12)));
  o.bound("classical", classical, 1e-12);
  return o;
}

Outcome transport_oracle() {
  Outcome o;
  auto r = check_transport(0.5, 3, 2000, 1e-8);
  double series = 0;
  for (double x : r.residuals) series = std::max(series, x);
  o.bound("vs_series", series, 1e-8);
  o.bound("flow_composition", r.named.at("flow_composition"), 1e-10);
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "regularization", 5, regularization},
      {2, "mzv-engine", 30, mzv_engine},
      {3, "duality", 60, duality},
      {4, "generalized-inversion", 60, gif},
      {5, "connection", 30, connection},
      {6, "quotient-algebra", 60, quotient_algebra},
      {7, "pentagon", 300, pentagon},
      {8, "decomposition", 120, decomposition},
      {9, "ghpr", 60, ghpr},
      {10, "landen-five-term", 30, landen},
      {11, "transport", 30, transport_oracle},
  };
  int failed = 0;
  for (auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s > c.budget_s) {
      o.pass = false;
      o.detail << " [over time budget " << c.budget_s << " s]";
    }
    if (!o.pass) ++failed;
    std::printf("%s %2d %-22s%s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.str().c_str(), s);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
