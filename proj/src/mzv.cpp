#include "kz/mzv.hpp"

#include <chrono>
#include <cmath>
#include <mutex>
#include <stdexcept>

namespace kz {

namespace {

bool in_s10(const Word& w) { return w.empty() || (w.front() == 0 && w.back() == 1); }

}  // namespace

ZetaValue zeta_holder(const Word& w, double tol) {
  if (!in_s10(w)) throw std::domain_error("zeta: word must begin with xi0 and end with xi1");
  if (w.empty()) return {1.0, 0.0};
  auto bin = Alphabet::binary();
  EvalConfig cfg;
  cfg.tolerance = std::min(tol, 1e-17);
  cfg.strategy = Strategy::Direct;
  double sum = 0, scale = 0;
  for (std::size_t cut = 0; cut <= w.size(); ++cut) {
    Word u(w.begin(), w.begin() + cut), v(w.begin() + cut, w.end());
    double a = u.empty() ? 1.0 : li_map(ShufflePoly(bin, tau(u)), 0.5, cfg);
    double b = v.empty() ? 1.0 : li_map(ShufflePoly(bin, v), 0.5, cfg);
    sum += a * b;
    scale += std::abs(a * b);
  }
  // Truncation is below cfg.tolerance per factor; rounding dominates.
  double err = (w.size() + 1) * (cfg.tolerance * 4 + 4e-16 * scale);
  return {sum, err};
}

double zeta(const Word& w, double tol) {
  ZetaValue z = zeta_holder(w, tol);
  return z.value;
}

double zeta(const MplIndex& idx, double tol) {
  if (!idx.admissible()) throw std::domain_error("zeta: index not admissible");
  return zeta(idx.word(), tol);
}

namespace {

using LD = long double;

constexpr int kOrder = 30;     // expansion order in 1/N
constexpr long kCutoff = 200;  // N

const std::vector<LD>& bernoulli_even() {
  // B_{2p} from the exact recurrence.
  static const std::vector<LD> b = [] {
    int m = kOrder + 4;
    std::vector<Rational> B(m + 1);
    B[0] = 1;
    for (int n = 1; n <= m; ++n) {
      Rational s = 0;
      mpz_class binom = 1;  // C(n+1, j)
      for (int j = 0; j < n; ++j) {
        s += Rational(binom) * B[j];
        binom = binom * (n + 1 - j) / (j + 1);
      }
      B[n] = -s / (n + 1);
    }
    std::vector<LD> out;
    for (int p = 0; 2 * p <= m; ++p)
      out.push_back(static_cast<LD>(B[2 * p].get_num().get_d()) / static_cast<LD>(B[2 * p].get_den().get_d()));
    return out;
  }();
  return b;
}

// Coefficients e[m] with sum_{n > N} n^{-s} ~ sum_m e[m] N^{-m}.
std::vector<LD> power_tail(int s) {
  std::vector<LD> e(kOrder + 1, 0);
  if (s < 2) throw std::domain_error("divergent tail");
  if (s - 1 <= kOrder) e[s - 1] += LD(1) / (s - 1);
  if (s <= kOrder) e[s] -= LD(0.5);
  const auto& B = bernoulli_even();
  LD fact = 1;     // (2p)!
  LD rising = s;   // (s)_{2p-1}
  for (int p = 1; s + 2 * p - 1 <= kOrder; ++p) {
    fact *= (2 * p - 1) * (2 * p);
    if (p > 1) rising *= LD(s + 2 * p - 3) * (s + 2 * p - 2);
    e[s + 2 * p - 1] += B[p] / fact * rising;
  }
  return e;
}

LD eval_poly(const std::vector<LD>& c, LD x) {
  LD v = 0;
  for (std::size_t m = c.size(); m-- > 0;) v = v * x + c[m];
  return v;
}

}  // namespace

ZetaValue zeta_direct(const MplIndex& idx) {
  if (!idx.admissible()) throw std::domain_error("zeta: index not admissible");
  const auto& k = idx.k;
  const int r = idx.depth();
  if (r == 0) return {1.0, 0.0};
  const long N = kCutoff;
  const LD x = LD(1) / N;

  // P[i] = sum over N >= n_i > ... > n_{r-1} >= 1, advanced in n.
  std::vector<LD> P(r + 1, 0);
  P[r] = 1;
  for (long n = 1; n <= N; ++n)
    for (int i = 0; i < r; ++i) P[i] += std::pow(static_cast<LD>(n), -k[i]) * P[i + 1];

  // T^{(j)}: iterated tails over n_0 > ... > n_{j-1} > N as series in 1/N.
  LD total = P[0];
  LD err = 0;
  std::vector<LD> T(kOrder + 1, 0);
  T[0] = 1;
  for (int j = 1; j <= r; ++j) {
    std::vector<LD> next(kOrder + 1, 0);
    for (int m = 0; m <= kOrder; ++m) {
      if (T[m] == 0) continue;
      if (m + k[j - 1] < 2) throw std::domain_error("divergent tail");
      auto e = power_tail(m + k[j - 1]);
      for (int q = 0; q <= kOrder; ++q) next[q] += T[m] * e[q];
    }
    T = std::move(next);
    LD tj = eval_poly(T, x);
    total += tj * P[j];
    // Size of the highest retained order as a truncation proxy.
    err += std::abs(T[kOrder] * std::pow(x, kOrder)) * (std::abs(P[j]) + 1);
  }
  err += 1e-18L * (1 + std::abs(total));
  return {static_cast<double>(total), static_cast<double>(err)};
}

ZetaValue ZetaTable::get(const Word& w) {
  {
    std::shared_lock lock(mu_);
    if (auto it = cache_.find(w); it != cache_.end()) return it->second;
  }
  ZetaValue v = zeta_holder(w, tol_);
  std::unique_lock lock(mu_);
  return cache_.emplace(w, v).first->second;
}

std::size_t ZetaTable::size() const {
  std::shared_lock lock(mu_);
  return cache_.size();
}

ZetaTable& default_zeta_table() {
  static ZetaTable table;
  return table;
}

double zeta_reg(const ShufflePoly& p, double tol) {
  ShufflePoly r = reg10(p);
  double s = 0;
  for (auto& [w, c] : r.terms()) {
    double z = tol >= 1e-15 ? default_zeta_table().get(w).value : zeta(w, tol);
    s += c.get_d() * z;
  }
  return s;
}

TruncatedSeries<double> associator(int N, double tol) {
  if (N < 0) throw std::invalid_argument("associator: negative degree");
  auto bin = Alphabet::binary();
  TruncatedSeries<double> phi(GeneratorSet::x01(), N);
  phi.degree(0)[0] = 1;
  for (int d = 2; d <= N; ++d)
    for (std::size_t i = 0; i < phi.degree(d).size(); ++i)
      phi.degree(d)[i] = zeta_reg(ShufflePoly(bin, phi.word(d, i)), tol);
  return phi;
}

CheckReport check_duality(int N, double tol) {
  auto t0 = std::chrono::steady_clock::now();
  CheckReport rep;
  rep.identity = "duality";
  rep.params = {{"degree", N}};
  auto gens = GeneratorSet::x01();
  auto phi = associator(N);
  auto m0 = TruncatedSeries<double>::generator(gens, N, 1, -1.0);
  auto m1 = TruncatedSeries<double>::generator(gens, N, 0, -1.0);
  auto dual = substitute(phi, {m0, m1});
  auto prod = phi * dual;
  rep.residuals = residual_by_degree(prod, TruncatedSeries<double>::one(gens, N));
  auto bin = Alphabet::binary();
  for (int d = 0; d <= N; ++d)
    for (auto& w : all_words(2, d)) {
      double a = zeta_reg(ShufflePoly(bin, w)), b = zeta_reg(ShufflePoly(bin, tau(w)));
      rep.residuals[d] = std::max(rep.residuals[d], std::abs(a - b));
    }
  rep.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  rep.finish(tol);
  return rep;
}

}  // namespace kz
