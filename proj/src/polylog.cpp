#include "kz/polylog.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "kz/mzv.hpp"

namespace kz {

int MplIndex::weight() const {
  int w = 0;
  for (int x : k) w += x;
  return w;
}

std::string MplIndex::str() const {
  std::string s;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(k[i]);
  }
  return s;
}

namespace {

template <class T>
T nested_sum(const std::vector<int>& k, const std::vector<T>& a, T z, const EvalConfig& cfg) {
  const int r = static_cast<int>(k.size());
  if (r == 0) return T(1);
  if (!(cfg.tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
  double amax = 0;
  for (auto& x : a) amax = std::max(amax, std::abs(x));
  const double rho = std::abs(z) * amax;
  if (rho == 0) return T(0);
  if (!(rho < 1)) throw std::domain_error("nested sum outside its disc of convergence");

  // V[i] holds the inner sum over n_{i+1} > ... > n_r for the current n1 = m.
  std::vector<T> V(r + 1, T(0));
  V[r] = a[r - 1];
  T zm = T(1), sum = T(0);
  const double lr = r - 1;
  for (long m = 1;; ++m) {
    zm *= z;
    sum += zm * std::pow(static_cast<double>(m), -k[0]) * V[1];

    double n = static_cast<double>(m + 1);
    double q = rho * std::pow((1 + std::log(n + 1)) / (1 + std::log(n)), lr);
    if (q < 1) {
      double t = std::pow(rho, n) * std::pow(1 + std::log(n), lr) * std::pow(n, -k[0]);
      if (t / (1 - q) <= cfg.tolerance) break;
    }
    if (m >= cfg.max_terms) throw std::runtime_error("tolerance not reached within max terms");

    for (int i = 1; i < r; ++i) V[i] = a[i - 1] * (V[i] + std::pow(static_cast<double>(m), -k[i]) * V[i + 1]);
    V[r] *= a[r - 1];
  }
  return sum;
}

double log_factorial_inv(int j) {
  double f = 1;
  for (int i = 2; i <= j; ++i) f *= i;
  return 1.0 / f;
}

bool is_binary(const ShufflePoly& p) { return *p.alphabet() == *Alphabet::binary(); }

// Real-argument evaluator with a memo of S0 word values, shared by the
// inversion recursion.
class RealEvaluator {
 public:
  explicit RealEvaluator(const EvalConfig& cfg) : cfg_(cfg) {}

  double s0_word(const Word& w, double z) {
    if (w.empty()) return 1.0;
    auto key = std::make_pair(w, z);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    double v = evaluate(w, z);
    memo_.emplace(key, v);
    return v;
  }

  double li(const ShufflePoly& p, double z) {
    if (!is_binary(p)) throw std::invalid_argument("li_map needs the alphabet {xi0, xi1}");
    auto comps = decompose_right(p);
    bool tails = false;
    for (std::size_t j = 1; j < comps.size(); ++j) tails = tails || !comps[j].is_zero();
    if (tails && !(z > 0)) throw std::domain_error("log z undefined at this real argument");
    if (z > 1) throw std::domain_error("argument on the cut [1, inf)");
    double lz = tails ? std::log(z) : 0.0;
    double total = 0, lp = 1;
    for (std::size_t j = 0; j < comps.size(); ++j) {
      if (j > 0) lp *= lz;
      if (comps[j].is_zero()) continue;
      double s = 0;
      for (auto& [w, c] : comps[j].terms()) s += c.get_d() * s0_word(w, z);
      total += s * lp * log_factorial_inv(static_cast<int>(j));
    }
    return total;
  }

 private:
  double evaluate(const Word& w, double z) {
    MplIndex idx{composition_of(w)};
    if (z == 1.0) {
      if (!idx.admissible()) throw std::domain_error("divergent: non-admissible index at z = 1");
      return zeta(w, cfg_.tolerance > 1e-15 ? cfg_.tolerance : 1e-15);
    }
    if (std::abs(z) > 1) throw std::domain_error("|z| > 1");
    if (std::abs(z) == 1) throw std::domain_error("unit-circle evaluation is only supported at z = 1");
    Strategy s = cfg_.strategy;
    if (s == Strategy::Auto) s = (z > kDirectRadius) ? Strategy::Inversion : Strategy::Direct;
    if (s == Strategy::Direct) return nested_sum<double>(idx.k, std::vector<double>(idx.k.size(), 1.0), z, cfg_);
    if (!(z > 0 && z < 1)) throw std::domain_error("inversion route needs 0 < z < 1");
    return inversion(w, z);
  }

  // Li(w; z) = zeta(reg10 w) - sum_{uv = w, u != 1} Li(tau(u); 1 - z) Li(v; z)
  double inversion(const Word& w, double z) {
    auto bin = Alphabet::binary();
    double acc = zeta_reg(ShufflePoly(bin, w), 1e-15);
    EvalConfig direct = cfg_;
    direct.strategy = Strategy::Direct;
    for (std::size_t cut = 1; cut <= w.size(); ++cut) {
      Word u(w.begin(), w.begin() + cut), v(w.begin() + cut, w.end());
      double lu = li_map(ShufflePoly(bin, tau(u)), 1 - z, direct);
      double lv = v.empty() ? 1.0 : li(ShufflePoly(bin, v), z);
      acc -= lu * lv;
    }
    return acc;
  }

  EvalConfig cfg_;
  std::map<std::pair<Word, double>, double> memo_;
};

}  // namespace

double mpl(const MplIndex& idx, double z, const EvalConfig& cfg) {
  RealEvaluator ev(cfg);
  return ev.s0_word(idx.word(), z);
}

Complex mpl(const MplIndex& idx, Complex z, const EvalConfig& cfg) {
  if (z.imag() == 0) return mpl(idx, z.real(), cfg);
  if (idx.k.empty()) return 1.0;
  if (std::abs(z) >= 1) throw std::domain_error("complex evaluation needs |z| < 1");
  return nested_sum<Complex>(idx.k, std::vector<Complex>(idx.k.size(), 1.0), z, cfg);
}

double li_map(const ShufflePoly& p, double z, const EvalConfig& cfg) {
  RealEvaluator ev(cfg);
  return ev.li(p, z);
}

double li_word(const Word& w, double z, const EvalConfig& cfg) {
  return li_map(ShufflePoly(Alphabet::binary(), w), z, cfg);
}

Complex li_map(const ShufflePoly& p, Complex z, const EvalConfig& cfg) {
  if (z.imag() == 0) return li_map(p, z.real(), cfg);
  if (!is_binary(p)) throw std::invalid_argument("li_map needs the alphabet {xi0, xi1}");
  auto comps = decompose_right(p);
  Complex lz = std::log(z), lp = 1.0, total = 0.0;
  for (std::size_t j = 0; j < comps.size(); ++j) {
    if (j > 0) lp *= lz;
    Complex s = 0.0;
    for (auto& [w, c] : comps[j].terms()) s += c.get_d() * mpl(MplIndex{composition_of(w)}, z, cfg);
    total += s * lp * log_factorial_inv(static_cast<int>(j));
  }
  return total;
}

HyperlogSpec HyperlogSpec::parse(std::string_view text, double z) {
  HyperlogSpec s;
  s.z = z;
  std::size_t pos = 0;
  while (pos <= text.size() && !text.empty()) {
    auto next = text.find(',', pos);
    std::string tok(text.substr(pos, next == std::string_view::npos ? next : next - pos));
    auto at = tok.find('@');
    if (at == std::string::npos) throw std::invalid_argument("hyperlog entry '" + tok + "' is not k@a");
    try {
      std::size_t used = 0;
      int k = std::stoi(tok.substr(0, at), &used);
      if (used != at || k < 1) throw std::invalid_argument("");
      std::string as = tok.substr(at + 1);
      double a = std::stod(as, &used);
      if (used != as.size()) throw std::invalid_argument("");
      s.k.push_back(k);
      s.a.push_back(a);
    } catch (const std::exception&) {
      throw std::invalid_argument("hyperlog entry '" + tok + "' is not k@a");
    }
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return s;
}

double hyperlog(const HyperlogSpec& spec, const EvalConfig& cfg) {
  if (spec.k.size() != spec.a.size()) throw std::invalid_argument("hyperlog: k and a differ in length");
  for (int k : spec.k)
    if (k < 1) throw std::invalid_argument("hyperlog: k must be >= 1");
  return nested_sum<double>(spec.k, spec.a, spec.z, cfg);
}

Complex hyperlog(const std::vector<int>& k, const std::vector<Complex>& a, Complex z, const EvalConfig& cfg) {
  if (k.size() != a.size()) throw std::invalid_argument("hyperlog: k and a differ in length");
  return nested_sum<Complex>(k, a, z, cfg);
}

double mpl2(const MplIndex& idx, int split, double z1, double z2, const EvalConfig& cfg) {
  if (split < 0 || split > idx.depth()) throw std::invalid_argument("mpl2: split outside [0, r]");
  if (split == idx.depth()) return mpl(idx, z1, cfg);
  std::vector<double> a(idx.k.size(), 1.0);
  for (int j = split; j < idx.depth(); ++j) a[j] = z2;
  return nested_sum<double>(idx.k, a, z1, cfg);
}

}  // namespace kz
