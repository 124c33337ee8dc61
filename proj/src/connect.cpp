#include "kz/connect.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "kz/mzv.hpp"
#include "kz/polylog.hpp"
#include "kz/quadrature.hpp"
#include "kz/transport.hpp"

namespace kz {

using Series = TruncatedSeries<double>;

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

double max_of(const std::vector<double>& v) {
  double m = 0;
  for (double x : v) m = std::max(m, std::isnan(x) ? x : std::fabs(x));
  return m;
}

// Elementwise max, extending to the longer vector.
void merge_max(std::vector<double>& into, const std::vector<double>& r) {
  if (into.size() < r.size()) into.resize(r.size(), 0.0);
  for (std::size_t i = 0; i < r.size(); ++i) into[i] = std::max(into[i], r[i]);
}

std::vector<double> residual_m05(const M05Series<double>& a, const M05Series<double>& b) {
  return (a - b).max_abs_by_degree();
}

}  // namespace

Series build_L1(double z, int N) {
  if (N < 0) throw std::invalid_argument("build_L1: negative degree");
  Series s(GeneratorSet::x01(), N);
  for (int d = 0; d <= N; ++d)
    for (std::size_t i = 0; i < s.degree(d).size(); ++i) s.degree(d)[i] = li_word(s.word(d, i), z);
  return s;
}

Series build_L1_at1(double z, int N) {
  if (N < 0) throw std::invalid_argument("build_L1_at1: negative degree");
  Series s(GeneratorSet::x01(), N);
  for (int d = 0; d <= N; ++d)
    for (std::size_t i = 0; i < s.degree(d).size(); ++i) {
      Word w = s.word(d, i);
      for (auto& l : w) l = static_cast<Letter>(1 - l);
      s.degree(d)[i] = (d % 2 ? -1.0 : 1.0) * li_word(w, 1 - z);
    }
  return s;
}

Series build_L1_hat(double z, int N) {
  if (!(z > 0)) throw std::domain_error("build_L1_hat: needs z > 0");
  return build_L1(z, N) * exp_deg1(Series::generator(GeneratorSet::x01(), N, 0, -std::log(z)), N);
}

Series se1_hat(double z, const std::vector<double>& a, int N) {
  if (N < 0) throw std::invalid_argument("se1_hat: negative degree");
  if (a.empty()) throw std::invalid_argument("se1_hat: needs at least one parameter");
  GeneratorSet gens = GeneratorSet::indexed(static_cast<int>(a.size()));
  const std::size_t m = gens.size();
  Series total = Series::one(gens, N);
  std::vector<double> x0(m, 0.0);
  x0[0] = 1;
  auto ad0 = [&](const Series& e) { return left_mul_linear(x0, e) - e * Series::generator(gens, N, 0); };

  std::vector<int> k;
  std::vector<std::size_t> idx;
  std::function<void(int)> rec = [&](int left) {
    if (!k.empty()) {
      std::vector<double> av;
      for (auto i : idx) av.push_back(a[i]);
      double v = hyperlog(HyperlogSpec{k, av, z});
      if (v != 0) {
        Series e = Series::one(gens, N);
        for (std::size_t j = k.size(); j-- > 0;) {
          std::vector<double> mu(m, 0.0);
          mu[idx[j] + 1] = 1;
          e = left_mul_linear(mu, e);
          for (int t = 1; t < k[j]; ++t) e = ad0(e);
        }
        total += v * e;
      }
    }
    for (int kj = 1; kj <= left; ++kj)
      for (std::size_t i = 0; i < a.size(); ++i) {
        k.push_back(kj);
        idx.push_back(i);
        rec(left - kj);
        k.pop_back();
        idx.pop_back();
      }
  };
  rec(N);
  return total;
}

CheckReport check_connection1(double z, int N, double tol) {
  auto t0 = Clock::now();
  CheckReport rep;
  rep.identity = "connection";
  rep.params = {{"z", z}, {"degree", N}};
  if (!(z > 0 && z < 1)) throw std::domain_error("check_connection1: needs 0 < z < 1");
  Series lhs = build_L1(z, N);
  Series rhs = build_L1_at1(z, N) * associator(N, 1e-15);
  rep.residuals = residual_by_degree(lhs, rhs);
  rep.ms = elapsed_ms(t0);
  rep.finish(tol);
  return rep;
}

CheckReport check_connection_constancy(const std::vector<double>& zs, int N, double tol) {
  auto t0 = Clock::now();
  CheckReport rep;
  rep.identity = "connection-constancy";
  rep.params = {{"z", zs}, {"degree", N}};
  if (zs.empty()) throw std::invalid_argument("check_connection_constancy: no points");
  std::vector<Series> cs;
  for (double z : zs) {
    if (!(z > 0 && z < 1)) throw std::domain_error("check_connection_constancy: needs 0 < z < 1");
    cs.push_back(invert(build_L1_at1(z, N)) * build_L1(z, N));
  }
  rep.residuals.assign(N + 1, 0.0);
  for (std::size_t i = 1; i < cs.size(); ++i) merge_max(rep.residuals, residual_by_degree(cs[i], cs[0]));
  rep.ms = elapsed_ms(t0);
  rep.finish(tol);
  return rep;
}

CheckReport check_gif(double z, int max_weight, double tol) {
  auto t0 = Clock::now();
  CheckReport rep;
  rep.identity = "gif";
  rep.params = {{"z", z}, {"weight", max_weight}};
  if (!(z > 0 && z < 1)) throw std::domain_error("check_gif: needs 0 < z < 1");
  if (max_weight < 0) throw std::invalid_argument("check_gif: negative weight");
  auto bin = Alphabet::binary();
  double worst = -1;
  std::string worst_word;
  for (int s = 0; s <= max_weight; ++s) {
    double rmax = 0;
    for (auto& w : all_words(2, s)) {
      double lhs = 0;
      for (std::size_t cut = 0; cut <= w.size(); ++cut) {
        Word u(w.begin(), w.begin() + cut), v(w.begin() + cut, w.end());
        lhs += li_word(tau(u), 1 - z) * li_word(v, z);
      }
      double rhs = 0;
      ShufflePoly r10 = reg10(ShufflePoly(bin, w));
      for (auto& [x, c] : r10.terms())
        rhs += c.get_d() * (x.empty() ? 1.0 : zeta_direct(MplIndex{composition_of(x)}).value);
      double r = std::fabs(lhs - rhs);
      rmax = std::max(rmax, r);
      if (r > worst) {
        worst = r;
        worst_word = w.empty() ? "1" : bin->format(w);
      }
    }
    rep.residuals.push_back(rmax);
  }
  rep.params["worst_word"] = worst_word;
  rep.ms = elapsed_ms(t0);
  rep.finish(tol);
  return rep;
}

namespace {

struct RouteLetters {
  // Letters of the main-variable block; the first is the dz/z letter.
  std::array<Letter, 3> left;
  // Letters of the second block: dz/z letter, then dz/(1-z).
  std::array<Letter, 2> right;
};

const RouteLetters& route_letters(L2Route r) {
  static const RouteLetters one_two{{kX1, kX11, kX12}, {kX2, kX22}};
  static const RouteLetters two_one{{kX2, kX22, kX12}, {kX1, kX11}};
  return r == L2Route::OneTwo ? one_two : two_one;
}

// Words of length exactly s over n letters not ending in letter 0 (empty word for s = 0).
std::vector<Word> words_w0(std::size_t n, int s) {
  std::vector<Word> out;
  for (auto& w : all_words(n, s))
    if (w.empty() || w.back() != 0) out.push_back(w);
  return out;
}

// Hyperlogarithm of a word over {dz/z, a_1 dz/(1-a_1 z), ...} with letter l >= 1 -> a[l-1].
// The word must not end in letter 0.
double hyperlog_of(const Word& w, const std::vector<double>& a, double z) {
  if (w.empty()) return 1.0;
  HyperlogSpec spec;
  spec.z = z;
  int zeros = 0;
  for (Letter l : w) {
    if (l == 0) {
      ++zeros;
      continue;
    }
    spec.k.push_back(zeros + 1);
    spec.a.push_back(a.at(l - 1));
    zeros = 0;
  }
  if (zeros) throw std::invalid_argument("hyperlog_of: word ends in the dz/z letter");
  return hyperlog(spec);
}

// Same with shuffle regularization of trailing dz/z letters: log^j(z)/j!.
double hyperlog_reg(const ShufflePoly& p, const std::vector<double>& a, double z) {
  auto comps = decompose_right(p);
  double total = 0, lp = 1, fact = 1;
  for (std::size_t j = 0; j < comps.size(); ++j) {
    if (j > 0) {
      if (!(z > 0)) throw std::domain_error("log z undefined at this argument");
      lp *= std::log(z);
      fact *= static_cast<double>(j);
    }
    double s = 0;
    for (auto& [w, c] : comps[j].terms()) s += c.get_d() * hyperlog_of(w, a, z);
    total += s * lp / fact;
  }
  return total;
}

class AlphaCache {
 public:
  explicit AlphaCache(int cap) : cap_(cap) {}

  // alpha(w)(1) with alpha: X1, X2 -> ad; X11, X22, X12 -> left multiplication.
  const M05Series<Rational>& get(const Word& w) {
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
    M05Series<Rational> v = M05Series<Rational>::one(cap_);
    if (!w.empty()) {
      const auto& inner = get(Word(w.begin() + 1, w.end()));
      Letter x = w.front();
      v = inner.left_multiply(x);
      if (x == kX1 || x == kX2) v -= inner * M05Series<Rational>::linear(Degree1Element::basis(x), cap_);
    }
    return memo_.emplace(w, std::move(v)).first->second;
  }

 private:
  int cap_;
  std::map<Word, M05Series<Rational>> memo_;
};

}  // namespace

M05Series<double> build_L2(double z1, double z2, int N, L2Route route) {
  if (N < 0) throw std::invalid_argument("build_L2: negative degree");
  const RouteLetters& rl = route_letters(route);
  // Main variable and the parameter carried by the xi12~ letter.
  double zm = route == L2Route::OneTwo ? z1 : z2;
  double zo = route == L2Route::OneTwo ? z2 : z1;
  std::vector<double> a{1.0, zo};
  AlphaCache alpha(N);
  M05Series<double> out(N);
  for (int s1 = 0; s1 <= N; ++s1)
    for (auto& wl : words_w0(3, s1)) {
      double v1 = hyperlog_of(wl, a, zm);
      if (v1 == 0) continue;
      for (int s2 = 0; s1 + s2 <= N; ++s2)
        for (auto& wr : words_w0(2, s2)) {
          double v2 = wr.empty() ? 1.0 : mpl(MplIndex{composition_of(wr)}, zo);
          if (v2 == 0) continue;
          Word w;
          for (Letter l : wl) w.push_back(rl.left[l]);
          for (Letter l : wr) w.push_back(rl.right[l]);
          for (auto& [m, c] : alpha.get(w).terms()) out.add(m, v1 * v2 * c.get_d());
        }
    }
  return out;
}

namespace {

// SE1 holomorphic factor in the quotient algebra, from hyperlogarithms or transport.
M05Series<double> se1_factor(double z, double other, Letter x0, Letter xjj, int N, bool by_transport,
                             int steps) {
  Series s(GeneratorSet::indexed(2), N);
  if (!by_transport) {
    s = se1_hat(z, {1.0, other}, N);
  } else {
    TransportSpec spec;
    spec.eq = Equation::SE1;
    spec.a = {1.0, other};
    spec.z = z;
    spec.cap = N;
    spec.steps = steps;
    spec.seed_order = 8;
    Series full = transport(spec);
    s = full * exp_deg1(Series::generator(full.generators(), N, 0, -std::log(z)), N);
  }
  return substitute_m05(s, {Degree1Element::basis(x0), Degree1Element::basis(xjj), Degree1Element::basis(kX12)}, N);
}

M05Series<double> kze1_factor(double z, Letter x0, Letter x1, int N) {
  if (z == 0) return M05Series<double>::one(N);
  return substitute_m05(build_L1_hat(z, N), {Degree1Element::basis(x0), Degree1Element::basis(x1)}, N);
}

}  // namespace

CheckReport check_decomposition(double z1, double z2, int N, double tol, int transport_steps) {
  auto t0 = Clock::now();
  CheckReport rep;
  rep.identity = "decomposition";
  rep.params = {{"z1", z1}, {"z2", z2}, {"degree", N}};
  if (!(z1 >= 0 && z1 < 1 && z2 >= 0 && z2 < 1)) throw std::domain_error("check_decomposition: needs [0,1)^2");
  rep.residuals.assign(N + 1, 0.0);
  auto record = [&](const std::string& name, const std::vector<double>& r) {
    merge_max(rep.residuals, r);
    rep.named[name] = max_of(r);
  };

  M05Series<double> lhat = build_L2(z1, z2, N, L2Route::OneTwo);
  record("itls1_vs_itls2", residual_m05(lhat, build_L2(z1, z2, N, L2Route::TwoOne)));

  // Holomorphic parts.
  M05Series<double> f12 = se1_factor(z1, z2, kX1, kX11, N, false, 0);
  M05Series<double> k12 = kze1_factor(z2, kX2, kX22, N);
  M05Series<double> f21 = se1_factor(z2, z1, kX2, kX22, N, false, 0);
  M05Series<double> k21 = kze1_factor(z1, kX1, kX11, N);
  record("hat_1x2", residual_m05(f12 * k12, lhat));
  record("hat_2x1", residual_m05(f21 * k21, lhat));

  // Transported SE1 factors.
  if (z1 > 0 && z2 > 0) {
    record("se1_transport_1x2", residual_m05(se1_factor(z1, z2, kX1, kX11, N, true, transport_steps), f12));
    record("se1_transport_2x1", residual_m05(se1_factor(z2, z1, kX2, kX22, N, true, transport_steps), f21));
  }

  // Full solutions with the singular factors.
  if (z1 > 0 && z2 > 0) {
    auto p1 = exp_m05<double>(Degree1Element::basis(kX1), std::log(z1), N);
    auto p2 = exp_m05<double>(Degree1Element::basis(kX2), std::log(z2), N);
    M05Series<double> full = lhat * p1 * p2;
    record("full_1x2", residual_m05((f12 * p1) * (k12 * p2), full));
    record("full_2x1", residual_m05((f21 * p2) * (k21 * p1), full));
  } else if (z2 == 0) {
    record("degenerate_z2", residual_m05(lhat, k21));
  } else {
    record("degenerate_z1", residual_m05(lhat, k12));
  }
  rep.ms = elapsed_ms(t0);
  rep.finish(tol);
  return rep;
}

double contour_integral_12(const TensorPoly& t, double z1, double z2) {
  double total = 0;
  for (auto& [ab, c] : t.terms) {
    double l = hyperlog_reg(ShufflePoly(t.left, ab.first), {1.0, z2}, z1);
    double r = li_word(ab.second, z2);
    total += c.get_d() * l * r;
  }
  return total;
}

double contour_integral_21(const TensorPoly& t, double z1, double z2) {
  double total = 0;
  for (auto& [ab, c] : t.terms) {
    double l = hyperlog_reg(ShufflePoly(t.left, ab.first), {1.0, z1}, z2);
    double r = li_word(ab.second, z1);
    total += c.get_d() * l * r;
  }
  return total;
}

double straight_path_integral(const ShufflePoly& phi, double z1, double z2, double quad_tol) {
  if (!(*phi.alphabet() == *Alphabet::five())) throw std::invalid_argument("expected the five-form alphabet");
  QuadConfig cfg;
  cfg.tolerance = quad_tol;
  std::vector<Point> path{{0.0, 0.0}, {z1, z2}};
  double total = 0;
  for (auto& [w, c] : phi.terms()) {
    if (w.empty()) {
      total += c.get_d();
      continue;
    }
    if (w.back() == kX1 || w.back() == kX2) throw std::invalid_argument("straight path: word ends in a dz/z form");
    std::vector<FormFn> forms;
    for (Letter l : w) {
      OneForm f = form_of_letter(l);
      forms.push_back([f](const Point& p, const Point& v) {
        auto [a, b] = evaluate(f, p[0].real(), p[1].real());
        return a * v[0] + b * v[1];
      });
    }
    total += c.get_d() * quad_iterint(forms, path, cfg).real();
  }
  return total;
}

ShufflePoly hpr11_element() {
  auto five = Alphabet::five();
  ShufflePoly p(five);
  p.add({kX11, kX12}, 1);
  p.add({kX22, kX11}, 1);
  p.add({kX22, kX12}, -1);
  p.add({kX2, kX12}, -1);
  return p;
}

CheckReport check_ghpr(const ShufflePoly& phi, double z1, double z2, double tol) {
  auto t0 = Clock::now();
  CheckReport rep;
  rep.identity = "ghpr";
  rep.params = {{"z1", z1}, {"z2", z2}, {"element", phi.str()}};
  if (!(z1 > 0 && z1 < 1 && z2 > 0 && z2 < 1)) throw std::domain_error("check_ghpr: needs (0,1)^2");
  for (auto& [w, c] : phi.terms())
    if (!w.empty() && (w.back() == kX1 || w.back() == kX2))
      throw std::invalid_argument("check_ghpr: element has a word ending in xi1 or xi2");
  double i12 = contour_integral_12(iota_12(phi), z1, z2);
  double i21 = contour_integral_21(iota_21(phi), z1, z2);
  double iq = straight_path_integral(phi, z1, z2);
  rep.params["values"] = {{"contour_1x2", i12}, {"contour_2x1", i21}, {"straight", iq}};
  rep.named["contour_1x2_vs_2x1"] = std::fabs(i12 - i21);
  rep.named["contour_1x2_vs_straight"] = std::fabs(i12 - iq);
  for (auto& [k, v] : rep.named) rep.residuals.push_back(v);
  rep.ms = elapsed_ms(t0);
  rep.finish(tol);
  return rep;
}

CheckReport check_hpr11(double z1, double z2, double tol) {
  auto t0 = Clock::now();
  CheckReport rep = check_ghpr(hpr11_element(), z1, z2, tol);
  rep.identity = "hpr11";
  double li1 = mpl(MplIndex{{1}}, z1) * mpl(MplIndex{{1}}, z2);
  double a = mpl2(MplIndex{{1, 1}}, 1, z1, z2);
  double b = mpl2(MplIndex{{2}}, 0, z2, z1);
  double c = mpl2(MplIndex{{1, 1}}, 1, z2, z1);
  rep.named["explicit"] = std::fabs(li1 - (a + b + c));
  double i12 = rep.params["values"]["contour_1x2"].get<double>();
  double i21 = rep.params["values"]["contour_2x1"].get<double>();
  rep.named["contour_1x2_vs_mpl2"] = std::fabs(i12 - a);
  rep.named["contour_2x1_vs_mpl2"] = std::fabs(i21 - (li1 - c - b));
  rep.residuals.clear();
  for (auto& [k, v] : rep.named) rep.residuals.push_back(v);
  rep.ms = elapsed_ms(t0);
  rep.finish(tol);
  return rep;
}

std::pair<double, double> tau_pullback(double z1, double z2) {
  if (z1 == 1 || z2 == 1) throw std::domain_error("tau_pullback: singular at z = 1");
  return {-z1 * (1 - z2) / (1 - z1), -z2 * (1 - z1) / (1 - z2)};
}

bool in_landen_domain(double z1, double z2) {
  if (!(z1 >= 0 && z1 < 1 && z2 >= 0 && z2 < 1)) return false;
  auto [w1, w2] = tau_pullback(z1, z2);
  return std::fabs(w1) < 1 && std::fabs(w2) < 1;
}

namespace {

double li(int k, double z) { return mpl(MplIndex{{k}}, z); }
double li11(double z) { return mpl(MplIndex{{1, 1}}, z); }

struct LandenSides {
  double l1_lhs, l1_rhs, l2_lhs, l2_rhs;
};

LandenSides landen_sides(double z1, double z2) {
  auto [w1, w2] = tau_pullback(z1, z2);
  double li11_12 = mpl2(MplIndex{{1, 1}}, 1, z1, z2);
  LandenSides s;
  s.l1_lhs = li(2, w1);
  s.l1_rhs = li11_12 - li(2, z1) - li11(z1) + mpl2(MplIndex{{2}}, 0, z1, z2);
  s.l2_lhs = li(2, w2);
  s.l2_rhs = -li11_12 - li(2, z2) - li11(z2) + li(1, z2) * li(1, z1);
  return s;
}

double five_term_defect(double z1, double z2) {
  auto [w1, w2] = tau_pullback(z1, z2);
  double l = std::log((1 - z1) / (1 - z2));
  return li(2, z1 * z2) - (li(2, w1) + li(2, w2) + li(2, z1) + li(2, z2) + 0.5 * l * l);
}

// Coefficient of [x, y] in the PBW basis: antisymmetric part of the two orderings.
double commutator_coefficient(const M05Series<double>& s, Letter x, Letter y) {
  auto mono = [](Letter p, Letter q) {
    return is_left_letter(p) ? PbwMonomial{Word{p, q}, {}} : PbwMonomial{{}, Word{p, q}};
  };
  return 0.5 * (s.coefficient(mono(x, y)) - s.coefficient(mono(y, x)));
}

}  // namespace

CheckReport check_landen_2d(double z1, double z2, double tol) {
  auto t0 = Clock::now();
  CheckReport rep;
  rep.identity = "landen";
  rep.params = {{"z1", z1}, {"z2", z2}};
  if (!in_landen_domain(z1, z2)) throw std::domain_error("check_landen_2d: point outside the series domain");
  auto [w1, w2] = tau_pullback(z1, z2);
  rep.params["pullback"] = {w1, w2};
  LandenSides s = landen_sides(z1, z2);
  double d1 = s.l1_lhs - s.l1_rhs, d2 = s.l2_lhs - s.l2_rhs;
  rep.named["L1"] = std::fabs(d1);
  rep.named["L2"] = std::fabs(d2);
  rep.named["L1_plus_L2_vs_5TR"] = std::fabs(d1 + d2 + five_term_defect(z1, z2));

  // Series form: Lhat(tau^* z) = tau_*(Lhat(z)) exp(c (X1 - X2)), c = log((1 - z1)/(1 - z2)).
  const int N = 3;
  M05Series<double> lhs = build_L2(w1, w2, N);
  double c = std::log((1 - z1) / (1 - z2));
  M05Series<double> rhs =
      apply_map(build_L2(z1, z2, N), tau_star_map()) * exp_m05<double>(Degree1Element::of({1, 0, -1, 0, 0}), c, N);
  rep.named["series"] = max_of(residual_m05(lhs, rhs));
  rep.named["L1_from_series"] = std::fabs(commutator_coefficient(rhs, kX1, kX11) - s.l1_rhs);
  rep.named["L2_from_series"] = std::fabs(commutator_coefficient(rhs, kX2, kX22) - s.l2_rhs);
  for (auto& [k, v] : rep.named) rep.residuals.push_back(v);
  rep.ms = elapsed_ms(t0);
  rep.finish(tol);
  return rep;
}

CheckReport check_landen_classical(double z, double tol) {
  auto t0 = Clock::now();
  CheckReport rep;
  rep.identity = "landen-classical";
  rep.params = {{"z", z}};
  if (!in_landen_domain(z, 0)) throw std::domain_error("check_landen_classical: needs 0 <= z < 1/2");
  double l = std::log(1 - z);
  rep.named["classical"] = std::fabs(li(2, -z / (1 - z)) + li(2, z) + 0.5 * l * l);
  LandenSides s = landen_sides(z, 0);
  rep.named["L1_at_z2_0"] = std::fabs(s.l1_lhs - s.l1_rhs);
  for (auto& [k, v] : rep.named) rep.residuals.push_back(v);
  rep.ms = elapsed_ms(t0);
  rep.finish(tol);
  return rep;
}

CheckReport check_five_term(double z1, double z2, double tol) {
  auto t0 = Clock::now();
  CheckReport rep;
  rep.identity = "five-term";
  rep.params = {{"z1", z1}, {"z2", z2}};
  if (!in_landen_domain(z1, z2)) throw std::domain_error("check_five_term: point outside the series domain");
  rep.residuals = {std::fabs(five_term_defect(z1, z2))};
  rep.ms = elapsed_ms(t0);
  rep.finish(tol);
  return rep;
}

CheckReport check_transport(double z, int N, int steps, double tol) {
  auto t0 = Clock::now();
  CheckReport rep;
  rep.identity = "transport";
  rep.params = {{"z", z}, {"degree", N}, {"steps", steps}};
  TransportSpec spec;
  spec.z = z;
  spec.cap = N;
  spec.steps = steps;
  TransportResult tr = transport_with_estimates(spec);
  rep.residuals = residual_by_degree(tr.value, build_L1(z, N));
  rep.params["richardson"] = tr.richardson;
  rep.params["eps_study"] = tr.eps_study;

  // eps -> z in one go versus eps -> m -> z with m off the single-run grid.
  double m = std::pow(spec.eps, 0.3) * std::pow(z, 0.7);
  int s1 = std::max(1, static_cast<int>(std::lround(steps * 0.3)));
  Series start = transport_initial(spec, spec.eps);
  Series direct = transport_segment(spec, start, spec.eps, z, steps);
  Series mid = transport_segment(spec, start, spec.eps, m, s1);
  Series composed = transport_segment(spec, mid, m, z, steps - s1 + 1);
  rep.named["flow_composition"] = max_of(residual_by_degree(direct, composed));

  if (N >= 1) {
    Series hat = tr.value * exp_deg1(Series::generator(spec.generators(), N, 0, -std::log(z)), N);
    rep.named["degree1_li1"] = std::fabs(hat.coefficient({1}) + std::log1p(-z));
  }
  TransportSpec se1 = spec;
  se1.eq = Equation::SE1;
  se1.a = {1.0};
  rep.named["se1_reduces_to_kze1"] = max_of(residual_by_degree(transport(se1), tr.value));
  rep.ms = elapsed_ms(t0);
  rep.finish(tol);
  return rep;
}

}  // namespace kz
