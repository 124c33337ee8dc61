#include "kz/quadrature.hpp"

#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>

namespace kz {

namespace {

// Spectral integration on Chebyshev points of the first kind in [-1, 1].
struct ChebRule {
  int n;
  std::vector<double> x;                // nodes
  std::vector<std::vector<double>> S;   // S[i][k] = int_{-1}^{x_i} l_k
  std::vector<double> total;            // int_{-1}^{1} l_k

  explicit ChebRule(int n_) : n(n_), x(n_), S(n_, std::vector<double>(n_)), total(n_) {
    const double pi = std::numbers::pi;
    std::vector<double> theta(n);
    for (int k = 0; k < n; ++k) {
      theta[k] = pi * (k + 0.5) / n;
      x[k] = std::cos(theta[k]);
    }
    for (int k = 0; k < n; ++k) {
      // Chebyshev coefficients of the k-th cardinal function.
      std::vector<double> c(n);
      for (int m = 0; m < n; ++m) c[m] = (m == 0 ? 1.0 : 2.0) / n * std::cos(m * theta[k]);
      // Antiderivative coefficients d_j.
      std::vector<double> d(n + 1, 0.0);
      for (int m = 0; m < n; ++m) {
        if (m == 0) {
          d[1] += c[0];
        } else if (m == 1) {
          d[2] += c[1] / 4;
        } else {
          d[m + 1] += c[m] / (2.0 * (m + 1));
          d[m - 1] -= c[m] / (2.0 * (m - 1));
        }
      }
      auto at = [&](auto Tj) {
        double v = 0;
        for (int j = 0; j <= n; ++j) v += d[j] * Tj(j);
        return v;
      };
      double left = at([](int j) { return j % 2 ? -1.0 : 1.0; });
      for (int i = 0; i < n; ++i) S[i][k] = at([&](int j) { return std::cos(j * theta[i]); }) - left;
      total[k] = at([](int) { return 1.0; }) - left;
    }
  }
};

const ChebRule& rule(int n) {
  static thread_local std::vector<std::unique_ptr<ChebRule>> cache;
  for (auto& r : cache)
    if (r->n == n) return *r;
  cache.push_back(std::make_unique<ChebRule>(n));
  return *cache.back();
}

Point lerp(const Point& a, const Point& b, double s) {
  Point p(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) p[i] = a[i] + s * (b[i] - a[i]);
  return p;
}

bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

Complex integrate_once(const std::vector<FormFn>& forms, const std::vector<Point>& path, const QuadConfig& cfg,
                       int panels) {
  const int r = static_cast<int>(forms.size());
  const ChebRule& R = rule(cfg.nodes);
  std::vector<Complex> Fstart(r, 0.0);
  std::vector<std::vector<Complex>> Fn(r + 1, std::vector<Complex>(R.n));

  auto do_panel = [&](const Point& A, const Point& B) {
    Point half(A.size());
    for (std::size_t i = 0; i < A.size(); ++i) half[i] = 0.5 * (B[i] - A[i]);
    std::vector<Point> pts(R.n);
    for (int i = 0; i < R.n; ++i) pts[i] = lerp(A, B, 0.5 * (R.x[i] + 1));
    for (int i = 0; i < R.n; ++i) Fn[r][i] = cfg.inner ? cfg.inner(pts[i]) : Complex(1.0);
    std::vector<Complex> g(R.n);
    for (int j = r - 1; j >= 0; --j) {
      for (int i = 0; i < R.n; ++i) {
        g[i] = forms[j](pts[i], half) * Fn[j + 1][i];
        if (!finite(g[i])) throw std::domain_error("quadrature path meets a singularity");
      }
      Complex end = Fstart[j];
      for (int i = 0; i < R.n; ++i) {
        Complex s = Fstart[j];
        for (int k = 0; k < R.n; ++k) s += R.S[i][k] * g[k];
        Fn[j][i] = s;
        end += R.total[i] * g[i];
      }
      Fstart[j] = end;
    }
  };

  for (std::size_t seg = 0; seg + 1 < path.size(); ++seg) {
    const Point& P0 = path[seg];
    const Point& P1 = path[seg + 1];
    std::vector<double> cuts;
    if (seg == 0) {
      cuts.push_back(0.0);
      for (int g = 50; g >= 1; --g) cuts.push_back(std::ldexp(1.0 / panels, -g));
    }
    for (int p = seg == 0 ? 1 : 0; p <= panels; ++p) cuts.push_back(static_cast<double>(p) / panels);
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) do_panel(lerp(P0, P1, cuts[c]), lerp(P0, P1, cuts[c + 1]));
  }
  return r == 0 ? Complex(1.0) : Fstart[0];
}

}  // namespace

Complex quad_iterint(const std::vector<FormFn>& forms, const std::vector<Point>& path, const QuadConfig& cfg) {
  if (path.size() < 2) throw std::invalid_argument("quadrature path needs two points");
  if (forms.empty()) return cfg.inner ? cfg.inner(path.back()) : Complex(1.0);
  if (!cfg.inner) {
    Point v(path[0].size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = path[1][i] - path[0][i];
    if (!finite(forms.back()(path[0], v))) throw std::domain_error("non-integrable endpoint");
  }
  int panels = cfg.initial_panels;
  Complex prev = integrate_once(forms, path, cfg, panels);
  for (int it = 0; it < cfg.max_refinements; ++it) {
    panels *= 2;
    Complex cur = integrate_once(forms, path, cfg, panels);
    if (std::abs(cur - prev) <= cfg.tolerance) return cur;
    prev = cur;
  }
  throw std::runtime_error("quadrature did not converge");
}

FormFn xi0_form() {
  return [](const Point& p, const Point& v) { return v[0] / p[0]; };
}

FormFn xi1_form() {
  return [](const Point& p, const Point& v) { return v[0] / (1.0 - p[0]); };
}

double quad_word(const Word& w, double z, const QuadConfig& cfg) {
  std::size_t m = 0;
  while (m < w.size() && w[w.size() - 1 - m] == 0) ++m;
  double fact = 1;
  for (std::size_t i = 2; i <= m; ++i) fact *= static_cast<double>(i);
  if (m > 0 && !(z > 0)) throw std::domain_error("log z undefined at this real argument");
  if (m == w.size()) return std::pow(std::log(z), static_cast<double>(m)) / fact;
  std::vector<FormFn> forms;
  for (std::size_t i = 0; i + m < w.size(); ++i) forms.push_back(w[i] == 0 ? xi0_form() : xi1_form());
  QuadConfig c = cfg;
  if (m > 0)
    c.inner = [m, fact](const Point& p) { return std::pow(std::log(p[0]), static_cast<double>(m)) / fact; };
  return quad_iterint(forms, {Point{0.0}, Point{z}}, c).real();
}

}  // namespace kz
