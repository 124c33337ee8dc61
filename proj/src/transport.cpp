#include "kz/transport.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kz {

const std::vector<double>& TransportSpec::params() const {
  static const std::vector<double> kze1{1.0};
  return eq == Equation::KZE1 ? kze1 : a;
}

GeneratorSet TransportSpec::generators() const {
  if (eq == Equation::KZE1) return GeneratorSet::x01();
  return GeneratorSet::indexed(static_cast<int>(a.size()));
}

void TransportSpec::validate() const {
  if (!(eps > 0)) throw std::invalid_argument("transport: eps must be positive");
  if (!(z > 0)) throw std::invalid_argument("transport: endpoint must be positive");
  if (cap < 0 || steps < 1 || seed_order < 0) throw std::invalid_argument("transport: bad cap/steps/seed order");
  const auto& p = params();
  if (p.empty()) throw std::invalid_argument("transport: SE1 needs at least one parameter");
  double hi = std::max(eps, z);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) throw std::invalid_argument("transport: parameters must be nonzero");
    if (!std::isfinite(p[i])) throw std::invalid_argument("transport: non-finite parameter");
    for (std::size_t j = 0; j < i; ++j)
      if (p[i] == p[j]) throw std::invalid_argument("transport: parameters must be distinct");
    // The path [min(eps,z), max(eps,z)] must avoid 1/a.
    if (p[i] * hi >= 1) throw std::domain_error("transport: path meets the singular point 1/a");
  }
}

namespace {

using Series = TruncatedSeries<double>;

Series right_mul_gen(const Series& s, std::size_t g) {
  return s * Series::generator(s.generators(), s.cap(), g);
}

// (X0 + sum_j a_j z / (1 - a_j z) X_j) G
Series rhs(const std::vector<double>& a, double z, const Series& g) {
  std::vector<double> lin(a.size() + 1, 0.0);
  lin[0] = 1.0;
  for (std::size_t j = 0; j < a.size(); ++j) lin[j + 1] = a[j] * z / (1 - a[j] * z);
  return left_mul_linear(lin, g);
}

}  // namespace

Series frobenius_seed(const TransportSpec& spec, double z) {
  const auto& a = spec.params();
  GeneratorSet gens = spec.generators();
  const int N = spec.cap;
  std::vector<Series> c{Series::one(gens, N)};
  Series total = c[0];
  double zn = 1;
  for (int n = 1; n <= spec.seed_order; ++n) {
    Series r(gens, N);
    for (int m = 0; m < n; ++m) {
      std::vector<double> b(a.size() + 1, 0.0);
      for (std::size_t j = 0; j < a.size(); ++j) b[j + 1] = std::pow(a[j], m + 1);
      r += left_mul_linear(b, c[n - 1 - m]);
    }
    // (n - ad X0)^{-1} = sum_k ad(X0)^k / n^{k+1}; ad X0 raises degree so the sum is finite.
    Series term = (1.0 / n) * r;
    Series cn = term;
    std::vector<double> x0(a.size() + 1, 0.0);
    x0[0] = 1.0;
    for (int k = 0; k < N; ++k) {
      term = (1.0 / n) * (left_mul_linear(x0, term) - right_mul_gen(term, 0));
      cn += term;
    }
    c.push_back(cn);
    zn *= z;
    total += zn * cn;
  }
  return total;
}

Series transport_segment(const TransportSpec& spec, const Series& g0, double z_from, double z_to, int steps) {
  if (!(z_from > 0) || !(z_to > 0)) throw std::domain_error("transport: segment must stay in z > 0");
  if (steps < 1) throw std::invalid_argument("transport: steps must be positive");
  const auto& a = spec.params();
  for (double aj : a)
    if (aj * std::max(z_from, z_to) >= 1) throw std::domain_error("transport: path meets the singular point 1/a");
  double t0 = std::log(z_from), t1 = std::log(z_to);
  double h = (t1 - t0) / steps;
  Series g = g0;
  for (int i = 0; i < steps; ++i) {
    double t = t0 + i * h;
    double za = std::exp(t), zm = std::exp(t + h / 2), zb = std::exp(t + h);
    Series k1 = rhs(a, za, g);
    Series k2 = rhs(a, zm, g + (h / 2) * k1);
    Series k3 = rhs(a, zm, g + (h / 2) * k2);
    Series k4 = rhs(a, zb, g + h * k3);
    g += (h / 6) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return g;
}

Series transport_initial(const TransportSpec& spec, double eps) {
  GeneratorSet gens = spec.generators();
  Series x0 = Series::generator(gens, spec.cap, 0, std::log(eps));
  return frobenius_seed(spec, eps) * exp_deg1(x0, spec.cap);
}

namespace {

double max_diff(const Series& a, const Series& b) {
  auto r = residual_by_degree(a, b);
  return r.empty() ? 0.0 : *std::max_element(r.begin(), r.end());
}

}  // namespace

Series transport(const TransportSpec& spec) {
  spec.validate();
  return transport_segment(spec, transport_initial(spec, spec.eps), spec.eps, spec.z, spec.steps);
}

TransportResult transport_with_estimates(const TransportSpec& spec) {
  spec.validate();
  Series g = transport(spec);
  Series fine = transport_segment(spec, transport_initial(spec, spec.eps), spec.eps, spec.z, 2 * spec.steps);
  TransportSpec half = spec;
  half.eps = spec.eps / 2;
  Series gh = transport(half);
  TransportResult out{g, max_diff(g, fine) / 15.0, max_diff(g, gh)};
  return out;
}

}  // namespace kz
