#pragma once

#include <vector>

#include "kz/series.hpp"

namespace kz {

enum class Equation { KZE1, SE1 };

// dG/dz = (X0/z + sum_j a_j X_j / (1 - a_j z)) G over generators X0..Xm.
// KZE1 is the case m = 1, a_1 = 1 (generators X0, X1).
struct TransportSpec {
  Equation eq = Equation::KZE1;
  std::vector<double> a;  // ignored for KZE1
  double eps = 1e-3;
  double z = 0.5;
  int steps = 2000;
  int cap = 3;
  // Number of Taylor terms of the holomorphic part used at z = eps.
  int seed_order = 6;

  const std::vector<double>& params() const;
  GeneratorSet generators() const;
  void validate() const;
};

struct TransportResult {
  TruncatedSeries<double> value;  // the solution at spec.z, including z^{X0}
  double richardson = 0;          // |G(h) - G(h/2)| / 15, max over coefficients
  double eps_study = 0;           // |G(eps) - G(eps/2)|, max over coefficients
};

// Holomorphic part at z near 0 from the recursion (n - ad X0) c_n = sum_m sum_j a_j^{m+1} X_j c_{n-1-m}.
TruncatedSeries<double> frobenius_seed(const TransportSpec& spec, double z);

// frobenius_seed(eps) * eps^{X0}.
TruncatedSeries<double> transport_initial(const TransportSpec& spec, double eps);

// Classical RK4 in t = log z for a given initial value at z_from.
TruncatedSeries<double> transport_segment(const TransportSpec& spec, const TruncatedSeries<double>& g0,
                                          double z_from, double z_to, int steps);

TruncatedSeries<double> transport(const TransportSpec& spec);
TransportResult transport_with_estimates(const TransportSpec& spec);

}  // namespace kz
