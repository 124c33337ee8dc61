#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "kz/shuffle.hpp"

namespace kz {

using Complex = std::complex<double>;

struct MplIndex {
  std::vector<int> k;

  int depth() const { return static_cast<int>(k.size()); }
  int weight() const;
  bool admissible() const { return k.empty() || k.front() >= 2; }
  Word word() const { return word_from_composition(k); }
  std::string str() const;
  static MplIndex parse(std::string_view text) { return {parse_composition(text)}; }
};

enum class Strategy { Auto, Direct, Inversion };

struct EvalConfig {
  double tolerance = 1e-17;  // absolute truncation error
  long max_terms = 2'000'000;
  Strategy strategy = Strategy::Auto;
};

// Real arguments at or below this modulus are summed directly; real arguments
// in (threshold, 1) go through the inversion formula.
inline constexpr double kDirectRadius = 0.9;

double mpl(const MplIndex& idx, double z, const EvalConfig& cfg = {});
Complex mpl(const MplIndex& idx, Complex z, const EvalConfig& cfg = {});

// Regularized extension of Li to all of S(xi0, xi1).
double li_map(const ShufflePoly& p, double z, const EvalConfig& cfg = {});
Complex li_map(const ShufflePoly& p, Complex z, const EvalConfig& cfg = {});
double li_word(const Word& w, double z, const EvalConfig& cfg = {});

// L(^{k1}a1 ... ^{kr}ar; z) = sum_{n1>...>nr>0} z^{n1} prod a_j^{n_j - n_{j+1}} / prod n_j^{k_j}.
// A zero parameter gives the termwise limit 0.
struct HyperlogSpec {
  std::vector<int> k;
  std::vector<double> a;
  double z = 0;

  // "k@a" pairs separated by commas, e.g. "1@1,2@0.4".
  static HyperlogSpec parse(std::string_view text, double z);
};

double hyperlog(const HyperlogSpec& spec, const EvalConfig& cfg = {});
Complex hyperlog(const std::vector<int>& k, const std::vector<Complex>& a, Complex z, const EvalConfig& cfg = {});

// Li_k(i, r-i; z1, z2) = sum z1^{n1} z2^{n_{i+1}} / prod n_j^{k_j}, 0 <= i <= r.
// With split == r this is Li_k(z1); z2 = 0 gives the termwise limit.
double mpl2(const MplIndex& idx, int split, double z1, double z2, const EvalConfig& cfg = {});

}  // namespace kz
