#pragma once

#include <map>
#include <shared_mutex>

#include "kz/polylog.hpp"
#include "kz/report.hpp"
#include "kz/series.hpp"
#include "kz/shuffle.hpp"

namespace kz {

struct ZetaValue {
  double value = 0;
  double error = 0;  // estimated absolute error
};

// Hoelder convolution at 1/2: sum_{uv = w} Li(tau(u); 1/2) Li(v; 1/2).
// Requires w to begin with xi0 and end with xi1 (the empty word gives 1).
ZetaValue zeta_holder(const Word& w, double tol = 1e-16);
double zeta(const Word& w, double tol = 1e-15);
double zeta(const MplIndex& idx, double tol = 1e-15);

// Independent route: truncated nested sums plus Euler-Maclaurin expansions of
// the iterated tails in 1/N.
ZetaValue zeta_direct(const MplIndex& idx);

// Read-mostly cache of Hoelder values keyed by S10 words.
class ZetaTable {
 public:
  explicit ZetaTable(double tol = 1e-15) : tol_(tol) {}
  ZetaValue get(const Word& w);
  std::size_t size() const;

 private:
  double tol_;
  mutable std::shared_mutex mu_;
  std::map<Word, ZetaValue, WordLess> cache_;
};

ZetaTable& default_zeta_table();

// zeta applied linearly to reg10(p).
double zeta_reg(const ShufflePoly& p, double tol = 1e-15);

// Phi_KZ = sum_w zeta(reg10 w) W over {X0, X1}, degrees <= N.
TruncatedSeries<double> associator(int N, double tol = 1e-15);

// Phi(X0,X1) Phi(-X1,-X0) = 1 per degree, together with the word-level
// instances zeta(reg10 w) = zeta(reg10 tau(w)) folded into the same degree.
CheckReport check_duality(int N, double tol = 1e-10);

}  // namespace kz
