#include <chrono>

#include "kz/m05.hpp"
#include "kz/mzv.hpp"

namespace kz {

CheckReport pentagon_check(int N, double tol) {
  auto t0 = std::chrono::steady_clock::now();
  CheckReport rep;
  rep.identity = "pentagon";
  rep.params = {{"degree", N}};
  if (N < 0) throw std::invalid_argument("pentagon_check: negative degree");

  auto phi = associator(N, 1e-15);
  Degree1Element a = Degree1Element::basis(kX1), b = Degree1Element::basis(kX11);
  M05Series<double> prod = M05Series<double>::one(N);
  nlohmann::json gens = nlohmann::json::array();
  for (int alpha = 0; alpha < 5; ++alpha) {
    gens.push_back({{"X1", a.str()}, {"X11", b.str()}});
    // prod = Phi^(alpha) ... Phi^(0)
    prod = substitute_m05(phi, {a, b}, N) * prod;
    a = sigma_star_inv(a);
    b = sigma_star_inv(b);
  }
  rep.params["generators"] = gens;
  rep.residuals = (prod - M05Series<double>::one(N)).max_abs_by_degree();
  rep.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  rep.finish(tol);
  return rep;
}

}  // namespace kz
