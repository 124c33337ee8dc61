#include "kz/report.hpp"

#include <algorithm>
#include <cmath>

namespace kz {

void CheckReport::finish(double tol) {
  tolerance = tol;
  max_residual = 0;
  bool nan = false;
  auto take = [&](double r) {
    if (std::isnan(r)) nan = true;
    else max_residual = std::max(max_residual, r);
  };
  for (double r : residuals) take(r);
  for (auto& [name, r] : named) take(r);
  pass = !nan && max_residual <= tolerance;
}

nlohmann::json CheckReport::to_json() const {
  nlohmann::json p = params;
  p["tolerance"] = tolerance;
  if (!named.empty()) {
    nlohmann::json n = nlohmann::json::object();
    for (auto& [k, v] : named) n[k] = v;
    p["named_residuals"] = n;
  }
  return {{"identity", identity}, {"params", p},       {"residuals", residuals},
          {"max_residual", max_residual}, {"pass", pass}, {"ms", ms}};
}

}  // namespace kz
