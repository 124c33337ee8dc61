#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace kz {

struct CheckReport {
  std::string identity;
  nlohmann::json params = nlohmann::json::object();
  // Indexed by degree or weight.
  std::vector<double> residuals;
  // Residuals that are not graded (scalar identities, route comparisons).
  std::map<std::string, double> named;
  double max_residual = 0;
  double tolerance = 0;
  bool pass = false;
  double ms = 0;

  // Sets max_residual and pass from the collected residuals.
  void finish(double tol);
  nlohmann::json to_json() const;
};

}  // namespace kz
