#pragma once

#include <optional>
#include <vector>

#include "kz/shuffle.hpp"

namespace kz {

using RVector = std::vector<Rational>;
using RMatrix = std::vector<RVector>;

struct Rref {
  RMatrix m;                // reduced row echelon form, zero rows dropped
  std::vector<int> pivots;  // pivot column of each row
};

Rref rref(RMatrix a, std::size_t cols);
int rank(const RMatrix& a, std::size_t cols);
// Basis of {x : a x = 0}, one vector per free column in increasing order.
std::vector<RVector> nullspace(const RMatrix& a, std::size_t cols);
// Some solution of a x = b, if one exists.
std::optional<RVector> solve(const RMatrix& a, const RVector& b, std::size_t cols);

}  // namespace kz
