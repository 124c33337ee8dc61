#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "kz/linalg.hpp"
#include "kz/shuffle.hpp"

namespace kz {

// The five forms use the letter order of Alphabet::five(): xi1, xi11, xi2, xi22, xi12.
enum class OneForm { Xi1, Xi11, Xi2, Xi22, Xi12, Xi12Tilde1, Xi12Tilde2 };

OneForm form_of_letter(Letter l);

// (coefficient of dz1, coefficient of dz2). Throws on the singular divisors.
std::pair<Rational, Rational> evaluate(OneForm f, const Rational& z1, const Rational& z2);
std::pair<double, double> evaluate(OneForm f, double z1, double z2);

inline constexpr std::uint64_t kDefaultSeed = 20240607;

// Coordinates of the pairwise wedges omega_a ^ omega_b in a basis of their span.
struct WedgeCoordinates {
  int rank = 0;
  std::vector<std::pair<int, int>> basis_pairs;
  // coords[a][b] has `rank` entries; antisymmetric in (a, b).
  std::array<std::array<RVector, 5>, 5> coords;
};

WedgeCoordinates wedge_coordinates(std::uint64_t seed = kDefaultSeed);
const WedgeCoordinates& default_wedge_coordinates();

struct BarElement {
  ShufflePoly poly;
  bool cic_verified = false;
};

bool satisfies_cic(const ShufflePoly& p, const WedgeCoordinates& wc = default_wedge_coordinates());
// Basis of B_s (or B0_s: no word ends in xi1 or xi2).
std::vector<BarElement> cic_kernel(int s, bool end_restricted,
                                   const WedgeCoordinates& wc = default_wedge_coordinates());

struct TensorPoly {
  AlphabetPtr left, right;
  std::map<std::pair<Word, Word>, Rational> terms;

  void add(const Word& a, const Word& b, const Rational& c);
  std::string str() const;
  bool operator==(const TensorPoly& o) const;
};

TensorPoly shuffle_product(const TensorPoly& a, const TensorPoly& b);

// Alphabets of the iota images: {xi1, xi11, xi12~(1)} (x) {xi2, xi22} and
// {xi2, xi22, xi12~(2)} (x) {xi1, xi11}.
AlphabetPtr iota12_left();
AlphabetPtr iota12_right();
AlphabetPtr iota21_left();
AlphabetPtr iota21_right();

TensorPoly iota_12(const ShufflePoly& phi, const WedgeCoordinates& wc = default_wedge_coordinates());
TensorPoly iota_21(const ShufflePoly& phi, const WedgeCoordinates& wc = default_wedge_coordinates());

}  // namespace kz
