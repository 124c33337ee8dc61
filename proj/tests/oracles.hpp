#pragma once

// Reference implementations that share no code with the library: recursive
// shuffles, closed-form regularization, naive nested sums and known constants.

#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <vector>

#include "kz/shuffle.hpp"

namespace oracle {

using kz::Letter;
using kz::Rational;
using kz::Word;
using Poly = std::map<Word, Rational>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double zeta2 = pi * pi / 6;
inline constexpr double zeta3 = 1.2020569031595942854;
inline constexpr double zeta4 = pi * pi * pi * pi / 90;
inline constexpr double zeta5 = 1.0369277551433699263;

inline void add(Poly& p, const Word& w, const Rational& c) {
  Rational& v = p[w];
  v += c;
  if (v == 0) p.erase(w);
}

inline Poly add(Poly a, const Poly& b, const Rational& k = 1) {
  for (auto& [w, c] : b) add(a, w, k * c);
  return a;
}

inline Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Straight from the recursion (a u) ⧢ (b v) = a (u ⧢ b v) + b (a u ⧢ v).
inline Poly shuffle(const Word& a, const Word& b) {
  if (a.empty()) return {{b, 1}};
  if (b.empty()) return {{a, 1}};
  Poly out;
  for (auto& [w, c] : shuffle(Word(a.begin() + 1, a.end()), b)) add(out, concat({a[0]}, w), c);
  for (auto& [w, c] : shuffle(a, Word(b.begin() + 1, b.end()))) add(out, concat({b[0]}, w), c);
  return out;
}

inline Poly shuffle(const Poly& p, const Poly& q) {
  Poly out;
  for (auto& [u, a] : p)
    for (auto& [v, b] : q)
      for (auto& [w, c] : shuffle(u, v)) add(out, w, a * b * c);
  return out;
}

inline Poly power(Letter l, int n) { return {{Word(n, l), 1}}; }

inline Poly from(const kz::ShufflePoly& p) {
  Poly out;
  for (auto& [w, c] : p.terms()) out[w] = c;
  return out;
}

// reg0(v b xi0^n) = (-1)^n (v ⧢ xi0^n) b for b != xi0 (binary letters, xi0 = 0).
inline Poly reg0_closed(const Poly& p) {
  Poly out;
  for (auto& [w, c] : p) {
    std::size_t n = 0;
    while (n < w.size() && w[w.size() - 1 - n] == 0) ++n;
    if (n == w.size()) {
      if (n == 0) add(out, w, c);
      continue;
    }
    Word v(w.begin(), w.end() - n - 1);
    Letter b = w[w.size() - n - 1];
    Rational sign = n % 2 ? -1 : 1;
    for (auto& [u, m] : shuffle(v, Word(n, 0))) add(out, concat(u, {b}), sign * c * m);
  }
  return out;
}

// Mirror image for leading xi1's: reg(xi1^n a v) = (-1)^n a (xi1^n ⧢ v), a != xi1.
inline Poly reg1_closed(const Poly& p) {
  Poly out;
  for (auto& [w, c] : p) {
    std::size_t n = 0;
    while (n < w.size() && w[n] == 1) ++n;
    if (n == w.size()) {
      if (n == 0) add(out, w, c);
      continue;
    }
    Letter a = w[n];
    Word v(w.begin() + n + 1, w.end());
    Rational sign = n % 2 ? -1 : 1;
    for (auto& [u, m] : shuffle(Word(n, 1), v)) add(out, concat({a}, u), sign * c * m);
  }
  return out;
}

inline Poly reg10_closed(const Poly& p) { return reg1_closed(reg0_closed(p)); }

// Sum over M > n1 > ... > nr > 0 of z^{n1} prod a_j^{n_j - n_{j+1}} / prod n_j^{k_j}, by plain
// recursion on (z a1)^{n1} (a2/a1)^{n2} ... (ar/a_{r-1})^{nr}. Parameters must be nonzero.
inline long double nested_sum(const std::vector<int>& k, const std::vector<long double>& a, long double z, int M) {
  std::size_t r = k.size();
  std::vector<long double> b(r);
  for (std::size_t j = 0; j < r; ++j) b[j] = j == 0 ? z * a[0] : a[j] / a[j - 1];
  std::vector<std::vector<long double>> term(r, std::vector<long double>(M));
  for (std::size_t j = 0; j < r; ++j)
    for (int n = 1; n < M; ++n)
      term[j][n] = std::pow(b[j], static_cast<long double>(n)) / std::pow(static_cast<long double>(n), k[j]);
  std::function<long double(std::size_t, int)> rec = [&](std::size_t j, int upper) -> long double {
    if (j == r) return 1;
    long double s = 0;
    for (int n = 1; n < upper; ++n) s += term[j][n] * rec(j + 1, n);
    return s;
  };
  return rec(0, M);
}

// Li_{k1..kr}(z) by direct nested summation.
inline long double li(const std::vector<int>& k, long double z, int M = 400) {
  return nested_sum(k, std::vector<long double>(k.size(), 1.0L), z, M);
}

inline long double li2(long double z) { return li({2}, z); }

inline std::vector<Word> words(int letters, int length) {
  std::vector<Word> out{Word{}};
  for (int i = 0; i < length; ++i) {
    std::vector<Word> next;
    for (auto& w : out)
      for (int l = 0; l < letters; ++l) next.push_back(concat(w, {static_cast<Letter>(l)}));
    out = std::move(next);
  }
  return out;
}

inline Poly random_poly(std::mt19937_64& rng, int letters, int max_weight, int terms) {
  Poly p;
  std::uniform_int_distribution<int> len(0, max_weight), let(0, letters - 1), coef(-4, 4);
  for (int i = 0; i < terms; ++i) {
    Word w(len(rng));
    for (auto& l : w) l = static_cast<Letter>(let(rng));
    add(p, w, coef(rng));
  }
  return p;
}

inline kz::ShufflePoly to_poly(const kz::AlphabetPtr& a, const Poly& p) {
  kz::ShufflePoly out(a);
  for (auto& [w, c] : p) out.add(w, c);
  return out;
}

}  // namespace oracle
