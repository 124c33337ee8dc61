#include "kz/bar.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace kz {

OneForm form_of_letter(Letter l) {
  static const OneForm f[] = {OneForm::Xi1, OneForm::Xi11, OneForm::Xi2, OneForm::Xi22, OneForm::Xi12};
  if (l >= 5) throw std::invalid_argument("letter outside the five-form alphabet");
  return f[l];
}

namespace {

template <class S>
std::pair<S, S> eval_form(OneForm f, const S& z1, const S& z2) {
  auto need = [](bool ok) {
    if (!ok) throw std::domain_error("one-form evaluated on a singular divisor");
  };
  const S zero(0), one(1);
  switch (f) {
    case OneForm::Xi1: need(z1 != 0); return {one / z1, zero};
    case OneForm::Xi11: need(z1 != 1); return {one / (one - z1), zero};
    case OneForm::Xi2: need(z2 != 0); return {zero, one / z2};
    case OneForm::Xi22: need(z2 != 1); return {zero, one / (one - z2)};
    case OneForm::Xi12: {
      S d = one - z1 * z2;
      need(d != 0);
      return {z2 / d, z1 / d};
    }
    case OneForm::Xi12Tilde1: {
      S d = one - z1 * z2;
      need(d != 0);
      return {z2 / d, zero};
    }
    case OneForm::Xi12Tilde2: {
      S d = one - z1 * z2;
      need(d != 0);
      return {zero, z1 / d};
    }
  }
  throw std::invalid_argument("unknown one-form");
}

}  // namespace

std::pair<Rational, Rational> evaluate(OneForm f, const Rational& z1, const Rational& z2) {
  return eval_form<Rational>(f, z1, z2);
}

std::pair<double, double> evaluate(OneForm f, double z1, double z2) { return eval_form<double>(f, z1, z2); }

namespace {

// Wedge values of the 10 ordered pairs a < b at random rational points.
std::vector<std::pair<std::pair<int, int>, RVector>> sample_wedges(std::mt19937_64& rng, int points) {
  std::uniform_int_distribution<int> num(1, 150), den(2, 61);
  std::vector<std::pair<Rational, Rational>> pts;
  while (static_cast<int>(pts.size()) < points) {
    Rational z1(num(rng), den(rng)), z2(num(rng), den(rng));
    z1.canonicalize();
    z2.canonicalize();
    if (z1 == 1 || z2 == 1 || z1 * z2 == 1) continue;
    pts.emplace_back(z1, z2);
  }
  std::vector<std::pair<std::pair<int, int>, RVector>> out;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) {
      RVector v;
      for (auto& [z1, z2] : pts) {
        auto fa = evaluate(form_of_letter(a), z1, z2);
        auto fb = evaluate(form_of_letter(b), z1, z2);
        v.push_back(fa.first * fb.second - fa.second * fb.first);
      }
      out.emplace_back(std::make_pair(a, b), std::move(v));
    }
  return out;
}

WedgeCoordinates coordinates_from(const std::vector<std::pair<std::pair<int, int>, RVector>>& wedges) {
  WedgeCoordinates wc;
  const std::size_t P = wedges.front().second.size();
  // Greedy basis among the pairs in order.
  RMatrix rows;
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < wedges.size(); ++i) {
    RMatrix trial = rows;
    trial.push_back(wedges[i].second);
    if (rank(trial, P) > static_cast<int>(rows.size())) {
      rows = std::move(trial);
      chosen.push_back(i);
    }
  }
  wc.rank = static_cast<int>(chosen.size());
  for (auto i : chosen) wc.basis_pairs.push_back(wedges[i].first);
  // A x = v with the basis wedges as columns.
  RMatrix A(P, RVector(wc.rank));
  for (std::size_t p = 0; p < P; ++p)
    for (int c = 0; c < wc.rank; ++c) A[p][c] = rows[c][p];
  for (auto& row : wc.coords)
    for (auto& cell : row) cell.assign(wc.rank, 0);
  for (auto& [ab, v] : wedges) {
    auto x = solve(A, v, wc.rank);
    if (!x) throw std::logic_error("wedge outside the span of the chosen basis");
    wc.coords[ab.first][ab.second] = *x;
    RVector neg = *x;
    for (auto& q : neg) q = -q;
    wc.coords[ab.second][ab.first] = neg;
  }
  return wc;
}

bool same(const WedgeCoordinates& a, const WedgeCoordinates& b) {
  return a.rank == b.rank && a.basis_pairs == b.basis_pairs && a.coords == b.coords;
}

}  // namespace

WedgeCoordinates wedge_coordinates(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  constexpr int kPoints = 16;
  for (int batch = 0; batch < 8; ++batch) {
    WedgeCoordinates first = coordinates_from(sample_wedges(rng, kPoints));
    bool stable = true;
    for (int again = 0; again < 2 && stable; ++again)
      stable = same(first, coordinates_from(sample_wedges(rng, kPoints)));
    if (stable) return first;
  }
  throw std::runtime_error("wedge rank unstable across resamples");
}

const WedgeCoordinates& default_wedge_coordinates() {
  static const WedgeCoordinates wc = wedge_coordinates(kDefaultSeed);
  return wc;
}

namespace {

void require_five(const ShufflePoly& p) {
  if (!(*p.alphabet() == *Alphabet::five())) throw std::invalid_argument("expected the five-form alphabet");
}

std::size_t word_index(const Word& w, std::size_t skip_a, std::size_t skip_b) {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (i != skip_a && i != skip_b) idx = idx * 5 + w[i];
  return idx;
}

}  // namespace

bool satisfies_cic(const ShufflePoly& p, const WedgeCoordinates& wc) {
  require_five(p);
  int s = p.max_weight();
  for (int l = 0; l + 1 < s; ++l) {
    std::map<std::pair<std::size_t, std::size_t>, Rational> acc;
    for (auto& [w, c] : p.terms()) {
      if (static_cast<int>(w.size()) <= l + 1) continue;
      std::size_t ctx = word_index(w, l, l + 1) * 8 + w.size();
      const RVector& v = wc.coords[w[l]][w[l + 1]];
      for (int k = 0; k < wc.rank; ++k)
        if (v[k] != 0) acc[{ctx, k}] += c * v[k];
    }
    for (auto& [key, v] : acc)
      if (v != 0) return false;
  }
  return true;
}

std::vector<BarElement> cic_kernel(int s, bool end_restricted, const WedgeCoordinates& wc) {
  if (s < 1) throw std::invalid_argument("cic_kernel: s must be >= 1");
  std::vector<Word> cols;
  for (auto& w : all_words(5, s))
    if (!end_restricted || (w.back() != 0 && w.back() != 2)) cols.push_back(w);
  std::size_t ctxs = 1;
  for (int i = 0; i < s - 2; ++i) ctxs *= 5;
  std::size_t nrows = s >= 2 ? static_cast<std::size_t>(s - 1) * ctxs * wc.rank : 0;
  RMatrix M(nrows, RVector(cols.size(), 0));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const Word& w = cols[j];
    for (int l = 0; l + 1 < s; ++l) {
      const RVector& v = wc.coords[w[l]][w[l + 1]];
      std::size_t base = (static_cast<std::size_t>(l) * ctxs + word_index(w, l, l + 1)) * wc.rank;
      for (int k = 0; k < wc.rank; ++k) M[base + k][j] = v[k];
    }
  }
  std::vector<BarElement> out;
  for (auto& v : nullspace(M, cols.size())) {
    ShufflePoly p(Alphabet::five());
    for (std::size_t j = 0; j < cols.size(); ++j) p.add(cols[j], v[j]);
    out.push_back({std::move(p), true});
  }
  return out;
}

void TensorPoly::add(const Word& a, const Word& b, const Rational& c) {
  if (c == 0) return;
  auto [it, ins] = terms.try_emplace({a, b}, c);
  if (!ins) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

std::string TensorPoly::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [ab, c] : terms) {
    if (c < 0) os << (first ? "-" : " - ");
    else if (!first) os << " + ";
    Rational a = abs(c);
    if (a != 1) os << to_string(a) << "*";
    os << (ab.first.empty() ? "1" : left->format(ab.first)) << " (x) "
       << (ab.second.empty() ? "1" : right->format(ab.second));
    first = false;
  }
  return os.str();
}

bool TensorPoly::operator==(const TensorPoly& o) const {
  return *left == *o.left && *right == *o.right && terms == o.terms;
}

TensorPoly shuffle_product(const TensorPoly& a, const TensorPoly& b) {
  if (!(*a.left == *b.left) || !(*a.right == *b.right)) throw std::invalid_argument("alphabet mismatch");
  TensorPoly out{a.left, a.right, {}};
  for (auto& [x, c] : a.terms)
    for (auto& [y, d] : b.terms) {
      auto ls = shuffle_words(x.first, y.first);
      auto rs = shuffle_words(x.second, y.second);
      for (auto& [u, m] : ls)
        for (auto& [v, n] : rs) out.add(u, v, c * d * (m * n));
    }
  return out;
}

AlphabetPtr iota12_left() {
  static const auto a = std::make_shared<const Alphabet>(std::vector<std::string>{"1", "11", "12~"}, Letter{1},
                                                         Letter{0}, ".");
  return a;
}
AlphabetPtr iota12_right() {
  static const auto a =
      std::make_shared<const Alphabet>(std::vector<std::string>{"2", "22"}, Letter{1}, Letter{0}, ".");
  return a;
}
AlphabetPtr iota21_left() {
  static const auto a = std::make_shared<const Alphabet>(std::vector<std::string>{"2", "22", "12~"}, Letter{1},
                                                         Letter{0}, ".");
  return a;
}
AlphabetPtr iota21_right() {
  static const auto a =
      std::make_shared<const Alphabet>(std::vector<std::string>{"1", "11"}, Letter{1}, Letter{0}, ".");
  return a;
}

namespace {

// left_map / right_map send five-alphabet letters to the image alphabets (-1: not allowed).
TensorPoly split_terms(const ShufflePoly& phi, const std::array<int, 5>& left_map,
                       const std::array<int, 5>& right_map, AlphabetPtr la, AlphabetPtr ra) {
  TensorPoly out{std::move(la), std::move(ra), {}};
  for (auto& [w, c] : phi.terms()) {
    std::size_t i = 0;
    Word a, b;
    while (i < w.size() && left_map[w[i]] >= 0) a.push_back(static_cast<Letter>(left_map[w[i++]]));
    bool ok = true;
    for (; i < w.size(); ++i) {
      if (right_map[w[i]] < 0) {
        ok = false;
        break;
      }
      b.push_back(static_cast<Letter>(right_map[w[i]]));
    }
    if (ok) out.add(a, b, c);
  }
  return out;
}

void require_cic(const ShufflePoly& phi, const WedgeCoordinates& wc) {
  require_five(phi);
  if (!satisfies_cic(phi, wc)) throw std::invalid_argument("iota: element does not satisfy CIC");
}

}  // namespace

TensorPoly iota_12(const ShufflePoly& phi, const WedgeCoordinates& wc) {
  require_cic(phi, wc);
  return split_terms(phi, {0, 1, -1, -1, 2}, {-1, -1, 0, 1, -1}, iota12_left(), iota12_right());
}

TensorPoly iota_21(const ShufflePoly& phi, const WedgeCoordinates& wc) {
  require_cic(phi, wc);
  return split_terms(phi, {-1, -1, 0, 1, 2}, {0, 1, -1, -1, -1}, iota21_left(), iota21_right());
}

}  // namespace kz
