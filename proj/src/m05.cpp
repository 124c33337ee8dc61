#include "kz/m05.hpp"

#include <sstream>
#include <stdexcept>

#include "kz/linalg.hpp"

namespace kz {

GeneratorSet m05_generators() {
  static const GeneratorSet g({"X1", "X11", "X2", "X22", "X12"});
  return g;
}

bool Degree1Element::is_zero() const {
  for (auto& x : c_)
    if (x != 0) return false;
  return true;
}

std::string Degree1Element::str() const {
  static const char* names[] = {"X1", "X11", "X2", "X22", "X12"};
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < 5; ++i) {
    if (c_[i] == 0) continue;
    if (c_[i] < 0) os << (first ? "-" : " - ");
    else if (!first) os << " + ";
    Rational a = abs(c_[i]);
    if (a != 1) os << to_string(a) << "*";
    os << names[i];
    first = false;
  }
  return first ? "0" : os.str();
}

Degree1Element apply(const LinearMap5& m, const Degree1Element& x) {
  Degree1Element out;
  for (int i = 0; i < 5; ++i)
    if (x[i] != 0) out += x[i] * m[i];
  return out;
}

LinearMap5 compose(const LinearMap5& outer, const LinearMap5& inner) {
  LinearMap5 out;
  for (int i = 0; i < 5; ++i) out[i] = apply(outer, inner[i]);
  return out;
}

LinearMap5 identity_map5() {
  LinearMap5 m;
  for (Letter i = 0; i < 5; ++i) m[i] = Degree1Element::basis(i);
  return m;
}

namespace {

const std::vector<std::pair<int, int>>& omega_pairs() {
  static const std::vector<std::pair<int, int>> p = {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3},
                                                     {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}};
  return p;
}

int pair_index(int i, int j) {
  if (i > j) std::swap(i, j);
  const auto& p = omega_pairs();
  for (std::size_t k = 0; k < p.size(); ++k)
    if (p[k] == std::make_pair(i, j)) return static_cast<int>(k);
  throw std::invalid_argument("Omega index outside 1..5 or i == j");
}

// Column k holds the X-basis expression of the k-th Omega.
const std::vector<Degree1Element>& omega_table() {
  static const std::vector<Degree1Element> table = [] {
    // Unknowns: the ten Omega_ij. Rows 0..4: sum_j Omega_ij = 0. Rows 5..9:
    // defining expressions equal X_g.
    RMatrix M(10, RVector(10, 0));
    for (int i = 1; i <= 5; ++i)
      for (int j = 1; j <= 5; ++j)
        if (i != j) M[i - 1][pair_index(i, j)] = 1;
    for (Letter g = 0; g < 5; ++g)
      for (auto& [ij, c] : basis_in_omega(g)) M[5 + g][pair_index(ij.first, ij.second)] = c;
    std::vector<Degree1Element> out(10);
    for (Letter g = 0; g < 5; ++g) {
      RVector rhs(10, 0);
      rhs[5 + g] = 1;
      auto x = solve(M, rhs, 10);
      if (!x) throw std::logic_error("Omega system is singular");
      for (int k = 0; k < 10; ++k) out[k][g] = (*x)[k];
    }
    return out;
  }();
  return table;
}

}  // namespace

std::map<std::pair<int, int>, Rational> basis_in_omega(Letter g) {
  switch (g) {
    case kX1: return {{{1, 2}, 1}, {{1, 3}, 1}, {{2, 3}, 1}};
    case kX11: return {{{1, 4}, -1}};
    case kX2: return {{{2, 3}, 1}};
    case kX22: return {{{1, 2}, -1}};
    case kX12: return {{{2, 4}, -1}};
  }
  throw std::invalid_argument("unknown generator");
}

Degree1Element omega_to_basis(int i, int j) { return omega_table().at(pair_index(i, j)); }

LinearMap5 induced_by_permutation(const std::array<int, 5>& p) {
  LinearMap5 m;
  for (Letter g = 0; g < 5; ++g) {
    Degree1Element img;
    for (auto& [ij, c] : basis_in_omega(g)) img += c * omega_to_basis(p[ij.first - 1], p[ij.second - 1]);
    m[g] = img;
  }
  return m;
}

const LinearMap5& sigma_star_inv_map() {
  static const LinearMap5 m = induced_by_permutation({5, 4, 1, 3, 2});
  return m;
}

Degree1Element sigma_star_inv(const Degree1Element& x) { return apply(sigma_star_inv_map(), x); }

const LinearMap5& tau_star_map() {
  static const LinearMap5 m = {
      Degree1Element::of({1, 0, 0, 0, 0}),    // X1
      Degree1Element::of({1, -1, -1, 0, 0}),  // X11 -> X1 - X11 - X2
      Degree1Element::of({0, 0, 1, 0, 0}),    // X2
      Degree1Element::of({-1, 0, 1, -1, 0}),  // X22 -> -X1 + X2 - X22
      Degree1Element::of({0, 1, 0, 1, 1}),    // X12 -> X11 + X22 + X12
  };
  return m;
}

Degree1Element tau_star(const Degree1Element& x) { return apply(tau_star_map(), x); }

long dim_degree(int s) {
  if (s < 0) throw std::invalid_argument("negative degree");
  long total = 0;
  for (int a = 0; a <= s; ++a) {
    long t = 1;
    for (int i = 0; i < a; ++i) t *= 3;
    for (int i = 0; i < s - a; ++i) t *= 2;
    total += t;
  }
  return total;
}

namespace {
const char* kNames[] = {"X1", "X11", "X2", "X22", "X12"};

std::string join(const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += '.';
    s += kNames[w[i]];
  }
  return s;
}
}  // namespace

std::string PbwMonomial::str() const { return join(left) + "|" + join(right); }

PbwMonomial PbwMonomial::parse(std::string_view text) {
  auto bar = text.find('|');
  if (bar == std::string_view::npos) throw std::invalid_argument("PBW monomial needs '|'");
  auto g = m05_generators();
  PbwMonomial m{g.parse(text.substr(0, bar)), g.parse(text.substr(bar + 1))};
  for (Letter l : m.left)
    if (!is_left_letter(l)) throw std::invalid_argument("right letter in left word");
  for (Letter l : m.right)
    if (is_left_letter(l)) throw std::invalid_argument("left letter in right word");
  return m;
}

const std::vector<std::pair<Word, int>>& commutator_table(Letter r, Letter l) {
  using V = std::vector<std::pair<Word, int>>;
  // [X11, X12] and [X1, X12] as left words.
  static const V zero;
  static const V c11_12 = {{{kX11, kX12}, 1}, {{kX12, kX11}, -1}};
  static const V m11_12 = {{{kX11, kX12}, -1}, {{kX12, kX11}, 1}};
  static const V x2_12 = {{{kX1, kX12}, 1}, {{kX12, kX1}, -1}, {{kX11, kX12}, -1}, {{kX12, kX11}, 1}};
  if (is_left_letter(r) || !is_left_letter(l)) throw std::invalid_argument("commutator_table: need [right, left]");
  if (r == kX2) return l == kX12 ? x2_12 : zero;
  // r == kX22
  if (l == kX11) return c11_12;
  if (l == kX12) return m11_12;
  return zero;
}

M05Series<Rational> normal_form_by_rewriting(const Word& w, RewriteOrder order, int cap) {
  if (static_cast<int>(w.size()) > cap) throw std::invalid_argument("normal_form: degree overflow");
  std::map<Word, Rational, WordLess> pending{{w, 1}}, done;
  auto add = [](auto& map, const Word& x, const Rational& c) {
    auto [it, ins] = map.try_emplace(x, c);
    if (!ins) {
      it->second += c;
      if (it->second == 0) map.erase(it);
    }
  };
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Word& x = node.key();
    const Rational& c = node.mapped();
    int pos = -1;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
      if (!is_left_letter(x[i]) && is_left_letter(x[i + 1])) {
        pos = static_cast<int>(i);
        if (order == RewriteOrder::Leftmost) break;
      }
    }
    if (pos < 0) {
      add(done, x, c);
      continue;
    }
    Word swapped = x;
    std::swap(swapped[pos], swapped[pos + 1]);
    add(pending, swapped, c);
    for (auto& [cw, k] : commutator_table(x[pos], x[pos + 1])) {
      Word y(x.begin(), x.begin() + pos);
      y.insert(y.end(), cw.begin(), cw.end());
      y.insert(y.end(), x.begin() + pos + 2, x.end());
      add(pending, y, c * k);
    }
  }
  M05Series<Rational> out(cap);
  for (auto& [x, c] : done) {
    std::size_t split = 0;
    while (split < x.size() && is_left_letter(x[split])) ++split;
    out.add(PbwMonomial{Word(x.begin(), x.begin() + split), Word(x.begin() + split, x.end())}, c);
  }
  return out;
}

}  // namespace kz
