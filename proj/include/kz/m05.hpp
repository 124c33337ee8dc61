#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "kz/report.hpp"
#include "kz/series.hpp"
#include "kz/shuffle.hpp"

namespace kz {

// Generator indices in the ordered basis (X1, X11, X2, X22, X12).
enum M05Gen : Letter { kX1 = 0, kX11 = 1, kX2 = 2, kX22 = 3, kX12 = 4 };

inline bool is_left_letter(Letter l) { return l == kX1 || l == kX11 || l == kX12; }
GeneratorSet m05_generators();

class Degree1Element {
 public:
  Degree1Element() { c_.fill(Rational(0)); }
  static Degree1Element basis(Letter g) {
    Degree1Element e;
    e.c_.at(g) = 1;
    return e;
  }
  static Degree1Element of(std::array<long, 5> c) {
    Degree1Element e;
    for (int i = 0; i < 5; ++i) e.c_[i] = c[i];
    return e;
  }

  const Rational& operator[](std::size_t i) const { return c_.at(i); }
  Rational& operator[](std::size_t i) { return c_.at(i); }

  Degree1Element& operator+=(const Degree1Element& o) {
    for (int i = 0; i < 5; ++i) c_[i] += o.c_[i];
    return *this;
  }
  Degree1Element& operator-=(const Degree1Element& o) {
    for (int i = 0; i < 5; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  friend Degree1Element operator+(Degree1Element a, const Degree1Element& b) { return a += b; }
  friend Degree1Element operator-(Degree1Element a, const Degree1Element& b) { return a -= b; }
  friend Degree1Element operator*(const Rational& k, Degree1Element a) {
    for (auto& x : a.c_) x *= k;
    return a;
  }
  bool operator==(const Degree1Element& o) const { return c_ == o.c_; }
  bool is_zero() const;
  std::string str() const;

 private:
  std::array<Rational, 5> c_;
};

// Images of the five basis vectors.
using LinearMap5 = std::array<Degree1Element, 5>;
Degree1Element apply(const LinearMap5& m, const Degree1Element& x);
LinearMap5 compose(const LinearMap5& outer, const LinearMap5& inner);
LinearMap5 identity_map5();

// Omega_ij in the X basis, 1 <= i < j <= 5 (either order accepted).
Degree1Element omega_to_basis(int i, int j);
// The defining expression of X_g as a combination of Omega_ij, keyed by (i, j).
std::map<std::pair<int, int>, Rational> basis_in_omega(Letter g);

// Omega_ij -> Omega_{sigma(i) sigma(j)} with sigma = (1 2 3 4 5 -> 5 4 1 3 2).
const LinearMap5& sigma_star_inv_map();
Degree1Element sigma_star_inv(const Degree1Element& x);
// The tabulated involution attached to tau = (23)(45).
const LinearMap5& tau_star_map();
Degree1Element tau_star(const Degree1Element& x);
// Map induced on the X basis by Omega_ij -> Omega_{p(i) p(j)}.
LinearMap5 induced_by_permutation(const std::array<int, 5>& p);

long dim_degree(int s);

struct PbwMonomial {
  Word left;   // over {X1, X11, X12}
  Word right;  // over {X2, X22}

  int degree() const { return static_cast<int>(left.size() + right.size()); }
  auto operator<=>(const PbwMonomial&) const = default;
  std::string str() const;
  static PbwMonomial parse(std::string_view text);
};

// Left-block commutator [r, l] for a right letter r and left letter l, as a
// combination of left words of length 2.
const std::vector<std::pair<Word, int>>& commutator_table(Letter r, Letter l);

template <class T>
class M05Series {
 public:
  using Terms = std::map<PbwMonomial, T>;

  explicit M05Series(int cap) : cap_(cap) {
    if (cap < 0) throw std::invalid_argument("negative degree cap");
  }
  static M05Series one(int cap) {
    M05Series s(cap);
    s.add({}, T(1));
    return s;
  }
  static M05Series linear(const Degree1Element& x, int cap) {
    M05Series s(cap);
    for (Letter g = 0; g < 5; ++g)
      if (x[g] != 0) s.add(letter_monomial(g), to_scalar(x[g]));
    return s;
  }

  int cap() const { return cap_; }
  const Terms& terms() const { return terms_; }

  T coefficient(const PbwMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? T(0) : it->second;
  }
  void add(const PbwMonomial& m, const T& c) {
    if (m.degree() > cap_ || c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  M05Series left_multiply(Letter x) const {
    M05Series out(cap_);
    for (auto& [m, c] : terms_) {
      if (m.degree() >= cap_) continue;
      if (is_left_letter(x)) {
        PbwMonomial n{prepend(x, m.left), m.right};
        out.add(n, c);
        continue;
      }
      out.add(PbwMonomial{m.left, prepend(x, m.right)}, c);
      // x L = L x + D_x(L), D_x the derivation extending [x, .].
      for (std::size_t i = 0; i < m.left.size(); ++i)
        for (auto& [w, k] : commutator_table(x, m.left[i])) {
          Word nl(m.left.begin(), m.left.begin() + i);
          nl.insert(nl.end(), w.begin(), w.end());
          nl.insert(nl.end(), m.left.begin() + i + 1, m.left.end());
          out.add(PbwMonomial{std::move(nl), m.right}, T(k) * c);
        }
    }
    return out;
  }

  M05Series left_multiply(const Degree1Element& x) const {
    M05Series out(cap_);
    for (Letter g = 0; g < 5; ++g)
      if (x[g] != 0) out += to_scalar(x[g]) * left_multiply(g);
    return out;
  }

  M05Series& operator+=(const M05Series& o) {
    for (auto& [m, c] : o.terms_) add(m, c);
    if (o.cap_ < cap_) truncate(o.cap_);
    return *this;
  }
  M05Series& operator-=(const M05Series& o) {
    for (auto& [m, c] : o.terms_) add(m, -c);
    if (o.cap_ < cap_) truncate(o.cap_);
    return *this;
  }
  M05Series& operator*=(const T& k) {
    if (k == 0) terms_.clear();
    for (auto& [m, c] : terms_) c *= k;
    return *this;
  }
  friend M05Series operator+(M05Series a, const M05Series& b) { return a += b; }
  friend M05Series operator-(M05Series a, const M05Series& b) { return a -= b; }
  friend M05Series operator*(const T& k, M05Series a) { return a *= k; }

  friend M05Series operator*(const M05Series& a, const M05Series& b) {
    int cap = std::min(a.cap_, b.cap_);
    M05Series out(cap);
    // Group a's monomials by right word; R·b is shared, then left words prepend.
    std::map<Word, std::vector<std::pair<const Word*, T>>, WordLess> by_right;
    for (auto& [m, c] : a.terms_) by_right[m.right].emplace_back(&m.left, c);
    for (auto& [R, lefts] : by_right) {
      M05Series s = b.truncated(cap);
      for (std::size_t i = R.size(); i-- > 0;) s = s.left_multiply(R[i]);
      for (auto& [L, c] : lefts)
        for (auto& [m, v] : s.terms_) {
          if (m.degree() + static_cast<int>(L->size()) > cap) continue;
          Word nl = *L;
          nl.insert(nl.end(), m.left.begin(), m.left.end());
          out.add(PbwMonomial{std::move(nl), m.right}, c * v);
        }
    }
    return out;
  }

  M05Series truncated(int cap) const {
    M05Series s = *this;
    s.truncate(cap);
    return s;
  }

  std::vector<double> max_abs_by_degree() const {
    std::vector<double> out(cap_ + 1, 0.0);
    for (auto& [m, c] : terms_) out[m.degree()] = std::max(out[m.degree()], magnitude(c));
    return out;
  }

  bool operator==(const M05Series& o) const { return cap_ == o.cap_ && terms_ == o.terms_; }

  nlohmann::json to_json() const {
    nlohmann::json t = nlohmann::json::object();
    for (auto& [m, c] : terms_) {
      if constexpr (std::is_same_v<T, Rational>) t[m.str()] = to_string(c);
      else t[m.str()] = c;
    }
    return {{"cap", cap_}, {"terms", t}};
  }

  static T to_scalar(const Rational& q) {
    if constexpr (std::is_same_v<T, Rational>) return q;
    else return q.get_d();
  }

 private:
  static PbwMonomial letter_monomial(Letter g) {
    return is_left_letter(g) ? PbwMonomial{Word{g}, {}} : PbwMonomial{{}, Word{g}};
  }
  static Word prepend(Letter x, const Word& w) {
    Word out;
    out.reserve(w.size() + 1);
    out.push_back(x);
    out.insert(out.end(), w.begin(), w.end());
    return out;
  }
  void truncate(int cap) {
    cap_ = std::min(cap_, cap);
    for (auto it = terms_.begin(); it != terms_.end();)
      it = it->first.degree() > cap_ ? terms_.erase(it) : std::next(it);
  }

  int cap_;
  Terms terms_;
};

// Normal form of a word in the five generators, by left multiplication.
template <class T>
M05Series<T> normal_form(const Word& w, int cap) {
  if (static_cast<int>(w.size()) > cap) throw std::invalid_argument("normal_form: degree overflow");
  M05Series<T> s = M05Series<T>::one(cap);
  for (std::size_t i = w.size(); i-- > 0;) {
    if (w[i] >= 5) throw std::invalid_argument("normal_form: unknown generator");
    s = s.left_multiply(w[i]);
  }
  return s;
}

// Product of degree-1 elements x_0 x_1 ... x_{k-1} in normal form.
template <class T>
M05Series<T> normal_form(const std::vector<Degree1Element>& factors, int cap) {
  M05Series<T> s = M05Series<T>::one(cap);
  for (std::size_t i = factors.size(); i-- > 0;) s = s.left_multiply(factors[i]);
  return s;
}

enum class RewriteOrder { Leftmost, Rightmost };

// Independent normal form by repeatedly rewriting r l -> l r + [r, l] at the
// leftmost or rightmost right-before-left position.
M05Series<Rational> normal_form_by_rewriting(const Word& w, RewriteOrder order, int cap);

// Homomorphism of a series over generators (A, B, ...) into the quotient algebra.
template <class T>
M05Series<T> substitute_m05(const TruncatedSeries<T>& a, const std::vector<Degree1Element>& images, int cap) {
  if (images.size() != a.rank()) throw std::invalid_argument("substitute_m05: one image per generator");
  int top = std::min(cap, a.cap());
  std::size_t g = a.rank();
  std::vector<M05Series<T>> level;
  for (int d = top; d >= 0; --d) {
    std::vector<M05Series<T>> cur;
    const auto& cd = a.degree(d);
    for (std::size_t i = 0; i < cd.size(); ++i) {
      M05Series<T> f(cap);
      f.add(PbwMonomial{}, cd[i]);
      if (d < top)
        for (std::size_t l = 0; l < g; ++l) f += level[i * g + l].left_multiply(images[l]);
      cur.push_back(std::move(f));
    }
    level = std::move(cur);
  }
  return level[0];
}

// Applies the algebra endomorphism determined by a linear map on generators.
template <class T>
M05Series<T> apply_map(const M05Series<T>& s, const LinearMap5& m) {
  M05Series<T> out(s.cap());
  for (auto& [mono, c] : s.terms()) {
    Word w = mono.left;
    w.insert(w.end(), mono.right.begin(), mono.right.end());
    std::vector<Degree1Element> f;
    for (Letter l : w) f.push_back(m[l]);
    out += c * normal_form<T>(f, s.cap());
  }
  return out;
}

// exp(x) for a degree-1 element with scalar weight.
template <class T>
M05Series<T> exp_m05(const Degree1Element& x, const T& t, int cap) {
  M05Series<T> out = M05Series<T>::one(cap), term = out;
  for (int k = 1; k <= cap; ++k) {
    term = term.left_multiply(x);
    term *= t / T(k);
    out += term;
  }
  return out;
}

// Phi^{(4)} ... Phi^{(0)} - 1 in the PBW basis, per degree.
CheckReport pentagon_check(int N, double tol = 1e-8);

}  // namespace kz
