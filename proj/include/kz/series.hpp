#pragma once

#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "kz/shuffle.hpp"

namespace kz {

class GeneratorSet {
 public:
  GeneratorSet(std::vector<std::string> names);

  static GeneratorSet x01() { return GeneratorSet({"X0", "X1"}); }
  // X0, X1, ..., Xm for the Schlesinger-type systems.
  static GeneratorSet indexed(int m);

  std::size_t size() const { return names_->size(); }
  const std::string& name(std::size_t i) const { return names_->at(i); }
  std::size_t index_of(std::string_view name) const;
  bool operator==(const GeneratorSet& o) const { return names_ == o.names_ || *names_ == *o.names_; }

  std::string format(const Word& w) const;
  Word parse(std::string_view text) const;

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

inline double magnitude(double x) { return std::fabs(x); }
inline double magnitude(const Rational& q) { return std::fabs(q.get_d()); }

// Dense graded series: degree d stores g^d coefficients, the first letter of a
// monomial being the most significant digit.
template <class T>
class TruncatedSeries {
 public:
  TruncatedSeries(GeneratorSet gens, int cap) : gens_(std::move(gens)), cap_(cap) {
    if (cap < 0) throw std::invalid_argument("negative degree cap");
    std::size_t n = 1;
    for (int d = 0; d <= cap; ++d) {
      c_.emplace_back(n, T(0));
      n *= gens_.size();
    }
  }

  static TruncatedSeries one(GeneratorSet gens, int cap) {
    TruncatedSeries s(std::move(gens), cap);
    s.c_[0][0] = T(1);
    return s;
  }
  static TruncatedSeries generator(GeneratorSet gens, int cap, std::size_t g, T coeff = T(1)) {
    TruncatedSeries s(std::move(gens), cap);
    if (cap >= 1) s.c_[1].at(g) = coeff;
    return s;
  }
  static TruncatedSeries linear(GeneratorSet gens, int cap, const std::vector<T>& coeffs) {
    TruncatedSeries s(std::move(gens), cap);
    if (coeffs.size() != s.gens_.size()) throw std::invalid_argument("coefficient count mismatch");
    if (cap >= 1) s.c_[1] = coeffs;
    return s;
  }

  const GeneratorSet& generators() const { return gens_; }
  int cap() const { return cap_; }
  std::size_t rank() const { return gens_.size(); }

  std::vector<T>& degree(int d) { return c_.at(d); }
  const std::vector<T>& degree(int d) const { return c_.at(d); }

  T coefficient(const Word& w) const {
    if (static_cast<int>(w.size()) > cap_) return T(0);
    return c_[w.size()][index(w)];
  }
  void set(const Word& w, const T& v) {
    if (static_cast<int>(w.size()) > cap_) throw std::out_of_range("monomial above cap");
    c_[w.size()][index(w)] = v;
  }

  std::size_t index(const Word& w) const {
    std::size_t i = 0;
    for (Letter l : w) {
      if (l >= gens_.size()) throw std::out_of_range("generator index");
      i = i * gens_.size() + l;
    }
    return i;
  }
  Word word(int d, std::size_t idx) const {
    Word w(d);
    for (int k = d - 1; k >= 0; --k) {
      w[k] = static_cast<Letter>(idx % gens_.size());
      idx /= gens_.size();
    }
    return w;
  }

  TruncatedSeries truncated(int cap) const {
    TruncatedSeries s(gens_, std::min(cap, cap_));
    for (int d = 0; d <= s.cap_; ++d) s.c_[d] = c_[d];
    return s;
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) { return axpy(o, T(1)); }
  TruncatedSeries& operator-=(const TruncatedSeries& o) { return axpy(o, T(-1)); }
  TruncatedSeries& operator*=(const T& k) {
    for (auto& v : c_)
      for (auto& x : v) x *= k;
    return *this;
  }
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const T& k, TruncatedSeries a) { return a *= k; }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check_gens(b);
    TruncatedSeries out(a.gens_, std::min(a.cap_, b.cap_));
    std::vector<std::size_t> pw(out.cap_ + 1, 1);
    for (int d = 1; d <= out.cap_; ++d) pw[d] = pw[d - 1] * a.gens_.size();
    for (int da = 0; da <= out.cap_; ++da)
      for (int db = 0; da + db <= out.cap_; ++db) {
        auto& dst = out.c_[da + db];
        const auto& av = a.c_[da];
        const auto& bv = b.c_[db];
        for (std::size_t i = 0; i < av.size(); ++i) {
          if (av[i] == 0) continue;
          std::size_t base = i * pw[db];
          for (std::size_t j = 0; j < bv.size(); ++j)
            if (bv[j] != 0) dst[base + j] += av[i] * bv[j];
        }
      }
    return out;
  }

  bool operator==(const TruncatedSeries& o) const { return gens_ == o.gens_ && cap_ == o.cap_ && c_ == o.c_; }

  // Largest coefficient magnitude per degree.
  std::vector<double> max_abs_by_degree() const {
    std::vector<double> out;
    for (auto& v : c_) {
      double m = 0;
      for (auto& x : v) m = std::max(m, magnitude(x));
      out.push_back(m);
    }
    return out;
  }

  void check_gens(const TruncatedSeries& o) const {
    if (!(gens_ == o.gens_)) throw std::invalid_argument("generator-set mismatch");
  }

 private:
  TruncatedSeries& axpy(const TruncatedSeries& o, const T& k) {
    check_gens(o);
    if (o.cap_ < cap_) *this = truncated(o.cap_);
    for (int d = 0; d <= cap_; ++d)
      for (std::size_t i = 0; i < c_[d].size(); ++i) c_[d][i] += k * o.c_[d][i];
    return *this;
  }

  GeneratorSet gens_;
  int cap_;
  std::vector<std::vector<T>> c_;
};

template <class T>
TruncatedSeries<T> invert(const TruncatedSeries<T>& a) {
  const T& a0 = a.degree(0)[0];
  if (a0 == 0) throw std::domain_error("invert: zero constant term");
  TruncatedSeries<T> b(a.generators(), a.cap());
  T inv0 = T(1) / a0;
  b.degree(0)[0] = inv0;
  std::size_t g = a.rank();
  std::vector<std::size_t> pw(a.cap() + 1, 1);
  for (int d = 1; d <= a.cap(); ++d) pw[d] = pw[d - 1] * g;
  // b_d = -a0^{-1} sum_{k=1..d} a_k b_{d-k}
  for (int d = 1; d <= a.cap(); ++d) {
    auto& bd = b.degree(d);
    for (int k = 1; k <= d; ++k) {
      const auto& ak = a.degree(k);
      const auto& br = b.degree(d - k);
      for (std::size_t i = 0; i < ak.size(); ++i) {
        if (ak[i] == 0) continue;
        for (std::size_t j = 0; j < br.size(); ++j)
          if (br[j] != 0) bd[i * pw[d - k] + j] += ak[i] * br[j];
      }
    }
    for (auto& x : bd) x *= -inv0;
  }
  return b;
}

template <class T>
void require_degree1(const TruncatedSeries<T>& x, const char* what) {
  for (int d = 0; d <= x.cap(); ++d) {
    if (d == 1) continue;
    for (auto& v : x.degree(d))
      if (v != 0) throw std::invalid_argument(std::string(what) + ": element is not purely degree 1");
  }
}

// Left multiplication by a degree-1 element given by its coefficients.
template <class T>
TruncatedSeries<T> left_mul_linear(const std::vector<T>& x, const TruncatedSeries<T>& s) {
  TruncatedSeries<T> out(s.generators(), s.cap());
  for (int d = 0; d < s.cap(); ++d) {
    const auto& src = s.degree(d);
    auto& dst = out.degree(d + 1);
    std::size_t n = src.size();
    for (std::size_t g = 0; g < x.size(); ++g) {
      if (x[g] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) dst[g * n + j] += x[g] * src[j];
    }
  }
  return out;
}

template <class T>
TruncatedSeries<T> exp_deg1(const TruncatedSeries<T>& x, int cap) {
  require_degree1(x, "exp_deg1");
  std::vector<T> lin = x.cap() >= 1 ? x.degree(1) : std::vector<T>(x.rank(), T(0));
  TruncatedSeries<T> out = TruncatedSeries<T>::one(x.generators(), cap);
  TruncatedSeries<T> term = out;
  for (int k = 1; k <= cap; ++k) {
    term = left_mul_linear(lin, term);
    term *= T(1) / T(k);
    out += term;
  }
  return out;
}

// Algebra homomorphism sending generator i of `a` to images[i].
template <class T>
TruncatedSeries<T> substitute(const TruncatedSeries<T>& a, const std::vector<TruncatedSeries<T>>& images) {
  if (images.size() != a.rank()) throw std::invalid_argument("substitute: one image per generator");
  const GeneratorSet& tg = images.front().generators();
  std::vector<std::vector<T>> lin;
  for (auto& im : images) {
    im.check_gens(images.front());
    require_degree1(im, "substitute");
    lin.push_back(im.cap() >= 1 ? im.degree(1) : std::vector<T>(tg.size(), T(0)));
  }
  // Horner over the prefix tree: F(p) = c_p + sum_g img(g) F(p g).
  std::size_t g = a.rank();
  std::vector<TruncatedSeries<T>> level;
  for (int d = a.cap(); d >= 0; --d) {
    std::vector<TruncatedSeries<T>> cur;
    const auto& cd = a.degree(d);
    cur.reserve(cd.size());
    for (std::size_t i = 0; i < cd.size(); ++i) {
      TruncatedSeries<T> f = TruncatedSeries<T>::one(tg, a.cap());
      f *= cd[i];
      if (d < a.cap())
        for (std::size_t l = 0; l < g; ++l) f += left_mul_linear(lin[l], level[i * g + l]);
      cur.push_back(std::move(f));
    }
    level = std::move(cur);
  }
  return level[0];
}

template <class T>
TruncatedSeries<T> antipode(const TruncatedSeries<T>& a) {
  TruncatedSeries<T> out(a.generators(), a.cap());
  for (int d = 0; d <= a.cap(); ++d) {
    T sign = d % 2 ? T(-1) : T(1);
    for (std::size_t i = 0; i < a.degree(d).size(); ++i) {
      Word w = a.word(d, i);
      std::reverse(w.begin(), w.end());
      out.degree(d)[out.index(w)] = sign * a.degree(d)[i];
    }
  }
  return out;
}

// Checks c_u c_v = sum_w <w, u ⧢ v> c_w for every pair with |u|+|v| <= cap.
template <class T>
bool is_grouplike(const TruncatedSeries<T>& a, double tol = 0.0) {
  auto close = [tol](const T& x, const T& y) {
    if constexpr (std::is_same_v<T, Rational>) {
      (void)tol;
      return x == y;
    } else {
      return magnitude(x - y) <= tol;
    }
  };
  if (!close(a.degree(0)[0], T(1))) return false;
  for (int du = 1; du <= a.cap(); ++du)
    for (int dv = du; du + dv <= a.cap(); ++dv)
      for (std::size_t i = 0; i < a.degree(du).size(); ++i)
        for (std::size_t j = 0; j < a.degree(dv).size(); ++j) {
          T lhs = T(0);
          for (auto& [w, m] : shuffle_words(a.word(du, i), a.word(dv, j)))
            lhs += T(m) * a.degree(du + dv)[a.index(w)];
          T rhs = a.degree(du)[i] * a.degree(dv)[j];
          if (!close(lhs, rhs)) return false;
        }
  return true;
}

template <class T>
std::vector<double> residual_by_degree(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  return (a - b).max_abs_by_degree();
}

template <class T>
nlohmann::json to_json(const TruncatedSeries<T>& s) {
  nlohmann::json terms = nlohmann::json::object();
  for (int d = 0; d <= s.cap(); ++d)
    for (std::size_t i = 0; i < s.degree(d).size(); ++i) {
      const T& v = s.degree(d)[i];
      if (v == 0) continue;
      std::string key = s.generators().format(s.word(d, i));
      if constexpr (std::is_same_v<T, Rational>) terms[key] = to_string(v);
      else terms[key] = v;
    }
  return {{"cap", s.cap()}, {"terms", terms}};
}

template <class T>
TruncatedSeries<T> series_from_json(const GeneratorSet& gens, const nlohmann::json& j) {
  TruncatedSeries<T> s(gens, j.at("cap").get<int>());
  for (auto& [k, v] : j.at("terms").items()) {
    if constexpr (std::is_same_v<T, Rational>) {
      s.set(gens.parse(k), v.is_string() ? parse_rational(v.template get<std::string>()) : Rational(v.template get<long>()));
    } else {
      s.set(gens.parse(k), v.template get<double>());
    }
  }
  return s;
}

}  // namespace kz
