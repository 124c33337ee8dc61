#include "kz/shuffle.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kz {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view s) {
  Rational q;
  if (q.set_str(std::string(s), 10) != 0) throw std::invalid_argument("bad rational: " + std::string(s));
  q.canonicalize();
  return q;
}

Alphabet::Alphabet(std::vector<std::string> tokens, std::optional<Letter> left_reg,
                   std::optional<Letter> right_reg, std::string separator)
    : tokens_(std::move(tokens)), left_reg_(left_reg), right_reg_(right_reg),
      separator_(std::move(separator)) {
  for (std::size_t i = 0; i < tokens_.size(); ++i)
    for (std::size_t j = i + 1; j < tokens_.size(); ++j)
      if (tokens_[i] == tokens_[j]) throw std::invalid_argument("duplicate letter " + tokens_[i]);
  if (tokens_.size() > 255) throw std::invalid_argument("alphabet too large");
  auto member = [&](std::optional<Letter> l) { return !l || *l < tokens_.size(); };
  if (!member(left_reg_) || !member(right_reg_))
    throw std::invalid_argument("designated letter outside alphabet");
  if (separator_.empty())
    for (auto& t : tokens_)
      if (t.size() != 1) throw std::invalid_argument("multi-character tokens need a separator");
}

std::shared_ptr<const Alphabet> Alphabet::binary() {
  static const auto a = std::make_shared<const Alphabet>(std::vector<std::string>{"0", "1"}, Letter{1},
                                                         Letter{0});
  return a;
}

std::shared_ptr<const Alphabet> Alphabet::five() {
  static const auto a = std::make_shared<const Alphabet>(
      std::vector<std::string>{"1", "11", "2", "22", "12"}, std::nullopt, std::nullopt, ".");
  return a;
}

std::string Alphabet::format(const Word& w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += separator_;
    out += tokens_.at(w[i]);
  }
  return out;
}

Word Alphabet::parse(std::string_view text) const {
  Word w;
  if (text.empty()) return w;
  auto lookup = [&](std::string_view tok) {
    for (std::size_t i = 0; i < tokens_.size(); ++i)
      if (tokens_[i] == tok) return static_cast<Letter>(i);
    throw std::invalid_argument("unknown letter '" + std::string(tok) + "'");
  };
  if (separator_.empty()) {
    for (char c : text) w.push_back(lookup(std::string_view(&c, 1)));
    return w;
  }
  std::size_t pos = 0;
  while (true) {
    auto next = text.find(separator_, pos);
    w.push_back(lookup(text.substr(pos, next == std::string_view::npos ? next : next - pos)));
    if (next == std::string_view::npos) break;
    pos = next + separator_.size();
  }
  return w;
}

bool Alphabet::operator==(const Alphabet& o) const {
  return tokens_ == o.tokens_ && left_reg_ == o.left_reg_ && right_reg_ == o.right_reg_ &&
         separator_ == o.separator_;
}

ShufflePoly::ShufflePoly(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

ShufflePoly::ShufflePoly(AlphabetPtr alphabet, const Word& w, Rational c) : alphabet_(std::move(alphabet)) {
  for (Letter l : w)
    if (l >= alphabet_->size()) throw std::invalid_argument("letter outside alphabet");
  add(w, c);
}

Rational ShufflePoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void ShufflePoly::add(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int ShufflePoly::max_weight() const {
  int m = 0;
  for (auto& [w, c] : terms_) m = std::max(m, static_cast<int>(w.size()));
  return m;
}

void ShufflePoly::check_same(const ShufflePoly& o) const {
  if (alphabet_ != o.alphabet_ && !(*alphabet_ == *o.alphabet_))
    throw std::invalid_argument("alphabet mismatch");
}

ShufflePoly& ShufflePoly::operator+=(const ShufflePoly& o) {
  check_same(o);
  for (auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

ShufflePoly& ShufflePoly::operator-=(const ShufflePoly& o) {
  check_same(o);
  for (auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

ShufflePoly& ShufflePoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

bool ShufflePoly::operator==(const ShufflePoly& o) const {
  return *alphabet_ == *o.alphabet_ && terms_ == o.terms_;
}

std::string ShufflePoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [w, c] : terms_) {
    std::string word = w.empty() ? "1" : alphabet_->format(w);
    if (c < 0) {
      os << (first ? "-" : " - ");
    } else if (!first) {
      os << " + ";
    }
    Rational a = abs(c);
    if (a != 1) os << to_string(a) << "*";
    os << word;
    first = false;
  }
  return os.str();
}

nlohmann::json ShufflePoly::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (auto& [w, c] : terms_) j[alphabet_->format(w)] = to_string(c);
  return j;
}

ShufflePoly ShufflePoly::from_json(AlphabetPtr alphabet, const nlohmann::json& j) {
  ShufflePoly p(alphabet);
  for (auto& [k, v] : j.items()) {
    Rational c = v.is_string() ? parse_rational(v.get<std::string>()) : Rational(v.get<long>());
    p.add(alphabet->parse(k), c);
  }
  return p;
}

std::map<Word, long, WordLess> shuffle_words(const Word& a, const Word& b) {
  // Table over suffixes: shuffles of a[i..] and b[j..].
  std::size_t n = a.size(), m = b.size();
  std::vector<std::vector<std::map<Word, long, WordLess>>> t(n + 1, std::vector<std::map<Word, long, WordLess>>(m + 1));
  for (std::size_t i = n + 1; i-- > 0;) {
    for (std::size_t j = m + 1; j-- > 0;) {
      auto& cell = t[i][j];
      if (i == n && j == m) {
        cell[Word{}] = 1;
        continue;
      }
      if (i < n)
        for (auto& [w, c] : t[i + 1][j]) {
          Word x;
          x.reserve(w.size() + 1);
          x.push_back(a[i]);
          x.insert(x.end(), w.begin(), w.end());
          cell[x] += c;
        }
      if (j < m)
        for (auto& [w, c] : t[i][j + 1]) {
          Word x;
          x.reserve(w.size() + 1);
          x.push_back(b[j]);
          x.insert(x.end(), w.begin(), w.end());
          cell[x] += c;
        }
    }
  }
  return std::move(t[0][0]);
}

ShufflePoly shuffle_product(const ShufflePoly& p, const ShufflePoly& q) {
  if (!(*p.alphabet() == *q.alphabet())) throw std::invalid_argument("alphabet mismatch");
  ShufflePoly out(p.alphabet());
  for (auto& [u, a] : p.terms())
    for (auto& [v, b] : q.terms()) {
      Rational ab = a * b;
      for (auto& [w, m] : shuffle_words(u, v)) out.add(w, ab * m);
    }
  return out;
}

ShufflePoly shuffle_power(const ShufflePoly& p, int n) {
  ShufflePoly out = ShufflePoly::one(p.alphabet());
  for (int i = 0; i < n; ++i) out = shuffle_product(out, p);
  return out;
}

namespace {

using Terms = ShufflePoly::Terms;
using Components = std::vector<Terms>;

void add_to(Terms& t, const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = t.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) t.erase(it);
  }
}

void axpy(Components& dst, const Components& src, const Rational& c, std::size_t shift = 0) {
  if (dst.size() < src.size() + shift) dst.resize(src.size() + shift);
  for (std::size_t j = 0; j < src.size(); ++j)
    for (auto& [w, v] : src[j]) add_to(dst[j + shift], w, c * v);
}

// Components of a single word with respect to trailing letter r.
class RightPeeler {
 public:
  explicit RightPeeler(Letter r) : r_(r) {}

  const Components& of(const Word& u) {
    if (auto it = memo_.find(u); it != memo_.end()) return it->second;
    std::size_t n = 0;
    while (n < u.size() && u[u.size() - 1 - n] == r_) ++n;
    Components out;
    if (n == 0) {
      out.resize(1);
      out[0][u] = 1;
    } else {
      // base ⧢ r = n·u + (words with exactly n-1 trailing r's)
      Word base(u.begin(), u.end() - 1);
      Components shifted;
      const Components& cb = of(base);
      for (std::size_t j = 0; j < cb.size(); ++j) {
        if (shifted.size() < j + 2) shifted.resize(j + 2);
        for (auto& [w, c] : cb[j]) add_to(shifted[j + 1], w, c * static_cast<long>(j + 1));
      }
      out = shifted;
      for (auto& [v, m] : shuffle_words(base, Word{r_})) {
        if (v == u) continue;
        Components cv = of(v);  // copy: memo may rehash
        axpy(out, cv, Rational(-m));
      }
      for (auto& t : out)
        for (auto& [w, c] : t) c /= static_cast<long>(n);
    }
    return memo_.emplace(u, std::move(out)).first->second;
  }

 private:
  Letter r_;
  std::map<Word, Components, WordLess> memo_;
};

Word reversed(const Word& w) { return Word(w.rbegin(), w.rend()); }

std::vector<ShufflePoly> to_polys(const AlphabetPtr& a, Components c) {
  std::vector<ShufflePoly> out;
  if (c.empty()) c.resize(1);
  for (auto& t : c) {
    ShufflePoly p(a);
    for (auto& [w, v] : t) p.add(w, v);
    out.push_back(std::move(p));
  }
  return out;
}

Components peel(const ShufflePoly& p, Letter r, bool mirror) {
  RightPeeler peeler(r);
  Components out(1);
  for (auto& [w, c] : p.terms()) axpy(out, peeler.of(mirror ? reversed(w) : w), c);
  if (mirror)
    for (auto& t : out) {
      Terms rt;
      for (auto& [w, c] : t) rt.emplace(reversed(w), c);
      t = std::move(rt);
    }
  while (out.size() > 1 && out.back().empty()) out.pop_back();
  return out;
}

}  // namespace

std::vector<ShufflePoly> decompose_right(const ShufflePoly& p) {
  auto r = p.alphabet()->right_reg();
  if (!r) throw std::invalid_argument("alphabet has no right-regularizing letter");
  return to_polys(p.alphabet(), peel(p, *r, false));
}

std::vector<ShufflePoly> decompose_left(const ShufflePoly& p) {
  auto l = p.alphabet()->left_reg();
  if (!l) throw std::invalid_argument("alphabet has no left-regularizing letter");
  return to_polys(p.alphabet(), peel(p, *l, true));
}

ShufflePoly reg0(const ShufflePoly& p) { return decompose_right(p)[0]; }

ShufflePoly reg10(const ShufflePoly& p) { return decompose_left(reg0(p))[0]; }

namespace {
void require_binary(const AlphabetPtr& a) {
  if (!(*a == *Alphabet::binary())) throw std::invalid_argument("tau needs the alphabet {xi0, xi1}");
}
}  // namespace

Word tau(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) l = static_cast<Letter>(1 - l);
  return out;
}

ShufflePoly tau(const ShufflePoly& p) {
  require_binary(p.alphabet());
  ShufflePoly out(p.alphabet());
  for (auto& [w, c] : p.terms()) out.add(tau(w), c);
  return out;
}

Word word_from_composition(const std::vector<int>& k) {
  Word w;
  for (int ki : k) {
    if (ki < 1) throw std::invalid_argument("composition entries must be >= 1");
    w.insert(w.end(), ki - 1, Letter{0});
    w.push_back(1);
  }
  return w;
}

std::vector<int> composition_of(const Word& w) {
  std::vector<int> k;
  int run = 1;
  for (Letter l : w) {
    if (l == 0) {
      ++run;
    } else {
      k.push_back(run);
      run = 1;
    }
  }
  if (run != 1) throw std::invalid_argument("word ends in xi0; no composition");
  return k;
}

std::vector<int> parse_composition(std::string_view text) {
  std::vector<int> k;
  if (text.empty()) return k;
  std::size_t pos = 0;
  while (true) {
    auto next = text.find(',', pos);
    auto tok = std::string(text.substr(pos, next == std::string_view::npos ? next : next - pos));
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad composition entry '" + tok + "'");
    }
    if (used != tok.size() || v < 1) throw std::invalid_argument("bad composition entry '" + tok + "'");
    k.push_back(v);
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return k;
}

std::vector<Word> all_words(std::size_t letters, int length) {
  std::vector<Word> out;
  Word w(length, 0);
  while (true) {
    out.push_back(w);
    int i = length - 1;
    while (i >= 0 && w[i] + 1u == letters) w[i--] = 0;
    if (i < 0) break;
    ++w[i];
  }
  return out;
}

}  // namespace kz
