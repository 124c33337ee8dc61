#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace kz {

using Rational = mpq_class;
using Letter = std::uint8_t;
using Word = std::vector<Letter>;

std::string to_string(const Rational& q);
Rational parse_rational(std::string_view s);

// Letters are identified by their position. Tokens are printed either
// concatenated (single-character alphabets) or joined with `separator`.
class Alphabet {
 public:
  Alphabet(std::vector<std::string> tokens, std::optional<Letter> left_reg,
           std::optional<Letter> right_reg, std::string separator = "");

  // {xi0, xi1} with tokens "0","1"; xi1 regularizes on the left, xi0 on the right.
  static std::shared_ptr<const Alphabet> binary();
  // {xi1, xi11, xi2, xi22, xi12}, tokens "1","11","2","22","12", dot separated.
  static std::shared_ptr<const Alphabet> five();

  std::size_t size() const { return tokens_.size(); }
  const std::vector<std::string>& tokens() const { return tokens_; }
  const std::string& separator() const { return separator_; }
  std::optional<Letter> left_reg() const { return left_reg_; }
  std::optional<Letter> right_reg() const { return right_reg_; }

  std::string format(const Word& w) const;
  Word parse(std::string_view text) const;

  bool operator==(const Alphabet& o) const;

 private:
  std::vector<std::string> tokens_;
  std::optional<Letter> left_reg_, right_reg_;
  std::string separator_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

// Words ordered by length first, then lexicographically.
struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

class ShufflePoly {
 public:
  using Terms = std::map<Word, Rational, WordLess>;

  explicit ShufflePoly(AlphabetPtr alphabet);
  ShufflePoly(AlphabetPtr alphabet, const Word& w, Rational c = 1);

  static ShufflePoly one(AlphabetPtr alphabet) { return {std::move(alphabet), Word{}}; }

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Word& w) const;
  void add(const Word& w, const Rational& c);
  int max_weight() const;

  ShufflePoly& operator+=(const ShufflePoly& o);
  ShufflePoly& operator-=(const ShufflePoly& o);
  ShufflePoly& operator*=(const Rational& c);
  friend ShufflePoly operator+(ShufflePoly a, const ShufflePoly& b) { return a += b; }
  friend ShufflePoly operator-(ShufflePoly a, const ShufflePoly& b) { return a -= b; }
  friend ShufflePoly operator*(const Rational& c, ShufflePoly a) { return a *= c; }
  bool operator==(const ShufflePoly& o) const;

  std::string str() const;
  nlohmann::json to_json() const;
  static ShufflePoly from_json(AlphabetPtr alphabet, const nlohmann::json& j);

 private:
  void check_same(const ShufflePoly& o) const;

  AlphabetPtr alphabet_;
  Terms terms_;
};

// Multiset of shuffles of two words, as word -> multiplicity.
std::map<Word, long, WordLess> shuffle_words(const Word& a, const Word& b);

ShufflePoly shuffle_product(const ShufflePoly& p, const ShufflePoly& q);
ShufflePoly shuffle_power(const ShufflePoly& p, int n);

// Components w_j (j = 0..) with p = sum_j w_j ⧢ r^j, every w_j free of words
// ending in the right-regularizing letter r.
std::vector<ShufflePoly> decompose_right(const ShufflePoly& p);
// Components v_i with p = sum_i l^i ⧢ v_i, v_i free of words starting with l.
// Words ending in r stay so only if the input had them.
std::vector<ShufflePoly> decompose_left(const ShufflePoly& p);

ShufflePoly reg0(const ShufflePoly& p);
ShufflePoly reg10(const ShufflePoly& p);

// Letter swap xi0 <-> xi1 composed with reversal. Binary alphabet only.
ShufflePoly tau(const ShufflePoly& p);
Word tau(const Word& w);

// Composition (k1,...,kr) <-> xi0^{k1-1} xi1 ... xi0^{kr-1} xi1.
Word word_from_composition(const std::vector<int>& k);
std::vector<int> composition_of(const Word& w);
std::vector<int> parse_composition(std::string_view text);

// All words of exactly the given length over an alphabet of `letters` letters.
std::vector<Word> all_words(std::size_t letters, int length);

}  // namespace kz
