#include "kz/series.hpp"

#include <stdexcept>

namespace kz {

GeneratorSet::GeneratorSet(std::vector<std::string> names)
    : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {
  for (std::size_t i = 0; i < names_->size(); ++i)
    for (std::size_t j = i + 1; j < names_->size(); ++j)
      if ((*names_)[i] == (*names_)[j]) throw std::invalid_argument("duplicate generator " + (*names_)[i]);
  if (names_->empty()) throw std::invalid_argument("empty generator set");
}

GeneratorSet GeneratorSet::indexed(int m) {
  std::vector<std::string> names;
  for (int i = 0; i <= m; ++i) names.push_back("X" + std::to_string(i));
  return GeneratorSet(std::move(names));
}

std::size_t GeneratorSet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_->size(); ++i)
    if ((*names_)[i] == name) return i;
  throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
}

std::string GeneratorSet::format(const Word& w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += '.';
    out += name(w[i]);
  }
  return out;
}

Word GeneratorSet::parse(std::string_view text) const {
  Word w;
  if (text.empty()) return w;
  std::size_t pos = 0;
  while (true) {
    auto next = text.find('.', pos);
    w.push_back(static_cast<Letter>(index_of(text.substr(pos, next == std::string_view::npos ? next : next - pos))));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return w;
}

}  // namespace kz
