#include "bialint/word.hpp"

#include <algorithm>
#include <cctype>

#include "bialint/errors.hpp"

namespace bialint {

Word Word::subword(std::size_t pos, std::size_t len) const {
  return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                  letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

bool Word::matches_at(const Word& pattern, std::size_t pos) const {
  if (pos + pattern.size() > size()) return false;
  return std::equal(pattern.begin(), pattern.end(), letters_.begin() + static_cast<std::ptrdiff_t>(pos));
}

std::optional<std::size_t> Word::find(const Word& pattern, std::size_t from) const {
  if (pattern.size() > size()) return std::nullopt;
  for (std::size_t pos = from; pos + pattern.size() <= size(); ++pos) {
    if (matches_at(pattern, pos)) return pos;
  }
  return std::nullopt;
}

Word Word::reversed() const { return Word(std::vector<Letter>(letters_.rbegin(), letters_.rend())); }

Word& Word::operator*=(const Word& other) {
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  return *this;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  return a.letters_ <=> b.letters_;
}

bool is_identifier(std::string_view name) {
  if (name.empty()) return false;
  const auto first = static_cast<unsigned char>(name.front());
  if (!std::isalpha(first) && first != '_') return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    const auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || u == '_';
  });
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!is_identifier(names_[i])) throw MalformedInput("invalid generator name '" + names_[i] + "'");
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) throw MalformedInput("duplicate generator '" + names_[i] + "'");
    }
  }
}

const std::string& Alphabet::name(Letter g) const {
  if (g >= names_.size()) throw MalformedInput("unknown generator index " + std::to_string(g));
  return names_[g];
}

std::optional<Letter> Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<Letter>(i);
  }
  return std::nullopt;
}

Letter Alphabet::at(std::string_view name) const {
  if (auto g = find(name)) return *g;
  throw MalformedInput("unknown generator '" + std::string(name) + "'");
}

std::string Alphabet::format(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += '.';
    out += name(w[i]);
  }
  return out;
}

Word Alphabet::parse(std::string_view text) const {
  if (text == "1") return {};
  std::vector<Letter> letters;
  std::size_t start = 0;
  while (true) {
    const auto dot = text.find('.', start);
    const auto piece = text.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start);
    letters.push_back(at(piece));
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return Word(std::move(letters));
}

}  // namespace bialint
