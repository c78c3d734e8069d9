#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bialint {

/// Index of a generator in its alphabet.
using Letter = std::uint32_t;

/// Monomial in noncommuting generators. The empty word is the unit.
///
/// The built-in ordering compares length first, then letters left to right by
/// index. Containers use it for iteration order; rewriting uses MonomialOrder.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  static Word letter(Letter g) { return Word{g}; }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }
  const std::vector<Letter>& letters() const { return letters_; }

  Word subword(std::size_t pos, std::size_t len) const;
  Word prefix(std::size_t len) const { return subword(0, len); }
  Word suffix_from(std::size_t pos) const { return subword(pos, size() - pos); }
  bool matches_at(const Word& pattern, std::size_t pos) const;
  std::optional<std::size_t> find(const Word& pattern, std::size_t from = 0) const;
  Word reversed() const;

  Word& operator*=(const Word& other);
  friend Word operator*(Word a, const Word& b) { return a *= b; }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::vector<Letter> letters_;
};

/// Generator names, indexed by Letter.
class Alphabet {
 public:
  Alphabet() = default;
  /// Throws MalformedInput on duplicate or invalid names.
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(Letter g) const;
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Letter> find(std::string_view name) const;
  /// Throws MalformedInput for an unknown name.
  Letter at(std::string_view name) const;

  /// "." joined names; the empty word is "1".
  std::string format(const Word& w) const;
  /// Inverse of format. Throws MalformedInput.
  Word parse(std::string_view text) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> names_;
};

/// True for names usable as generators: [A-Za-z_][A-Za-z0-9_]*.
bool is_identifier(std::string_view name);

}  // namespace bialint
