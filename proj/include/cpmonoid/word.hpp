#pragma once

// The free monoid F on the two generators p1, p2, and the left-multiple
// relations on finite families of words that decide invertibility in U.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cpm {

enum class Generator : std::uint8_t { P1 = 1, P2 = 2 };

/// An element of F. Symbols are stored left to right; when a word acts on a
/// tree its rightmost symbol is applied first.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Generator> symbols);

  static Word generator(Generator g);
  static Word power(Generator g, std::size_t k);
  /// Parses the textual syntax "1" or a run of "p1"/"p2" tokens.
  static Word parse(std::string_view text);

  std::size_t length() const noexcept { return symbols_.size(); }
  bool is_identity() const noexcept { return symbols_.empty(); }

  Generator operator[](std::size_t i) const noexcept {
    return static_cast<Generator>(symbols_[i] - '0');
  }
  Generator front() const noexcept { return (*this)[0]; }
  Generator back() const noexcept { return (*this)[length() - 1]; }

  /// The first n symbols.
  Word prefix(std::size_t n) const;
  /// Everything after the first n symbols.
  Word drop_front(std::size_t n) const;

  bool has_suffix(const Word& w) const noexcept;
  bool has_prefix(const Word& w) const noexcept;

  Word& operator*=(const Word& rhs);
  Word& push_back(Generator g);
  Word& push_front(Generator g);

  /// Compact encoding: one char '1' or '2' per symbol.
  std::string_view raw() const noexcept { return symbols_; }
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  /// Shortlex: shorter words first, then lexicographic with P1 < P2.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept;

 private:
  std::string symbols_;
};

Word operator*(const Word& u, const Word& v);
inline Word concat(const Word& u, const Word& v) { return u * v; }

/// True iff y = x * w for some word x.
inline bool is_left_multiple(const Word& y, const Word& w) noexcept { return y.has_suffix(w); }

/// All 2^n words of length n, in shortlex order.
std::vector<Word> words_of_length(std::size_t n);
/// All words of length <= n, in shortlex order.
std::vector<Word> words_up_to(std::size_t n);

using WordFamily = std::vector<Word>;

bool family_left_cofinite(std::span<const Word> family);
bool family_left_dependent(std::span<const Word> family);
inline bool family_left_independent(std::span<const Word> family) {
  return !family_left_dependent(family);
}

/// Smallest n such that every word of length n is a left multiple of a member;
/// -1 when the family is not left cofinite.
int family_coverage_depth(std::span<const Word> family);

struct FamilyClassification {
  bool cofinite = false;
  bool independent = false;
  bool minimally_cofinite = false;
  bool maximally_independent = false;

  friend bool operator==(const FamilyClassification&, const FamilyClassification&) = default;
};

FamilyClassification family_classify(std::span<const Word> family);

}  // namespace cpm

template <>
struct std::hash<cpm::Word> {
  std::size_t operator()(const cpm::Word& w) const noexcept {
    return std::hash<std::string_view>{}(w.raw());
  }
};
