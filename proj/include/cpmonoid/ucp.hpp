#pragma once

// The universal CP monoid U = T / (Sigma(p1,p2) ~ 1). Elements are kept as
// reduced trees: no internal vertex has leaf children colored p1·w, p2·w.

#include <cstddef>

#include "cpmonoid/tree.hpp"
#include "cpmonoid/word.hpp"

namespace cpm {

class UElem {
 public:
  /// The identity.
  UElem() = default;
  /// The image of a word; words are always reduced.
  explicit UElem(Word w) : tree_(std::move(w)) {}

  static UElem reduce(const Tree& a);

  const Tree& tree() const noexcept { return tree_; }
  std::size_t degree() const noexcept { return tree_.degree(); }
  bool is_identity() const noexcept { return tree_.is_leaf() && tree_.color().is_identity(); }

  friend bool operator==(const UElem&, const UElem&) = default;
  friend auto operator<=>(const UElem&, const UElem&) = default;

 private:
  explicit UElem(Tree reduced) : tree_(std::move(reduced)) {}
  Tree tree_;
};

/// True iff (left, right) = (p1·w, p2·w) for some w.
bool is_retractable_pair(const Word& left, const Word& right) noexcept;
bool is_reduced(const Tree& a);

/// Replaces the leaf at `at`, of color w, by Sigma(p1·w, p2·w). Throws
/// std::invalid_argument if `at` does not address a leaf.
Tree expand(const Tree& a, const LeafAddress& at);
/// Expands every leaf until all colors have length >= n.
Tree expand_colors_to(const Tree& a, std::size_t n);

inline UElem reduce(const Tree& a) { return UElem::reduce(a); }

UElem mul_U(const UElem& a, const UElem& b);
inline UElem operator*(const UElem& a, const UElem& b) { return mul_U(a, b); }
UElem sigma_U(const UElem& a, const UElem& b);
/// a^n, with a^0 = 1.
UElem power(const UElem& a, std::size_t n);

bool equivalent(const Tree& a, const Tree& b);

}  // namespace cpm

template <>
struct std::hash<cpm::UElem> {
  std::size_t operator()(const cpm::UElem& u) const noexcept {
    return std::hash<cpm::Tree>{}(u.tree());
  }
};
