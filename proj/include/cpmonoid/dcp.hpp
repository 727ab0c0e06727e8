#pragma once

// d-fold product structures on U generated from Sigma and the identity by
// grafting (tree shapes), the endomorphism antihomomorphism E_d -> U, the
// permutation homomorphism S_d -> U, and the embedding of finite monoids.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cpmonoid/ucp.hpp"
#include "cpmonoid/word.hpp"

namespace cpm {

/// A bare binary tree with d >= 1 leaves, stored as preorder subtree sizes.
/// The single leaf is the 1-fold structure (id, 1).
class Shape {
 public:
  Shape() : spans_{1} {}

  static Shape leaf() { return {}; }
  static Shape node(const Shape& left, const Shape& right);
  /// ((..((*,*),*)..),*) with d leaves.
  static Shape left_comb(std::size_t d);
  /// Every shape with exactly d leaves, in a fixed order.
  static std::vector<Shape> all_with_leaves(std::size_t d);

  std::size_t leaf_count() const noexcept { return (spans_.size() + 1) / 2; }
  bool is_leaf() const noexcept { return spans_.size() == 1; }
  Shape left() const;
  Shape right() const;

  std::span<const std::uint32_t> spans() const noexcept { return spans_; }
  /// "*" for a leaf, "(l,r)" otherwise.
  std::string to_string() const;

  friend bool operator==(const Shape&, const Shape&) = default;
  friend auto operator<=>(const Shape&, const Shape&) = default;

 private:
  std::vector<std::uint32_t> spans_;
};

/// Path words of the leaves, left to right.
std::vector<Word> shape_taus(const Shape& s);

/// Nested Sigma following the shape, with ms at the leaves. Throws
/// std::invalid_argument on a length mismatch.
UElem phi(const Shape& s, std::span<const UElem> ms);

/// Grafts inners[i] onto the i-th leaf of outer. Throws std::invalid_argument
/// on a length mismatch.
Shape combine(const Shape& outer, std::span<const Shape> inners);

/// A self-map of {0, ..., d-1}, given by its images.
using IndexMap = std::vector<std::size_t>;

/// phi(s, tau_{f(0)}, ..., tau_{f(d-1)}). Antimultiplicative:
/// endo_antihom(f)·endo_antihom(g) = endo_antihom(g∘f).
UElem endo_antihom(const Shape& s, std::span<const std::size_t> f);
/// endo_antihom(s, sigma^-1); a homomorphism on permutations. Throws
/// std::invalid_argument if sigma is not a bijection.
UElem perm_hom(const Shape& s, std::span<const std::size_t> sigma);

struct FiniteMonoid {
  std::vector<std::string> labels;
  std::size_t identity = 0;
  /// table[i][j] = index of labels[i]·labels[j].
  std::vector<std::vector<std::size_t>> table;

  std::size_t size() const noexcept { return labels.size(); }
};

struct MonoidDefect {
  enum class Kind { Shape, Labels, Identity, Associativity };
  Kind kind;
  std::size_t i = 0, j = 0, k = 0;
  std::string message;
};

std::optional<MonoidDefect> validate_finite_monoid(const FiniteMonoid& n);

/// Injective homomorphism N -> U through the right regular antirepresentation
/// x -> (y -> y·x) on the left comb with max(#N, 2) leaves. The result is
/// checked before it is returned. Throws std::invalid_argument for an
/// invalid table.
std::vector<std::pair<std::string, UElem>> embed_finite_monoid(const FiniteMonoid& n);

}  // namespace cpm
