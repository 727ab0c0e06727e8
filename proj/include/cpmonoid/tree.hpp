#pragma once

// The universal CQP monoid T: finite binary trees whose leaves are colored by
// words, with the word action, Sigma, and the leaf-substitution product.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "cpmonoid/word.hpp"

namespace cpm {

enum class Direction : std::uint8_t { Left, Right };

/// Steps from the root to a vertex. Left is the p1 child, Right the p2 child.
struct LeafAddress {
  std::vector<Direction> steps;

  friend bool operator==(const LeafAddress&, const LeafAddress&) = default;
};

/// A colored binary tree stored as its preorder vertex sequence. Each vertex
/// records the number of vertices in its subtree, so the right child of an
/// internal vertex at i sits at i + 1 + span(i + 1) and every subtree is a
/// contiguous slice.
class Tree {
 public:
  struct Node {
    Word color;               // meaningful only for leaves
    std::uint32_t span = 1;   // vertices in this subtree; 1 iff leaf

    bool is_leaf() const noexcept { return span == 1; }
    friend bool operator==(const Node&, const Node&) = default;
    friend auto operator<=>(const Node&, const Node&) = default;
  };

  /// The identity, Leaf(1).
  Tree();
  explicit Tree(Word color);

  static Tree leaf(Word color) { return Tree(std::move(color)); }
  /// Adopts a preorder node sequence; throws std::invalid_argument if the
  /// spans do not describe a full binary tree.
  static Tree from_nodes(std::vector<Node> nodes);

  bool is_leaf() const noexcept { return nodes_.size() == 1; }
  /// Color of a degree-1 tree.
  const Word& color() const;
  Tree left() const;
  Tree right() const;

  /// Number of leaves.
  std::size_t degree() const noexcept { return (nodes_.size() + 1) / 2; }
  std::size_t depth() const;
  /// Leaf colors, left to right.
  std::vector<Word> colors() const;

  std::span<const Node> nodes() const noexcept { return nodes_; }

  friend bool operator==(const Tree&, const Tree&) = default;
  friend auto operator<=>(const Tree&, const Tree&) = default;

 private:
  struct Adopt {};
  Tree(Adopt, std::vector<Node> nodes) : nodes_(std::move(nodes)) {}

  friend Tree sigma(const Tree&, const Tree&);
  friend Tree act(const Word&, const Tree&);
  friend Tree mul(const Tree&, const Tree&);
  friend class TreeBuilder;

  std::vector<Node> nodes_;
};

/// Incremental preorder construction; used by operations that rebuild trees.
class TreeBuilder {
 public:
  /// Appends a leaf; returns its span (1).
  std::uint32_t leaf(Word color);
  /// Opens an internal vertex; returns the handle to pass to close().
  std::size_t open();
  /// Closes an internal vertex once both subtrees were appended.
  std::uint32_t close(std::size_t handle);
  /// Appends a copy of a whole subtree slice.
  std::uint32_t append(std::span<const Tree::Node> subtree);

  std::vector<Tree::Node>& nodes() noexcept { return nodes_; }
  Tree finish() &&;

 private:
  std::vector<Tree::Node> nodes_;
};

Tree sigma(const Tree& a, const Tree& b);
/// w·A: descend from the root consuming w right to left (p1 = left child).
Tree act(const Word& w, const Tree& a);
/// Replace every leaf of a colored w by w·b.
Tree mul(const Tree& a, const Tree& b);
inline Tree operator*(const Tree& a, const Tree& b) { return mul(a, b); }

struct LeafEntry {
  LeafAddress address;
  Word path;   // the word whose action selects this leaf
  Word color;
};

/// Leaves left to right. The path word's rightmost symbol is the first step.
std::vector<LeafEntry> leaf_listing(const Tree& a);

/// Vertex reached by following `at`; throws std::out_of_range if the address
/// leaves the tree.
std::size_t node_index(const Tree& a, const LeafAddress& at);

/// Right inverse in T; exists only for degree 1.
std::optional<Tree> right_inverse_T(const Tree& a);
/// Left inverse in T: the path to the leftmost leaf colored 1.
std::optional<Word> left_inverse_T(const Tree& a);

}  // namespace cpm

template <>
struct std::hash<cpm::Tree> {
  std::size_t operator()(const cpm::Tree& t) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (const auto& n : t.nodes()) {
      h ^= std::hash<cpm::Word>{}(n.color) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h ^= n.span + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};
