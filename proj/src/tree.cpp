#include "cpmonoid/tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace cpm {

namespace {

using Nodes = std::span<const Tree::Node>;

std::size_t right_child(Nodes nodes, std::size_t i) { return i + 1 + nodes[i + 1].span; }

Nodes subtree(Nodes nodes, std::size_t i) { return nodes.subspan(i, nodes[i].span); }

// Appends w·(subtree) to `out` without materializing the intermediate tree.
std::uint32_t append_act(TreeBuilder& out, const Word& w, Nodes b) {
  std::size_t at = 0;
  std::size_t remaining = w.length();
  while (remaining > 0) {
    if (b[at].is_leaf()) return out.leaf(w.prefix(remaining) * b[at].color);
    --remaining;
    at = w[remaining] == Generator::P1 ? at + 1 : right_child(b, at);
  }
  return out.append(subtree(b, at));
}

std::uint32_t append_mul(TreeBuilder& out, Nodes a, std::size_t i, Nodes b) {
  if (a[i].is_leaf()) return append_act(out, a[i].color, b);
  const auto h = out.open();
  append_mul(out, a, i + 1, b);
  append_mul(out, a, right_child(a, i), b);
  return out.close(h);
}

std::size_t depth_at(Nodes nodes, std::size_t i) {
  if (nodes[i].is_leaf()) return 0;
  return 1 + std::max(depth_at(nodes, i + 1), depth_at(nodes, right_child(nodes, i)));
}

void list_leaves(Nodes nodes, std::size_t i, LeafAddress& address, Word& path,
                 std::vector<LeafEntry>& out) {
  if (nodes[i].is_leaf()) {
    out.push_back({address, path, nodes[i].color});
    return;
  }
  const Word saved = path;
  address.steps.push_back(Direction::Left);
  path.push_front(Generator::P1);
  list_leaves(nodes, i + 1, address, path, out);
  path = saved;
  address.steps.back() = Direction::Right;
  path.push_front(Generator::P2);
  list_leaves(nodes, right_child(nodes, i), address, path, out);
  path = saved;
  address.steps.pop_back();
}

// Returns one past the subtree rooted at i, or 0 if the spans are inconsistent.
std::size_t validate_spans(const std::vector<Tree::Node>& nodes, std::size_t i) {
  if (i >= nodes.size()) return 0;
  if (nodes[i].is_leaf()) return i + 1;
  if (nodes[i].span == 0) return 0;
  const std::size_t l_end = validate_spans(nodes, i + 1);
  if (l_end == 0) return 0;
  const std::size_t r_end = validate_spans(nodes, l_end);
  if (r_end == 0 || r_end - i != nodes[i].span) return 0;
  return r_end;
}

}  // namespace

std::uint32_t TreeBuilder::leaf(Word color) {
  nodes_.push_back({std::move(color), 1});
  return 1;
}

std::size_t TreeBuilder::open() {
  nodes_.push_back({Word{}, 0});
  return nodes_.size() - 1;
}

std::uint32_t TreeBuilder::close(std::size_t handle) {
  const auto span = static_cast<std::uint32_t>(nodes_.size() - handle);
  nodes_[handle].span = span;
  return span;
}

std::uint32_t TreeBuilder::append(std::span<const Tree::Node> subtree) {
  nodes_.insert(nodes_.end(), subtree.begin(), subtree.end());
  return static_cast<std::uint32_t>(subtree.size());
}

Tree TreeBuilder::finish() && { return Tree(Tree::Adopt{}, std::move(nodes_)); }

Tree::Tree() : nodes_{Node{}} {}

Tree::Tree(Word color) : nodes_{Node{std::move(color), 1}} {}

Tree Tree::from_nodes(std::vector<Node> nodes) {
  if (nodes.empty() || validate_spans(nodes, 0) != nodes.size()) {
    throw std::invalid_argument("node sequence is not a preorder binary tree");
  }
  for (auto& n : nodes) {
    if (!n.is_leaf()) n.color = Word{};
  }
  return Tree(Adopt{}, std::move(nodes));
}

const Word& Tree::color() const {
  if (!is_leaf()) throw std::logic_error("color() on a tree of degree > 1");
  return nodes_[0].color;
}

Tree Tree::left() const {
  if (is_leaf()) throw std::logic_error("left() on a leaf");
  auto s = subtree(nodes_, 1);
  return Tree(Adopt{}, {s.begin(), s.end()});
}

Tree Tree::right() const {
  if (is_leaf()) throw std::logic_error("right() on a leaf");
  auto s = subtree(nodes_, right_child(nodes_, 0));
  return Tree(Adopt{}, {s.begin(), s.end()});
}

std::size_t Tree::depth() const { return depth_at(nodes_, 0); }

std::vector<Word> Tree::colors() const {
  std::vector<Word> out;
  out.reserve(degree());
  for (const auto& n : nodes_) {
    if (n.is_leaf()) out.push_back(n.color);
  }
  return out;
}

Tree sigma(const Tree& a, const Tree& b) {
  std::vector<Tree::Node> nodes;
  nodes.reserve(1 + a.nodes_.size() + b.nodes_.size());
  nodes.push_back({Word{}, static_cast<std::uint32_t>(1 + a.nodes_.size() + b.nodes_.size())});
  nodes.insert(nodes.end(), a.nodes_.begin(), a.nodes_.end());
  nodes.insert(nodes.end(), b.nodes_.begin(), b.nodes_.end());
  return Tree(Tree::Adopt{}, std::move(nodes));
}

Tree act(const Word& w, const Tree& a) {
  TreeBuilder out;
  append_act(out, w, a.nodes_);
  return std::move(out).finish();
}

Tree mul(const Tree& a, const Tree& b) {
  TreeBuilder out;
  out.nodes().reserve(a.nodes_.size() + b.nodes_.size());
  append_mul(out, a.nodes_, 0, b.nodes_);
  return std::move(out).finish();
}

std::vector<LeafEntry> leaf_listing(const Tree& a) {
  std::vector<LeafEntry> out;
  out.reserve(a.degree());
  LeafAddress address;
  Word path;
  list_leaves(a.nodes(), 0, address, path, out);
  return out;
}

std::size_t node_index(const Tree& a, const LeafAddress& at) {
  auto nodes = a.nodes();
  std::size_t i = 0;
  for (auto step : at.steps) {
    if (nodes[i].is_leaf()) throw std::out_of_range("address runs past a leaf");
    i = step == Direction::Left ? i + 1 : right_child(nodes, i);
  }
  return i;
}

std::optional<Tree> right_inverse_T(const Tree& a) {
  if (!a.is_leaf()) return std::nullopt;
  const Tree omega = sigma(Tree{}, Tree{});
  Tree result;
  for (std::size_t k = 0; k < a.color().length(); ++k) result = mul(result, omega);
  return result;
}

std::optional<Word> left_inverse_T(const Tree& a) {
  for (auto& leaf : leaf_listing(a)) {
    if (leaf.color.is_identity()) return std::move(leaf.path);
  }
  return std::nullopt;
}

}  // namespace cpm
