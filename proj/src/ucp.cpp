#include "cpmonoid/ucp.hpp"

#include <stdexcept>

namespace cpm {

namespace {

using Nodes = std::span<const Tree::Node>;

std::size_t right_child(Nodes nodes, std::size_t i) { return i + 1 + nodes[i + 1].span; }

// Post-order rebuild; a retraction at a vertex may expose a new pair at its
// parent, which is examined when the parent closes.
std::uint32_t append_reduced(TreeBuilder& out, Nodes a, std::size_t i) {
  if (a[i].is_leaf()) return out.leaf(a[i].color);
  const auto h = out.open();
  const auto l = append_reduced(out, a, i + 1);
  const auto r = append_reduced(out, a, right_child(a, i));
  auto& nodes = out.nodes();
  if (l == 1 && r == 1 && is_retractable_pair(nodes[h + 1].color, nodes[h + 2].color)) {
    Word w = nodes[h + 2].color.drop_front(1);
    nodes.resize(h);
    return out.leaf(std::move(w));
  }
  return out.close(h);
}

std::uint32_t append_expanded(TreeBuilder& out, const Word& w, std::size_t n) {
  if (w.length() >= n) return out.leaf(w);
  const auto h = out.open();
  append_expanded(out, Word{Generator::P1} * w, n);
  append_expanded(out, Word{Generator::P2} * w, n);
  return out.close(h);
}

}  // namespace

bool is_retractable_pair(const Word& left, const Word& right) noexcept {
  if (left.length() == 0 || left.length() != right.length()) return false;
  if (left.front() != Generator::P1 || right.front() != Generator::P2) return false;
  return left.raw().substr(1) == right.raw().substr(1);
}

bool is_reduced(const Tree& a) {
  auto nodes = a.nodes();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].span == 3 && is_retractable_pair(nodes[i + 1].color, nodes[i + 2].color)) {
      return false;
    }
  }
  return true;
}

UElem UElem::reduce(const Tree& a) {
  TreeBuilder out;
  out.nodes().reserve(a.nodes().size());
  append_reduced(out, a.nodes(), 0);
  return UElem(std::move(out).finish());
}

Tree expand(const Tree& a, const LeafAddress& at) {
  std::size_t i = 0;
  try {
    i = node_index(a, at);
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("expand: address does not name a leaf");
  }
  auto nodes = a.nodes();
  if (!nodes[i].is_leaf()) throw std::invalid_argument("expand: address names an internal vertex");

  std::vector<Tree::Node> out(nodes.begin(), nodes.end());
  const Word& w = nodes[i].color;
  out[i] = Tree::Node{Word{}, 3};
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(i) + 1,
             {Tree::Node{Word{Generator::P1} * w, 1}, Tree::Node{Word{Generator::P2} * w, 1}});
  // Every ancestor grows by the two new vertices.
  std::size_t v = 0;
  for (auto step : at.steps) {
    out[v].span += 2;
    v = step == Direction::Left ? v + 1 : v + 1 + out[v + 1].span;
  }
  return Tree::from_nodes(std::move(out));
}

Tree expand_colors_to(const Tree& a, std::size_t n) {
  TreeBuilder out;
  for (const auto& node : a.nodes()) {
    if (node.is_leaf()) {
      append_expanded(out, node.color, n);
    } else {
      out.nodes().push_back({Word{}, 0});
    }
  }
  // Spans of the original internal vertices are recomputed bottom-up.
  auto& nodes = out.nodes();
  std::vector<std::size_t> stack;
  for (std::size_t i = nodes.size(); i-- > 0;) {
    if (nodes[i].is_leaf()) {
      stack.push_back(1);
      continue;
    }
    const std::size_t l = stack.back();
    stack.pop_back();
    const std::size_t r = stack.back();
    stack.pop_back();
    nodes[i].span = static_cast<std::uint32_t>(1 + l + r);
    stack.push_back(nodes[i].span);
  }
  return std::move(out).finish();
}

UElem mul_U(const UElem& a, const UElem& b) { return reduce(mul(a.tree(), b.tree())); }

UElem sigma_U(const UElem& a, const UElem& b) { return reduce(sigma(a.tree(), b.tree())); }

UElem power(const UElem& a, std::size_t n) {
  UElem result;
  UElem base = a;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

bool equivalent(const Tree& a, const Tree& b) { return reduce(a) == reduce(b); }

}  // namespace cpm
