#include <algorithm>
#include <numeric>
#include <set>

#include "cpmonoid/dcp.hpp"
#include "cpmonoid/kernels.hpp"

namespace cpm {

namespace {

void colorings(const Tree& shape, std::span<const Word> palette, std::vector<Tree>& out, bool reduced_only) {
  std::vector<Tree::Node> nodes(shape.nodes().begin(), shape.nodes().end());
  std::vector<std::size_t> leaves;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].is_leaf()) leaves.push_back(i);
  }
  std::vector<std::size_t> digit(leaves.size(), 0);
  while (true) {
    for (std::size_t k = 0; k < leaves.size(); ++k) nodes[leaves[k]].color = palette[digit[k]];
    Tree t = Tree::from_nodes(nodes);
    if (!reduced_only || is_reduced(t)) out.push_back(std::move(t));
    std::size_t k = leaves.size();
    while (k > 0 && ++digit[k - 1] == palette.size()) digit[--k] = 0;
    if (k == 0) break;
  }
}

std::vector<Tree> shapes_with_degree(std::size_t d) {
  if (d == 1) return {Tree{}};
  std::vector<Tree> out;
  for (std::size_t l = 1; l < d; ++l) {
    for (const auto& a : shapes_with_degree(l)) {
      for (const auto& b : shapes_with_degree(d - l)) out.push_back(sigma(a, b));
    }
  }
  return out;
}

}  // namespace

std::vector<Tree> enumerate_trees(std::size_t max_degree, std::size_t max_color_length, bool reduced_only) {
  const auto palette = words_up_to(max_color_length);
  std::vector<Tree> out;
  for (std::size_t d = 1; d <= max_degree; ++d) {
    for (const auto& shape : shapes_with_degree(d)) colorings(shape, palette, out, reduced_only);
  }
  return out;
}

namespace reference {

std::optional<std::size_t> find_inverse(const Tree& target, std::span<const Tree> candidates, InverseSide side) {
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const Tree product = side == InverseSide::Left ? mul(candidates[i], target) : mul(target, candidates[i]);
    if (reduce(product).is_identity()) return i;
  }
  return std::nullopt;
}

std::vector<std::optional<std::size_t>> find_inverses(std::span<const Tree> targets,
                                                      std::span<const Tree> candidates, InverseSide side) {
  std::vector<std::optional<std::size_t>> out;
  out.reserve(targets.size());
  for (const auto& t : targets) out.push_back(find_inverse(t, candidates, side));
  return out;
}

std::vector<UElem> perm_images(std::size_t max_leaves) {
  std::set<UElem> images;
  for (std::size_t d = 2; d <= max_leaves; ++d) {
    for (const auto& shape : Shape::all_with_leaves(d)) {
      IndexMap sigma(d);
      std::iota(sigma.begin(), sigma.end(), std::size_t{0});
      do {
        images.insert(perm_hom(shape, sigma));
      } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
  }
  return {images.begin(), images.end()};
}

}  // namespace reference

}  // namespace cpm
