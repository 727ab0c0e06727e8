#include "cpmonoid/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>
#include <string>
#include <string_view>

#include "cpmonoid/dcp.hpp"

namespace cpm::kernels {

namespace {

using Nodes = std::span<const Tree::Node>;

std::size_t right_child(Nodes nodes, std::size_t i) { return i + 1 + nodes[i + 1].span; }

// `steps` lists the moves from the root of the product, first move first, so
// the leaf's path word is steps reversed. Colors are stored left to right.
bool color_is_path(std::string_view color, std::string_view steps) {
  if (color.size() != steps.size()) return false;
  return std::equal(color.begin(), color.end(), steps.rbegin());
}

// Every leaf below b[i] must be colored by its full path in the product.
bool subtree_is_identity(Nodes b, std::size_t i, std::string& steps) {
  if (b[i].is_leaf()) return color_is_path(b[i].color.raw(), steps);
  steps.push_back('1');
  const bool l = subtree_is_identity(b, i + 1, steps);
  steps.back() = '2';
  const bool r = l && subtree_is_identity(b, right_child(b, i), steps);
  steps.pop_back();
  return r;
}

bool leaf_product_is_identity(std::string_view w, Nodes b, std::string& steps) {
  std::size_t at = 0;
  std::size_t remaining = w.size();
  while (remaining > 0 && !b[at].is_leaf()) {
    --remaining;
    at = w[remaining] == '1' ? at + 1 : right_child(b, at);
  }
  if (b[at].is_leaf()) {
    // The product leaf is colored w[0, remaining) followed by the B color.
    const std::string_view head = w.substr(0, remaining);
    const std::string_view tail = b[at].color.raw();
    if (head.size() + tail.size() != steps.size()) return false;
    return std::equal(head.begin(), head.end(), steps.rbegin()) &&
           std::equal(tail.begin(), tail.end(), steps.rbegin() + static_cast<std::ptrdiff_t>(head.size()));
  }
  return subtree_is_identity(b, at, steps);
}

bool walk(Nodes a, std::size_t i, Nodes b, std::string& steps) {
  if (a[i].is_leaf()) return leaf_product_is_identity(a[i].color.raw(), b, steps);
  steps.push_back('1');
  const bool l = walk(a, i + 1, b, steps);
  steps.back() = '2';
  const bool r = l && walk(a, right_child(a, i), b, steps);
  steps.pop_back();
  return r;
}

}  // namespace

bool product_is_identity(const Tree& a, const Tree& b) {
  std::string steps;
  steps.reserve(32);
  return walk(a.nodes(), 0, b.nodes(), steps);
}

std::vector<std::optional<std::size_t>> find_inverses(std::span<const Tree> targets,
                                                      std::span<const Tree> candidates, InverseSide side) {
  std::vector<std::optional<std::size_t>> out(targets.size());
  const auto n = static_cast<std::ptrdiff_t>(targets.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t t = 0; t < n; ++t) {
    const Tree& target = targets[static_cast<std::size_t>(t)];
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const bool hit = side == InverseSide::Left ? product_is_identity(candidates[c], target)
                                                 : product_is_identity(target, candidates[c]);
      if (hit) {
        out[static_cast<std::size_t>(t)] = c;
        break;
      }
    }
  }
  return out;
}

std::vector<UElem> perm_images(std::size_t max_leaves) {
  struct Job {
    Shape shape;
    IndexMap sigma;
  };
  std::vector<Job> jobs;
  for (std::size_t d = 2; d <= max_leaves; ++d) {
    for (const auto& shape : Shape::all_with_leaves(d)) {
      IndexMap sigma(d);
      std::iota(sigma.begin(), sigma.end(), std::size_t{0});
      do {
        jobs.push_back({shape, sigma});
      } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
  }

  std::vector<UElem> images(jobs.size());
  const auto n = static_cast<std::ptrdiff_t>(jobs.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t j = 0; j < n; ++j) {
    const auto& job = jobs[static_cast<std::size_t>(j)];
    images[static_cast<std::size_t>(j)] = perm_hom(job.shape, job.sigma);
  }

  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  return images;
}

int thread_count() { return omp_get_max_threads(); }

}  // namespace cpm::kernels
