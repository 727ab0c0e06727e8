#pragma once

// Exhaustive sweeps over small trees: bounded brute-force inverse search and
// enumeration of permutation images. `kernels` holds the OpenMP versions;
// `reference` holds straightforward serial versions built from mul and
// reduce, kept as the oracle the kernels are tested and benchmarked against.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cpmonoid/tree.hpp"
#include "cpmonoid/ucp.hpp"

namespace cpm {

enum class InverseSide { Left, Right };

/// Every tree of degree 1..max_degree with leaf colors of length
/// <= max_color_length, ordered by degree, then shape, then colors.
/// With reduced_only, trees that admit a retraction are skipped.
std::vector<Tree> enumerate_trees(std::size_t max_degree, std::size_t max_color_length, bool reduced_only);

namespace reference {

/// Index of the first candidate c with c·target = 1 (Left) or
/// target·c = 1 (Right) in U.
std::optional<std::size_t> find_inverse(const Tree& target, std::span<const Tree> candidates, InverseSide side);
std::vector<std::optional<std::size_t>> find_inverses(std::span<const Tree> targets,
                                                      std::span<const Tree> candidates, InverseSide side);

/// Distinct perm_hom images over all shapes with 2..max_leaves leaves, sorted.
std::vector<UElem> perm_images(std::size_t max_leaves);

}  // namespace reference

namespace kernels {

/// a·b is equivalent to 1, decided without building the product: every leaf
/// of a·b must carry its own path word as color.
bool product_is_identity(const Tree& a, const Tree& b);

std::vector<std::optional<std::size_t>> find_inverses(std::span<const Tree> targets,
                                                      std::span<const Tree> candidates, InverseSide side);

std::vector<UElem> perm_images(std::size_t max_leaves);

/// Threads OpenMP will use for the kernels.
int thread_count();

}  // namespace kernels

}  // namespace cpm
