#include "cpmonoid/invert.hpp"
#include "cpmonoid/kernels.hpp"
#include "cpmonoid/ucp.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace cpm;
using namespace cpm::testing;

TEST_CASE("enumeration counts") {
  CHECK(enumerate_trees(1, 2, false).size() == 7);
  CHECK(enumerate_trees(2, 1, false).size() == 3 + 9);
  CHECK(enumerate_trees(3, 2, false).size() == 7 + 49 + 2 * 343);
  const auto reduced = enumerate_trees(3, 2, true);
  for (const auto& t : reduced) CHECK(is_reduced(t));
  CHECK(reduced.size() < 7 + 49 + 2 * 343);
}

TEST_CASE("product_is_identity matches reduce") {
  Rng rng(71);
  int hits = 0;
  for (int i = 0; i < 3000; ++i) {
    Tree a, b;
    if (i % 3 == 0) {
      const UElem u = random_unit(rng, 6);
      a = expand(u.tree(), leaf_listing(u.tree()).front().address);
      b = unit_inverse(u).tree();
      if (i % 2 == 0) std::swap(a, b);
    } else {
      a = random_tree(rng, 4, 3);
      b = random_tree(rng, 4, 3);
    }
    const bool expected = reduce(mul(a, b)).is_identity();
    hits += expected;
    CHECK(kernels::product_is_identity(a, b) == expected);
  }
  CHECK(hits >= 1000);
  CHECK(kernels::product_is_identity(reduce(Tree(Word::parse("p2"))).tree(), sigma(Tree{}, Tree{})));
}

TEST_CASE("parallel inverse search agrees with the serial reference") {
  const auto targets = enumerate_trees(2, 2, true);
  const auto candidates = enumerate_trees(3, 2, true);
  for (auto side : {InverseSide::Left, InverseSide::Right}) {
    CHECK(kernels::find_inverses(targets, candidates, side) == reference::find_inverses(targets, candidates, side));
  }
}

TEST_CASE("parallel permutation images agree with the serial reference") {
  for (std::size_t k = 2; k <= 4; ++k) CHECK(kernels::perm_images(k) == reference::perm_images(k));
  CHECK(kernels::thread_count() >= 1);
}
