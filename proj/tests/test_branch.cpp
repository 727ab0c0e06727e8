#include <set>

#include "cpmonoid/branch.hpp"
#include "cpmonoid/kernels.hpp"
#include "cpmonoid/term.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace cpm;
using namespace cpm::testing;

namespace {
Word W(const char* s) { return Word::parse(s); }
Tree T(const char* s) { return eval_T(parse_term(s)); }
BranchTerm BT(const char* v, const char* w) { return {W(v), W(w)}; }

BranchTerm random_term(Rng& rng) { return {random_word(rng, 3), random_word(rng, 3)}; }
}  // namespace

TEST_CASE("generators multiply like p_i p_j* = delta_ij") {
  CHECK(term_mul(BT("1", "p1"), BT("p1", "1")) == BT("1", "1"));
  CHECK_FALSE(term_mul(BT("1", "p1"), BT("p2", "1")));
  CHECK(term_mul(BT("1", "p2p1"), BT("p1", "p2")) == BT("1", "p2p2"));
  CHECK(term_mul(BT("p1", "1"), BT("1", "p2")) == BT("p1", "p2"));
}

TEST_CASE("term product is associative with zero absorbing") {
  Rng rng(31);
  auto mul3 = [](std::optional<BranchTerm> s, const BranchTerm& t) -> std::optional<BranchTerm> {
    return s ? term_mul(*s, t) : std::nullopt;
  };
  for (int i = 0; i < 1000; ++i) {
    const auto a = random_term(rng), b = random_term(rng), c = random_term(rng);
    const auto bc = term_mul(b, c);
    CHECK(mul3(term_mul(a, b), c) == (bc ? term_mul(a, *bc) : std::nullopt));
  }
}

TEST_CASE("set product and sigma") {
  CHECK(set_mul(BranchSet::identity(), BranchSet{BT("p1", "p2")}) == BranchSet{BT("p1", "p2")});
  CHECK(set_mul(BranchSet{BT("1", "p1")}, BranchSet{BT("p1", "1"), BT("p2", "1")}) == BranchSet{BT("1", "1")});
  CHECK(set_mul(BranchSet{}, BranchSet::identity()).empty());

  const auto s = sigma_S(BranchSet{BT("1", "p1")}, BranchSet{BT("1", "p2")});
  CHECK(s == BranchSet{BT("p1", "p1"), BT("p2", "p2")});
  CHECK(s != BranchSet::identity());
  CHECK(sigma_S(BranchSet{}, BranchSet{}).empty());
  CHECK(set_union(BranchSet{BT("p1", "1")}, BranchSet{BT("p1", "1"), BT("1", "1")}).size() == 2);
}

TEST_CASE("beta lists one term per leaf") {
  CHECK(beta(Tree(W("p2"))) == BranchSet{BT("1", "p2")});
  CHECK(beta(T("S(p1,p2)")) == BranchSet{BT("p1", "p1"), BT("p2", "p2")});
  CHECK(beta(T("S(S(p2,p2p2),S(p2p2p2,p1p2p2))")) ==
        BranchSet{BT("p1p1", "p2"), BT("p2p1", "p2p2"), BT("p1p2", "p2p2p2"), BT("p2p2", "p1p2p2")});
}

TEST_CASE("beta is a magma and monoid homomorphism") {
  Rng rng(32);
  for (int i = 0; i < 1000; ++i) {
    const Tree a = random_tree(rng, 6, 3), b = random_tree(rng, 6, 3);
    CHECK(beta(mul(a, b)) == set_mul(beta(a), beta(b)));
    CHECK(beta(sigma(a, b)) == sigma_S(beta(a), beta(b)));
    CHECK(beta(a).size() == a.degree());
  }
}

TEST_CASE("beta is injective on small trees") {
  const auto trees = enumerate_trees(3, 2, false);
  std::set<std::string> images;
  for (const auto& t : trees) images.insert(to_string(beta(t)));
  CHECK(images.size() == trees.size());
}

TEST_CASE("recognize_word finds trees equivalent to a word") {
  CHECK(recognize_word(beta(T("S(p1,p2)"))) == Word{});
  CHECK(recognize_word(beta(T("S(p1p2,p2p2)"))) == W("p2"));
  CHECK_FALSE(recognize_word(beta(T("S(S(p2,p2p2),S(p2p2p2,p1p2p2))"))));
  CHECK(recognize_word(beta(Tree(W("p1p2")))) == W("p1p2"));
}

TEST_CASE("branch sets print in canonical order") {
  CHECK(to_string(BT("p1p2", "p2")) == "p1p2*p2");
  CHECK(to_string(BranchSet{BT("p2", "p2"), BT("p1", "p1")}) == "{p1*p1, p2*p2}");
  CHECK(to_string(BranchSet{}) == "{}");
  CHECK(to_string(BranchSet::identity()) == "{1*1}");
}
