#include <stdexcept>

#include "cpmonoid/term.hpp"
#include "cpmonoid/ucp.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace cpm;
using namespace cpm::testing;

namespace {
Word W(const char* s) { return Word::parse(s); }
Tree T(const char* s) { return eval_T(parse_term(s)); }
UElem U(const char* s) { return reduce(T(s)); }
}  // namespace

TEST_CASE("retractable pairs") {
  CHECK(is_retractable_pair(W("p1p2"), W("p2p2")));
  CHECK(is_retractable_pair(W("p1"), W("p2")));
  CHECK_FALSE(is_retractable_pair(W("p2p2"), W("p1p2")));
  CHECK_FALSE(is_retractable_pair(W("p1p1"), W("p2p2")));
  CHECK_FALSE(is_retractable_pair(Word{}, Word{}));
}

TEST_CASE("reduce contracts pairs and cascades") {
  CHECK(U("S(p1,p2)").is_identity());
  CHECK(U("S(S(p2p2p2,p1p2p2),S(p1p2,p2p2))").tree() == T("S(S(p2p2p2,p1p2p2),p2)"));
  CHECK(U("S(S(p1p1,p2p1),p2)").is_identity());
  CHECK(U("S(p2p2p2,p1p2p2)").tree() == T("S(p2p2p2,p1p2p2)"));
  CHECK(is_reduced(T("S(p2,p1)")));
  CHECK_FALSE(is_reduced(T("S(p2,S(p1p1,p2p1))")));
}

TEST_CASE("products in U") {
  CHECK(mul_U(U("S(p2,S(p1p1p1,p2p1))"), U("S(S(p2,p2p2),S(p2p2p2,p1p2p2))")).tree() ==
        T("S(S(p2p2p2,p1p2p2),p2)"));
  CHECK((U("S(S(p2,p1p1),p2p1)") * U("S(p2,p1)")).tree() == T("S(S(p1,p1p2),p2p2)"));
  CHECK(UElem{} * U("S(p2,p1)") == U("S(p2,p1)"));
}

TEST_CASE("sigma in U") {
  const Word w = W("p2p1");
  CHECK(sigma_U(UElem(W("p1") * w), UElem(W("p2") * w)) == UElem(w));
  CHECK(sigma_U(UElem(W("p2") * w), UElem(W("p1") * w)).degree() == 2);
  CHECK(sigma_U(UElem(W("p1")), UElem(W("p2"))).is_identity());
}

TEST_CASE("expansion is undone by reduce") {
  Rng rng(41);
  for (int i = 0; i < 300; ++i) {
    const UElem u = reduce(random_tree(rng, 5, 3));
    const auto leaves = leaf_listing(u.tree());
    const Tree e = expand(u.tree(), leaves[uniform(rng, 0, leaves.size() - 1)].address);
    CHECK(e.degree() == u.degree() + 1);
    CHECK(reduce(e) == u);
  }
  CHECK_THROWS_AS(expand(T("S(p1,p2)"), {{Direction::Left, Direction::Left}}), std::invalid_argument);
}

TEST_CASE("expand_colors_to lengthens every color") {
  const Tree e = expand_colors_to(T("S(p2,p1p1p1)"), 2);
  for (const auto& c : e.colors()) CHECK(c.length() >= 2);
  CHECK(e == T("S(S(p1p2,p2p2),p1p1p1)"));
  CHECK(reduce(e) == U("S(p2,p1p1p1)"));
}

TEST_CASE("any retraction order reaches the normal form") {
  Rng rng(42);
  for (int i = 0; i < 1000; ++i) {
    const Tree t = random_expanded_tree(rng, 10, 2);
    const UElem r = reduce(t);
    CHECK(is_reduced(r.tree()));
    CHECK(from_oracle(oracle_normalize(to_oracle(t), rng)) == r.tree());
    CHECK(reduce(r.tree()) == r);
  }
}

TEST_CASE("reduction is a congruence") {
  Rng rng(43);
  for (int i = 0; i < 1000; ++i) {
    const Tree a = random_expanded_tree(rng, 8, 2), b = random_expanded_tree(rng, 8, 2);
    CHECK(reduce(mul(a, b)) == reduce(a) * reduce(b));
    CHECK(reduce(sigma(a, b)) == sigma_U(reduce(a), reduce(b)));
  }
}

TEST_CASE("U is a CP monoid") {
  Rng rng(44);
  const UElem p1(W("p1")), p2(W("p2"));
  CHECK(sigma_U(p1, p2).is_identity());
  for (int i = 0; i < 1000; ++i) {
    const UElem a = reduce(random_tree(rng, 5, 2)), b = reduce(random_tree(rng, 5, 2)),
                c = reduce(random_tree(rng, 5, 2));
    CHECK(p1 * sigma_U(a, b) == a);
    CHECK(p2 * sigma_U(a, b) == b);
    CHECK(sigma_U(a, b) * c == sigma_U(a * c, b * c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(sigma_U(p1 * a, p2 * a) == a);
  }
}

TEST_CASE("powers and equivalence") {
  const UElem s = U("S(p2,p1)");
  CHECK(power(s, 0).is_identity());
  CHECK(power(s, 2).is_identity());
  CHECK(power(s, 3) == s);
  CHECK(equivalent(T("S(S(p1p1,p2p1),p2)"), Tree{}));
  CHECK_FALSE(equivalent(T("S(p2,p1)"), Tree{}));
}

TEST_CASE("equivalent agrees with a search over expansion and retraction moves") {
  Rng rng(45);
  int equal = 0;
  for (int i = 0; i < 300; ++i) {
    const Tree a = random_expanded_tree(rng, 4, 1);
    const Tree r = reduce(a).tree();
    const Tree b = i % 2 ? random_expanded_tree(rng, 4, 1) : expand(r, leaf_listing(r).back().address);
    const auto cap = std::max(a.degree(), b.degree()) + 1;
    const bool e = equivalent(a, b);
    equal += e;
    CHECK(e == oracle_connected(to_oracle(a), to_oracle(b), cap));
  }
  CHECK(equal >= 100);
}
