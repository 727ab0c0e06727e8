#pragma once

// Random generators and independent oracles shared by the test binaries.
// The oracles use a pointer-based tree and plain strings so they share no
// code paths with the library they check.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cpmonoid/tree.hpp"
#include "cpmonoid/ucp.hpp"
#include "cpmonoid/word.hpp"

namespace cpm::testing {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline Word random_word(Rng& rng, std::size_t max_length) {
  Word w;
  const auto n = uniform(rng, 0, max_length);
  for (std::size_t i = 0; i < n; ++i) w.push_back(uniform(rng, 0, 1) ? Generator::P2 : Generator::P1);
  return w;
}

inline Tree random_tree_of_degree(Rng& rng, std::size_t degree, std::size_t max_color_length) {
  if (degree == 1) return Tree(random_word(rng, max_color_length));
  const auto l = uniform(rng, 1, degree - 1);
  return sigma(random_tree_of_degree(rng, l, max_color_length),
               random_tree_of_degree(rng, degree - l, max_color_length));
}

inline Tree random_tree(Rng& rng, std::size_t max_degree, std::size_t max_color_length) {
  return random_tree_of_degree(rng, uniform(rng, 1, max_degree), max_color_length);
}

/// A random tree carrying many retractable pairs: random expansions of a
/// random tree, capped at max_degree.
inline Tree random_expanded_tree(Rng& rng, std::size_t max_degree, std::size_t max_color_length) {
  Tree t = random_tree(rng, std::max<std::size_t>(1, max_degree / 2), max_color_length);
  const auto moves = uniform(rng, 0, max_degree - t.degree());
  for (std::size_t i = 0; i < moves; ++i) {
    const auto leaves = leaf_listing(t);
    t = expand(t, leaves[uniform(rng, 0, leaves.size() - 1)].address);
  }
  return t;
}

/// A finite complete suffix code: start from {1} and repeatedly split a
/// member w into p1 w, p2 w. Such a family is left cofinite and left
/// independent.
inline std::vector<Word> random_complete_code(Rng& rng, std::size_t size) {
  std::vector<Word> code{Word{}};
  while (code.size() < size) {
    const auto i = uniform(rng, 0, code.size() - 1);
    const Word w = code[i];
    code[i] = Word{Generator::P1} * w;
    code.push_back(Word{Generator::P2} * w);
  }
  return code;
}

/// Places the given colors on a random shape, in random order.
inline Tree random_tree_with_colors(Rng& rng, std::vector<Word> colors) {
  std::shuffle(colors.begin(), colors.end(), rng);
  auto build = [&](auto& self, std::size_t lo, std::size_t hi) -> Tree {
    if (hi - lo == 1) return Tree(colors[lo]);
    const auto mid = uniform(rng, lo + 1, hi - 1);
    return sigma(self(self, lo, mid), self(self, mid, hi));
  };
  return build(build, 0, colors.size());
}

/// A random unit of U.
inline UElem random_unit(Rng& rng, std::size_t max_degree) {
  return reduce(random_tree_with_colors(rng, random_complete_code(rng, uniform(rng, 1, max_degree))));
}

// ---------------------------------------------------------------------------
// Oracle trees: colors are strings of '1'/'2', first symbol leftmost.

struct OTree;
using OPtr = std::shared_ptr<const OTree>;

struct OTree {
  std::string color;
  OPtr left, right;
  bool leaf() const { return !left; }
};

inline OPtr oleaf(std::string c) { return std::make_shared<OTree>(OTree{std::move(c), nullptr, nullptr}); }
inline OPtr onode(OPtr l, OPtr r) { return std::make_shared<OTree>(OTree{"", std::move(l), std::move(r)}); }

inline OPtr to_oracle(const Tree& t) {
  if (t.is_leaf()) return oleaf(std::string(t.color().raw()));
  return onode(to_oracle(t.left()), to_oracle(t.right()));
}

inline Word oracle_word(const std::string& s) {
  Word w;
  for (char c : s) w.push_back(c == '1' ? Generator::P1 : Generator::P2);
  return w;
}

inline Tree from_oracle(const OPtr& t) {
  if (t->leaf()) return Tree(oracle_word(t->color));
  return sigma(from_oracle(t->left), from_oracle(t->right));
}

/// w·A: consume w from its right end while walking down.
inline OPtr oracle_act(std::string w, OPtr a) {
  while (!w.empty() && !a->leaf()) {
    a = w.back() == '1' ? a->left : a->right;
    w.pop_back();
  }
  if (w.empty()) return a;
  return oleaf(w + a->color);
}

inline OPtr oracle_mul(const OPtr& a, const OPtr& b) {
  if (a->leaf()) return oracle_act(a->color, b);
  return onode(oracle_mul(a->left, b), oracle_mul(a->right, b));
}

inline bool oracle_pair(const OPtr& t) {
  if (t->leaf() || !t->left->leaf() || !t->right->leaf()) return false;
  const auto& l = t->left->color;
  const auto& r = t->right->color;
  return !l.empty() && !r.empty() && l[0] == '1' && r[0] == '2' && l.substr(1) == r.substr(1);
}

inline std::size_t oracle_pair_count(const OPtr& t) {
  if (t->leaf()) return 0;
  return (oracle_pair(t) ? 1 : 0) + oracle_pair_count(t->left) + oracle_pair_count(t->right);
}

/// Contracts the k-th retractable pair in preorder.
inline OPtr oracle_retract(const OPtr& t, std::size_t& k) {
  if (t->leaf()) return t;
  if (oracle_pair(t)) {
    if (k == 0) {
      k = static_cast<std::size_t>(-1);
      return oleaf(t->left->color.substr(1));
    }
    --k;
  }
  auto l = oracle_retract(t->left, k);
  auto r = oracle_retract(t->right, k);
  return onode(std::move(l), std::move(r));
}

/// Normal form by retracting a uniformly chosen pair until none is left.
inline OPtr oracle_normalize(OPtr t, Rng& rng) {
  for (auto n = oracle_pair_count(t); n > 0; n = oracle_pair_count(t)) {
    auto k = uniform(rng, 0, n - 1);
    t = oracle_retract(t, k);
  }
  return t;
}

inline std::string oracle_key(const OPtr& t) {
  if (t->leaf()) return "[" + t->color + "]";
  return "(" + oracle_key(t->left) + oracle_key(t->right) + ")";
}

inline std::size_t oracle_degree(const OPtr& t) {
  return t->leaf() ? 1 : oracle_degree(t->left) + oracle_degree(t->right);
}

/// Every tree one expansion or one retraction away from t.
inline void oracle_moves(const OPtr& t, std::vector<OPtr>& out) {
  if (t->leaf()) {
    out.push_back(onode(oleaf("1" + t->color), oleaf("2" + t->color)));
    return;
  }
  if (oracle_pair(t)) out.push_back(oleaf(t->left->color.substr(1)));
  std::vector<OPtr> sub;
  oracle_moves(t->left, sub);
  for (auto& l : sub) out.push_back(onode(l, t->right));
  sub.clear();
  oracle_moves(t->right, sub);
  for (auto& r : sub) out.push_back(onode(t->left, r));
}

/// Breadth-first search for a chain of expansions and retractions from a to
/// b through trees of degree <= max_degree.
inline bool oracle_connected(const OPtr& a, const OPtr& b, std::size_t max_degree) {
  const auto target = oracle_key(b);
  std::vector<OPtr> frontier{a};
  std::set<std::string> seen{oracle_key(a)};
  while (!frontier.empty()) {
    std::vector<OPtr> next;
    for (const auto& t : frontier) {
      if (oracle_key(t) == target) return true;
      std::vector<OPtr> moves;
      oracle_moves(t, moves);
      for (auto& m : moves) {
        if (oracle_degree(m) <= max_degree && seen.insert(oracle_key(m)).second) next.push_back(std::move(m));
      }
    }
    frontier = std::move(next);
  }
  return false;
}

// ---------------------------------------------------------------------------
// Word-family oracles, by exhaustion over 2^L words.

inline std::vector<std::string> all_strings(std::size_t length) {
  std::vector<std::string> out{""};
  for (std::size_t i = 0; i < length; ++i) {
    std::vector<std::string> next;
    for (const auto& s : out) {
      next.push_back("1" + s);
      next.push_back("2" + s);
    }
    out = std::move(next);
  }
  return out;
}

inline bool ends_with(const std::string& y, const std::string& x) {
  return y.size() >= x.size() && y.compare(y.size() - x.size(), x.size(), x) == 0;
}

inline std::vector<std::string> strings_of(const std::vector<Word>& family) {
  std::vector<std::string> out;
  for (const auto& w : family) out.emplace_back(w.raw());
  return out;
}

/// Every word of the longest member length has a member as a suffix. Longer
/// words share those suffixes, so this is exactly left cofiniteness.
inline bool oracle_cofinite(const std::vector<std::string>& family) {
  if (family.empty()) return false;
  std::size_t m = 0;
  for (const auto& x : family) m = std::max(m, x.size());
  for (const auto& y : all_strings(m)) {
    if (std::none_of(family.begin(), family.end(), [&](const auto& x) { return ends_with(y, x); })) return false;
  }
  return true;
}

inline bool oracle_independent(const std::vector<std::string>& family) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = 0; j < family.size(); ++j) {
      if (i != j && ends_with(family[i], family[j])) return false;
    }
  }
  return true;
}

inline bool oracle_minimally_cofinite(const std::vector<std::string>& family) {
  if (!oracle_cofinite(family)) return false;
  for (std::size_t i = 0; i < family.size(); ++i) {
    auto smaller = family;
    smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
    if (oracle_cofinite(smaller)) return false;
  }
  return true;
}

/// Independent, and adding any word of length <= bound breaks independence.
inline bool oracle_maximally_independent(const std::vector<std::string>& family, std::size_t bound) {
  if (!oracle_independent(family)) return false;
  for (std::size_t n = 0; n <= bound; ++n) {
    for (const auto& w : all_strings(n)) {
      auto bigger = family;
      bigger.push_back(w);
      if (oracle_independent(bigger)) return false;
    }
  }
  return true;
}

}  // namespace cpm::testing
