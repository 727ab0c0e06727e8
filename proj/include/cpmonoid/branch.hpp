#pragma once

// The branch monoid B (generated by p1, p2, p1*, p2*, 0 with pi pj* = delta_ij),
// the semiring S of finite subsets of B, and the branch homomorphism T -> S.

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "cpmonoid/tree.hpp"
#include "cpmonoid/word.hpp"

namespace cpm {

/// The non-zero element v* w of B. `starred` uses the same reading as a path
/// word: its rightmost symbol is the first step down from the root.
struct BranchTerm {
  Word starred;
  Word plain;

  friend bool operator==(const BranchTerm&, const BranchTerm&) = default;
  friend auto operator<=>(const BranchTerm&, const BranchTerm&) = default;
};

/// Product in B; nullopt encodes 0.
std::optional<BranchTerm> term_mul(const BranchTerm& s, const BranchTerm& t);

/// A finite element of S. The zero of B is implicit, so the empty set is the
/// absorbing element {0} and {(1,1)} is the identity {0,1}.
class BranchSet {
 public:
  BranchSet() = default;
  BranchSet(std::initializer_list<BranchTerm> terms);
  explicit BranchSet(std::vector<BranchTerm> terms);

  static BranchSet identity() { return BranchSet{{Word{}, Word{}}}; }

  /// Terms in canonical (starred, plain) shortlex order, no duplicates.
  const std::vector<BranchTerm>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  bool contains(const BranchTerm& t) const;

  friend bool operator==(const BranchSet&, const BranchSet&) = default;

 private:
  void canonicalize();
  std::vector<BranchTerm> terms_;
};

BranchSet set_union(const BranchSet& x, const BranchSet& y);
BranchSet set_mul(const BranchSet& x, const BranchSet& y);
inline BranchSet operator*(const BranchSet& x, const BranchSet& y) { return set_mul(x, y); }
/// p1* X  U  p2* Y
BranchSet sigma_S(const BranchSet& x, const BranchSet& y);

/// One (path, color) term per leaf.
BranchSet beta(const Tree& a);

/// w if every term has the form v* (v w) for a single w, i.e. the tree
/// behind `x` is equivalent to the word w.
std::optional<Word> recognize_word(const BranchSet& x);

/// "v*w" with words in CLI syntax, e.g. "p1p2*p2".
std::string to_string(const BranchTerm& t);
/// "{t1, t2, ...}" in canonical order; 0 is omitted so {0} prints as "{}".
std::string to_string(const BranchSet& x);

}  // namespace cpm
