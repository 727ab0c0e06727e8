#pragma once

// One- and two-sided invertibility in U, decided from the leaf colors of a
// representative, with explicit inverse constructions. Also the transport of
// the (Sigma, p1, p2) structure along a pair f·g = 1.

#include <cstddef>
#include <optional>
#include <utility>

#include "cpmonoid/ucp.hpp"

namespace cpm {

/// Leaf colors are left cofinite.
bool has_left_inverse(const UElem& b);
/// Leaf colors are left independent.
bool has_right_inverse(const UElem& a);
bool is_unit(const UElem& a);

/// Some A with A·b = 1. The construction colors a complete binary tree of the
/// minimal covering depth d: the leaf at path v = y·x, where x is the longest
/// leaf color of b that is a suffix of v (leftmost leaf on ties) and z is the
/// path to that leaf, gets color y·z.
std::optional<UElem> left_inverse(const UElem& b);

/// Some B with a·B = 1. B has a vertex for every proper suffix of a leaf
/// color of a; the leaf reached by color c is colored with the path to the
/// c-leaf of a, and every other leaf is colored 1.
std::optional<UElem> right_inverse(const UElem& a);

/// Two-sided inverse; throws std::domain_error if `a` is not a unit.
UElem unit_inverse(const UElem& a);

struct UnitOrder {
  /// Smallest n with a^n = 1, or empty when no such n <= bound exists.
  std::optional<std::size_t> order;
  std::size_t bound = 0;

  bool exceeds_bound() const noexcept { return !order.has_value(); }
};

/// Throws std::domain_error if `a` is not a unit.
UnitOrder unit_order(const UElem& a, std::size_t bound);

enum class StructureKind { CQP, CP };

/// (g·Sigma, p1·f, p2·f) for a pair with f·g = 1.
class TransportedStructure {
 public:
  StructureKind kind() const noexcept { return kind_; }
  const UElem& f() const noexcept { return f_; }
  const UElem& g() const noexcept { return g_; }
  const UElem& tau1() const noexcept { return tau1_; }
  const UElem& tau2() const noexcept { return tau2_; }

  UElem phi(const UElem& a, const UElem& b) const { return g_ * sigma_U(a, b); }

 private:
  friend TransportedStructure transport(const UElem& f, const UElem& g);
  TransportedStructure(StructureKind kind, UElem f, UElem g, UElem tau1, UElem tau2)
      : kind_(kind), f_(std::move(f)), g_(std::move(g)), tau1_(std::move(tau1)), tau2_(std::move(tau2)) {}

  StructureKind kind_;
  UElem f_, g_, tau1_, tau2_;
};

/// Throws std::invalid_argument unless f·g = 1. The kind is CP iff also g·f = 1.
TransportedStructure transport(const UElem& f, const UElem& g);

/// (Sigma(tau1, tau2), phi(p1, p2)); recovers (f, g).
std::pair<UElem, UElem> transport_roundtrip(const TransportedStructure& s);

}  // namespace cpm
