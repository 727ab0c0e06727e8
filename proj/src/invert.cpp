#include "cpmonoid/invert.hpp"

#include <stdexcept>
#include <vector>

namespace cpm {

namespace {

const Word kP1{Generator::P1};
const Word kP2{Generator::P2};

bool has_longer_member_below(const std::vector<LeafEntry>& leaves, const Word& u) {
  for (const auto& leaf : leaves) {
    if (leaf.color.length() > u.length() && leaf.color.has_suffix(u)) return true;
  }
  return false;
}

class LeftInverseBuilder {
 public:
  LeftInverseBuilder(std::vector<LeafEntry> leaves, std::size_t depth)
      : leaves_(std::move(leaves)), depth_(depth) {}

  // The complete tree of depth d below u collapses to a single leaf as soon
  // as every extension of u picks the same color x; those leaves carry
  // t·y·z for all t, which retract to y·z.
  void build(TreeBuilder& out, const Word& u) const {
    if (u.length() == depth_ || !has_longer_member_below(leaves_, u)) {
      const LeafEntry* best = nullptr;
      for (const auto& leaf : leaves_) {
        if (u.has_suffix(leaf.color) && (best == nullptr || leaf.color.length() > best->color.length())) {
          best = &leaf;
        }
      }
      if (best == nullptr) throw std::logic_error("left_inverse: uncovered path");
      out.leaf(u.prefix(u.length() - best->color.length()) * best->path);
      return;
    }
    const auto h = out.open();
    build(out, kP1 * u);
    build(out, kP2 * u);
    out.close(h);
  }

 private:
  std::vector<LeafEntry> leaves_;
  std::size_t depth_;
};

void build_right_inverse(TreeBuilder& out, const std::vector<LeafEntry>& leaves, const Word& u) {
  for (const auto& leaf : leaves) {
    if (u.has_suffix(leaf.color)) {
      out.leaf(u.prefix(u.length() - leaf.color.length()) * leaf.path);
      return;
    }
  }
  if (!has_longer_member_below(leaves, u)) {
    out.leaf(Word{});
    return;
  }
  const auto h = out.open();
  build_right_inverse(out, leaves, kP1 * u);
  build_right_inverse(out, leaves, kP2 * u);
  out.close(h);
}

}  // namespace

bool has_left_inverse(const UElem& b) { return family_left_cofinite(b.tree().colors()); }

bool has_right_inverse(const UElem& a) { return family_left_independent(a.tree().colors()); }

bool is_unit(const UElem& a) {
  const auto c = family_classify(a.tree().colors());
  const bool both = c.cofinite && c.independent;
  if (both != c.minimally_cofinite || both != c.maximally_independent) {
    throw std::logic_error("is_unit: unit criteria disagree");
  }
  return both;
}

std::optional<UElem> left_inverse(const UElem& b) {
  const int depth = family_coverage_depth(b.tree().colors());
  if (depth < 0) return std::nullopt;
  TreeBuilder out;
  LeftInverseBuilder(leaf_listing(b.tree()), static_cast<std::size_t>(depth)).build(out, Word{});
  return reduce(std::move(out).finish());
}

std::optional<UElem> right_inverse(const UElem& a) {
  if (!has_right_inverse(a)) return std::nullopt;
  TreeBuilder out;
  build_right_inverse(out, leaf_listing(a.tree()), Word{});
  return reduce(std::move(out).finish());
}

UElem unit_inverse(const UElem& a) {
  if (!is_unit(a)) throw std::domain_error("unit_inverse: element is not a unit");
  auto b = right_inverse(a);
  if (!b || !(a * *b).is_identity() || !(*b * a).is_identity()) {
    throw std::logic_error("unit_inverse: constructed inverse failed verification");
  }
  return *std::move(b);
}

UnitOrder unit_order(const UElem& a, std::size_t bound) {
  if (!is_unit(a)) throw std::domain_error("unit_order: element is not a unit");
  UElem p = a;
  for (std::size_t n = 1; n <= bound; ++n) {
    if (p.is_identity()) return {n, bound};
    p = p * a;
  }
  return {std::nullopt, bound};
}

TransportedStructure transport(const UElem& f, const UElem& g) {
  if (!(f * g).is_identity()) throw std::invalid_argument("transport: f·g != 1");
  const auto kind = (g * f).is_identity() ? StructureKind::CP : StructureKind::CQP;
  return TransportedStructure(kind, f, g, UElem(kP1) * f, UElem(kP2) * f);
}

std::pair<UElem, UElem> transport_roundtrip(const TransportedStructure& s) {
  return {sigma_U(s.tau1(), s.tau2()), s.phi(UElem(kP1), UElem(kP2))};
}

}  // namespace cpm
