#include "cpmonoid/branch.hpp"

#include <algorithm>

namespace cpm {

std::optional<BranchTerm> term_mul(const BranchTerm& s, const BranchTerm& t) {
  // (v* w)(x* y): w x* cancels from the inside out, so it is non-zero exactly
  // when one of w, x is a suffix of the other.
  const Word& w = s.plain;
  const Word& x = t.starred;
  if (x.has_suffix(w)) {
    const Word x0 = x.prefix(x.length() - w.length());
    return BranchTerm{x0 * s.starred, t.plain};
  }
  if (w.has_suffix(x)) {
    const Word w0 = w.prefix(w.length() - x.length());
    return BranchTerm{s.starred, w0 * t.plain};
  }
  return std::nullopt;
}

BranchSet::BranchSet(std::initializer_list<BranchTerm> terms) : terms_(terms) { canonicalize(); }

BranchSet::BranchSet(std::vector<BranchTerm> terms) : terms_(std::move(terms)) { canonicalize(); }

void BranchSet::canonicalize() {
  std::sort(terms_.begin(), terms_.end());
  terms_.erase(std::unique(terms_.begin(), terms_.end()), terms_.end());
}

bool BranchSet::contains(const BranchTerm& t) const {
  return std::binary_search(terms_.begin(), terms_.end(), t);
}

BranchSet set_union(const BranchSet& x, const BranchSet& y) {
  std::vector<BranchTerm> out;
  out.reserve(x.size() + y.size());
  std::set_union(x.terms().begin(), x.terms().end(), y.terms().begin(), y.terms().end(),
                 std::back_inserter(out));
  return BranchSet(std::move(out));
}

BranchSet set_mul(const BranchSet& x, const BranchSet& y) {
  std::vector<BranchTerm> out;
  for (const auto& s : x.terms()) {
    for (const auto& t : y.terms()) {
      if (auto p = term_mul(s, t)) out.push_back(std::move(*p));
    }
  }
  return BranchSet(std::move(out));
}

BranchSet sigma_S(const BranchSet& x, const BranchSet& y) {
  std::vector<BranchTerm> out;
  out.reserve(x.size() + y.size());
  for (const auto& t : x.terms()) out.push_back({t.starred * Word{Generator::P1}, t.plain});
  for (const auto& t : y.terms()) out.push_back({t.starred * Word{Generator::P2}, t.plain});
  return BranchSet(std::move(out));
}

BranchSet beta(const Tree& a) {
  std::vector<BranchTerm> out;
  out.reserve(a.degree());
  for (auto& leaf : leaf_listing(a)) out.push_back({std::move(leaf.path), std::move(leaf.color)});
  return BranchSet(std::move(out));
}

std::optional<Word> recognize_word(const BranchSet& x) {
  if (x.empty()) return std::nullopt;
  std::optional<Word> common;
  for (const auto& t : x.terms()) {
    if (!t.plain.has_prefix(t.starred)) return std::nullopt;
    Word w = t.plain.drop_front(t.starred.length());
    if (!common) {
      common = std::move(w);
    } else if (*common != w) {
      return std::nullopt;
    }
  }
  return common;
}

std::string to_string(const BranchTerm& t) {
  return t.starred.to_string() + "*" + t.plain.to_string();
}

std::string to_string(const BranchSet& x) {
  std::string out = "{";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(x.terms()[i]);
  }
  out += "}";
  return out;
}

}  // namespace cpm
