#include "cpmonoid/dcp.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace cpm {

namespace {

using Spans = std::span<const std::uint32_t>;

std::size_t right_child(Spans s, std::size_t i) { return i + 1 + s[i + 1]; }

void collect_taus(Spans s, std::size_t i, Word& path, std::vector<Word>& out) {
  if (s[i] == 1) {
    out.push_back(path);
    return;
  }
  const Word saved = path;
  path.push_front(Generator::P1);
  collect_taus(s, i + 1, path, out);
  path = saved;
  path.push_front(Generator::P2);
  collect_taus(s, right_child(s, i), path, out);
  path = saved;
}

UElem phi_at(Spans s, std::size_t i, std::span<const UElem> ms, std::size_t& next) {
  if (s[i] == 1) return ms[next++];
  UElem l = phi_at(s, i + 1, ms, next);
  UElem r = phi_at(s, right_child(s, i), ms, next);
  return sigma_U(l, r);
}

Shape graft(const Shape& outer, std::span<const Shape> inners, std::size_t& next) {
  if (outer.is_leaf()) return inners[next++];
  Shape l = graft(outer.left(), inners, next);
  Shape r = graft(outer.right(), inners, next);
  return Shape::node(l, r);
}

void describe(Spans s, std::size_t i, std::string& out) {
  if (s[i] == 1) {
    out += '*';
    return;
  }
  out += '(';
  describe(s, i + 1, out);
  out += ',';
  describe(s, right_child(s, i), out);
  out += ')';
}

}  // namespace

Shape Shape::node(const Shape& left, const Shape& right) {
  Shape s;
  s.spans_.clear();
  s.spans_.reserve(1 + left.spans_.size() + right.spans_.size());
  s.spans_.push_back(static_cast<std::uint32_t>(1 + left.spans_.size() + right.spans_.size()));
  s.spans_.insert(s.spans_.end(), left.spans_.begin(), left.spans_.end());
  s.spans_.insert(s.spans_.end(), right.spans_.begin(), right.spans_.end());
  return s;
}

Shape Shape::left_comb(std::size_t d) {
  if (d == 0) throw std::invalid_argument("a shape needs at least one leaf");
  Shape s;
  for (std::size_t k = 1; k < d; ++k) s = node(s, leaf());
  return s;
}

std::vector<Shape> Shape::all_with_leaves(std::size_t d) {
  if (d == 0) return {};
  if (d == 1) return {leaf()};
  std::vector<Shape> out;
  for (std::size_t l = 1; l < d; ++l) {
    const auto lefts = all_with_leaves(l);
    const auto rights = all_with_leaves(d - l);
    for (const auto& a : lefts) {
      for (const auto& b : rights) out.push_back(node(a, b));
    }
  }
  return out;
}

Shape Shape::left() const {
  if (is_leaf()) throw std::logic_error("left() on a leaf shape");
  Shape s;
  s.spans_.assign(spans_.begin() + 1, spans_.begin() + 1 + spans_[1]);
  return s;
}

Shape Shape::right() const {
  if (is_leaf()) throw std::logic_error("right() on a leaf shape");
  Shape s;
  s.spans_.assign(spans_.begin() + 1 + spans_[1], spans_.end());
  return s;
}

std::string Shape::to_string() const {
  std::string out;
  describe(spans_, 0, out);
  return out;
}

std::vector<Word> shape_taus(const Shape& s) {
  std::vector<Word> out;
  out.reserve(s.leaf_count());
  Word path;
  collect_taus(s.spans(), 0, path, out);
  return out;
}

UElem phi(const Shape& s, std::span<const UElem> ms) {
  if (ms.size() != s.leaf_count()) {
    throw std::invalid_argument("phi: expected " + std::to_string(s.leaf_count()) + " arguments, got " +
                                std::to_string(ms.size()));
  }
  std::size_t next = 0;
  return phi_at(s.spans(), 0, ms, next);
}

Shape combine(const Shape& outer, std::span<const Shape> inners) {
  if (inners.size() != outer.leaf_count()) {
    throw std::invalid_argument("combine: expected " + std::to_string(outer.leaf_count()) +
                                " inner shapes, got " + std::to_string(inners.size()));
  }
  std::size_t next = 0;
  return graft(outer, inners, next);
}

UElem endo_antihom(const Shape& s, std::span<const std::size_t> f) {
  const std::size_t d = s.leaf_count();
  if (f.size() != d) throw std::invalid_argument("endo_antihom: map has the wrong arity");
  const auto taus = shape_taus(s);
  std::vector<UElem> ms;
  ms.reserve(d);
  for (auto image : f) {
    if (image >= d) throw std::invalid_argument("endo_antihom: image out of range");
    ms.emplace_back(taus[image]);
  }
  return phi(s, ms);
}

UElem perm_hom(const Shape& s, std::span<const std::size_t> sigma) {
  IndexMap inverse(sigma.size(), sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (sigma[i] >= sigma.size() || inverse[sigma[i]] != sigma.size()) {
      throw std::invalid_argument("perm_hom: not a permutation");
    }
    inverse[sigma[i]] = i;
  }
  return endo_antihom(s, inverse);
}

std::optional<MonoidDefect> validate_finite_monoid(const FiniteMonoid& m) {
  using Kind = MonoidDefect::Kind;
  const std::size_t n = m.size();
  if (n == 0) return MonoidDefect{Kind::Labels, 0, 0, 0, "monoid has no elements"};
  std::set<std::string> seen;
  for (std::size_t i = 0; i < n; ++i) {
    if (!seen.insert(m.labels[i]).second) {
      return MonoidDefect{Kind::Labels, i, 0, 0, "duplicate label '" + m.labels[i] + "'"};
    }
  }
  if (m.identity >= n) return MonoidDefect{Kind::Labels, m.identity, 0, 0, "identity index out of range"};
  if (m.table.size() != n) {
    return MonoidDefect{Kind::Shape, 0, 0, 0, "table must have " + std::to_string(n) + " rows"};
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (m.table[i].size() != n) {
      return MonoidDefect{Kind::Shape, i, 0, 0, "row " + std::to_string(i) + " has the wrong length"};
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (m.table[i][j] >= n) {
        return MonoidDefect{Kind::Shape, i, j, 0, "entry (" + std::to_string(i) + "," + std::to_string(j) + ") out of range"};
      }
    }
  }
  const std::size_t e = m.identity;
  for (std::size_t j = 0; j < n; ++j) {
    if (m.table[e][j] != j || m.table[j][e] != j) {
      return MonoidDefect{Kind::Identity, j, 0, 0,
                          "identity law fails for '" + m.labels[j] + "'"};
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (m.table[m.table[i][j]][k] != m.table[i][m.table[j][k]]) {
          return MonoidDefect{Kind::Associativity, i, j, k,
                              "associativity fails for (" + m.labels[i] + "," + m.labels[j] + "," +
                                  m.labels[k] + ")"};
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<std::pair<std::string, UElem>> embed_finite_monoid(const FiniteMonoid& m) {
  if (auto defect = validate_finite_monoid(m)) throw std::invalid_argument(defect->message);
  const std::size_t n = m.size();
  const std::size_t d = std::max<std::size_t>(n, 2);
  const Shape shape = Shape::left_comb(d);

  std::vector<UElem> image;
  image.reserve(n);
  for (std::size_t a = 0; a < n; ++a) {
    IndexMap rho(d);
    for (std::size_t x = 0; x < d; ++x) rho[x] = x < n ? m.table[x][a] : x;
    image.push_back(endo_antihom(shape, rho));
  }

  std::unordered_set<UElem> distinct(image.begin(), image.end());
  if (distinct.size() != n || !image[m.identity].is_identity()) {
    throw std::logic_error("embed_finite_monoid: image is not injective or misses the identity");
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (image[a] * image[b] != image[m.table[a][b]]) {
        throw std::logic_error("embed_finite_monoid: image is not multiplicative");
      }
    }
  }

  std::vector<std::pair<std::string, UElem>> out;
  out.reserve(n);
  for (std::size_t a = 0; a < n; ++a) out.emplace_back(m.labels[a], std::move(image[a]));
  return out;
}

}  // namespace cpm
