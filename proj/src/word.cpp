#include "cpmonoid/word.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace cpm {

namespace {

char encode(Generator g) { return g == Generator::P1 ? '1' : '2'; }

// Trie over members read from their last symbol, i.e. the order in which a
// word descends a tree. A word y is a left multiple of some member exactly
// when reading y backwards passes through a terminal vertex.
class SuffixTrie {
 public:
  explicit SuffixTrie(std::span<const Word> family) : nodes_(1) {
    for (const auto& w : family) {
      int at = 0;
      for (std::size_t i = w.length(); i-- > 0;) {
        const int slot = w[i] == Generator::P1 ? 0 : 1;
        if (nodes_[at].child[slot] < 0) {
          nodes_[at].child[slot] = static_cast<int>(nodes_.size());
          nodes_.emplace_back();
        }
        at = nodes_[at].child[slot];
      }
      nodes_[at].terminal = true;
    }
  }

  // Depth needed so that every path of that length from `at` meets a
  // terminal, or -1 if some infinite path never does.
  int coverage_depth(int at = 0) const {
    const auto& n = nodes_[at];
    if (n.terminal) return 0;
    if (n.child[0] < 0 || n.child[1] < 0) return -1;
    const int l = coverage_depth(n.child[0]);
    if (l < 0) return -1;
    const int r = coverage_depth(n.child[1]);
    if (r < 0) return -1;
    return 1 + std::max(l, r);
  }

 private:
  struct Node {
    std::array<int, 2> child{-1, -1};
    bool terminal = false;
  };
  std::vector<Node> nodes_;
};

}  // namespace

Word::Word(std::initializer_list<Generator> symbols) {
  symbols_.reserve(symbols.size());
  for (auto g : symbols) symbols_.push_back(encode(g));
}

Word Word::generator(Generator g) { return Word{g}; }

Word Word::power(Generator g, std::size_t k) {
  Word w;
  w.symbols_.assign(k, encode(g));
  return w;
}

Word Word::parse(std::string_view text) {
  if (text == "1") return {};
  if (text.empty() || text.size() % 2 != 0) {
    throw std::invalid_argument("malformed word: '" + std::string(text) + "'");
  }
  Word w;
  for (std::size_t i = 0; i < text.size(); i += 2) {
    if (text[i] != 'p' || (text[i + 1] != '1' && text[i + 1] != '2')) {
      throw std::invalid_argument("malformed word: '" + std::string(text) + "'");
    }
    w.symbols_.push_back(text[i + 1]);
  }
  return w;
}

Word Word::prefix(std::size_t n) const {
  Word w;
  w.symbols_ = symbols_.substr(0, n);
  return w;
}

Word Word::drop_front(std::size_t n) const {
  Word w;
  w.symbols_ = symbols_.substr(std::min(n, symbols_.size()));
  return w;
}

bool Word::has_suffix(const Word& w) const noexcept {
  return std::string_view(symbols_).ends_with(w.symbols_);
}

bool Word::has_prefix(const Word& w) const noexcept {
  return std::string_view(symbols_).starts_with(w.symbols_);
}

Word& Word::operator*=(const Word& rhs) {
  symbols_ += rhs.symbols_;
  return *this;
}

Word& Word::push_back(Generator g) {
  symbols_.push_back(encode(g));
  return *this;
}

Word& Word::push_front(Generator g) {
  symbols_.insert(symbols_.begin(), encode(g));
  return *this;
}

std::string Word::to_string() const {
  if (symbols_.empty()) return "1";
  std::string out;
  out.reserve(2 * symbols_.size());
  for (char c : symbols_) {
    out.push_back('p');
    out.push_back(c);
  }
  return out;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept {
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  return a.symbols_.compare(b.symbols_) <=> 0;
}

Word operator*(const Word& u, const Word& v) {
  Word w = u;
  w *= v;
  return w;
}

std::vector<Word> words_of_length(std::size_t n) {
  std::vector<Word> out;
  out.reserve(std::size_t{1} << n);
  for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits) {
    Word w;
    for (std::size_t i = n; i-- > 0;) {
      w.push_back((bits >> i) & 1 ? Generator::P2 : Generator::P1);
    }
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<Word> words_up_to(std::size_t n) {
  std::vector<Word> out;
  for (std::size_t k = 0; k <= n; ++k) {
    auto layer = words_of_length(k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

int family_coverage_depth(std::span<const Word> family) {
  return SuffixTrie(family).coverage_depth();
}

bool family_left_cofinite(std::span<const Word> family) {
  return family_coverage_depth(family) >= 0;
}

bool family_left_dependent(std::span<const Word> family) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = 0; j < family.size(); ++j) {
      if (i != j && is_left_multiple(family[i], family[j])) return true;
    }
  }
  return false;
}

FamilyClassification family_classify(std::span<const Word> family) {
  FamilyClassification c;
  c.cofinite = family_left_cofinite(family);
  c.independent = family_left_independent(family);
  if (c.cofinite) {
    c.minimally_cofinite = true;
    std::vector<Word> rest;
    for (std::size_t skip = 0; skip < family.size() && c.minimally_cofinite; ++skip) {
      rest.clear();
      for (std::size_t i = 0; i < family.size(); ++i) {
        if (i != skip) rest.push_back(family[i]);
      }
      if (family_left_cofinite(rest)) c.minimally_cofinite = false;
    }
  }
  c.maximally_independent = c.independent && c.cofinite;
  return c;
}

}  // namespace cpm
