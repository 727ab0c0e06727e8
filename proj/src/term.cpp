#include "cpmonoid/term.hpp"

#include <cctype>
#include <limits>

namespace cpm {

namespace {

std::string join_expected(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) out += i + 1 == expected.size() ? " or " : ", ";
    out += expected[i];
  }
  return out;
}

template <class Node>
TermPtr make(Node node) {
  return std::make_unique<TermExpr>(TermExpr{std::move(node)});
}

class Parser {
 public:
  explicit Parser(std::string_view input) : in_(input) {}

  TermExpr parse() {
    TermPtr t = term();
    skip_ws();
    if (pos_ != in_.size()) fail({"'*'", "end of input"});
    return std::move(*t);
  }

 private:
  TermPtr term() {
    TermPtr lhs = factor();
    while (accept('*')) {
      TermPtr rhs = factor();
      lhs = make(TermExpr::Product{std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  TermPtr factor() {
    TermPtr base = atom();
    while (accept('^')) {
      base = make(TermExpr::Power{std::move(base), exponent()});
    }
    return base;
  }

  TermPtr atom() {
    skip_ws();
    if (peek_word_token()) return make(TermExpr::WordLit{word()});
    if (accept('1')) return make(TermExpr::One{});
    if (accept('S')) {
      expect('(', "'('");
      TermPtr l = term();
      expect(',', "','");
      TermPtr r = term();
      expect(')', "')'");
      return make(TermExpr::SigmaApp{std::move(l), std::move(r)});
    }
    if (accept('(')) {
      TermPtr inner = term();
      expect(')', "')'");
      return make(TermExpr::Paren{std::move(inner)});
    }
    fail({"'1'", "'p1'", "'p2'", "'S('", "'('"});
  }

  Word word() {
    Word w;
    while (peek_word_token()) {
      w.push_back(in_[pos_ + 1] == '1' ? Generator::P1 : Generator::P2);
      pos_ += 2;
      skip_ws();
    }
    return w;
  }

  std::size_t exponent() {
    skip_ws();
    const std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < in_.size() && std::isdigit(static_cast<unsigned char>(in_[pos_]))) {
      const std::size_t digit = static_cast<std::size_t>(in_[pos_] - '0');
      if (value > (std::numeric_limits<std::size_t>::max() - digit) / 10) {
        pos_ = start;
        fail({"an exponent that fits in 64 bits"});
      }
      value = value * 10 + digit;
      ++pos_;
    }
    if (pos_ == start || value == 0) {
      pos_ = start;
      fail({"a positive integer exponent"});
    }
    return value;
  }

  bool peek_word_token() {
    skip_ws();
    return pos_ + 1 < in_.size() && in_[pos_] == 'p' && (in_[pos_ + 1] == '1' || in_[pos_ + 1] == '2');
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < in_.size() && in_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const char* name) {
    if (!accept(c)) fail({name});
  }

  void skip_ws() {
    while (pos_ < in_.size() && std::isspace(static_cast<unsigned char>(in_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    skip_ws();
    std::string found = pos_ < in_.size() ? "'" + std::string(1, in_[pos_]) + "'" : "end of input";
    throw ParseError(pos_, std::move(expected), std::move(found));
  }

  std::string_view in_;
  std::size_t pos_ = 0;
};

template <class Value, class Mul>
Value power_by_squaring(Value base, std::size_t n, Value one, Mul mul) {
  Value result = std::move(one);
  while (n > 0) {
    if (n & 1) result = mul(result, base);
    n >>= 1;
    if (n > 0) base = mul(base, base);
  }
  return result;
}

}  // namespace

ParseError::ParseError(std::size_t position, std::vector<std::string> expected, std::string found)
    : std::runtime_error("syntax error at position " + std::to_string(position) + ": expected " +
                         join_expected(expected) + ", found " + found),
      position_(position),
      expected_(std::move(expected)) {}

TermExpr parse_term(std::string_view input) { return Parser(input).parse(); }

Tree eval_T(const TermExpr& e) {
  return std::visit(
      [](const auto& n) -> Tree {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, TermExpr::One>) {
          return Tree{};
        } else if constexpr (std::is_same_v<N, TermExpr::WordLit>) {
          return Tree(n.word);
        } else if constexpr (std::is_same_v<N, TermExpr::SigmaApp>) {
          return sigma(eval_T(*n.left), eval_T(*n.right));
        } else if constexpr (std::is_same_v<N, TermExpr::Product>) {
          return mul(eval_T(*n.left), eval_T(*n.right));
        } else if constexpr (std::is_same_v<N, TermExpr::Power>) {
          return power_by_squaring(eval_T(*n.base), n.exponent, Tree{},
                                   [](const Tree& a, const Tree& b) { return mul(a, b); });
        } else {
          return eval_T(*n.inner);
        }
      },
      e.node);
}

UElem eval_U(const TermExpr& e) {
  return std::visit(
      [](const auto& n) -> UElem {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, TermExpr::One>) {
          return UElem{};
        } else if constexpr (std::is_same_v<N, TermExpr::WordLit>) {
          return UElem(n.word);
        } else if constexpr (std::is_same_v<N, TermExpr::SigmaApp>) {
          return sigma_U(eval_U(*n.left), eval_U(*n.right));
        } else if constexpr (std::is_same_v<N, TermExpr::Product>) {
          return mul_U(eval_U(*n.left), eval_U(*n.right));
        } else if constexpr (std::is_same_v<N, TermExpr::Power>) {
          return power(eval_U(*n.base), n.exponent);
        } else {
          return eval_U(*n.inner);
        }
      },
      e.node);
}

}  // namespace cpm
