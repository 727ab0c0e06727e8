#pragma once

// Term syntax shared by the CLI:
//
//   term   := factor ( "*" factor )*
//   factor := atom ( "^" int )*
//   atom   := "1" | word | "S(" term "," term ")" | "(" term ")"
//   word   := ( "p1" | "p2" )+
//
// Whitespace between tokens is ignored, so "p1 p2" is the word p1p2.
// Products are always written with an explicit "*".

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cpmonoid/tree.hpp"
#include "cpmonoid/ucp.hpp"
#include "cpmonoid/word.hpp"

namespace cpm {

struct TermExpr;
using TermPtr = std::unique_ptr<TermExpr>;

struct TermExpr {
  struct One {};
  struct WordLit {
    Word word;
  };
  struct SigmaApp {
    TermPtr left, right;
  };
  struct Product {
    TermPtr left, right;
  };
  struct Power {
    TermPtr base;
    std::size_t exponent;
  };
  struct Paren {
    TermPtr inner;
  };

  std::variant<One, WordLit, SigmaApp, Product, Power, Paren> node;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, std::vector<std::string> expected, std::string found);

  /// Zero-based byte offset into the input.
  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

/// Throws ParseError.
TermExpr parse_term(std::string_view input);

enum class EvalMode { T, U };

/// Evaluates in T, without reduction.
Tree eval_T(const TermExpr& e);
/// Evaluates in U, reducing after every operation.
UElem eval_U(const TermExpr& e);

}  // namespace cpm
