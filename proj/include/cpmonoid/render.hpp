#pragma once

#include <string>

#include "cpmonoid/tree.hpp"

namespace cpm {

enum class RenderFormat { Sexpr, Ascii, Dot };

struct RenderOptions {
  /// ASCII only: spell generators as π1, π2 instead of p1, p2.
  bool unicode = false;
};

/// Sexpr output re-parses to an equal tree. ASCII is an indented outline with
/// the left child first; DOT numbers vertices in preorder.
std::string render(const Tree& a, RenderFormat format, RenderOptions options = {});

inline std::string to_sexpr(const Tree& a) { return render(a, RenderFormat::Sexpr); }

}  // namespace cpm
