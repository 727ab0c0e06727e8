#include "cpmonoid/render.hpp"

#include <cstddef>

namespace cpm {

namespace {

using Nodes = std::span<const Tree::Node>;

std::size_t right_child(Nodes nodes, std::size_t i) { return i + 1 + nodes[i + 1].span; }

std::string word_text(const Word& w, bool unicode) {
  if (!unicode) return w.to_string();
  if (w.is_identity()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.length(); ++i) out += w[i] == Generator::P1 ? "π1" : "π2";
  return out;
}

void sexpr(Nodes nodes, std::size_t i, std::string& out) {
  if (nodes[i].is_leaf()) {
    out += nodes[i].color.to_string();
    return;
  }
  out += "S(";
  sexpr(nodes, i + 1, out);
  out += ',';
  sexpr(nodes, right_child(nodes, i), out);
  out += ')';
}

void ascii(Nodes nodes, std::size_t i, const std::string& prefix, bool last, bool root, bool unicode,
           std::string& out) {
  out += prefix;
  if (!root) out += last ? "`-- " : "+-- ";
  if (nodes[i].is_leaf()) {
    out += word_text(nodes[i].color, unicode);
    out += '\n';
    return;
  }
  out += "S\n";
  const std::string child_prefix = root ? prefix : prefix + (last ? "    " : "|   ");
  ascii(nodes, i + 1, child_prefix, false, false, unicode, out);
  ascii(nodes, right_child(nodes, i), child_prefix, true, false, unicode, out);
}

}  // namespace

std::string render(const Tree& a, RenderFormat format, RenderOptions options) {
  auto nodes = a.nodes();
  std::string out;
  switch (format) {
    case RenderFormat::Sexpr:
      sexpr(nodes, 0, out);
      break;
    case RenderFormat::Ascii:
      ascii(nodes, 0, "", true, true, options.unicode, out);
      break;
    case RenderFormat::Dot: {
      out += "digraph tree {\n  node [fontname=\"Helvetica\"];\n";
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        out += "  n" + std::to_string(i);
        if (nodes[i].is_leaf()) {
          out += " [shape=plaintext, label=\"" + nodes[i].color.to_string() + "\"];\n";
        } else {
          out += " [shape=circle, label=\"\", width=0.15];\n";
        }
      }
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].is_leaf()) continue;
        out += "  n" + std::to_string(i) + " -> n" + std::to_string(i + 1) + " [label=\"p1\"];\n";
        out += "  n" + std::to_string(i) + " -> n" + std::to_string(right_child(nodes, i)) +
               " [label=\"p2\"];\n";
      }
      out += "}\n";
      break;
    }
  }
  return out;
}

}  // namespace cpm
