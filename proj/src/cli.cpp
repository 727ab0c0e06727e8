#include "cpmonoid/cli.hpp"

#include <fstream>
#include <functional>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "cpmonoid/branch.hpp"
#include "cpmonoid/dcp.hpp"
#include "cpmonoid/invert.hpp"
#include "cpmonoid/kernels.hpp"
#include "cpmonoid/monoid_json.hpp"
#include "cpmonoid/render.hpp"
#include "cpmonoid/term.hpp"

namespace cpm {

namespace {

// Raised for conditions that are answers rather than mistakes: no inverse,
// not a unit, not a monoid.
struct DomainFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input that is not a term syntax error: unreadable files, bad JSON.
struct UsageFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const char* flag(bool b) { return b ? "true" : "false"; }

RenderFormat parse_format(const std::string& name) {
  if (name == "ascii") return RenderFormat::Ascii;
  if (name == "dot") return RenderFormat::Dot;
  return RenderFormat::Sexpr;
}

void print_tree(std::ostream& out, const Tree& t, const std::string& format, bool unicode) {
  const auto text = render(t, parse_format(format), {unicode});
  out << text;
  if (text.empty() || text.back() != '\n') out << '\n';
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageFailure("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

UElem eval_reduced(const std::string& expr) { return eval_U(parse_term(expr)); }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Arithmetic in the universal CQP monoid T and the universal CP monoid U", "cpm"};
  app.require_subcommand(1);

  std::function<void()> action;

  std::string expr, expr2, mode = "U", format = "sexpr", side = "unit", table_path;
  bool unicode = false;
  std::size_t max_order = 100, depth = 3, max_degree = std::numeric_limits<std::size_t>::max();

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a term in T or U");
  eval_cmd->add_option("expr", expr, "Term, e.g. \"S(p1,p2) * p2\"")->required();
  eval_cmd->add_option("--in", mode, "Monoid to evaluate in")->check(CLI::IsMember({"T", "U"}));
  eval_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"sexpr", "ascii", "dot"}));
  eval_cmd->add_flag("--unicode", unicode, "Write pi symbols in ascii output");
  eval_cmd->callback([&] {
    action = [&] {
      const auto term = parse_term(expr);
      print_tree(out, mode == "T" ? eval_T(term) : eval_U(term).tree(), format, unicode);
    };
  });

  auto* reduce_cmd = app.add_subcommand("reduce", "Evaluate in T, then print the reduced normal form");
  reduce_cmd->add_option("expr", expr, "Term")->required();
  reduce_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"sexpr", "ascii", "dot"}));
  reduce_cmd->add_flag("--unicode", unicode, "Write pi symbols in ascii output");
  reduce_cmd->callback([&] {
    action = [&] { print_tree(out, reduce(eval_T(parse_term(expr))).tree(), format, unicode); };
  });

  auto* beta_cmd = app.add_subcommand("beta", "Print the branch set of the term evaluated in T");
  beta_cmd->add_option("expr", expr, "Term")->required();
  beta_cmd->callback([&] { action = [&] { out << to_string(beta(eval_T(parse_term(expr)))) << '\n'; }; });

  auto* equiv_cmd = app.add_subcommand("equiv", "Decide whether two terms are equal in U");
  equiv_cmd->add_option("lhs", expr, "Term")->required();
  equiv_cmd->add_option("rhs", expr2, "Term")->required();
  equiv_cmd->callback([&] {
    action = [&] { out << flag(equivalent(eval_T(parse_term(expr)), eval_T(parse_term(expr2)))) << '\n'; };
  });

  auto* inv_cmd = app.add_subcommand("inv", "Construct a left, right or two-sided inverse in U");
  inv_cmd->add_option("expr", expr, "Term")->required();
  inv_cmd->add_option("--side", side, "Which inverse")->check(CLI::IsMember({"left", "right", "unit"}));
  inv_cmd->callback([&] {
    action = [&] {
      const UElem a = eval_reduced(expr);
      std::optional<UElem> inverse;
      if (side == "left") {
        inverse = left_inverse(a);
      } else if (side == "right") {
        inverse = right_inverse(a);
      } else if (is_unit(a)) {
        inverse = unit_inverse(a);
      }
      if (!inverse) {
        throw DomainFailure(side == "unit" ? "not a unit" : "no " + side + " inverse");
      }
      out << to_sexpr(inverse->tree()) << '\n';
    };
  });

  auto* order_cmd = app.add_subcommand("order", "Order of a unit of U, searched up to a bound");
  order_cmd->add_option("expr", expr, "Term")->required();
  order_cmd->add_option("--max", max_order, "Largest order to try")->check(CLI::PositiveNumber);
  order_cmd->callback([&] {
    action = [&] {
      const UElem a = eval_reduced(expr);
      if (!is_unit(a)) throw DomainFailure("not a unit");
      const auto result = unit_order(a, max_order);
      if (result.exceeds_bound()) {
        out << "order exceeds " << max_order << '\n';
      } else {
        out << "order " << *result.order << '\n';
      }
    };
  });

  auto* embed_cmd = app.add_subcommand("embed", "Embed a finite monoid given as a JSON table into U");
  embed_cmd->add_option("table", table_path, "JSON file")->required();
  embed_cmd->callback([&] {
    action = [&] {
      FiniteMonoid m;
      try {
        m = finite_monoid_from_json(read_file(table_path));
      } catch (const std::invalid_argument& e) {
        throw UsageFailure(e.what());
      }
      if (auto defect = validate_finite_monoid(m)) throw DomainFailure("not a monoid: " + defect->message);
      out << embedding_to_json(embed_finite_monoid(m)) << '\n';
    };
  });

  auto* classify_cmd = app.add_subcommand("classify-colors", "Left cofinite/independent flags of the leaf colors");
  classify_cmd->add_option("expr", expr, "Term")->required();
  classify_cmd->callback([&] {
    action = [&] {
      const auto c = family_classify(eval_reduced(expr).tree().colors());
      out << "cofinite: " << flag(c.cofinite) << '\n'
          << "independent: " << flag(c.independent) << '\n'
          << "minimally_cofinite: " << flag(c.minimally_cofinite) << '\n'
          << "maximally_independent: " << flag(c.maximally_independent) << '\n';
    };
  });

  auto* gen_cmd = app.add_subcommand("gen-units", "List permutation images over all shapes with at most k leaves");
  gen_cmd->add_option("--depth", depth, "Largest number of leaves k")->check(CLI::Range(2, 8));
  gen_cmd->add_option("--max-degree", max_degree, "Only print images of at most this degree");
  gen_cmd->callback([&] {
    action = [&] {
      for (const auto& u : kernels::perm_images(depth)) {
        if (u.degree() <= max_degree) out << to_sexpr(u.tree()) << '\n';
      }
    };
  });

  std::vector<const char*> argv{"cpm"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (action) action();
    return kExitOk;
  } catch (const ParseError& e) {
    err << "cpm: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageFailure& e) {
    err << "cpm: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainFailure& e) {
    err << "cpm: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::domain_error& e) {
    err << "cpm: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace cpm
