#pragma once

// FiniteMonoid as JSON:
//   {"elements": ["e", "a"], "identity": "e", "table": [["e", "a"], ["a", "e"]]}
// where table[i][j] is the label of elements[i]·elements[j].

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cpmonoid/dcp.hpp"
#include "cpmonoid/ucp.hpp"

namespace cpm {

/// Throws std::invalid_argument on malformed JSON, a schema violation, or an
/// unknown label. Monoid laws are not checked here; see validate_finite_monoid.
FiniteMonoid finite_monoid_from_json(std::string_view text);
std::string finite_monoid_to_json(const FiniteMonoid& m);

/// {"label": "sexpr", ...} in element order.
std::string embedding_to_json(const std::vector<std::pair<std::string, UElem>>& embedding);

}  // namespace cpm
