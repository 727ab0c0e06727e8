#include "cpmonoid/monoid_json.hpp"

#include <stdexcept>
#include <unordered_map>

#include "cpmonoid/render.hpp"
#include "json.hpp"

namespace cpm {

using nlohmann::json;
using nlohmann::ordered_json;

FiniteMonoid finite_monoid_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("monoid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("elements") || !doc.contains("identity") || !doc.contains("table")) {
    throw std::invalid_argument("monoid JSON: expected an object with elements, identity and table");
  }
  const auto& elements = doc["elements"];
  if (!elements.is_array()) throw std::invalid_argument("monoid JSON: elements must be an array");

  FiniteMonoid m;
  std::unordered_map<std::string, std::size_t> index;
  for (const auto& e : elements) {
    if (!e.is_string()) throw std::invalid_argument("monoid JSON: labels must be strings");
    auto label = e.get<std::string>();
    index.emplace(label, m.labels.size());
    m.labels.push_back(std::move(label));
  }
  auto lookup = [&](const json& v) {
    if (!v.is_string()) throw std::invalid_argument("monoid JSON: table entries must be labels");
    auto it = index.find(v.get<std::string>());
    if (it == index.end()) throw std::invalid_argument("monoid JSON: unknown label '" + v.get<std::string>() + "'");
    return it->second;
  };
  m.identity = lookup(doc["identity"]);

  const auto& table = doc["table"];
  if (!table.is_array()) throw std::invalid_argument("monoid JSON: table must be an array of rows");
  for (const auto& row : table) {
    if (!row.is_array()) throw std::invalid_argument("monoid JSON: table must be an array of rows");
    auto& out = m.table.emplace_back();
    for (const auto& v : row) out.push_back(lookup(v));
  }
  return m;
}

std::string finite_monoid_to_json(const FiniteMonoid& m) {
  ordered_json doc;
  doc["elements"] = m.labels;
  doc["identity"] = m.labels.at(m.identity);
  auto& table = doc["table"] = ordered_json::array();
  for (const auto& row : m.table) {
    auto& r = table.emplace_back(ordered_json::array());
    for (auto v : row) r.push_back(m.labels.at(v));
  }
  return doc.dump();
}

std::string embedding_to_json(const std::vector<std::pair<std::string, UElem>>& embedding) {
  ordered_json doc = ordered_json::object();
  for (const auto& [label, u] : embedding) doc[label] = to_sexpr(u.tree());
  return doc.dump(2);
}

}  // namespace cpm
