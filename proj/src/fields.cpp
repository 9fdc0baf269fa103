#include "postft/fields.hpp"

#include <array>

#include <nlohmann/json.hpp>

namespace postft {

bool closed_equal(const Closed& a, const Closed& b) {
  if (a.index() != b.index()) return false;
  if (std::holds_alternative<GraphClosed>(a))
    return std::get<GraphClosed>(a).points == std::get<GraphClosed>(b).points;
  if (std::holds_alternative<CatalogClosed>(a))
    return std::get<CatalogClosed>(a).labels == std::get<CatalogClosed>(b).labels;
  return true;
}

std::optional<std::array<Bordism, 3>> BordismModel::cylinder_bends(const Closed&) const {
  return std::nullopt;
}

std::vector<std::vector<int>> FieldsSystem::isotopy_classes(const Closed& M) const {
  auto n = fields_on_closed(M).size();
  std::vector<std::vector<int>> classes(n);
  for (size_t i = 0; i < n; ++i) classes[i] = {static_cast<int>(i)};
  return classes;
}

nlohmann::json FieldsSystem::render_field(const Field& f) const {
  nlohmann::json arr = nlohmann::json::array();
  for (int x : f.v) arr.push_back(x);
  return arr;
}

}  // namespace postft
