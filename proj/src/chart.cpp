#include "msk/chart.hpp"

#include <set>

#include "msk/errors.hpp"

namespace msk {

Chart::Chart(std::vector<std::string> coords) : coords_(std::move(coords)) { validate(); }

Chart::Chart(std::vector<std::string> base, std::vector<std::string> fiber)
    : coords_(std::move(base)), base_count_(static_cast<int>(coords_.size())) {
  coords_.insert(coords_.end(), fiber.begin(), fiber.end());
  validate();
}

std::optional<int> Chart::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

void Chart::validate() const {
  std::set<std::string> seen;
  for (const std::string& c : coords_) {
    if (c.empty()) throw argument_error("empty coordinate name");
    if (!seen.insert(c).second)
      throw argument_error("duplicate coordinate name '" + c + "'");
  }
}

}  // namespace msk
