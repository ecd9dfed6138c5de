#ifndef MSK_CHART_HPP
#define MSK_CHART_HPP

#include <optional>
#include <string>
#include <vector>

#include "msk/rational.hpp"

namespace msk {

// Coordinate chart on a model space: ordered unique coordinate names, with
// an optional fibration split into base and fiber coordinates. Charts are
// implicitly star-shaped about the origin (the homotopy operator relies on
// this).
class Chart {
 public:
  Chart() = default;
  explicit Chart(std::vector<std::string> coords);
  // Split chart: coordinates are base followed by fiber.
  Chart(std::vector<std::string> base, std::vector<std::string> fiber);

  int dimension() const { return static_cast<int>(coords_.size()); }
  const std::vector<std::string>& coords() const { return coords_; }
  const std::string& coord(int i) const { return coords_[static_cast<std::size_t>(i)]; }
  std::optional<int> index_of(const std::string& name) const;

  bool has_split() const { return base_count_ >= 0; }
  int base_count() const { return base_count_ < 0 ? dimension() : base_count_; }
  int fiber_count() const { return dimension() - base_count(); }
  bool is_fiber(int index) const { return index >= base_count(); }

  QVector origin() const { return QVector(coords_.size(), Rational(0)); }

  bool operator==(const Chart&) const = default;

 private:
  void validate() const;
  std::vector<std::string> coords_;
  int base_count_ = -1;  // -1: no split
};

}  // namespace msk

#endif
