#include "saferoute/ordinal.hpp"

#include <algorithm>
#include <cmath>

namespace saferoute {

namespace {

const std::vector<std::string>& four_level_labels() {
  static const std::vector<std::string> labels = {"separated cycleway", "cycle lane",
                                                  "quiet street", "other road"};
  return labels;
}

const std::vector<std::string>& four_level_colors() {
  static const std::vector<std::string> colors = {"darkgreen", "lightgreen", "orange", "red"};
  return colors;
}

void require_same_size(const CostVector& a, const CostVector& b) {
  if (a.size() != b.size()) {
    throw DimensionError("cost vectors of size " + std::to_string(a.size()) + " and " +
                         std::to_string(b.size()) + " are not comparable");
  }
}

}  // namespace

CategoryScale::CategoryScale(std::vector<std::string> labels, std::vector<std::string> colors)
    : labels_(std::move(labels)), colors_(std::move(colors)) {
  if (labels_.size() < 2) throw DimensionError("a category scale needs at least 2 categories");
  if (colors_.size() != labels_.size()) {
    throw DimensionError("category scale has " + std::to_string(labels_.size()) +
                         " labels but " + std::to_string(colors_.size()) + " colors");
  }
}

CategoryScale CategoryScale::four_level() { return {four_level_labels(), four_level_colors()}; }

CategoryScale CategoryScale::generic(int k) {
  if (k == 4) return four_level();
  if (k < 2) throw DimensionError("a category scale needs at least 2 categories");
  std::vector<std::string> labels;
  std::vector<std::string> colors;
  for (int i = 0; i < k; ++i) {
    labels.push_back("category " + std::to_string(i + 1));
    const auto slot = static_cast<std::size_t>(std::lround(3.0 * i / (k - 1)));
    colors.push_back(four_level_colors()[slot]);
  }
  return {std::move(labels), std::move(colors)};
}

Category CategoryScale::category(int index) const {
  Category c{index};
  check(c);
  return c;
}

void CategoryScale::check(Category c) const {
  if (!contains(c)) {
    throw InvalidCategory("category index " + std::to_string(c.index) + " outside 1.." +
                          std::to_string(size()));
  }
}

WeightVector::WeightVector(std::vector<double> omegas) : omegas_(std::move(omegas)) {
  for (std::size_t i = 0; i < omegas_.size(); ++i) {
    if (!std::isfinite(omegas_[i]) || omegas_[i] < 1.0) {
      throw InvalidWeight("weight omega_" + std::to_string(i + 1) + " = " +
                          std::to_string(omegas_[i]) + " must be finite and >= 1");
    }
  }
}

WeightVector WeightVector::uniform(std::size_t count, double omega) {
  return WeightVector(std::vector<double>(count, omega));
}

bool WeightVector::all_ones() const noexcept {
  return std::all_of(omegas_.begin(), omegas_.end(), [](double w) { return w == 1.0; });
}

void WeightVector::check_against(const CategoryScale& scale) const {
  if (omegas_.size() + 1 != static_cast<std::size_t>(scale.size())) {
    throw DimensionError("expected " + std::to_string(scale.size() - 1) + " weights for " +
                         std::to_string(scale.size()) + " categories, got " +
                         std::to_string(omegas_.size()));
  }
}

CostVector::CostVector(std::vector<double> components) : c_(std::move(components)) {
  for (double v : c_) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw GeometryError("cost components must be finite and non-negative");
    }
  }
}

void CostVector::add_scaled(double scale, std::span<const double> contribution) {
  if (contribution.size() != c_.size()) {
    throw DimensionError("contribution of size " + std::to_string(contribution.size()) +
                         " added to cost vector of size " + std::to_string(c_.size()));
  }
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += scale * contribution[i];
}

bool CostVector::is_monotone() const noexcept {
  for (std::size_t i = 0; i + 1 < c_.size(); ++i) {
    if (c_[i] + kEqualityTolerance < c_[i + 1]) return false;
  }
  return true;
}

CostVector k_vector(Category category, const CategoryScale& scale) {
  scale.check(category);
  std::vector<double> k(static_cast<std::size_t>(scale.size()), 0.0);
  for (int i = 1; i <= category.index; ++i) k[static_cast<std::size_t>(i - 1)] = 1.0;
  return CostVector(std::move(k));
}

CostVector k_weighted(Category category, const WeightVector& weights,
                      const CategoryScale& scale) {
  scale.check(category);
  weights.check_against(scale);
  const int j = category.index;
  std::vector<double> k(static_cast<std::size_t>(scale.size()), 0.0);
  for (int i = 1; i <= j; ++i) {
    double product = 1.0;
    for (int l = i; l <= j - 1; ++l) product *= weights[static_cast<std::size_t>(l - 1)];
    k[static_cast<std::size_t>(i - 1)] = product;
  }
  return CostVector(std::move(k));
}

ContributionTable::ContributionTable(const CategoryScale& scale, const WeightVector& weights)
    : k_(scale.size()) {
  weights.check_against(scale);
  rows_.reserve(static_cast<std::size_t>(k_ * k_));
  for (int j = 1; j <= k_; ++j) {
    const CostVector row = k_weighted(Category{j}, weights, scale);
    rows_.insert(rows_.end(), row.components().begin(), row.components().end());
  }
}

CostVector accumulate(std::span<const EdgeCost> edges, const WeightVector& weights,
                      const CategoryScale& scale) {
  const ContributionTable table(scale, weights);
  CostVector d(static_cast<std::size_t>(scale.size()));
  for (const EdgeCost& e : edges) {
    scale.check(e.category);
    if (!(e.length > 0.0)) throw GeometryError("edge length must be positive");
    d.add_scaled(e.length, table.row(e.category));
  }
  return d;
}

bool dominates(const CostVector& a, const CostVector& b) {
  require_same_size(a, b);
  bool strictly_better = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i] + kEqualityTolerance) return false;
    if (a[i] < b[i] - kEqualityTolerance) strictly_better = true;
  }
  return strictly_better;
}

bool approx_equal(const CostVector& a, const CostVector& b) {
  require_same_size(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > kEqualityTolerance) return false;
  }
  return true;
}

}  // namespace saferoute
