#pragma once

// Ordinal cost algebra: ordered categories, per-edge contribution vectors,
// path cost accumulation and Pareto dominance on cumulative-length vectors.

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "saferoute/error.hpp"

namespace saferoute {

/// Absolute tolerance (meters) used when comparing cost vectors.
inline constexpr double kEqualityTolerance = 1e-6;

/// One of the K ordered categories. 1-based: index 1 is the best.
struct Category {
  int index = 1;

  friend constexpr auto operator<=>(Category, Category) = default;
};

class CategoryScale {
 public:
  CategoryScale(std::vector<std::string> labels, std::vector<std::string> colors);

  /// The four-level cycling scale: separated path, cycle lane, quiet street,
  /// everything else.
  static CategoryScale four_level();

  /// K categories with generic labels; colors are spread over the four-level
  /// palette.
  static CategoryScale generic(int k);

  int size() const noexcept { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<std::string>& colors() const noexcept { return colors_; }

  bool contains(Category c) const noexcept { return c.index >= 1 && c.index <= size(); }

  /// Throws InvalidCategory when the index is outside 1..K.
  Category category(int index) const;
  void check(Category c) const;

  friend bool operator==(const CategoryScale&, const CategoryScale&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<std::string> colors_;
};

/// Detour factors omega_1..omega_{K-1}, each >= 1.
class WeightVector {
 public:
  explicit WeightVector(std::vector<double> omegas);

  static WeightVector ones(std::size_t count) { return uniform(count, 1.0); }
  static WeightVector uniform(std::size_t count, double omega);

  std::size_t size() const noexcept { return omegas_.size(); }
  double operator[](std::size_t i) const { return omegas_[i]; }
  std::span<const double> values() const noexcept { return omegas_; }

  bool all_ones() const noexcept;

  /// Throws DimensionError unless size() == K - 1.
  void check_against(const CategoryScale& scale) const;

 private:
  std::vector<double> omegas_;
};

/// K non-negative components in meters.
class CostVector {
 public:
  CostVector() = default;
  explicit CostVector(std::size_t k) : c_(k, 0.0) {}
  explicit CostVector(std::vector<double> components);
  CostVector(std::initializer_list<double> components)
      : CostVector(std::vector<double>(components)) {}

  std::size_t size() const noexcept { return c_.size(); }
  double operator[](std::size_t i) const { return c_[i]; }
  std::span<const double> components() const noexcept { return c_; }

  /// this += scale * contribution
  void add_scaled(double scale, std::span<const double> contribution);

  /// d_i >= d_{i+1} for all i, up to the equality tolerance.
  bool is_monotone() const noexcept;

  friend bool operator==(const CostVector&, const CostVector&) = default;

 private:
  std::vector<double> c_;
};

struct EdgeCost {
  double length = 0.0;  // meters, > 0
  Category category;
};

/// 0/1 indicator vector: component i is 1 iff the category is eta_i or worse.
CostVector k_vector(Category category, const CategoryScale& scale);

/// Weighted contribution: component i is prod_{l=i}^{j-1} omega_l for i <= j
/// (1 when i == j) and 0 for i > j, with j the category index.
CostVector k_weighted(Category category, const WeightVector& weights,
                      const CategoryScale& scale);

/// Precomputed k_weighted rows for every category of a scale.
class ContributionTable {
 public:
  ContributionTable(const CategoryScale& scale, const WeightVector& weights);

  int dimension() const noexcept { return k_; }
  std::span<const double> row(Category c) const {
    return {rows_.data() + static_cast<std::size_t>(c.index - 1) * k_,
            static_cast<std::size_t>(k_)};
  }

 private:
  int k_;
  std::vector<double> rows_;
};

/// Sum of length * k_weighted over the edges, in sequence order.
CostVector accumulate(std::span<const EdgeCost> edges, const WeightVector& weights,
                      const CategoryScale& scale);

/// Pareto dominance under kEqualityTolerance: a <= b + eps everywhere and
/// a < b - eps somewhere.
bool dominates(const CostVector& a, const CostVector& b);

/// |a_i - b_i| <= eps for all i.
bool approx_equal(const CostVector& a, const CostVector& b);

/// Nondominated entries of `entries`, in input order. Among eps-equal vectors
/// only the first one is kept.
template <typename Payload>
std::vector<std::pair<CostVector, Payload>> pareto_filter(
    std::vector<std::pair<CostVector, Payload>> entries) {
  std::vector<bool> keep(entries.size(), true);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = 0; j < entries.size() && keep[i]; ++j) {
      if (i == j) continue;
      if (dominates(entries[j].first, entries[i].first) ||
          (j < i && approx_equal(entries[j].first, entries[i].first))) {
        keep[i] = false;
      }
    }
  }
  std::vector<std::pair<CostVector, Payload>> out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (keep[i]) out.push_back(std::move(entries[i]));
  }
  return out;
}

}  // namespace saferoute
