#pragma once

// Joint central moments and cumulants, and moments of sample means as
// polynomials in 1/n.

#include <cstddef>
#include <map>
#include <vector>

#include "edgeworth/series.hpp"

namespace edgeworth {

inline constexpr int kMaxMomentOrder = 6;

namespace detail {

// Values keyed by multi-index of order 2..max_order over centered variables.
class IndexedTable {
 public:
  using Entries = std::map<MultiIndex, double>;

  IndexedTable(std::size_t dimension, int max_order);

  std::size_t dimension() const noexcept { return dimension_; }
  int max_order() const noexcept { return max_order_; }
  const Entries& entries() const noexcept { return entries_; }

  void set(const MultiIndex& index, double value);
  bool contains(const MultiIndex& index) const;
  // True when every index of order 2..max_order has an entry.
  bool complete() const;

 protected:
  // Order 1 is zero for centered variables; order 0 is `order_zero`.
  double lookup(const MultiIndex& index, double order_zero) const;

 private:
  std::size_t dimension_;
  int max_order_;
  Entries entries_;
};

}  // namespace detail

/// Central moments mu_index = E[prod (X_i - mu_i)^index_i].
class MomentTable : public detail::IndexedTable {
 public:
  using IndexedTable::IndexedTable;
  double value(const MultiIndex& index) const { return lookup(index, 1.0); }
};

/// Joint cumulants kappa_index of the same centered variables.
class CumulantTable : public detail::IndexedTable {
 public:
  using IndexedTable::IndexedTable;
  double value(const MultiIndex& index) const { return lookup(index, 0.0); }

  // Copy with every cumulant above `order` set to zero.
  CumulantTable zeroed_above(int order) const;
};

/// Moments of centered sample means, bar-mu_index, as polynomials in 1/n.
class MeanMomentTable {
 public:
  MeanMomentTable(std::size_t dimension, int max_order);

  std::size_t dimension() const noexcept { return dimension_; }
  int max_order() const noexcept { return max_order_; }

  void set(const MultiIndex& index, InvNPoly value);
  // Throws IncompleteTableError for indices without an entry.
  const InvNPoly& at(const MultiIndex& index) const;

 private:
  std::size_t dimension_;
  int max_order_;
  std::map<MultiIndex, InvNPoly> entries_;
};

/// One set partition of {0, ..., k-1}; each block lists element positions.
using SetPartition = std::vector<std::vector<int>>;

/// All set partitions of a k-element set, k <= kMaxMomentOrder (cached).
const std::vector<SetPartition>& set_partitions(int k);

/// E[X^a Y^b] for a standard bivariate normal pair with correlation rho.
double gaussian_xy_moment(int a, int b, double rho);

/// Central moments up to order 6 of (X, Y, X^2-1, Y^2-1, XY-rho) for a
/// standard bivariate normal pair.
MomentTable pearson_central_moments(double rho);

CumulantTable cumulants_from_moments(const MomentTable& moments);
MomentTable moments_from_cumulants(const CumulantTable& cumulants);

/// bar-mu_index from the cumulants of one observation. Sample-mean
/// cumulants scale as kappa * n^(1 - order), so each partition of the index
/// contributes prod(kappa_block) / n^(order - blocks).
InvNPoly sample_mean_moment(const CumulantTable& cumulants, const MultiIndex& index);

/// Every bar-mu of order <= max_order (defaults to the cumulant table's).
MeanMomentTable mean_moment_table(const CumulantTable& cumulants, int max_order = -1);

}  // namespace edgeworth
