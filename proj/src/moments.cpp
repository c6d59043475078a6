#include "edgeworth/moments.hpp"

#include <array>
#include <cmath>
#include <utility>

#include "edgeworth/errors.hpp"

namespace edgeworth {

namespace detail {

IndexedTable::IndexedTable(std::size_t dimension, int max_order)
    : dimension_(dimension), max_order_(max_order) {
  if (dimension == 0) throw UsageError("moment table: dimension must be positive");
  if (max_order < 2 || max_order > kMaxMomentOrder) {
    throw UnsupportedOrderError("moment table: max_order must be in 2..6");
  }
}

void IndexedTable::set(const MultiIndex& index, double value) {
  if (index.dimension() != dimension_) throw UsageError("moment table: dimension mismatch");
  if (index.order() < 2 || index.order() > max_order_) {
    throw UnsupportedOrderError("moment table: entry order " + std::to_string(index.order()) +
                                " outside 2.." + std::to_string(max_order_));
  }
  entries_[index] = value;
}

bool IndexedTable::contains(const MultiIndex& index) const { return entries_.contains(index); }

bool IndexedTable::complete() const {
  for (const auto& idx : all_indices(dimension_, 2, max_order_)) {
    if (!entries_.contains(idx)) return false;
  }
  return true;
}

double IndexedTable::lookup(const MultiIndex& index, double order_zero) const {
  if (index.dimension() != dimension_) throw UsageError("moment table: dimension mismatch");
  if (index.order() == 0) return order_zero;
  if (index.order() == 1) return 0.0;
  if (index.order() > max_order_) {
    throw UnsupportedOrderError("moment table: order " + std::to_string(index.order()) +
                                " exceeds " + std::to_string(max_order_));
  }
  auto it = entries_.find(index);
  if (it == entries_.end()) {
    throw IncompleteTableError("moment table: missing entry " + index.to_string());
  }
  return it->second;
}

}  // namespace detail

CumulantTable CumulantTable::zeroed_above(int order) const {
  CumulantTable out(dimension(), max_order());
  for (const auto& [idx, v] : entries()) out.set(idx, idx.order() > order ? 0.0 : v);
  return out;
}

MeanMomentTable::MeanMomentTable(std::size_t dimension, int max_order)
    : dimension_(dimension), max_order_(max_order) {}

void MeanMomentTable::set(const MultiIndex& index, InvNPoly value) {
  if (index.dimension() != dimension_) throw UsageError("mean moment table: dimension mismatch");
  entries_[index] = std::move(value);
}

const InvNPoly& MeanMomentTable::at(const MultiIndex& index) const {
  auto it = entries_.find(index);
  if (it == entries_.end()) {
    throw IncompleteTableError("mean moment table: missing entry " + index.to_string());
  }
  return it->second;
}

// ---------------------------------------------------------------------------
// Set partitions

namespace {

// Restricted growth strings: label[i] <= 1 + max(label[0..i-1]).
void grow_partitions(std::vector<int>& labels, int position, int blocks,
                     std::vector<SetPartition>& out) {
  const int k = static_cast<int>(labels.size());
  if (position == k) {
    SetPartition partition(blocks);
    for (int i = 0; i < k; ++i) partition[labels[i]].push_back(i);
    out.push_back(std::move(partition));
    return;
  }
  for (int b = 0; b <= blocks; ++b) {
    labels[position] = b;
    grow_partitions(labels, position + 1, b == blocks ? blocks + 1 : blocks, out);
  }
}

std::array<std::vector<SetPartition>, kMaxMomentOrder + 1> build_partition_cache() {
  std::array<std::vector<SetPartition>, kMaxMomentOrder + 1> cache;
  cache[0].push_back({});
  for (int k = 1; k <= kMaxMomentOrder; ++k) {
    std::vector<int> labels(k, 0);
    grow_partitions(labels, 0, 0, cache[k]);
  }
  return cache;
}

// Variable label of each element of the multiset described by `index`,
// e.g. (2,1,1) -> {0,0,1,2}.
std::vector<std::size_t> expand_labels(const MultiIndex& index) {
  std::vector<std::size_t> labels;
  labels.reserve(index.order());
  for (std::size_t v = 0; v < index.dimension(); ++v) {
    for (int e = 0; e < index[v]; ++e) labels.push_back(v);
  }
  return labels;
}

MultiIndex block_index(const std::vector<int>& block, const std::vector<std::size_t>& labels,
                       std::size_t dimension) {
  std::vector<int> e(dimension, 0);
  for (int pos : block) ++e[labels[pos]];
  return MultiIndex(std::move(e));
}

bool has_singleton(const SetPartition& partition) {
  for (const auto& block : partition) {
    if (block.size() == 1) return true;
  }
  return false;
}

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

const std::vector<SetPartition>& set_partitions(int k) {
  static const auto cache = build_partition_cache();
  if (k < 0 || k > kMaxMomentOrder) {
    throw UnsupportedOrderError("set_partitions: k must be in 0..6");
  }
  return cache[k];
}

// ---------------------------------------------------------------------------
// Gaussian moments

double gaussian_xy_moment(int a, int b, double rho) {
  if (a < 0 || b < 0) throw UsageError("gaussian_xy_moment: negative exponent");
  if ((a + b) % 2 != 0) return 0.0;
  if (a == 0 && b == 0) return 1.0;
  if (a == 0) return gaussian_xy_moment(b, a, rho);
  // Integration by parts in X: E[X^a Y^b] = (a-1) E[X^(a-2) Y^b] + rho b E[X^(a-1) Y^(b-1)].
  double value = 0.0;
  if (a >= 2) value += (a - 1) * gaussian_xy_moment(a - 2, b, rho);
  if (b >= 1) value += rho * b * gaussian_xy_moment(a - 1, b - 1, rho);
  return value;
}

MomentTable pearson_central_moments(double rho) {
  if (!(std::abs(rho) < 1.0)) throw UsageError("pearson_central_moments: |rho| must be < 1");

  std::array<std::array<double, kMaxMomentOrder + 1>, kMaxMomentOrder + 1> binom{};
  for (int i = 0; i <= kMaxMomentOrder; ++i) {
    binom[i][0] = 1.0;
    for (int j = 1; j <= i; ++j) binom[i][j] = binom[i - 1][j - 1] + (j < i ? binom[i - 1][j] : 0.0);
  }

  // Variables: X, Y, X^2 - 1, Y^2 - 1, XY - rho.
  MomentTable table(5, kMaxMomentOrder);
  for (const auto& idx : all_indices(5, 2, kMaxMomentOrder)) {
    const int i = idx[0], j = idx[1], k = idx[2], l = idx[3], m = idx[4];
    double sum = 0.0;
    for (int p = 0; p <= k; ++p) {
      const double cp = binom[k][p] * ((k - p) % 2 ? -1.0 : 1.0);
      for (int q = 0; q <= l; ++q) {
        const double cq = binom[l][q] * ((l - q) % 2 ? -1.0 : 1.0);
        for (int s = 0; s <= m; ++s) {
          const double cs = binom[m][s] * std::pow(-rho, m - s);
          sum += cp * cq * cs * gaussian_xy_moment(i + 2 * p + s, j + 2 * q + s, rho);
        }
      }
    }
    table.set(idx, sum);
  }
  return table;
}

// ---------------------------------------------------------------------------
// Moment <-> cumulant conversion

CumulantTable cumulants_from_moments(const MomentTable& moments) {
  CumulantTable cumulants(moments.dimension(), moments.max_order());
  for (const auto& idx : all_indices(moments.dimension(), 2, moments.max_order())) {
    const auto labels = expand_labels(idx);
    double kappa = 0.0;
    for (const auto& partition : set_partitions(idx.order())) {
      if (has_singleton(partition)) continue;
      const int blocks = static_cast<int>(partition.size());
      double term = (blocks % 2 ? 1.0 : -1.0) * factorial(blocks - 1);
      for (const auto& block : partition) {
        term *= moments.value(block_index(block, labels, idx.dimension()));
      }
      kappa += term;
    }
    cumulants.set(idx, kappa);
  }
  return cumulants;
}

MomentTable moments_from_cumulants(const CumulantTable& cumulants) {
  MomentTable moments(cumulants.dimension(), cumulants.max_order());
  for (const auto& idx : all_indices(cumulants.dimension(), 2, cumulants.max_order())) {
    const auto labels = expand_labels(idx);
    double mu = 0.0;
    for (const auto& partition : set_partitions(idx.order())) {
      if (has_singleton(partition)) continue;
      double term = 1.0;
      for (const auto& block : partition) {
        term *= cumulants.value(block_index(block, labels, idx.dimension()));
      }
      mu += term;
    }
    moments.set(idx, mu);
  }
  return moments;
}

InvNPoly sample_mean_moment(const CumulantTable& cumulants, const MultiIndex& index) {
  if (index.order() > kMaxMomentOrder) {
    throw UnsupportedOrderError("sample_mean_moment: order " + std::to_string(index.order()) +
                                " exceeds 6");
  }
  if (index.dimension() != cumulants.dimension()) {
    throw UsageError("sample_mean_moment: dimension mismatch");
  }
  const int order = index.order();
  if (order == 0) return InvNPoly::term(0, 1.0);

  const auto labels = expand_labels(index);
  InvNPoly result;
  for (const auto& partition : set_partitions(order)) {
    if (has_singleton(partition)) continue;
    double term = 1.0;
    for (const auto& block : partition) {
      term *= cumulants.value(block_index(block, labels, index.dimension()));
    }
    const int inv_n_power = order - static_cast<int>(partition.size());
    result.add_term(2 * inv_n_power, term);
  }
  return result;
}

MeanMomentTable mean_moment_table(const CumulantTable& cumulants, int max_order) {
  if (max_order < 0) max_order = cumulants.max_order();
  if (max_order > kMaxMomentOrder) {
    throw UnsupportedOrderError("mean_moment_table: order exceeds 6");
  }
  MeanMomentTable table(cumulants.dimension(), max_order);
  for (const auto& idx : all_indices(cumulants.dimension(), 0, max_order)) {
    table.set(idx, sample_mean_moment(cumulants, idx));
  }
  return table;
}

}  // namespace edgeworth
