#include "edgeworth/series.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "edgeworth/errors.hpp"

namespace edgeworth {

// ---------------------------------------------------------------------------
// MultiIndex

MultiIndex::MultiIndex(std::size_t dimension) : exponents_(dimension, 0) {}

MultiIndex::MultiIndex(std::vector<int> exponents) : exponents_(std::move(exponents)) {
  for (int e : exponents_) {
    if (e < 0) throw UsageError("MultiIndex: negative exponent");
  }
  order_ = std::accumulate(exponents_.begin(), exponents_.end(), 0);
}

MultiIndex::MultiIndex(std::initializer_list<int> exponents)
    : MultiIndex(std::vector<int>(exponents)) {}

MultiIndex MultiIndex::unit(std::size_t dimension, std::size_t variable) {
  if (variable >= dimension) throw UsageError("MultiIndex::unit: variable out of range");
  std::vector<int> e(dimension, 0);
  e[variable] = 1;
  return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  if (dimension() != other.dimension()) throw UsageError("MultiIndex: dimension mismatch");
  std::vector<int> e(exponents_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exponents_[i];
  return MultiIndex(std::move(e));
}

std::string MultiIndex::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (i) os << ',';
    os << exponents_[i];
  }
  os << ')';
  return os.str();
}

namespace {

void enumerate_indices(std::vector<int>& current, std::size_t position, int remaining,
                       int min_order, int max_order, std::vector<MultiIndex>& out) {
  if (position == current.size()) {
    const int order = max_order - remaining;
    if (order >= min_order) out.emplace_back(current);
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    current[position] = e;
    enumerate_indices(current, position + 1, remaining - e, min_order, max_order, out);
  }
  current[position] = 0;
}

}  // namespace

std::vector<MultiIndex> all_indices(std::size_t dimension, int min_order, int max_order) {
  std::vector<MultiIndex> out;
  if (max_order < 0 || dimension == 0) return out;
  std::vector<int> current(dimension, 0);
  enumerate_indices(current, 0, max_order, min_order, max_order, out);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// TruncatedTaylor

TruncatedTaylor::TruncatedTaylor(std::size_t dimension, int degree_cap)
    : dimension_(dimension), degree_cap_(degree_cap) {
  if (dimension == 0) throw UsageError("TruncatedTaylor: dimension must be positive");
  if (degree_cap < 0) throw UsageError("TruncatedTaylor: negative degree cap");
}

TruncatedTaylor TruncatedTaylor::constant(std::size_t dimension, int degree_cap, double value) {
  TruncatedTaylor p(dimension, degree_cap);
  p.add_term(MultiIndex(dimension), value);
  return p;
}

TruncatedTaylor TruncatedTaylor::variable(std::size_t dimension, int degree_cap, std::size_t var,
                                          double coefficient) {
  TruncatedTaylor p(dimension, degree_cap);
  p.add_term(MultiIndex::unit(dimension, var), coefficient);
  return p;
}

double TruncatedTaylor::coefficient(const MultiIndex& index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? 0.0 : it->second;
}

double TruncatedTaylor::constant_term() const { return coefficient(MultiIndex(dimension_)); }

void TruncatedTaylor::add_term(const MultiIndex& index, double coefficient) {
  if (index.dimension() != dimension_) throw UsageError("TruncatedTaylor: dimension mismatch");
  if (index.order() > degree_cap_ || coefficient == 0.0) return;
  auto [it, inserted] = terms_.try_emplace(index, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0.0) terms_.erase(it);
  }
}

TruncatedTaylor TruncatedTaylor::without_constant() const {
  TruncatedTaylor p(*this);
  p.terms_.erase(MultiIndex(dimension_));
  return p;
}

TruncatedTaylor TruncatedTaylor::recapped(int degree_cap) const {
  TruncatedTaylor p(dimension_, degree_cap);
  for (const auto& [idx, c] : terms_) p.add_term(idx, c);
  return p;
}

double TruncatedTaylor::evaluate(std::span<const double> point) const {
  if (point.size() != dimension_) throw UsageError("TruncatedTaylor::evaluate: dimension mismatch");
  double sum = 0.0;
  for (const auto& [idx, c] : terms_) {
    double term = c;
    for (std::size_t i = 0; i < dimension_; ++i) {
      for (int k = 0; k < idx[i]; ++k) term *= point[i];
    }
    sum += term;
  }
  return sum;
}

TruncatedTaylor TruncatedTaylor::operator-() const { return -1.0 * *this; }

TruncatedTaylor& TruncatedTaylor::operator*=(double scale) {
  if (scale == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto& [idx, c] : terms_) c *= scale;
  return *this;
}

namespace {

void require_same_shape(const TruncatedTaylor& a, const TruncatedTaylor& b) {
  if (a.dimension() != b.dimension()) throw UsageError("TruncatedTaylor: dimension mismatch");
  if (a.degree_cap() != b.degree_cap()) throw UsageError("TruncatedTaylor: degree cap mismatch");
}

}  // namespace

TruncatedTaylor operator+(const TruncatedTaylor& a, const TruncatedTaylor& b) {
  require_same_shape(a, b);
  TruncatedTaylor sum(a);
  for (const auto& [idx, c] : b.terms_) sum.add_term(idx, c);
  return sum;
}

TruncatedTaylor operator-(const TruncatedTaylor& a, const TruncatedTaylor& b) {
  require_same_shape(a, b);
  TruncatedTaylor diff(a);
  for (const auto& [idx, c] : b.terms_) diff.add_term(idx, -c);
  return diff;
}

TruncatedTaylor operator*(const TruncatedTaylor& a, const TruncatedTaylor& b) {
  if (a.dimension() != b.dimension()) throw UsageError("TruncatedTaylor: dimension mismatch");
  const int cap = std::min(a.degree_cap(), b.degree_cap());
  TruncatedTaylor product(a.dimension(), cap);
  for (const auto& [ia, ca] : a.terms_) {
    if (ia.order() > cap) continue;
    for (const auto& [ib, cb] : b.terms_) {
      if (ia.order() + ib.order() > cap) continue;
      product.add_term(ia + ib, ca * cb);
    }
  }
  return product;
}

TruncatedTaylor operator*(double scale, TruncatedTaylor p) { return p *= scale; }

TruncatedTaylor pow(const TruncatedTaylor& p, int exponent) {
  if (exponent < 0) throw UsageError("pow: negative exponent");
  TruncatedTaylor result = TruncatedTaylor::constant(p.dimension(), p.degree_cap(), 1.0);
  for (int k = 0; k < exponent; ++k) result = result * p;
  return result;
}

TruncatedTaylor compose_inverse_sqrt(const TruncatedTaylor& u) {
  if (u.constant_term() != 0.0) {
    throw UsageError("compose_inverse_sqrt: argument has a nonzero constant term");
  }
  // (1+u)^(-1/2) = sum_k binom(-1/2, k) u^k; u^k has no terms below degree k.
  TruncatedTaylor result = TruncatedTaylor::constant(u.dimension(), u.degree_cap(), 1.0);
  TruncatedTaylor power = result;
  double binom = 1.0;
  for (int k = 1; k <= u.degree_cap(); ++k) {
    binom *= (-0.5 - (k - 1)) / k;
    power = power * u;
    result = result + binom * power;
  }
  return result;
}

TruncatedTaylor substitute(const TruncatedTaylor& p, const std::vector<TruncatedTaylor>& images) {
  if (images.size() != p.dimension()) {
    throw UsageError("substitute: need one image per variable");
  }
  if (images.empty()) throw UsageError("substitute: no variables");
  const std::size_t dim = images.front().dimension();
  const int cap = images.front().degree_cap();
  for (const auto& image : images) {
    if (image.dimension() != dim || image.degree_cap() != cap) {
      throw UsageError("substitute: images disagree on dimension or cap");
    }
    if (image.constant_term() != 0.0) {
      throw UsageError("substitute: image has a nonzero constant term");
    }
  }

  // powers[i][k] = images[i]^k; exponents beyond the cap vanish anyway.
  std::vector<std::vector<TruncatedTaylor>> powers(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    powers[i].push_back(TruncatedTaylor::constant(dim, cap, 1.0));
    for (int k = 1; k <= cap; ++k) powers[i].push_back(powers[i].back() * images[i]);
  }

  TruncatedTaylor result(dim, cap);
  for (const auto& [idx, c] : p.terms()) {
    if (idx.order() > cap) continue;
    auto term = TruncatedTaylor::constant(dim, cap, c);
    for (std::size_t i = 0; i < idx.dimension(); ++i) {
      if (idx[i] > 0) term = term * powers[i][idx[i]];
    }
    result = result + term;
  }
  return result;
}

// ---------------------------------------------------------------------------
// InvNPoly

InvNPoly::InvNPoly(std::initializer_list<std::pair<const int, double>> terms) {
  for (const auto& [p, c] : terms) add_term(p, c);
}

InvNPoly InvNPoly::term(int half_power, double coefficient) {
  InvNPoly poly;
  poly.add_term(half_power, coefficient);
  return poly;
}

double InvNPoly::coefficient(int half_power) const {
  auto it = terms_.find(half_power);
  return it == terms_.end() ? 0.0 : it->second;
}

int InvNPoly::lowest_half_power() const {
  if (terms_.empty()) throw UsageError("InvNPoly: empty polynomial has no lowest power");
  return terms_.begin()->first;
}

int InvNPoly::highest_half_power() const {
  if (terms_.empty()) throw UsageError("InvNPoly: empty polynomial has no highest power");
  return terms_.rbegin()->first;
}

void InvNPoly::add_term(int half_power, double coefficient) {
  if (half_power < 0) throw UsageError("InvNPoly: negative half power");
  if (coefficient == 0.0) return;
  auto [it, inserted] = terms_.try_emplace(half_power, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0.0) terms_.erase(it);
  }
}

InvNPoly InvNPoly::truncated(int max_half_power) const {
  InvNPoly out;
  for (const auto& [p, c] : terms_) {
    if (p <= max_half_power) out.terms_.emplace(p, c);
  }
  return out;
}

double InvNPoly::eval(double n) const {
  if (!(n > 0.0)) throw UsageError("InvNPoly::eval: n must be positive");
  const double root = 1.0 / std::sqrt(n);
  double sum = 0.0;
  for (const auto& [p, c] : terms_) {
    // whole powers avoid the sqrt round trip
    sum += c * (p % 2 == 0 ? std::pow(n, -p / 2) : std::pow(root, p));
  }
  return sum;
}

InvNPoly& InvNPoly::operator+=(const InvNPoly& other) {
  for (const auto& [p, c] : other.terms_) add_term(p, c);
  return *this;
}

InvNPoly& InvNPoly::operator*=(double scale) {
  if (scale == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, c] : terms_) c *= scale;
  return *this;
}

InvNPoly operator*(const InvNPoly& a, const InvNPoly& b) {
  InvNPoly product;
  for (const auto& [pa, ca] : a.terms_) {
    for (const auto& [pb, cb] : b.terms_) product.add_term(pa + pb, ca * cb);
  }
  return product;
}

InvNPoly invn_mul(const InvNPoly& a, const InvNPoly& b) { return a * b; }

InvNPoly invn_truncate(const InvNPoly& a, int max_half_power) {
  return a.truncated(max_half_power);
}

double invn_eval(const InvNPoly& a, double n) { return a.eval(n); }

InvNPoly ratio_series(const InvNPoly& numerator, const InvNPoly& denominator, double exponent,
                      int max_half_power) {
  if (denominator.empty()) throw UsageError("ratio_series: empty denominator");
  if (numerator.empty()) return {};
  const int q = denominator.lowest_half_power();
  const double lead = denominator.coefficient(q);
  if (!(lead > 0.0)) throw DegenerateError("ratio_series: denominator leading term not positive");

  const double shift_real = q * exponent;
  const int shift = static_cast<int>(std::lround(shift_real));
  if (std::abs(shift_real - shift) > 1e-12) {
    throw UsageError("ratio_series: fractional shift in half powers");
  }
  if (numerator.lowest_half_power() < shift) {
    throw UsageError("ratio_series: quotient has positive powers of n");
  }

  // denominator = lead * x^q * (1 + t), x = n^(-1/2)
  InvNPoly t;
  for (const auto& [p, c] : denominator.terms()) {
    if (p != q) t.add_term(p - q, c / lead);
  }

  // (1 + t)^(-exponent), truncated; t has no constant term
  InvNPoly factor = InvNPoly::term(0, 1.0);
  InvNPoly t_power = InvNPoly::term(0, 1.0);
  double binom = 1.0;
  for (int k = 1; k <= max_half_power; ++k) {
    binom *= (-exponent - (k - 1)) / k;
    t_power = (t_power * t).truncated(max_half_power);
    if (t_power.empty()) break;
    factor += binom * t_power;
  }

  InvNPoly shifted;
  for (const auto& [p, c] : numerator.terms()) shifted.add_term(p - shift, c);

  return (std::pow(lead, -exponent) * (shifted * factor)).truncated(max_half_power);
}

}  // namespace edgeworth
