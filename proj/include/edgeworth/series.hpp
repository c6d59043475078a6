#pragma once

// Degree-capped multivariate polynomials and half-power series in 1/n.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace edgeworth {

/// Exponent vector over the deviation variables of an expansion.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t dimension);
  explicit MultiIndex(std::vector<int> exponents);
  MultiIndex(std::initializer_list<int> exponents);

  static MultiIndex unit(std::size_t dimension, std::size_t variable);

  std::size_t dimension() const noexcept { return exponents_.size(); }
  int order() const noexcept { return order_; }
  int operator[](std::size_t i) const { return exponents_.at(i); }
  std::span<const int> exponents() const noexcept { return exponents_; }

  MultiIndex operator+(const MultiIndex& other) const;

  std::string to_string() const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex& a, const MultiIndex& b) {
    return a.exponents_ <=> b.exponents_;
  }

 private:
  std::vector<int> exponents_;
  int order_ = 0;
};

/// Every multi-index of the given dimension with min_order <= order <= max_order,
/// in lexicographic order.
std::vector<MultiIndex> all_indices(std::size_t dimension, int min_order, int max_order);

/// Polynomial in `dimension` variables with every monomial of total degree
/// above `degree_cap` discarded. Missing monomials have coefficient zero.
class TruncatedTaylor {
 public:
  using Terms = std::map<MultiIndex, double>;

  TruncatedTaylor(std::size_t dimension, int degree_cap);

  static TruncatedTaylor constant(std::size_t dimension, int degree_cap, double value);
  static TruncatedTaylor variable(std::size_t dimension, int degree_cap, std::size_t var,
                                  double coefficient = 1.0);

  std::size_t dimension() const noexcept { return dimension_; }
  int degree_cap() const noexcept { return degree_cap_; }
  const Terms& terms() const noexcept { return terms_; }

  double coefficient(const MultiIndex& index) const;
  double constant_term() const;

  // Adds to the coefficient of `index`; silently drops monomials above the cap.
  void add_term(const MultiIndex& index, double coefficient);

  TruncatedTaylor without_constant() const;
  // Same terms under a new cap; terms above a lowered cap are dropped.
  TruncatedTaylor recapped(int degree_cap) const;

  double evaluate(std::span<const double> point) const;

  TruncatedTaylor operator-() const;
  TruncatedTaylor& operator*=(double scale);

  friend TruncatedTaylor operator+(const TruncatedTaylor& a, const TruncatedTaylor& b);
  friend TruncatedTaylor operator-(const TruncatedTaylor& a, const TruncatedTaylor& b);
  friend TruncatedTaylor operator*(const TruncatedTaylor& a, const TruncatedTaylor& b);
  friend TruncatedTaylor operator*(double scale, TruncatedTaylor p);
  friend TruncatedTaylor operator*(TruncatedTaylor p, double scale) { return scale * std::move(p); }

 private:
  std::size_t dimension_;
  int degree_cap_;
  Terms terms_;
};

/// p raised to a non-negative integer power, truncated at p's cap.
TruncatedTaylor pow(const TruncatedTaylor& p, int exponent);

/// Cap-truncated expansion of (1 + u)^(-1/2). `u` must have no constant term.
TruncatedTaylor compose_inverse_sqrt(const TruncatedTaylor& u);

/// p with variable i replaced by images[i]. Every image must share one
/// dimension and cap and have no constant term; the result takes that cap.
TruncatedTaylor substitute(const TruncatedTaylor& p, const std::vector<TruncatedTaylor>& images);

/// Finite sum of coefficients times n^(-p/2); p is the "half power".
class InvNPoly {
 public:
  using Terms = std::map<int, double>;

  InvNPoly() = default;
  InvNPoly(std::initializer_list<std::pair<const int, double>> terms);

  // coefficient * n^(-half_power/2)
  static InvNPoly term(int half_power, double coefficient);
  // coefficient * n^(-power)
  static InvNPoly inv_n(int power, double coefficient) { return term(2 * power, coefficient); }

  const Terms& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  double coefficient(int half_power) const;
  int lowest_half_power() const;
  int highest_half_power() const;

  void add_term(int half_power, double coefficient);

  InvNPoly truncated(int max_half_power) const;
  double eval(double n) const;

  InvNPoly& operator+=(const InvNPoly& other);
  InvNPoly& operator*=(double scale);
  friend InvNPoly operator+(InvNPoly a, const InvNPoly& b) { return a += b; }
  friend InvNPoly operator-(InvNPoly a, const InvNPoly& b) { return a += -1.0 * b; }
  friend InvNPoly operator*(double scale, InvNPoly a) { return a *= scale; }
  friend InvNPoly operator*(const InvNPoly& a, const InvNPoly& b);

  friend bool operator==(const InvNPoly&, const InvNPoly&) = default;

 private:
  Terms terms_;
};

InvNPoly invn_mul(const InvNPoly& a, const InvNPoly& b);
InvNPoly invn_truncate(const InvNPoly& a, int max_half_power);
double invn_eval(const InvNPoly& a, double n);

/// numerator / denominator^exponent as a series in n^(-1/2), keeping half
/// powers up to max_half_power. The denominator's lowest term must be
/// positive, and the quotient must not contain positive powers of n.
InvNPoly ratio_series(const InvNPoly& numerator, const InvNPoly& denominator, double exponent,
                      int max_half_power);

}  // namespace edgeworth
