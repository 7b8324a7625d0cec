#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <map>
#include <string>
#include <utility>

namespace autoeq {

using Integer = mpz_class;
using Rational = mpq_class;

/// Laurent polynomial with integer coefficients. Coefficients may be negative;
/// zero coefficients are never stored.
class HilbertSeries {
 public:
  HilbertSeries() = default;
  HilbertSeries(std::initializer_list<std::pair<const int, long>> terms);

  static HilbertSeries one() { return monomial(0); }
  static HilbertSeries monomial(int exponent, const Integer& coefficient = 1);

  const std::map<int, Integer>& coefficients() const { return coeffs_; }
  Integer coefficient(int exponent) const;
  bool is_zero() const { return coeffs_.empty(); }

  void add_term(int exponent, const Integer& coefficient);

  HilbertSeries& operator+=(const HilbertSeries& other);
  HilbertSeries& operator-=(const HilbertSeries& other);
  HilbertSeries& operator*=(const Integer& scalar);
  friend HilbertSeries operator+(HilbertSeries a, const HilbertSeries& b) { return a += b; }
  friend HilbertSeries operator-(HilbertSeries a, const HilbertSeries& b) { return a -= b; }
  friend HilbertSeries operator*(const HilbertSeries& a, const HilbertSeries& b);
  friend HilbertSeries operator*(HilbertSeries a, const Integer& s) { return a *= s; }

  HilbertSeries pow(unsigned exponent) const;

  /// t -> t^ell, a ring homomorphism for every ell >= 1.
  HilbertSeries substitute_power(int ell) const;

  /// Exact division of every coefficient; throws DomainError if some
  /// coefficient is not divisible.
  HilbertSeries divided_exactly(const Integer& divisor) const;

  friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;

  std::string to_string() const;

 private:
  std::map<int, Integer> coeffs_;
};

/// Dimensions of a graded vector space: degree -> dimension, finitely
/// supported, every stored dimension >= 1.
class GradedDims {
 public:
  GradedDims() = default;
  GradedDims(std::initializer_list<std::pair<const int, long>> entries);

  /// Reads back a series with nonnegative coefficients; negative coefficients
  /// are a DomainError.
  static GradedDims from_series(const HilbertSeries& series);

  HilbertSeries series() const;

  const std::map<int, Integer>& entries() const { return entries_; }
  Integer at(int degree) const;
  bool empty() const { return entries_.empty(); }
  Integer total() const;
  bool all_even() const;
  int min_degree() const;
  int max_degree() const;

  /// Sum of (-1)^d dim_d.
  Integer euler_characteristic() const;

  void set(int degree, const Integer& dimension);

  friend bool operator==(const GradedDims&, const GradedDims&) = default;

  /// Compact form, e.g. "{0:1, 2:1}".
  std::string to_string() const;

 private:
  std::map<int, Integer> entries_;
};

/// Tensor product of graded spaces: convolution of dimension vectors.
GradedDims kunneth_product(const GradedDims& a, const GradedDims& b);

/// Models Hom^*(A, B[k]) = Hom^{*+k}(A, B): every degree moves by -k.
GradedDims shift(const GradedDims& a, int k);

/// Degree d -> top - d.
GradedDims reflect(const GradedDims& a, int top);

/// The dims {0:1, 2:1, ..., 2n:1} of H^*(P^n).
GradedDims projective_space_dims(int n);

}  // namespace autoeq
