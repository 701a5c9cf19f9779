//
// mckay-poincare - Copyright 2026 The mckay-poincare Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "mckay/cyclotomic.h"

namespace mckay {

// Univariate polynomial over Z in t, lowest degree first, no trailing zeros.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Integer &c);
  static IntPoly monomial(const Integer &c, int degree);

  // Clears denominators: returns p with scale * values == p.
  static IntPoly from_rationals(const std::vector<Rat> &values,
                                Integer *scale);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Integer> &coeffs() const { return c_; }
  Integer operator[](int i) const;
  const Integer &lead() const { return c_.back(); }

  Integer content() const;  // nonnegative
  IntPoly primitive_part() const;  // positive leading coefficient
  int lowest_degree() const;  // -1 for zero

  IntPoly &operator+=(const IntPoly &rhs);
  IntPoly &operator-=(const IntPoly &rhs);
  IntPoly &operator*=(const Integer &s);
  IntPoly operator-() const;

  friend IntPoly operator+(IntPoly a, const IntPoly &b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly &b) { return a -= b; }
  friend IntPoly operator*(const IntPoly &a, const IntPoly &b);
  friend IntPoly operator*(IntPoly a, const Integer &s) { return a *= s; }
  friend bool operator==(const IntPoly &a, const IntPoly &b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const IntPoly &a, const IntPoly &b) {
    return !(a == b);
  }

  IntPoly pow(unsigned e) const;
  IntPoly substitute_power(int k) const;  // p(t^k)
  Rat eval(const Rat &x) const;

  std::string to_string(char var = 't') const;

 private:
  void trim();
  std::vector<Integer> c_;
};

// Exact quotient a / b over Z[t]; throws kNonIntegral if b does not divide a.
IntPoly divexact(const IntPoly &a, const IntPoly &b);

// Remainder-free test used by callers that only need divisibility.
bool divides(const IntPoly &b, const IntPoly &a);

// Primitive gcd with positive leading coefficient.
IntPoly poly_gcd(const IntPoly &a, const IntPoly &b);

class Series;

// Rational function num/den in lowest terms: primitive gcd removed, integer
// contents coprime, lowest nonzero denominator coefficient positive.
class RatFun {
 public:
  RatFun();  // zero
  RatFun(const IntPoly &p);  // NOLINT(google-explicit-constructor)

  static RatFun normalize(IntPoly num, IntPoly den);

  const IntPoly &num() const { return num_; }
  const IntPoly &den() const { return den_; }

  friend RatFun operator+(const RatFun &a, const RatFun &b);
  friend RatFun operator-(const RatFun &a, const RatFun &b);
  friend RatFun operator*(const RatFun &a, const RatFun &b);
  friend RatFun operator/(const RatFun &a, const RatFun &b);
  friend bool operator==(const RatFun &a, const RatFun &b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFun &a, const RatFun &b) {
    return !(a == b);
  }

  Series expand(int order) const;
  std::string to_string() const;

 private:
  IntPoly num_;
  IntPoly den_;
};

inline RatFun ratfun_normalize(IntPoly num, IntPoly den) {
  return RatFun::normalize(std::move(num), std::move(den));
}

// Truncated power series: coefficients of t^0 .. t^(order-1).
class Series {
 public:
  static constexpr int kDefaultOrder = 64;

  Series() = default;
  explicit Series(std::vector<Rat> coeffs): c_(std::move(coeffs)) { }

  int order() const { return static_cast<int>(c_.size()); }
  const std::vector<Rat> &coeffs() const { return c_; }
  const Rat &operator[](int i) const { return c_[i]; }

  bool nonnegative_integral() const;
  Series truncated(int order) const;
  friend bool operator==(const Series &a, const Series &b) {
    return a.c_ == b.c_;
  }

  std::string to_string() const;

 private:
  std::vector<Rat> c_;
};

Series series_expand(const RatFun &f, int order = Series::kDefaultOrder);

// Square matrix over Z[t] with one label per row/column.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::vector<std::vector<IntPoly>> entries,
             std::vector<std::string> labels);

  std::size_t size() const { return a_.size(); }
  const IntPoly &at(std::size_t i, std::size_t j) const { return a_[i][j]; }
  IntPoly &at(std::size_t i, std::size_t j) { return a_[i][j]; }
  const std::vector<std::string> &labels() const { return labels_; }
  std::size_t index_of(std::string_view label) const;  // kLabelError

  PolyMatrix transposed() const;

 private:
  std::vector<std::vector<IntPoly>> a_;
  std::vector<std::string> labels_;
};

// Fraction-free elimination with row pivoting.
IntPoly polymat_det(const PolyMatrix &m);

// Laplace expansion; intended for size <= 4 and as a cross-check.
IntPoly polymat_det_cofactor(const PolyMatrix &m);

// det of m with the given column replaced by the first unit vector.
IntPoly cramer_replace_det(const PolyMatrix &m, std::size_t column);
IntPoly cramer_replace_det(const PolyMatrix &m, std::string_view label);

}  // namespace mckay
