//
// mckay-poincare - Copyright 2026 The mckay-poincare Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "mckay/error.h"

namespace mckay {

using Integer = mpz_class;
using Rat = mpq_class;

// Coefficients of the m-th cyclotomic polynomial, lowest degree first.
const std::vector<long> &cyclotomic_polynomial(int m);

int euler_phi(int m);

long lcm_int(long a, long b);

struct CyclotomicField;

// Exact element of Q(zeta_m). Stored in the power basis 1, zeta, ...,
// zeta^(phi(m)-1) as integer numerators over one positive denominator
// coprime to their content.
class CycloNum {
 public:
  CycloNum();
  CycloNum(long value);  // NOLINT(google-explicit-constructor)
  CycloNum(const Rat &value);  // NOLINT(google-explicit-constructor)

  // Sum of coeffs[e] * zeta_m^e; exponents are taken mod m.
  static CycloNum make(int conductor, const std::map<long, Rat> &coeffs);
  static CycloNum root_of_unity(int m, long k);

  int conductor() const;
  int basis_size() const;

  bool is_zero() const;
  bool is_rational() const;
  bool is_integer() const;
  Rat rational_value() const;  // throws kNonIntegral if not rational
  Integer integer_value() const;  // throws kNonIntegral if not an integer

  // Coefficient of zeta^e in the canonical basis (0 <= e < phi(m)).
  Rat coeff(int e) const;
  std::map<int, Rat> coeffs() const;

  CycloNum embed(int conductor) const;  // conductor must be a multiple
  CycloNum conj() const;
  CycloNum galois(long k) const;  // zeta -> zeta^k, gcd(k, m) = 1
  CycloNum inverse() const;

  std::complex<double> approx() const;
  std::string to_string() const;

  CycloNum operator-() const;
  CycloNum &operator+=(const CycloNum &rhs);
  CycloNum &operator-=(const CycloNum &rhs);
  CycloNum &operator*=(const CycloNum &rhs);
  CycloNum &operator/=(const CycloNum &rhs);

  friend CycloNum operator+(CycloNum lhs, const CycloNum &rhs) {
    return lhs += rhs;
  }
  friend CycloNum operator-(CycloNum lhs, const CycloNum &rhs) {
    return lhs -= rhs;
  }
  friend CycloNum operator*(const CycloNum &lhs, const CycloNum &rhs);
  friend CycloNum operator/(CycloNum lhs, const CycloNum &rhs) {
    return lhs /= rhs;
  }

  friend bool operator==(const CycloNum &lhs, const CycloNum &rhs);
  friend bool operator!=(const CycloNum &lhs, const CycloNum &rhs) {
    return !(lhs == rhs);
  }

  // Total order used only for deterministic sorting.
  static int compare(const CycloNum &lhs, const CycloNum &rhs);

 private:
  CycloNum(const CyclotomicField *field, std::vector<Integer> num,
           Integer den);

  void canonicalize();
  void scale_num(const Integer &factor);

  const CyclotomicField *field_;
  std::vector<Integer> num_;
  Integer den_;
};

// Polynomial in t with cyclotomic coefficients, lowest degree first.
class CycloPoly {
 public:
  CycloPoly() = default;
  explicit CycloPoly(std::vector<CycloNum> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<CycloNum> &coeffs() const { return c_; }
  CycloNum operator[](int i) const;

  CycloPoly &operator+=(const CycloPoly &rhs);
  CycloPoly &operator*=(const CycloNum &s);
  friend CycloPoly operator*(const CycloPoly &a, const CycloPoly &b);
  friend bool operator==(const CycloPoly &a, const CycloPoly &b);

  bool all_rational() const;
  std::vector<Rat> rational_coeffs() const;  // throws kNonIntegral

 private:
  void trim();
  std::vector<CycloNum> c_;
};

}  // namespace mckay
