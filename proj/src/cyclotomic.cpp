//
// mckay-poincare - Copyright 2026 The mckay-poincare Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "mckay/cyclotomic.h"

#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <utility>

namespace mckay {

std::string_view errc_name(Errc code) {
  switch (code) {
  case Errc::kInvalidArgument:
    return "InvalidArgument";
  case Errc::kDivByZero:
    return "DivByZero";
  case Errc::kPoleAtZero:
    return "PoleAtZero";
  case Errc::kLabelError:
    return "LabelError";
  case Errc::kBadGenerators:
    return "BadGenerators";
  case Errc::kIncompleteTable:
    return "IncompleteTable";
  case Errc::kNotASubgroup:
    return "NotASubgroup";
  case Errc::kNotNormal:
    return "NotNormal";
  case Errc::kNonIntegralMultiplicity:
    return "NonIntegralMultiplicity";
  case Errc::kUnclassified:
    return "Unclassified";
  case Errc::kNonCharacter:
    return "NonCharacter";
  case Errc::kNonIntegral:
    return "NonIntegral";
  case Errc::kSizeMismatch:
    return "SizeMismatch";
  case Errc::kNoMatching:
    return "NoMatching";
  case Errc::kUnknownName:
    return "UnknownName";
  }
  return "Error";
}

long lcm_int(long a, long b) {
  return std::lcm(a, b);
}

int euler_phi(int m) {
  int result = m, x = m;
  for (int p = 2; p * p <= x; ++p) {
    if (x % p != 0)
      continue;
    while (x % p == 0)
      x /= p;
    result -= result / p;
  }
  if (x > 1)
    result -= result / x;
  return result;
}

struct CyclotomicField {
  int m;
  int phi;
  // Nonzero coefficients of Phi_m below the leading term.
  std::vector<std::pair<int, long>> lower;
};

namespace {

std::mutex registry_mutex;

std::unordered_map<int, std::vector<long>> &poly_cache() {
  static auto *cache = new std::unordered_map<int, std::vector<long>>();
  return *cache;
}

std::unordered_map<int, std::unique_ptr<CyclotomicField>> &field_cache() {
  static auto *cache =
      new std::unordered_map<int, std::unique_ptr<CyclotomicField>>();
  return *cache;
}

// Caller holds registry_mutex.
const std::vector<long> &cyclotomic_polynomial_locked(int m) {
  auto &cache = poly_cache();
  if (auto it = cache.find(m); it != cache.end())
    return it->second;

  // x^m - 1 divided by Phi_d for every proper divisor d.
  std::vector<long> num(m + 1, 0);
  num[0] = -1;
  num[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d != 0)
      continue;
    const std::vector<long> &div = cyclotomic_polynomial_locked(d);
    int dd = static_cast<int>(div.size()) - 1;
    int nd = static_cast<int>(num.size()) - 1;
    std::vector<long> quot(nd - dd + 1, 0);
    for (int k = nd; k >= dd; --k) {
      long c = num[k];
      quot[k - dd] = c;
      if (c == 0)
        continue;
      for (int j = 0; j <= dd; ++j)
        num[k - dd + j] -= c * div[j];
    }
    num = std::move(quot);
  }
  return cache.emplace(m, std::move(num)).first->second;
}

const CyclotomicField *field_for(int m) {
  if (m <= 0)
    throw Error(Errc::kInvalidArgument, "conductor must be positive");
  std::lock_guard<std::mutex> lock(registry_mutex);
  auto &cache = field_cache();
  if (auto it = cache.find(m); it != cache.end())
    return it->second.get();
  const std::vector<long> &phi_poly = cyclotomic_polynomial_locked(m);
  auto field = std::make_unique<CyclotomicField>();
  field->m = m;
  field->phi = static_cast<int>(phi_poly.size()) - 1;
  for (int j = 0; j < field->phi; ++j)
    if (phi_poly[j] != 0)
      field->lower.emplace_back(j, phi_poly[j]);
  return cache.emplace(m, std::move(field)).first->second.get();
}

// Reduce v modulo Phi_m in place; v may have any length.
void reduce(const CyclotomicField &f, std::vector<Integer> &v) {
  for (int k = static_cast<int>(v.size()) - 1; k >= f.phi; --k) {
    if (sgn(v[k]) == 0)
      continue;
    const Integer c = v[k];
    for (const auto &[j, p] : f.lower) {
      Integer &dst = v[k - f.phi + j];
      if (p == 1)
        dst -= c;
      else if (p == -1)
        dst += c;
      else
        dst -= c * p;
    }
    v[k] = 0;
  }
  v.resize(f.phi);
}

}  // namespace

const std::vector<long> &cyclotomic_polynomial(int m) {
  if (m <= 0)
    throw Error(Errc::kInvalidArgument, "cyclotomic index must be positive");
  std::lock_guard<std::mutex> lock(registry_mutex);
  return cyclotomic_polynomial_locked(m);
}

CycloNum::CycloNum(): field_(field_for(1)), num_(1), den_(1) { }

CycloNum::CycloNum(long value): field_(field_for(1)), num_(1), den_(1) {
  num_[0] = value;
}

CycloNum::CycloNum(const Rat &value)
    : field_(field_for(1)), num_(1), den_(value.get_den()) {
  num_[0] = value.get_num();
}

CycloNum::CycloNum(const CyclotomicField *field, std::vector<Integer> num,
                   Integer den)
    : field_(field), num_(std::move(num)), den_(std::move(den)) {
  canonicalize();
}

CycloNum CycloNum::make(int conductor, const std::map<long, Rat> &coeffs) {
  const CyclotomicField *f = field_for(conductor);
  Integer den = 1;
  for (const auto &[e, c] : coeffs)
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> v(conductor, 0);
  for (const auto &[e, c] : coeffs) {
    long k = ((e % conductor) + conductor) % conductor;
    v[k] += c.get_num() * (den / c.get_den());
  }
  reduce(*f, v);
  return CycloNum(f, std::move(v), std::move(den));
}

CycloNum CycloNum::root_of_unity(int m, long k) {
  return make(m, {{k, Rat(1)}});
}

int CycloNum::conductor() const {
  return field_->m;
}

int CycloNum::basis_size() const {
  return field_->phi;
}

void CycloNum::canonicalize() {
  if (sgn(den_) == 0)
    throw Error(Errc::kDivByZero, "zero denominator");
  if (sgn(den_) < 0) {
    den_ = -den_;
    for (Integer &x : num_)
      x = -x;
  }
  if (den_ == 1)
    return;
  Integer g = den_;
  bool zero = true;
  for (const Integer &x : num_) {
    if (sgn(x) == 0)
      continue;
    zero = false;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1)
      return;
  }
  if (zero) {
    den_ = 1;
    return;
  }
  den_ /= g;
  for (Integer &x : num_)
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

void CycloNum::scale_num(const Integer &factor) {
  for (Integer &x : num_)
    x *= factor;
}

bool CycloNum::is_zero() const {
  for (const Integer &x : num_)
    if (sgn(x) != 0)
      return false;
  return true;
}

bool CycloNum::is_rational() const {
  for (std::size_t i = 1; i < num_.size(); ++i)
    if (sgn(num_[i]) != 0)
      return false;
  return true;
}

bool CycloNum::is_integer() const {
  return is_rational() && den_ == 1;
}

Rat CycloNum::rational_value() const {
  if (!is_rational())
    throw Error(Errc::kNonIntegral, "not rational: " + to_string());
  Rat r(num_[0], den_);
  r.canonicalize();
  return r;
}

Integer CycloNum::integer_value() const {
  if (!is_integer())
    throw Error(Errc::kNonIntegral, "not an integer: " + to_string());
  return num_[0];
}

Rat CycloNum::coeff(int e) const {
  if (e < 0 || e >= field_->phi)
    return Rat(0);
  Rat r(num_[e], den_);
  r.canonicalize();
  return r;
}

std::map<int, Rat> CycloNum::coeffs() const {
  std::map<int, Rat> out;
  for (int e = 0; e < field_->phi; ++e)
    if (sgn(num_[e]) != 0)
      out.emplace(e, coeff(e));
  return out;
}

CycloNum CycloNum::embed(int conductor) const {
  if (conductor == field_->m)
    return *this;
  if (conductor % field_->m != 0)
    throw Error(Errc::kInvalidArgument,
                "cannot embed conductor " + std::to_string(field_->m) +
                    " into " + std::to_string(conductor));
  const CyclotomicField *f = field_for(conductor);
  int step = conductor / field_->m;
  std::vector<Integer> v(conductor, 0);
  for (int e = 0; e < field_->phi; ++e)
    v[static_cast<std::size_t>(e) * step] = num_[e];
  reduce(*f, v);
  return CycloNum(f, std::move(v), den_);
}

CycloNum CycloNum::galois(long k) const {
  int m = field_->m;
  long kk = ((k % m) + m) % m;
  if (std::gcd(kk, static_cast<long>(m)) != 1)
    throw Error(Errc::kInvalidArgument, "Galois exponent not a unit");
  std::vector<Integer> v(m, 0);
  for (int e = 0; e < field_->phi; ++e)
    v[(e * kk) % m] += num_[e];
  reduce(*field_, v);
  return CycloNum(field_, std::move(v), den_);
}

CycloNum CycloNum::conj() const {
  return galois(field_->m - 1);
}

CycloNum CycloNum::inverse() const {
  if (is_zero())
    throw Error(Errc::kDivByZero, "inverse of zero");
  if (is_rational())
    return CycloNum(Rat(1) / rational_value());
  // Product of the nontrivial conjugates over the (rational) norm.
  int m = field_->m;
  CycloNum others(1);
  for (long k = 2; k < m; ++k)
    if (std::gcd(k, static_cast<long>(m)) == 1)
      others *= galois(k);
  CycloNum norm = others * *this;
  return others * CycloNum(Rat(1) / norm.rational_value());
}

std::complex<double> CycloNum::approx() const {
  std::complex<double> z(0.0, 0.0);
  double d = den_.get_d();
  for (int e = 0; e < field_->phi; ++e) {
    if (sgn(num_[e]) == 0)
      continue;
    double ang = 2.0 * std::numbers::pi * e / field_->m;
    z += num_[e].get_d() / d * std::complex<double>(std::cos(ang),
                                                     std::sin(ang));
  }
  return z;
}

std::string CycloNum::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int e = 0; e < field_->phi; ++e) {
    if (sgn(num_[e]) == 0)
      continue;
    Rat c = coeff(e);
    bool neg = sgn(c) < 0;
    if (neg)
      c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (e == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1)
      os << c.get_str() << "*";
    os << "z" << field_->m;
    if (e > 1)
      os << "^" << e;
  }
  if (first)
    os << "0";
  return os.str();
}

CycloNum CycloNum::operator-() const {
  CycloNum r = *this;
  for (Integer &x : r.num_)
    x = -x;
  return r;
}

namespace {

// Bring two values into a common field. Rational operands are kept as they
// are so that scalar fast paths apply.
int common_conductor(const CycloNum &a, const CycloNum &b) {
  return static_cast<int>(lcm_int(a.conductor(), b.conductor()));
}

}  // namespace

CycloNum &CycloNum::operator+=(const CycloNum &rhs) {
  if (field_ != rhs.field_) {
    if (rhs.is_rational()) {
      CycloNum r = rhs.rational_value();
      r = r.embed(field_->m);
      return *this += r;
    }
    int m = common_conductor(*this, rhs);
    *this = embed(m);
    return *this += rhs.embed(m);
  }
  if (den_ == rhs.den_) {
    for (std::size_t i = 0; i < num_.size(); ++i)
      num_[i] += rhs.num_[i];
  } else {
    Integer g;
    mpz_gcd(g.get_mpz_t(), den_.get_mpz_t(), rhs.den_.get_mpz_t());
    Integer lf = rhs.den_ / g;
    Integer rf = den_ / g;
    for (std::size_t i = 0; i < num_.size(); ++i)
      num_[i] = num_[i] * lf + rhs.num_[i] * rf;
    den_ *= lf;
  }
  canonicalize();
  return *this;
}

CycloNum &CycloNum::operator-=(const CycloNum &rhs) {
  return *this += -rhs;
}

CycloNum operator*(const CycloNum &lhs, const CycloNum &rhs) {
  if (lhs.is_rational() && lhs.field_ != rhs.field_) {
    CycloNum r = rhs;
    r.scale_num(lhs.num_[0]);
    r.den_ *= lhs.den_;
    r.canonicalize();
    return r;
  }
  if (rhs.is_rational() && lhs.field_ != rhs.field_)
    return rhs * lhs;
  if (lhs.field_ != rhs.field_) {
    int m = common_conductor(lhs, rhs);
    return lhs.embed(m) * rhs.embed(m);
  }
  const CyclotomicField &f = *lhs.field_;
  std::vector<Integer> v(2 * f.phi - 1, 0);
  for (int i = 0; i < f.phi; ++i) {
    if (sgn(lhs.num_[i]) == 0)
      continue;
    for (int j = 0; j < f.phi; ++j) {
      if (sgn(rhs.num_[j]) == 0)
        continue;
      mpz_addmul(v[i + j].get_mpz_t(), lhs.num_[i].get_mpz_t(),
                 rhs.num_[j].get_mpz_t());
    }
  }
  reduce(f, v);
  return CycloNum(&f, std::move(v), lhs.den_ * rhs.den_);
}

CycloNum &CycloNum::operator*=(const CycloNum &rhs) {
  *this = *this * rhs;
  return *this;
}

CycloNum &CycloNum::operator/=(const CycloNum &rhs) {
  if (rhs.is_zero())
    throw Error(Errc::kDivByZero, "division by zero");
  if (rhs.is_rational()) {
    Rat r = rhs.rational_value();
    scale_num(r.get_den());
    den_ *= r.get_num();
    canonicalize();
    return *this;
  }
  *this = *this * rhs.inverse();
  return *this;
}

bool operator==(const CycloNum &lhs, const CycloNum &rhs) {
  if (lhs.field_ == rhs.field_)
    return lhs.den_ == rhs.den_ && lhs.num_ == rhs.num_;
  int m = common_conductor(lhs, rhs);
  CycloNum a = lhs.embed(m), b = rhs.embed(m);
  return a.den_ == b.den_ && a.num_ == b.num_;
}

int CycloNum::compare(const CycloNum &lhs, const CycloNum &rhs) {
  int m = common_conductor(lhs, rhs);
  CycloNum a = lhs.embed(m), b = rhs.embed(m);
  for (int e = 0; e < a.field_->phi; ++e) {
    int c = cmp(Rat(a.num_[e], a.den_), Rat(b.num_[e], b.den_));
    if (c != 0)
      return c < 0 ? -1 : 1;
  }
  return 0;
}

CycloPoly::CycloPoly(std::vector<CycloNum> coeffs): c_(std::move(coeffs)) {
  trim();
}

void CycloPoly::trim() {
  while (!c_.empty() && c_.back().is_zero())
    c_.pop_back();
}

CycloNum CycloPoly::operator[](int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size()))
    return CycloNum(0);
  return c_[i];
}

CycloPoly &CycloPoly::operator+=(const CycloPoly &rhs) {
  if (rhs.c_.size() > c_.size())
    c_.resize(rhs.c_.size());
  for (std::size_t i = 0; i < rhs.c_.size(); ++i)
    c_[i] += rhs.c_[i];
  trim();
  return *this;
}

CycloPoly &CycloPoly::operator*=(const CycloNum &s) {
  for (CycloNum &x : c_)
    x *= s;
  trim();
  return *this;
}

CycloPoly operator*(const CycloPoly &a, const CycloPoly &b) {
  if (a.c_.empty() || b.c_.empty())
    return CycloPoly();
  std::vector<CycloNum> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero())
      continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      if (!b.c_[j].is_zero())
        out[i + j] += a.c_[i] * b.c_[j];
  }
  return CycloPoly(std::move(out));
}

bool operator==(const CycloPoly &a, const CycloPoly &b) {
  return a.c_ == b.c_;
}

bool CycloPoly::all_rational() const {
  for (const CycloNum &x : c_)
    if (!x.is_rational())
      return false;
  return true;
}

std::vector<Rat> CycloPoly::rational_coeffs() const {
  std::vector<Rat> out;
  out.reserve(c_.size());
  for (const CycloNum &x : c_)
    out.push_back(x.rational_value());
  return out;
}

}  // namespace mckay
