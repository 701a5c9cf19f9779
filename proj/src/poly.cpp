//
// mckay-poincare - Copyright 2026 The mckay-poincare Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "mckay/poly.h"

#include <algorithm>
#include <sstream>
#include <utility>

namespace mckay {

namespace {

void append_term(std::ostringstream &os, bool &first, const Rat &c, int e,
                 char var) {
  if (sgn(c) == 0)
    return;
  bool neg = sgn(c) < 0;
  Rat a = neg ? Rat(-c) : c;
  if (first)
    os << (neg ? "-" : "");
  else
    os << (neg ? " - " : " + ");
  first = false;
  if (e == 0) {
    os << a.get_str();
    return;
  }
  if (a != 1) {
    os << a.get_str();
    if (a.get_den() != 1)
      os << "*";
  }
  os << var;
  if (e > 1)
    os << "^" << e;
}

}  // namespace

IntPoly::IntPoly(std::vector<Integer> coeffs): c_(std::move(coeffs)) {
  trim();
}

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs)
    c_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const Integer &c) {
  return IntPoly(std::vector<Integer> {c});
}

IntPoly IntPoly::monomial(const Integer &c, int degree) {
  std::vector<Integer> v(degree + 1, 0);
  v[degree] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::from_rationals(const std::vector<Rat> &values,
                                Integer *scale) {
  Integer l = 1;
  for (const Rat &r : values)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.get_den_mpz_t());
  std::vector<Integer> v;
  v.reserve(values.size());
  for (const Rat &r : values)
    v.push_back(r.get_num() * (l / r.get_den()));
  if (scale != nullptr)
    *scale = l;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0)
    c_.pop_back();
}

Integer IntPoly::operator[](int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size()))
    return 0;
  return c_[i];
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const Integer &x : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1)
      break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero())
    return *this;
  Integer g = content();
  if (sgn(c_.back()) < 0)
    g = -g;
  std::vector<Integer> v(c_);
  for (Integer &x : v)
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(v));
}

int IntPoly::lowest_degree() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0)
      return static_cast<int>(i);
  return -1;
}

IntPoly &IntPoly::operator+=(const IntPoly &rhs) {
  if (rhs.c_.size() > c_.size())
    c_.resize(rhs.c_.size(), 0);
  for (std::size_t i = 0; i < rhs.c_.size(); ++i)
    c_[i] += rhs.c_[i];
  trim();
  return *this;
}

IntPoly &IntPoly::operator-=(const IntPoly &rhs) {
  if (rhs.c_.size() > c_.size())
    c_.resize(rhs.c_.size(), 0);
  for (std::size_t i = 0; i < rhs.c_.size(); ++i)
    c_[i] -= rhs.c_[i];
  trim();
  return *this;
}

IntPoly &IntPoly::operator*=(const Integer &s) {
  for (Integer &x : c_)
    x *= s;
  trim();
  return *this;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (Integer &x : r.c_)
    x = -x;
  return r;
}

IntPoly operator*(const IntPoly &a, const IntPoly &b) {
  if (a.is_zero() || b.is_zero())
    return IntPoly();
  std::vector<Integer> v(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0)
      continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      mpz_addmul(v[i + j].get_mpz_t(), a.c_[i].get_mpz_t(),
                 b.c_[j].get_mpz_t());
  }
  return IntPoly(std::move(v));
}

IntPoly IntPoly::pow(unsigned e) const {
  IntPoly result {1};
  IntPoly base = *this;
  while (e > 0) {
    if (e & 1U)
      result = result * base;
    e >>= 1U;
    if (e > 0)
      base = base * base;
  }
  return result;
}

IntPoly IntPoly::substitute_power(int k) const {
  if (is_zero())
    return *this;
  std::vector<Integer> v(static_cast<std::size_t>(degree()) * k + 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    v[i * k] = c_[i];
  return IntPoly(std::move(v));
}

Rat IntPoly::eval(const Rat &x) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * x + Rat(*it);
  return acc;
}

std::string IntPoly::to_string(char var) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i)
    append_term(os, first, Rat(c_[i]), static_cast<int>(i), var);
  if (first)
    os << "0";
  return os.str();
}

IntPoly divexact(const IntPoly &a, const IntPoly &b) {
  if (b.is_zero())
    throw Error(Errc::kDivByZero, "polynomial division by zero");
  if (a.is_zero())
    return a;
  int db = b.degree();
  int da = a.degree();
  if (da < db)
    throw Error(Errc::kNonIntegral, "inexact polynomial division");
  std::vector<Integer> r(a.coeffs());
  std::vector<Integer> q(da - db + 1, 0);
  const Integer &lb = b.lead();
  for (int k = da; k >= db; --k) {
    if (sgn(r[k]) == 0)
      continue;
    if (!mpz_divisible_p(r[k].get_mpz_t(), lb.get_mpz_t()))
      throw Error(Errc::kNonIntegral, "inexact polynomial division");
    Integer c;
    mpz_divexact(c.get_mpz_t(), r[k].get_mpz_t(), lb.get_mpz_t());
    q[k - db] = c;
    for (int j = 0; j <= db; ++j)
      mpz_submul(r[k - db + j].get_mpz_t(), c.get_mpz_t(),
                 b.coeffs()[j].get_mpz_t());
  }
  for (int k = 0; k < db; ++k)
    if (sgn(r[k]) != 0)
      throw Error(Errc::kNonIntegral, "inexact polynomial division");
  return IntPoly(std::move(q));
}

bool divides(const IntPoly &b, const IntPoly &a) {
  try {
    divexact(a, b);
    return true;
  } catch (const Error &e) {
    if (e.code() == Errc::kNonIntegral)
      return false;
    throw;
  }
}

namespace {

// lead(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(const IntPoly &a, const IntPoly &b) {
  std::vector<Integer> r(a.coeffs());
  int db = b.degree();
  const Integer &lb = b.lead();
  for (int k = a.degree(); k >= db; --k) {
    Integer c = r[k];
    for (Integer &x : r)
      x *= lb;
    if (sgn(c) == 0)
      continue;
    for (int j = 0; j <= db; ++j)
      mpz_submul(r[k - db + j].get_mpz_t(), c.get_mpz_t(),
                 b.coeffs()[j].get_mpz_t());
  }
  r.resize(std::max(db, 0));
  return IntPoly(std::move(r));
}

}  // namespace

IntPoly poly_gcd(const IntPoly &a, const IntPoly &b) {
  IntPoly x = a.primitive_part();
  IntPoly y = b.primitive_part();
  if (x.degree() < y.degree())
    std::swap(x, y);
  while (!y.is_zero()) {
    if (y.degree() == 0)
      return IntPoly {1};
    IntPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.primitive_part();
  }
  return x.primitive_part();
}

RatFun::RatFun(): den_ {1} { }

RatFun::RatFun(const IntPoly &p): num_(p), den_ {1} { }

RatFun RatFun::normalize(IntPoly num, IntPoly den) {
  if (den.is_zero())
    throw Error(Errc::kDivByZero, "rational function with zero denominator");
  RatFun f;
  if (num.is_zero())
    return f;
  IntPoly g = poly_gcd(num, den);
  if (g.degree() > 0) {
    num = divexact(num, g);
    den = divexact(den, g);
  }
  Integer c;
  Integer cn = num.content(), cd = den.content();
  mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (sgn(den[den.lowest_degree()]) < 0)
    c = -c;
  if (c != 1) {
    std::vector<Integer> nv(num.coeffs()), dv(den.coeffs());
    for (Integer &x : nv)
      mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    for (Integer &x : dv)
      mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    num = IntPoly(std::move(nv));
    den = IntPoly(std::move(dv));
  }
  f.num_ = std::move(num);
  f.den_ = std::move(den);
  return f;
}

RatFun operator+(const RatFun &a, const RatFun &b) {
  if (a.den_ == b.den_)
    return RatFun::normalize(a.num_ + b.num_, a.den_);
  return RatFun::normalize(a.num_ * b.den_ + b.num_ * a.den_,
                           a.den_ * b.den_);
}

RatFun operator-(const RatFun &a, const RatFun &b) {
  return a + RatFun::normalize(-b.num_, b.den_);
}

RatFun operator*(const RatFun &a, const RatFun &b) {
  return RatFun::normalize(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun &a, const RatFun &b) {
  if (b.num_.is_zero())
    throw Error(Errc::kDivByZero, "division by the zero rational function");
  return RatFun::normalize(a.num_ * b.den_, a.den_ * b.num_);
}

Series RatFun::expand(int order) const {
  return series_expand(*this, order);
}

std::string RatFun::to_string() const {
  if (den_ == IntPoly {1})
    return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

Series series_expand(const RatFun &f, int order) {
  if (order < 0)
    throw Error(Errc::kInvalidArgument, "negative series order");
  const IntPoly &num = f.num();
  const IntPoly &den = f.den();
  if (sgn(den[0]) == 0)
    throw Error(Errc::kPoleAtZero, "denominator vanishes at t = 0");
  Rat d0(den[0]);
  std::vector<Rat> c(order);
  for (int k = 0; k < order; ++k) {
    Rat acc(num[k]);
    int top = std::min(k, den.degree());
    for (int j = 1; j <= top; ++j)
      if (sgn(den.coeffs()[j]) != 0)
        acc -= Rat(den.coeffs()[j]) * c[k - j];
    c[k] = acc / d0;
  }
  return Series(std::move(c));
}

bool Series::nonnegative_integral() const {
  for (const Rat &x : c_)
    if (sgn(x) < 0 || x.get_den() != 1)
      return false;
  return true;
}

Series Series::truncated(int order) const {
  std::vector<Rat> v(c_.begin(), c_.begin() + std::min(order, this->order()));
  return Series(std::move(v));
}

std::string Series::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i)
    append_term(os, first, c_[i], static_cast<int>(i), 't');
  if (first)
    os << "0";
  return os.str();
}

PolyMatrix::PolyMatrix(std::vector<std::vector<IntPoly>> entries,
                       std::vector<std::string> labels)
    : a_(std::move(entries)), labels_(std::move(labels)) {
  for (const auto &row : a_)
    if (row.size() != a_.size())
      throw Error(Errc::kSizeMismatch, "polynomial matrix is not square");
  if (labels_.empty())
    for (std::size_t i = 0; i < a_.size(); ++i)
      labels_.push_back(std::to_string(i));
  if (labels_.size() != a_.size())
    throw Error(Errc::kSizeMismatch, "label count differs from matrix size");
}

std::size_t PolyMatrix::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label)
      return i;
  throw Error(Errc::kLabelError, "unknown label '" + std::string(label) + "'");
}

PolyMatrix PolyMatrix::transposed() const {
  std::vector<std::vector<IntPoly>> t(size(), std::vector<IntPoly>(size()));
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      t[j][i] = a_[i][j];
  return PolyMatrix(std::move(t), labels_);
}

IntPoly polymat_det(const PolyMatrix &m) {
  std::size_t n = m.size();
  if (n == 0)
    return IntPoly {1};
  std::vector<std::vector<IntPoly>> a(n, std::vector<IntPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = m.at(i, j);
  bool negate = false;
  IntPoly prev {1};
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k].is_zero())
      ++p;
    if (p == n)
      return IntPoly();
    if (p != k) {
      std::swap(a[p], a[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = divexact(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
      a[i][k] = IntPoly();
    }
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

namespace {

IntPoly cofactor_det(const std::vector<std::vector<IntPoly>> &a) {
  std::size_t n = a.size();
  if (n == 0)
    return IntPoly {1};
  if (n == 1)
    return a[0][0];
  IntPoly det;
  for (std::size_t col = 0; col < n; ++col) {
    if (a[0][col].is_zero())
      continue;
    std::vector<std::vector<IntPoly>> minor;
    minor.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<IntPoly> row;
      row.reserve(n - 1);
      for (std::size_t j = 0; j < n; ++j)
        if (j != col)
          row.push_back(a[i][j]);
      minor.push_back(std::move(row));
    }
    IntPoly term = a[0][col] * cofactor_det(minor);
    if (col % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

}  // namespace

IntPoly polymat_det_cofactor(const PolyMatrix &m) {
  std::vector<std::vector<IntPoly>> a(m.size(), std::vector<IntPoly>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      a[i][j] = m.at(i, j);
  return cofactor_det(a);
}

IntPoly cramer_replace_det(const PolyMatrix &m, std::size_t column) {
  if (column >= m.size())
    throw Error(Errc::kLabelError,
                "column " + std::to_string(column) + " out of range");
  PolyMatrix r = m;
  for (std::size_t i = 0; i < m.size(); ++i)
    r.at(i, column) = i == 0 ? IntPoly {1} : IntPoly();
  return polymat_det(r);
}

IntPoly cramer_replace_det(const PolyMatrix &m, std::string_view label) {
  return cramer_replace_det(m, m.index_of(label));
}

}  // namespace mckay
