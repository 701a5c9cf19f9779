//
// mckay-poincare - Copyright 2026 The mckay-poincare Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <string>

#include "mckay/poincare.h"

namespace mckay {

namespace {

Integer binom(long n, long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

Integer pow2(long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return r;
}

IntPoly div_int(const IntPoly &p, const Integer &d) {
  std::vector<Integer> v;
  for (const Integer &c : p.coeffs()) {
    if (c % d != 0)
      throw Error(Errc::kNonIntegral, "coefficient not divisible by " +
                                          d.get_str());
    v.push_back(c / d);
  }
  return IntPoly(std::move(v));
}

const IntPoly &one_plus_t2() {
  static const IntPoly p {1, 0, 1};
  return p;
}

const IntPoly &one_minus_t2() {
  static const IntPoly p {1, 0, -1};
  return p;
}

// scale * t^n p((t + 1/t) / 2) for deg p <= n.
IntPoly half_substitute(const IntPoly &p, int n, const Integer &scale) {
  IntPoly acc;
  for (int k = 0; k <= p.degree(); ++k) {
    if (p[k] == 0)
      continue;
    IntPoly term = IntPoly::monomial(1, n - k) * one_plus_t2().pow(k);
    Rat c(p[k] * scale, pow2(k));
    c.canonicalize();
    if (c.get_den() != 1)
      throw Error(Errc::kNonIntegral, "half substitution is not integral");
    acc += term * c.get_num();
  }
  return acc;
}

// 2^{1-n} sum_i C(n, 2i) (1 + t^2)^{n-2i} (1 - t^2)^{2i}
IntPoly c_binomial(int n) {
  IntPoly acc;
  for (int i = 0; 2 * i <= n; ++i)
    acc += one_plus_t2().pow(n - 2 * i) * one_minus_t2().pow(2 * i) *
           binom(n, 2 * i);
  return div_int(acc, pow2(n - 1));
}

// sum_i (-1)^i C(m-i, i) t^{2i} (1 + t^2)^{m-2i}
IntPoly a_binomial(int m) {
  IntPoly acc;
  for (int i = 0; 2 * i <= m; ++i) {
    Integer c = binom(m - i, i);
    if (i % 2 == 1)
      c = -c;
    acc += IntPoly::monomial(c, 2 * i) * one_plus_t2().pow(m - 2 * i);
  }
  return acc;
}

// 2^{-n} sum_i C(n+1, 2i) (1 + t^2)^{n+2-2i} (1 - t^2)^{2i}
IntPoly d_binomial(int n) {
  IntPoly acc;
  for (int i = 0; 2 * i <= n + 1; ++i)
    acc += one_plus_t2().pow(n + 2 - 2 * i) * one_minus_t2().pow(2 * i) *
           binom(n + 1, 2 * i);
  return div_int(acc, pow2(n));
}

// 2 cos(pi k / m) = z + z^-1 with z a primitive 2m-th root of unity.
CycloNum two_cos(long k, int m) {
  return CycloNum::root_of_unity(2 * m, k) +
         CycloNum::root_of_unity(2 * m, -k);
}

IntPoly rational_poly(const CycloPoly &p) {
  Integer scale;
  IntPoly out = IntPoly::from_rationals(p.rational_coeffs(), &scale);
  if (scale != 1)
    throw Error(Errc::kNonIntegral, "product is not integral");
  return out;
}

// prod (1 + t^2 - 2cos(theta) t) given the values 2cos(theta).
IntPoly quadratic_product(const std::vector<CycloNum> &two_cosines) {
  CycloPoly prod({CycloNum(1)});
  for (const CycloNum &c : two_cosines)
    prod = prod * CycloPoly({CycloNum(1), -c, CycloNum(1)});
  return rational_poly(prod);
}

// det((1 + t^2) I - t B) for an integer matrix B.
IntPoly quantum_det(const IntMatrix &b) {
  if (b.empty())
    return IntPoly {1};
  return polymat_det(quantum_cartan(b));
}

IntMatrix path_adjacency(int n) {
  IntMatrix b(n, std::vector<long>(n, 0));
  for (int i = 0; i + 1 < n; ++i)
    b[i][i + 1] = b[i + 1][i] = 1;
  return b;
}

// Path with the last bond doubled in one direction (finite type B/C shape).
IntMatrix folded_path(int n) {
  IntMatrix b = path_adjacency(n);
  if (n >= 2)
    b[n - 2][n - 1] = 2;
  return b;
}

// Finite D_m adjacency, m >= 2 (D_2 = A_1 x A_1, D_3 = A_3).
IntMatrix d_adjacency(int m) {
  IntMatrix b(m, std::vector<long>(m, 0));
  for (int i = 0; i + 1 < m - 1; ++i)
    b[i][i + 1] = b[i + 1][i] = 1;
  if (m >= 3)
    b[m - 3][m - 1] = b[m - 1][m - 3] = 1;
  return b;
}

}  // namespace

IntPoly tcheb_T(int n) {
  if (n < 0)
    throw Error(Errc::kInvalidArgument, "negative Chebyshev index");
  IntPoly prev {1}, cur {0, 1};
  if (n == 0)
    return prev;
  for (int k = 1; k < n; ++k) {
    IntPoly next = IntPoly {0, 2} * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

IntPoly tcheb_U(int n) {
  if (n < 0)
    throw Error(Errc::kInvalidArgument, "negative Chebyshev index");
  IntPoly prev {1}, cur {0, 2};
  if (n == 0)
    return prev;
  for (int k = 1; k < n; ++k) {
    IntPoly next = IntPoly {0, 2} * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

CheckReport tcheb_identity_suite(int max_n) {
  CheckReport rep;
  rep.name = "tcheb";
  auto tag = [](const char *what, int n) {
    return std::string(what) + " fails at n=" + std::to_string(n);
  };
  for (int n = 0; n <= max_n; ++n) {
    IntPoly t = tcheb_T(n), u = tcheb_U(n);
    IntPoly sum_t;
    for (int i = 0; 2 * i <= n; ++i)
      sum_t += IntPoly::monomial(binom(n, 2 * i), n - 2 * i) *
               IntPoly {-1, 0, 1}.pow(i);
    rep.expect(t == sum_t, tag("T binomial sum", n));
    IntPoly sum_u;
    for (int i = 0; 2 * i <= n; ++i) {
      Integer c = binom(n - i, i) * pow2(n - 2 * i);
      if (i % 2 == 1)
        c = -c;
      sum_u += IntPoly::monomial(c, n - 2 * i);
    }
    rep.expect(u == sum_u, tag("U binomial sum", n));
    CycloNum half(Rat(1, 2));
    CycloPoly prod_t({CycloNum(Rat(pow2(n), 2))});
    for (int i = 1; i <= n; ++i)
      prod_t = prod_t * CycloPoly({-(half * two_cos(2 * i - 1, 2 * n)),
                                   CycloNum(1)});
    if (n >= 1)
      rep.expect(t == rational_poly(prod_t), tag("T root product", n));
    CycloPoly prod_u({CycloNum(Rat(pow2(n)))});
    for (int i = 1; i <= n; ++i)
      prod_u = prod_u *
               CycloPoly({-(half * two_cos(i, n + 1)), CycloNum(1)});
    rep.expect(u == rational_poly(prod_u), tag("U root product", n));
    if (n >= 1)
      rep.expect(t == u - IntPoly {0, 1} * tcheb_U(n - 1),
                 tag("T = U_n - t U_{n-1}", n));
    if (n >= 2)
      rep.expect(t * Integer(2) == u - tcheb_U(n - 2),
                 tag("2T_n = U_n - U_{n-2}", n));
  }
  // c_{n-1}: type B/C quantum Cartan determinants.
  int max_c = std::min(max_n, 12);
  std::vector<IntPoly> c {IntPoly {1, 0, 1}, IntPoly {1, 0, 0, 0, 1}};
  for (int n = 1; n <= max_c; ++n) {
    if (static_cast<int>(c.size()) < n)
      c.push_back(one_plus_t2() * c[n - 2] -
                  IntPoly::monomial(1, 2) * c[n - 3]);
    const IntPoly &cn = c[n - 1];
    rep.expect(cn == half_substitute(tcheb_T(n), n, 2),
               tag("c via T", n));
    rep.expect(cn == c_binomial(n), tag("c binomial sum", n));
    std::vector<CycloNum> cos;
    for (int i = 1; i <= n; ++i)
      cos.push_back(two_cos(2 * i - 1, 2 * n));
    rep.expect(cn == quadratic_product(cos), tag("c root product", n));
    rep.expect(cn == quantum_det(folded_path(n)), tag("c determinant", n));
  }
  // a_n: type A quantum Cartan determinants.
  for (int n = 0; n <= max_c; ++n) {
    IntPoly an = quantum_det(path_adjacency(n));
    rep.expect(an == half_substitute(tcheb_U(n), n, 1), tag("a via U", n));
    rep.expect(an == a_binomial(n), tag("a binomial sum", n));
    std::vector<CycloNum> cos;
    for (int i = 1; i <= n; ++i)
      cos.push_back(two_cos(i, n + 1));
    rep.expect(an == quadratic_product(cos), tag("a root product", n));
  }
  // d_n: type D quantum Cartan determinants.
  for (int n = 0; n <= max_c; ++n) {
    IntPoly dn = quantum_det(d_adjacency(n + 2));
    rep.expect(dn == one_plus_t2() * half_substitute(tcheb_T(n + 1), n + 1, 2),
               tag("d via T", n));
    rep.expect(dn == d_binomial(n), tag("d binomial sum", n));
    if (n == 0)
      rep.expect(dn == IntPoly {1, 0, 2, 0, 1}, tag("d initial value", n));
    if (n == 1)
      rep.expect(dn == IntPoly {1, 0, 1, 0, 1, 0, 1},
                 tag("d initial value", n));
  }
  return rep;
}

RatFun dihedral_closed_form(DihedralForm form, int n) {
  auto need = [&](int lo) {
    if (n < lo)
      throw Error(Errc::kInvalidArgument,
                  "closed form needs n >= " + std::to_string(lo));
  };
  const IntPoly &w = one_minus_t2();
  switch (form) {
  case DihedralForm::kDihedralInDihedral:
    need(3);
    return RatFun::normalize(c_binomial(n), IntPoly {1, 0, -1, 0, -1, 0, 1} *
                                                a_binomial(n - 2));
  case DihedralForm::kCyclicInDihedral:
  case DihedralForm::kCyclicInDoubleDihedral:
    need(1);
    return RatFun::normalize(c_binomial(n), w * w * a_binomial(n - 1));
  case DihedralForm::kCyclicGroup:
    need(1);
    return RatFun::normalize(a_binomial(n - 1),
                             c_binomial(n) - IntPoly::monomial(2, n));
  case DihedralForm::kBinaryDihedralGroup: {
    need(2);
    IntPoly w4 {1, 0, 0, 0, -1};
    return RatFun::normalize(d_binomial(n), w4 * w4 * a_binomial(n - 1));
  }
  }
  throw Error(Errc::kInvalidArgument, "unknown closed form");
}

}  // namespace mckay
