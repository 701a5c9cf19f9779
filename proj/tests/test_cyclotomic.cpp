//
// mckay-poincare - Copyright 2026 The mckay-poincare Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <cmath>
#include <complex>
#include <numeric>

#include <gtest/gtest.h>

#include "mckay/cyclotomic.h"

namespace mckay {
namespace {

std::complex<double> root(int m, long k) {
  return std::polar(1.0, 2 * M_PI * static_cast<double>(k) / m);
}

void expect_near(const CycloNum &x, std::complex<double> want) {
  std::complex<double> got = x.approx();
  EXPECT_NEAR(got.real(), want.real(), 1e-9) << x.to_string();
  EXPECT_NEAR(got.imag(), want.imag(), 1e-9) << x.to_string();
}

TEST(Cyclotomic, PolynomialsMatchProductFormula) {
  // Phi_m evaluated at roots of unity of exact order m vanishes.
  for (int m = 1; m <= 30; ++m) {
    const std::vector<long> &phi = cyclotomic_polynomial(m);
    EXPECT_EQ(static_cast<int>(phi.size()) - 1, euler_phi(m));
    for (long k = 1; k <= m; ++k) {
      if (std::gcd(k, static_cast<long>(m)) != 1)
        continue;
      std::complex<double> z = root(m, k), acc = 0;
      for (std::size_t i = phi.size(); i-- > 0;)
        acc = acc * z + static_cast<double>(phi[i]);
      EXPECT_LT(std::abs(acc), 1e-8) << "m=" << m;
    }
  }
}

TEST(Cyclotomic, EulerPhi) {
  EXPECT_EQ(euler_phi(1), 1);
  EXPECT_EQ(euler_phi(12), 4);
  EXPECT_EQ(euler_phi(30), 8);
  EXPECT_EQ(euler_phi(97), 96);
}

TEST(Cyclotomic, RootsOfUnity) {
  for (int m : {1, 2, 3, 4, 5, 8, 12, 15, 24}) {
    CycloNum z = CycloNum::root_of_unity(m, 1);
    CycloNum p(1);
    CycloNum sum(0);
    for (int k = 0; k < m; ++k) {
      sum += p;
      expect_near(p, root(m, k));
      p *= z;
    }
    EXPECT_EQ(p, CycloNum(1)) << "z^m for m=" << m;
    EXPECT_EQ(sum, CycloNum(m == 1 ? 1 : 0)) << "m=" << m;
  }
}

TEST(Cyclotomic, NegativeExponentsAndCanonicalForm) {
  EXPECT_EQ(CycloNum::root_of_unity(8, -1), CycloNum::root_of_unity(8, 7));
  EXPECT_EQ(CycloNum::root_of_unity(4, 2), CycloNum(-1));
  EXPECT_TRUE((CycloNum::root_of_unity(4, 1) * CycloNum::root_of_unity(4, 1))
                  .is_rational());
}

TEST(Cyclotomic, CrossConductorArithmetic) {
  CycloNum i = CycloNum::root_of_unity(4, 1);
  CycloNum w = CycloNum::root_of_unity(3, 1);
  CycloNum x = i + w;
  EXPECT_EQ(x.conductor(), 12);
  expect_near(x, root(4, 1) + root(3, 1));
  expect_near(i * w, root(12, 7));
  // sqrt(2) = z8 + z8^-1 lies in Q(z8) and squares to 2.
  CycloNum s2 = CycloNum::root_of_unity(8, 1) + CycloNum::root_of_unity(8, -1);
  EXPECT_EQ(s2 * s2, CycloNum(2));
  EXPECT_FALSE(s2.is_rational());
}

TEST(Cyclotomic, InverseAndDivision) {
  CycloNum a = CycloNum::make(15, {{0, Rat(3, 2)}, {1, Rat(-1)}, {4, 2}});
  EXPECT_EQ(a * a.inverse(), CycloNum(1));
  CycloNum b = CycloNum::root_of_unity(5, 2) + CycloNum(Rat(1, 3));
  expect_near(a / b, a.approx() / b.approx());
  EXPECT_THROW(a / CycloNum(0), Error);
  try {
    CycloNum(0).inverse();
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), Errc::kDivByZero);
  }
}

TEST(Cyclotomic, GaloisAndConjugation) {
  CycloNum z = CycloNum::root_of_unity(7, 1);
  EXPECT_EQ(z.galois(3), CycloNum::root_of_unity(7, 3));
  EXPECT_EQ(z.conj(), CycloNum::root_of_unity(7, 6));
  CycloNum x = z + CycloNum(Rat(2, 5)) * z.galois(2);
  expect_near(x.conj(), std::conj(x.approx()));
  // The norm (product of all conjugates) is rational.
  CycloNum norm(1);
  for (int k = 1; k < 7; ++k)
    norm *= x.galois(k);
  EXPECT_TRUE(norm.is_rational());
}

TEST(Cyclotomic, RationalQueries) {
  CycloNum h(Rat(1, 2));
  EXPECT_TRUE(h.is_rational());
  EXPECT_FALSE(h.is_integer());
  EXPECT_EQ(h.rational_value(), Rat(1, 2));
  EXPECT_THROW(h.integer_value(), Error);
  EXPECT_THROW(CycloNum::root_of_unity(3, 1).rational_value(), Error);
  EXPECT_EQ(CycloNum(7).embed(12), CycloNum(7));
}

TEST(Cyclotomic, ToString) {
  EXPECT_EQ(CycloNum(0).to_string(), "0");
  EXPECT_EQ(CycloNum(Rat(-3, 4)).to_string(), "-3/4");
  CycloNum x = CycloNum::make(8, {{0, Rat(1, 2)}, {2, 3}});
  EXPECT_EQ(x.to_string(), "1/2 + 3*z8^2");
}

TEST(Cyclotomic, CompareIsTotalOrder) {
  CycloNum a(1), b = CycloNum::root_of_unity(3, 1), c(Rat(1, 2));
  EXPECT_EQ(CycloNum::compare(a, a), 0);
  EXPECT_EQ(CycloNum::compare(a, b), -CycloNum::compare(b, a));
  EXPECT_NE(CycloNum::compare(a, c), 0);
}

TEST(CycloPoly, MultiplyAndRationality) {
  CycloNum w = CycloNum::root_of_unity(3, 1);
  // (t - w)(t - w^2) = t^2 + t + 1
  CycloPoly p({-w, CycloNum(1)});
  CycloPoly q({-w.conj(), CycloNum(1)});
  CycloPoly r = p * q;
  ASSERT_TRUE(r.all_rational());
  EXPECT_EQ(r.rational_coeffs(), (std::vector<Rat> {1, 1, 1}));
  EXPECT_FALSE(p.all_rational());
  EXPECT_THROW(p.rational_coeffs(), Error);
}

}  // namespace
}  // namespace mckay
