//
// mckay-poincare - Copyright 2026 The mckay-poincare Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <random>

#include <gtest/gtest.h>

#include "mckay/poly.h"

namespace mckay {
namespace {

IntPoly random_poly(std::mt19937 &rng, int deg) {
  std::uniform_int_distribution<long> d(-3, 3);
  std::vector<Integer> c;
  for (int i = 0; i <= deg; ++i)
    c.push_back(d(rng));
  return IntPoly(std::move(c));
}

TEST(IntPoly, Basics) {
  IntPoly p {1, -2, 1};
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(IntPoly().degree(), -1);
  EXPECT_EQ(IntPoly({0, 0, 0}).degree(), -1);
  EXPECT_EQ(p * IntPoly({1, 1}), (IntPoly {1, -1, -1, 1}));
  EXPECT_EQ(IntPoly({1, 1}).pow(3), (IntPoly {1, 3, 3, 1}));
  EXPECT_EQ(p.substitute_power(2), (IntPoly {1, 0, -2, 0, 1}));
  EXPECT_EQ(p.eval(Rat(3)), Rat(4));
  EXPECT_EQ(IntPoly({0, 0, 2, 4}).lowest_degree(), 2);
  EXPECT_EQ(IntPoly({0, 6, -4}).content(), Integer(2));
  EXPECT_EQ(IntPoly({0, 6, -4}).primitive_part(), (IntPoly {0, -3, 2}));
}

TEST(IntPoly, ToString) {
  EXPECT_EQ(IntPoly({1, 0, -1, 0, 2}).to_string(), "1 - t^2 + 2t^4");
  EXPECT_EQ(IntPoly({0, -1}).to_string(), "-t");
  EXPECT_EQ(IntPoly().to_string(), "0");
}

TEST(IntPoly, FromRationals) {
  Integer scale;
  IntPoly p = IntPoly::from_rationals({Rat(1, 2), Rat(1, 3)}, &scale);
  EXPECT_EQ(p, (IntPoly {3, 2}));
  EXPECT_EQ(scale, Integer(6));
}

TEST(IntPoly, ExactDivisionAndGcd) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    IntPoly a = random_poly(rng, 4), b = random_poly(rng, 3),
            g = random_poly(rng, 2);
    if (a.is_zero() || b.is_zero() || g.degree() < 1)
      continue;
    IntPoly ga = g * a, gb = g * b;
    EXPECT_EQ(divexact(ga, a), g);
    IntPoly d = poly_gcd(ga, gb);
    EXPECT_TRUE(divides(d, ga));
    EXPECT_TRUE(divides(d, gb));
    EXPECT_TRUE(divides(g.primitive_part(), d));
  }
  try {
    divexact(IntPoly {1, 0, 1}, IntPoly {1, 1});
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), Errc::kNonIntegral);
  }
}

TEST(RatFun, Normalization) {
  // (1 + t^12) / ((1 - t^6)(1 - t^8)) reduces by 1 + t^4.
  RatFun f = RatFun::normalize(
      IntPoly::monomial(1, 12) + IntPoly {1},
      (IntPoly {1} - IntPoly::monomial(1, 6)) *
          (IntPoly {1} - IntPoly::monomial(1, 8)));
  EXPECT_EQ(f.to_string(), "(1 - t^4 + t^8) / (1 - t^4 - t^6 + t^10)");
  RatFun g = RatFun::normalize(IntPoly {-2, 0, -2}, IntPoly {-2, 0, 2});
  EXPECT_EQ(g.den()[0], Integer(1));
  EXPECT_EQ(g, RatFun::normalize(IntPoly {1, 0, 1}, IntPoly {1, 0, -1}));
  EXPECT_EQ(RatFun(IntPoly {1, 2}).to_string(), "1 + 2t");
  EXPECT_THROW(RatFun::normalize(IntPoly {1}, IntPoly {}), Error);
}

TEST(RatFun, FieldOperations) {
  RatFun a = RatFun::normalize(IntPoly {1}, IntPoly {1, -1});
  RatFun b = RatFun::normalize(IntPoly {1}, IntPoly {1, 1});
  EXPECT_EQ(a + b, RatFun::normalize(IntPoly {2}, IntPoly {1, 0, -1}));
  EXPECT_EQ(a * b, RatFun::normalize(IntPoly {1}, IntPoly {1, 0, -1}));
  EXPECT_EQ((a - b) / (a + b), RatFun(IntPoly {0, 1}));
}

TEST(Series, ExpansionMatchesBinomials) {
  // 1 / (1 - t)^3 has coefficients C(k + 2, 2).
  RatFun f = RatFun::normalize(IntPoly {1}, IntPoly {1, -1}.pow(3));
  Series s = series_expand(f, 30);
  for (int k = 0; k < 30; ++k)
    EXPECT_EQ(s[k], Rat((k + 1) * (k + 2) / 2));
  EXPECT_TRUE(s.nonnegative_integral());
  EXPECT_EQ(s.truncated(3).to_string(), "1 + 3t + 6t^2");
  try {
    series_expand(RatFun::normalize(IntPoly {1}, IntPoly {0, 1}), 4);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), Errc::kPoleAtZero);
  }
}

TEST(PolyMatrix, BareissMatchesCofactorExpansion) {
  std::mt19937 rng(11);
  for (int n = 1; n <= 5; ++n)
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<std::vector<IntPoly>> e(n, std::vector<IntPoly>(n));
      for (auto &row : e)
        for (IntPoly &x : row)
          x = random_poly(rng, 2);
      if (trial == 0 && n > 1)
        e[0] = std::vector<IntPoly>(n);  // zero row forces pivoting
      PolyMatrix m(e, {});
      EXPECT_EQ(polymat_det(m), polymat_det_cofactor(m)) << "n=" << n;
      EXPECT_EQ(polymat_det(m), polymat_det(m.transposed()));
    }
}

TEST(PolyMatrix, CramerColumnReplacement) {
  // [[1, t], [t, 1]]: replacing column 0 by e_0 gives det [[1, t], [0, 1]].
  PolyMatrix m({{IntPoly {1}, IntPoly {0, 1}}, {IntPoly {0, 1}, IntPoly {1}}},
               {"a", "b"});
  EXPECT_EQ(cramer_replace_det(m, 0), (IntPoly {1}));
  EXPECT_EQ(cramer_replace_det(m, "b"), (IntPoly {0, -1}));
  EXPECT_EQ(m.index_of("b"), 1u);
  try {
    m.index_of("zz");
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), Errc::kLabelError);
  }
}

}  // namespace
}  // namespace mckay
