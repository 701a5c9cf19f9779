//
// mckay-poincare - Copyright 2026 The mckay-poincare Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <algorithm>
#include <map>
#include <numeric>

#include <gtest/gtest.h>

#include "mckay/mckay.h"

namespace mckay {
namespace {

TensorMatrix from_cartan(const IntMatrix &c) {
  // C = 2I - M^T, so M = (2I - C)^T.
  TensorMatrix m;
  std::size_t k = c.size();
  m.entries.assign(k, std::vector<long>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      m.entries[j][i] = (i == j ? 2 : 0) - c[i][j];
  for (std::size_t i = 0; i < k; ++i) {
    m.labels.push_back("v" + std::to_string(i));
    m.degrees.push_back(1);
  }
  return m;
}

TEST(TensorMatrix, CyclicCirculant) {
  for (int n = 3; n <= 8; ++n) {
    Subject s = load_subject("group:C" + std::to_string(n));
    TensorMatrix m = subject_tensor_matrix(s, Side::kRestriction, 1);
    // Linear characters x -> z^k: V (x) xi_k = xi_{k+1} + xi_{k-1}.
    for (std::size_t j = 0; j < m.size(); ++j) {
      long row_sum = 0;
      for (long e : m.entries[j])
        row_sum += e;
      EXPECT_EQ(row_sum, 2);
      EXPECT_EQ(m.entries[j][j], 0);
    }
    EXPECT_EQ(m.entries, transpose(m.entries));
    EXPECT_EQ(classify_affine_type(m).type, (AffineType {'A', n - 1, 1}));
  }
}

TEST(TensorMatrix, TrivialMultiplierGivesIdentity) {
  Subject s = load_subject("pair:T<O");
  ClassFunction triv = exterior_power_character(natural_character(s.G), 0);
  TensorMatrix m = tensor_matrix(s.induced, triv, 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      EXPECT_EQ(m.entries[i][j], i == j ? 1 : 0);
}

TEST(TensorMatrix, C2InD2RestrictionSide) {
  Subject s = load_subject("pair:C2<D2");
  TensorMatrix m = subject_tensor_matrix(s, Side::kRestriction, 1);
  EXPECT_EQ(m.entries, (IntMatrix {{0, 1}, {4, 0}}));
  EXPECT_EQ(classify_affine_type(m).type, (AffineType {'A', 2, 2}));
  TensorMatrix ind = subject_tensor_matrix(s, Side::kInduction, 1);
  EXPECT_EQ(ind.entries, (IntMatrix {{0, 2}, {2, 0}}));
}

TEST(TensorMatrix, ElementwiseMatchesClassBased) {
  for (const char *name : {"pair:D3<D6", "pair:C6<D3", "group:I",
                           "group:SL3C6-1-2-3"}) {
    Subject s = load_subject(name);
    for (Side side : {Side::kRestriction, Side::kInduction}) {
      const ModuleSet &mods = side_modules(s, side);
      ClassFunction chi = side_multiplier(s, side, 1);
      EXPECT_EQ(tensor_matrix(mods, chi).entries,
                tensor_matrix_elementwise(mods, chi).entries)
          << name;
    }
  }
}

TEST(TensorMatrix, NonClosedModuleSetRejected) {
  Subject s = load_subject("group:O");
  ModuleSet partial = s.g_table;
  partial.chars.resize(2);
  partial.labels.resize(2);
  partial.degrees.resize(2);
  try {
    tensor_matrix(partial, natural_character(s.G), 1);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), Errc::kNonIntegralMultiplicity);
  }
}

TEST(Classification, CatalogPairsBothSides) {
  std::map<std::string, std::pair<std::string, std::string>> want {
      {"pair:T<O", {"E6^(2)", "F4^(1)"}},
      {"pair:D2<T", {"D4^(3)", "G2^(1)"}},
      {"pair:C2<D2", {"A2^(2)", "A1^(1)"}},
      {"pair:D2<D4", {"A5^(2)", "B3^(1)"}},
      {"pair:C6<D3", {"D4^(2)", "C3^(1)"}},
      {"pair:C6<D6", {"A6^(2)", "C3^(1)"}},
  };
  for (const auto &[name, tags] : want) {
    Subject s = load_subject(name);
    EXPECT_EQ(classify_affine_type(
                  subject_tensor_matrix(s, Side::kRestriction, 1))
                  .type.tag(),
              tags.first)
        << name;
    EXPECT_EQ(classify_affine_type(
                  subject_tensor_matrix(s, Side::kInduction, 1))
                  .type.tag(),
              tags.second)
        << name;
  }
}

TEST(Classification, BinaryPolyhedralGroups) {
  std::map<std::string, std::string> want {
      {"group:T", "E6^(1)"}, {"group:O", "E7^(1)"}, {"group:I", "E8^(1)"},
      {"group:D4", "D6^(1)"}, {"group:C2", "A1^(1)"}};
  for (const auto &[name, tag] : want) {
    Subject s = load_subject(name);
    Classification c =
        classify_affine_type(subject_tensor_matrix(s, Side::kRestriction, 1));
    EXPECT_EQ(c.type.tag(), tag);
    std::vector<long> deg(s.g_table.degrees.begin(), s.g_table.degrees.end());
    EXPECT_EQ(c.dual_marks, deg) << name;
  }
}

TEST(Classification, EveryTemplateClassifiesAsItself) {
  for (int k = 2; k <= 10; ++k)
    for (const AffineType &t : affine_types_with_vertices(k)) {
      IntMatrix c = cartan_template(t);
      ASSERT_EQ(static_cast<int>(c.size()), t.vertex_count()) << t.tag();
      // Shuffle the vertices to exercise the matcher.
      std::vector<int> p(k);
      std::iota(p.begin(), p.end(), 0);
      std::rotate(p.begin(), p.begin() + 1, p.end());
      std::reverse(p.begin() + 1, p.end());
      IntMatrix shuffled(k, std::vector<long>(k));
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          shuffled[i][j] = c[p[i]][p[j]];
      Classification got = classify_affine_type(from_cartan(shuffled));
      EXPECT_EQ(got.type, t) << t.tag();
      // Marks are positive null vectors.
      for (int i = 0; i < k; ++i) {
        long row = 0;
        for (int j = 0; j < k; ++j)
          row += shuffled[i][j] * got.marks[j];
        EXPECT_EQ(row, 0) << t.tag();
        EXPECT_GT(got.marks[i], 0);
      }
      EXPECT_EQ(parse_affine_tag(t.tag()), t);
    }
}

TEST(Classification, RejectsHyperbolic) {
  TensorMatrix m = from_cartan({{2, -3}, {-3, 2}});
  try {
    classify_affine_type(m);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), Errc::kUnclassified);
  }
  EXPECT_FALSE(parse_affine_tag("Q7^(1)").has_value());
  EXPECT_FALSE(parse_affine_tag("E9^(1)").has_value());
}

TEST(Classification, MatchMatrices) {
  IntMatrix a {{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}};
  IntMatrix b {{2, -1, -1}, {0, 2, -1}, {0, -2, 2}};
  auto p = match_matrices(a, b);
  EXPECT_FALSE(p.has_value());
  IntMatrix c {{2, -2, -1}, {-1, 2, 0}, {-1, 0, 2}};
  p = match_matrices(a, c);
  ASSERT_TRUE(p.has_value());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      EXPECT_EQ(c[(*p)[i]][(*p)[j]], a[i][j]);
}

TEST(DegreeData, TableValues) {
  DegreeData e8 = degree_data({'E', 8, 1});
  EXPECT_EQ(e8.a, 12);
  EXPECT_EQ(e8.b, 20);
  EXPECT_EQ(e8.h, 30);
  EXPECT_EQ(e8.p2, 10);
  EXPECT_EQ(e8.q2, 6);
  EXPECT_EQ(e8.r2, 4);
  DegreeData g2 = degree_data({'G', 2, 1});
  EXPECT_EQ(g2.a, 4);
  EXPECT_EQ(g2.b, 4);
  EXPECT_EQ(g2.h, 6);
}

TEST(Verification, TransposeAndEigen) {
  for (const char *name : {"group:SL3C7-1-2-4", "group:SL3C4-1-1-2",
                           "pair:T<O", "group:C3"}) {
    Subject s = load_subject(name);
    EXPECT_TRUE(verify_transpose_symmetry(s).ok()) << name;
    for (int r = 1; r < s.dim(); ++r) {
      EXPECT_TRUE(verify_eigen_structure(s, Side::kRestriction, r).ok());
      if (s.is_pair)
        EXPECT_TRUE(verify_eigen_structure(s, Side::kInduction, r).ok());
    }
  }
}

TEST(Verification, CyclicThreeEigenvalue) {
  // At a generator of C3, chi_V = z + z^2 = -1 and the eigenvalue is 3.
  Subject s = load_subject("group:C3");
  ClassFunction v = natural_character(s.G);
  EXPECT_EQ(v.degree() - v[1], CycloNum(3));
}

TEST(Quiver, CyclicTriangleAndDoubledBond) {
  Subject c3 = load_subject("group:C3");
  std::string dot =
      quiver_dot(subject_tensor_matrix(c3, Side::kRestriction, 1), "C3");
  EXPECT_EQ(std::count(dot.begin(), dot.end(), '>'), 3);
  EXPECT_EQ(dot.find("dir=both"), std::string::npos);
  EXPECT_EQ(dot.find("dir=forward"), std::string::npos);

  Subject p = load_subject("pair:C2<D2");
  TensorMatrix m = subject_tensor_matrix(p, Side::kRestriction, 1);
  std::string q = quiver_dot(m, "C2<D2");
  size_t edges = 0;
  for (size_t pos = q.find("->"); pos != std::string::npos;
       pos = q.find("->", pos + 1))
    ++edges;
  EXPECT_EQ(edges, 4u);
  // entries[1][0] = 4 > 1: arrows point to vertex 1.
  EXPECT_NE(q.find("v0 -> v1 [dir=forward]"), std::string::npos) << q;
  std::string js = quiver_json(m, "C2<D2");
  EXPECT_NE(js.find("\"multiplicity\": 4"), std::string::npos);
}

TEST(Side, Parsing) {
  EXPECT_EQ(parse_side("rest"), Side::kRestriction);
  EXPECT_EQ(parse_side("induction"), Side::kInduction);
  EXPECT_THROW(parse_side("up"), Error);
}

}  // namespace
}  // namespace mckay
