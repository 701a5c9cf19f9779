//
// mckay-poincare - Copyright 2026 The mckay-poincare Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <set>

#include <gtest/gtest.h>

#include "mckay/group.h"

namespace mckay {
namespace {

struct Expect {
  GroupSpec spec;
  int order, classes, exponent;
};

TEST(Group, OrdersClassesExponents) {
  std::vector<Expect> cases {
      {CyclicSpec {1}, 1, 1, 1},
      {CyclicSpec {5}, 5, 5, 5},
      {CyclicSpec {8}, 8, 8, 8},
      {BinaryDihedralSpec {2}, 8, 5, 4},
      {BinaryDihedralSpec {3}, 12, 6, 12},
      {BinaryDihedralSpec {8}, 32, 11, 16},
      {BinaryTetrahedralSpec {}, 24, 7, 12},
      {BinaryOctahedralSpec {}, 48, 8, 24},
      {BinaryIcosahedralSpec {}, 120, 9, 60},
      {SL3CyclicSpec {7, {1, 2, 4}}, 7, 7, 7},
  };
  for (const Expect &e : cases) {
    GroupPtr g = build_group(e.spec);
    EXPECT_EQ(g->order(), e.order) << g->name();
    EXPECT_EQ(g->class_count(), e.classes) << g->name();
    EXPECT_EQ(g->exponent(), e.exponent) << g->name();
  }
}

TEST(Group, Names) {
  EXPECT_EQ(group_name(CyclicSpec {5}), "C5");
  EXPECT_EQ(group_name(BinaryDihedralSpec {3}), "D3");
  EXPECT_EQ(group_name(BinaryIcosahedralSpec {}), "I");
  EXPECT_EQ(group_name(SL3CyclicSpec {7, {1, 2, 4}}), "SL3C7-1-2-4");
}

TEST(Group, ElementsHaveDeterminantOne) {
  for (GroupSpec spec :
       std::vector<GroupSpec> {BinaryDihedralSpec {5}, BinaryOctahedralSpec {},
                               BinaryIcosahedralSpec {},
                               SL3CyclicSpec {6, {1, 2, 3}}}) {
    GroupPtr g = build_group(spec);
    for (int i = 0; i < g->order(); ++i)
      ASSERT_EQ(g->element(i).det(), CycloNum(1)) << g->name();
  }
}

TEST(Group, MultiplicationTableIsAssociativeWithInverses) {
  GroupPtr g = build_group(BinaryTetrahedralSpec {});
  int n = g->order();
  for (int a = 0; a < n; ++a) {
    EXPECT_EQ(g->multiply(a, g->inverse(a)), 0);
    for (int b = 0; b < n; b += 5)
      for (int c = 0; c < n; c += 7)
        EXPECT_EQ(g->multiply(g->multiply(a, b), c),
                  g->multiply(a, g->multiply(b, c)));
  }
  // Table agrees with matrix products.
  for (int a = 0; a < n; a += 3)
    for (int b = 0; b < n; b += 2)
      EXPECT_EQ(*g->index_of(g->element(a) * g->element(b)),
                g->multiply(a, b));
}

TEST(Group, ClassesPartitionAndAreConjugationOrbits) {
  GroupPtr g = build_group(BinaryOctahedralSpec {});
  std::vector<int> seen(g->order(), 0);
  for (const ConjugacyClass &c : g->classes())
    for (int m : c.members) {
      ++seen[m];
      EXPECT_EQ(g->element_order(m), c.element_order);
    }
  for (int s : seen)
    EXPECT_EQ(s, 1);
  // Brute-force conjugacy: h x h^-1 stays in the class of x.
  for (int x = 0; x < g->order(); ++x)
    for (int h = 0; h < g->order(); h += 5)
      EXPECT_EQ(g->class_of(g->multiply(g->multiply(h, x), g->inverse(h))),
                g->class_of(x));
  EXPECT_EQ(g->classes()[0].members, std::vector<int> {0});
}

TEST(Group, ClassSizesOfBinaryIcosahedral) {
  GroupPtr g = build_group(BinaryIcosahedralSpec {});
  std::multiset<std::pair<int, std::size_t>> got;
  for (const ConjugacyClass &c : g->classes())
    got.insert({c.element_order, c.members.size()});
  std::multiset<std::pair<int, std::size_t>> want {
      {1, 1}, {2, 1}, {3, 20}, {4, 30}, {5, 12},
      {5, 12}, {6, 20}, {10, 12}, {10, 12}};
  EXPECT_EQ(got, want);
}

TEST(Group, PowerAndTraceConsistency) {
  GroupPtr g = build_group(CyclicSpec {6});
  int x = *g->index_of(g->generators()[0]);
  EXPECT_EQ(g->power(x, 6), 0);
  EXPECT_EQ(g->power(x, -1), g->inverse(x));
  CycloNum tr = g->element(x).trace();
  CycloNum z = CycloNum::root_of_unity(6, 1);
  EXPECT_EQ(tr, z + z.conj());
}

TEST(Group, BadGeneratorsRejected) {
  CycloMatrix a = CycloMatrix::diagonal(
      {CycloNum::root_of_unity(5, 1), CycloNum::root_of_unity(5, -1)});
  EXPECT_NO_THROW(MatrixGroup::generate("C5", {a}, 5));
  try {
    MatrixGroup::generate("C5", {a}, 4);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), Errc::kBadGenerators);
  }
  // Infinite order element: closure blows past the limit.
  CycloMatrix inf {2, {CycloNum(1), CycloNum(1), CycloNum(0), CycloNum(1)}};
  EXPECT_THROW(MatrixGroup::generate("bad", {inf}, 3), Error);
  // SL3 weights must sum to 0 mod m.
  EXPECT_THROW(build_group(SL3CyclicSpec {5, {1, 1, 1}}), Error);
}

TEST(Group, Subgroup) {
  GroupPtr g = build_group(BinaryDihedralSpec {4});
  int x = *g->index_of(g->generators()[0]);
  GroupPtr n = subgroup(*g, "C8", {x}, 8);
  EXPECT_EQ(n->order(), 8);
  for (int i = 0; i < n->order(); ++i)
    EXPECT_TRUE(g->index_of(n->element(i)).has_value());
}

TEST(Group, QuaternionMatrix) {
  CycloMatrix q = quaternion_matrix(CycloNum(0), CycloNum(1), CycloNum(0),
                                    CycloNum(0));
  EXPECT_EQ(q * q, CycloMatrix::diagonal({CycloNum(-1), CycloNum(-1)}));
  std::vector<CycloMatrix> gens = binary_dihedral_generators(3);
  ASSERT_EQ(gens.size(), 2u);
  EXPECT_EQ(gens[1] * gens[1], CycloMatrix::diagonal({CycloNum(-1),
                                                      CycloNum(-1)}));
}

}  // namespace
}  // namespace mckay
