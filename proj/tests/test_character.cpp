//
// mckay-poincare - Copyright 2026 The mckay-poincare Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <algorithm>

#include <gtest/gtest.h>

#include "mckay/catalog.h"

namespace mckay {
namespace {

std::vector<int> sorted_degrees(const ModuleSet &t) {
  std::vector<int> d = t.degrees;
  std::sort(d.begin(), d.end());
  return d;
}

TEST(CharacterTable, KnownDegrees) {
  EXPECT_EQ(sorted_degrees(character_table(build_group(BinaryTetrahedralSpec {}))),
            (std::vector<int> {1, 1, 1, 2, 2, 2, 3}));
  EXPECT_EQ(sorted_degrees(character_table(build_group(BinaryOctahedralSpec {}))),
            (std::vector<int> {1, 1, 2, 2, 2, 3, 3, 4}));
  EXPECT_EQ(
      sorted_degrees(character_table(build_group(BinaryIcosahedralSpec {}))),
      (std::vector<int> {1, 2, 2, 3, 3, 4, 4, 5, 6}));
  EXPECT_EQ(sorted_degrees(character_table(build_group(BinaryDihedralSpec {3}))),
            (std::vector<int> {1, 1, 1, 1, 2, 2}));
}

TEST(CharacterTable, TrivialFirstAndLabels) {
  ModuleSet t = character_table(build_group(BinaryOctahedralSpec {}));
  for (const CycloNum &v : t.chars[0].values())
    EXPECT_EQ(v, CycloNum(1));
  EXPECT_EQ(t.labels.front(), "X0");
  EXPECT_EQ(t.index_of("X3"), 3u);
  EXPECT_THROW(t.index_of("nope"), Error);
}

TEST(CharacterTable, ValuesAreTracesOfAnIrreducibleRealization) {
  // The natural character of every SL2 catalog group is irreducible except
  // for cyclic groups, where it splits into two linear characters.
  for (GroupSpec spec : std::vector<GroupSpec> {
           BinaryDihedralSpec {4}, BinaryTetrahedralSpec {},
           BinaryIcosahedralSpec {}}) {
    GroupPtr g = build_group(spec);
    ModuleSet t = character_table(g);
    ClassFunction v = natural_character(g);
    EXPECT_EQ(inner_product(v, v), CycloNum(1)) << g->name();
    std::vector<long> m = decompose(t, v);
    EXPECT_EQ(std::count(m.begin(), m.end(), 1), 1) << g->name();
  }
  GroupPtr c = build_group(CyclicSpec {6});
  ClassFunction v = natural_character(c);
  EXPECT_EQ(inner_product(v, v), CycloNum(2));
}

TEST(CharacterTable, ElementwiseAndClassPairingsAgree) {
  GroupPtr g = build_group(BinaryDihedralSpec {5});
  ModuleSet t = character_table(g);
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j)
      EXPECT_EQ(inner_product(t.chars[i], t.chars[j]),
                inner_product_elementwise(t.chars[i], t.chars[j]));
}

TEST(ExteriorPowers, DeterminantOneGroups) {
  GroupPtr g = build_group(BinaryOctahedralSpec {});
  ClassFunction v = natural_character(g);
  ClassFunction triv = exterior_power_character(v, 0);
  EXPECT_EQ(exterior_power_character(v, 2), triv);
  EXPECT_EQ(exterior_power_character(v, 1), v);
  EXPECT_EQ(exterior_power_character(v, 3).values(),
            std::vector<CycloNum>(g->class_count(), CycloNum(0)));
  GroupPtr h = build_group(SL3CyclicSpec {7, {1, 2, 4}});
  ClassFunction w = natural_character(h);
  EXPECT_EQ(exterior_power_character(w, 3), exterior_power_character(w, 0));
  EXPECT_EQ(exterior_power_character(w, 2), w.conj());
}

TEST(ExteriorPowers, BruteForceFromEigenvalues) {
  // For diagonal SL3 elements, wedge^2 is the sum of pairwise products.
  GroupPtr h = build_group(SL3CyclicSpec {6, {1, 2, 3}});
  ClassFunction w2 = exterior_power_character(natural_character(h), 2);
  for (const ConjugacyClass &c : h->classes()) {
    const CycloMatrix &m = h->element(c.representative);
    CycloNum want = m(0, 0) * m(1, 1) + m(0, 0) * m(2, 2) + m(1, 1) * m(2, 2);
    EXPECT_EQ(w2.at_element(c.representative), want);
  }
}

TEST(Decompose, RejectsNonCharacters) {
  GroupPtr g = build_group(BinaryTetrahedralSpec {});
  ModuleSet t = character_table(g);
  ClassFunction bad = t.chars[1] - t.chars[2];
  try {
    decompose(t, bad);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), Errc::kNonCharacter);
  }
  ClassFunction sum = t.chars[1] + t.chars[1] + t.chars[6];
  std::vector<long> m = decompose(t, sum);
  EXPECT_EQ(m[1], 2);
  EXPECT_EQ(m[6], 1);
}

TEST(RestrictInduce, FrobeniusReciprocity) {
  Subject s = load_subject("pair:T<O");
  std::vector<int> fuse = fuse_classes(*s.N, *s.G);
  for (const ClassFunction &chi : s.g_table.chars) {
    std::vector<CycloNum> res;
    for (int c : fuse)
      res.push_back(chi[c]);
    ClassFunction r(s.N, res);
    for (const ClassFunction &phi : s.n_table.chars) {
      // Induced character by the coset formula over all elements of G.
      std::vector<CycloNum> ind(s.G->class_count(), CycloNum(0));
      for (int c = 0; c < s.G->class_count(); ++c) {
        int x = s.G->classes()[c].representative;
        CycloNum acc(0);
        for (int g = 0; g < s.G->order(); ++g) {
          int y = s.G->multiply(s.G->multiply(s.G->inverse(g), x), g);
          if (auto k = s.N->index_of(s.G->element(y)))
            acc += phi.at_element(*k);
        }
        ind[c] = acc / CycloNum(s.N->order());
      }
      ClassFunction induced(s.G, ind);
      EXPECT_EQ(inner_product(induced, chi), inner_product(phi, r));
    }
  }
}

TEST(RestrictInduce, CountsMatchClassesMeetingN) {
  for (const std::string &name : catalog_pairs()) {
    Subject s = load_subject(name);
    EXPECT_EQ(s.restricted.size(), s.upsilon.size()) << name;
    EXPECT_EQ(s.induced.size(), s.upsilon.size()) << name;
    EXPECT_EQ(s.restricted.labels.front(), "Res X0");
    EXPECT_EQ(s.induced.labels.front(), "Ind X0");
  }
}

TEST(RestrictInduce, RejectsNonNormalSubgroups) {
  GroupPtr g = build_group(BinaryDihedralSpec {3});
  ModuleSet t = character_table(g);
  int y = *g->index_of(g->generators()[1]);
  GroupPtr h = subgroup(*g, "C4", {y}, 4);
  try {
    restrict_characters(t, h);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), Errc::kNotNormal);
  }
  GroupPtr other = build_group(CyclicSpec {5});
  try {
    restrict_characters(t, other);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), Errc::kNotASubgroup);
  }
}

}  // namespace
}  // namespace mckay
