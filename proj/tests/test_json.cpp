//
// mckay-poincare - Copyright 2026 The mckay-poincare Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <functional>

#include <gtest/gtest.h>

#include "mckay/json_io.h"
#include "mckay/suites.h"

namespace mckay {
namespace {

RatFun trivial(const Subject &s) {
  return series_by_determinant(
             s.dim(), subject_tensor_matrices(s, Side::kRestriction))
      .series[0];
}

void expect_invalid(const std::function<void()> &f) {
  try {
    f();
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), Errc::kInvalidArgument);
  }
}

TEST(Json, CycloRoundTrip) {
  std::vector<CycloNum> xs {
      CycloNum(0), CycloNum(Rat(-7, 3)), CycloNum::root_of_unity(5, 2),
      CycloNum::root_of_unity(8, 1) + CycloNum::root_of_unity(8, -1),
      CycloNum::root_of_unity(12, 5) * CycloNum(Rat(2, 9))};
  for (const CycloNum &x : xs)
    EXPECT_EQ(cyclo_from_json(cyclo_to_json(x)), x) << x.to_string();
}

TEST(Json, PolyAndRatFunRoundTrip) {
  IntPoly big = IntPoly::monomial(Integer("123456789012345678901234567890"), 3) +
                IntPoly {-1};
  EXPECT_EQ(poly_from_json(poly_to_json(big)), big);
  EXPECT_EQ(poly_to_json(IntPoly {1, -2}).dump(), "[\"1\",\"-2\"]");
  RatFun f = trivial(cached_subject("pair:T<O"));
  EXPECT_EQ(ratfun_from_json(ratfun_to_json(f)), f);
  CycloMatrix g = cached_subject("group:I").G->generators()[0];
  EXPECT_EQ(matrix_from_json(matrix_to_json(g)), g);
}

TEST(Json, MalformedInputRejected) {
  expect_invalid([] { poly_from_json(Json::parse("[\"1\", \"x\"]")); });
  expect_invalid([] { poly_from_json(Json::parse("{\"a\": 1}")); });
  expect_invalid([] { ratfun_from_json(Json::parse("{\"num\": [\"1\"]}")); });
  expect_invalid(
      [] { cyclo_from_json(Json::parse("{\"conductor\": \"five\"}")); });
  expect_invalid([] { subject_from_json(Json::parse("{}")); });
  expect_invalid([] {
    Json j = subject_to_json(cached_subject("group:C3"));
    j["G"]["order"] = "3";
    subject_from_json(j);
  });
}

TEST(Json, GeneratorsMustMatchStoredOrder) {
  Json j = subject_to_json(cached_subject("group:C3"));
  j["G"]["generators"] = Json::array();
  try {
    subject_from_json(j);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), Errc::kBadGenerators);
  }
}

TEST(Json, SubjectRoundTrip) {
  for (const char *name : {"group:C1", "group:D3", "group:I",
                           "group:SL3C7-1-2-4", "pair:C2<D2", "pair:T<O",
                           "pair:D3<D6"}) {
    const Subject &s = cached_subject(name);
    Json j = subject_to_json(s);
    EXPECT_EQ(j["schema"], "mckay-subject/1");
    EXPECT_EQ(j["name"], name);
    Subject back = subject_from_json(j);
    EXPECT_EQ(canonical_json(back), canonical_json(s)) << name;
    EXPECT_EQ(back.name, s.name);
    EXPECT_EQ(back.g_table.labels, s.g_table.labels);
  }
}

TEST(Json, DumpCarriesSeries) {
  Json j = subject_to_json(cached_subject("pair:D2<T"));
  ASSERT_EQ(j["sides"].size(), 2u);
  EXPECT_EQ(j["sides"][0]["side"], "rest");
  EXPECT_EQ(j["sides"][1]["affine_type"], "G2^(1)");
  EXPECT_EQ(j["sides"][0]["series"][0]["label"], "Res X0");
  EXPECT_EQ(j["index"], 3);
}

}  // namespace
}  // namespace mckay
