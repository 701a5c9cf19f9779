//
// mckay-poincare - Copyright 2026 The mckay-poincare Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "mckay/suites.h"

#include "mckay/json_io.h"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace mckay {

const Subject &cached_subject(const std::string &name) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<Subject>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(name);
  if (it == cache.end())
    it = cache.emplace(name, std::make_unique<Subject>(load_subject(name)))
             .first;
  return *it->second;
}

std::vector<std::string> sl2_subjects() {
  std::vector<std::string> out = catalog_groups();
  for (const std::string &p : catalog_pairs())
    out.push_back(p);
  return out;
}

std::vector<std::string> all_subjects() {
  std::vector<std::string> out = catalog_groups();
  for (const std::string &g : catalog_sl3_groups())
    out.push_back(g);
  for (const std::string &p : catalog_pairs())
    out.push_back(p);
  return out;
}

namespace {

std::vector<Side> sides_of(const Subject &s) {
  if (s.is_pair)
    return {Side::kRestriction, Side::kInduction};
  return {Side::kRestriction};
}

std::string where(const Subject &s, Side side) {
  return s.is_pair ? side_name(side) + ": " : std::string();
}

AffineType expected_type(const Subject &s, Side side) {
  if (s.is_pair)
    return expected_pair_type(s.pair, side);
  return expected_group_type(parse_group_name(s.G->name()));
}

void check_table(CheckReport &rep, const ModuleSet &t) {
  const MatrixGroup &h = *t.group;
  const std::string &g = h.name();
  std::size_t k = t.size();
  rep.expect(static_cast<int>(k) == h.class_count(),
             g + ": number of irreducibles differs from number of classes");
  long sum = 0;
  for (int d : t.degrees)
    sum += static_cast<long>(d) * d;
  rep.expect(sum == h.order(), g + ": sum of squared degrees is " +
                                   std::to_string(sum) + ", order " +
                                   std::to_string(h.order()));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j)
      rep.expect(inner_product(t.chars[i], t.chars[j]) ==
                     CycloNum(i == j ? 1 : 0),
                 g + ": rows " + t.labels[i] + ", " + t.labels[j] +
                     " not orthonormal");
  for (int a = 0; a < h.class_count(); ++a)
    for (int b = a; b < h.class_count(); ++b) {
      CycloNum sum_ab(0);
      for (const ClassFunction &chi : t.chars)
        sum_ab += chi[a] * chi[b].conj();
      long centralizer =
          h.order() / static_cast<long>(h.classes()[a].members.size());
      rep.expect(sum_ab == CycloNum(a == b ? centralizer : 0),
                 g + ": columns " + std::to_string(a) + ", " +
                     std::to_string(b) + " not orthogonal");
    }
}

bool multiset_equal(std::vector<CycloNum> a, std::vector<CycloNum> b) {
  if (a.size() != b.size())
    return false;
  for (const CycloNum &x : a) {
    auto it = std::find(b.begin(), b.end(), x);
    if (it == b.end())
      return false;
    b.erase(it);
  }
  return true;
}

}  // namespace

CheckReport check_orthogonality(const Subject &s) {
  CheckReport rep;
  rep.name = s.name;
  check_table(rep, s.g_table);
  if (!s.is_pair) {
    rep.expect(s.upsilon.size() == s.g_table.size(),
               "class count differs from module count");
    return rep;
  }
  check_table(rep, s.n_table);
  rep.expect(s.restricted.size() == s.upsilon.size(),
             "restricted modules: " + std::to_string(s.restricted.size()) +
                 ", classes meeting N: " + std::to_string(s.upsilon.size()));
  rep.expect(s.induced.size() == s.upsilon.size(),
             "induced modules: " + std::to_string(s.induced.size()) +
                 ", classes meeting N: " + std::to_string(s.upsilon.size()));
  for (const ClassFunction &chi : s.restricted.chars) {
    bool ok = true;
    try {
      decompose(s.n_table, chi);
    } catch (const Error &) {
      ok = false;
    }
    rep.expect(ok, "restricted module is not a character of N");
  }
  for (const ClassFunction &chi : s.induced.chars) {
    bool ok = true;
    try {
      decompose(s.g_table, chi);
    } catch (const Error &) {
      ok = false;
    }
    rep.expect(ok, "induced module is not a character of G");
  }
  return rep;
}

CheckReport check_eigen(const Subject &s) {
  CheckReport rep;
  rep.name = s.name;
  for (Side side : sides_of(s))
    for (int r = 1; r < s.dim(); ++r) {
      CheckReport sub = verify_eigen_structure(s, side, r);
      sub.name.clear();
      rep.merge(sub);
    }
  return rep;
}

CheckReport check_transpose(const Subject &s) {
  CheckReport rep = verify_transpose_symmetry(s);
  rep.name = s.name;
  return rep;
}

CheckReport check_fourway(const Subject &s, int order) {
  CheckReport rep;
  rep.name = s.name;
  int n = s.dim();
  IntPoly by_chars = denominator_by_characters(natural_character(s.G),
                                               s.upsilon);
  for (Side side : sides_of(s)) {
    std::string w = where(s, side);
    std::vector<TensorMatrix> mats = subject_tensor_matrices(s, side);
    SeriesBundle det = series_by_determinant(n, mats);
    SeriesBundle mol = molien_bundle(s, side);
    rep.expect(det.labels == mol.labels, w + "label lists differ");
    for (std::size_t i = 0; i < det.series.size(); ++i) {
      rep.expect(det.series[i] == mol.series[i],
                 w + det.labels[i] + ": determinant " +
                     det.series[i].to_string() + " vs Molien " +
                     mol.series[i].to_string());
      rep.expect(series_expand(det.series[i], order).nonnegative_integral(),
                 w + det.labels[i] + ": negative or fractional coefficient");
    }
    IntPoly det_p = polymat_det(poincare_matrix(n, mats));
    rep.expect(det_p == by_chars, w + "det(P) " + det_p.to_string() +
                                      " vs character product " +
                                      by_chars.to_string());
    if (n != 2) {
      rep.notes.push_back(w + "no closed forms in dimension " +
                          std::to_string(n));
      continue;
    }
    AffineType type = classify_affine_type(mats[0]).type;
    RatFun closed = closed_form_invariants(type);
    rep.expect(closed == det.series[0],
               w + type.tag() + " closed form " + closed.to_string() +
                   " vs " + det.series[0].to_string());
    IntPoly cartan = closed_form_cartan_det(type);
    rep.expect(cartan == det_p, w + type.tag() + " closed determinant " +
                                    cartan.to_string() + " vs " +
                                    det_p.to_string());
    ExponentData aff = affine_exponents(type);
    if (!aff.available) {
      rep.notes.push_back(w + aff.note);
      continue;
    }
    IntPoly ep = exponent_product(aff.exponents, aff.h);
    rep.expect(ep == det_p, w + type.tag() + " exponent product " +
                                ep.to_string() + " vs " + det_p.to_string());
    if (auto q = exponent_quotient(type))
      rep.expect(*q == det.series[0], w + type.tag() + " exponent quotient " +
                                          q->to_string() + " vs " +
                                          det.series[0].to_string());
  }
  return rep;
}

CheckReport check_table_forms(const Subject &s) {
  CheckReport rep;
  rep.name = s.name;
  if (s.dim() != 2) {
    rep.notes.push_back("no affine type in dimension " +
                        std::to_string(s.dim()));
    return rep;
  }
  for (Side side : sides_of(s)) {
    std::string w = where(s, side);
    const ModuleSet &mods = side_modules(s, side);
    ClassFunction chi = side_multiplier(s, side, 1);
    TensorMatrix m = tensor_matrix(mods, chi, 1);
    rep.expect(m.entries == tensor_matrix_elementwise(mods, chi, 1).entries,
               w + "element-wise tensor matrix differs");
    Classification c = classify_affine_type(m);
    AffineType want = expected_type(s, side);
    rep.expect(c.type == want, w + "classified as " + c.type.tag() +
                                   ", expected " + want.tag());
    // The null vector is primitive; induced degrees share the index.
    bool proportional = c.dual_marks.size() == m.degrees.size();
    for (std::size_t i = 0; proportional && i < m.degrees.size(); ++i)
      proportional = c.dual_marks[i] * m.degrees[0] ==
                     c.dual_marks[0] * m.degrees[i];
    rep.expect(proportional, w + "degree vector is not a left null vector");
    DegreeData d = degree_data(c.type);
    rep.expect(d.h == d.a + d.b - 2, w + c.type.tag() + ": h != a + b - 2");
    rep.expect(d.a * d.b == 2 * s.N->order(),
               w + c.type.tag() + ": ab != 2|N|");
    RatFun det = series_by_determinant(2, {m}).series[0];
    RatFun closed = closed_form_invariants(c.type);
    rep.expect(det == closed, w + c.type.tag() + ": " + det.to_string() +
                                  " vs " + closed.to_string());
  }
  return rep;
}

CheckReport check_cartan_det(const Subject &s) {
  CheckReport rep;
  rep.name = s.name;
  if (s.dim() != 2) {
    rep.notes.push_back("no affine type in dimension " +
                        std::to_string(s.dim()));
    return rep;
  }
  for (Side side : sides_of(s)) {
    std::string w = where(s, side);
    TensorMatrix m = subject_tensor_matrix(s, side, 1);
    AffineType type = classify_affine_type(m).type;
    PolyMatrix q = quantum_cartan(m.entries);
    IntPoly det = polymat_det(q);
    rep.expect(det == polymat_det_cofactor(q),
               w + "Bareiss and cofactor determinants differ");
    IntPoly closed = closed_form_cartan_det(type);
    rep.expect(det == closed, w + type.tag() + ": " + det.to_string() +
                                  " vs " + closed.to_string());
  }
  return rep;
}

CheckReport check_exponents(const Subject &s) {
  CheckReport rep;
  rep.name = s.name;
  if (s.dim() != 2) {
    rep.notes.push_back("no exponent data in dimension " +
                        std::to_string(s.dim()));
    return rep;
  }
  AffineType type = expected_type(s, Side::kRestriction);
  ExponentData aff = affine_exponents(type);
  if (!aff.available) {
    rep.notes.push_back("annotated: " + aff.note);
    return rep;
  }
  ClassFunction chi = natural_character(s.G);
  std::vector<CycloNum> values, expected;
  for (int c : s.upsilon)
    values.push_back(chi[c]);
  for (int m : aff.exponents)
    expected.push_back(CycloNum::root_of_unity(2 * aff.h, m) +
                       CycloNum::root_of_unity(2 * aff.h, -m));
  rep.expect(multiset_equal(values, expected),
             type.tag() + ": character values differ from 2cos(m pi/h)");
  return rep;
}

CheckReport check_dimension_sum(const Subject &s, int max_k) {
  CheckReport rep;
  rep.name = s.name;
  int n = s.dim();
  SeriesBundle b =
      series_by_determinant(n, subject_tensor_matrices(s, Side::kRestriction));
  const std::vector<int> &deg = s.restricted.degrees;
  std::vector<Series> ex;
  for (const RatFun &f : b.series)
    ex.push_back(series_expand(f, max_k + 1));
  for (int k = 0; k <= max_k; ++k) {
    Rat sum = 0;
    for (std::size_t i = 0; i < ex.size(); ++i)
      sum += Rat(deg[i]) * ex[i][k];
    // dim S^k of an n-dimensional space
    Integer want;
    mpz_bin_uiui(want.get_mpz_t(), k + n - 1, n - 1);
    rep.expect(sum == Rat(want), "k=" + std::to_string(k) + ": " +
                                     sum.get_str() + " vs " + want.get_str());
  }
  return rep;
}

CheckReport check_proportionality(const Subject &s) {
  CheckReport rep;
  rep.name = s.name;
  try {
    ProportionalityResult r = proportionality_check(s);
    r.report.name.clear();
    rep.merge(r.report);
  } catch (const Error &e) {
    rep.failures.push_back(e.what());
  }
  return rep;
}

CheckReport check_json_roundtrip(const Subject &s) {
  CheckReport rep;
  rep.name = s.name;
  std::string text = canonical_json(s);
  Subject back = subject_from_json(Json::parse(text));
  rep.expect(back.name == s.name, "reloaded name " + back.name);
  rep.expect(canonical_json(back) == text, "canonical JSON changed on reload");
  return rep;
}

CheckReport check_dihedral_forms(int max_n) {
  CheckReport rep;
  rep.name = "dihedral";
  struct Case {
    DihedralForm form;
    std::string subject;
  };
  for (int n = 3; n <= max_n; ++n) {
    std::string ns = std::to_string(n);
    std::vector<Case> cases {
        {DihedralForm::kDihedralInDihedral,
         "pair:" + pair_name({PairFamily::kDihedralInDihedral, n})},
        {DihedralForm::kCyclicInDihedral,
         "pair:" + pair_name({PairFamily::kCyclicInDihedral, n})},
        {DihedralForm::kCyclicInDoubleDihedral,
         "pair:" + pair_name({PairFamily::kCyclicInDoubleDihedral, n})},
        {DihedralForm::kCyclicGroup, "group:C" + ns},
        {DihedralForm::kBinaryDihedralGroup, "group:D" + ns},
    };
    for (const Case &c : cases) {
      const Subject &s = cached_subject(c.subject);
      RatFun closed = dihedral_closed_form(c.form, n);
      for (Side side : sides_of(s)) {
        RatFun det = series_by_determinant(
                         2, subject_tensor_matrices(s, side))
                         .series[0];
        rep.expect(det == closed, c.subject + " " + where(s, side) +
                                      det.to_string() + " vs " +
                                      closed.to_string());
      }
    }
  }
  return rep;
}

std::vector<std::string> suite_names() {
  return {"orthogonality", "eigen",  "transpose", "fourway",
          "proportionality", "tcheb", "tables",   "exponents",
          "dimsum",         "dihedral", "roundtrip"};
}

namespace {

CheckReport over(const std::string &name,
                 const std::vector<std::string> &subjects,
                 CheckReport (*check)(const Subject &)) {
  CheckReport rep;
  rep.name = name;
  for (const std::string &s : subjects) {
    CheckReport sub;
    try {
      sub = check(cached_subject(s));
    } catch (const Error &e) {
      sub.name = s;
      sub.failures.push_back(e.what());
    }
    rep.merge(sub);
  }
  return rep;
}

CheckReport fourway64(const Subject &s) {
  return check_fourway(s);
}

CheckReport dimsum40(const Subject &s) {
  return check_dimension_sum(s);
}

CheckReport table_suite(const Subject &s) {
  CheckReport rep = check_table_forms(s);
  CheckReport det = check_cartan_det(s);
  det.name.clear();
  rep.merge(det);
  return rep;
}

}  // namespace

CheckReport run_suite(std::string_view name) {
  std::vector<std::string> groups = catalog_groups();
  for (const std::string &g : catalog_sl3_groups())
    groups.push_back(g);
  if (name == "orthogonality")
    return over("orthogonality", all_subjects(), &check_orthogonality);
  if (name == "eigen")
    return over("eigen", all_subjects(), &check_eigen);
  if (name == "transpose")
    return over("transpose", all_subjects(), &check_transpose);
  if (name == "fourway")
    return over("fourway", all_subjects(), &fourway64);
  if (name == "proportionality")
    return over("proportionality", catalog_pairs(), &check_proportionality);
  if (name == "tcheb")
    return tcheb_identity_suite();
  if (name == "tables")
    return over("tables", sl2_subjects(), &table_suite);
  if (name == "exponents")
    return over("exponents", sl2_subjects(), &check_exponents);
  if (name == "dimsum")
    return over("dimsum", groups, &dimsum40);
  if (name == "dihedral")
    return check_dihedral_forms();
  if (name == "roundtrip")
    return over("roundtrip", all_subjects(), &check_json_roundtrip);
  std::string list;
  for (const std::string &s : suite_names())
    list += " " + s;
  throw Error(Errc::kUnknownName,
              "unknown suite '" + std::string(name) + "'; known:" + list);
}

}  // namespace mckay
