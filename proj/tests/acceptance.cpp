//
// mckay-poincare - Copyright 2026 The mckay-poincare Authors.
// SPDX-License-Identifier: Apache-2.0
//

// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "mckay/suites.h"

namespace {

using namespace mckay;

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;  // 0 for no limit
  std::function<CheckReport()> run;
};

CheckReport over(const std::string &name,
                 const std::vector<std::string> &subjects,
                 CheckReport (*check)(const Subject &)) {
  CheckReport rep;
  rep.name = name;
  for (const std::string &s : subjects) {
    try {
      rep.merge(check(cached_subject(s)));
    } catch (const Error &e) {
      rep.expect(false, s + ": " + e.what());
    }
  }
  return rep;
}

std::vector<std::string> concat(std::vector<std::string> a,
                                const std::vector<std::string> &b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::string trivial_series(const std::string &name, int order) {
  const Subject &s = cached_subject(name);
  RatFun f = series_by_determinant(
                 s.dim(), subject_tensor_matrices(s, Side::kRestriction))
                 .series[0];
  return series_expand(f, order).to_string();
}

CheckReport golden() {
  CheckReport rep;
  rep.name = "golden";
  struct Case {
    const char *name;
    int order;
    const char *want;
  };
  const Case cases[] = {
      {"pair:T<O", 19,
       "1 + t^6 + t^8 + 2t^12 + t^14 + t^16 + 2t^18"},
      {"pair:D2<T", 19,
       "1 + 2t^4 + t^6 + 3t^8 + 2t^10 + 4t^12 + 3t^14 + 5t^16 + 4t^18"},
      {"pair:C2<D2", 19,
       "1 + 3t^2 + 5t^4 + 7t^6 + 9t^8 + 11t^10 + 13t^12 + 15t^14 + 17t^16 + "
       "19t^18"},
      {"group:O", 19, "1 + t^8 + t^12 + t^16 + t^18"},
      {"group:I", 21, "1 + t^12 + t^20"},
  };
  for (const Case &c : cases) {
    std::string got = trivial_series(c.name, c.order);
    rep.expect(got == c.want, std::string(c.name) + ": got " + got);
  }
  return rep;
}

CheckReport proportionality_small() {
  std::vector<std::string> names;
  for (const std::string &p : catalog_pairs()) {
    const Subject &s = cached_subject(p);
    bool fixed = s.pair.family == PairFamily::kTetrahedralInOctahedral ||
                 s.pair.family == PairFamily::kQuaternionInTetrahedral;
    if (fixed || s.pair.n <= 6)
      names.push_back(p);
  }
  return over("proportionality", names, check_proportionality);
}

CheckReport structure_suites() {
  CheckReport rep;
  rep.name = "structure";
  std::vector<std::string> all = all_subjects();
  rep.merge(over("orthogonality", all, check_orthogonality));
  rep.merge(over("transpose", all, check_transpose));
  rep.merge(over("eigen", all, check_eigen));
  return rep;
}

CheckReport tcheb_and_dihedral() {
  CheckReport rep = tcheb_identity_suite(24);
  rep.merge(check_dihedral_forms(8));
  return rep;
}

}  // namespace

int main() {
  std::vector<std::string> sl2 = sl2_subjects();
  std::vector<std::string> all = all_subjects();
  std::vector<std::string> groups = concat(catalog_groups(),
                                           catalog_sl3_groups());
  std::vector<Criterion> criteria {
      {1, "golden coefficients", 5, golden},
      {2, "table reproduction", 30,
       [&] { return over("tables", sl2, check_table_forms); }},
      {3, "four-way agreement", 60,
       [&] {
         return over("fourway", all,
                     [](const Subject &s) { return check_fourway(s, 64); });
       }},
      {4, "quantum Cartan determinants", 0,
       [&] { return over("cartan", sl2, check_cartan_det); }},
      {5, "structural identities", 0, structure_suites},
      {6, "exponent realization", 0,
       [&] { return over("exponents", all, check_exponents); }},
      {7, "proportionality", 0, proportionality_small},
      {8, "Tchebychev identities and dihedral forms", 0, tcheb_and_dihedral},
      {9, "dimension sum rule", 0,
       [&] {
         return over("dimsum", groups,
                     [](const Subject &s) { return check_dimension_sum(s, 40); });
       }},
  };
  int failed = 0;
  for (const Criterion &c : criteria) {
    auto start = std::chrono::steady_clock::now();
    CheckReport rep;
    try {
      rep = c.run();
    } catch (const Error &e) {
      rep.expect(false, e.what());
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    bool ok = rep.ok() && rep.checks > 0 &&
              (c.limit_seconds == 0 || secs < c.limit_seconds);
    for (const std::string &f : rep.failures)
      std::printf("  FAIL %s\n", f.c_str());
    for (const std::string &n : rep.notes)
      std::printf("  note: %s\n", n.c_str());
    std::printf("criterion %d: %s (%s; %ld checks, %zu failures, %.2f s",
                c.number, ok ? "PASS" : "FAIL", c.title.c_str(), rep.checks,
                rep.failures.size(), secs);
    if (c.limit_seconds > 0)
      std::printf(", limit %.0f s", c.limit_seconds);
    std::printf(")\n");
    if (!ok)
      ++failed;
  }
  return failed == 0 ? 0 : 1;
}
