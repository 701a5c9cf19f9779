//
// mckay-poincare - Copyright 2026 The mckay-poincare Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "mckay/poincare.h"

#include <algorithm>
#include <functional>
#include <optional>

namespace mckay {

std::string method_name(Method m) {
  switch (m) {
  case Method::kDeterminant:
    return "det";
  case Method::kMolien:
    return "molien";
  case Method::kClosedForm:
    return "closed";
  case Method::kExponentProduct:
    return "exponent";
  }
  return "?";
}

PolyMatrix poincare_matrix(int n, const std::vector<TensorMatrix> &mats) {
  if (n < 2)
    throw Error(Errc::kInvalidArgument, "dimension must be at least 2");
  if (static_cast<int>(mats.size()) != n - 1)
    throw Error(Errc::kSizeMismatch, "expected " + std::to_string(n - 1) +
                                         " tensor matrices, got " +
                                         std::to_string(mats.size()));
  std::size_t k = mats.front().size();
  for (const TensorMatrix &m : mats)
    if (m.size() != k)
      throw Error(Errc::kSizeMismatch, "tensor matrices differ in size");
  std::vector<std::vector<IntPoly>> p(k, std::vector<IntPoly>(k));
  IntPoly diag = IntPoly {1} + IntPoly::monomial(n % 2 == 0 ? 1 : -1, n);
  for (std::size_t i = 0; i < k; ++i)
    p[i][i] = diag;
  for (int r = 1; r < n; ++r) {
    const TensorMatrix &x = mats[n - r - 1];  // X_{n-r}
    Integer sign = r % 2 == 0 ? 1 : -1;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (x.entries[i][j] != 0)
          p[i][j] += IntPoly::monomial(sign * x.entries[i][j], r);
  }
  return PolyMatrix(std::move(p), mats.front().labels);
}

SeriesBundle series_by_determinant(int n,
                                   const std::vector<TensorMatrix> &mats) {
  PolyMatrix p = poincare_matrix(n, mats);
  IntPoly det = polymat_det(p);
  SeriesBundle out;
  out.method = Method::kDeterminant;
  out.labels = p.labels();
  for (std::size_t i = 0; i < p.size(); ++i)
    out.series.push_back(RatFun::normalize(cramer_replace_det(p, i), det));
  return out;
}

CycloPoly char_poly_reversed(const CycloMatrix &g) {
  // det(I - t g) by Laplace expansion over entries of degree <= 1.
  int n = g.n;
  std::vector<CycloPoly> a;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a.emplace_back(std::vector<CycloNum> {CycloNum(i == j ? 1 : 0),
                                            -g(i, j)});
  std::function<CycloPoly(const std::vector<CycloPoly> &, int)> det =
      [&](const std::vector<CycloPoly> &m, int k) -> CycloPoly {
    if (k == 1)
      return m[0];
    CycloPoly acc;
    for (int col = 0; col < k; ++col) {
      if (m[col].degree() < 0)
        continue;
      std::vector<CycloPoly> minor;
      for (int i = 1; i < k; ++i)
        for (int j = 0; j < k; ++j)
          if (j != col)
            minor.push_back(m[i * k + j]);
      CycloPoly term = m[col] * det(minor, k - 1);
      if (col % 2 == 1)
        term *= CycloNum(-1);
      acc += term;
    }
    return acc;
  };
  return det(a, n);
}

namespace {

IntPoly to_int_poly(const CycloPoly &p, const char *what) {
  std::vector<Integer> v;
  for (const CycloNum &c : p.coeffs()) {
    if (!c.is_integer())
      throw Error(Errc::kNonIntegral,
                  std::string(what) + " has coefficient " + c.to_string());
    v.push_back(c.integer_value());
  }
  return IntPoly(std::move(v));
}

// Shared per-group data for Molien sums: distinct det(I - t g) factors and
// the products of all but one of them.
class MolienEngine {
 public:
  explicit MolienEngine(const GroupPtr &h): h_(h) {
    for (const ConjugacyClass &c : h->classes()) {
      CycloPoly d = char_poly_reversed(h->element(c.representative));
      auto it = std::find(factors_.begin(), factors_.end(), d);
      class_factor_.push_back(static_cast<int>(it - factors_.begin()));
      if (it == factors_.end())
        factors_.push_back(std::move(d));
    }
    std::size_t s = factors_.size();
    std::vector<CycloPoly> prefix(s + 1), suffix(s + 1);
    prefix[0] = CycloPoly({CycloNum(1)});
    suffix[s] = CycloPoly({CycloNum(1)});
    for (std::size_t i = 0; i < s; ++i)
      prefix[i + 1] = prefix[i] * factors_[i];
    for (std::size_t i = s; i-- > 0;)
      suffix[i] = suffix[i + 1] * factors_[i];
    for (std::size_t i = 0; i < s; ++i)
      others_.push_back(prefix[i] * suffix[i + 1]);
    denominator_ = to_int_poly(prefix[s], "Molien denominator");
  }

  RatFun series(const ClassFunction &target) const {
    std::vector<CycloNum> weight(factors_.size(), CycloNum(0));
    for (int c = 0; c < h_->class_count(); ++c) {
      long size = static_cast<long>(h_->classes()[c].members.size());
      weight[class_factor_[c]] += CycloNum(size) * target[c].conj();
    }
    CycloPoly num;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (weight[i].is_zero())
        continue;
      CycloPoly term = others_[i];
      term *= weight[i];
      num += term;
    }
    for (const CycloNum &c : num.coeffs())
      if (!c.is_rational())
        throw Error(Errc::kNonIntegral,
                    "Molien numerator has coefficient " + c.to_string());
    Integer scale;
    IntPoly n = IntPoly::from_rationals(num.rational_coeffs(), &scale);
    return RatFun::normalize(
        n, denominator_ * (scale * Integer(h_->order())));
  }

 private:
  GroupPtr h_;
  std::vector<CycloPoly> factors_;
  std::vector<int> class_factor_;
  std::vector<CycloPoly> others_;
  IntPoly denominator_;
};

}  // namespace

MolienResult molien_series(const ModuleSet &table, const ClassFunction &target,
                           int order) {
  decompose(table, target);
  MolienEngine engine(table.group);
  MolienResult r;
  r.ratfun = engine.series(target);
  r.series = series_expand(r.ratfun, order);
  return r;
}

SeriesBundle molien_bundle(const Subject &s, Side side) {
  const ModuleSet &mods = side_modules(s, side);
  const ModuleSet &table =
      (!s.is_pair || side == Side::kRestriction) ? s.n_table : s.g_table;
  MolienEngine engine(mods.group);
  SeriesBundle out;
  out.method = Method::kMolien;
  out.labels = mods.labels;
  for (const ClassFunction &chi : mods.chars) {
    decompose(table, chi);
    out.series.push_back(engine.series(chi));
  }
  return out;
}

IntPoly denominator_by_characters(const ClassFunction &natural,
                                  const std::vector<int> &classes) {
  int n = natural.group().dim();
  std::vector<ClassFunction> ext;
  for (int r = 0; r <= n; ++r)
    ext.push_back(exterior_power_character(natural, r));
  CycloPoly prod({CycloNum(1)});
  for (int c : classes) {
    std::vector<CycloNum> f(n + 1);
    f[0] = CycloNum(1);
    for (int r = 1; r < n; ++r)
      f[r] = r % 2 == 0 ? ext[n - r][c] : -ext[n - r][c];
    f[n] = CycloNum(n % 2 == 0 ? 1 : -1);
    prod = prod * CycloPoly(std::move(f));
  }
  return to_int_poly(prod, "character-product denominator");
}

PolyMatrix quantum_cartan(const IntMatrix &m) {
  std::size_t k = m.size();
  std::vector<std::vector<IntPoly>> p(k, std::vector<IntPoly>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      IntPoly e = IntPoly::monomial(-m[i][j], 1);
      if (i == j)
        e += IntPoly {1, 0, 1};
      p[i][j] = e;
    }
  return PolyMatrix(std::move(p), {});
}

IntPoly exponent_product(const std::vector<int> &exponents, int h) {
  if (h <= 0)
    throw Error(Errc::kInvalidArgument, "Coxeter number must be positive");
  CycloPoly prod({CycloNum(1)});
  for (int m : exponents) {
    CycloNum two_cos = CycloNum::root_of_unity(2 * h, m) +
                       CycloNum::root_of_unity(2 * h, -m);
    prod = prod * CycloPoly({CycloNum(1), -two_cos, CycloNum(1)});
  }
  return to_int_poly(prod, "exponent product");
}

RatFun closed_form_invariants(const AffineType &t) {
  DegreeData d = degree_data(t);
  IntPoly num = IntPoly {1} + IntPoly::monomial(1, d.h);
  IntPoly den = (IntPoly {1} - IntPoly::monomial(1, d.a)) *
                (IntPoly {1} - IntPoly::monomial(1, d.b));
  return RatFun::normalize(num, den);
}

IntPoly closed_form_cartan_det(const AffineType &t) {
  DegreeData d = degree_data(t);
  auto f = [](int e) { return IntPoly {1} - IntPoly::monomial(1, e); };
  return divexact(f(d.p2) * f(d.q2) * f(d.r2), f(2));
}

std::optional<RatFun> exponent_quotient(const AffineType &t) {
  ExponentData aff = affine_exponents(t);
  ExponentData fin = finite_exponents(t);
  if (!aff.available || !fin.available)
    return std::nullopt;
  return RatFun::normalize(exponent_product(fin.exponents, fin.h),
                           exponent_product(aff.exponents, aff.h));
}

std::vector<Rat> root_length_ratios(const IntMatrix &cartan) {
  std::size_t k = cartan.size();
  std::vector<Rat> d(k, 0);
  std::vector<char> seen(k, 0);
  std::vector<std::size_t> queue {0};
  d[0] = 1;
  seen[0] = 1;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    std::size_t i = queue[q];
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i || cartan[i][j] == 0 || seen[j])
        continue;
      // d_i a_ij = d_j a_ji
      Rat q(Integer(cartan[i][j]), Integer(cartan[j][i]));
      q.canonicalize();
      d[j] = d[i] * q;
      seen[j] = 1;
      queue.push_back(j);
    }
  }
  Rat mx = *std::max_element(d.begin(), d.end());
  for (Rat &x : d)
    x /= mx;
  return d;
}

ProportionalityResult proportionality_check(const Subject &s) {
  if (!s.is_pair)
    throw Error(Errc::kInvalidArgument, "proportionality needs a pair");
  ProportionalityResult out;
  out.report.name = s.name;
  TensorMatrix mr = subject_tensor_matrix(s, Side::kRestriction, 1);
  TensorMatrix mi = subject_tensor_matrix(s, Side::kInduction, 1);
  SeriesBundle rest = series_by_determinant(2, {mr});
  SeriesBundle ind = series_by_determinant(2, {mi});
  std::size_t k = rest.series.size();
  if (ind.series.size() != k)
    throw Error(Errc::kNoMatching, "module counts differ between sides");
  Classification ci = classify_affine_type(mi);
  std::vector<Rat> len = root_length_ratios(ci.cartan);
  bool special = s.pair.family == PairFamily::kCyclicInDoubleDihedral;
  Rat index(s.index());
  std::vector<Rat> expected(k);
  for (std::size_t j = 0; j < k; ++j) {
    if (special)
      expected[j] = j == 0 ? Rat(1) : Rat(2);
    else
      expected[j] = len[j] == 1 ? Rat(1) : index;
  }
  // candidate[i]: induction modules j with rest_i = expected_j * ind_j
  std::vector<std::vector<std::size_t>> candidate(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      IntPoly scaled = ind.series[j].num();
      scaled *= expected[j].get_num();
      IntPoly den = ind.series[j].den();
      den *= expected[j].get_den();
      if (RatFun::normalize(scaled, den) == rest.series[i])
        candidate[i].push_back(j);
    }
  std::vector<int> p(k, -1);
  std::vector<char> used(k, 0);
  std::function<bool(std::size_t)> extend = [&](std::size_t i) {
    if (i == k)
      return true;
    for (std::size_t j : candidate[i]) {
      if (used[j])
        continue;
      used[j] = 1;
      p[i] = static_cast<int>(j);
      if (extend(i + 1))
        return true;
      used[j] = 0;
    }
    return false;
  };
  if (!extend(0))
    throw Error(Errc::kNoMatching,
                s.name + ": no bijection between restricted and induced "
                         "series with the expected ratios");
  out.bijection = p;
  for (std::size_t i = 0; i < k; ++i) {
    out.ratios.push_back(expected[p[i]]);
    out.report.expect(true, "");
    out.report.notes.push_back(rest.labels[i] + " -> " + ind.labels[p[i]] +
                               " ratio " + expected[p[i]].get_str());
  }
  out.report.expect(p[0] == 0 && rest.series[0] == ind.series[0],
                    "trivial series differ between the two sides");
  return out;
}

}  // namespace mckay
