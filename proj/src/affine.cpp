//
// mckay-poincare - Copyright 2026 The mckay-poincare Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <algorithm>
#include <charconv>
#include <numeric>

#include "mckay/mckay.h"

namespace mckay {

std::string AffineType::tag() const {
  return std::string(1, letter) + std::to_string(rank) + "^(" +
         std::to_string(twist) + ")";
}

namespace {

// The l of Kac's parameterization: X_l^(1), A_{2l}^(2), A_{2l-1}^(2),
// D_{l+1}^(2).
int ell(const AffineType &t) {
  if (t.twist == 2 && t.letter == 'A')
    return t.rank % 2 == 0 ? t.rank / 2 : (t.rank + 1) / 2;
  if (t.twist == 2 && t.letter == 'D')
    return t.rank - 1;
  return t.rank;
}

bool is(const AffineType &t, char letter, int twist) {
  return t.letter == letter && t.twist == twist;
}

}  // namespace

int AffineType::vertex_count() const {
  if (twist == 1)
    return rank + 1;
  if (letter == 'E')
    return 5;
  if (twist == 3)
    return 3;
  return ell(*this) + 1;
}

std::optional<AffineType> parse_affine_tag(std::string_view tag) {
  if (tag.size() < 6)
    return std::nullopt;
  AffineType t;
  t.letter = tag[0];
  auto hat = tag.find("^(");
  if (hat == std::string_view::npos || tag.back() != ')')
    return std::nullopt;
  auto r1 = std::from_chars(tag.data() + 1, tag.data() + hat, t.rank);
  auto r2 = std::from_chars(tag.data() + hat + 2, tag.data() + tag.size() - 1,
                            t.twist);
  if (r1.ec != std::errc() || r2.ec != std::errc())
    return std::nullopt;
  for (const AffineType &c : affine_types_with_vertices(t.vertex_count()))
    if (c == t)
      return t;
  return std::nullopt;
}

std::vector<AffineType> affine_types_with_vertices(int k) {
  std::vector<AffineType> out;
  int l = k - 1;
  if (l >= 1)
    out.push_back({'A', l, 1});
  if (l >= 3)
    out.push_back({'B', l, 1});
  if (l >= 2)
    out.push_back({'C', l, 1});
  if (l >= 4)
    out.push_back({'D', l, 1});
  if (k == 7)
    out.push_back({'E', 6, 1});
  if (k == 8)
    out.push_back({'E', 7, 1});
  if (k == 9)
    out.push_back({'E', 8, 1});
  if (k == 5)
    out.push_back({'F', 4, 1});
  if (k == 3)
    out.push_back({'G', 2, 1});
  if (l >= 1)
    out.push_back({'A', 2 * l, 2});
  if (l >= 3)
    out.push_back({'A', 2 * l - 1, 2});
  if (l >= 2)
    out.push_back({'D', l + 1, 2});
  if (k == 5)
    out.push_back({'E', 6, 2});
  if (k == 3)
    out.push_back({'D', 4, 3});
  return out;
}

namespace {

struct Builder {
  IntMatrix c;
  explicit Builder(int k): c(k, std::vector<long>(k, 0)) {
    for (int i = 0; i < k; ++i)
      c[i][i] = 2;
  }
  void bond(int i, int j, long aij = -1, long aji = -1) {
    c[i][j] = aij;
    c[j][i] = aji;
  }
  void chain(int from, int to) {
    for (int i = from; i < to; ++i)
      bond(i, i + 1);
  }
};

// Three arms of the given lengths joined at a center; vertex 0 ends the
// first arm.
IntMatrix star(int a0, int a1, int a2) {
  int k = 1 + a0 + a1 + a2;
  Builder b(k);
  b.chain(0, a0);  // 0 .. a0, the center is a0
  int center = a0, next = a0 + 1;
  for (int len : {a1, a2}) {
    int prev = center;
    for (int i = 0; i < len; ++i, ++next) {
      b.bond(prev, next);
      prev = next;
    }
  }
  return b.c;
}

}  // namespace

IntMatrix cartan_template(const AffineType &t) {
  int l = ell(t);
  if (is(t, 'A', 1)) {
    Builder b(l + 1);
    if (l == 1) {
      b.bond(0, 1, -2, -2);
    } else {
      b.chain(0, l);
      b.bond(l, 0);
    }
    return b.c;
  }
  if (is(t, 'B', 1)) {
    Builder b(l + 1);
    b.bond(0, 2);
    b.chain(1, l);
    b.bond(l - 1, l, -1, -2);
    return b.c;
  }
  if (is(t, 'C', 1)) {
    Builder b(l + 1);
    b.chain(0, l);
    b.bond(0, 1, -1, -2);
    b.bond(l - 1, l, -2, -1);
    return b.c;
  }
  if (is(t, 'D', 1)) {
    Builder b(l + 1);
    b.bond(0, 2);
    b.chain(1, l - 1);
    b.bond(l - 2, l);
    return b.c;
  }
  if (is(t, 'E', 1)) {
    if (t.rank == 6)
      return star(2, 2, 2);
    if (t.rank == 7)
      return star(3, 3, 1);
    return star(5, 2, 1);
  }
  if (is(t, 'F', 1)) {
    Builder b(5);
    b.chain(0, 4);
    b.bond(2, 3, -1, -2);
    return b.c;
  }
  if (is(t, 'G', 1)) {
    Builder b(3);
    b.chain(0, 2);
    b.bond(1, 2, -1, -3);
    return b.c;
  }
  if (is(t, 'A', 2) && t.rank % 2 == 0) {
    Builder b(l + 1);
    if (l == 1) {
      b.bond(0, 1, -4, -1);
      return b.c;
    }
    b.chain(0, l);
    b.bond(0, 1, -2, -1);
    b.bond(l - 1, l, -2, -1);
    return b.c;
  }
  if (is(t, 'A', 2))
    return transpose(cartan_template({'B', l, 1}));
  if (is(t, 'D', 2))
    return transpose(cartan_template({'C', l, 1}));
  if (is(t, 'E', 2))
    return transpose(cartan_template({'F', 4, 1}));
  if (is(t, 'D', 3))
    return transpose(cartan_template({'G', 2, 1}));
  throw Error(Errc::kInvalidArgument, "no template for " + t.tag());
}

namespace {

bool extend(const IntMatrix &a, const IntMatrix &b, std::vector<int> &p,
            std::vector<char> &used, std::size_t i) {
  std::size_t k = a.size();
  if (i == k)
    return true;
  for (std::size_t v = 0; v < k; ++v) {
    if (used[v])
      continue;
    bool ok = b[v][v] == a[i][i];
    for (std::size_t j = 0; j < i && ok; ++j)
      ok = b[v][p[j]] == a[i][j] && b[p[j]][v] == a[j][i];
    if (!ok)
      continue;
    p[i] = static_cast<int>(v);
    used[v] = 1;
    if (extend(a, b, p, used, i + 1))
      return true;
    used[v] = 0;
  }
  return false;
}

// Primitive positive integer vector spanning the kernel of m (corank 1).
std::optional<std::vector<long>> kernel_vector(const IntMatrix &m) {
  std::size_t k = m.size();
  std::vector<std::vector<Rat>> a(k, std::vector<Rat>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      a[i][j] = m[i][j];
  std::vector<int> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < k && row < k; ++col) {
    std::size_t p = row;
    while (p < k && a[p][col] == 0)
      ++p;
    if (p == k)
      continue;
    std::swap(a[p], a[row]);
    Rat inv = 1 / a[row][col];
    for (Rat &x : a[row])
      x *= inv;
    for (std::size_t i = 0; i < k; ++i)
      if (i != row && a[i][col] != 0) {
        Rat f = a[i][col];
        for (std::size_t j = 0; j < k; ++j)
          a[i][j] -= f * a[row][j];
      }
    pivot_col.push_back(static_cast<int>(col));
    ++row;
  }
  if (pivot_col.size() + 1 != k)
    return std::nullopt;
  std::size_t free = 0;
  for (std::size_t c = 0; c < k; ++c)
    if (std::find(pivot_col.begin(), pivot_col.end(), c) == pivot_col.end())
      free = c;
  std::vector<Rat> v(k, 0);
  v[free] = 1;
  for (std::size_t r = 0; r < pivot_col.size(); ++r)
    v[pivot_col[r]] = -a[r][free];
  Integer l = 1;
  for (const Rat &x : v)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> iv;
  Integer g = 0;
  for (const Rat &x : v) {
    iv.push_back(x.get_num() * (l / x.get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), iv.back().get_mpz_t());
  }
  if (sgn(iv[0]) < 0)
    g = -g;
  std::vector<long> out;
  for (const Integer &x : iv)
    out.push_back(Integer(x / g).get_si());
  return out;
}

}  // namespace

std::optional<std::vector<int>> match_matrices(const IntMatrix &a,
                                               const IntMatrix &b) {
  std::size_t k = a.size();
  if (b.size() != k)
    return std::nullopt;
  std::vector<int> p(k, -1);
  std::vector<char> used(k, 0);
  if (k > 0) {
    // Try sending vertex 0 to vertex 0 first.
    bool ok = a[0][0] == b[0][0];
    if (ok) {
      p[0] = 0;
      used[0] = 1;
      if (extend(a, b, p, used, 1))
        return p;
      used[0] = 0;
    }
  }
  if (extend(a, b, p, used, 0))
    return p;
  return std::nullopt;
}

Classification classify_affine_type(const TensorMatrix &m) {
  std::size_t k = m.size();
  Classification out;
  out.cartan.assign(k, std::vector<long>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      out.cartan[i][j] = (i == j ? 2 : 0) - m.entries[j][i];
  for (const AffineType &t : affine_types_with_vertices(static_cast<int>(k))) {
    auto p = match_matrices(out.cartan, cartan_template(t));
    if (!p)
      continue;
    out.type = t;
    out.vertex_of_module = *p;
    auto marks = kernel_vector(out.cartan);
    auto dual = kernel_vector(transpose(out.cartan));
    if (!marks || !dual)
      throw Error(Errc::kUnclassified, "Cartan matrix does not have corank 1");
    out.marks = *marks;
    out.dual_marks = *dual;
    return out;
  }
  std::string desc;
  for (const auto &row : out.cartan) {
    desc += "[";
    for (long x : row)
      desc += " " + std::to_string(x);
    desc += " ]";
  }
  throw Error(Errc::kUnclassified, "no affine type matches " + desc);
}

DegreeData degree_data(const AffineType &t) {
  int l = ell(t);
  if (is(t, 'A', 1))
    return {2, l + 1, l + 1, l + 1, l + 1, 2};
  if (is(t, 'D', 1))
    return {4, 2 * l - 4, 2 * l - 2, 2 * (l - 2), 4, 4};
  if (is(t, 'E', 1)) {
    if (t.rank == 6)
      return {6, 8, 12, 6, 6, 4};
    if (t.rank == 7)
      return {8, 12, 18, 8, 6, 4};
    return {12, 20, 30, 10, 6, 4};
  }
  if (is(t, 'A', 2) && t.rank % 2 == 0)
    return {2, 2 * l, 2 * l, 2 * l, 2, 2};
  if (is(t, 'B', 1) || is(t, 'A', 2))
    return {4, 2 * l - 2, 2 * l, 2 * (l - 1), 4, 2};
  if (is(t, 'C', 1) || is(t, 'D', 2))
    return {2, 2 * l, 2 * l, 2 * l, 2, 2};
  if (is(t, 'F', 1) || is(t, 'E', 2))
    return {6, 8, 12, 6, 4, 2};
  return {4, 4, 6, 4, 2, 2};  // G2^(1), D4^(3)
}

namespace {

std::vector<int> range(int from, int to, int step = 1) {
  std::vector<int> v;
  for (int x = from; x <= to; x += step)
    v.push_back(x);
  return v;
}

ExponentData with(std::vector<int> e, int h, std::initializer_list<int> add) {
  e.insert(e.end(), add.begin(), add.end());
  std::sort(e.begin(), e.end());
  return {std::move(e), h, true, ""};
}

}  // namespace

ExponentData affine_exponents(const AffineType &t) {
  int l = ell(t);
  if (is(t, 'A', 1)) {
    if (l % 2 == 0)
      return {{}, 0, false, "no exponent row for " + t.tag()};
    int m = (l - 1) / 2;  // A_{2m+1}^(1)
    std::vector<int> e {0};
    for (int j = 1; j <= m; ++j)
      e.insert(e.end(), {j, j});
    e.push_back(m + 1);
    return {e, m + 1, true, ""};
  }
  if (is(t, 'D', 1)) {
    if (l % 2 == 1) {
      int m = (l - 1) / 2;
      return with(range(0, 2 * (2 * m - 1), 2), 2 * (2 * m - 1),
                  {2 * m - 1, 2 * m - 1});
    }
    int m = l / 2;
    return with(range(0, 2 * m - 2), 2 * m - 2, {m - 1, m - 1});
  }
  if (is(t, 'E', 1)) {
    if (t.rank == 6)
      return {{0, 2, 2, 3, 4, 4, 6}, 6, true, ""};
    if (t.rank == 7)
      return {{0, 3, 4, 6, 6, 8, 9, 12}, 12, true, ""};
    return {{0, 6, 10, 12, 15, 18, 20, 24, 30}, 30, true, ""};
  }
  if (is(t, 'A', 2) && t.rank % 2 == 0) {
    if (l == 1)
      return {{0, 2}, 2, true, ""};
    return {range(0, l), l, true, ""};
  }
  if (is(t, 'B', 1) || is(t, 'A', 2)) {
    if (l % 2 == 1) {
      int m = (l - 1) / 2;
      return with(range(0, 2 * m), 2 * m, {m});
    }
    int m = l / 2;
    return with(range(0, 2 * (2 * m - 1), 2), 2 * (2 * m - 1), {2 * m - 1});
  }
  if (is(t, 'C', 1) || is(t, 'D', 2))
    return {range(0, l), l, true, ""};
  if (is(t, 'F', 1) || is(t, 'E', 2))
    return {{0, 2, 3, 4, 6}, 6, true, ""};
  return {{0, 1, 2}, 2, true, ""};  // G2^(1), D4^(3)
}

ExponentData finite_exponents(const AffineType &t) {
  int l = ell(t);
  if (is(t, 'A', 1))
    return {range(1, l), l + 1, true, ""};
  if (is(t, 'D', 1))
    return with(range(1, 2 * l - 3, 2), 2 * l - 2, {l - 1});
  if (is(t, 'E', 1)) {
    if (t.rank == 6)
      return {{1, 4, 5, 7, 8, 11}, 12, true, ""};
    if (t.rank == 7)
      return {{1, 5, 7, 9, 11, 13, 17}, 18, true, ""};
    return {{1, 7, 11, 13, 17, 19, 23, 29}, 30, true, ""};
  }
  if (is(t, 'F', 1) || is(t, 'E', 2))
    return {{1, 5, 7, 11}, 12, true, ""};
  if (is(t, 'G', 1) || is(t, 'D', 3))
    return {{1, 5}, 6, true, ""};
  // B_l / C_l finite parts (A_1 when l = 1)
  return {range(1, 2 * l - 1, 2), 2 * l, true, ""};
}

AffineType expected_pair_type(const PairSpec &spec, Side side) {
  bool rest = side == Side::kRestriction;
  int n = spec.n;
  switch (spec.family) {
  case PairFamily::kDihedralInDihedral:
    return rest ? AffineType {'A', 2 * n - 1, 2} : AffineType {'B', n, 1};
  case PairFamily::kCyclicInDihedral:
    return rest ? AffineType {'D', n + 1, 2} : AffineType {'C', n, 1};
  case PairFamily::kCyclicInDoubleDihedral:
    if (rest)
      return {'A', 2 * n, 2};
    return n == 1 ? AffineType {'A', 1, 1} : AffineType {'C', n, 1};
  case PairFamily::kTetrahedralInOctahedral:
    return rest ? AffineType {'E', 6, 2} : AffineType {'F', 4, 1};
  case PairFamily::kQuaternionInTetrahedral:
    return rest ? AffineType {'D', 4, 3} : AffineType {'G', 2, 1};
  }
  throw Error(Errc::kInvalidArgument, "unknown pair family");
}

AffineType expected_group_type(const GroupSpec &spec) {
  if (const auto *c = std::get_if<CyclicSpec>(&spec))
    return {'A', c->n - 1, 1};
  if (const auto *d = std::get_if<BinaryDihedralSpec>(&spec))
    return {'D', d->n + 2, 1};
  if (std::holds_alternative<BinaryTetrahedralSpec>(spec))
    return {'E', 6, 1};
  if (std::holds_alternative<BinaryOctahedralSpec>(spec))
    return {'E', 7, 1};
  if (std::holds_alternative<BinaryIcosahedralSpec>(spec))
    return {'E', 8, 1};
  throw Error(Errc::kInvalidArgument, "no affine type for SL3 groups");
}

}  // namespace mckay
