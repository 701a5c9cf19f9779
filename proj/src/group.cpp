//
// mckay-poincare - Copyright 2026 The mckay-poincare Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "mckay/group.h"

#include <algorithm>
#include <numeric>
#include <utility>

namespace mckay {

CycloMatrix CycloMatrix::identity(int n) {
  CycloMatrix m;
  m.n = n;
  m.a.assign(static_cast<std::size_t>(n) * n, CycloNum(0));
  for (int i = 0; i < n; ++i)
    m(i, i) = CycloNum(1);
  return m;
}

CycloMatrix CycloMatrix::diagonal(const std::vector<CycloNum> &d) {
  CycloMatrix m = identity(static_cast<int>(d.size()));
  for (int i = 0; i < m.n; ++i)
    m(i, i) = d[i];
  return m;
}

CycloNum CycloMatrix::trace() const {
  CycloNum t(0);
  for (int i = 0; i < n; ++i)
    t += (*this)(i, i);
  return t;
}

namespace {

CycloNum det_rec(const std::vector<CycloNum> &a, int n) {
  if (n == 1)
    return a[0];
  if (n == 2)
    return a[0] * a[3] - a[1] * a[2];
  CycloNum d(0);
  for (int col = 0; col < n; ++col) {
    if (a[col].is_zero())
      continue;
    std::vector<CycloNum> minor;
    minor.reserve(static_cast<std::size_t>(n - 1) * (n - 1));
    for (int i = 1; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (j != col)
          minor.push_back(a[i * n + j]);
    CycloNum term = a[col] * det_rec(minor, n - 1);
    if (col % 2 == 0)
      d += term;
    else
      d -= term;
  }
  return d;
}

}  // namespace

CycloNum CycloMatrix::det() const {
  if (n == 0)
    return CycloNum(1);
  return det_rec(a, n);
}

int CycloMatrix::conductor() const {
  long m = 1;
  for (const CycloNum &x : a)
    m = lcm_int(m, x.conductor());
  return static_cast<int>(m);
}

std::string CycloMatrix::key() const {
  std::string k;
  for (const CycloNum &x : a) {
    k += std::to_string(x.conductor());
    k += ':';
    k += x.to_string();
    k += ';';
  }
  return k;
}

CycloMatrix operator*(const CycloMatrix &x, const CycloMatrix &y) {
  if (x.n != y.n)
    throw Error(Errc::kSizeMismatch, "matrix dimensions differ");
  CycloMatrix r;
  r.n = x.n;
  r.a.assign(static_cast<std::size_t>(x.n) * x.n, CycloNum(0));
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      if (x(i, k).is_zero())
        continue;
      for (int j = 0; j < x.n; ++j)
        if (!y(k, j).is_zero())
          r(i, j) += x(i, k) * y(k, j);
    }
  return r;
}

namespace {

CycloMatrix embed_matrix(const CycloMatrix &m, int conductor) {
  CycloMatrix r = m;
  for (CycloNum &x : r.a)
    x = x.embed(conductor);
  return r;
}

}  // namespace

int MatrixGroup::char_conductor() const {
  return static_cast<int>(lcm_int(exponent_, matrix_conductor_));
}

MatrixGroup MatrixGroup::generate(std::string name,
                                  std::vector<CycloMatrix> generators,
                                  int expected_order) {
  if (generators.empty())
    throw Error(Errc::kBadGenerators, name + ": no generators");
  MatrixGroup g;
  g.name_ = std::move(name);
  g.dim_ = generators.front().n;
  long conductor = 1;
  for (const CycloMatrix &m : generators) {
    if (m.n != g.dim_)
      throw Error(Errc::kBadGenerators, g.name_ + ": mixed dimensions");
    conductor = lcm_int(conductor, m.conductor());
  }
  g.matrix_conductor_ = static_cast<int>(conductor);
  for (CycloMatrix &m : generators)
    m = embed_matrix(m, g.matrix_conductor_);
  g.generators_ = generators;

  const std::size_t limit = 10 * static_cast<std::size_t>(expected_order);
  std::vector<int> parent {-1}, via {-1};
  std::vector<std::vector<int>> right_gen(generators.size());
  g.elements_.push_back(
      embed_matrix(CycloMatrix::identity(g.dim_), g.matrix_conductor_));
  g.index_.emplace(g.elements_[0].key(), 0);
  for (std::size_t q = 0; q < g.elements_.size(); ++q) {
    for (std::size_t s = 0; s < generators.size(); ++s) {
      CycloMatrix p =
          embed_matrix(g.elements_[q] * generators[s], g.matrix_conductor_);
      auto [it, fresh] =
          g.index_.emplace(p.key(), static_cast<int>(g.elements_.size()));
      if (fresh) {
        g.elements_.push_back(std::move(p));
        parent.push_back(static_cast<int>(q));
        via.push_back(static_cast<int>(s));
        if (g.elements_.size() > limit)
          throw Error(Errc::kBadGenerators,
                      g.name_ + ": closure exceeds " + std::to_string(limit) +
                          " elements");
      }
      right_gen[s].push_back(it->second);
    }
  }
  if (g.order() != expected_order)
    throw Error(Errc::kBadGenerators,
                g.name_ + ": generated " + std::to_string(g.order()) +
                    " elements, expected " + std::to_string(expected_order));
  g.build_table(parent, via, right_gen);
  g.build_classes();
  return g;
}

void MatrixGroup::build_table(const std::vector<int> &parent,
                              const std::vector<int> &via,
                              const std::vector<std::vector<int>> &right_gen) {
  const int n = order();
  table_.assign(static_cast<std::size_t>(n) * n, 0);
  // Element b is parent[b] * generator via[b].
  for (int a = 0; a < n; ++a) {
    int *row = &table_[static_cast<std::size_t>(a) * n];
    row[0] = a;
    for (int b = 1; b < n; ++b)
      row[b] = right_gen[via[b]][row[parent[b]]];
  }
  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (multiply(a, b) == 0) {
        inverse_[a] = b;
        break;
      }
  element_order_.assign(n, 0);
  exponent_ = 1;
  for (int a = 0; a < n; ++a) {
    int k = 1;
    for (int x = a; x != 0; x = multiply(x, a))
      ++k;
    element_order_[a] = k;
    exponent_ = static_cast<int>(lcm_int(exponent_, k));
  }
}

void MatrixGroup::build_classes() {
  const int n = order();
  std::vector<int> gens;
  for (const CycloMatrix &m : generators_)
    gens.push_back(*index_of(m));
  std::vector<int> assigned(n, -1);
  std::vector<std::vector<int>> found;
  for (int h = 0; h < n; ++h) {
    if (assigned[h] >= 0)
      continue;
    int id = static_cast<int>(found.size());
    std::vector<int> orbit {h};
    assigned[h] = id;
    for (std::size_t q = 0; q < orbit.size(); ++q)
      for (int s : gens) {
        int c = multiply(multiply(s, orbit[q]), inverse(s));
        if (assigned[c] < 0) {
          assigned[c] = id;
          orbit.push_back(c);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    found.push_back(std::move(orbit));
  }
  std::sort(found.begin(), found.end(), [this](const auto &x, const auto &y) {
    int ox = element_order_[x[0]], oy = element_order_[y[0]];
    return ox != oy ? ox < oy : x[0] < y[0];
  });
  class_of_.assign(n, -1);
  classes_.clear();
  for (auto &members : found) {
    ConjugacyClass c;
    c.representative = members.front();
    c.element_order = element_order_[members.front()];
    for (int e : members)
      class_of_[e] = static_cast<int>(classes_.size());
    c.members = std::move(members);
    classes_.push_back(std::move(c));
  }
}

std::optional<int> MatrixGroup::index_of(const CycloMatrix &m) const {
  if (m.n != dim_)
    return std::nullopt;
  CycloMatrix e = m;
  for (CycloNum &x : e.a) {
    if (matrix_conductor_ % x.conductor() != 0) {
      if (!x.is_rational())
        return std::nullopt;
      x = CycloNum(x.rational_value());
    }
    x = x.embed(matrix_conductor_);
  }
  auto it = index_.find(e.key());
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

int MatrixGroup::power(int a, long k) const {
  long o = element_order_[a];
  k = ((k % o) + o) % o;
  int r = 0;
  for (long i = 0; i < k; ++i)
    r = multiply(r, a);
  return r;
}

namespace {

CycloNum zeta(int m, long k) {
  return CycloNum::root_of_unity(m, k);
}

template <class>
inline constexpr bool kAlwaysFalse = false;

}  // namespace

CycloMatrix quaternion_matrix(const CycloNum &a, const CycloNum &b,
                              const CycloNum &c, const CycloNum &d) {
  CycloNum i = zeta(4, 1);
  CycloMatrix m = CycloMatrix::identity(2);
  m(0, 0) = a + b * i;
  m(0, 1) = c + d * i;
  m(1, 0) = -c + d * i;
  m(1, 1) = a - b * i;
  return m;
}

std::vector<CycloMatrix> binary_dihedral_generators(int n) {
  CycloMatrix x = CycloMatrix::diagonal({zeta(2 * n, -1), zeta(2 * n, 1)});
  CycloMatrix y = CycloMatrix::identity(2);
  y(0, 0) = CycloNum(0);
  y(1, 1) = CycloNum(0);
  y(0, 1) = zeta(4, 1);
  y(1, 0) = zeta(4, 1);
  return {x, y};
}

std::string group_name(const GroupSpec &spec) {
  return std::visit(
      [](const auto &s) -> std::string {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, CyclicSpec>)
          return "C" + std::to_string(s.n);
        else if constexpr (std::is_same_v<S, BinaryDihedralSpec>)
          return "D" + std::to_string(s.n);
        else if constexpr (std::is_same_v<S, BinaryTetrahedralSpec>)
          return "T";
        else if constexpr (std::is_same_v<S, BinaryOctahedralSpec>)
          return "O";
        else if constexpr (std::is_same_v<S, BinaryIcosahedralSpec>)
          return "I";
        else if constexpr (std::is_same_v<S, SL3CyclicSpec>)
          return "SL3C" + std::to_string(s.m) + "-" +
                 std::to_string(s.weights[0]) + "-" +
                 std::to_string(s.weights[1]) + "-" +
                 std::to_string(s.weights[2]);
        else
          static_assert(kAlwaysFalse<S>);
      },
      spec);
}

namespace {

std::vector<CycloMatrix> tetrahedral_generators() {
  Rat h(1, 2);
  return {quaternion_matrix(0, 1, 0, 0), quaternion_matrix(0, 0, 1, 0),
          quaternion_matrix(h, h, h, h)};
}

void check_special(const std::string &name,
                   const std::vector<CycloMatrix> &gens) {
  for (const CycloMatrix &m : gens)
    if (m.det() != CycloNum(1))
      throw Error(Errc::kBadGenerators, name + ": generator has det != 1");
}

}  // namespace

GroupPtr build_group(const GroupSpec &spec) {
  std::string name = group_name(spec);
  std::vector<CycloMatrix> gens;
  int order = 0;
  if (const auto *c = std::get_if<CyclicSpec>(&spec)) {
    if (c->n < 1)
      throw Error(Errc::kInvalidArgument, "cyclic order must be >= 1");
    gens = {CycloMatrix::diagonal({zeta(c->n, -1), zeta(c->n, 1)})};
    order = c->n;
  } else if (const auto *d = std::get_if<BinaryDihedralSpec>(&spec)) {
    if (d->n < 1)
      throw Error(Errc::kInvalidArgument, "binary dihedral index must be >= 1");
    gens = binary_dihedral_generators(d->n);
    order = 4 * d->n;
  } else if (std::holds_alternative<BinaryTetrahedralSpec>(spec)) {
    gens = tetrahedral_generators();
    order = 24;
  } else if (std::holds_alternative<BinaryOctahedralSpec>(spec)) {
    gens = tetrahedral_generators();
    gens.push_back(CycloMatrix::diagonal({zeta(8, 1), zeta(8, -1)}));
    order = 48;
  } else if (std::holds_alternative<BinaryIcosahedralSpec>(spec)) {
    Rat h(1, 2);
    // golden ratio and its inverse inside Q(zeta_5)
    CycloNum inv_phi = zeta(5, 1) + zeta(5, 4);
    CycloNum phi = inv_phi + CycloNum(1);
    gens = {quaternion_matrix(h, h, h, h),
            quaternion_matrix(phi * CycloNum(h), inv_phi * CycloNum(h), h, 0)};
    order = 120;
  } else if (const auto *s = std::get_if<SL3CyclicSpec>(&spec)) {
    if (s->m < 1)
      throw Error(Errc::kInvalidArgument, "cyclic order must be >= 1");
    std::vector<CycloNum> d;
    int g = s->m;
    for (int w : s->weights) {
      d.push_back(zeta(s->m, w));
      g = std::gcd(g, ((w % s->m) + s->m) % s->m);
    }
    gens = {CycloMatrix::diagonal(d)};
    order = s->m / g;
  }
  check_special(name, gens);
  return std::make_shared<const MatrixGroup>(
      MatrixGroup::generate(name, std::move(gens), order));
}

GroupPtr subgroup(const MatrixGroup &g, const std::string &name,
                  const std::vector<int> &generators, int expected_order) {
  std::vector<CycloMatrix> gens;
  for (int e : generators)
    gens.push_back(g.element(e));
  return std::make_shared<const MatrixGroup>(
      MatrixGroup::generate(name, std::move(gens), expected_order));
}

}  // namespace mckay
