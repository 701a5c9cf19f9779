//
// mckay-poincare - Copyright 2026 The mckay-poincare Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "mckay/character.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

namespace mckay {

ClassFunction::ClassFunction(GroupPtr group, std::vector<CycloNum> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != group_->class_count())
    throw Error(Errc::kSizeMismatch, "class function has " +
                                         std::to_string(values_.size()) +
                                         " values for " +
                                         std::to_string(group_->class_count()) +
                                         " classes");
}

void ClassFunction::check_same_group(const ClassFunction &rhs) const {
  if (group_.get() != rhs.group_.get())
    throw Error(Errc::kSizeMismatch, "class functions on different groups");
}

ClassFunction ClassFunction::conj() const {
  std::vector<CycloNum> v;
  v.reserve(values_.size());
  for (const CycloNum &x : values_)
    v.push_back(x.conj());
  return ClassFunction(group_, std::move(v));
}

ClassFunction ClassFunction::galois(long k) const {
  std::vector<CycloNum> v;
  v.reserve(values_.size());
  for (const CycloNum &x : values_)
    v.push_back(x.galois(k));
  return ClassFunction(group_, std::move(v));
}

ClassFunction &ClassFunction::operator+=(const ClassFunction &rhs) {
  check_same_group(rhs);
  for (std::size_t i = 0; i < values_.size(); ++i)
    values_[i] += rhs.values_[i];
  return *this;
}

ClassFunction &ClassFunction::operator-=(const ClassFunction &rhs) {
  check_same_group(rhs);
  for (std::size_t i = 0; i < values_.size(); ++i)
    values_[i] -= rhs.values_[i];
  return *this;
}

ClassFunction operator*(const ClassFunction &a, const ClassFunction &b) {
  a.check_same_group(b);
  std::vector<CycloNum> v;
  v.reserve(a.values_.size());
  for (std::size_t i = 0; i < a.values_.size(); ++i)
    v.push_back(a.values_[i] * b.values_[i]);
  return ClassFunction(a.group_, std::move(v));
}

ClassFunction operator*(const CycloNum &s, const ClassFunction &a) {
  std::vector<CycloNum> v;
  v.reserve(a.values_.size());
  for (const CycloNum &x : a.values_)
    v.push_back(s * x);
  return ClassFunction(a.group_, std::move(v));
}

int ClassFunction::compare(const ClassFunction &a, const ClassFunction &b) {
  for (std::size_t i = 0; i < a.values_.size(); ++i) {
    int c = CycloNum::compare(a.values_[i], b.values_[i]);
    if (c != 0)
      return c;
  }
  return 0;
}

CycloNum inner_product(const ClassFunction &a, const ClassFunction &b) {
  if (a.group_ptr().get() != b.group_ptr().get())
    throw Error(Errc::kSizeMismatch, "class functions on different groups");
  const MatrixGroup &g = a.group();
  CycloNum acc(0);
  for (int c = 0; c < g.class_count(); ++c) {
    if (a[c].is_zero() || b[c].is_zero())
      continue;
    CycloNum term = a[c] * b[c].conj();
    acc += CycloNum(static_cast<long>(g.classes()[c].members.size())) * term;
  }
  return acc / CycloNum(static_cast<long>(g.order()));
}

CycloNum inner_product_elementwise(const ClassFunction &a,
                                   const ClassFunction &b) {
  const MatrixGroup &g = a.group();
  CycloNum acc(0);
  for (int e = 0; e < g.order(); ++e)
    acc += a.at_element(e) * b.at_element(e).conj();
  return acc / CycloNum(static_cast<long>(g.order()));
}

ClassFunction natural_character(const GroupPtr &g) {
  std::vector<CycloNum> v;
  for (const ConjugacyClass &c : g->classes())
    v.push_back(g->element(c.representative).trace().embed(g->char_conductor()));
  return ClassFunction(g, std::move(v));
}

ClassFunction exterior_power_character(const ClassFunction &chi, int r) {
  if (r < 0)
    throw Error(Errc::kInvalidArgument, "negative exterior power");
  const MatrixGroup &g = chi.group();
  int k = g.class_count();
  // power sums p_i(c) = chi(rep^i)
  std::vector<std::vector<CycloNum>> p(r + 1, std::vector<CycloNum>(k));
  for (int i = 1; i <= r; ++i)
    for (int c = 0; c < k; ++c)
      p[i][c] = chi.at_element(g.power(g.classes()[c].representative, i));
  std::vector<std::vector<CycloNum>> e(r + 1,
                                       std::vector<CycloNum>(k, CycloNum(1)));
  for (int j = 1; j <= r; ++j)
    for (int c = 0; c < k; ++c) {
      CycloNum acc(0);
      for (int i = 1; i <= j; ++i) {
        CycloNum term = e[j - i][c] * p[i][c];
        if (i % 2 == 1)
          acc += term;
        else
          acc -= term;
      }
      e[j][c] = acc / CycloNum(static_cast<long>(j));
    }
  return ClassFunction(chi.group_ptr(), std::move(e[r]));
}

std::size_t ModuleSet::index_of(const std::string &label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label)
      return i;
  throw Error(Errc::kLabelError, "unknown module label '" + label + "'");
}

namespace {

// Homomorphisms G -> C^* as exponent vectors of zeta_K over elements.
std::vector<ClassFunction> linear_characters(const GroupPtr &gp, int K) {
  const MatrixGroup &g = *gp;
  std::vector<int> gens;
  for (const CycloMatrix &m : g.generators())
    gens.push_back(*g.index_of(m));
  std::vector<int> steps;  // exponent granularity per generator
  for (int s : gens)
    steps.push_back(K / g.element_order(s));

  std::vector<ClassFunction> out;
  std::vector<int> img(gens.size(), 0);
  std::vector<int> val(g.order());
  while (true) {
    std::fill(val.begin(), val.end(), -1);
    val[0] = 0;
    std::vector<int> queue {0};
    bool ok = true;
    for (std::size_t q = 0; q < queue.size() && ok; ++q)
      for (std::size_t s = 0; s < gens.size(); ++s) {
        int y = g.multiply(queue[q], gens[s]);
        int v = (val[queue[q]] + img[s] * steps[s]) % K;
        if (val[y] < 0) {
          val[y] = v;
          queue.push_back(y);
        } else if (val[y] != v) {
          ok = false;
          break;
        }
      }
    if (ok) {
      std::vector<CycloNum> values;
      for (const ConjugacyClass &c : g.classes())
        values.push_back(CycloNum::root_of_unity(K, val[c.representative]));
      out.emplace_back(gp, std::move(values));
    }
    std::size_t s = 0;
    for (; s < gens.size(); ++s) {
      if (++img[s] < g.element_order(gens[s]))
        break;
      img[s] = 0;
    }
    if (s == gens.size())
      break;
  }
  return out;
}

class TableBuilder {
 public:
  TableBuilder(GroupPtr g): g_(std::move(g)), K_(g_->char_conductor()) { }

  ModuleSet run() {
    for (ClassFunction &chi : linear_characters(g_, K_))
      add_irreducible(std::move(chi));
    ClassFunction nat = natural_character(g_);
    natural_ = {nat};
    if (!(nat.conj() == nat))
      natural_.push_back(nat.conj());
    for (std::size_t i = 0; i < irr_.size(); ++i)
      for (const ClassFunction &v : natural_)
        consider(v * irr_[i]);
    drain();
    // Products of pairs of known irreducibles.
    for (std::size_t i = 0; i < irr_.size() && !complete(); ++i)
      for (std::size_t j = i; j < irr_.size() && !complete(); ++j) {
        consider(irr_[i] * irr_[j]);
        drain();
      }
    // Differences and sums of leftover remainders.
    for (int round = 0; round < 4 && !complete(); ++round) {
      std::vector<ClassFunction> pool;
      for (const ClassFunction &r : pool_) {
        ClassFunction x = reduce(r);
        if (!is_zero(x))
          pool.push_back(std::move(x));
      }
      pool_.clear();
      for (std::size_t i = 0; i < pool.size() && !complete(); ++i)
        for (std::size_t j = i + 1; j < pool.size() && !complete(); ++j) {
          consider(pool[i] - pool[j]);
          consider(pool[i] + pool[j]);
          drain();
        }
    }
    if (!complete())
      throw Error(Errc::kIncompleteTable,
                  g_->name() + ": found " + std::to_string(irr_.size()) +
                      " irreducibles with degree square sum " +
                      std::to_string(square_sum_) + " of " +
                      std::to_string(g_->order()));
    return finish();
  }

 private:
  bool complete() const { return square_sum_ == g_->order(); }

  static bool is_zero(const ClassFunction &f) {
    for (const CycloNum &x : f.values())
      if (!x.is_zero())
        return false;
    return true;
  }

  ClassFunction reduce(ClassFunction psi) const {
    for (const ClassFunction &chi : irr_) {
      CycloNum m = inner_product(psi, chi);
      if (!m.is_zero())
        psi -= m * chi;
    }
    return psi;
  }

  void consider(const ClassFunction &psi) { queue_.push_back(psi); }

  void drain() {
    while (!queue_.empty() && !complete()) {
      ClassFunction psi = std::move(queue_.front());
      queue_.erase(queue_.begin());
      ClassFunction r = reduce(std::move(psi));
      if (is_zero(r))
        continue;
      CycloNum norm = inner_product(r, r);
      if (norm == CycloNum(1)) {
        if (!r.degree().is_rational())
          continue;
        if (r.degree().rational_value() < 0)
          r = CycloNum(-1) * r;
        std::size_t before = irr_.size();
        add_with_conjugates(r);
        for (std::size_t i = before; i < irr_.size(); ++i)
          for (const ClassFunction &v : natural_)
            queue_.push_back(v * irr_[i]);
      } else {
        pool_.push_back(std::move(r));
      }
    }
  }

  bool known(const ClassFunction &chi) const {
    for (const ClassFunction &x : irr_)
      if (x == chi)
        return true;
    return false;
  }

  void add_irreducible(ClassFunction chi) {
    if (known(chi))
      return;
    Integer d = chi.degree().integer_value();
    square_sum_ += d.get_si() * d.get_si();
    irr_.push_back(std::move(chi));
  }

  void add_with_conjugates(const ClassFunction &chi) {
    add_irreducible(chi);
    for (long k = 2; k < K_; ++k)
      if (std::gcd(k, static_cast<long>(K_)) == 1) {
        ClassFunction c = chi.galois(k);
        if (!known(c))
          add_irreducible(std::move(c));
      }
  }

  ModuleSet finish() {
    std::vector<ClassFunction> chars = irr_;
    auto trivial_first = [](const ClassFunction &f) {
      for (const CycloNum &x : f.values())
        if (x != CycloNum(1))
          return false;
      return true;
    };
    std::stable_sort(chars.begin(), chars.end(),
                     [&](const ClassFunction &a, const ClassFunction &b) {
                       bool ta = trivial_first(a), tb = trivial_first(b);
                       if (ta != tb)
                         return ta;
                       int c = CycloNum::compare(a.degree(), b.degree());
                       if (c != 0)
                         return c < 0;
                       return ClassFunction::compare(a, b) < 0;
                     });
    ModuleSet t;
    t.group = g_;
    for (std::size_t i = 0; i < chars.size(); ++i) {
      t.labels.push_back("X" + std::to_string(i));
      t.degrees.push_back(
          static_cast<int>(chars[i].degree().integer_value().get_si()));
    }
    t.chars = std::move(chars);
    if (t.chars.size() != static_cast<std::size_t>(g_->class_count()))
      throw Error(Errc::kIncompleteTable,
                  g_->name() + ": character count differs from class count");
    return t;
  }

  GroupPtr g_;
  int K_;
  long square_sum_ = 0;
  std::vector<ClassFunction> natural_;
  std::vector<ClassFunction> irr_;
  std::vector<ClassFunction> queue_;
  std::vector<ClassFunction> pool_;
};

std::vector<int> element_map(const MatrixGroup &from, const MatrixGroup &to) {
  std::vector<int> map(from.order(), -1);
  for (int e = 0; e < from.order(); ++e)
    if (auto idx = to.index_of(from.element(e)))
      map[e] = *idx;
  return map;
}

int degree_of(const ClassFunction &chi) {
  return static_cast<int>(chi.degree().integer_value().get_si());
}

}  // namespace

ModuleSet character_table(const GroupPtr &g) {
  return TableBuilder(g).run();
}

std::vector<long> decompose(const ModuleSet &table, const ClassFunction &chi) {
  std::vector<long> mult;
  for (const ClassFunction &x : table.chars) {
    CycloNum m = inner_product(chi, x);
    if (!m.is_integer() || sgn(m.integer_value()) < 0)
      throw Error(Errc::kNonCharacter,
                  "multiplicity " + m.to_string() + " against " +
                      table.labels[mult.size()]);
    mult.push_back(m.integer_value().get_si());
  }
  return mult;
}

std::vector<int> fuse_classes(const MatrixGroup &n, const MatrixGroup &g) {
  std::vector<int> to_g = element_map(n, g);
  for (int e = 0; e < n.order(); ++e)
    if (to_g[e] < 0)
      throw Error(Errc::kNotASubgroup,
                  n.name() + " is not contained in " + g.name());
  std::vector<int> fuse;
  for (const ConjugacyClass &c : n.classes())
    fuse.push_back(g.class_of(to_g[c.representative]));
  return fuse;
}

std::vector<int> classes_meeting(const MatrixGroup &n, const MatrixGroup &g) {
  std::vector<int> f = fuse_classes(n, g);
  std::set<int> s(f.begin(), f.end());
  return {s.begin(), s.end()};
}

namespace {

void check_normal(const MatrixGroup &n, const MatrixGroup &g) {
  std::vector<int> to_g = element_map(n, g);
  std::vector<char> in_n(g.order(), 0);
  for (int e : to_g) {
    if (e < 0)
      throw Error(Errc::kNotASubgroup,
                  n.name() + " is not contained in " + g.name());
    in_n[e] = 1;
  }
  for (const CycloMatrix &s : g.generators()) {
    int si = *g.index_of(s);
    for (int e : to_g)
      if (!in_n[g.multiply(g.multiply(si, e), g.inverse(si))])
        throw Error(Errc::kNotNormal,
                    n.name() + " is not normal in " + g.name());
  }
}

}  // namespace

ModuleSet restrict_characters(const ModuleSet &g_table, const GroupPtr &n) {
  const MatrixGroup &g = *g_table.group;
  check_normal(*n, g);
  std::vector<int> fuse = fuse_classes(*n, g);
  ModuleSet out;
  out.group = n;
  for (std::size_t i = 0; i < g_table.size(); ++i) {
    std::vector<CycloNum> v;
    for (int c : fuse)
      v.push_back(g_table.chars[i][c]);
    ClassFunction r(n, std::move(v));
    if (std::find(out.chars.begin(), out.chars.end(), r) != out.chars.end())
      continue;
    out.labels.push_back("Res " + g_table.labels[i]);
    out.degrees.push_back(degree_of(r));
    out.chars.push_back(std::move(r));
  }
  std::set<int> meet(fuse.begin(), fuse.end());
  if (out.size() != meet.size())
    throw Error(Errc::kSizeMismatch,
                "restriction count " + std::to_string(out.size()) +
                    " differs from the number of classes meeting " + n->name());
  return out;
}

ModuleSet induce_characters(const ModuleSet &n_table, const GroupPtr &g) {
  const MatrixGroup &n = *n_table.group;
  check_normal(n, *g);
  std::vector<int> g_to_n = element_map(*g, n);
  // count[c][d]: number of x in G with x^-1 g_c x in class d of N
  int gc = g->class_count(), nc = n.class_count();
  std::vector<std::vector<long>> count(gc, std::vector<long>(nc, 0));
  for (int c = 0; c < gc; ++c) {
    int rep = g->classes()[c].representative;
    if (g_to_n[rep] < 0)
      continue;
    for (int x = 0; x < g->order(); ++x) {
      int y = g->multiply(g->multiply(g->inverse(x), rep), x);
      count[c][n.class_of(g_to_n[y])] += 1;
    }
  }
  CycloNum inv_order = CycloNum(Rat(1, n.order()));
  ModuleSet out;
  out.group = g;
  for (std::size_t i = 0; i < n_table.size(); ++i) {
    std::vector<CycloNum> v;
    for (int c = 0; c < gc; ++c) {
      CycloNum acc(0);
      for (int d = 0; d < nc; ++d)
        if (count[c][d] != 0)
          acc += CycloNum(count[c][d]) * n_table.chars[i][d];
      v.push_back((acc * inv_order).embed(
          static_cast<int>(lcm_int(acc.conductor(), g->char_conductor()))));
    }
    ClassFunction r(g, std::move(v));
    if (std::find(out.chars.begin(), out.chars.end(), r) != out.chars.end())
      continue;
    out.labels.push_back("Ind " + n_table.labels[i]);
    out.degrees.push_back(degree_of(r));
    out.chars.push_back(std::move(r));
  }
  return out;
}

}  // namespace mckay
