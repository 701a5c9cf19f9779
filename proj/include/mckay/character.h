//
// mckay-poincare - Copyright 2026 The mckay-poincare Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <string>
#include <vector>

#include "mckay/group.h"

namespace mckay {

// Class function on a group, one value per conjugacy class in the group's
// class order.
class ClassFunction {
 public:
  ClassFunction() = default;
  ClassFunction(GroupPtr group, std::vector<CycloNum> values);

  const MatrixGroup &group() const { return *group_; }
  const GroupPtr &group_ptr() const { return group_; }
  const std::vector<CycloNum> &values() const { return values_; }
  const CycloNum &operator[](int cls) const { return values_[cls]; }
  const CycloNum &at_element(int element) const {
    return values_[group_->class_of(element)];
  }
  const CycloNum &degree() const { return values_[0]; }

  ClassFunction conj() const;
  ClassFunction galois(long k) const;

  ClassFunction &operator+=(const ClassFunction &rhs);
  ClassFunction &operator-=(const ClassFunction &rhs);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction &b) {
    return a += b;
  }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction &b) {
    return a -= b;
  }
  friend ClassFunction operator*(const ClassFunction &a,
                                 const ClassFunction &b);
  friend ClassFunction operator*(const CycloNum &s, const ClassFunction &a);
  friend bool operator==(const ClassFunction &a, const ClassFunction &b) {
    return a.values_ == b.values_;
  }

  static int compare(const ClassFunction &a, const ClassFunction &b);

 private:
  void check_same_group(const ClassFunction &rhs) const;

  GroupPtr group_;
  std::vector<CycloNum> values_;
};

// (1/|G|) sum over g of a(g) conj(b(g)).
CycloNum inner_product(const ClassFunction &a, const ClassFunction &b);

// Same pairing, summed element by element instead of by class sizes.
CycloNum inner_product_elementwise(const ClassFunction &a,
                                   const ClassFunction &b);

ClassFunction natural_character(const GroupPtr &g);

// Character of the r-th exterior power, from power maps and Newton's
// identities.
ClassFunction exterior_power_character(const ClassFunction &chi, int r);

// Labelled list of characters (irreducible or not) on one group.
struct ModuleSet {
  GroupPtr group;
  std::vector<ClassFunction> chars;
  std::vector<std::string> labels;
  std::vector<int> degrees;

  std::size_t size() const { return chars.size(); }
  std::size_t index_of(const std::string &label) const;  // kLabelError
};

// Irreducible characters: trivial first, then by degree, then by values.
// Labels are X0, X1, ...
ModuleSet character_table(const GroupPtr &g);

// Decomposition multiplicities of chi into table.chars; throws
// kNonCharacter if chi is not a proper character.
std::vector<long> decompose(const ModuleSet &table, const ClassFunction &chi);

// Distinct restrictions of the irreducibles of G to N (trivial first).
// Throws kNotASubgroup / kNotNormal.
ModuleSet restrict_characters(const ModuleSet &g_table, const GroupPtr &n);

// Distinct inductions of the irreducibles of N to G (Ind of trivial first).
ModuleSet induce_characters(const ModuleSet &n_table, const GroupPtr &g);

// For each class of n, the class of g containing it.
std::vector<int> fuse_classes(const MatrixGroup &n, const MatrixGroup &g);

// Classes of g that meet n.
std::vector<int> classes_meeting(const MatrixGroup &n, const MatrixGroup &g);

}  // namespace mckay
