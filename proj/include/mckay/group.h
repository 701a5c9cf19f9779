//
// mckay-poincare - Copyright 2026 The mckay-poincare Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "mckay/cyclotomic.h"

namespace mckay {

// Square matrix with cyclotomic entries, row-major.
struct CycloMatrix {
  int n = 0;
  std::vector<CycloNum> a;

  static CycloMatrix identity(int n);
  static CycloMatrix diagonal(const std::vector<CycloNum> &d);

  CycloNum &operator()(int i, int j) { return a[i * n + j]; }
  const CycloNum &operator()(int i, int j) const { return a[i * n + j]; }

  CycloNum trace() const;
  CycloNum det() const;
  int conductor() const;  // lcm of entry conductors

  // Exact textual key; equal matrices give equal keys.
  std::string key() const;

  friend CycloMatrix operator*(const CycloMatrix &x, const CycloMatrix &y);
  friend bool operator==(const CycloMatrix &x, const CycloMatrix &y) {
    return x.n == y.n && x.a == y.a;
  }
};

struct CyclicSpec {
  int n;  // order
};

// Binary dihedral group of order 4n.
struct BinaryDihedralSpec {
  int n;
};

struct BinaryTetrahedralSpec { };
struct BinaryOctahedralSpec { };
struct BinaryIcosahedralSpec { };

// Cyclic subgroup of SL3 generated by diag(z^a, z^b, z^c), z = exp(2 pi i/m).
struct SL3CyclicSpec {
  int m;
  std::array<int, 3> weights;
};

using GroupSpec =
    std::variant<CyclicSpec, BinaryDihedralSpec, BinaryTetrahedralSpec,
                 BinaryOctahedralSpec, BinaryIcosahedralSpec, SL3CyclicSpec>;

std::string group_name(const GroupSpec &spec);

struct ConjugacyClass {
  int representative;  // smallest element index in the class
  int element_order;
  std::vector<int> members;
};

// Finite matrix group with its multiplication table. Elements are indexed in
// breadth-first order from the identity (index 0).
class MatrixGroup {
 public:
  // Closure of the generators; throws kBadGenerators if it exceeds
  // 10 * expected_order elements or lands on the wrong order.
  static MatrixGroup generate(std::string name,
                              std::vector<CycloMatrix> generators,
                              int expected_order);

  const std::string &name() const { return name_; }
  int dim() const { return dim_; }
  int order() const { return static_cast<int>(elements_.size()); }
  int exponent() const { return exponent_; }
  int matrix_conductor() const { return matrix_conductor_; }
  // Conductor of the field used for character values.
  int char_conductor() const;

  const std::vector<CycloMatrix> &generators() const { return generators_; }
  const CycloMatrix &element(int i) const { return elements_[i]; }
  std::optional<int> index_of(const CycloMatrix &m) const;

  int multiply(int a, int b) const { return table_[a * order() + b]; }
  int inverse(int a) const { return inverse_[a]; }
  int power(int a, long k) const;
  int element_order(int a) const { return element_order_[a]; }

  const std::vector<ConjugacyClass> &classes() const { return classes_; }
  int class_count() const { return static_cast<int>(classes_.size()); }
  int class_of(int element) const { return class_of_[element]; }

 private:
  void build_table(const std::vector<int> &parent,
                   const std::vector<int> &via,
                   const std::vector<std::vector<int>> &right_gen);
  void build_classes();

  std::string name_;
  int dim_ = 0;
  int exponent_ = 1;
  int matrix_conductor_ = 1;
  std::vector<CycloMatrix> generators_;
  std::vector<CycloMatrix> elements_;
  std::unordered_map<std::string, int> index_;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<int> element_order_;
  std::vector<ConjugacyClass> classes_;
  std::vector<int> class_of_;
};

using GroupPtr = std::shared_ptr<const MatrixGroup>;

GroupPtr build_group(const GroupSpec &spec);

// Subgroup generated by elements of g (given as element indices).
GroupPtr subgroup(const MatrixGroup &g, const std::string &name,
                  const std::vector<int> &generators, int expected_order);

// Standard generators used by the realizations; exposed for tests.
CycloMatrix quaternion_matrix(const CycloNum &a, const CycloNum &b,
                              const CycloNum &c, const CycloNum &d);
std::vector<CycloMatrix> binary_dihedral_generators(int n);

}  // namespace mckay
