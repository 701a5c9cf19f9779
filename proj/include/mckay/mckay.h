//
// mckay-poincare - Copyright 2026 The mckay-poincare Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mckay/catalog.h"
#include "mckay/poly.h"

namespace mckay {

enum class Side { kRestriction, kInduction };

std::string side_name(Side side);  // "rest" / "ind"
Side parse_side(std::string_view s);

using IntMatrix = std::vector<std::vector<long>>;

// entries[j][i] = multiplicity of module i in (multiplier (x) module j).
struct TensorMatrix {
  IntMatrix entries;
  std::vector<std::string> labels;
  std::vector<int> degrees;
  int r = 1;

  std::size_t size() const { return entries.size(); }
};

// Throws kNonIntegralMultiplicity if some product does not decompose into
// the module list with nonnegative integer multiplicities.
TensorMatrix tensor_matrix(const ModuleSet &modules,
                           const ClassFunction &multiplier, int r = 1);

// Same matrix computed by element-wise sums; used as a cross-check.
TensorMatrix tensor_matrix_elementwise(const ModuleSet &modules,
                                       const ClassFunction &multiplier,
                                       int r = 1);

// Module set and multiplier for one side of a subject. For groups the side
// is ignored: modules are the irreducibles and the multiplier is the r-th
// exterior power of the natural character.
const ModuleSet &side_modules(const Subject &s, Side side);
ClassFunction side_multiplier(const Subject &s, Side side, int r);
TensorMatrix subject_tensor_matrix(const Subject &s, Side side, int r);
std::vector<TensorMatrix> subject_tensor_matrices(const Subject &s, Side side);

// Outcome of a verification: empty failures means success.
struct CheckReport {
  std::string name;
  long checks = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  bool ok() const { return failures.empty(); }
  void expect(bool cond, const std::string &what);
  void merge(const CheckReport &other);
};

// A_r = A_{n-r}^T for 1 <= r <= n-1.
CheckReport verify_transpose_symmetry(const Subject &s);

// For each g in the classes meeting N: the vector v_g of module values at g
// satisfies (chi(1) I - M) v_g = (chi(1) - chi(g)) v_g, with chi the
// r-th exterior power of the natural character.
CheckReport verify_eigen_structure(const Subject &s, Side side, int r);

std::string quiver_dot(const TensorMatrix &m, const std::string &title);
std::string quiver_json(const TensorMatrix &m, const std::string &title);

// Affine Dynkin types, numbered as in Kac's tables.
struct AffineType {
  char letter = 'A';
  int rank = 1;  // l in X_l^(k)
  int twist = 1;  // k

  std::string tag() const;  // e.g. "D4^(3)"
  int vertex_count() const;
  friend bool operator==(const AffineType &a, const AffineType &b) {
    return a.letter == b.letter && a.rank == b.rank && a.twist == b.twist;
  }
};

std::optional<AffineType> parse_affine_tag(std::string_view tag);

// Generalized Cartan matrix of the type; vertex 0 is the affine vertex.
IntMatrix cartan_template(const AffineType &t);

// Every affine type with the given number of vertices.
std::vector<AffineType> affine_types_with_vertices(int count);

struct Classification {
  AffineType type;
  std::vector<int> vertex_of_module;  // module index -> template vertex
  IntMatrix cartan;                   // 2I - M^T
  std::vector<long> marks;            // right null vector of the Cartan
  std::vector<long> dual_marks;       // left null vector (module degrees)
};

// Matches 2I - M^T against the templates up to simultaneous permutation.
// Throws kUnclassified.
Classification classify_affine_type(const TensorMatrix &m);

// Some permutation p with b[p[i]][p[j]] == a[i][j], preferring p[0] == 0.
std::optional<std::vector<int>> match_matrices(const IntMatrix &a,
                                               const IntMatrix &b);

// Data attached to each type.
struct DegreeData {
  int a, b, h;
  int p2, q2, r2;  // twice p, q, r
};
DegreeData degree_data(const AffineType &t);

struct ExponentData {
  std::vector<int> exponents;
  int h;
  bool available = true;
  std::string note;
};
ExponentData affine_exponents(const AffineType &t);
ExponentData finite_exponents(const AffineType &t);  // affine vertex removed

// Expected type of each side of a catalog pair, and of a group.
AffineType expected_pair_type(const PairSpec &spec, Side side);
AffineType expected_group_type(const GroupSpec &spec);

IntMatrix transpose(const IntMatrix &m);

}  // namespace mckay
