//
// mckay-poincare - Copyright 2026 The mckay-poincare Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mckay/mckay.h"

namespace mckay {

enum class Method { kDeterminant, kMolien, kClosedForm, kExponentProduct };

std::string method_name(Method m);

// One rational function per module label (trivial module first).
struct SeriesBundle {
  Method method = Method::kDeterminant;
  std::vector<std::string> labels;
  std::vector<RatFun> series;
};

// P = (1 + (-1)^n t^n) I + sum_{r=1}^{n-1} (-1)^r M_{n-r} t^r, where
// mats[r-1] is the tensor matrix for the r-th exterior power.
PolyMatrix poincare_matrix(int n, const std::vector<TensorMatrix> &mats);

// Solves P s = delta (delta = 1 on the trivial module) by Cramer's rule.
SeriesBundle series_by_determinant(int n,
                                   const std::vector<TensorMatrix> &mats);

struct MolienResult {
  RatFun ratfun;
  Series series;
};

// (1/|H|) sum_g conj(target(g)) / det(I - t g) over the module group.
// Throws kNonCharacter if target is not a proper character of H.
MolienResult molien_series(const ModuleSet &table, const ClassFunction &target,
                           int order = Series::kDefaultOrder);

// Molien series of every module of one side of a subject.
SeriesBundle molien_bundle(const Subject &s, Side side);

// det(I - t g) for a matrix group element, with cyclotomic coefficients.
CycloPoly char_poly_reversed(const CycloMatrix &g);

// prod over the given classes of
// 1 + sum_{r=1}^{n-1} (-1)^r chi_{wedge^{n-r}}(g) t^r + (-1)^n t^n.
IntPoly denominator_by_characters(const ClassFunction &natural,
                                  const std::vector<int> &classes);

// (1 + t^h) / ((1 - t^a)(1 - t^b)).
RatFun closed_form_invariants(const AffineType &t);

// (1 - t^{2p})(1 - t^{2q})(1 - t^{2r}) / (1 - t^2).
IntPoly closed_form_cartan_det(const AffineType &t);

// prod over exponents m of (1 + t^2 - (z^m + z^-m) t), z = exp(pi i/h).
IntPoly exponent_product(const std::vector<int> &exponents, int h);

// Quotient of the finite and affine exponent products; the invariant series
// when both rows exist.
std::optional<RatFun> exponent_quotient(const AffineType &t);

// Quantum Cartan matrix (1 + t^2) I - t M for an SL2 tensor matrix.
PolyMatrix quantum_cartan(const IntMatrix &m);

// Chebyshev polynomials of the first and second kind.
IntPoly tcheb_T(int n);
IntPoly tcheb_U(int n);

CheckReport tcheb_identity_suite(int max_n = 24);

enum class DihedralForm {
  kDihedralInDihedral,      // D_{n-1} < D_{2(n-1)}
  kCyclicInDihedral,        // C_{2n} < D_n
  kCyclicInDoubleDihedral,  // C_{2n} < D_{2n}
  kCyclicGroup,             // C_n
  kBinaryDihedralGroup,     // D_n
};

// Binomial-sum closed forms of the invariant series.
RatFun dihedral_closed_form(DihedralForm form, int n);

struct ProportionalityResult {
  CheckReport report;
  std::vector<int> bijection;  // restriction module -> induction module
  std::vector<Rat> ratios;     // per restriction module
};

// Matches restricted series to induced series so that each ratio
// (restricted / induced) is 1 on long roots and [G:N] on short roots of the
// induction-side diagram. Throws kNoMatching.
ProportionalityResult proportionality_check(const Subject &s);

// Squared root lengths |alpha_i|^2 normalized so the longest is 1.
std::vector<Rat> root_length_ratios(const IntMatrix &cartan);

}  // namespace mckay
