//
// mckay-poincare - Copyright 2026 The mckay-poincare Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mckay/poincare.h"

namespace mckay {

// Loads a subject once per process; safe to call from several threads.
const Subject &cached_subject(const std::string &name);

// Catalog subsets used by the suites.
std::vector<std::string> sl2_subjects();  // SL2 groups then pairs
std::vector<std::string> all_subjects();  // SL2 groups, SL3 groups, pairs

// Per-subject checks. Each returns a report named after the subject.
CheckReport check_orthogonality(const Subject &s);
CheckReport check_eigen(const Subject &s);
CheckReport check_transpose(const Subject &s);
CheckReport check_fourway(const Subject &s, int order = 64);
CheckReport check_table_forms(const Subject &s);  // classification, closed form
CheckReport check_cartan_det(const Subject &s);
CheckReport check_exponents(const Subject &s);
CheckReport check_dimension_sum(const Subject &s, int max_k = 40);
CheckReport check_proportionality(const Subject &s);
CheckReport check_json_roundtrip(const Subject &s);  // dump, reload, dump

// Binomial closed forms against the determinant engine for 3 <= n <= max_n.
CheckReport check_dihedral_forms(int max_n = 8);

// Suites by name: orthogonality, eigen, transpose, fourway, proportionality,
// tcheb, tables, exponents, dimsum, dihedral, roundtrip.
std::vector<std::string> suite_names();
CheckReport run_suite(std::string_view name);  // throws kUnknownName

}  // namespace mckay
