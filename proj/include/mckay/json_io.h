//
// mckay-poincare - Copyright 2026 The mckay-poincare Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <string>

#include <json.hpp>

#include "mckay/poincare.h"

namespace mckay {

using Json = nlohmann::ordered_json;

// {"conductor": m, "terms": [[e, "p/q"], ...]} in the power basis of Q(z_m).
Json cyclo_to_json(const CycloNum &x);
CycloNum cyclo_from_json(const Json &j);

// Coefficients in ascending order; integers as decimal strings.
Json poly_to_json(const IntPoly &p);
IntPoly poly_from_json(const Json &j);

Json ratfun_to_json(const RatFun &f);  // {"num": [...], "den": [...]}
RatFun ratfun_from_json(const Json &j);

Json matrix_to_json(const CycloMatrix &m);
CycloMatrix matrix_from_json(const Json &j);

// Full dump: groups with generators, classes and character tables, the
// module sets of each side, tensor matrices and determinant series.
Json subject_to_json(const Subject &s);

// Rebuilds the groups from the stored generators and recomputes the rest.
// Throws kInvalidArgument on malformed input.
Subject subject_from_json(const Json &j);

// Two-space indented dump followed by a newline.
std::string canonical_json(const Subject &s);

}  // namespace mckay
