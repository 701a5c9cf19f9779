//
// mckay-poincare - Copyright 2026 The mckay-poincare Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mckay {

enum class Errc {
  kInvalidArgument,
  kDivByZero,
  kPoleAtZero,
  kLabelError,
  kBadGenerators,
  kIncompleteTable,
  kNotASubgroup,
  kNotNormal,
  kNonIntegralMultiplicity,
  kUnclassified,
  kNonCharacter,
  kNonIntegral,
  kSizeMismatch,
  kNoMatching,
  kUnknownName,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string &what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) { }

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace mckay
