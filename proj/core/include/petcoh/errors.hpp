#pragma once

#include <stdexcept>

namespace petcoh {

/// A computed invariant contradicts the expected theorem-level value
/// (torsion where none should exist, a rank mismatch, a failed identity).
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace petcoh
