#pragma once

// Exact integer linear algebra: dense matrices over Z, Smith normal form with
// unimodular transforms, integer system solving.

#include "petcoh/intpoly.hpp"

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace petcoh {

/// Thrown when a dense matrix would exceed the materialization guard.
class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

class ZMatrix {
 public:
  /// Largest row or column count that may be materialized densely.
  static constexpr std::size_t kMaxDim = 5000;

  ZMatrix() = default;
  ZMatrix(std::size_t rows, std::size_t cols);

  static ZMatrix identity(std::size_t n);
  static ZMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  ZMatrix transpose() const;
  std::vector<BigInt> apply(const std::vector<BigInt>& x) const;
  bool is_zero() const;

  friend ZMatrix operator*(const ZMatrix& a, const ZMatrix& b);
  bool operator==(const ZMatrix& other) const = default;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);

  /// {rows, cols, entries: [[decimal strings]]}
  nlohmann::json to_json() const;
  static ZMatrix from_json(const nlohmann::json& j);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Which transforms smith_normal_form should accumulate. The left inverse is
/// what lets callers write down representatives of cokernel generators.
struct SnfOptions {
  bool left = true;
  bool right = true;
  bool left_inverse = false;
};

/// Cokernel description of an integer matrix A (rows x cols):
/// left_transform * A * right_transform = diag(invariant_factors, 0, ...).
struct ZQuotientStructure {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<BigInt> invariant_factors;  // positive, d1 | d2 | ...
  std::size_t free_rank = 0;              // rows - invariant_factors.size()
  ZMatrix left_transform;                 // rows x rows, det = +-1
  ZMatrix right_transform;                // cols x cols, det = +-1
  ZMatrix left_inverse;                   // only when requested

  std::size_t rank() const { return invariant_factors.size(); }
  std::vector<BigInt> torsion() const;
  bool torsion_free() const { return torsion().empty(); }

  /// The diagonal matrix D with the shape of A.
  ZMatrix diagonal() const;

  nlohmann::json to_json() const;
  static ZQuotientStructure from_json(const nlohmann::json& j);
};

ZQuotientStructure smith_normal_form(const ZMatrix& a, SnfOptions opts = {});

/// A solution x of A x = b over Z, or nullopt when none exists. Free
/// coordinates in the right-transform basis are set to zero.
std::optional<std::vector<BigInt>> solve_integer_system(const ZMatrix& a,
                                                        const std::vector<BigInt>& b);

struct CokernelSummary {
  std::size_t rank = 0;                   // free rank of Z^rows / col span
  std::vector<BigInt> invariant_factors;  // all nonzero invariant factors
  std::vector<BigInt> torsion() const;
};

CokernelSummary cokernel_rank_and_torsion(const ZMatrix& a);

/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt determinant(const ZMatrix& a);

/// Rank over Q (equivalently over Z) by fraction-free elimination.
std::size_t rank(const ZMatrix& a);

}  // namespace petcoh
