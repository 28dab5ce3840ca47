#pragma once

// Quotients Z^N / L for lattices L given by (many, sparse) generators.
//
// The generators are first reduced to a Hermite-style echelon basis of L.
// When every echelon pivot is 1, L is a direct summand and the quotient is
// read off directly: the non-pivot coordinates form a free basis. Otherwise
// the echelon basis is handed to the dense Smith normal form.

#include "petcoh/zlinalg.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace petcoh {

/// Sparse integer vector: strictly increasing indices, no zero entries.
using SparseVec = std::vector<std::pair<std::size_t, BigInt>>;

/// v += q * w
void sparse_axpy(SparseVec& v, const BigInt& q, const SparseVec& w);

class Cokernel {
 public:
  Cokernel() = default;

  static Cokernel from_generators(std::size_t ambient, std::vector<SparseVec> generators);

  std::size_t ambient() const { return ambient_; }
  /// Rank of the relation lattice L.
  std::size_t lattice_rank() const { return basis_.size(); }
  std::size_t free_rank() const { return free_rank_; }
  /// Nonzero invariant factors of the relation lattice, in divisibility order.
  const std::vector<BigInt>& invariant_factors() const { return factors_; }
  std::vector<BigInt> torsion() const;
  bool torsion_free() const { return torsion().empty(); }

  /// Coordinates of the class of v in the free part of the quotient.
  std::vector<BigInt> free_coordinates(const SparseVec& v) const;
  /// Coordinates in the torsion summands, one per invariant factor > 1,
  /// reduced into [0, d).
  std::vector<BigInt> torsion_coordinates(const SparseVec& v) const;
  /// True iff v lies in L.
  bool contains(const SparseVec& v) const;

  /// A vector whose class is the j-th free basis element.
  SparseVec representative(std::size_t j) const;

  /// Echelon basis of L as rows of a dense matrix.
  ZMatrix lattice_basis() const;

  /// Cokernel structure of the ambient x rank matrix whose columns are the
  /// echelon basis vectors.
  ZQuotientStructure structure() const;

  nlohmann::json to_json() const;
  static Cokernel from_json(const nlohmann::json& j);

 private:
  void finalize();
  std::vector<BigInt> left_image(const SparseVec& v) const;

  std::size_t ambient_ = 0;
  std::vector<SparseVec> basis_;     // echelon rows, increasing leading index
  std::vector<std::size_t> pivots_;  // leading index of each basis row
  std::vector<BigInt> factors_;
  std::size_t free_rank_ = 0;

  bool unit_pivots_ = true;
  std::vector<std::size_t> free_columns_;  // unit-pivot case
  std::vector<long> column_role_;          // >=0 free slot, <0: -(basis row)-1

  // General case: SNF of the transposed basis with left transform + inverse.
  std::optional<ZQuotientStructure> snf_;
};

}  // namespace petcoh
