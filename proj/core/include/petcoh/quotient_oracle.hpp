#pragma once

// Brute-force model of M = Z[y_1..y_n]/(I + I') one degree at a time.
//
// Degree d of the quotient is Z^{monomials of degree d} modulo the span of
// g * m for every generator g (of degree e <= d) and every monomial m of
// degree d - e. No rewriting system is involved, so each graded piece is
// exact by construction; everything in petring is judged against it.

#include "petcoh/cache.hpp"
#include "petcoh/cokernel.hpp"
#include "petcoh/combinat.hpp"
#include "petcoh/errors.hpp"
#include "petcoh/intpoly.hpp"
#include "petcoh/petring.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace petcoh {

struct IdealGenerators {
  int n = 0;
  std::vector<IntPoly> gens_I;       // e_k(y_1..y_n), 1 <= k <= n
  std::vector<IntPoly> gens_Iprime;  // (y_i - y_{i+1}) e_k(y_1..y_i), 1 <= k <= min(i, n-i)

  std::size_t count() const { return gens_I.size() + gens_Iprime.size(); }
  std::vector<IntPoly> all() const;
  nlohmann::json to_json() const;
  /// SHA-256 of the canonical JSON of the generator list.
  std::string content_key() const;
};

IdealGenerators build_generators(int n);

/// Images of {pi_J : |J| = d} in the free part of a graded piece and the
/// Smith form of that change of basis.
struct PiBasisCertificate {
  std::vector<SubsetJ> subsets;   // canonical order
  ZMatrix images;                 // free_rank x |subsets|, column per subset
  ZQuotientStructure snf;         // of `images`
  bool is_lattice_basis = false;  // square, every invariant factor 1
  ZMatrix inverse;                // images^{-1} when is_lattice_basis
};

struct GradedPiece {
  int n = 0;
  unsigned degree = 0;
  std::vector<Monomial> monomial_basis;  // descending graded-lex
  std::vector<SparseVec> relations;      // columns of the relation matrix
  Cokernel cokernel;
  PiBasisCertificate pi_basis;

  std::size_t rank() const { return cokernel.free_rank(); }
  std::vector<BigInt> invariant_factors() const { return cokernel.invariant_factors(); }
  std::size_t expected_rank() const;
  bool matches_expectation() const;

  /// Monomial coordinates of a polynomial that is homogeneous of this degree.
  SparseVec monomial_coordinates(const IntPoly& p) const;

  /// Dense monomials x relations matrix.
  ZMatrix relation_matrix() const;
  ZQuotientStructure structure() const { return cokernel.structure(); }

  /// {n, d, rank, invariant_factors, expected_rank, pass}
  nlohmann::json report() const;

 private:
  friend GradedPiece compute_graded_piece(int, unsigned, DiskCache*);
  std::map<Monomial, std::size_t, GrLexGreater> index_;
};

/// Builds the degree-d piece without judging it.
GradedPiece compute_graded_piece(int n, unsigned d, DiskCache* cache = nullptr);

/// compute_graded_piece, then raises VerificationFailure on torsion or when
/// the rank differs from C(n-1, d) (zero above degree n-1).
GradedPiece graded_quotient(int n, unsigned d, DiskCache* cache = nullptr);

/// Integer coordinates of a degree-d homogeneous p in the pi-basis
/// {pi_J : |J| = d}. Raises VerificationFailure when the pi-classes are not a
/// lattice basis of the piece or when p has no integral coordinates.
std::vector<BigInt> coords_in_pi_basis(const IntPoly& p, const GradedPiece& piece);

/// Memoizing front end for one n: pieces are computed once (optionally
/// backed by the disk cache) and shared between threads.
class QuotientOracle {
 public:
  explicit QuotientOracle(int n, DiskCache* cache = nullptr);

  int n() const { return n_; }
  const IdealGenerators& generators() const { return gens_; }
  const GradedPiece& piece(unsigned d);

  /// Computes the given degrees, up to `jobs` at a time.
  void precompute(unsigned max_degree, unsigned jobs);

  /// The class of an arbitrary polynomial, as a combination of pi_J.
  PetClass to_pi_class(const IntPoly& p);
  /// p == q in M, compared degree by degree.
  bool verify_identity(const IntPoly& p, const IntPoly& q);

 private:
  int n_;
  DiskCache* cache_;
  IdealGenerators gens_;
  std::mutex mutex_;
  std::map<unsigned, std::shared_ptr<const GradedPiece>> pieces_;
};

/// Single-shot congruence test p == q mod I + I'.
bool verify_identity(const IntPoly& p, const IntPoly& q, int n);

}  // namespace petcoh
