#pragma once

// Integral cohomology of the permutohedral variety from the braid fan.
//
// Rays are the proper nonempty subsets S of [n], cones are chains of subsets.
// Degree d is spanned by chain monomials (products of rays whose support is a
// chain); the linear relations theta_i, i = 1..n-1, are multiplied by every
// chain monomial of degree d-1 and projected back onto chain support.
// S_n acts by S -> w(S).

#include "petcoh/cache.hpp"
#include "petcoh/cokernel.hpp"
#include "petcoh/errors.hpp"
#include "petcoh/intpoly.hpp"

#include <nlohmann/json.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace petcoh {

inline constexpr int kMaxFanN = 6;

struct Ray {
  int n = 0;
  std::uint32_t mask = 0;  // bit i-1 set iff i in S

  std::size_t index() const { return mask - 1; }
  std::vector<int> members() const;
  std::string to_string() const;
  auto operator<=>(const Ray&) const = default;
};

/// All 2^n - 2 rays in increasing bitmask order; 2 <= n <= 6.
std::vector<Ray> enumerate_rays(int n);

/// Bitmask of a set of members of [n].
std::uint32_t subset_mask(std::initializer_list<int> members);

/// True iff the subsets are totally ordered by inclusion.
bool is_chain(std::span<const std::uint32_t> supports);

/// Applies a permutation in one-line notation (values 1..n) to a subset.
std::uint32_t permute_mask(std::uint32_t mask, std::span<const int> w);

class ChainMonomial {
 public:
  ChainMonomial(int n, std::vector<std::uint32_t> rays);  // any order, repeats allowed

  int n() const { return n_; }
  std::size_t degree() const { return rays_.size(); }
  const std::vector<std::uint32_t>& rays() const { return rays_; }
  std::vector<std::uint32_t> support() const;
  bool is_chain() const;

  ChainMonomial times(std::uint32_t ray) const;
  ChainMonomial permuted(std::span<const int> w) const;
  std::string to_string() const;

  auto operator<=>(const ChainMonomial&) const = default;

 private:
  int n_;
  std::vector<std::uint32_t> rays_;  // sorted masks
};

/// theta_i = sum_S ([i in S] - [i+1 in S]) x_S, in 2^n - 2 variables where
/// the variable of S is numbered by its mask.
std::vector<IntPoly> linear_relations(int n);

/// Chain monomials of degree d in lexicographic order of their sorted masks.
std::vector<ChainMonomial> chain_monomials(int n, unsigned d);

/// Number of maximal chains of proper nonempty subsets.
std::size_t count_maximal_chains(int n);

/// Permutations of [n] with exactly d descents, by enumeration.
std::size_t eulerian_number(int n, unsigned d);

struct TorusGradedPiece {
  int n = 0;
  unsigned degree = 0;
  std::vector<ChainMonomial> chain_monomial_basis;
  std::vector<SparseVec> relations;  // columns of the projected relation matrix
  Cokernel cokernel;
  std::vector<ZMatrix> action_matrices;  // s_1 .. s_{n-1} on the free basis

  std::size_t betti() const { return cokernel.free_rank(); }
  std::size_t eulerian_expected() const { return eulerian_number(n, degree); }
  ZMatrix linear_relation_matrix() const;
  ZQuotientStructure structure() const { return cokernel.structure(); }
  std::size_t index_of(const ChainMonomial& m) const;

 private:
  friend TorusGradedPiece compute_torus_piece(int, unsigned, DiskCache*);
  std::map<ChainMonomial, std::size_t> index_;
};

/// Builds degree d (0 <= d <= n-1) with its action matrices, no judgement.
TorusGradedPiece compute_torus_piece(int n, unsigned d, DiskCache* cache = nullptr);

/// compute_torus_piece, then VerificationFailure on torsion or when the rank
/// differs from the Eulerian number.
TorusGradedPiece graded_cohomology(int n, unsigned d, DiskCache* cache = nullptr);

/// Matrix of w acting on the free basis of the piece; w in one-line notation.
ZMatrix sn_action_on_piece(const TorusGradedPiece& piece, std::span<const int> w);

/// Rank of the common fixed lattice of the given square matrices, computed
/// as the kernel of the stacked (A_i - I) by Smith normal form. The rational
/// rank is computed first and must agree.
std::size_t invariant_rank(std::span<const ZMatrix> actions);

struct PermfanDegreeReport {
  int n = 0;
  unsigned degree = 0;
  std::size_t betti = 0;
  std::size_t eulerian_expected = 0;
  bool torsion_free = false;
  bool with_invariants = false;
  std::size_t invariant_rank = 0;
  std::size_t binom_expected = 0;

  bool pass() const;
  /// {n, degree, betti, eulerian_expected, invariant_rank, binom_expected, pass}
  nlohmann::json to_json() const;
};

/// One report per degree 0..n-1; degrees are computed up to `jobs` at a time.
std::vector<PermfanDegreeReport> permfan_reports(int n, bool with_invariants,
                                                 DiskCache* cache = nullptr, unsigned jobs = 1);

/// Per-degree invariant ranks for n <= 5. Raises VerificationFailure unless
/// they equal C(n-1, d) and sum to 2^{n-1}.
std::vector<std::size_t> invariant_ranks(int n, DiskCache* cache = nullptr, unsigned jobs = 1);

}  // namespace petcoh
