#include "petcoh/quotient_oracle.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <filesystem>

using namespace petcoh;

namespace {

IntPoly y(std::size_t n, std::size_t i) { return IntPoly::variable(n, i); }

std::vector<BigInt> unit(std::size_t size, std::size_t at) {
  std::vector<BigInt> v(size, 0);
  v[at] = 1;
  return v;
}

}  // namespace

TEST(Generators, NFour) {
  const auto g = build_generators(4);
  const std::size_t n = 4;
  ASSERT_EQ(g.gens_Iprime.size(), 4U);
  EXPECT_EQ(g.gens_Iprime[0], (y(n, 1) - y(n, 2)) * y(n, 1));
  EXPECT_EQ(g.gens_Iprime[1], (y(n, 2) - y(n, 3)) * (y(n, 1) + y(n, 2)));
  EXPECT_EQ(g.gens_Iprime[2], (y(n, 2) - y(n, 3)) * y(n, 1) * y(n, 2));
  EXPECT_EQ(g.gens_Iprime[3], (y(n, 3) - y(n, 4)) * (y(n, 1) + y(n, 2) + y(n, 3)));
  ASSERT_EQ(g.gens_I.size(), 4U);
  for (std::size_t k = 1; k <= 4; ++k) EXPECT_EQ(g.gens_I[k - 1], oracle::elementary(4, 1, 4, k));
}

TEST(Generators, NTwoAndCounts) {
  const auto g = build_generators(2);
  EXPECT_EQ(g.gens_I, (std::vector<IntPoly>{y(2, 1) + y(2, 2), y(2, 1) * y(2, 2)}));
  EXPECT_EQ(g.gens_Iprime, (std::vector<IntPoly>{(y(2, 1) - y(2, 2)) * y(2, 1)}));
  EXPECT_EQ(build_generators(5).gens_Iprime.size(), 6U);
  for (int n = 2; n <= 8; ++n) EXPECT_EQ(build_generators(n).all(), oracle::ideal_generators(static_cast<std::size_t>(n)));
  EXPECT_EQ(build_generators(4).content_key(), build_generators(4).content_key());
  EXPECT_NE(build_generators(4).content_key(), build_generators(5).content_key());
}

TEST(GradedPiece, SmallExamples) {
  const auto p31 = graded_quotient(3, 1);
  EXPECT_EQ(p31.rank(), 2U);
  EXPECT_TRUE(p31.cokernel.torsion_free());
  EXPECT_EQ(graded_quotient(3, 2).rank(), 1U);
  EXPECT_EQ(graded_quotient(4, 2).rank(), 3U);
  EXPECT_EQ(graded_quotient(4, 4).rank(), 0U);
  const auto p21 = graded_quotient(2, 1);
  EXPECT_EQ(p21.rank(), 1U);
  // y2 = -y1 in degree 1
  EXPECT_TRUE(p21.cokernel.contains(p21.monomial_coordinates(y(2, 1) + y(2, 2))));
}

// Frozen values from an independent computer-algebra run.
TEST(GradedPiece, FrozenRanks) {
  const std::vector<std::vector<std::size_t>> expected = {
      {1, 1, 0}, {1, 2, 1, 0}, {1, 3, 3, 1, 0}, {1, 4, 6, 4, 1, 0}};
  for (int n = 2; n <= 5; ++n)
    for (unsigned d = 0; d <= static_cast<unsigned>(n); ++d) {
      const auto piece = compute_graded_piece(n, d);
      EXPECT_EQ(piece.rank(), expected[static_cast<std::size_t>(n - 2)][d]) << n << " " << d;
      EXPECT_TRUE(piece.cokernel.torsion_free());
      EXPECT_TRUE(piece.matches_expectation());
    }
}

TEST(GradedPiece, RanksMatchRationalElimination) {
  for (int n = 2; n <= 4; ++n)
    for (unsigned d = 0; d <= 4; ++d) {
      const auto piece = compute_graded_piece(n, d);
      const ZMatrix rel = piece.relation_matrix();
      EXPECT_EQ(piece.rank(), rel.rows() - oracle::rational_rank(rel));
      EXPECT_EQ(piece.monomial_basis.size(), oracle::all_monomials(static_cast<std::size_t>(n), d).size());
    }
}

TEST(GradedPiece, ReportFields) {
  const auto r = compute_graded_piece(4, 2).report();
  EXPECT_EQ(r["rank"], "3");
  EXPECT_EQ(r["expected_rank"], "3");
  EXPECT_EQ(r["n"], "4");
  EXPECT_EQ(r["d"], "2");
  EXPECT_TRUE(r["invariant_factors"].empty());
  EXPECT_TRUE(r["pass"].get<bool>());
}

TEST(GradedPiece, StructureIsConsistent) {
  const auto piece = compute_graded_piece(4, 2);
  const auto s = piece.structure();
  EXPECT_EQ(s.free_rank, 3U);
  EXPECT_TRUE(s.torsion_free());
}

TEST(GradedPiece, RejectsForeignPolynomials) {
  const auto piece = compute_graded_piece(3, 2);
  EXPECT_THROW(piece.monomial_coordinates(y(3, 1)), std::invalid_argument);
  EXPECT_THROW(piece.monomial_coordinates(y(4, 1) * y(4, 1)), std::invalid_argument);
}

TEST(PiBasis, CertifiedForSmallN) {
  for (int n = 2; n <= 5; ++n)
    for (unsigned d = 0; d <= static_cast<unsigned>(n); ++d) {
      const auto piece = compute_graded_piece(n, d);
      EXPECT_TRUE(piece.pi_basis.is_lattice_basis) << n << " " << d;
      EXPECT_EQ(piece.pi_basis.subsets.size(), piece.rank());
      if (piece.rank() > 0) {
        EXPECT_EQ(abs(determinant(piece.pi_basis.images)), 1);
      }
    }
}

TEST(CoordsInPiBasis, Examples) {
  for (int n = 2; n <= 5; ++n)
    for (unsigned d = 0; d < static_cast<unsigned>(n); ++d) {
      const auto piece = compute_graded_piece(n, d);
      for (std::size_t c = 0; c < piece.pi_basis.subsets.size(); ++c)
        EXPECT_EQ(coords_in_pi_basis(pi_to_polynomial(piece.pi_basis.subsets[c]), piece),
                  unit(piece.pi_basis.subsets.size(), c));
    }
  const auto p32 = compute_graded_piece(3, 2);
  EXPECT_EQ(coords_in_pi_basis(y(3, 1) * y(3, 1), p32), (std::vector<BigInt>{1}));
  const auto p43 = compute_graded_piece(4, 3);
  const std::size_t n = 4;
  EXPECT_EQ(coords_in_pi_basis((y(n, 1) + y(n, 2)) * y(n, 1) * (y(n, 1) + y(n, 2) + y(n, 3)), p43),
            (std::vector<BigInt>{6}));
  EXPECT_THROW(coords_in_pi_basis(y(4, 1), p43), std::invalid_argument);
}

TEST(Oracle, FrozenSixTimesTopInterval) {
  // (y1+y2) y1 (y1+y2+y3) - 6 e3(y1,y2,y3) lies in the ideal, the product does not.
  const std::size_t n = 4;
  const IntPoly prod = (y(n, 1) + y(n, 2)) * y(n, 1) * (y(n, 1) + y(n, 2) + y(n, 3));
  EXPECT_TRUE(verify_identity(prod, elementary_symmetric(n, 3, 3) * BigInt(6), 4));
  EXPECT_FALSE(verify_identity(prod, IntPoly(n), 4));
}

TEST(Oracle, VerifyIdentityExamples) {
  EXPECT_FALSE(verify_identity(y(3, 1), y(3, 2), 3));
  EXPECT_TRUE(verify_identity((y(4, 3) - y(4, 4)) * elementary_symmetric(4, 3, 3), IntPoly(4), 4));
  for (std::size_t b = 1; b <= 4; ++b) {
    IntPoly prod = IntPoly::constant(5, 1);
    for (std::size_t i = 1; i <= b; ++i) prod = prod * elementary_symmetric(5, i, 1);
    EXPECT_TRUE(verify_identity(elementary_symmetric(5, b, b) * oracle::fact(static_cast<unsigned>(b)), prod, 5));
  }
  EXPECT_THROW(verify_identity(y(3, 1), y(4, 1), 3), std::invalid_argument);
}

TEST(Oracle, ToPiClassMatchesEngine) {
  QuotientOracle oracle(4);
  EXPECT_EQ(oracle.to_pi_class(y(4, 1) * y(4, 1) + y(4, 4) + IntPoly::constant(4, 2)),
            PetClass::basis(SubsetJ::from_members(4, {1, 2})) - PetClass::basis(SubsetJ::from_members(4, {3})) +
                PetClass::one(4) * BigInt(2));
  for (const auto& g : oracle.generators().all()) EXPECT_TRUE(oracle.to_pi_class(g).is_zero());
  for (const auto& j : all_subsets(4))
    for (const auto& k : all_subsets(4))
      EXPECT_EQ(oracle.to_pi_class(pi_to_polynomial(j) * pi_to_polynomial(k)), mult_basis(j, k));
}

TEST(Oracle, PrecomputeWithThreadsMatchesSerial) {
  QuotientOracle threaded(5), serial(5);
  threaded.precompute(5, 4);
  for (unsigned d = 0; d <= 5; ++d) EXPECT_EQ(threaded.piece(d).cokernel.to_json(), serial.piece(d).cokernel.to_json());
}

TEST(Oracle, DiskCacheRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "petcoh-test-oracle-cache";
  std::filesystem::remove_all(dir);
  DiskCache cache(dir);
  const auto cold = compute_graded_piece(5, 3, &cache);
  EXPECT_FALSE(std::filesystem::is_empty(dir));
  const auto warm = compute_graded_piece(5, 3, &cache);
  EXPECT_EQ(cold.cokernel.to_json(), warm.cokernel.to_json());
  EXPECT_EQ(warm.rank(), 4U);
  EXPECT_TRUE(warm.pi_basis.is_lattice_basis);
  std::filesystem::remove_all(dir);
}

TEST(Oracle, DetectsDeliberateMisstatement) {
  // the true coefficient passes, its neighbours do not
  const IntPoly prod = pi_to_polynomial(SubsetJ::from_members(4, {1, 3})) * pi_to_polynomial(SubsetJ::from_members(4, {2}));
  const auto coords = coords_in_pi_basis(prod, compute_graded_piece(4, 3));
  ASSERT_EQ(coords.size(), 1U);
  const IntPoly top = elementary_symmetric(4, 3, 3);
  EXPECT_TRUE(verify_identity(prod, top * coords[0], 4));
  EXPECT_FALSE(verify_identity(prod, top * BigInt(coords[0] + 1), 4));
  EXPECT_FALSE(verify_identity(prod, top * BigInt(coords[0] - 1), 4));
}
