#include "petcoh/quotient_oracle.hpp"

#include "petcoh/parallel.hpp"

#include <algorithm>
#include <string>

namespace petcoh {

std::vector<IntPoly> IdealGenerators::all() const {
  std::vector<IntPoly> out = gens_I;
  out.insert(out.end(), gens_Iprime.begin(), gens_Iprime.end());
  return out;
}

nlohmann::json IdealGenerators::to_json() const {
  auto jI = nlohmann::json::array();
  for (const auto& g : gens_I) jI.push_back(g.to_json());
  auto jIp = nlohmann::json::array();
  for (const auto& g : gens_Iprime) jIp.push_back(g.to_json());
  return {{"n", n}, {"I", std::move(jI)}, {"Iprime", std::move(jIp)}};
}

std::string IdealGenerators::content_key() const { return content_hash(to_json().dump()); }

IdealGenerators build_generators(int n) {
  SubsetJ::empty(n);  // validates 2 <= n <= cap
  const auto un = static_cast<std::size_t>(n);
  IdealGenerators g;
  g.n = n;
  for (std::size_t k = 1; k <= un; ++k) g.gens_I.push_back(elementary_symmetric(un, un, k));
  for (std::size_t i = 1; i < un; ++i) {
    const IntPoly diff = IntPoly::variable(un, i) - IntPoly::variable(un, i + 1);
    for (std::size_t k = 1; k <= std::min(i, un - i); ++k)
      g.gens_Iprime.push_back(diff * elementary_symmetric(un, i, k));
  }
  return g;
}

// ---------------------------------------------------------------------------

std::size_t GradedPiece::expected_rank() const {
  if (degree > static_cast<unsigned>(n - 1)) return 0;
  return binomial(static_cast<unsigned long>(n - 1), degree).get_ui();
}

bool GradedPiece::matches_expectation() const {
  return cokernel.torsion_free() && rank() == expected_rank();
}

SparseVec GradedPiece::monomial_coordinates(const IntPoly& p) const {
  if (p.ambient() != static_cast<std::size_t>(n))
    throw std::invalid_argument("polynomial lives in a different number of variables");
  SparseVec v;
  for (const auto& [m, c] : p.terms()) {
    auto it = index_.find(m);
    if (it == index_.end())
      throw std::invalid_argument("polynomial is not homogeneous of degree " + std::to_string(degree));
    v.emplace_back(it->second, c);
  }
  std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return v;
}

ZMatrix GradedPiece::relation_matrix() const {
  ZMatrix a(monomial_basis.size(), relations.size());
  for (std::size_t c = 0; c < relations.size(); ++c)
    for (const auto& [r, x] : relations[c]) a(r, c) = x;
  return a;
}

nlohmann::json GradedPiece::report() const {
  auto factors = nlohmann::json::array();
  for (const auto& f : cokernel.invariant_factors())
    if (f != 1) factors.push_back(f.get_str());
  return {{"n", std::to_string(n)},
          {"d", std::to_string(degree)},
          {"rank", std::to_string(rank())},
          {"invariant_factors", std::move(factors)},
          {"expected_rank", std::to_string(expected_rank())},
          {"pass", matches_expectation()}};
}

namespace {

PiBasisCertificate certify_pi_basis(const GradedPiece& piece) {
  PiBasisCertificate cert;
  if (piece.degree <= static_cast<unsigned>(piece.n - 1))
    cert.subsets = subsets_of_size(piece.n, static_cast<int>(piece.degree));
  const std::size_t r = piece.rank();
  cert.images = ZMatrix(r, cert.subsets.size());
  for (std::size_t c = 0; c < cert.subsets.size(); ++c) {
    auto coords = piece.cokernel.free_coordinates(piece.monomial_coordinates(pi_to_polynomial(cert.subsets[c])));
    for (std::size_t i = 0; i < r; ++i) cert.images(i, c) = coords[i];
  }
  cert.snf = smith_normal_form(cert.images);
  cert.is_lattice_basis =
      cert.images.rows() == cert.images.cols() && cert.snf.rank() == r &&
      std::all_of(cert.snf.invariant_factors.begin(), cert.snf.invariant_factors.end(),
                  [](const BigInt& d) { return d == 1; });
  if (cert.is_lattice_basis) {
    // U A V = I  =>  A^{-1} = V U
    cert.inverse = cert.snf.right_transform * cert.snf.left_transform;
  }
  return cert;
}

}  // namespace

GradedPiece compute_graded_piece(int n, unsigned d, DiskCache* cache) {
  const auto gens = build_generators(n);
  const auto un = static_cast<std::size_t>(n);
  GradedPiece piece;
  piece.n = n;
  piece.degree = d;
  piece.monomial_basis = monomials_of_degree(un, d);
  if (piece.monomial_basis.size() > ZMatrix::kMaxDim) {
    throw SizeLimitError("degree " + std::to_string(d) + " piece for n=" + std::to_string(n) +
                         " has " + std::to_string(piece.monomial_basis.size()) + " monomials");
  }
  for (std::size_t i = 0; i < piece.monomial_basis.size(); ++i)
    piece.index_.emplace(piece.monomial_basis[i], i);

  for (const auto& g : gens.all()) {
    const int e = g.degree();
    if (e < 0 || static_cast<unsigned>(e) > d) continue;
    for (const auto& m : monomials_of_degree(un, d - static_cast<unsigned>(e))) {
      auto v = piece.monomial_coordinates(g * IntPoly::term(m, 1));
      if (!v.empty()) piece.relations.push_back(std::move(v));
    }
  }

  const std::string key = gens.content_key() + "-d" + std::to_string(d);
  std::optional<Cokernel> cached;
  if (cache) {
    if (auto hit = cache->load("quotient-n" + std::to_string(n), key)) {
      try {
        cached = Cokernel::from_json(*hit);
        if (cached->ambient() != piece.monomial_basis.size()) cached.reset();
      } catch (const std::exception&) {
        cached.reset();
      }
    }
  }
  if (cached) {
    piece.cokernel = std::move(*cached);
  } else {
    piece.cokernel = Cokernel::from_generators(piece.monomial_basis.size(), piece.relations);
    if (cache) cache->store("quotient-n" + std::to_string(n), key, piece.cokernel.to_json());
  }
  piece.pi_basis = certify_pi_basis(piece);
  return piece;
}

GradedPiece graded_quotient(int n, unsigned d, DiskCache* cache) {
  GradedPiece piece = compute_graded_piece(n, d, cache);
  if (!piece.cokernel.torsion_free()) {
    std::string t;
    for (const auto& f : piece.cokernel.torsion()) t += " " + f.get_str();
    throw VerificationFailure("degree " + std::to_string(d) + " of the quotient for n=" +
                              std::to_string(n) + " has torsion:" + t);
  }
  if (piece.rank() != piece.expected_rank()) {
    throw VerificationFailure("degree " + std::to_string(d) + " of the quotient for n=" +
                              std::to_string(n) + " has rank " + std::to_string(piece.rank()) +
                              ", expected " + std::to_string(piece.expected_rank()));
  }
  return piece;
}

std::vector<BigInt> coords_in_pi_basis(const IntPoly& p, const GradedPiece& piece) {
  if (!p.is_zero() && (!p.is_homogeneous() || p.degree() != static_cast<int>(piece.degree)))
    throw std::invalid_argument("polynomial is not homogeneous of the piece's degree");
  if (!piece.pi_basis.is_lattice_basis)
    throw VerificationFailure("pi classes not a basis in degree " + std::to_string(piece.degree) +
                              " for n=" + std::to_string(piece.n));
  const SparseVec v = piece.monomial_coordinates(p);
  for (const auto& t : piece.cokernel.torsion_coordinates(v))
    if (sgn(t) != 0) throw VerificationFailure("no integral coordinates: class has torsion part");
  return piece.pi_basis.inverse.apply(piece.cokernel.free_coordinates(v));
}

// ---------------------------------------------------------------------------

QuotientOracle::QuotientOracle(int n, DiskCache* cache)
    : n_(n), cache_(cache), gens_(build_generators(n)) {}

const GradedPiece& QuotientOracle::piece(unsigned d) {
  {
    std::lock_guard lock(mutex_);
    if (auto it = pieces_.find(d); it != pieces_.end()) return *it->second;
  }
  auto computed = std::make_shared<const GradedPiece>(compute_graded_piece(n_, d, cache_));
  std::lock_guard lock(mutex_);
  auto [it, inserted] = pieces_.emplace(d, std::move(computed));
  return *it->second;
}

void QuotientOracle::precompute(unsigned max_degree, unsigned jobs) {
  parallel_for(max_degree + 1, jobs, [&](std::size_t d) { piece(static_cast<unsigned>(d)); });
}

PetClass QuotientOracle::to_pi_class(const IntPoly& p) {
  if (p.ambient() != static_cast<std::size_t>(n_))
    throw std::invalid_argument("polynomial lives in a different number of variables");
  PetClass out(n_);
  if (p.is_zero()) return out;
  for (int d = p.degree(); d >= 0; --d) {
    const IntPoly part = p.homogeneous_component(static_cast<unsigned>(d));
    if (part.is_zero()) continue;
    const auto& pc = piece(static_cast<unsigned>(d));
    const auto coords = coords_in_pi_basis(part, pc);
    for (std::size_t k = 0; k < coords.size(); ++k) out.add_term(pc.pi_basis.subsets[k], coords[k]);
  }
  return out;
}

bool QuotientOracle::verify_identity(const IntPoly& p, const IntPoly& q) {
  const IntPoly diff = p - q;
  if (diff.is_zero()) return true;
  for (int d = diff.degree(); d >= 0; --d) {
    const IntPoly part = diff.homogeneous_component(static_cast<unsigned>(d));
    if (part.is_zero()) continue;
    const auto& pc = piece(static_cast<unsigned>(d));
    if (!pc.cokernel.contains(pc.monomial_coordinates(part))) return false;
  }
  return true;
}

bool verify_identity(const IntPoly& p, const IntPoly& q, int n) {
  if (p.ambient() != static_cast<std::size_t>(n) || q.ambient() != static_cast<std::size_t>(n))
    throw std::invalid_argument("polynomials must live in n variables");
  QuotientOracle oracle(n);
  return oracle.verify_identity(p, q);
}

}  // namespace petcoh
