#include "petcoh/permfan.hpp"

#include "petcoh/combinat.hpp"
#include "petcoh/parallel.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>
#include <sstream>

namespace petcoh {

namespace {

void check_n(int n) {
  if (n < 2 || n > kMaxFanN)
    throw std::out_of_range("fan computations need 2 <= n <= " + std::to_string(kMaxFanN));
}

std::uint32_t full_mask(int n) { return (std::uint32_t{1} << n) - 1; }

std::string mask_string(std::uint32_t mask) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int i = 1; mask >> (i - 1); ++i) {
    if (!(mask >> (i - 1) & 1U)) continue;
    os << (first ? "" : ",") << i;
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace

std::vector<int> Ray::members() const {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i)
    if (mask >> (i - 1) & 1U) out.push_back(i);
  return out;
}

std::string Ray::to_string() const { return mask_string(mask); }

std::vector<Ray> enumerate_rays(int n) {
  check_n(n);
  std::vector<Ray> out;
  for (std::uint32_t m = 1; m < full_mask(n); ++m) out.push_back({n, m});
  return out;
}

std::uint32_t subset_mask(std::initializer_list<int> members) {
  std::uint32_t m = 0;
  for (int i : members) {
    if (i < 1 || i > 31) throw std::out_of_range("subset member out of range");
    m |= std::uint32_t{1} << (i - 1);
  }
  return m;
}

bool is_chain(std::span<const std::uint32_t> supports) {
  std::vector<std::uint32_t> s(supports.begin(), supports.end());
  std::sort(s.begin(), s.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) < std::popcount(b) || (std::popcount(a) == std::popcount(b) && a < b);
  });
  for (std::size_t k = 1; k < s.size(); ++k)
    if ((s[k - 1] & ~s[k]) != 0) return false;
  return true;
}

std::uint32_t permute_mask(std::uint32_t mask, std::span<const int> w) {
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (mask >> i & 1U) out |= std::uint32_t{1} << (w[i] - 1);
  return out;
}

// ---------------------------------------------------------------------------

ChainMonomial::ChainMonomial(int n, std::vector<std::uint32_t> rays) : n_(n), rays_(std::move(rays)) {
  check_n(n);
  for (auto r : rays_)
    if (r == 0 || r >= full_mask(n)) throw std::invalid_argument("not a ray: " + mask_string(r));
  std::sort(rays_.begin(), rays_.end());
}

std::vector<std::uint32_t> ChainMonomial::support() const {
  std::vector<std::uint32_t> s = rays_;
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool ChainMonomial::is_chain() const {
  const auto s = support();
  return petcoh::is_chain(s);
}

ChainMonomial ChainMonomial::times(std::uint32_t ray) const {
  auto r = rays_;
  r.push_back(ray);
  return ChainMonomial(n_, std::move(r));
}

ChainMonomial ChainMonomial::permuted(std::span<const int> w) const {
  if (w.size() != static_cast<std::size_t>(n_)) throw std::invalid_argument("permutation has wrong length");
  std::vector<std::uint32_t> r;
  r.reserve(rays_.size());
  for (auto m : rays_) r.push_back(permute_mask(m, w));
  return ChainMonomial(n_, std::move(r));
}

std::string ChainMonomial::to_string() const {
  if (rays_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t k = 0; k < rays_.size(); ++k) os << (k ? "*" : "") << "x" << mask_string(rays_[k]);
  return os.str();
}

std::vector<IntPoly> linear_relations(int n) {
  check_n(n);
  const std::size_t vars = full_mask(n) - 1;
  std::vector<IntPoly> out;
  for (int i = 1; i < n; ++i) {
    IntPoly theta(vars);
    for (std::uint32_t s = 1; s < full_mask(n); ++s) {
      const int c = static_cast<int>(s >> (i - 1) & 1U) - static_cast<int>(s >> i & 1U);
      if (c != 0) theta += IntPoly::variable(vars, s) * BigInt(c);
    }
    out.push_back(std::move(theta));
  }
  return out;
}

std::vector<ChainMonomial> chain_monomials(int n, unsigned d) {
  check_n(n);
  const std::uint32_t top = full_mask(n);
  std::vector<ChainMonomial> out;
  std::vector<std::uint32_t> cur;
  // Masks are chosen in nondecreasing order; a subset has a smaller mask than
  // its supersets, so each new ray only has to contain the previous one.
  auto rec = [&](auto&& self, std::uint32_t from) -> void {
    if (cur.size() == d) {
      out.emplace_back(n, cur);
      return;
    }
    for (std::uint32_t m = from; m < top; ++m) {
      if (!cur.empty() && (cur.back() & ~m) != 0) continue;
      cur.push_back(m);
      self(self, m);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

std::size_t count_maximal_chains(int n) {
  check_n(n);
  // chains S_1 < ... < S_{n-1} with |S_k| = k
  std::size_t count = 0;
  for (const auto& m : chain_monomials(n, static_cast<unsigned>(n - 1))) {
    const auto s = m.support();
    if (s.size() != static_cast<std::size_t>(n - 1)) continue;
    bool graded = true;
    for (std::size_t k = 0; k < s.size(); ++k) graded = graded && std::popcount(s[k]) == static_cast<int>(k + 1);
    count += graded ? 1 : 0;
  }
  return count;
}

std::size_t eulerian_number(int n, unsigned d) {
  if (n < 1 || n > 10) throw std::out_of_range("eulerian_number needs 1 <= n <= 10");
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::size_t count = 0;
  do {
    unsigned descents = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) descents += w[i] > w[i + 1] ? 1U : 0U;
    count += descents == d ? 1 : 0;
  } while (std::next_permutation(w.begin(), w.end()));
  return count;
}

// ---------------------------------------------------------------------------

ZMatrix TorusGradedPiece::linear_relation_matrix() const {
  ZMatrix a(chain_monomial_basis.size(), relations.size());
  for (std::size_t c = 0; c < relations.size(); ++c)
    for (const auto& [r, x] : relations[c]) a(r, c) = x;
  return a;
}

std::size_t TorusGradedPiece::index_of(const ChainMonomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) throw std::invalid_argument("not a chain monomial of this piece: " + m.to_string());
  return it->second;
}

namespace {

SparseVec to_sparse(std::map<std::size_t, BigInt> acc) {
  SparseVec v;
  for (auto& [i, x] : acc)
    if (sgn(x) != 0) v.emplace_back(i, std::move(x));
  return v;
}

std::string relations_key(int n, unsigned d, const std::vector<SparseVec>& rels) {
  std::ostringstream os;
  os << "fan n=" << n << " d=" << d << ';';
  for (const auto& r : rels) {
    for (const auto& [i, x] : r) os << i << ':' << x.get_str() << ',';
    os << ';';
  }
  return content_hash(os.str());
}

}  // namespace

ZMatrix sn_action_on_piece(const TorusGradedPiece& piece, std::span<const int> w) {
  if (w.size() != static_cast<std::size_t>(piece.n)) throw std::invalid_argument("permutation has wrong length");
  std::vector<int> sorted(w.begin(), w.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i + 1)) throw std::invalid_argument("not a permutation");

  const std::size_t r = piece.betti();
  ZMatrix a(r, r);
  for (std::size_t j = 0; j < r; ++j) {
    std::map<std::size_t, BigInt> image;
    for (const auto& [i, x] : piece.cokernel.representative(j))
      image[piece.index_of(piece.chain_monomial_basis[i].permuted(w))] += x;
    const auto coords = piece.cokernel.free_coordinates(to_sparse(std::move(image)));
    for (std::size_t i = 0; i < r; ++i) a(i, j) = coords[i];
  }
  return a;
}

TorusGradedPiece compute_torus_piece(int n, unsigned d, DiskCache* cache) {
  check_n(n);
  if (d > static_cast<unsigned>(n - 1)) throw std::out_of_range("degree outside 0..n-1");
  TorusGradedPiece piece;
  piece.n = n;
  piece.degree = d;
  piece.chain_monomial_basis = chain_monomials(n, d);
  if (piece.chain_monomial_basis.size() > ZMatrix::kMaxDim) {
    throw SizeLimitError("degree " + std::to_string(d) + " of the fan for n=" + std::to_string(n) +
                         " has " + std::to_string(piece.chain_monomial_basis.size()) + " chain monomials");
  }
  for (std::size_t i = 0; i < piece.chain_monomial_basis.size(); ++i)
    piece.index_.emplace(piece.chain_monomial_basis[i], i);

  if (d > 0) {
    const auto thetas = linear_relations(n);
    const auto lower = chain_monomials(n, d - 1);
    for (const auto& theta : thetas) {
      for (const auto& m : lower) {
        std::map<std::size_t, BigInt> acc;
        for (const auto& [mono, c] : theta.terms()) {
          const auto e = mono.exponents();
          const auto pos = static_cast<std::size_t>(std::find(e.begin(), e.end(), 1U) - e.begin());
          const ChainMonomial prod = m.times(static_cast<std::uint32_t>(pos + 1));
          if (!prod.is_chain()) continue;  // Stanley-Reisner: non-faces vanish
          acc[piece.index_.at(prod)] += c;
        }
        auto v = to_sparse(std::move(acc));
        if (!v.empty()) piece.relations.push_back(std::move(v));
      }
    }
  }

  const std::size_t ambient = piece.chain_monomial_basis.size();
  std::optional<Cokernel> cached;
  const std::string kind = "fan-n" + std::to_string(n);
  const std::string key = cache ? relations_key(n, d, piece.relations) : std::string();
  if (cache) {
    if (auto hit = cache->load(kind, key)) {
      try {
        cached = Cokernel::from_json(*hit);
        if (cached->ambient() != ambient) cached.reset();
      } catch (const std::exception&) {
        cached.reset();
      }
    }
  }
  if (cached) {
    piece.cokernel = std::move(*cached);
  } else {
    piece.cokernel = Cokernel::from_generators(ambient, piece.relations);
    if (cache) cache->store(kind, key, piece.cokernel.to_json());
  }

  std::vector<int> s(static_cast<std::size_t>(n));
  for (int i = 1; i < n; ++i) {
    std::iota(s.begin(), s.end(), 1);
    std::swap(s[static_cast<std::size_t>(i - 1)], s[static_cast<std::size_t>(i)]);
    piece.action_matrices.push_back(sn_action_on_piece(piece, s));
  }
  return piece;
}

TorusGradedPiece graded_cohomology(int n, unsigned d, DiskCache* cache) {
  TorusGradedPiece piece = compute_torus_piece(n, d, cache);
  const std::string where = "degree " + std::to_string(d) + " of the fan cohomology for n=" + std::to_string(n);
  if (!piece.cokernel.torsion_free()) throw VerificationFailure(where + " has torsion");
  if (piece.betti() != piece.eulerian_expected()) {
    throw VerificationFailure(where + " has rank " + std::to_string(piece.betti()) + ", expected " +
                              std::to_string(piece.eulerian_expected()));
  }
  return piece;
}

std::size_t invariant_rank(std::span<const ZMatrix> actions) {
  if (actions.empty()) throw std::invalid_argument("no action matrices");
  const std::size_t r = actions.front().cols();
  if (r == 0) return 0;
  ZMatrix stacked(actions.size() * r, r);
  for (std::size_t k = 0; k < actions.size(); ++k) {
    const ZMatrix& a = actions[k];
    if (a.rows() != r || a.cols() != r) throw std::invalid_argument("action matrices must be square of one size");
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) stacked(k * r + i, j) = a(i, j) - (i == j ? 1 : 0);
  }
  const std::size_t q_rank = rank(stacked);
  const std::size_t z_rank = smith_normal_form(stacked, {.left = false, .right = false}).rank();
  if (q_rank != z_rank) throw std::logic_error("rational and integral ranks disagree");
  return r - z_rank;
}

bool PermfanDegreeReport::pass() const {
  return torsion_free && betti == eulerian_expected && (!with_invariants || invariant_rank == binom_expected);
}

nlohmann::json PermfanDegreeReport::to_json() const {
  nlohmann::json j = {{"n", std::to_string(n)},
                      {"degree", std::to_string(degree)},
                      {"betti", std::to_string(betti)},
                      {"eulerian_expected", std::to_string(eulerian_expected)}};
  if (with_invariants) {
    j["invariant_rank"] = std::to_string(invariant_rank);
    j["binom_expected"] = std::to_string(binom_expected);
  } else {
    j["invariant_rank"] = nullptr;
    j["binom_expected"] = nullptr;
  }
  j["pass"] = pass();
  return j;
}

std::vector<PermfanDegreeReport> permfan_reports(int n, bool with_invariants, DiskCache* cache, unsigned jobs) {
  check_n(n);
  std::vector<PermfanDegreeReport> out(static_cast<std::size_t>(n));
  parallel_for(out.size(), jobs, [&](std::size_t d) {
    const TorusGradedPiece piece = compute_torus_piece(n, static_cast<unsigned>(d), cache);
    PermfanDegreeReport& r = out[d];
    r.n = n;
    r.degree = static_cast<unsigned>(d);
    r.betti = piece.betti();
    r.eulerian_expected = piece.eulerian_expected();
    r.torsion_free = piece.cokernel.torsion_free();
    r.with_invariants = with_invariants;
    r.binom_expected = binomial(static_cast<unsigned long>(n - 1), d).get_ui();
    if (with_invariants) r.invariant_rank = invariant_rank(piece.action_matrices);
  });
  return out;
}

std::vector<std::size_t> invariant_ranks(int n, DiskCache* cache, unsigned jobs) {
  if (n < 2 || n > 5) throw std::out_of_range("invariant_ranks needs 2 <= n <= 5");
  const auto reports = permfan_reports(n, true, cache, jobs);
  std::vector<std::size_t> ranks;
  std::size_t total = 0;
  for (const auto& r : reports) {
    ranks.push_back(r.invariant_rank);
    total += r.invariant_rank;
    if (r.invariant_rank != r.binom_expected) {
      throw VerificationFailure("invariant rank in degree " + std::to_string(r.degree) + " for n=" +
                                std::to_string(n) + " is " + std::to_string(r.invariant_rank) +
                                ", expected " + std::to_string(r.binom_expected));
    }
  }
  if (total != (std::size_t{1} << (n - 1)))
    throw VerificationFailure("total invariant rank " + std::to_string(total) + " differs from 2^(n-1)");
  return ranks;
}

}  // namespace petcoh
