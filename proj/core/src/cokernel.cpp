#include "petcoh/cokernel.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace petcoh {

void sparse_axpy(SparseVec& v, const BigInt& q, const SparseVec& w) {
  if (sgn(q) == 0 || w.empty()) return;
  SparseVec out;
  out.reserve(v.size() + w.size());
  auto a = v.begin();
  auto b = w.begin();
  while (a != v.end() || b != w.end()) {
    if (b == w.end() || (a != v.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == v.end() || b->first < a->first) {
      out.emplace_back(b->first, q * b->second);
      ++b;
    } else {
      BigInt s = a->second + q * b->second;
      if (sgn(s) != 0) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  v = std::move(out);
}

namespace {

void negate(SparseVec& v) {
  for (auto& [i, x] : v) x = -x;
}

const BigInt* entry_at(const SparseVec& v, std::size_t col) {
  auto it = std::lower_bound(v.begin(), v.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  return (it != v.end() && it->first == col) ? &it->second : nullptr;
}

// Incremental echelon form: one row per leading column.
class EchelonBuilder {
 public:
  explicit EchelonBuilder(std::size_t ambient) : row_of_col_(ambient, -1) {}

  void insert(SparseVec v) {
    while (!v.empty()) {
      const std::size_t c = v.front().first;
      const long k = row_of_col_[c];
      if (k < 0) {
        if (sgn(v.front().second) < 0) negate(v);
        row_of_col_[c] = static_cast<long>(rows_.size());
        rows_.push_back(std::move(v));
        return;
      }
      SparseVec& p = rows_[static_cast<std::size_t>(k)];
      const BigInt a = p.front().second;
      const BigInt b = v.front().second;
      if (mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
        BigInt q;
        mpz_divexact(q.get_mpz_t(), b.get_mpz_t(), a.get_mpz_t());
        sparse_axpy(v, -q, p);
      } else if (mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) {
        if (sgn(v.front().second) < 0) negate(v);
        std::swap(p, v);
      } else {
        BigInt g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        SparseVec np;
        sparse_axpy(np, s, p);
        sparse_axpy(np, t, v);
        SparseVec nv;
        sparse_axpy(nv, BigInt(a / g), v);
        sparse_axpy(nv, BigInt(-b / g), p);
        p = std::move(np);
        v = std::move(nv);
      }
    }
  }

  // Rows sorted by leading column, entries above each pivot reduced into [0, pivot).
  std::vector<SparseVec> hermite() && {
    std::sort(rows_.begin(), rows_.end(),
              [](const SparseVec& x, const SparseVec& y) { return x.front().first < y.front().first; });
    BigInt q;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const std::size_t c = rows_[i].front().first;
      const BigInt& h = rows_[i].front().second;
      for (std::size_t k = 0; k < i; ++k) {
        const BigInt* e = entry_at(rows_[k], c);
        if (!e) continue;
        mpz_fdiv_q(q.get_mpz_t(), e->get_mpz_t(), h.get_mpz_t());
        if (sgn(q) != 0) sparse_axpy(rows_[k], BigInt(-q), rows_[i]);
      }
    }
    return std::move(rows_);
  }

 private:
  std::vector<long> row_of_col_;
  std::vector<SparseVec> rows_;
};

}  // namespace

Cokernel Cokernel::from_generators(std::size_t ambient, std::vector<SparseVec> generators) {
  EchelonBuilder builder(ambient);
  for (auto& g : generators) {
    for (const auto& [i, x] : g) {
      if (i >= ambient) throw std::out_of_range("generator index beyond ambient dimension");
      if (sgn(x) == 0) throw std::invalid_argument("sparse generator holds an explicit zero");
    }
    builder.insert(std::move(g));
  }
  Cokernel k;
  k.ambient_ = ambient;
  k.basis_ = std::move(builder).hermite();
  k.finalize();
  return k;
}

void Cokernel::finalize() {
  pivots_.clear();
  for (const auto& row : basis_) pivots_.push_back(row.front().first);
  unit_pivots_ = std::all_of(basis_.begin(), basis_.end(),
                             [](const SparseVec& r) { return r.front().second == 1; });
  free_columns_.clear();
  column_role_.assign(ambient_, 0);
  snf_.reset();
  if (unit_pivots_) {
    for (std::size_t k = 0; k < basis_.size(); ++k)
      column_role_[pivots_[k]] = -static_cast<long>(k) - 1;
    for (std::size_t c = 0; c < ambient_; ++c) {
      if (column_role_[c] < 0) continue;
      column_role_[c] = static_cast<long>(free_columns_.size());
      free_columns_.push_back(c);
    }
    factors_.assign(basis_.size(), BigInt(1));
    free_rank_ = free_columns_.size();
    return;
  }
  ZMatrix a(ambient_, basis_.size());
  for (std::size_t k = 0; k < basis_.size(); ++k)
    for (const auto& [i, x] : basis_[k]) a(i, k) = x;
  snf_ = smith_normal_form(a, {.left = true, .right = false, .left_inverse = true});
  factors_ = snf_->invariant_factors;
  free_rank_ = snf_->free_rank;
}

std::vector<BigInt> Cokernel::torsion() const {
  std::vector<BigInt> t;
  for (const auto& d : factors_)
    if (d != 1) t.push_back(d);
  return t;
}

std::vector<BigInt> Cokernel::left_image(const SparseVec& v) const {
  const ZMatrix& u = snf_->left_transform;
  std::vector<BigInt> out(ambient_);
  for (const auto& [i, x] : v)
    for (std::size_t r = 0; r < ambient_; ++r)
      if (sgn(u(r, i)) != 0) out[r] += u(r, i) * x;
  return out;
}

std::vector<BigInt> Cokernel::free_coordinates(const SparseVec& v) const {
  std::vector<BigInt> coords(free_rank_);
  if (unit_pivots_) {
    for (const auto& [i, x] : v) {
      if (i >= ambient_) throw std::out_of_range("vector index beyond ambient dimension");
      const long role = column_role_[i];
      if (role >= 0) {
        coords[static_cast<std::size_t>(role)] += x;
        continue;
      }
      const SparseVec& row = basis_[static_cast<std::size_t>(-role - 1)];
      for (auto it = std::next(row.begin()); it != row.end(); ++it)
        coords[static_cast<std::size_t>(column_role_[it->first])] -= x * it->second;
    }
    return coords;
  }
  auto u = left_image(v);
  const std::size_t r = factors_.size();
  for (std::size_t j = 0; j < free_rank_; ++j) coords[j] = std::move(u[r + j]);
  return coords;
}

std::vector<BigInt> Cokernel::torsion_coordinates(const SparseVec& v) const {
  std::vector<BigInt> out;
  if (unit_pivots_) return out;
  auto u = left_image(v);
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] == 1) continue;
    BigInt m;
    mpz_fdiv_r(m.get_mpz_t(), u[i].get_mpz_t(), factors_[i].get_mpz_t());
    out.push_back(std::move(m));
  }
  return out;
}

bool Cokernel::contains(const SparseVec& v) const {
  auto is_zero = [](const BigInt& x) { return sgn(x) == 0; };
  auto f = free_coordinates(v);
  auto t = torsion_coordinates(v);
  return std::all_of(f.begin(), f.end(), is_zero) && std::all_of(t.begin(), t.end(), is_zero);
}

SparseVec Cokernel::representative(std::size_t j) const {
  if (j >= free_rank_) throw std::out_of_range("free basis index out of range");
  if (unit_pivots_) return {{free_columns_[j], BigInt(1)}};
  SparseVec out;
  const std::size_t col = factors_.size() + j;
  for (std::size_t r = 0; r < ambient_; ++r)
    if (sgn(snf_->left_inverse(r, col)) != 0) out.emplace_back(r, snf_->left_inverse(r, col));
  return out;
}

ZMatrix Cokernel::lattice_basis() const {
  ZMatrix h(basis_.size(), ambient_);
  for (std::size_t k = 0; k < basis_.size(); ++k)
    for (const auto& [i, x] : basis_[k]) h(k, i) = x;
  return h;
}

ZQuotientStructure Cokernel::structure() const {
  if (!unit_pivots_) {
    return smith_normal_form(lattice_basis().transpose(),
                             {.left = true, .right = true, .left_inverse = true});
  }
  const std::size_t r = basis_.size();
  ZQuotientStructure s;
  s.rows = ambient_;
  s.cols = r;
  s.invariant_factors = factors_;
  s.free_rank = free_rank_;
  s.left_transform = ZMatrix(ambient_, ambient_);
  s.left_inverse = ZMatrix(ambient_, ambient_);
  s.right_transform = ZMatrix::identity(r);
  for (std::size_t k = 0; k < r; ++k) {
    s.left_transform(k, pivots_[k]) = 1;
    for (const auto& [i, x] : basis_[k]) s.left_inverse(i, k) = x;
  }
  for (std::size_t j = 0; j < free_columns_.size(); ++j) {
    const std::size_t f = free_columns_[j];
    s.left_transform(r + j, f) = 1;
    s.left_inverse(f, r + j) = 1;
    for (std::size_t k = 0; k < r; ++k) {
      const BigInt* e = entry_at(basis_[k], f);
      if (e) s.left_transform(r + j, pivots_[k]) = -*e;
    }
  }
  return s;
}

nlohmann::json Cokernel::to_json() const {
  auto rows = nlohmann::json::array();
  for (const auto& row : basis_) {
    auto jr = nlohmann::json::array();
    for (const auto& [i, x] : row) jr.push_back(nlohmann::json::array({i, x.get_str()}));
    rows.push_back(std::move(jr));
  }
  auto factors = nlohmann::json::array();
  for (const auto& d : factors_) factors.push_back(d.get_str());
  return {{"ambient", ambient_},
          {"basis", std::move(rows)},
          {"invariant_factors", std::move(factors)},
          {"free_rank", free_rank_}};
}

Cokernel Cokernel::from_json(const nlohmann::json& j) {
  Cokernel k;
  k.ambient_ = j.at("ambient").get<std::size_t>();
  std::size_t last = 0;
  for (const auto& jr : j.at("basis")) {
    SparseVec row;
    for (const auto& e : jr) {
      const auto idx = e.at(0).get<std::size_t>();
      if (idx >= k.ambient_ || (!row.empty() && idx <= row.back().first))
        throw std::invalid_argument("malformed cokernel basis row");
      row.emplace_back(idx, BigInt(e.at(1).get<std::string>()));
    }
    if (row.empty() || (!k.basis_.empty() && row.front().first <= last))
      throw std::invalid_argument("cokernel basis is not in echelon form");
    last = row.front().first;
    k.basis_.push_back(std::move(row));
  }
  k.finalize();
  if (k.free_rank_ != j.at("free_rank").get<std::size_t>())
    throw std::invalid_argument("cokernel JSON free rank disagrees with its basis");
  return k;
}

}  // namespace petcoh
