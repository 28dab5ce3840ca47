#include "petcoh/zlinalg.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace petcoh {

ZMatrix::ZMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  if (rows > kMaxDim || cols > kMaxDim) {
    throw SizeLimitError("matrix " + std::to_string(rows) + "x" + std::to_string(cols) +
                         " exceeds the dense size limit of " + std::to_string(kMaxDim));
  }
  data_.resize(rows * cols);
}

ZMatrix ZMatrix::identity(std::size_t n) {
  ZMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ZMatrix ZMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  const std::size_t c = rows.empty() ? 0 : rows.front().size();
  ZMatrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

ZMatrix ZMatrix::transpose() const {
  ZMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::vector<BigInt> ZMatrix::apply(const std::vector<BigInt>& x) const {
  if (x.size() != cols_) throw std::invalid_argument("vector length does not match columns");
  std::vector<BigInt> y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (sgn((*this)(i, j)) != 0 && sgn(x[j]) != 0) y[i] += (*this)(i, j) * x[j];
  return y;
}

bool ZMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const BigInt& v) { return sgn(v) == 0; });
}

ZMatrix operator*(const ZMatrix& a, const ZMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  ZMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigInt& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (sgn(b(k, j)) != 0) c(i, j) += aik * b(k, j);
    }
  return c;
}

void ZMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) swap((*this)(i, c), (*this)(j, c));
}

void ZMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) swap((*this)(r, i), (*this)(r, j));
}

nlohmann::json ZMatrix::to_json() const {
  auto entries = nlohmann::json::array();
  for (std::size_t i = 0; i < rows_; ++i) {
    auto row = nlohmann::json::array();
    for (std::size_t j = 0; j < cols_; ++j) row.push_back((*this)(i, j).get_str());
    entries.push_back(std::move(row));
  }
  return {{"rows", rows_}, {"cols", cols_}, {"entries", std::move(entries)}};
}

ZMatrix ZMatrix::from_json(const nlohmann::json& j) {
  ZMatrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
  const auto& entries = j.at("entries");
  if (entries.size() != m.rows_) throw std::invalid_argument("matrix JSON row count mismatch");
  for (std::size_t i = 0; i < m.rows_; ++i) {
    if (entries[i].size() != m.cols_) throw std::invalid_argument("matrix JSON column mismatch");
    for (std::size_t c = 0; c < m.cols_; ++c) m(i, c) = BigInt(entries[i][c].get<std::string>());
  }
  return m;
}

// ---------------------------------------------------------------------------

std::vector<BigInt> ZQuotientStructure::torsion() const {
  std::vector<BigInt> t;
  for (const auto& d : invariant_factors)
    if (d != 1) t.push_back(d);
  return t;
}

ZMatrix ZQuotientStructure::diagonal() const {
  ZMatrix d(rows, cols);
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) d(i, i) = invariant_factors[i];
  return d;
}

namespace {

nlohmann::json bigints_to_json(const std::vector<BigInt>& v) {
  auto a = nlohmann::json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

std::vector<BigInt> bigints_from_json(const nlohmann::json& j) {
  std::vector<BigInt> v;
  for (const auto& x : j) v.emplace_back(x.get<std::string>());
  return v;
}

}  // namespace

nlohmann::json ZQuotientStructure::to_json() const {
  nlohmann::json j = {{"rows", rows},
                      {"cols", cols},
                      {"invariant_factors", bigints_to_json(invariant_factors)},
                      {"free_rank", free_rank},
                      {"left_transform", left_transform.to_json()},
                      {"right_transform", right_transform.to_json()}};
  if (!left_inverse.empty()) j["left_inverse"] = left_inverse.to_json();
  return j;
}

ZQuotientStructure ZQuotientStructure::from_json(const nlohmann::json& j) {
  ZQuotientStructure s;
  s.rows = j.at("rows").get<std::size_t>();
  s.cols = j.at("cols").get<std::size_t>();
  s.invariant_factors = bigints_from_json(j.at("invariant_factors"));
  s.free_rank = j.at("free_rank").get<std::size_t>();
  s.left_transform = ZMatrix::from_json(j.at("left_transform"));
  s.right_transform = ZMatrix::from_json(j.at("right_transform"));
  if (j.contains("left_inverse")) s.left_inverse = ZMatrix::from_json(j.at("left_inverse"));
  return s;
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

int cmpabs(const BigInt& a, const BigInt& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

// Elimination state; every row/column operation on the working matrix is
// mirrored into whichever transforms are being tracked.
class SnfWorker {
 public:
  SnfWorker(const ZMatrix& a, SnfOptions opts) : d_(a), opts_(opts) {
    if (opts.left) u_ = ZMatrix::identity(a.rows());
    if (opts.right) v_ = ZMatrix::identity(a.cols());
    if (opts.left_inverse) uinv_ = ZMatrix::identity(a.rows());
  }

  ZQuotientStructure run() {
    const std::size_t m = d_.rows(), n = d_.cols();
    std::vector<BigInt> factors;
    for (std::size_t t = 0; t < std::min(m, n); ++t) {
      auto pivot = find_pivot(t);
      if (!pivot) break;
      move_to(t, pivot->first, pivot->second);
      clear_cross(t);
      if (sgn(d_(t, t)) < 0) negate_row(t);
      factors.push_back(d_(t, t));
    }
    ZQuotientStructure s;
    s.rows = m;
    s.cols = n;
    s.invariant_factors = std::move(factors);
    s.free_rank = m - s.invariant_factors.size();
    s.left_transform = std::move(u_);
    s.right_transform = std::move(v_);
    s.left_inverse = std::move(uinv_);
    return s;
  }

 private:
  // Smallest nonzero |entry| in the trailing submatrix, ties by lowest (row, col).
  std::optional<std::pair<std::size_t, std::size_t>> find_pivot(std::size_t t) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    BigInt best_abs;
    for (std::size_t i = t; i < d_.rows(); ++i) {
      for (std::size_t j = t; j < d_.cols(); ++j) {
        const BigInt& x = d_(i, j);
        if (sgn(x) == 0) continue;
        if (!best || cmpabs(x, best_abs) < 0) {
          best = {i, j};
          best_abs = abs(x);
          if (best_abs == 1) return best;
        }
      }
    }
    return best;
  }

  void move_to(std::size_t t, std::size_t i, std::size_t j) {
    if (i != t) {
      d_.swap_rows(t, i);
      if (opts_.left) u_.swap_rows(t, i);
      if (opts_.left_inverse) uinv_.swap_cols(t, i);
    }
    if (j != t) {
      d_.swap_cols(t, j);
      if (opts_.right) v_.swap_cols(t, j);
    }
  }

  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < d_.cols(); ++c) d_(i, c) = -d_(i, c);
    if (opts_.left)
      for (std::size_t c = 0; c < u_.cols(); ++c) u_(i, c) = -u_(i, c);
    if (opts_.left_inverse)
      for (std::size_t r = 0; r < uinv_.rows(); ++r) uinv_(r, i) = -uinv_(r, i);
  }

  // row_i += q * row_src
  void add_row(std::size_t i, std::size_t src, const BigInt& q) {
    for (std::size_t c = 0; c < d_.cols(); ++c)
      if (sgn(d_(src, c)) != 0) d_(i, c) += q * d_(src, c);
    if (opts_.left)
      for (std::size_t c = 0; c < u_.cols(); ++c)
        if (sgn(u_(src, c)) != 0) u_(i, c) += q * u_(src, c);
    if (opts_.left_inverse)
      for (std::size_t r = 0; r < uinv_.rows(); ++r)
        if (sgn(uinv_(r, i)) != 0) uinv_(r, src) -= q * uinv_(r, i);
  }

  // col_j += q * col_src
  void add_col(std::size_t j, std::size_t src, const BigInt& q) {
    for (std::size_t r = 0; r < d_.rows(); ++r)
      if (sgn(d_(r, src)) != 0) d_(r, j) += q * d_(r, src);
    if (opts_.right)
      for (std::size_t r = 0; r < v_.rows(); ++r)
        if (sgn(v_(r, src)) != 0) v_(r, j) += q * v_(r, src);
  }

  // Zero out row t and column t beyond the pivot, and make the pivot divide
  // every entry of the trailing submatrix.
  void clear_cross(std::size_t t) {
    BigInt q;
    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < d_.rows(); ++i) {
        if (sgn(d_(i, t)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), d_(i, t).get_mpz_t(), d_(t, t).get_mpz_t());
        if (sgn(q) != 0) add_row(i, t, -q);
        if (sgn(d_(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < d_.cols(); ++j) {
        if (sgn(d_(t, j)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), d_(t, j).get_mpz_t(), d_(t, t).get_mpz_t());
        if (sgn(q) != 0) add_col(j, t, -q);
        if (sgn(d_(t, j)) != 0) clean = false;
      }
      if (!clean) {
        // A nonzero remainder is smaller than the pivot; promote the smallest.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < d_.rows(); ++i)
          if (sgn(d_(i, t)) != 0 && cmpabs(d_(i, t), d_(bi, bj)) < 0) bi = i, bj = t;
        for (std::size_t j = t + 1; j < d_.cols(); ++j)
          if (sgn(d_(t, j)) != 0 && cmpabs(d_(t, j), d_(bi, bj)) < 0) bi = t, bj = j;
        move_to(t, bi, bj);
        continue;
      }
      // Row and column are clear; enforce the divisibility chain.
      bool divides_all = true;
      for (std::size_t i = t + 1; i < d_.rows() && divides_all; ++i)
        for (std::size_t j = t + 1; j < d_.cols(); ++j)
          if (sgn(d_(i, j)) != 0 && !mpz_divisible_p(d_(i, j).get_mpz_t(), d_(t, t).get_mpz_t())) {
            add_row(t, i, 1);
            divides_all = false;
            break;
          }
      if (divides_all) return;
    }
  }

  ZMatrix d_;
  SnfOptions opts_;
  ZMatrix u_, v_, uinv_;
};

}  // namespace

ZQuotientStructure smith_normal_form(const ZMatrix& a, SnfOptions opts) {
  return SnfWorker(a, opts).run();
}

std::optional<std::vector<BigInt>> solve_integer_system(const ZMatrix& a,
                                                        const std::vector<BigInt>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("right-hand side length mismatch");
  auto s = smith_normal_form(a, {.left = true, .right = true});
  std::vector<BigInt> ub = s.left_transform.apply(b);
  std::vector<BigInt> y(a.cols());
  for (std::size_t i = 0; i < ub.size(); ++i) {
    if (i < s.rank()) {
      if (!mpz_divisible_p(ub[i].get_mpz_t(), s.invariant_factors[i].get_mpz_t()))
        return std::nullopt;
      mpz_divexact(y[i].get_mpz_t(), ub[i].get_mpz_t(), s.invariant_factors[i].get_mpz_t());
    } else if (sgn(ub[i]) != 0) {
      return std::nullopt;
    }
  }
  return s.right_transform.apply(y);
}

std::vector<BigInt> CokernelSummary::torsion() const {
  std::vector<BigInt> t;
  for (const auto& d : invariant_factors)
    if (d != 1) t.push_back(d);
  return t;
}

CokernelSummary cokernel_rank_and_torsion(const ZMatrix& a) {
  auto s = smith_normal_form(a, {.left = false, .right = false});
  return {s.free_rank, std::move(s.invariant_factors)};
}

BigInt determinant(const ZMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  ZMatrix m = a;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(m(p, k)) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::size_t rank(const ZMatrix& a) {
  ZMatrix m = a;
  std::size_t r = 0;
  BigInt prev = 1;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        m(i, j) = m(i, j) * m(r, c) - m(i, c) * m(r, j);
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

}  // namespace petcoh
