#include "petcoh/intpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace petcoh {

namespace {

void require_same_ambient(std::size_t a, std::size_t b) {
  if (a != b) {
    throw std::invalid_argument("ambient mismatch: " + std::to_string(a) + " vs " +
                                std::to_string(b) + " variables");
  }
}

// Calls f on every k-subset of [lo, hi], given as an increasing index list.
template <typename F>
void for_each_subset(std::size_t lo, std::size_t hi, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), lo);
  if (k == 0) {
    f(idx);
    return;
  }
  if (hi < lo || hi - lo + 1 < k) return;
  while (true) {
    f(idx);
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == hi - (k - pos)) --pos;
    if (pos == 0) return;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<unsigned> exponents) : exps_(std::move(exponents)) {
  if (exps_.empty()) throw std::invalid_argument("monomial needs at least one variable");
  degree_ = std::accumulate(exps_.begin(), exps_.end(), 0u);
}

Monomial Monomial::one(std::size_t n) { return Monomial(std::vector<unsigned>(n, 0)); }

Monomial Monomial::variable(std::size_t n, std::size_t i) {
  if (i < 1 || i > n) throw std::out_of_range("variable index out of range");
  std::vector<unsigned> e(n, 0);
  e[i - 1] = 1;
  return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& other) const {
  require_same_ambient(ambient(), other.ambient());
  std::vector<unsigned> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exps_[i];
  return Monomial(std::move(e));
}

bool GrLexGreater::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  const auto ea = a.exponents();
  const auto eb = b.exponents();
  return std::lexicographical_compare(eb.begin(), eb.end(), ea.begin(), ea.end());
}

std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d) {
  std::vector<Monomial> out;
  std::vector<unsigned> e(n, 0);
  // Enumerate compositions of d into n parts, first exponent largest first;
  // this is exactly descending graded-lex within a single degree.
  auto rec = [&](auto&& self, std::size_t pos, unsigned left) -> void {
    if (pos + 1 == n) {
      e[pos] = left;
      out.emplace_back(e);
      return;
    }
    for (unsigned v = left + 1; v-- > 0;) {
      e[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  if (n == 0) throw std::invalid_argument("monomials need at least one variable");
  rec(rec, 0, d);
  return out;
}

// ---------------------------------------------------------------------------
// IntPoly

IntPoly::IntPoly(std::size_t n) : n_(n) {
  if (n == 0) throw std::invalid_argument("polynomial ring needs at least one variable");
}

IntPoly IntPoly::constant(std::size_t n, const BigInt& c) {
  IntPoly p(n);
  p.add_term(Monomial::one(n), c);
  return p;
}

IntPoly IntPoly::variable(std::size_t n, std::size_t i) {
  return term(Monomial::variable(n, i), 1);
}

IntPoly IntPoly::term(const Monomial& m, const BigInt& c) {
  IntPoly p(m.ambient());
  p.add_term(m, c);
  return p;
}

BigInt IntPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

int IntPoly::degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.degree());
}

bool IntPoly::is_homogeneous() const {
  return terms_.empty() || terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

IntPoly IntPoly::homogeneous_component(unsigned d) const {
  IntPoly out(n_);
  for (const auto& [m, c] : terms_) {
    if (m.degree() == d) out.terms_.emplace_hint(out.terms_.end(), m, c);
  }
  return out;
}

void IntPoly::add_term(const Monomial& m, const BigInt& c) {
  require_same_ambient(n_, m.ambient());
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

IntPoly IntPoly::operator-() const {
  IntPoly out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  require_same_ambient(n_, other.n_);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  require_same_ambient(n_, other.n_);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

IntPoly& IntPoly::operator*=(const BigInt& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  require_same_ambient(a.n_, b.n_);
  IntPoly out(a.n_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

std::string IntPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    BigInt mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || m.degree() == 0) {
      os << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < m.ambient(); ++i) {
      if (m[i] == 0) continue;
      if (wrote) os << '*';
      os << 'y' << (i + 1);
      if (m[i] > 1) os << '^' << m[i];
      wrote = true;
    }
  }
  return os.str();
}

nlohmann::json IntPoly::to_json() const {
  auto arr = nlohmann::json::array();
  for (const auto& [m, c] : terms_) {
    arr.push_back({{"exponents", std::vector<unsigned>(m.exponents().begin(), m.exponents().end())},
                   {"coeff", c.get_str()}});
  }
  return arr;
}

IntPoly IntPoly::from_json(const nlohmann::json& j, std::size_t n) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  IntPoly p(n);
  for (const auto& t : j) {
    Monomial m(t.at("exponents").get<std::vector<unsigned>>());
    p.add_term(m, BigInt(t.at("coeff").get<std::string>()));
  }
  return p;
}

IntPoly add(const IntPoly& p, const IntPoly& q) { return p + q; }
IntPoly mul(const IntPoly& p, const IntPoly& q) { return p * q; }
IntPoly scale(const IntPoly& p, const BigInt& c) { return p * c; }

// ---------------------------------------------------------------------------
// Symmetric polynomials

IntPoly elementary_symmetric_range(std::size_t n, std::size_t lo, std::size_t hi,
                                   std::size_t k) {
  if (lo < 1 || (hi > n && hi >= lo)) {
    throw std::invalid_argument("variable range out of bounds");
  }
  IntPoly out(n);
  for_each_subset(lo, hi, k, [&](const std::vector<std::size_t>& idx) {
    std::vector<unsigned> e(n, 0);
    for (auto v : idx) e[v - 1] = 1;
    out.add_term(Monomial(std::move(e)), 1);
  });
  return out;
}

IntPoly elementary_symmetric(std::size_t n, std::size_t i, std::size_t k) {
  if (i > n) throw std::invalid_argument("elementary_symmetric: prefix longer than ambient");
  if (k > i) throw std::invalid_argument("elementary_symmetric: degree exceeds prefix length");
  return elementary_symmetric_range(n, 1, i, k);
}

IntPoly hook_monomial_symmetric(std::size_t n, std::size_t i, HookPartition hp) {
  if (hp.d < 1) throw std::invalid_argument("hook partition needs d >= 1");
  if (i > n || hp.k + 1 > i) {
    throw std::invalid_argument("hook_monomial_symmetric: partition longer than prefix");
  }
  if (hp.d == 1) return elementary_symmetric(n, i, hp.k + 1);
  IntPoly out(n);
  for (std::size_t big = 1; big <= i; ++big) {
    // choose the k unit positions among the other i-1 indices
    for_each_subset(1, i - 1, hp.k, [&](const std::vector<std::size_t>& idx) {
      std::vector<unsigned> e(n, 0);
      e[big - 1] = hp.d;
      for (auto v : idx) e[(v >= big ? v + 1 : v) - 1] = 1;
      out.add_term(Monomial(std::move(e)), 1);
    });
  }
  return out;
}

IntPoly power_sum_prefix(std::size_t n, std::size_t i, unsigned d) {
  if (i < 1 || i > n) throw std::invalid_argument("power_sum_prefix: prefix out of range");
  if (d < 1) throw std::invalid_argument("power_sum_prefix: degree must be positive");
  IntPoly out(n);
  for (std::size_t j = 1; j <= i; ++j) {
    std::vector<unsigned> e(n, 0);
    e[j - 1] = d;
    out.add_term(Monomial(std::move(e)), 1);
  }
  return out;
}

}  // namespace petcoh
