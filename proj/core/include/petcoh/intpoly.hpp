#pragma once

// Sparse multivariate polynomials over Z in a fixed number of variables
// y1..yn, plus the symmetric polynomials used throughout the library.

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace petcoh {

using BigInt = mpz_class;

/// Exponent vector of a monomial in y1..yn; position i holds the exponent of y_{i+1}.
class Monomial {
 public:
  explicit Monomial(std::vector<unsigned> exponents);

  /// The constant monomial 1 in n variables.
  static Monomial one(std::size_t n);

  /// y_i with 1-based i.
  static Monomial variable(std::size_t n, std::size_t i);

  std::size_t ambient() const { return exps_.size(); }
  unsigned degree() const { return degree_; }
  unsigned operator[](std::size_t pos) const { return exps_[pos]; }
  std::span<const unsigned> exponents() const { return exps_; }

  Monomial operator*(const Monomial& other) const;
  bool operator==(const Monomial& other) const = default;

 private:
  std::vector<unsigned> exps_;
  unsigned degree_ = 0;
};

/// Graded-lex order, largest first: higher total degree wins, then the first
/// differing exponent (scanning y1, y2, ...) decides.
struct GrLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// All monomials of total degree d in n variables, in descending graded-lex order.
std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d);

class IntPoly {
 public:
  using Terms = std::map<Monomial, BigInt, GrLexGreater>;

  explicit IntPoly(std::size_t n);

  static IntPoly constant(std::size_t n, const BigInt& c);
  static IntPoly variable(std::size_t n, std::size_t i);
  static IntPoly term(const Monomial& m, const BigInt& c);

  std::size_t ambient() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  BigInt coefficient(const Monomial& m) const;

  /// Total degree of the leading term; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  IntPoly homogeneous_component(unsigned d) const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  IntPoly& operator*=(const BigInt& c);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const BigInt& c) { return a *= c; }
  friend IntPoly operator*(const BigInt& c, IntPoly a) { return a *= c; }
  bool operator==(const IntPoly& other) const = default;

  /// Canonical text, e.g. `3*y1^2*y2 - y3`; the zero polynomial prints as `0`.
  std::string to_string() const;

  /// List of {exponents:[...], coeff:"decimal"} in canonical order.
  nlohmann::json to_json() const;
  static IntPoly from_json(const nlohmann::json& j, std::size_t n);

  /// Accumulates c*m in place. Used by builders that assemble large sums.
  void add_term(const Monomial& m, const BigInt& c);

 private:
  std::size_t n_;
  Terms terms_;
};

IntPoly add(const IntPoly& p, const IntPoly& q);
IntPoly mul(const IntPoly& p, const IntPoly& q);
IntPoly scale(const IntPoly& p, const BigInt& c);

/// The partition (d, 1^k).
struct HookPartition {
  unsigned d = 1;
  unsigned k = 0;
};

/// e_k(y_1, ..., y_i) in n variables; e_0 = 1.
IntPoly elementary_symmetric(std::size_t n, std::size_t i, std::size_t k);

/// e_k(y_lo, ..., y_hi) in n variables (1-based, inclusive). An empty range
/// (lo > hi) gives 1 for k = 0 and 0 otherwise.
IntPoly elementary_symmetric_range(std::size_t n, std::size_t lo, std::size_t hi,
                                   std::size_t k);

/// m_{(d,1^k)}(y_1, ..., y_i).
IntPoly hook_monomial_symmetric(std::size_t n, std::size_t i, HookPartition hp);

/// y_1^d + ... + y_i^d.
IntPoly power_sum_prefix(std::size_t n, std::size_t i, unsigned d);

}  // namespace petcoh
