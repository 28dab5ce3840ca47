#pragma once

// The ring M = Z[y_1..y_n]/(I + I') written in its integral basis {pi_J}.
//
// Multiplication never touches polynomials: it folds the closed-form rule for
// pi_i * pi_J (component merges weighted by binomial coefficients) and divides
// by m_K at the end. Conversion to and from polynomial form is provided so
// the result can be checked against the brute-force quotient.

#include "petcoh/combinat.hpp"
#include "petcoh/intpoly.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace petcoh {

/// Raised when a structure constant fails to be an integer. This would
/// contradict the integrality of the basis and is never expected to fire.
class NonIntegralError : public std::runtime_error {
 public:
  NonIntegralError(const SubsetJ& j, const SubsetJ& k, const SubsetJ& target,
                   const BigInt& coefficient, const BigInt& divisor);

  const SubsetJ& left() const { return left_; }
  const SubsetJ& right() const { return right_; }

 private:
  SubsetJ left_;
  SubsetJ right_;
};

/// Finite integer combination of basis classes pi_J, all with the same n.
class PetClass {
 public:
  using Terms = std::map<SubsetJ, BigInt>;

  explicit PetClass(int n);

  static PetClass basis(const SubsetJ& j, const BigInt& c = 1);
  static PetClass one(int n) { return basis(SubsetJ::empty(n)); }
  /// pi_i = y_1 + ... + y_i.
  static PetClass generator(int n, int i);

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(const SubsetJ& j) const;
  bool is_homogeneous() const;

  void add_term(const SubsetJ& j, const BigInt& c);

  PetClass operator-() const;
  PetClass& operator+=(const PetClass& other);
  PetClass& operator-=(const PetClass& other);
  PetClass& operator*=(const BigInt& c);
  friend PetClass operator+(PetClass a, const PetClass& b) { return a += b; }
  friend PetClass operator-(PetClass a, const PetClass& b) { return a -= b; }
  friend PetClass operator*(PetClass a, const BigInt& c) { return a *= c; }
  friend PetClass operator*(const BigInt& c, PetClass a) { return a *= c; }
  bool operator==(const PetClass&) const = default;

  /// e.g. `6*pi{1,2,3} - pi{1}|{3}`, higher degree first; zero prints as `0`.
  std::string to_string() const;
  /// List of {subset:[...], coeff:"decimal", degree:k} in canonical order.
  nlohmann::json to_json() const;
  static PetClass from_json(int n, const nlohmann::json& j);

 private:
  int n_;
  Terms terms_;
};

/// pi_[a,b] with the degenerate conventions: [a, a-1] is the unit and any
/// interval leaving 1..n-1 is zero.
struct IntervalClass {
  int n;
  int a;
  int b;

  bool is_unit() const { return b == a - 1; }
  bool is_zero() const { return !is_unit() && (a < 1 || b > n - 1 || a > b); }
  PetClass to_class() const;
  IntPoly to_polynomial() const;
};

/// prod_k e_{|J_k|}(y_1, ..., y_{max J_k}); the empty subset maps to 1.
IntPoly pi_to_polynomial(const SubsetJ& j);

/// pi_i * pi_J for a single basis element.
PetClass generator_times_basis(const SubsetJ& j, int i);

/// pi_i * c, extended linearly.
PetClass mult_by_generator(const PetClass& c, int i);

/// c * pi_{i_1} * ... * pi_{i_r}, folded left to right.
PetClass mult_by_generators(const PetClass& c, std::span<const int> generators);

/// pi_J * pi_K. Expands whichever factor has the smaller m-factor as a
/// product of generators and divides by that m-factor exactly.
PetClass mult_basis(const SubsetJ& j, const SubsetJ& k);

PetClass mult(const PetClass& a, const PetClass& b);

/// Normal form of a polynomial in the pi-basis, via y_i = pi_i - pi_{i-1}
/// and y_n = -pi_{n-1}.
PetClass reduce_polynomial(const IntPoly& p);

/// (C(n-1,0), ..., C(n-1,n-1)): number of basis classes in each degree.
std::vector<unsigned long> poincare_ranks(int n);

}  // namespace petcoh
