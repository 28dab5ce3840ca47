#pragma once

// Subsets J of the type-A Dynkin diagram [n-1] and the combinatorics attached
// to them: connected components, the factorial weight m_J, Hessenberg
// functions h_J, and the longest element w_J of the parabolic subgroup.

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace petcoh {

/// Closed integer interval [a, b].
struct Interval {
  int a = 0;
  int b = -1;

  int size() const { return b - a + 1; }
  bool contains(int i) const { return a <= i && i <= b; }
  bool operator==(const Interval&) const = default;
};

/// A subset of [n-1] = {1, ..., n-1}, 2 <= n <= 16, stored as a bitmask
/// (bit i-1 set iff i is a member).
class SubsetJ {
 public:
  static constexpr int kMaxN = 16;

  SubsetJ(int n, std::uint32_t mask);
  static SubsetJ from_members(int n, const std::vector<int>& members);
  static SubsetJ empty(int n) { return SubsetJ(n, 0); }
  static SubsetJ full(int n) { return SubsetJ(n, (1u << (n - 1)) - 1); }
  static SubsetJ interval(int n, int a, int b);

  /// Parses `{1,2,4}`, `{1,2}|{4}` or `{}`. Component grouping in the input
  /// is not checked against adjacency; both spellings give the same subset.
  static SubsetJ parse(int n, std::string_view text);

  int n() const { return n_; }
  std::uint32_t mask() const { return mask_; }
  int size() const;
  bool empty() const { return mask_ == 0; }
  bool contains(int i) const { return i >= 1 && i < n_ && ((mask_ >> (i - 1)) & 1u); }
  std::vector<int> members() const;

  SubsetJ with(int i) const;

  /// Component-separated form, e.g. `{1,2}|{4,5,6}|{9}`; `{}` when empty.
  std::string to_string() const;
  nlohmann::json to_json() const { return members(); }
  static SubsetJ from_json(int n, const nlohmann::json& j);

  bool operator==(const SubsetJ&) const = default;
  /// Canonical order: by size, then numeric bitmask.
  std::strong_ordering operator<=>(const SubsetJ& other) const;

 private:
  int n_;
  std::uint32_t mask_;
};

/// Maximal runs of consecutive members, in increasing order.
std::vector<Interval> connected_components(const SubsetJ& j);

/// |J_1|! |J_2|! ... |J_m|!
mpz_class m_factor(const SubsetJ& j);

/// Weakly increasing h: [n] -> [n] with h(j) >= j.
class HessenbergFn {
 public:
  explicit HessenbergFn(std::vector<int> values);

  int n() const { return static_cast<int>(values_.size()); }
  int operator()(int j) const { return values_.at(static_cast<std::size_t>(j - 1)); }
  const std::vector<int>& values() const { return values_; }
  bool operator==(const HessenbergFn&) const = default;

 private:
  std::vector<int> values_;
};

HessenbergFn hessenberg_from_subset(const SubsetJ& j);

/// |J|, cross-checked against sum_j (h_J(j) - j).
int dimension_of_pet_J(const SubsetJ& j);

/// One-line notation (1-based values) of w_J, which reverses each block
/// J_k ∪ {max J_k + 1} and fixes every other point.
std::vector<int> longest_element_wJ(const SubsetJ& j);

/// All subsets of [n-1] in canonical order (size, then bitmask).
std::vector<SubsetJ> all_subsets(int n);

/// Subsets of [n-1] of the given size, canonical order.
std::vector<SubsetJ> subsets_of_size(int n, int k);

mpz_class binomial(unsigned long n, unsigned long k);
mpz_class factorial(unsigned long n);

}  // namespace petcoh
