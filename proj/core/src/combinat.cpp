#include "petcoh/combinat.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace petcoh {

SubsetJ::SubsetJ(int n, std::uint32_t mask) : n_(n), mask_(mask) {
  if (n < 2 || n > kMaxN) {
    throw std::invalid_argument("n must lie in 2.." + std::to_string(kMaxN) + ", got " +
                                std::to_string(n));
  }
  if (mask >> (n - 1)) throw std::invalid_argument("subset has members outside [n-1]");
}

SubsetJ SubsetJ::from_members(int n, const std::vector<int>& members) {
  std::uint32_t mask = 0;
  for (int i : members) {
    if (i < 1 || i > n - 1) {
      throw std::invalid_argument("member " + std::to_string(i) + " outside 1.." +
                                  std::to_string(n - 1));
    }
    mask |= 1u << (i - 1);
  }
  return SubsetJ(n, mask);
}

SubsetJ SubsetJ::interval(int n, int a, int b) {
  std::vector<int> m;
  for (int i = a; i <= b; ++i) m.push_back(i);
  return from_members(n, m);
}

SubsetJ SubsetJ::parse(int n, std::string_view text) {
  std::vector<int> members;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("malformed subset '" + std::string(text) + "': " + why);
  };
  skip_ws();
  if (pos == text.size()) fail("empty input");
  while (true) {
    skip_ws();
    if (pos >= text.size() || text[pos] != '{') fail("expected '{'");
    ++pos;
    skip_ws();
    if (pos < text.size() && text[pos] == '}') {
      ++pos;
    } else {
      while (true) {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) fail("expected a member");
        if (pos - start > 4) fail("member too large");
        members.push_back(std::stoi(std::string(text.substr(start, pos - start))));
        skip_ws();
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          continue;
        }
        if (pos < text.size() && text[pos] == '}') {
          ++pos;
          break;
        }
        fail("expected ',' or '}'");
      }
    }
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '|') fail("expected '|' between components");
    ++pos;
  }
  std::vector<int> sorted = members;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) fail("repeated member");
  return from_members(n, members);
}

int SubsetJ::size() const { return std::popcount(mask_); }

std::vector<int> SubsetJ::members() const {
  std::vector<int> out;
  for (int i = 1; i < n_; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

SubsetJ SubsetJ::with(int i) const {
  if (i < 1 || i >= n_) throw std::invalid_argument("index outside [n-1]");
  return SubsetJ(n_, mask_ | (1u << (i - 1)));
}

std::string SubsetJ::to_string() const {
  if (empty()) return "{}";
  std::ostringstream os;
  bool first_comp = true;
  for (const auto& c : connected_components(*this)) {
    if (!first_comp) os << '|';
    first_comp = false;
    os << '{';
    for (int i = c.a; i <= c.b; ++i) os << (i == c.a ? "" : ",") << i;
    os << '}';
  }
  return os.str();
}

SubsetJ SubsetJ::from_json(int n, const nlohmann::json& j) {
  return from_members(n, j.get<std::vector<int>>());
}

std::strong_ordering SubsetJ::operator<=>(const SubsetJ& other) const {
  if (auto c = n_ <=> other.n_; c != 0) return c;
  if (auto c = size() <=> other.size(); c != 0) return c;
  return mask_ <=> other.mask_;
}

std::vector<Interval> connected_components(const SubsetJ& j) {
  std::vector<Interval> out;
  for (int i = 1; i < j.n(); ++i) {
    if (!j.contains(i)) continue;
    if (!out.empty() && out.back().b == i - 1) {
      out.back().b = i;
    } else {
      out.push_back({i, i});
    }
  }
  return out;
}

mpz_class factorial(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

mpz_class m_factor(const SubsetJ& j) {
  mpz_class m = 1;
  for (const auto& c : connected_components(j)) m *= factorial(static_cast<unsigned long>(c.size()));
  return m;
}

HessenbergFn::HessenbergFn(std::vector<int> values) : values_(std::move(values)) {
  const int n = static_cast<int>(values_.size());
  for (int j = 1; j <= n; ++j) {
    const int h = values_[static_cast<std::size_t>(j - 1)];
    if (h < j || h > n) throw std::invalid_argument("Hessenberg function needs j <= h(j) <= n");
    if (j > 1 && h < values_[static_cast<std::size_t>(j - 2)])
      throw std::invalid_argument("Hessenberg function must be weakly increasing");
  }
}

HessenbergFn hessenberg_from_subset(const SubsetJ& j) {
  std::vector<int> h;
  for (int i = 1; i <= j.n(); ++i) h.push_back(j.contains(i) ? i + 1 : i);
  return HessenbergFn(std::move(h));
}

int dimension_of_pet_J(const SubsetJ& j) {
  const auto h = hessenberg_from_subset(j);
  int area = 0;
  for (int i = 1; i <= j.n(); ++i) area += h(i) - i;
  if (area != j.size()) {
    throw std::logic_error("Hessenberg area " + std::to_string(area) + " disagrees with |J| = " +
                           std::to_string(j.size()));
  }
  return j.size();
}

std::vector<int> longest_element_wJ(const SubsetJ& j) {
  std::vector<int> w(static_cast<std::size_t>(j.n()));
  for (int i = 1; i <= j.n(); ++i) w[static_cast<std::size_t>(i - 1)] = i;
  for (const auto& c : connected_components(j)) {
    const int lo = c.a, hi = c.b + 1;
    for (int i = lo; i <= hi; ++i) w[static_cast<std::size_t>(i - 1)] = lo + hi - i;
  }
  return w;
}

std::vector<SubsetJ> all_subsets(int n) {
  std::vector<SubsetJ> out;
  for (int k = 0; k < n; ++k) {
    auto part = subsets_of_size(n, k);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<SubsetJ> subsets_of_size(int n, int k) {
  SubsetJ::empty(n);  // validates n
  std::vector<SubsetJ> out;
  const std::uint32_t limit = 1u << (n - 1);
  for (std::uint32_t m = 0; m < limit; ++m)
    if (std::popcount(m) == k) out.emplace_back(n, m);
  return out;
}

}  // namespace petcoh
