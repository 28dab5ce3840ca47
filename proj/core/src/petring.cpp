#include "petcoh/petring.hpp"

#include <algorithm>
#include <sstream>

namespace petcoh {

NonIntegralError::NonIntegralError(const SubsetJ& j, const SubsetJ& k, const SubsetJ& target,
                                   const BigInt& coefficient, const BigInt& divisor)
    : std::runtime_error("non-integral structure constant: pi" + j.to_string() + " * pi" +
                         k.to_string() + " has coefficient " + coefficient.get_str() + "/" +
                         divisor.get_str() + " at pi" + target.to_string()),
      left_(j),
      right_(k) {}

// ---------------------------------------------------------------------------
// PetClass

PetClass::PetClass(int n) : n_(n) { SubsetJ::empty(n); }

PetClass PetClass::basis(const SubsetJ& j, const BigInt& c) {
  PetClass p(j.n());
  p.add_term(j, c);
  return p;
}

PetClass PetClass::generator(int n, int i) { return basis(SubsetJ::from_members(n, {i})); }

BigInt PetClass::coefficient(const SubsetJ& j) const {
  auto it = terms_.find(j);
  return it == terms_.end() ? BigInt(0) : it->second;
}

bool PetClass::is_homogeneous() const {
  return terms_.empty() || terms_.begin()->first.size() == terms_.rbegin()->first.size();
}

void PetClass::add_term(const SubsetJ& j, const BigInt& c) {
  if (j.n() != n_) throw std::invalid_argument("class and subset disagree on n");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(j, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

PetClass PetClass::operator-() const {
  PetClass out(*this);
  for (auto& [j, c] : out.terms_) c = -c;
  return out;
}

PetClass& PetClass::operator+=(const PetClass& other) {
  if (other.n_ != n_) throw std::invalid_argument("classes live in different rings");
  for (const auto& [j, c] : other.terms_) add_term(j, c);
  return *this;
}

PetClass& PetClass::operator-=(const PetClass& other) {
  if (other.n_ != n_) throw std::invalid_argument("classes live in different rings");
  for (const auto& [j, c] : other.terms_) add_term(j, -c);
  return *this;
}

PetClass& PetClass::operator*=(const BigInt& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [j, v] : terms_) v *= c;
  return *this;
}

std::string PetClass::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [j, c] = *it;
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    BigInt mag = abs(c);
    if (mag != 1) os << mag.get_str() << '*';
    os << "pi" << j.to_string();
  }
  return os.str();
}

nlohmann::json PetClass::to_json() const {
  auto arr = nlohmann::json::array();
  for (const auto& [j, c] : terms_)
    arr.push_back({{"subset", j.to_json()}, {"coeff", c.get_str()}, {"degree", std::to_string(j.size())}});
  return arr;
}

PetClass PetClass::from_json(int n, const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("class JSON must be an array");
  PetClass p(n);
  for (const auto& t : j) {
    auto s = SubsetJ::from_json(n, t.at("subset"));
    if (t.contains("degree") && std::stoi(t.at("degree").get<std::string>()) != s.size())
      throw std::invalid_argument("class JSON degree disagrees with its subset");
    p.add_term(s, BigInt(t.at("coeff").get<std::string>()));
  }
  return p;
}

// ---------------------------------------------------------------------------
// Intervals and polynomial images

PetClass IntervalClass::to_class() const {
  if (is_unit()) return PetClass::one(n);
  if (is_zero()) return PetClass(n);
  return PetClass::basis(SubsetJ::interval(n, a, b));
}

IntPoly IntervalClass::to_polynomial() const {
  if (is_unit()) return IntPoly::constant(static_cast<std::size_t>(n), 1);
  if (is_zero()) return IntPoly(static_cast<std::size_t>(n));
  return elementary_symmetric(static_cast<std::size_t>(n), static_cast<std::size_t>(b),
                              static_cast<std::size_t>(b - a + 1));
}

IntPoly pi_to_polynomial(const SubsetJ& j) {
  const auto n = static_cast<std::size_t>(j.n());
  IntPoly p = IntPoly::constant(n, 1);
  for (const auto& c : connected_components(j))
    p = p * elementary_symmetric(n, static_cast<std::size_t>(c.b), static_cast<std::size_t>(c.size()));
  return p;
}

// ---------------------------------------------------------------------------
// Structure constants

PetClass generator_times_basis(const SubsetJ& j, int i) {
  const int n = j.n();
  if (i < 1 || i > n - 1) throw std::out_of_range("generator index outside 1..n-1");
  const auto comps = connected_components(j);
  PetClass out(n);

  if (!j.contains(i)) {
    // i joins the diagram: isolated, extends one component, or bridges two.
    const Interval* left = nullptr;
    const Interval* right = nullptr;
    for (const auto& c : comps) {
      if (c.b == i - 1) left = &c;
      if (c.a == i + 1) right = &c;
    }
    BigInt coeff = 1;
    if (left && right) {
      const auto l = static_cast<unsigned long>(left->size());
      const auto r = static_cast<unsigned long>(right->size());
      coeff = binomial(l + 1, l) * binomial(l + 1 + r, l + 1);
    } else if (left) {
      coeff = left->size() + 1;
    } else if (right) {
      coeff = right->size() + 1;
    }
    out.add_term(j.with(i), coeff);
    return out;
  }

  // i sits inside a component [a, b]; it pushes the component outward on
  // either side, possibly merging with the neighbouring component.
  const auto k = static_cast<std::size_t>(
      std::find_if(comps.begin(), comps.end(), [i](const Interval& c) { return c.contains(i); }) -
      comps.begin());
  const int a = comps[k].a, b = comps[k].b;
  const auto width = static_cast<unsigned long>(b - a + 2);

  if (a > 1) {
    BigInt coeff = b - i + 1;
    if (k > 0 && comps[k - 1].b == a - 2) {
      const auto prev = static_cast<unsigned long>(comps[k - 1].size());
      coeff *= binomial(prev + width, prev);
    }
    out.add_term(j.with(a - 1), coeff);
  }
  if (b < n - 1) {
    BigInt coeff = i - a + 1;
    if (k + 1 < comps.size() && comps[k + 1].a == b + 2) {
      const auto next = static_cast<unsigned long>(comps[k + 1].size());
      coeff *= binomial(next + width, width);
    }
    out.add_term(j.with(b + 1), coeff);
  }
  return out;
}

PetClass mult_by_generator(const PetClass& c, int i) {
  PetClass out(c.n());
  for (const auto& [j, coeff] : c.terms()) {
    const PetClass step = generator_times_basis(j, i);
    for (const auto& [t, v] : step.terms()) out.add_term(t, coeff * v);
  }
  return out;
}

PetClass mult_by_generators(const PetClass& c, std::span<const int> generators) {
  PetClass acc = c;
  for (int i : generators) {
    if (acc.is_zero()) break;
    acc = mult_by_generator(acc, i);
  }
  return acc;
}

PetClass mult_basis(const SubsetJ& j, const SubsetJ& k) {
  if (j.n() != k.n()) throw std::invalid_argument("subsets live in different rings");
  const BigInt mj = m_factor(j), mk = m_factor(k);
  // Expand the factor with the smaller m-factor; ties expand k.
  const bool expand_k = mk <= mj;
  const SubsetJ& base = expand_k ? j : k;
  const SubsetJ& gens = expand_k ? k : j;
  const BigInt& divisor = expand_k ? mk : mj;

  const auto members = gens.members();
  PetClass raw = mult_by_generators(PetClass::basis(base), members);
  PetClass out(j.n());
  for (const auto& [t, c] : raw.terms()) {
    if (!mpz_divisible_p(c.get_mpz_t(), divisor.get_mpz_t()))
      throw NonIntegralError(j, k, t, c, divisor);
    BigInt q;
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
    out.add_term(t, q);
  }
  return out;
}

PetClass mult(const PetClass& a, const PetClass& b) {
  if (a.n() != b.n()) throw std::invalid_argument("classes live in different rings");
  PetClass out(a.n());
  for (const auto& [ja, ca] : a.terms()) {
    for (const auto& [jb, cb] : b.terms()) {
      out += mult_basis(ja, jb) * BigInt(ca * cb);
    }
  }
  return out;
}

PetClass reduce_polynomial(const IntPoly& p) {
  const int n = static_cast<int>(p.ambient());
  PetClass out(n);
  for (const auto& [m, coeff] : p.terms()) {
    PetClass acc = PetClass::one(n);
    for (int v = 1; v <= n && !acc.is_zero(); ++v) {
      for (unsigned e = 0; e < m[static_cast<std::size_t>(v - 1)] && !acc.is_zero(); ++e) {
        if (v == n) {
          acc = -mult_by_generator(acc, n - 1);
        } else if (v == 1) {
          acc = mult_by_generator(acc, 1);
        } else {
          acc = mult_by_generator(acc, v) - mult_by_generator(acc, v - 1);
        }
      }
    }
    out += acc * coeff;
  }
  return out;
}

std::vector<unsigned long> poincare_ranks(int n) {
  SubsetJ::empty(n);
  std::vector<unsigned long> r;
  for (int k = 0; k < n; ++k) r.push_back(binomial(static_cast<unsigned long>(n - 1),
                                                   static_cast<unsigned long>(k)).get_ui());
  return r;
}

}  // namespace petcoh
