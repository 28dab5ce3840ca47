#include "petcoh/verify.hpp"

#include "petcoh/combinat.hpp"
#include "petcoh/permfan.hpp"
#include "petcoh/petring.hpp"

#include <functional>
#include <random>

namespace petcoh {

void RunReport::fail(std::string what) {
  pass = false;
  failures.push_back(std::move(what));
}

nlohmann::json RunReport::to_json() const {
  return {{"command", command},
          {"parameters", parameters},
          {"pass", pass},
          {"failures", failures},
          {"payload", payload}};
}

namespace {

std::string str(std::size_t v) { return std::to_string(v); }

IntPoly e_prefix(std::size_t n, std::size_t i, std::size_t k) {
  if (k == 0) return IntPoly::constant(n, 1);
  if (k > i) return IntPoly(n);
  return elementary_symmetric(n, i, k);
}

IntPoly e_range(std::size_t n, std::size_t lo, std::size_t hi, std::size_t k) {
  if (k == 0) return IntPoly::constant(n, 1);
  if (hi < lo || k > hi - lo + 1) return IntPoly(n);
  return elementary_symmetric_range(n, lo, hi, k);
}

IntPoly y(std::size_t n, std::size_t i) { return IntPoly::variable(n, i); }

}  // namespace

// ---------------------------------------------------------------------------

std::vector<std::string> compare_products_with_oracle(QuotientOracle& oracle) {
  std::vector<std::string> bad;
  const auto subsets = all_subsets(oracle.n());
  for (const auto& j : subsets) {
    const IntPoly pj = pi_to_polynomial(j);
    for (const auto& k : subsets) {
      const PetClass engine = mult_basis(j, k);
      const PetClass brute = oracle.to_pi_class(pj * pi_to_polynomial(k));
      if (engine != brute) {
        bad.push_back("pi" + j.to_string() + " * pi" + k.to_string() + ": engine " + engine.to_string() +
                      ", oracle " + brute.to_string());
      }
    }
  }
  return bad;
}

std::vector<std::string> check_closed_forms(int n) {
  std::vector<std::string> bad;
  auto expect = [&](const std::string& what, const PetClass& got, const PetClass& want) {
    if (got != want) bad.push_back(what + ": got " + got.to_string() + ", expected " + want.to_string());
  };
  auto pi = [n](int a, int b) { return IntervalClass{n, a, b}.to_class(); };

  for (int a = 1; a <= n - 1; ++a)
    for (int i = a; i <= n - 1; ++i)
      for (int b = i + 1; b <= n - 1; ++b) {
        const auto want = pi(a, b) * BigInt(binomial(static_cast<unsigned long>(b - a + 1),
                                                     static_cast<unsigned long>(i - a + 1)));
        expect("pi[" + std::to_string(a) + "," + std::to_string(i) + "] * pi[" + std::to_string(i + 1) + "," +
                   std::to_string(b) + "]",
               mult(pi(a, i), pi(i + 1, b)), want);
      }

  for (int a = 1; a <= n - 1; ++a)
    for (int b = a; b <= n - 1; ++b)
      for (int i = a; i <= b; ++i) {
        // pi[0,b] and pi[a,n] vanish
        PetClass want(n);
        if (a > 1) want += pi(a - 1, b) * BigInt(b - i + 1);
        if (b < n - 1) want += pi(a, b + 1) * BigInt(i - a + 1);
        expect("pi" + std::to_string(i) + " * pi[" + std::to_string(a) + "," + std::to_string(b) + "]",
               mult(PetClass::generator(n, i), pi(a, b)), want);
      }

  for (int i = 1; i <= n - 1; ++i)
    expect("pi[1," + std::to_string(n - 1) + "] * pi" + std::to_string(i),
           mult(pi(1, n - 1), PetClass::generator(n, i)), PetClass(n));
  return bad;
}

// ---------------------------------------------------------------------------

RunReport verify_presentation(const PresentationOptions& opts) {
  const int n = opts.n;
  SubsetJ::empty(n);
  const int max_degree = opts.max_degree < 0 ? n : opts.max_degree;
  RunReport report;
  report.command = "verify presentation";
  report.parameters = {{"n", std::to_string(n)}, {"max_degree", std::to_string(max_degree)},
                       {"products", opts.products}, {"certificate", opts.certificate}};

  QuotientOracle oracle(n, opts.cache);
  oracle.precompute(static_cast<unsigned>(max_degree), opts.jobs);

  auto degrees = nlohmann::json::array();
  auto ranks = nlohmann::json::array();
  std::size_t total = 0;
  for (int d = 0; d <= max_degree; ++d) {
    const GradedPiece& piece = oracle.piece(static_cast<unsigned>(d));
    nlohmann::json entry = piece.report();
    if (!piece.matches_expectation()) {
      std::string t;
      for (const auto& f : piece.cokernel.torsion()) t += " " + f.get_str();
      report.fail("degree " + std::to_string(d) + ": rank " + str(piece.rank()) + ", expected " +
                  str(piece.expected_rank()) + (t.empty() ? "" : ", torsion" + t));
    }
    if (opts.certificate) {
      entry["pi_basis"] = piece.pi_basis.is_lattice_basis;
      if (!piece.pi_basis.is_lattice_basis)
        report.fail("degree " + std::to_string(d) + ": pi classes are not a lattice basis");
    }
    total += piece.rank();
    ranks.push_back(str(piece.rank()));
    degrees.push_back(std::move(entry));
  }
  report.payload["degrees"] = std::move(degrees);
  report.payload["ranks"] = std::move(ranks);
  report.payload["total_rank"] = str(total);
  const std::size_t expected_total = max_degree >= n - 1 ? std::size_t{1} << (n - 1) : 0;
  if (max_degree >= n - 1) {
    report.payload["expected_total"] = str(expected_total);
    if (total != expected_total) report.fail("total rank " + str(total) + ", expected " + str(expected_total));
  }

  if (opts.products && n <= 5) {
    const auto bad = compare_products_with_oracle(oracle);
    const std::size_t pairs = std::size_t{1} << (2 * (n - 1));
    report.payload["products"] = {{"checked", str(pairs)}, {"mismatches", bad}};
    for (const auto& b : bad) report.fail("product mismatch: " + b);
  }
  return report;
}

RunReport verify_theorem_a(int n, DiskCache* cache, unsigned jobs) {
  if (n < 2 || n > 5) throw std::out_of_range("theorem-a needs 2 <= n <= 5");
  RunReport report;
  report.command = "verify theorem-a";
  report.parameters = {{"n", std::to_string(n)}};

  const auto fan = permfan_reports(n, true, cache, jobs);
  const auto peterson = poincare_ranks(n);
  auto degrees = nlohmann::json::array();
  auto inv = nlohmann::json::array();
  auto pet = nlohmann::json::array();
  std::size_t inv_total = 0, pet_total = 0, betti_total = 0;
  for (std::size_t d = 0; d < fan.size(); ++d) {
    const auto& r = fan[d];
    nlohmann::json entry = r.to_json();
    entry["peterson_rank"] = str(peterson[d]);
    const bool ok = r.pass() && r.invariant_rank == peterson[d];
    entry["pass"] = ok;
    if (!r.torsion_free) report.fail("fan degree " + str(d) + " has torsion");
    if (r.betti != r.eulerian_expected)
      report.fail("fan degree " + str(d) + ": betti " + str(r.betti) + ", eulerian " + str(r.eulerian_expected));
    if (r.invariant_rank != peterson[d])
      report.fail("degree " + str(d) + ": invariant rank " + str(r.invariant_rank) + ", peterson rank " +
                  str(peterson[d]));
    inv_total += r.invariant_rank;
    pet_total += peterson[d];
    betti_total += r.betti;
    inv.push_back(str(r.invariant_rank));
    pet.push_back(str(peterson[d]));
    degrees.push_back(std::move(entry));
  }
  const std::size_t factorial_n = factorial(static_cast<unsigned long>(n)).get_ui();
  if (betti_total != factorial_n) report.fail("total betti " + str(betti_total) + ", expected " + str(factorial_n));
  if (inv_total != (std::size_t{1} << (n - 1))) report.fail("total invariant rank " + str(inv_total));
  report.payload = {{"degrees", std::move(degrees)},
                    {"invariant_ranks", std::move(inv)},
                    {"peterson_ranks", std::move(pet)},
                    {"invariant_total", str(inv_total)},
                    {"peterson_total", str(pet_total)},
                    {"betti_total", str(betti_total)},
                    {"factorial", str(factorial_n)}};
  return report;
}

// ---------------------------------------------------------------------------

namespace {

struct Family {
  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> failed;

  nlohmann::json to_json() const { return {{"name", name}, {"checked", str(checked)}, {"failed", failed}}; }
};

void oracle_lemmas(int n, QuotientOracle& oracle, std::vector<Family>& out) {
  const auto N = static_cast<std::size_t>(n);
  auto check = [&](Family& f, const std::string& what, const IntPoly& lhs, const IntPoly& rhs) {
    ++f.checked;
    if (!oracle.verify_identity(lhs, rhs)) f.failed.push_back(what);
  };
  auto tag = [](std::initializer_list<std::pair<const char*, std::size_t>> kv) {
    std::string s;
    for (const auto& [k, v] : kv) s += (s.empty() ? "" : " ") + std::string(k) + "=" + std::to_string(v);
    return s;
  };

  Family telescoping{"power_sum_telescoping"};
  for (std::size_t i = 1; i < N; ++i)
    for (unsigned d = 1; d <= 4; ++d)
      check(telescoping, tag({{"i", i}, {"d", d}}), power_sum_prefix(N, i, d + 1),
            power_sum_prefix(N, i, d) * y(N, i + 1));

  Family hook{"hook_monomial"};
  for (std::size_t i = 1; i < N; ++i)
    for (std::size_t k = 0; k < i; ++k)
      for (unsigned d = 1; d <= 4; ++d) {
        const IntPoly lhs = hook_monomial_symmetric(N, i, {d + 1, static_cast<unsigned>(k)});
        IntPoly rhs = hook_monomial_symmetric(N, i, {d, static_cast<unsigned>(k)}) * y(N, i + 1);
        if (d == 1) rhs = rhs * BigInt(static_cast<unsigned long>(k + 1));
        check(hook, tag({{"i", i}, {"k", k}, {"d", d}}), lhs, rhs);
      }

  Family extended{"extended_relation"};
  for (std::size_t i = 1; i < N; ++i)
    for (std::size_t k = 1; k <= i; ++k)
      check(extended, tag({{"i", i}, {"k", k}}), (y(N, i) - y(N, i + 1)) * elementary_symmetric(N, i, k),
            IntPoly(N));

  Family interval_kill{"interval_kill"};
  Family absorbed{"absorbed_form"};
  Family factorial_form{"factorial_product"};
  for (std::size_t a = 1; a < N; ++a)
    for (std::size_t b = a; b < N; ++b) {
      const std::size_t k = b - a + 1;
      const IntPoly ek = elementary_symmetric(N, b, k);
      IntPoly prod = IntPoly::constant(N, 1);
      for (std::size_t i = a; i <= b; ++i) prod = prod * elementary_symmetric(N, i, 1);
      check(factorial_form, tag({{"a", a}, {"b", b}}), prod, ek * factorial(k));
      for (std::size_t i = a; i <= b; ++i) {
        check(interval_kill, tag({{"a", a}, {"b", b}, {"i", i}}), (y(N, i) - y(N, i + 1)) * ek, IntPoly(N));
        check(absorbed, tag({{"a", a}, {"b", b}, {"i", i}}), y(N, i) * ek, y(N, b + 1) * ek);
      }
    }

  for (auto* f : {&telescoping, &hook, &extended, &interval_kill, &absorbed, &factorial_form})
    out.push_back(std::move(*f));
}

IntPoly random_poly(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> terms(1, 3), coeff(-3, 3), exp(0, 2);
  IntPoly p(n);
  const int t = terms(rng);
  for (int k = 0; k < t; ++k) {
    std::vector<unsigned> e(n);
    for (auto& x : e) x = static_cast<unsigned>(exp(rng)) * (std::uniform_int_distribution<int>(0, 2)(rng) == 0);
    p.add_term(Monomial(std::move(e)), coeff(rng));
  }
  return p;
}

}  // namespace

RunReport verify_identities(int n, unsigned trials, std::uint64_t seed, DiskCache* cache) {
  if (n < 2 || n > 5) throw std::out_of_range("identities needs 2 <= n <= 5");
  const auto N = static_cast<std::size_t>(n);
  RunReport report;
  report.command = "verify identities";
  report.parameters = {{"n", std::to_string(n)}, {"trials", std::to_string(trials)}, {"seed", std::to_string(seed)}};

  QuotientOracle oracle(n, cache);
  std::vector<Family> lemmas;
  oracle_lemmas(n, oracle, lemmas);

  Family closed{"closed_form_structure_constants"};
  closed.failed = check_closed_forms(n);
  closed.checked = 1;

  std::mt19937_64 rng(seed);
  auto pick = [&rng](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  auto instances = nlohmann::json::array();
  std::size_t random_failures = 0;
  for (unsigned t = 0; t < trials; ++t) {
    std::string family, params;
    IntPoly lhs(N), rhs(N);
    switch (t % 4) {
      case 0: {
        family = "pascal";
        const std::size_t b = pick(1, N), k = pick(1, b);
        lhs = e_prefix(N, b, k);
        rhs = e_prefix(N, b - 1, k) + e_prefix(N, b - 1, k - 1) * y(N, b);
        params = "b=" + str(b) + " k=" + str(k);
        break;
      }
      case 1: {
        family = "splitting";
        const std::size_t b = pick(1, N), a = pick(0, b), k = pick(0, b);
        lhs = e_prefix(N, b, k);
        for (std::size_t j = 0; j <= k; ++j) rhs += e_prefix(N, a, j) * e_range(N, a + 1, b, k - j);
        params = "a=" + str(a) + " b=" + str(b) + " k=" + str(k);
        break;
      }
      case 2: {
        family = "power_sum_times_elementary";
        const std::size_t i = pick(2, N), k = pick(1, i - 1);
        const auto d = static_cast<unsigned>(pick(1, 4));
        const auto uk = static_cast<unsigned>(k);
        lhs = power_sum_prefix(N, i, d) * elementary_symmetric(N, i, k);
        rhs = hook_monomial_symmetric(N, i, {d + 1, uk - 1}) +
              hook_monomial_symmetric(N, i, {d, uk}) * BigInt(d == 1 ? k + 1 : 1);
        params = "i=" + str(i) + " k=" + str(k) + " d=" + std::to_string(d);
        break;
      }
      default: {
        family = "ring_axioms";
        const IntPoly p = random_poly(N, rng), q = random_poly(N, rng), r = random_poly(N, rng);
        lhs = (p + q) * r * p;
        rhs = p * (r * p) + (q * r) * p;
        params = "p=" + p.to_string() + " q=" + q.to_string() + " r=" + r.to_string();
        break;
      }
    }
    const IntPoly s = random_poly(N, rng);
    const bool ok = lhs * s == rhs * s && lhs == rhs;
    if (!ok) {
      ++random_failures;
      report.fail("random " + family + " " + params);
    }
    instances.push_back({{"trial", str(t)}, {"family", family}, {"params", params}, {"pass", ok}});
  }

  auto fams = nlohmann::json::array();
  for (const auto& f : lemmas) {
    for (const auto& b : f.failed) report.fail(f.name + " " + b);
    fams.push_back(f.to_json());
  }
  for (const auto& b : closed.failed) report.fail(b);
  fams.push_back(closed.to_json());
  report.payload = {{"lemmas", std::move(fams)},
                    {"random", {{"trials", str(trials)}, {"failed", str(random_failures)}, {"instances", std::move(instances)}}}};
  return report;
}

}  // namespace petcoh
