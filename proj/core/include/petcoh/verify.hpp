#pragma once

// Verification suites shared by the command line tool and the test-suite.
// Reports are plain JSON with every integer written as a decimal string and
// no timing information, so equal inputs give byte-identical output.

#include "petcoh/cache.hpp"
#include "petcoh/quotient_oracle.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace petcoh {

struct RunReport {
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  bool pass = true;
  nlohmann::json payload = nlohmann::json::object();
  std::vector<std::string> failures;

  void fail(std::string what);
  nlohmann::json to_json() const;
};

struct PresentationOptions {
  int n = 2;
  int max_degree = -1;     // -1: through degree n, where the quotient must vanish
  bool products = true;    // engine products against the oracle (n <= 5)
  bool certificate = true;  // pi classes form a lattice basis
  DiskCache* cache = nullptr;
  unsigned jobs = 1;
};

/// Per-degree rank and torsion of the brute-force quotient, the pi-basis
/// certificate and (optionally) every basis product against the oracle.
RunReport verify_presentation(const PresentationOptions& opts);

/// Per-degree invariant ranks of the fan cohomology against the graded
/// ranks C(n-1, d) of the Peterson ring; 2 <= n <= 5.
RunReport verify_theorem_a(int n, DiskCache* cache = nullptr, unsigned jobs = 1);

/// Lemma identities checked in the quotient (degree parameter up to 4), the
/// closed-form structure constants, and `trials` seeded random instances of
/// pure polynomial identities.
RunReport verify_identities(int n, unsigned trials, std::uint64_t seed, DiskCache* cache = nullptr);

/// Every product pi_J * pi_K from the engine compared with the oracle's
/// coordinates of the polynomial product. Returns the mismatching pairs.
std::vector<std::string> compare_products_with_oracle(QuotientOracle& oracle);

/// Closed-form checks on the engine alone; returns descriptions of failures.
std::vector<std::string> check_closed_forms(int n);

}  // namespace petcoh
