// petcoh: compute, tabulate and verify the integral Peterson ring.
//
// Exit codes: 0 pass, 1 verification failure, 2 usage error.

#include "petcoh/cache.hpp"
#include "petcoh/combinat.hpp"
#include "petcoh/errors.hpp"
#include "petcoh/permfan.hpp"
#include "petcoh/petring.hpp"
#include "petcoh/quotient_oracle.hpp"
#include "petcoh/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <thread>

using namespace petcoh;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Globals {
  bool json = false;
  std::string out;
  std::string cache_dir;
  bool no_cache = false;
  unsigned jobs = std::max(1U, std::thread::hardware_concurrency());
  std::unique_ptr<DiskCache> cache;

  DiskCache* disk() {
    if (no_cache) return nullptr;
    if (!cache) cache = std::make_unique<DiskCache>(cache_dir.empty() ? default_cache_dir() : std::filesystem::path(cache_dir));
    return cache.get();
  }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out);
  if (!f) throw UsageError("cannot open " + g.out + " for writing");
  f << text;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

/// Accepts `{1,2}|{4}`, `{1,2,4}`, `{}` and the brace-free `1,2|4`.
SubsetJ parse_subset(int n, const std::string& text) {
  if (text.find('{') != std::string::npos) return SubsetJ::parse(n, text);
  std::string wrapped;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, '|')) wrapped += (wrapped.empty() ? "{" : "|{") + part + "}";
  return SubsetJ::parse(n, wrapped.empty() ? "{}" : wrapped);
}

std::string factored_form(const SubsetJ& j) {
  const auto comps = connected_components(j);
  if (comps.empty()) return "1";
  std::string s;
  for (const auto& c : comps) {
    if (!s.empty()) s += "*";
    s += "e" + std::to_string(c.size()) + "(";
    if (c.b == 1) {
      s += "y1";
    } else if (c.b == 2) {
      s += "y1,y2";
    } else {
      s += "y1..y" + std::to_string(c.b);
    }
    s += ")";
  }
  return s;
}

// ---------------------------------------------------------------------------

int cmd_basis(Globals& g, int n, bool expand) {
  const auto subsets = all_subsets(n);
  if (g.json) {
    RunReport r;
    r.command = "basis";
    r.parameters = {{"n", std::to_string(n)}, {"expand", expand}};
    auto rows = nlohmann::json::array();
    for (const auto& j : subsets) {
      auto comps = nlohmann::json::array();
      for (const auto& c : connected_components(j)) comps.push_back({std::to_string(c.a), std::to_string(c.b)});
      nlohmann::json row = {{"subset", j.to_string()},
                            {"members", j.to_json()},
                            {"degree", std::to_string(j.size())},
                            {"components", std::move(comps)},
                            {"m", m_factor(j).get_str()},
                            {"factored", factored_form(j)}};
      if (expand) row["polynomial"] = pi_to_polynomial(j).to_json();
      rows.push_back(std::move(row));
    }
    r.payload = {{"count", std::to_string(subsets.size())}, {"basis", std::move(rows)}};
    emit(g, dump(r.to_json()));
    return kExitPass;
  }
  std::ostringstream os;
  for (const auto& j : subsets) {
    const std::string factored = factored_form(j);
    os << j.to_string() << " -> " << factored;
    if (expand && factored != "1") os << " = " << pi_to_polynomial(j).to_string();
    os << "  (m=" << m_factor(j).get_str() << ")\n";
  }
  emit(g, os.str());
  return kExitPass;
}

int cmd_mult(Globals& g, int n, const std::string& js, const std::string& ks) {
  const SubsetJ j = parse_subset(n, js), k = parse_subset(n, ks);
  const PetClass p = mult_basis(j, k);
  if (g.json) {
    RunReport r;
    r.command = "mult";
    r.parameters = {{"n", std::to_string(n)}, {"J", j.to_string()}, {"K", k.to_string()}};
    r.payload = {{"product", p.to_json()}, {"text", p.to_string()}};
    emit(g, dump(r.to_json()));
  } else {
    emit(g, p.to_string() + "\n");
  }
  return kExitPass;
}

int cmd_verify(Globals& g, const std::string& which, int n, int max_degree, unsigned trials,
               std::uint64_t seed) {
  RunReport r;
  if (which == "presentation") {
    PresentationOptions opts;
    opts.n = n;
    opts.max_degree = max_degree;
    opts.cache = g.disk();
    opts.jobs = g.jobs;
    r = verify_presentation(opts);
  } else if (which == "theorem-a") {
    r = verify_theorem_a(n, g.disk(), g.jobs);
  } else {
    r = verify_identities(n, trials, seed, g.disk());
  }

  if (g.json) {
    emit(g, dump(r.to_json()));
  } else {
    std::ostringstream os;
    os << r.command << " n=" << n << ": " << (r.pass ? "PASS" : "FAIL") << "\n";
    const auto& p = r.payload;
    if (which == "presentation") {
      os << "  ranks:";
      for (const auto& x : p.at("ranks")) os << " " << x.get<std::string>();
      os << "  (total " << p.at("total_rank").get<std::string>() << ")\n";
      if (p.contains("products"))
        os << "  products checked: " << p.at("products").at("checked").get<std::string>() << "\n";
    } else if (which == "theorem-a") {
      os << "  invariant ranks:";
      for (const auto& x : p.at("invariant_ranks")) os << " " << x.get<std::string>();
      os << "\n  peterson ranks: ";
      for (const auto& x : p.at("peterson_ranks")) os << " " << x.get<std::string>();
      os << "\n  betti total " << p.at("betti_total").get<std::string>() << " = " << n << "!\n";
    } else {
      for (const auto& f : p.at("lemmas"))
        os << "  " << f.at("name").get<std::string>() << ": " << f.at("checked").get<std::string>()
           << " checked, " << f.at("failed").size() << " failed\n";
      os << "  random instances: " << p.at("random").at("trials").get<std::string>() << ", failed "
         << p.at("random").at("failed").get<std::string>() << "\n";
    }
    for (const auto& f : r.failures) os << "  failure: " << f << "\n";
    emit(g, os.str());
  }
  return r.pass ? kExitPass : kExitFail;
}

int cmd_table(Globals& g, int n, bool check) {
  if (n > 6) throw UsageError("table is limited to n <= 6");
  if (check && n > 5) throw UsageError("table --check is limited to n <= 5");
  const auto subsets = all_subsets(n);
  DiskCache* cache = g.disk();
  const std::string key = content_hash("mult-table n=" + std::to_string(n));

  nlohmann::json entries;
  bool from_cache = false;
  if (cache) {
    if (auto hit = cache->load("table", key); hit && hit->is_array() && hit->size() == subsets.size() * subsets.size()) {
      entries = *hit;
      from_cache = true;
    }
  }
  if (!from_cache) {
    entries = nlohmann::json::array();
    for (const auto& j : subsets)
      for (const auto& k : subsets)
        entries.push_back({{"J", j.to_string()}, {"K", k.to_string()}, {"product", mult_basis(j, k).to_json()}});
    if (cache) cache->store("table", key, entries);
  }

  RunReport r;
  r.command = "table";
  r.parameters = {{"n", std::to_string(n)}, {"check", check}};
  const std::size_t m = subsets.size();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      if (entries[a * m + b].at("product") != entries[b * m + a].at("product"))
        r.fail("table not symmetric at " + subsets[a].to_string() + ", " + subsets[b].to_string());
  if (check) {
    QuotientOracle oracle(n, cache);
    for (const auto& b : compare_products_with_oracle(oracle)) r.fail("oracle mismatch: " + b);
  }
  r.payload = {{"size", std::to_string(m)}, {"entries", std::move(entries)}};

  if (g.json || !g.out.empty()) {
    emit(g, dump(r.to_json()));
  } else {
    std::ostringstream os;
    for (const auto& e : r.payload.at("entries"))
      os << "pi" << e.at("J").get<std::string>() << " * pi" << e.at("K").get<std::string>() << " = "
         << PetClass::from_json(n, e.at("product")).to_string() << "\n";
    for (const auto& f : r.failures) os << "failure: " << f << "\n";
    emit(g, os.str());
  }
  return r.pass ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integral cohomology of Peterson varieties: products, tables and verification suites"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_flag("--json", g.json, "Machine-readable JSON output");
  app.add_option("--out", g.out, "Write output to this file instead of stdout");
  app.add_option("--cache-dir", g.cache_dir, "Directory of the on-disk SNF cache")->envname(kCacheDirEnv);
  app.add_flag("--no-cache", g.no_cache, "Do not read or write the disk cache");
  app.add_option("--jobs", g.jobs, "Worker threads for per-degree work")->check(CLI::Range(1U, 256U));

  int n = 0;
  auto add_n = [&n](CLI::App* sub, int hi) {
    sub->add_option("--n", n, "Number of variables (Peterson variety in GL_n)")->required()->check(CLI::Range(2, hi));
  };

  bool expand = false;
  auto* basis = app.add_subcommand("basis", "List the basis classes pi_J");
  add_n(basis, 16);
  basis->add_flag("--expand", expand, "Print each pi_J expanded in y1..yn (default for n <= 6)");

  std::string js, ks;
  auto* mult = app.add_subcommand("mult", "Product pi_J * pi_K in the pi-basis");
  add_n(mult, 16);
  mult->add_option("J", js, "Subset, e.g. '{1,2}|{4}' or 1,2,4")->required();
  mult->add_option("K", ks, "Subset")->required();

  std::string which;
  int max_degree = -1;
  unsigned trials = 100;
  std::uint64_t seed = 0;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", which, "presentation | theorem-a | identities")
      ->required()
      ->check(CLI::IsMember({"presentation", "theorem-a", "identities"}));
  add_n(verify, 6);
  verify->add_option("--max-degree", max_degree, "Highest degree checked (default n)")->check(CLI::Range(0, 64));
  verify->add_option("--trials", trials, "Random instances for identities");
  verify->add_option("--seed", seed, "Seed for identities");

  bool check = false;
  auto* table = app.add_subcommand("table", "Full multiplication table of the pi-basis as JSON");
  add_n(table, 16);
  table->add_flag("--check", check, "Compare every entry with the brute-force quotient");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  int code = kExitPass;
  try {
    if (*basis) code = cmd_basis(g, n, expand || n <= 6);
    if (*mult) code = cmd_mult(g, n, js, ks);
    if (*verify) code = cmd_verify(g, which, n, max_degree, trials, seed);
    if (*table) code = cmd_table(g, n, check);
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    if (g.json) std::cout << dump({{"pass", false}, {"failures", {e.what()}}});
    return kExitFail;
  } catch (const SizeLimitError& e) {
    std::cerr << "size limit: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return kExitFail;
  }
  if (!g.json) {
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    std::cerr << "elapsed " << dt.count() << " s\n";
  }
  return code;
}
