#pragma once

#include <string>
#include <vector>

#include "core/ideal.hpp"
#include "core/ring.hpp"

namespace exgl {

// Configuration of one verification suite run. Reports are deterministic
// functions of this struct: all sampling derives from `seed`.
struct SuiteConfig {
  std::string ring_spec = "Z/4";
  std::uint32_t n = 3;
  std::vector<elem> ideal_gens;
  std::uint64_t seed = 1;
  std::uint32_t samples = 100;
  std::uint64_t element_cap = 4096;        // ideal closures, exhaustive scans
  std::uint64_t group_cap = 1ull << 20;    // subgroup enumeration

  std::string to_json() const;
  static SuiteConfig from_json(const std::string& json_text);
};

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;  // numbers, bounds, or a re-runnable counterexample payload
};

struct Report {
  std::string suite;
  SuiteConfig config;
  std::vector<CheckResult> checks;

  bool pass() const;
  std::string to_json() const;
  std::string summary() const;  // one line per check
};

inline const char* const kSuiteNames[] = {"relations",          "idempotents", "normality",
                                          "commutator-formula", "sandwich",    "reduction"};

// Runs the named suite: relations, idempotents, normality,
// commutator-formula, sandwich or reduction. Unknown names raise
// errc::argument.
Report run_suite(const std::string& name, const SuiteConfig& config);

}  // namespace exgl
