#pragma once

// Seeded randomized property suites over one algebra family. Every trial
// draws from its own generator (master seed xor trial index, plus a
// per-property stream), so results do not depend on execution order.

#include "jordanlab/families.hpp"
#include "jordanlab/random.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace jordanlab {

enum class Outcome { Pass, Fail, Borderline };

struct TrialResult {
  Outcome outcome = Outcome::Pass;
  double residual = 0.0;
};

struct SuiteOptions {
  double tol = 1e-8;  // commutation / identity tolerance
};

using PropertyFn = TrialResult (*)(const Family&, Rng&, std::uint64_t trial, const SuiteOptions&);

struct PropertySpec {
  const char* name;
  PropertyFn fn;
  bool needs_ambient = false;
  // Separation properties report a margin that is worst when smallest.
  bool lower_is_worse = false;
};

/// Registered properties, in report order.
const std::vector<PropertySpec>& suite_properties();
const PropertySpec& find_property(const std::string& name);

struct PropertyStats {
  std::string name;
  int pass = 0;
  int fail = 0;
  int borderline = 0;
  double worst = 0.0;

  int trials() const { return pass + fail + borderline; }
};

struct SuiteReport {
  std::string family;
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<PropertyStats> properties;
  double elapsed_seconds = 0.0;

  int failures() const;
};

PropertyStats run_property(const Family& family, const PropertySpec& property, int trials,
                           std::uint64_t seed, const SuiteOptions& options = {});

/// Runs every applicable property `trials` times.
SuiteReport run_suite(const Family& family, int trials, std::uint64_t seed, const SuiteOptions& options = {});

/// Machine-readable report; deterministic (no timing information).
std::string format_records(const SuiteReport& report);
std::string format_human(const SuiteReport& report);

}  // namespace jordanlab
