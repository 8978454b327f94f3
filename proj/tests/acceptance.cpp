// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include "jordanlab/cli.hpp"
#include "jordanlab/counterexamples.hpp"
#include "jordanlab/families.hpp"
#include "jordanlab/suite.hpp"

#include <fmt/format.h>

#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

using namespace jordanlab;

namespace {

std::uint64_t g_seed = 20240601;

const std::vector<std::string> kFamilies = {"sym_r:3", "herm_c:3", "herm_q:2", "spin:5", "albert"};

struct Requirement {
  std::string property;
  int trials;
  double max_borderline_fraction = 0.0;  // 0 means borderline trials are only reported
};

struct Criterion {
  int number;
  std::string title;
  bool pass = true;
  std::vector<std::string> details;
};

const Family& family(const std::string& spec) {
  static std::vector<std::pair<std::string, Family>> cache;
  for (const auto& [s, f] : cache) {
    if (s == spec) return f;
  }
  cache.emplace_back(spec, make_family(spec));
  return cache.back().second;
}

void run_requirements(Criterion& c, const std::vector<std::string>& families,
                      const std::vector<Requirement>& reqs) {
  for (const auto& spec : families) {
    for (const auto& req : reqs) {
      const PropertyStats s = run_property(family(spec), find_property(req.property), req.trials, g_seed);
      bool ok = s.fail == 0 && s.trials() == req.trials;
      if (req.max_borderline_fraction > 0.0) {
        ok = ok && s.borderline < req.max_borderline_fraction * req.trials;
      }
      c.pass = c.pass && ok;
      c.details.push_back(fmt::format("{:<9} {:<18} trials={:<5} fail={:<3} borderline={:<3} worst={:.3e}{}", spec,
                                      req.property, s.trials(), s.fail, s.borderline, s.worst,
                                      ok ? "" : "  <--"));
    }
  }
}

Criterion counterexamples() {
  Criterion c{5, "Pauli counterexample patterns"};
  for (const auto& name : counterexample_names()) {
    const CounterexampleResult r = counterexample(name);
    for (const auto& p : r.pairs) {
      c.details.push_back(fmt::format("{:<17} a={} b={} c={} expected \"{}\"{}", name, p.a_holds, p.b_holds,
                                      p.c_holds, p.expected, p.matches ? "" : "  <--"));
    }
    c.pass = c.pass && r.matches();
  }
  return c;
}

Criterion determinism() {
  Criterion c{9, "Suite reports are byte-identical across runs"};
  for (const std::string spec : {"herm_c:3", "albert"}) {
    std::string reports[2];
    for (auto& report : reports) {
      std::ostringstream out, err;
      cli::run({"suite", spec, "--trials", "40", "--seed", "7", "--format", "records"}, out, err);
      report = out.str();
    }
    const bool same = reports[0] == reports[1] && !reports[0].empty();
    c.pass = c.pass && same;
    c.details.push_back(fmt::format("{:<9} {} bytes, identical={}", spec, reports[0].size(), same));
  }
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_seed = std::stoull(argv[1]);
  const auto start = std::chrono::steady_clock::now();
  std::vector<Criterion> criteria;

  criteria.push_back({1, "Jordan identities on random triples"});
  run_requirements(criteria.back(), kFamilies, {{"identities", 1000}});

  criteria.push_back({2, "Operator commutation agrees with ambient commutation"});
  run_requirements(criteria.back(), {"herm_c:3"}, {{"jc_bridge", 1000}});

  criteria.push_back({3, "Equivalence theorem verdicts are consistent"});
  run_requirements(criteria.back(), kFamilies,
                   {{"theorem_commuting", 500, 0.01}, {"theorem_generic", 500, 0.01}});

  criteria.push_back({4, "Positive quadratic criterion"});
  run_requirements(criteria.back(), kFamilies, {{"positive_commuting", 500}, {"positive_generic", 500}});

  criteria.push_back(counterexamples());

  criteria.push_back({6, "Spectral decomposition and order-unit norm"});
  run_requirements(criteria.back(), kFamilies, {{"spectral", 1000}});

  criteria.push_back({7, "Sequential effect algebra axioms"});
  run_requirements(criteria.back(), kFamilies,
                   {{"sea_random", 500}, {"sea_commuting", 500}, {"sea_orthogonal", 100}});

  criteria.push_back({8, "Commutant closure and idempotent associativity"});
  run_requirements(criteria.back(), kFamilies, {{"commutant_closed", 200}, {"idempotent_assoc", 200}});

  criteria.push_back(determinism());

  bool all = true;
  for (const auto& c : criteria) {
    all = all && c.pass;
    std::printf("%s  criterion %d: %s\n", c.pass ? "PASS" : "FAIL", c.number, c.title.c_str());
    for (const auto& d : c.details) std::printf("        %s\n", d.c_str());
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s  %zu criteria, seed %llu, %.1f s\n", all ? "ALL PASS" : "SOME FAILED", criteria.size(),
              static_cast<unsigned long long>(g_seed), elapsed);
  return all ? 0 : 1;
}
