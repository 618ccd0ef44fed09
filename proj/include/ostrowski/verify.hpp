#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ostrowski/serialize.hpp"
#include "ostrowski/system.hpp"

namespace ostrowski {

struct Check {
  std::string name;
  bool ok = true;
  std::uint64_t cases = 0;
  std::string detail;  // first counterexample, or a short note
};

struct Report {
  std::string title;
  std::vector<Check> checks;

  bool ok() const;
  const Check* find(const std::string& name) const;
};

// Sweep sizes.  bound drives the sweeps that scale with --bound; the others
// are fixed sizes that can be lowered for quick runs.
struct VerifyOptions {
  std::size_t bound = 2000;
  std::size_t depth = 64;
  std::size_t interp_depth = 20;

  std::size_t int_bijection = 100000;
  std::size_t int_order = 10000;
  std::size_t valid_length = 12;
  std::size_t real_points = 1000;
  std::size_t real_fmap = 10000;
  std::size_t iso_single = 10000;  // one-element sweeps over Z
  std::size_t iso_pairs = 500;     // exhaustive pair sweeps over Z
  std::size_t iso_grid = 200;
  std::size_t gold_single = 10000;
  std::size_t gold_pairs = 1000;
  std::size_t automata_length = 14;
  std::size_t adder_perturbed = 10000;
};

Report verify_contfrac(const SystemPtr& sys, const VerifyOptions& opt);
Report verify_integers(const SystemPtr& sys, const VerifyOptions& opt);
Report verify_reals(const SystemPtr& sys, const VerifyOptions& opt);
// The A, B and C structures; sys must satisfy 1.5 < a < 2.
Report verify_iso(const SystemPtr& sys, const VerifyOptions& opt);
Report verify_interp_suite(const SystemPtr& sys, const VerifyOptions& opt);
Report verify_golden_mul(const VerifyOptions& opt);
Report verify_automata(const SystemPtr& sys, const VerifyOptions& opt);

// Every suite that applies to sys; the iso and interp suites run on the
// normalized system.  Output order is fixed.
std::vector<Report> verify_all(const SystemPtr& sys, const VerifyOptions& opt);

bool all_ok(const std::vector<Report>& reports);
// One PASS/FAIL line per check under a header per report.
std::string format_reports(const std::vector<Report>& reports);
Json reports_json(const std::vector<Report>& reports);

}  // namespace ostrowski
