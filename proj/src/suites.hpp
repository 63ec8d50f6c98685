// Verification suites: deterministic bundles of exact checks behind the
// command-line `verify` command. Every check carries a stable id; a report
// lists its checks in id order and passes overall iff each check passes.
#pragma once

#include <string>
#include <vector>

#include "serialize.hpp"

namespace cdgl {

struct SuiteOptions {
  int truncation = 4;
  int cap = 3;
  int seed = 0;
  std::string model = "s2";  // homotopy suite target: "s2" or "wedge"
};

struct CheckResult {
  std::string id;
  bool passed = false;
  std::string detail;  // residue summary and recorded values, exact
  double seconds = 0;
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool passed = false;
};

// The seven suites, in canonical order.
const std::vector<std::string>& suite_names();

// Runs one suite. Throws std::invalid_argument for an unknown suite name, an
// unknown model, or options outside the suite's documented range.
VerificationReport run_suite(const std::string& suite, const SuiteOptions& opt);

// Renderings are byte-stable for fixed flags and seed; per-check wall-clock
// timings are opt-in because they vary between otherwise identical runs.
std::string render_text(const VerificationReport& r, bool timings = false);
Json report_to_json(const VerificationReport& r, bool timings = false);

}  // namespace cdgl
