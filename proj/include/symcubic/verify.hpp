#pragma once
// Named verification suites: each recomputes a family of results and
// compares them against the expected values.

#include <string>
#include <vector>

#include "symcubic/lines.hpp"

namespace symcubic {

struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool passed = false;
};

struct SuiteResult {
  std::string suite;
  std::vector<Check> checks;
  double seconds = 0;
  bool passed() const;
};

struct VerifyOptions {
  int max_split = kDefaultMaxSplit;
  int jobs = 1;
};

// table2, weyl, lines, galois, theorem2, corollary1, singular, isomorphism,
// prop1 (= singular + isomorphism), paper-maps, heisenberg, properties.
const std::vector<std::string>& suite_names();
// "all" runs every suite except prop1 (covered by its parts).  Throws
// UnknownName for other names.
std::vector<SuiteResult> run_suite(const std::string& name, const VerifyOptions& opt = {});

} // namespace symcubic
