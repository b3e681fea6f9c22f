#pragma once

#include <string>
#include <vector>

namespace ballmagic {

struct ClaimResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<ClaimResult> claims;

  bool pass() const {
    for (const ClaimResult& c : claims)
      if (!c.pass) return false;
    return true;
  }
};

/// Suites behind `verify --suite`: ball99, census, revdiv-complete, squares,
/// decompose, and all. Random sweeps run from fixed seeds so a suite gives
/// the same verdict every run.
SuiteResult run_verify_suite(const std::string& name, unsigned threads = 0);

const std::vector<std::string>& verify_suite_names();

}  // namespace ballmagic
