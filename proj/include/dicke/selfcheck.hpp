#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dicke::check {

struct CheckConfig {
  int n_atoms = 0;  // 0: each suite uses its own range
  std::uint64_t seed = 20240611;
};

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

const std::vector<std::string>& suite_names();

/// Throws DomainError for an unknown suite name.
SuiteResult run_suite(const std::string& name, const CheckConfig& config);

std::vector<SuiteResult> run_all(const CheckConfig& config);

}  // namespace dicke::check
