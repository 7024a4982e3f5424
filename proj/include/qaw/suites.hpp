#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qaw/report.hpp"

namespace qaw {

enum class Suite { all, uqsl2, aw, equitable, little, big, tridiag };

std::string to_string(Suite suite);
/// Throws std::invalid_argument on an unknown name.
Suite parse_suite(const std::string& name);

struct SuiteOptions {
  int n_max = 10;
  bool perturb_sol1 = false;
};

/// Runs the suite at every seed. Reports are ordered by suite, then
/// check_name, then seed.
Reports run_suite(Suite suite, const std::vector<std::int64_t>& seeds, const SuiteOptions& options = {});

}  // namespace qaw
