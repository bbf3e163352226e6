#pragma once

// Verification suites: library results checked against the explicit group.

#include <string>
#include <string_view>
#include <vector>

namespace szm {

struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass;
  double elapsed_ms;
};

struct Report {
  unsigned e;
  std::string suite;
  std::vector<Check> checks;
  std::vector<std::string> notes;

  bool passed() const;
};

struct VerifyOptions {
  unsigned jobs = 1;
  bool opt_in_slow = false;
};

/// field, group, normalizers, ncounts, mobius, census, pairs.
std::vector<std::string> const& suite_names();

/// Whether the suite can run at this e. Everything runs at e = 3; field and
/// group also run at e = 1 and e = 5.
bool suite_supported(std::string_view suite, unsigned e);

/// Runs one suite, or every supported suite for "all". Throws
/// std::invalid_argument for unknown or unsupported combinations.
Report run_suite(std::string_view suite, unsigned e, VerifyOptions const& options);

}  // namespace szm
