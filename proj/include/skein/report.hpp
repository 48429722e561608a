// Verification reports shared by every check suite.
#pragma once

#include <functional>
#include <string>
#include <vector>

namespace skein {

struct CheckResult {
  std::string id;
  std::string anchor;  // the identity being checked, in words
  bool pass = false;
  std::string residual;  // empty on pass
  bool exploratory = false;  // reported but never fails a suite
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckResult> checks;
  double seconds = 0.0;

  bool passed() const;
  void append(const VerificationReport& other);
  std::string to_json(bool include_timing = true) const;
  std::string to_text() const;
};

/// A named check; returns the residual rendering, empty when the identity holds.
struct Check {
  std::string id;
  std::string anchor;
  std::function<std::string()> run;
  bool exploratory = false;
};

enum class Execution { serial, parallel };

/// Runs checks, in parallel across checks when requested; results keep the
/// order of `checks`. Exceptions become failures carrying the message.
VerificationReport run_checks(const std::string& suite, const std::vector<Check>& checks,
                              Execution mode = Execution::parallel);

}  // namespace skein
