// Verification suites by name, as run by `skeinalg verify <suite>`.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "skein/report.hpp"

namespace skein {

class UnknownSuiteError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

std::vector<Check> daha_checks();
std::vector<Check> curves_checks();

/// daha, embedding, laurentmod, solidtorus, curves, all.
const std::vector<std::string>& suite_names();
std::vector<Check> suite_checks(const std::string& name);
VerificationReport run_suite(const std::string& name, Execution mode = Execution::parallel);

}  // namespace skein
