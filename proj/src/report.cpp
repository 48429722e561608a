#include "skein/report.hpp"

#include <chrono>
#include <exception>
#include <json.hpp>
#include <sstream>

namespace skein {

bool VerificationReport::passed() const {
  for (const auto& c : checks)
    if (!c.pass && !c.exploratory) return false;
  return true;
}

void VerificationReport::append(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  seconds += other.seconds;
}

std::string VerificationReport::to_json(bool include_timing) const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json e;
    e["id"] = c.id;
    e["anchor"] = c.anchor;
    e["pass"] = c.pass;
    e["residual"] = c.pass ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(c.residual);
    if (c.exploratory) e["exploratory"] = true;
    j["checks"].push_back(std::move(e));
  }
  if (include_timing) j["seconds"] = seconds;
  return j.dump(2);
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  int failed = 0;
  for (const auto& c : checks) {
    os << (c.pass ? "PASS " : (c.exploratory ? "NOTE " : "FAIL ")) << c.id << "  (" << c.anchor << ")\n";
    if (!c.pass) {
      os << "     residual: " << c.residual << "\n";
      if (!c.exploratory) ++failed;
    }
  }
  os << suite << ": " << checks.size() - failed << "/" << checks.size() << " checks passed";
  os << " in " << seconds << " s\n";
  return os.str();
}

VerificationReport run_checks(const std::string& suite, const std::vector<Check>& checks,
                              Execution mode) {
  VerificationReport report;
  report.suite = suite;
  report.checks.resize(checks.size());
  auto start = std::chrono::steady_clock::now();
  auto run_one = [&](std::size_t i) {
    CheckResult& r = report.checks[i];
    r.id = checks[i].id;
    r.anchor = checks[i].anchor;
    r.exploratory = checks[i].exploratory;
    try {
      r.residual = checks[i].run();
      r.pass = r.residual.empty();
    } catch (const std::exception& ex) {
      r.pass = false;
      r.residual = std::string("exception: ") + ex.what();
    }
  };
  const auto n = static_cast<long>(checks.size());
  if (mode == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < n; ++i) run_one(static_cast<std::size_t>(i));
  } else {
    for (long i = 0; i < n; ++i) run_one(static_cast<std::size_t>(i));
  }
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace skein
