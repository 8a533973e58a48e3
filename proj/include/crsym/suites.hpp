#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "crsym/report.hpp"

namespace crsym {

struct SuiteParams {
  std::optional<int> n, d, s, k, dim, w1, w2, deg;
  std::uint64_t seed = 1;
};

class ParamError : public std::invalid_argument {
 public:
  explicit ParamError(const std::vector<std::string>& reasons);
  const std::vector<std::string>& reasons() const { return reasons_; }

 private:
  std::vector<std::string> reasons_;
};

class UnknownSuite : public std::invalid_argument {
 public:
  explicit UnknownSuite(const std::string& name) : std::invalid_argument("unknown suite: " + name) {}
};

const std::vector<std::string>& suite_names();
// Throws UnknownSuite or ParamError before any computation starts.
void validate_suite(const std::string& suite, const SuiteParams& p);
VerificationReport run_suite(const std::string& suite, const SuiteParams& p);

// Rows: check name, status, cases, note.
std::string report_csv(const VerificationReport& r);

}  // namespace crsym
