#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace crsym {

enum class Status { pass, fail, finding };
const char* status_name(Status s);

struct Witness {
  std::string check;
  std::string detail;
};

struct CheckLine {
  std::string name;
  Status status = Status::pass;
  std::size_t cases = 0;
  std::string note;
};

class VerificationReport {
 public:
  static constexpr int kSchemaVersion = 1;
  static constexpr std::size_t kMaxWitnesses = 25;

  VerificationReport() = default;
  explicit VerificationReport(std::string suite) : suite_(std::move(suite)) {}

  const std::string& suite() const { return suite_; }
  Status status() const { return status_; }
  bool passed() const { return status_ == Status::pass; }
  const std::vector<CheckLine>& checks() const { return checks_; }
  const std::vector<Witness>& witnesses() const { return witnesses_; }
  const std::vector<std::pair<std::string, std::string>>& params() const { return params_; }
  double seconds() const { return seconds_; }

  void set_param(const std::string& key, const std::string& value);
  void set_param(const std::string& key, long value) { set_param(key, std::to_string(value)); }
  void set_seconds(double s) { seconds_ = s; }

  // Opens a named check; subsequent record_* calls attach to it.
  CheckLine& begin(const std::string& name, const std::string& note = "");
  void record_case(bool ok, const std::string& witness = "");
  void record_finding(const std::string& witness);
  void note(const std::string& text);
  void merge(const VerificationReport& child, const std::string& prefix = "");

  nlohmann::json to_json(bool with_timing = false) const;
  std::string summary() const;

 private:
  void escalate(Status s);
  void add_witness(const std::string& detail);

  std::string suite_;
  Status status_ = Status::pass;
  std::vector<std::pair<std::string, std::string>> params_;
  std::vector<CheckLine> checks_;
  std::vector<Witness> witnesses_;
  std::vector<std::string> notes_;
  std::size_t dropped_witnesses_ = 0;
  double seconds_ = 0;
};

}  // namespace crsym
