#include "crsym/report.hpp"

#include <sstream>

namespace crsym {

const char* status_name(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::finding:
      return "finding";
  }
  return "?";
}

void VerificationReport::set_param(const std::string& key, const std::string& value) {
  for (auto& [k, v] : params_) {
    if (k == key) {
      v = value;
      return;
    }
  }
  params_.emplace_back(key, value);
}

CheckLine& VerificationReport::begin(const std::string& name, const std::string& note) {
  checks_.push_back(CheckLine{name, Status::pass, 0, note});
  return checks_.back();
}

void VerificationReport::escalate(Status s) {
  // fail dominates finding, finding dominates pass
  if (s == Status::fail) status_ = Status::fail;
  if (s == Status::finding && status_ == Status::pass) status_ = Status::finding;
}

void VerificationReport::add_witness(const std::string& detail) {
  if (witnesses_.size() < kMaxWitnesses) {
    witnesses_.push_back(Witness{checks_.empty() ? suite_ : checks_.back().name, detail});
  } else {
    ++dropped_witnesses_;
  }
}

void VerificationReport::record_case(bool ok, const std::string& witness) {
  if (checks_.empty()) begin(suite_);
  auto& c = checks_.back();
  ++c.cases;
  if (ok) return;
  c.status = Status::fail;
  escalate(Status::fail);
  add_witness(witness);
}

void VerificationReport::record_finding(const std::string& witness) {
  if (checks_.empty()) begin(suite_);
  auto& c = checks_.back();
  ++c.cases;
  if (c.status == Status::pass) c.status = Status::finding;
  escalate(Status::finding);
  add_witness(witness);
}

void VerificationReport::note(const std::string& text) { notes_.push_back(text); }

void VerificationReport::merge(const VerificationReport& child, const std::string& prefix) {
  std::string p = prefix.empty() ? child.suite_ + "/" : prefix;
  for (auto c : child.checks_) {
    c.name = p + c.name;
    checks_.push_back(std::move(c));
  }
  for (auto w : child.witnesses_) {
    if (witnesses_.size() < kMaxWitnesses) {
      w.check = p + w.check;
      witnesses_.push_back(std::move(w));
    } else {
      ++dropped_witnesses_;
    }
  }
  dropped_witnesses_ += child.dropped_witnesses_;
  for (const auto& n : child.notes_) notes_.push_back(p + n);
  escalate(child.status_);
  seconds_ += child.seconds_;
}

nlohmann::json VerificationReport::to_json(bool with_timing) const {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["suite"] = suite_;
  j["status"] = status_name(status_);
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [k, v] : params_) params[k] = v;
  j["params"] = params;
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : checks_) {
    nlohmann::json cj = {{"name", c.name}, {"status", status_name(c.status)}, {"cases", c.cases}};
    if (!c.note.empty()) cj["note"] = c.note;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  nlohmann::json wit = nlohmann::json::array();
  for (const auto& w : witnesses_) wit.push_back({{"check", w.check}, {"detail", w.detail}});
  j["witnesses"] = wit;
  if (dropped_witnesses_) j["witnesses_dropped"] = dropped_witnesses_;
  if (!notes_.empty()) j["notes"] = notes_;
  if (with_timing) j["timing_seconds"] = seconds_;
  return j;
}

std::string VerificationReport::summary() const {
  std::ostringstream os;
  os << suite_ << ": " << status_name(status_);
  std::size_t cases = 0;
  for (const auto& c : checks_) cases += c.cases;
  os << " (" << checks_.size() << " checks, " << cases << " cases)";
  return os.str();
}

}  // namespace crsym
