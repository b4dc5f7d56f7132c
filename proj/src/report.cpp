#include "skewpbw/report.hpp"

#include <exception>
#include <json.hpp>

namespace skewpbw {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Discrepancy:
      return "discrepancy";
  }
  return "fail";
}

void Report::add(std::string name, std::string claim, bool ok, std::string detail) {
  checks_.push_back({std::move(name), std::move(claim), ok ? Status::Pass : Status::Fail, std::move(detail)});
}

void Report::run(const std::string& name, const std::string& claim, const std::function<Check()>& body) {
  Check c;
  try {
    c = body();
  } catch (const std::exception& e) {
    c.status = Status::Fail;
    c.detail = std::string("exception: ") + e.what();
  }
  c.name = name;
  c.claim = claim;
  checks_.push_back(std::move(c));
}

void Report::append(const Report& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

std::size_t Report::count(Status s) const {
  std::size_t n = 0;
  for (const auto& c : checks_) n += c.status == s ? 1 : 0;
  return n;
}

const Check* Report::find(const std::string& name) const {
  for (const auto& c : checks_) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::string Report::to_jsonl() const {
  std::string out;
  for (const auto& c : checks_) {
    nlohmann::ordered_json j;
    j["name"] = c.name;
    j["claim"] = c.claim;
    j["status"] = to_string(c.status);
    j["detail"] = c.detail;
    out += j.dump() + "\n";
  }
  return out;
}

}  // namespace skewpbw
