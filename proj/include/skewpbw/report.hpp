#pragma once

#include <functional>
#include <string>
#include <vector>

namespace skewpbw {

enum class Status {
  Pass,
  Fail,
  /// The displayed form fails but a documented correction of it passes.
  Discrepancy,
};

std::string to_string(Status s);

struct Check {
  std::string name;
  std::string claim;
  Status status = Status::Fail;
  std::string detail;
};

/// Ordered list of check records.
class Report {
 public:
  void add(Check c) { checks_.push_back(std::move(c)); }
  void add(std::string name, std::string claim, bool ok, std::string detail = {});
  /// Runs `body`; an exception becomes a failed check carrying its message.
  void run(const std::string& name, const std::string& claim, const std::function<Check()>& body);
  void append(const Report& other);

  const std::vector<Check>& checks() const { return checks_; }
  std::size_t count(Status s) const;
  bool ok() const { return count(Status::Fail) == 0; }
  const Check* find(const std::string& name) const;

  /// One JSON object per line with keys name, claim, status, detail.
  std::string to_jsonl() const;

 private:
  std::vector<Check> checks_;
};

}  // namespace skewpbw
