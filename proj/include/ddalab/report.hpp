#pragma once

#include <string>
#include <vector>

namespace ddalab {

// Outcome of one named check. Witness is empty when the check holds.
struct Check {
  std::string id;
  bool holds = true;
  std::string detail;
  std::string witness;
};

class Report {
 public:
  void add(Check c) { checks_.push_back(std::move(c)); }
  void pass(const std::string& id, const std::string& detail = {}) { add({id, true, detail, {}}); }
  void fail(const std::string& id, const std::string& detail, const std::string& witness) {
    add({id, false, detail, witness});
  }
  void record(const std::string& id, bool holds, const std::string& detail, const std::string& witness = {}) {
    add({id, holds, detail, holds ? std::string() : witness});
  }
  void merge(const Report& other, const std::string& prefix = {});

  bool ok() const;
  std::size_t failures() const;
  const std::vector<Check>& checks() const { return checks_; }
  // Checks ordered by id (stable for equal ids).
  std::vector<Check> sorted() const;
  const Check* find(const std::string& id) const;
  bool holds(const std::string& id) const;

 private:
  std::vector<Check> checks_;
};

}  // namespace ddalab
