#include "ddalab/report.hpp"

#include <algorithm>

namespace ddalab {

void Report::merge(const Report& other, const std::string& prefix) {
  for (auto c : other.checks_) {
    c.id = prefix + c.id;
    checks_.push_back(std::move(c));
  }
}

bool Report::ok() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return !c.holds; }));
}

std::vector<Check> Report::sorted() const {
  std::vector<Check> out = checks_;
  std::stable_sort(out.begin(), out.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
  return out;
}

const Check* Report::find(const std::string& id) const {
  for (const auto& c : checks_)
    if (c.id == id) return &c;
  return nullptr;
}

bool Report::holds(const std::string& id) const {
  const Check* c = find(id);
  return c && c->holds;
}

}  // namespace ddalab
