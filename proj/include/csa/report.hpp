#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace csa {

/// One basis tuple where an identity fails, with both sides rendered exactly.
/// Indices are 0-based here; serializers shift them to 1-based.
struct Violation {
  std::vector<std::size_t> index;
  std::string lhs;
  std::string rhs;
};

struct CheckResult {
  bool pass = true;
  std::optional<Violation> violation;

  static CheckResult ok() { return {}; }
  static CheckResult fail(Violation v) { return {false, std::move(v)}; }
  explicit operator bool() const { return pass; }
};

struct ReportItem {
  std::string name;
  std::string tag;  // the identity being checked, written as a formula
  CheckResult result;
};

/// Itemized verification outcome. The verdict is the conjunction of items;
/// checks evaluate every item rather than stopping at the first failure.
struct Report {
  std::string subject;
  std::vector<ReportItem> items;

  [[nodiscard]] bool verdict() const {
    for (const auto& item : items) {
      if (!item.result.pass) return false;
    }
    return true;
  }
  [[nodiscard]] const ReportItem* find(const std::string& name) const {
    for (const auto& item : items) {
      if (item.name == name) return &item;
    }
    return nullptr;
  }
  [[nodiscard]] bool passed(const std::string& name) const {
    const auto* item = find(name);
    return item != nullptr && item->result.pass;
  }
  void add(std::string name, std::string tag, CheckResult result) {
    items.push_back({std::move(name), std::move(tag), std::move(result)});
  }
};

}  // namespace csa
