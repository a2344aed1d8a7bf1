#pragma once

#include <string>
#include <utility>
#include <vector>

namespace negspin {

struct CheckEntry {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

// A named list of residual checks. A NaN residual never passes.
class CheckReport {
 public:
  CheckReport() = default;

  const CheckEntry& add(std::string name, double residual, double tolerance) {
    entries_.push_back({std::move(name), residual, tolerance, residual < tolerance});
    return entries_.back();
  }

  void append(const CheckReport& other, const std::string& prefix = {}) {
    for (const auto& e : other.entries_) {
      entries_.push_back({prefix + e.name, e.residual, e.tolerance, e.pass});
    }
  }

  const std::vector<CheckEntry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  bool overall_pass() const noexcept {
    for (const auto& e : entries_) {
      if (!e.pass) return false;
    }
    return true;
  }

  const CheckEntry* find(const std::string& name) const noexcept {
    for (const auto& e : entries_) {
      if (e.name == name) return &e;
    }
    return nullptr;
  }

  double max_residual() const noexcept {
    double m = 0.0;
    for (const auto& e : entries_) {
      if (e.residual > m || e.residual != e.residual) m = e.residual;
    }
    return m;
  }

 private:
  std::vector<CheckEntry> entries_;
};

}  // namespace negspin
