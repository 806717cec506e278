#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace aovauc {

// Input validation failure carrying every collected issue, so callers can
// report all problems at once instead of aborting on the first one.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<std::string> issues)
      : std::runtime_error(join(issues)), issues_(std::move(issues)) {}

  const std::vector<std::string>& issues() const noexcept { return issues_; }

 private:
  static std::string join(const std::vector<std::string>& issues) {
    std::string out;
    for (const auto& issue : issues) {
      if (!out.empty()) out += '\n';
      out += issue;
    }
    return out;
  }

  std::vector<std::string> issues_;
};

// File-system level failure (missing file, unreadable stream, write error).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace aovauc
