#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace mdcsim {

// Precondition or invariant violation on a model quantity.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& message) : std::domain_error(message) {}
};

// Rejected scenario or CLI input. Carries the offending field path when known
// so the driver can report "sites[0].stack_height: ..." style messages.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& message) : std::runtime_error(message) {}
  ValidationError(std::string path, const std::string& message)
      : std::runtime_error(path.empty() ? message : path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace mdcsim
