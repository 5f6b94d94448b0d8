#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace bcr {

/// A configured resource ceiling was hit. limit() names the ceiling.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(std::string limit, const std::string& message)
      : std::runtime_error(message), limit_(std::move(limit)) {}

  const std::string& limit() const noexcept { return limit_; }

 private:
  std::string limit_;
};

}  // namespace bcr
