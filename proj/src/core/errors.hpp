#pragma once

#include <stdexcept>
#include <string>

namespace rspace {

/// Violation of a documented mathematical precondition: parameters outside a
/// family's range, a non-dominant weight, an insufficient truncation bound, ...
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed textual input: unparseable case name, rational, weight list, ...
class UsageError : public std::runtime_error {
public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace rspace
