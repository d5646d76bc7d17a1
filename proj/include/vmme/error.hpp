#ifndef VMME_ERROR_HPP
#define VMME_ERROR_HPP

#include <stdexcept>
#include <string>

namespace vmme {

// Invalid configuration, parameters out of range, malformed input data.
// Maps to CLI exit code 2.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Filesystem failures (unreadable/unwritable paths). CLI exit code 3.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// A model produced an inconsistent result (e.g. an activity probability
// above 1). Treated as a validation failure at the CLI boundary.
class ModelError : public std::runtime_error {
 public:
  explicit ModelError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace vmme

#endif
