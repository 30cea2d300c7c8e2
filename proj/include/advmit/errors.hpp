#pragma once

#include <stdexcept>
#include <string>

namespace advmit {

/// File could not be opened, read, or written.
struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// File content violates the expected format or a value is out of range.
struct FormatError : std::runtime_error {
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

enum class ClassifierFault {
  kCrash,
  kTimeout,
  kMalformed,
};

/// Failure of an external prediction backend.
class ClassifierError : public std::runtime_error {
 public:
  ClassifierError(ClassifierFault fault, const std::string& what)
      : std::runtime_error(what), fault_(fault) {}

  ClassifierFault fault() const { return fault_; }

 private:
  ClassifierFault fault_;
};

}  // namespace advmit
