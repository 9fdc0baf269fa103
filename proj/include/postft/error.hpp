#pragma once

#include <stdexcept>
#include <string>

namespace postft {

// Error kinds mirror the failure modes named in the public contracts; the CLI
// maps them onto its exit-1 JSON error object.
enum class ErrorKind {
  DescriptorMismatch,
  GroundSetMismatch,
  UnsupportedEnumeration,
  InvalidArgument,
  InvalidInput,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

  const char* kind_name() const {
    switch (kind_) {
      case ErrorKind::DescriptorMismatch: return "descriptor-mismatch";
      case ErrorKind::GroundSetMismatch: return "ground-set-mismatch";
      case ErrorKind::UnsupportedEnumeration: return "unsupported-enumeration";
      case ErrorKind::InvalidArgument: return "invalid-argument";
      case ErrorKind::InvalidInput: return "invalid-input";
    }
    return "error";
  }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace postft
