#pragma once

#include <stdexcept>
#include <string>

namespace ais {

/// Failure classes. Each maps onto one CLI exit code.
enum class ErrorKind {
  invalid_input,  // bad arguments, degenerate images, precondition violations
  transport,      // backend unreachable or 5xx; retryable
  permanent,      // backend rejected the request (4xx, unknown adapter, ...)
  manifest,       // style manifest or JSON schema problems
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& what)
      : Error(ErrorKind::invalid_input, what) {}
};

class TransportError : public Error {
 public:
  explicit TransportError(const std::string& what)
      : Error(ErrorKind::transport, what) {}
};

class PermanentError : public Error {
 public:
  explicit PermanentError(const std::string& what)
      : Error(ErrorKind::permanent, what) {}
};

class ManifestError : public Error {
 public:
  explicit ManifestError(const std::string& what)
      : Error(ErrorKind::manifest, what) {}
};

/// Stable process exit codes: 0 ok, 1 transport, 2 invalid input, 3 manifest.
/// Permanent backend rejections are reported as invalid input.
inline int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::transport: return 1;
    case ErrorKind::invalid_input: return 2;
    case ErrorKind::permanent: return 2;
    case ErrorKind::manifest: return 3;
  }
  return 2;
}

}  // namespace ais
