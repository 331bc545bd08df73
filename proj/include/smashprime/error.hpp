#pragma once

#include <stdexcept>
#include <string>

namespace smashprime {

/// Classifies failures so the CLI can map them to exit codes.
enum class ErrorKind {
  input,        // malformed or inconsistent caller data
  unsupported,  // valid input outside the supported regime (e.g. small characteristic)
  internal      // invariant breakage; indicates a bug, never caller error
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void throw_input(const std::string& msg) { throw Error(ErrorKind::input, msg); }
[[noreturn]] inline void throw_unsupported(const std::string& msg) { throw Error(ErrorKind::unsupported, msg); }
[[noreturn]] inline void throw_internal(const std::string& msg) { throw Error(ErrorKind::internal, msg); }

}  // namespace smashprime
