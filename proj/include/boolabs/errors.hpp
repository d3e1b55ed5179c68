// errors.hpp -- error hierarchy shared by the library and the CLI.

#pragma once

#include <stdexcept>
#include <string>

namespace boolabs {

// Exit-code contract of the command-line tool:
//   0 success, 2 parse/ill-formed input, 3 solver failure or unknown verdict,
//   4 capacity or unsupported-fragment refusal.
struct Error : std::runtime_error {
  int exit_code;
  Error(int code, const std::string& msg) : std::runtime_error(msg), exit_code(code) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error(2, msg) {}
};

struct SolverError : Error {
  explicit SolverError(const std::string& msg) : Error(3, msg) {}
};

struct CapacityError : Error {
  explicit CapacityError(const std::string& msg) : Error(4, msg) {}
};

struct FragmentError : Error {
  explicit FragmentError(const std::string& msg) : Error(4, msg) {}
};

struct InternalError : Error {
  explicit InternalError(const std::string& msg) : Error(1, msg) {}
};

}  // namespace boolabs
