#pragma once
// Error types thrown by the library. Each failure mode the callers are
// expected to distinguish gets its own type.

#include <stdexcept>
#include <string>

namespace wlab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BadParameters : Error {
  using Error::Error;
};
struct IndexOutOfRange : Error {
  using Error::Error;
};
struct EdgeAbsent : Error {
  using Error::Error;
};
struct DisconnectedError : Error {
  using Error::Error;
};
struct NotATree : Error {
  using Error::Error;
};
struct TooLarge : Error {
  using Error::Error;
};
struct NonIntegerResult : Error {
  using Error::Error;
};
struct BadFilter : Error {
  using Error::Error;
};
struct TooLargeForGeneration : Error {
  using Error::Error;
};
struct UnsupportedOrder : Error {
  using Error::Error;
};
struct NotALongestPath : Error {
  using Error::Error;
};
struct AlreadyCovered : Error {
  using Error::Error;
};
struct NotInFamily : Error {
  using Error::Error;
};
struct EmptyFamily : Error {
  using Error::Error;
};
struct SourceUnavailable : Error {
  using Error::Error;
};

// Parse failure in a graph6 file; carries the 1-based line number.
struct MalformedRecord : Error {
  int line;
  MalformedRecord(int line_no, const std::string& what)
      : Error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

}  // namespace wlab
