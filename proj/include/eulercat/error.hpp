#pragma once

#include <stdexcept>
#include <string>

namespace eulercat {

// Every failure mode the library reports. CLI exit codes: ParseError -> 2,
// anything else -> 1.
enum class Errc {
  DuplicateObject,
  MissingIdentity,
  NotComposable,
  ShapeMismatch,
  UnknownObject,
  NotAcyclic,
  CapExceeded,
  MissingValue,
  NotClassClosed,
  NotDefinable,
  NotMeasurable,
  NotMeasurableMap,
  SourceTargetMismatch,
  TargetNotPoset,
  CycleDetected,
  NotCoverEdge,
  UnknownNode,
  InvalidPlacement,
  NotMonotone,
  ParseError,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

  Errc code() const { return code_; }
  const char* code_name() const { return errc_name(code_); }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace eulercat
