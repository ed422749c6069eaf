// errors.hpp -- typed error conditions shared by every module.
//
// Each failure mode the library can report carries a stable code so callers
// (tests, the CLI exit-status logic) can dispatch without parsing messages.
#pragma once

#include <stdexcept>
#include <string>

namespace gd {

enum class Err {
  // graphs
  LoopEdge,
  DuplicateEdge,
  Disconnected,
  NotRegular,
  NotGenerating,
  NotSymmetricSet,
  UnknownName,
  // spectral
  ClusterAmbiguity,
  UnsupportedFamily,
  BadPermutation,
  KOutOfRange,
  // polytope
  RankDeficient,
  NumericallyDegenerate,
  // gale
  NotAFace,
  NotCombinatorial,
  NotStable,
  BudgetExceeded,
  // cubes_codes
  NoSuchCode,
  // generic bad argument / malformed file
  BadInput,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& msg)
      : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) { throw Error(code, msg); }

}  // namespace gd
