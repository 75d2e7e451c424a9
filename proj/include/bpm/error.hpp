#pragma once

#include <stdexcept>
#include <string>

namespace bpm {

enum class ErrorCode {
  SizeLimit,
  NotTotallyOrdered,
  NotSortedOrdered,
  DegenerateSequence,
  EmptyGraph,
  PreconditionViolated,
  DimensionMismatch,
  DomainError,
  NumericalFailure,
  ParseError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Configured caps. The CLI exposes them in --help and lets --huge lift the
// exhaustive ones by one step.
namespace limits {
inline constexpr int kMaxSide = 32;
inline constexpr int kMaxHetyeiSide = 5;
inline constexpr int kMaxMobiusEdges = 25;
inline constexpr int kMaxSupergraphSide = 4;
inline constexpr int kMaxPermittedSide = 5;
inline constexpr int kMaxTableSide = 4;
inline constexpr int kMaxTableSideHuge = 5;
inline constexpr int kMaxSequenceSide = 10;
inline constexpr int kMaxMaterializeSide = 4;
inline constexpr int kMaxSensitivitySide = 16;
inline constexpr int kMaxAndVariables = 256;
inline constexpr int kMaxAndVariablesHuge = 4096;
inline constexpr int kMaxBoundSide = 64;
inline constexpr int kMaxAssembleSide = 3;
}  // namespace limits

inline void require_size(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::SizeLimit, what);
}

}  // namespace bpm
