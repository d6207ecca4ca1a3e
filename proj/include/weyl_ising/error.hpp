#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace weyl_ising {

enum class ErrorCode {
  UnsupportedRank,
  NotARoot,
  NotIntegral,
  NotASublattice,
  NotRSSD,
  UnsupportedName,
  RankTooLarge,
  IncompatibleAmbient,
  DependentBasis,
  NotPositiveDefinite,
  NotInHalfLattice,
  WrongShellSize,
  NonRealCocycle,
  RootCreated,
  NoConformalVector,
  NonUniqueConformalVector,
  NotATriple,
  InvalidRelation,
  NotFound,
  InvalidArgument,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnsupportedRank: return "UnsupportedRank";
    case ErrorCode::NotARoot: return "NotARoot";
    case ErrorCode::NotIntegral: return "NotIntegral";
    case ErrorCode::NotASublattice: return "NotASublattice";
    case ErrorCode::NotRSSD: return "NotRSSD";
    case ErrorCode::UnsupportedName: return "UnsupportedName";
    case ErrorCode::RankTooLarge: return "RankTooLarge";
    case ErrorCode::IncompatibleAmbient: return "IncompatibleAmbient";
    case ErrorCode::DependentBasis: return "DependentBasis";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::NotInHalfLattice: return "NotInHalfLattice";
    case ErrorCode::WrongShellSize: return "WrongShellSize";
    case ErrorCode::NonRealCocycle: return "NonRealCocycle";
    case ErrorCode::RootCreated: return "RootCreated";
    case ErrorCode::NoConformalVector: return "NoConformalVector";
    case ErrorCode::NonUniqueConformalVector: return "NonUniqueConformalVector";
    case ErrorCode::NotATriple: return "NotATriple";
    case ErrorCode::InvalidRelation: return "InvalidRelation";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace weyl_ising
