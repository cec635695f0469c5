// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mdssd {

enum class Errc {
  NotPrime,
  EvenCharacteristic,
  SizeCapExceeded,
  NotASubfieldDegree,
  NotInSubgroup,
  DuplicateRoot,
  DuplicatePoint,
  InternalCrossCheckFailed,
  NotDisjoint,
  PointNotInUnion,
  DimensionOutOfRange,
  LengthMismatch,
  ZeroTwistEntry,
  RankDeficient,
  OddLength,
  EvenLength,
  BudgetExceeded,
  RecipeNotApplicable,
  AlphaInSubspace,
  BasisDependent,
  CosetCollision,
  TwistSolveFailed,
  ParseError,
  InvalidArgument,
};

constexpr std::string_view to_string(Errc e) {
  switch (e) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::EvenCharacteristic: return "EvenCharacteristic";
    case Errc::SizeCapExceeded: return "SizeCapExceeded";
    case Errc::NotASubfieldDegree: return "NotASubfieldDegree";
    case Errc::NotInSubgroup: return "NotInSubgroup";
    case Errc::DuplicateRoot: return "DuplicateRoot";
    case Errc::DuplicatePoint: return "DuplicatePoint";
    case Errc::InternalCrossCheckFailed: return "InternalCrossCheckFailed";
    case Errc::NotDisjoint: return "NotDisjoint";
    case Errc::PointNotInUnion: return "PointNotInUnion";
    case Errc::DimensionOutOfRange: return "DimensionOutOfRange";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::ZeroTwistEntry: return "ZeroTwistEntry";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::OddLength: return "OddLength";
    case Errc::EvenLength: return "EvenLength";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::RecipeNotApplicable: return "RecipeNotApplicable";
    case Errc::AlphaInSubspace: return "AlphaInSubspace";
    case Errc::BasisDependent: return "BasisDependent";
    case Errc::CosetCollision: return "CosetCollision";
    case Errc::TwistSolveFailed: return "TwistSolveFailed";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace mdssd
