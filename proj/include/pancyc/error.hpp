#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pancyc {

enum class Errc {
  MalformedFile,
  NotAPermutation,
  HamEdgeMissing,
  SameVertex,
  SharedEndpoint,
  NotTwoRegular,
  Disconnected,
  ChordMissing,
  IsHamEdge,
  NotCrossing,
  NoCrossBetweenPairs,
  IncompatibleTriangles,
  PreconditionViolation,
  InsufficientMaterial,
  NotIndependent,
  NotSimple,
  CoverMissing,
  NotWithinOneArc,
  NoTightSet,
  TooSmall,
  TooLarge,
  KTooSmall,
  BadPartition,
  SpecConflict,
  VerificationFailed,
  InvariantViolation,
};

constexpr std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::MalformedFile: return "MalformedFile";
    case Errc::NotAPermutation: return "NotAPermutation";
    case Errc::HamEdgeMissing: return "HamEdgeMissing";
    case Errc::SameVertex: return "SameVertex";
    case Errc::SharedEndpoint: return "SharedEndpoint";
    case Errc::NotTwoRegular: return "NotTwoRegular";
    case Errc::Disconnected: return "Disconnected";
    case Errc::ChordMissing: return "ChordMissing";
    case Errc::IsHamEdge: return "IsHamEdge";
    case Errc::NotCrossing: return "NotCrossing";
    case Errc::NoCrossBetweenPairs: return "NoCrossBetweenPairs";
    case Errc::IncompatibleTriangles: return "IncompatibleTriangles";
    case Errc::PreconditionViolation: return "PreconditionViolation";
    case Errc::InsufficientMaterial: return "InsufficientMaterial";
    case Errc::NotIndependent: return "NotIndependent";
    case Errc::NotSimple: return "NotSimple";
    case Errc::CoverMissing: return "CoverMissing";
    case Errc::NotWithinOneArc: return "NotWithinOneArc";
    case Errc::NoTightSet: return "NoTightSet";
    case Errc::TooSmall: return "TooSmall";
    case Errc::TooLarge: return "TooLarge";
    case Errc::KTooSmall: return "KTooSmall";
    case Errc::BadPartition: return "BadPartition";
    case Errc::SpecConflict: return "SpecConflict";
    case Errc::VerificationFailed: return "VerificationFailed";
    case Errc::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

/// Every failure in the library is reported as an Error carrying a code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) throw Error(code, what);
}

}  // namespace pancyc
