#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace crooked {

enum class ErrorCode {
  ZeroVector,
  NotNull,
  NotIncident,
  SamePoint,
  PhotonInsideHypersurface,
  IncidentPair,
  DegenerateSpan,
  WrongSignature,
  InvalidConfiguration,
  NotTraceless,
  NormTooLarge,
  NotUpperHalfplane,
  NotRankOne,
  DependentPair,
  NotTimelike,
  NotNullVector,
  NotSpacelike,
  NotUnitSpacelike,
  GeodesicNotInPlane,
  NotInMinkowskiPatch,
  OnEinstein2,
  NotInPatch,
  NotAdapted,
  BadInput,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NotNull: return "NotNull";
    case ErrorCode::NotIncident: return "NotIncident";
    case ErrorCode::SamePoint: return "SamePoint";
    case ErrorCode::PhotonInsideHypersurface: return "PhotonInsideHypersurface";
    case ErrorCode::IncidentPair: return "IncidentPair";
    case ErrorCode::DegenerateSpan: return "DegenerateSpan";
    case ErrorCode::WrongSignature: return "WrongSignature";
    case ErrorCode::InvalidConfiguration: return "InvalidConfiguration";
    case ErrorCode::NotTraceless: return "NotTraceless";
    case ErrorCode::NormTooLarge: return "NormTooLarge";
    case ErrorCode::NotUpperHalfplane: return "NotUpperHalfplane";
    case ErrorCode::NotRankOne: return "NotRankOne";
    case ErrorCode::DependentPair: return "DependentPair";
    case ErrorCode::NotTimelike: return "NotTimelike";
    case ErrorCode::NotNullVector: return "NotNull";
    case ErrorCode::NotSpacelike: return "NotSpacelike";
    case ErrorCode::NotUnitSpacelike: return "NotUnitSpacelike";
    case ErrorCode::GeodesicNotInPlane: return "GeodesicNotInPlane";
    case ErrorCode::NotInMinkowskiPatch: return "NotInMinkowskiPatch";
    case ErrorCode::OnEinstein2: return "OnEinstein2";
    case ErrorCode::NotInPatch: return "NotInPatch";
    case ErrorCode::NotAdapted: return "NotAdapted";
    case ErrorCode::BadInput: return "BadInput";
  }
  return "Unknown";
}

/// Raised by every operation whose precondition fails. The code is the
/// machine-readable part; tests match on it.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail) {
  throw GeometryError(code, detail);
}

/// Numerical thresholds shared by all modules.
struct Tolerances {
  double null = 1e-9;        // |Q(v)| relative to |v|_sup^2
  double incidence = 1e-9;   // |B(p,q)| on canonical representatives
  double subspace = 1e-9;    // residual of subspace membership
  double orth = 1e-8;        // |T^t G T - G|_sup
  double proj = 1e-9;        // projective equality after canonicalisation
  double det = 1e-9;         // |det - 1| for SL(2,R)
  double near_null = 1e-12;  // branch threshold for the closed-form exponential
  double patch = 1e-12;      // chart denominators, relative
  double membership = 1e-9;  // stratum equations on normalised inputs
};

inline const Tolerances& default_tolerances() {
  static const Tolerances tol{};
  return tol;
}

/// Overrides one tolerance by field name; BadInput for unknown names or values <= 0.
inline void set_tolerance(Tolerances& tol, std::string_view name, double value) {
  if (!(value > 0)) fail(ErrorCode::BadInput, "tolerance must be positive");
  struct Entry {
    std::string_view name;
    double Tolerances::*field;
  };
  static constexpr Entry entries[] = {
      {"null", &Tolerances::null},       {"incidence", &Tolerances::incidence}, {"subspace", &Tolerances::subspace},
      {"orth", &Tolerances::orth},       {"proj", &Tolerances::proj},           {"det", &Tolerances::det},
      {"near_null", &Tolerances::near_null}, {"patch", &Tolerances::patch},     {"membership", &Tolerances::membership},
  };
  for (const Entry& e : entries) {
    if (e.name == name) {
      tol.*(e.field) = value;
      return;
    }
  }
  fail(ErrorCode::BadInput, "unknown tolerance: " + std::string(name));
}

}  // namespace crooked
