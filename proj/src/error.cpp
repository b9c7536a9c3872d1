#include "cubeforest/error.hpp"

namespace cubeforest {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::NotMedian: return "NotMedian";
    case ErrorKind::InconsistentSplit: return "InconsistentSplit";
    case ErrorKind::NotGated: return "NotGated";
    case ErrorKind::CliqueDegreeMismatch: return "CliqueDegreeMismatch";
    case ErrorKind::NotATree: return "NotATree";
    case ErrorKind::NotInContact: return "NotInContact";
    case ErrorKind::DegreeExceeded: return "DegreeExceeded";
    case ErrorKind::NotTwoDimensional: return "NotTwoDimensional";
    case ErrorKind::EmptyPF: return "EmptyPF";
    case ErrorKind::NoSeparator: return "NoSeparator";
    case ErrorKind::NonUniqueAtDepth2: return "NonUniqueAtDepth2";
    case ErrorKind::OddCycleInUpsilon0: return "OddCycleInUpsilon0";
    case ErrorKind::ImproperColouring: return "ImproperColouring";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ClassNotLaminar: return "ClassNotLaminar";
    case ErrorKind::FactorNotTree: return "FactorNotTree";
    case ErrorKind::ExplosionBudget: return "ExplosionBudget";
    case ErrorKind::SandwichViolated: return "SandwichViolated";
    case ErrorKind::PostconditionFailed: return "PostconditionFailed";
    case ErrorKind::NotMedianAfterLift: return "NotMedianAfterLift";
    case ErrorKind::ConfigExplosion: return "ConfigExplosion";
    case ErrorKind::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

}  // namespace cubeforest
