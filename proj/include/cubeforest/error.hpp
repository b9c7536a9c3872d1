#pragma once

#include <stdexcept>
#include <string>

namespace cubeforest {

enum class ErrorKind {
  InvalidInput,
  InvalidParams,
  UnknownVertex,
  NotMedian,
  InconsistentSplit,
  NotGated,
  CliqueDegreeMismatch,
  NotATree,
  NotInContact,
  DegreeExceeded,
  NotTwoDimensional,
  EmptyPF,
  NoSeparator,
  NonUniqueAtDepth2,
  OddCycleInUpsilon0,
  ImproperColouring,
  BudgetExceeded,
  ClassNotLaminar,
  FactorNotTree,
  ExplosionBudget,
  SandwichViolated,
  PostconditionFailed,
  NotMedianAfterLift,
  ConfigExplosion,
  InternalInvariant,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }
  bool is_budget() const {
    return kind_ == ErrorKind::BudgetExceeded || kind_ == ErrorKind::ExplosionBudget ||
           kind_ == ErrorKind::ConfigExplosion;
  }

 private:
  ErrorKind kind_;
};

}  // namespace cubeforest
