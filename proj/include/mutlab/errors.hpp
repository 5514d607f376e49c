#pragma once

#include <stdexcept>
#include <string>

namespace mutlab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct WordSyntaxError : Error { using Error::Error; };
struct UnknownGeneratorError : Error { using Error::Error; };
struct PresentationError : Error { using Error::Error; };
struct InvalidSplittingError : Error { using Error::Error; };
struct BadSeifertDataError : Error { using Error::Error; };
struct BadMultiplicitiesError : Error { using Error::Error; };
struct NoSolutionError : Error { using Error::Error; };
struct NotUniqueError : Error { using Error::Error; };
struct LogAtAntipodeError : Error { using Error::Error; };
struct SolverError : Error { using Error::Error; };
struct ClusterPartitionError : SolverError { using SolverError::SolverError; };
struct UnmatchedClassError : Error { using Error::Error; };
struct OrderCheckFailedError : Error { using Error::Error; };
struct ValidationFailedError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

// Conjugacy search failure; carries the best residual reached.
struct NotConjugateError : SolverError {
  double residual;
  NotConjugateError(const std::string& msg, double res)
      : SolverError(msg), residual(res) {}
};

}  // namespace mutlab
