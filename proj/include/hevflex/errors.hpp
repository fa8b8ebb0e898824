#ifndef HEVFLEX_ERRORS_HPP
#define HEVFLEX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hevflex {

// Base for all library errors that are not plain std::domain_error
// argument violations.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Battery cannot deliver the requested power (discriminant of the
// equivalent-circuit model goes negative).
class InfeasiblePowerError : public Error {
 public:
  explicit InfeasiblePowerError(const std::string& msg) : Error(msg) {}
};

// A discrete transition violates a feasibility constraint other than the
// state box (battery power limit, negative driveline speed).
class InfeasibleTransitionError : public Error {
 public:
  explicit InfeasibleTransitionError(const std::string& msg) : Error(msg) {}
};

// The successor state leaves the configured state box.
class OutOfBoxError : public Error {
 public:
  explicit OutOfBoxError(const std::string& msg) : Error(msg) {}
};

// No admissible input exists for a state during target generation.
class InfeasibleSampleError : public Error {
 public:
  explicit InfeasibleSampleError(const std::string& msg) : Error(msg) {}
};

// A reachable set turned out empty, or a start state lies outside it.
class InfeasibilityError : public Error {
 public:
  explicit InfeasibilityError(const std::string& msg) : Error(msg) {}
};

class TrainingDivergedError : public Error {
 public:
  explicit TrainingDivergedError(const std::string& msg) : Error(msg) {}
};

class CorruptedModelError : public Error {
 public:
  explicit CorruptedModelError(const std::string& msg) : Error(msg) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

class GenerationError : public Error {
 public:
  explicit GenerationError(const std::string& msg) : Error(msg) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& msg) : Error(msg) {}
};

}  // namespace hevflex

#endif
