#pragma once

#include <stdexcept>
#include <string>

namespace torusrec {

struct GroupMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NonCommutingPhases : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotInTorus : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroFrequency : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PeriodMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FitUnstable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace torusrec
