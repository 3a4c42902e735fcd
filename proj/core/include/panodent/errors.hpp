#pragma once

#include <stdexcept>
#include <string>

namespace panodent {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid in-memory values: bad box geometry, out-of-range class ids, shape mismatches.
struct DomainError : Error {
  using Error::Error;
};

// Invalid configuration: bad hyperparameters, wrong corpus kind, missing classes.
struct ConfigError : Error {
  using Error::Error;
};

// Unreadable or inconsistent input files; message names the offending record.
struct LoadError : Error {
  using Error::Error;
};

// Filesystem write failures.
struct IoError : Error {
  using Error::Error;
};

// A model artifact used at the wrong cascade stage.
struct StageError : Error {
  using Error::Error;
};

}  // namespace panodent
