#pragma once

#include <stdexcept>
#include <string>

namespace spectrum {

// Base class for all toolkit errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidLabelError : Error {
  using Error::Error;
};
struct InvalidTraitError : Error {
  using Error::Error;
};
struct EmptyInputError : Error {
  using Error::Error;
};
struct SchemeMismatchError : Error {
  using Error::Error;
};
struct InvalidDistributionError : Error {
  using Error::Error;
};
struct InvalidParameterError : Error {
  using Error::Error;
};
struct InvalidInputError : Error {
  using Error::Error;
};
struct InvalidTypeError : Error {
  using Error::Error;
};
struct UnparseableResponseError : Error {
  using Error::Error;
};
struct CollectionError : Error {
  using Error::Error;
};
struct BackendError : Error {
  using Error::Error;
};
struct GenerationError : Error {
  using Error::Error;
};
struct NotReadyError : Error {
  using Error::Error;
};
struct PairingError : Error {
  using Error::Error;
};
struct ConfigError : Error {
  using Error::Error;
};
struct IoError : Error {
  using Error::Error;
};

}  // namespace spectrum
