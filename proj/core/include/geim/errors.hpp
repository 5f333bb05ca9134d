#pragma once
#include <stdexcept>
#include <string>

namespace geim {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
  virtual const char* type() const { return "Error"; }
};

struct InvalidGeometry : Error {
  using Error::Error;
  const char* type() const override { return "InvalidGeometry"; }
};

struct GridMismatch : Error {
  using Error::Error;
  const char* type() const override { return "GridMismatch"; }
};

struct EmptySupport : Error {
  using Error::Error;
  const char* type() const override { return "EmptySupport"; }
};

struct SizeMismatch : Error {
  using Error::Error;
  const char* type() const override { return "SizeMismatch"; }
};

struct DegenerateSnapshot : Error {
  using Error::Error;
  const char* type() const override { return "DegenerateSnapshot"; }
};

struct DegenerateResidual : Error {
  using Error::Error;
  const char* type() const override { return "DegenerateResidual"; }
};

struct DictionaryExhausted : Error {
  using Error::Error;
  const char* type() const override { return "DictionaryExhausted"; }
};

struct SingularSystem : Error {
  using Error::Error;
  const char* type() const override { return "SingularSystem"; }
};

struct ConfigError : Error {
  using Error::Error;
  const char* type() const override { return "ConfigError"; }
};

struct IoError : Error {
  using Error::Error;
  const char* type() const override { return "IoError"; }
};

}  // namespace geim
