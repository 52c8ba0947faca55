/// @file errors.hpp
/// @brief Exception types shared by all modules.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace plectic {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ChartMismatch : public Error {
 public:
  ChartMismatch() : Error("objects live on different charts") {}
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

class UnknownVariable : public Error {
 public:
  using Error::Error;
};

/// Denominator vanished at an evaluation point.
class PoleError : public Error {
 public:
  using Error::Error;
};

class NotClosed : public Error {
 public:
  using Error::Error;
};

class NotExact : public Error {
 public:
  using Error::Error;
};

/// Operation needs polynomial coefficients but received a proper rational function.
class Unsupported : public Error {
 public:
  using Error::Error;
};

class NotHamiltonian : public Error {
 public:
  using Error::Error;
};

class NotACycle : public Error {
 public:
  using Error::Error;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

/// A flow trajectory left the prescribed bounding box.
class HorizonError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace plectic
