#pragma once

#include <stdexcept>
#include <string>

namespace amitsur {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class SubgroupNotContained : public Error {
 public:
  using Error::Error;
};

class ElementNotInAmbient : public Error {
 public:
  using Error::Error;
};

class RankDeficient : public Error {
 public:
  using Error::Error;
};

class DegreeBoundViolated : public Error {
 public:
  using Error::Error;
};

class NotUnimodular : public Error {
 public:
  using Error::Error;
};

class GroupTooLarge : public Error {
 public:
  using Error::Error;
};

class NotASubgroup : public Error {
 public:
  using Error::Error;
};

class ChiNotInvariant : public Error {
 public:
  ChiNotInvariant(const std::string& what, std::size_t generator)
      : Error(what), generator_(generator) {}
  std::size_t generator() const noexcept { return generator_; }

 private:
  std::size_t generator_;
};

class ElementNotInvariant : public Error {
 public:
  using Error::Error;
};

class ParityViolation : public Error {
 public:
  using Error::Error;
};

class InvalidFan : public Error {
 public:
  using Error::Error;
};

class NonPrimitiveRay : public InvalidFan {
 public:
  using InvalidFan::InvalidFan;
};

class NotSmooth : public InvalidFan {
 public:
  using InvalidFan::InvalidFan;
};

class NotComplete : public InvalidFan {
 public:
  using InvalidFan::InvalidFan;
};

class NotASurface : public Error {
 public:
  using Error::Error;
};

/// Two independent routes disagreed; always a bug.
class InternalMismatch : public Error {
 public:
  using Error::Error;
};

class UnknownWord : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace amitsur
