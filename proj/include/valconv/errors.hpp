#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace valconv {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A ValuationRep whose face currents cannot be put in canonical form.
class MalformedRep : public Error {
 public:
  using Error::Error;
};

/// Raised when a join volume is requested outside the domain where it is defined.
class PartialFunctionDomain : public Error {
 public:
  using Error::Error;
};

/// The degree-0 constructible function of a rep is not constant.
class NonConstantAlpha : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Convolution was requested for reps whose normal data are not transversal.
/// Carries the (a-term, b-term) index pairs that failed.
class NotTransversal : public Error {
 public:
  NotTransversal(std::string what, std::vector<std::pair<int, int>> witnesses)
      : Error(std::move(what)), witnesses_(std::move(witnesses)) {}

  const std::vector<std::pair<int, int>>& witnesses() const { return witnesses_; }

 private:
  std::vector<std::pair<int, int>> witnesses_;
};

}  // namespace valconv
