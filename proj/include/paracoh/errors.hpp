#pragma once

#include <stdexcept>
#include <string>

namespace paracoh {

// Base for all recoverable input/usage errors (CLI exit code 2).
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class ParseError : public Error {
public:
  ParseError(std::size_t pos, const std::string& msg)
      : Error("parse error at position " + std::to_string(pos) + ": " + msg), position(pos) {}
  std::size_t position;
};

class PoleError : public Error {
public:
  explicit PoleError(const std::string& msg) : Error(msg) {}
};

class ZeroPolynomialError : public Error {
public:
  ZeroPolynomialError() : Error("operation undefined for the zero polynomial") {}
};

class AmbientMismatch : public Error {
public:
  explicit AmbientMismatch(const std::string& msg) : Error(msg) {}
};

class InclusionViolated : public Error {
public:
  explicit InclusionViolated(const std::string& msg) : Error(msg) {}
};

class JacobiError : public Error {
public:
  explicit JacobiError(const std::string& msg) : Error(msg) {}
};

class IndexError : public Error {
public:
  explicit IndexError(const std::string& msg) : Error(msg) {}
};

class NotInvolution : public Error {
public:
  explicit NotInvolution(const std::string& msg) : Error(msg) {}
};

class EigenspaceImbalance : public Error {
public:
  explicit EigenspaceImbalance(const std::string& msg) : Error(msg) {}
};

class InvolutionFailsInField : public Error {
public:
  explicit InvolutionFailsInField(const std::string& msg) : Error(msg) {}
};

class NotIntegrable : public Error {
public:
  explicit NotIntegrable(const std::string& msg) : Error(msg) {}
};

class NotClosed : public Error {
public:
  explicit NotClosed(const std::string& msg) : Error(msg) {}
};

class UnknownEntry : public Error {
public:
  explicit UnknownEntry(const std::string& msg) : Error(msg) {}
};

// A broken internal invariant: never expected, maps to CLI exit code 3.
class InternalCheckError : public std::logic_error {
public:
  explicit InternalCheckError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace paracoh
