#pragma once

#include <stdexcept>
#include <string>

namespace algraph {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroInverse : public Error {
 public:
  ZeroInverse() : Error("multiplicative inverse of zero") {}
};

class DuplicateNode : public Error {
 public:
  DuplicateNode() : Error("interpolation nodes are not pairwise distinct") {}
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by a zero value while recording a tape") {}
};

class InsufficientField : public Error {
 public:
  explicit InsufficientField(const std::string& what) : Error(what) {}
};

class SingularEverywhere : public Error {
 public:
  SingularEverywhere() : Error("polynomial matrix is identically singular") {}
};

class NegativeCycleInNegativeEdges : public Error {
 public:
  NegativeCycleInNegativeEdges()
      : Error("negative edges contain a cycle; split graph is undefined") {}
};

class InvalidK : public Error {
 public:
  explicit InvalidK(const std::string& what) : Error(what) {}
};

class NoAllowedEdge : public Error {
 public:
  NoAllowedEdge() : Error("no edge with a nonzero gradient; reseed and retry") {}
};

class NoPerfectMatching : public Error {
 public:
  NoPerfectMatching() : Error("graph has no perfect matching") {}
};

class InternalInfeasible : public Error {
 public:
  explicit InternalInfeasible(const std::string& what) : Error(what) {}
};

class NegativeCycle : public Error {
 public:
  NegativeCycle() : Error("graph contains a negative weight cycle") {}
};

class TooLarge : public Error {
 public:
  explicit TooLarge(const std::string& what) : Error(what) {}
};

/// Raised when a certificate fails its structural re-check.
class ConsistencyFailure : public Error {
 public:
  explicit ConsistencyFailure(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace algraph
