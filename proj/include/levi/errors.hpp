#pragma once

#include <stdexcept>
#include <string>

namespace levi {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad JSON, out-of-range ids, a strict arrangement whose
/// counts do not balance.
class InputError : public Error {
 public:
  using Error::Error;
};

/// The quotient by the zero ideal has no interesting resolution; callers that
/// need a nonzero ideal raise this instead of returning a degenerate table.
class ZeroIdeal : public InputError {
 public:
  ZeroIdeal() : InputError("zero ideal") {}
};

/// A computation would exceed a configured enumeration cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class NonSquarefree : public Error {
 public:
  NonSquarefree() : Error("ideal is not squarefree") {}
};

}  // namespace levi
