#ifndef COMPMACH_ERRORS_HPP
#define COMPMACH_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace compmach {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Path enumeration requested on a quiver with a directed cycle.
class CyclicQuiverError : public Error {
 public:
  using Error::Error;
};

/// Path or morphism composition attempted on non-matching endpoints.
class NotComposableError : public Error {
 public:
  using Error::Error;
};

/// An arrow id/index that does not exist in the quiver.
class UnknownArrowError : public Error {
 public:
  using Error::Error;
};

/// A rule name outside the accepted vocabulary.
class UnknownRuleNameError : public Error {
 public:
  using Error::Error;
};

/// An arrow with more than one neighbour on the same side; the local
/// transition functions are only defined for single-neighbour contexts.
class AmbiguousNeighbourhoodError : public Error {
 public:
  using Error::Error;
};

/// A configuration that does not assign a state to every arrow.
class IncompleteConfigurationError : public Error {
 public:
  using Error::Error;
};

/// Expression text that does not match the grammar.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_ = 0;
};

/// An identifier other than the single allowed variable 'x'.
class UnknownVariableError : public SyntaxError {
 public:
  UnknownVariableError(const std::string& name, std::size_t position)
      : SyntaxError("unknown variable '" + name + "' (only 'x' is allowed)",
                    position),
        name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

/// Evaluation requested for a computon that carries no expression.
class NoSemanticsError : public Error {
 public:
  using Error::Error;
};

/// A value whose data-type tag does not match the expected type.
class TypeMismatchError : public Error {
 public:
  using Error::Error;
};

/// Signed 64-bit overflow during expression evaluation.
class ArithmeticOverflowError : public Error {
 public:
  using Error::Error;
};

/// File-level problem: unreadable file or malformed JSON document.
class DecodeError : public Error {
 public:
  using Error::Error;
};

}  // namespace compmach

#endif  // COMPMACH_ERRORS_HPP
