#pragma once

#include <stdexcept>
#include <string>

namespace topo {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An index or dimension argument outside its admissible range.
class RangeError : public Error {
public:
    using Error::Error;
};

/// Operation requires a pure complex or poset.
class PurityError : public Error {
public:
    using Error::Error;
};

class FaceNotFoundError : public Error {
public:
    using Error::Error;
};

class MissingColoringError : public Error {
public:
    using Error::Error;
};

/// Input violates a structural invariant of SimplicialComplex.
class InvalidComplexError : public Error {
public:
    using Error::Error;
};

/// Input violates a structural invariant of SimplicialPoset.
class InvalidPosetError : public Error {
public:
    using Error::Error;
};

/// Input fails one of the pure / balanced / connected-links hypotheses.
class PropertyViolation : public Error {
public:
    using Error::Error;
};

class DisconnectedError : public Error {
public:
    using Error::Error;
};

/// Something that the hypotheses guarantee did not happen. Always a bug or a
/// counterexample, never a user error.
class ContractViolation : public Error {
public:
    using Error::Error;
};

/// Malformed argument that is not covered by a more specific class.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace topo
