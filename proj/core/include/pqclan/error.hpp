#pragma once

#include <stdexcept>
#include <string>

namespace pqclan {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input (permutation, clan, word, FS-pattern).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Two operands live in symmetric groups of different rank.
class RankMismatch : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

/// A value violates the structural invariants of its type.
class InvalidValue : public Error {
public:
    using Error::Error;
};

/// An operation was called outside its precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// (u, v) fails the shuffle conditions of a (p,q)-pair.
class NotPqPair : public Error {
public:
    using Error::Error;
};

/// (u, v) is a (p,q)-pair but w0*u and v are not Bruhat comparable.
class IncomparablePair : public Error {
public:
    using Error::Error;
};

/// Checked integer arithmetic overflowed.
class OverflowError : public Error {
public:
    using Error::Error;
};

}  // namespace pqclan
