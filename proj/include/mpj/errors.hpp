#pragma once

#include <stdexcept>
#include <string>

namespace mpj {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// A subspace argument was required to lie inside another one.
class NotContained : public Error {
public:
    using Error::Error;
};

/// Structure constants violate antisymmetry (bracket) or symmetry (Jordan).
class InvalidStructure : public Error {
public:
    using Error::Error;
};

class NotClosed : public Error {
public:
    using Error::Error;
};

class NotAbelian : public Error {
public:
    using Error::Error;
};

class NotSplit : public Error {
public:
    using Error::Error;
};

class NotMasa : public Error {
public:
    using Error::Error;
};

class UnknownFamily : public Error {
public:
    using Error::Error;
};

class EquivalenceViolation : public Error {
public:
    using Error::Error;
};

class HypothesesUnmet : public Error {
public:
    using Error::Error;
};

class OraclePreconditionUnmet : public Error {
public:
    using Error::Error;
};

} // namespace mpj
