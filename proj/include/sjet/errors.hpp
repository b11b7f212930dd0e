#pragma once

#include <stdexcept>
#include <string>

namespace sjet {

// Base of every error raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Unknown or duplicate generator / coordinate names.
class DeclarationError : public Error {
public:
    using Error::Error;
};

// Operands living over incompatible algebras or charts.
class AlgebraError : public Error {
public:
    using Error::Error;
};

class ParityError : public Error {
public:
    using Error::Error;
};

// A substitution or point leaves a generator without an image.
class CoverageError : public Error {
public:
    using Error::Error;
};

class OrderError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class CompositionError : public Error {
public:
    using Error::Error;
};

class ComparisonError : public Error {
public:
    using Error::Error;
};

} // namespace sjet
