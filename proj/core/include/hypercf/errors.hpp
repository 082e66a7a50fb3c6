#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hypercf {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
public:
    using Error::Error;
};

// A dual-number evaluation hit a zero denominator at the given point.
class PoleError : public Error {
public:
    using Error::Error;
};

class InvalidCurve : public Error {
public:
    using Error::Error;
};

class InvalidSeed : public Error {
public:
    enum class Reason { degree, leading_coefficient, not_divisible, degenerate };

    InvalidSeed(Reason reason, const std::string& what) : Error(what), reason_(reason) {}
    Reason reason() const noexcept { return reason_; }

private:
    Reason reason_;
};

// The continued fraction cannot be continued past line `index`.
class SingularStep : public Error {
public:
    SingularStep(long index, const std::string& what) : Error(what), index_(index) {}
    long index() const noexcept { return index_; }

private:
    long index_;
};

class InsufficientData : public Error {
public:
    InsufficientData(std::size_t required, const std::string& what)
        : Error(what), required_(required) {}
    std::size_t required() const noexcept { return required_; }

private:
    std::size_t required_;
};

class RelationViolation : public Error {
public:
    RelationViolation(long index, const std::string& what) : Error(what), index_(index) {}
    long index() const noexcept { return index_; }

private:
    long index_;
};

}  // namespace hypercf
