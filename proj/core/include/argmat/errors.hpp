#ifndef ARGMAT_ERRORS_HPP_
#define ARGMAT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace argmat {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text; carries the 1-based line number of the offending line.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& message, int line)
        : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

class IoError : public Error {
public:
    using Error::Error;
};

class DuplicateNameError : public Error {
public:
    explicit DuplicateNameError(const std::string& name)
        : Error("duplicate argument name: " + name) {}
};

class UnknownArgumentError : public Error {
public:
    explicit UnknownArgumentError(const std::string& name)
        : Error("unknown argument: " + name) {}
};

class InvalidNameError : public Error {
public:
    explicit InvalidNameError(const std::string& message) : Error(message) {}
};

class DimensionMismatchError : public Error {
public:
    DimensionMismatchError(int a, int b)
        : Error("matrix dimensions differ: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

class IndexOutOfRangeError : public Error {
public:
    using Error::Error;
};

/// Complementary blocks are defined only for specs selecting as many rows as columns.
class NonPrincipalSpecError : public Error {
public:
    using Error::Error;
};

class UnsupportedKindError : public Error {
public:
    using Error::Error;
};

class EnumerationLimitError : public Error {
public:
    using Error::Error;
};

}  // namespace argmat

#endif  // ARGMAT_ERRORS_HPP_
