#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid physical input (negative temperature, evanescent wavevector, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Unknown identifier (e.g. material preset name).
class LookupError : public Error {
public:
    using Error::Error;
};

// A sum or quadrature failed to meet its tolerance; carries the error
// estimate that was actually achieved.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double achieved_error)
        : Error(what), achieved_(achieved_error) {}

    [[nodiscard]] double achieved_error() const noexcept { return achieved_; }

private:
    double achieved_;
};

// Filesystem failure, annotated with the offending path.
class IoError : public Error {
public:
    IoError(const std::string& what, std::string path)
        : Error(what + ": " + path), path_(std::move(path)) {}

    [[nodiscard]] const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

} // namespace casimir
