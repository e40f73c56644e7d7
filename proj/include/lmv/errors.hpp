#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lmv {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Matrix dimensions incompatible with the requested operation.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// Operands live in different variable layouts.
class LayoutMismatch : public Error {
public:
    using Error::Error;
};

class UnknownVariable : public Error {
public:
    using Error::Error;
};

/// A 3D line passes through a camera center, so its image is undefined.
class DegenerateProjection : public Error {
public:
    DegenerateProjection(const std::string& what, int camera) : Error(what), camera_index(camera) {}
    int camera_index;
};

/// A basis leading coefficient vanishes at the requested parameter values.
class SpecializationDegeneracy : public Error {
public:
    SpecializationDegeneracy(const std::string& what, std::string coeff)
        : Error(what), coefficient(std::move(coeff)) {}
    std::string coefficient;
};

/// A resource cap (S-pairs processed, term count, retries) was exceeded.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& what, std::uint64_t pairs) : Error(what), pairs_processed(pairs) {}
    std::uint64_t pairs_processed;
};

/// Malformed or inconsistent user input (JSON, CLI arguments, preconditions).
class InputError : public Error {
public:
    using Error::Error;
};

/// The supplied point does not lie on the zero set of the presented ideal.
class PointNotOnVariety : public Error {
public:
    using Error::Error;
};

}  // namespace lmv
