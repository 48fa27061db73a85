/// @file errors.hpp
/// @brief Exception types shared by every branchline module.
#pragma once

#include <stdexcept>
#include <string>

namespace branchline {

/// Malformed or inconsistent input data (degree mismatches, elements outside
/// the stated group, unparseable JSON, bad grids, ...).
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A documented operation precondition failed on otherwise well-formed data;
/// the message names the violated clause and, where available, the residual.
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised by the ± classification when no subcategory isomorphism U -> V
/// exists, so the chart-exchanging comparison cannot even be posed.
class NoEtaError : public std::runtime_error {
public:
    explicit NoEtaError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace branchline
