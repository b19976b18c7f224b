#pragma once

#include <stdexcept>
#include <string>

namespace mdcoint {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Ingestion problems: missing columns, unparseable cells, date gaps.
class DataError : public Error {
public:
    using Error::Error;
};

/// Inputs outside a function's mathematical domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Series or panels with incompatible date indices.
class AlignmentError : public Error {
public:
    using Error::Error;
};

/// Singular designs, insufficient samples, failed estimations.
class EstimationError : public Error {
public:
    using Error::Error;
};

/// Bad or inconsistent run configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace mdcoint
