#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace wh {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input length does not match the expected dimension.
class DimensionError : public Error {
public:
    using Error::Error;
};

// Invalid problem/experiment parameters.
class ConfigError : public Error {
public:
    using Error::Error;
};

// Request exceeds an enumeration or storage budget.
class CapacityError : public Error {
public:
    using Error::Error;
};

class ArgumentError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

// Population-based coefficient estimation hit an empty schema cell.
class CoverageError : public Error {
public:
    CoverageError(const std::string& msg, std::string cell)
        : Error(msg), cell_(std::move(cell)) {}
    const std::string& cell() const { return cell_; }

private:
    std::string cell_;
};

// The problem's linkage structure has no independent variable pair.
class NoIndependentPairError : public Error {
public:
    using Error::Error;
};

class DegenerateDistributionError : public Error {
public:
    using Error::Error;
};

class UndefinedCorrelationError : public Error {
public:
    using Error::Error;
};

class CollinearityError : public Error {
public:
    CollinearityError(const std::string& msg, std::vector<std::string> columns)
        : Error(msg), columns_(std::move(columns)) {}
    const std::vector<std::string>& columns() const { return columns_; }

private:
    std::vector<std::string> columns_;
};

// Bisection hit the population cap before reaching reliability.
class UnreachableReliabilityError : public Error {
public:
    UnreachableReliabilityError(const std::string& msg, std::uint64_t last_population)
        : Error(msg), last_population_(last_population) {}
    std::uint64_t last_population() const { return last_population_; }

private:
    std::uint64_t last_population_;
};

class IngestionError : public Error {
public:
    using Error::Error;
};

}  // namespace wh
