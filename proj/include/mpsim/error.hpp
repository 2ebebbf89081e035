#pragma once

#include <stdexcept>
#include <string>

namespace mpsim {

// Bad user-supplied configuration (CLI exit code 2).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Violated internal invariant; the simulation state is not trustworthy
// past this point (CLI exit code 1).
class InvariantError : public std::logic_error {
public:
    explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace mpsim
