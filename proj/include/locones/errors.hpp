#pragma once

#include <stdexcept>
#include <string>

namespace locones {

// Raised when a hard-coded table or frame disagrees with the numerics.
// Treated by the CLI as exit status 1.
class InternalConsistencyError : public std::runtime_error {
public:
    explicit InternalConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

class IntegrationError : public std::runtime_error {
public:
    explicit IntegrationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace locones
