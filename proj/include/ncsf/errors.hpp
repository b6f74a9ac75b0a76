#pragma once

#include <stdexcept>
#include <string>

namespace ncsf {

// Raised when a dual-route computation disagrees with its oracle. These are
// bug traps: they should never fire on a correct build.
struct VerificationError : std::runtime_error {
    explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ncsf
