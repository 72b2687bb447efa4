#ifndef TAILSUM_ERRORS_HPP
#define TAILSUM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tailsum {

// Variant/parameter combination outside the supported regime
// (e.g. finite-variance form with xi >= 1/2).
struct unsupported_variant : std::domain_error {
    explicit unsupported_variant(const std::string& what) : std::domain_error(what) {}
};

// Requested workload exceeds the configured replicate budget; callers must
// refuse rather than silently truncate.
struct budget_exceeded : std::runtime_error {
    explicit budget_exceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tailsum

#endif
