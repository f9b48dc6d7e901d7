#pragma once

#include <stdexcept>
#include <string>

namespace ruledgw {

/// Raised when an identity that is a proved statement fails to hold at
/// runtime. Reaching this is an implementation bug, never bad user input;
/// the CLI maps it to exit code 1.
struct TheoremViolation : std::logic_error {
    explicit TheoremViolation(const std::string& what) : std::logic_error(what) {}
};

/// Raised when two polynomials over different generator sets are combined.
struct IncompatibleGenerators : std::invalid_argument {
    explicit IncompatibleGenerators(const std::string& what)
        : std::invalid_argument(what) {}
};

}  // namespace ruledgw
