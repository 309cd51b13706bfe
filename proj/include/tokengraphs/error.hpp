#pragma once

#include <stdexcept>
#include <string>

namespace tokengraphs {

/// Malformed caller input: out-of-range vertex, bad parameter, invalid certificate.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by the exact solvers when their node or wall-clock budget runs out.
/// A solver never returns a suboptimal answer in place of throwing this.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace tokengraphs
