#pragma once

#include <stdexcept>
#include <string>

namespace hs {

// Bad user input: malformed files, violated preconditions, dimension mismatch.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An anchor used to pin a convention did not hold.
struct CalibrationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A semi-decidable search ran out of budget.
struct Inconclusive : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Something that must hold by construction did not.
struct InvariantBreach : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace hs
