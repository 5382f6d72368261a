#pragma once

#include <stdexcept>
#include <string>

namespace grastor {

// Base class for all library errors. Subclasses name the precondition that
// failed; the CLI maps them to exit code 3 (precondition violation).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotInvertible : Error {
    using Error::Error;
};
struct DimensionError : Error {
    using Error::Error;
};
struct NotTransversal : Error {
    using Error::Error;
};
struct NotEnumerable : Error {
    using Error::Error;
};
struct NotAdmissible : Error {
    using Error::Error;
};
struct DegenerateForm : Error {
    using Error::Error;
};
struct MissingBasePoint : Error {
    using Error::Error;
};
struct CharacteristicTwo : Error {
    using Error::Error;
};
struct NotCompatible : Error {
    using Error::Error;
};
struct NotInGroup : Error {
    using Error::Error;
};

// Raised when a machine-checked theorem fails inside library code; indicates
// an implementation bug, never a user error.
struct InvariantViolation : Error {
    using Error::Error;
};

}  // namespace grastor
