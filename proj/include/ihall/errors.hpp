#pragma once

#include <stdexcept>
#include <string>

namespace ihall {

struct SizeCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PoleAtSqrtQ : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnsupportedField : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnsupportedPair : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnsupportedGenerator : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonUnitConstantTerm : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ihall
