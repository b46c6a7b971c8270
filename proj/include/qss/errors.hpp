// Error taxonomy shared by all modules.
#pragma once

#include <stdexcept>
#include <string>

namespace qss {

// A qubit label is unknown, duplicated, or the label sets of two operands clash.
class LabelError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An operand fails a numeric contract (non-unitary, non-Hermitian, bad probability...).
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A composed system would exceed the configured qubit cap.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The operation is meaningless for the given arguments (e.g. tracing out everything).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// API misuse: calling an operation in a state where it is not defined.
class UsageError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace qss
