#pragma once

#include <stdexcept>
#include <string>

namespace lcdbch {

// Bad arguments: violated preconditions, out-of-range parameters.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A closed form was requested outside every proven or conjectured regime.
class Uncovered : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Field construction or enumeration would exceed the configured desk-scale caps.
class DeskScaleExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two independent computations of the same quantity disagreed.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace lcdbch
