#pragma once

#include <stdexcept>
#include <string>

namespace stab {

// Caller-side problem: bad input, violated precondition, unsupported regime.
// The CLI maps these to exit code 2.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Schema or document error; `pointer` is a JSON pointer into the input.
class ParseError : public PreconditionError {
public:
    ParseError(std::string pointer, const std::string& what)
        : PreconditionError(pointer.empty() ? what : pointer + ": " + what),
          pointer_(std::move(pointer)) {}

    const std::string& pointer() const noexcept { return pointer_; }

private:
    std::string pointer_;
};

// W leaves the upper half-plane: a tilted heart would be needed.
class HeartChangeUnsupported : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

// Something that the mathematics says cannot happen did happen
// (non-unique maximal destabilising subobject, HN algorithms disagreeing, ...).
// The CLI maps these to exit code 3.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace stab
