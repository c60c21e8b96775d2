#pragma once

#include <stdexcept>
#include <string>

namespace edgeideal {

/// Bad user input: malformed files, out-of-range vertices, violated preconditions.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A computation was refused because it would exceed a configured size cap.
/// The message states the expected cost so the caller can decide to override.
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// An internal invariant failed. Always a bug, never a math result.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace edgeideal
