#pragma once

#include <stdexcept>
#include <string>

namespace armcfg {

/// Malformed or out-of-contract input (bad graph document, invalid path,
/// configuration from another ambient arm, ...).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An exhaustive operation refused to run because its input exceeds the
/// configured size guard.
class GuardExceeded : public std::runtime_error {
public:
    GuardExceeded(const std::string& what, std::size_t size, std::size_t limit)
        : std::runtime_error(what + ": size " + std::to_string(size) +
                             " exceeds limit " + std::to_string(limit)),
          size_(size), limit_(limit) {}

    std::size_t size() const noexcept { return size_; }
    std::size_t limit() const noexcept { return limit_; }

private:
    std::size_t size_;
    std::size_t limit_;
};

}  // namespace armcfg
