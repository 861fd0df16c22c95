#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ramsey {

// Invalid user input: malformed spec files, out-of-range parameters,
// colorings or graphs violating a documented precondition.
class SpecError : public std::runtime_error {
public:
    explicit SpecError(const std::string& what) : std::runtime_error(what) {}
};

// A configured enumeration or term bound would be exceeded.
class CapacityError : public std::runtime_error {
public:
    CapacityError(const std::string& what, std::uint64_t bound)
        : std::runtime_error(what), bound_(bound) {}
    std::uint64_t bound() const noexcept { return bound_; }

private:
    std::uint64_t bound_;
};

// The prime table does not reach far enough for the requested run.
class SieveBoundError : public std::runtime_error {
public:
    SieveBoundError(const std::string& what, std::uint64_t required_bound)
        : std::runtime_error(what), required_(required_bound) {}
    std::uint64_t required_bound() const noexcept { return required_; }

private:
    std::uint64_t required_;
};

// Two independently computed routes disagreed. Always a bug, never user error.
class ConsistencyError : public std::logic_error {
public:
    explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace ramsey
