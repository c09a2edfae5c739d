#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace listnet {

/// Malformed input data. Carries the 1-based line number when known (0 otherwise).
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& msg, std::size_t line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Work refused because it would exceed a configured resource cap.
class resource_error : public std::runtime_error {
public:
    resource_error(const std::string& msg, std::uint64_t required, std::uint64_t cap)
        : std::runtime_error(msg), required_(required), cap_(cap) {}

    std::uint64_t required() const noexcept { return required_; }
    std::uint64_t cap() const noexcept { return cap_; }

private:
    std::uint64_t required_;
    std::uint64_t cap_;
};

}  // namespace listnet
