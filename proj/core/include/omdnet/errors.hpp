#pragma once

#include <stdexcept>
#include <string>

namespace omdnet {

// An instance exceeds a brute-force or exact-computation guard.
class size_guard_error : public std::length_error {
public:
    explicit size_guard_error(const std::string& what) : std::length_error(what) {}
};

// The requested net provably does not exist.
class existence_error : public std::invalid_argument {
public:
    explicit existence_error(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace omdnet
