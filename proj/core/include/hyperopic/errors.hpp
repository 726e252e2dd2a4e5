#pragma once

#include <stdexcept>
#include <string>

namespace hyperopic {

// Base class for all library errors raised on bad inputs or broken contracts.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input that fails a documented precondition (bad parse, bad parameter, ...).
class InputError : public Error {
public:
    explicit InputError(const std::string& what) : Error(what) {}
};

// A strategy was requested on a graph that does not meet its preconditions.
class InapplicableError : public Error {
public:
    explicit InapplicableError(const std::string& what) : Error(what) {}
};

namespace detail {
// Always-on invariant check; these guard claims proofs rely on, so they stay
// active in release builds.
inline void invariant(bool cond, const char* msg) {
    if (!cond) throw Error(std::string("internal invariant violated: ") + msg);
}

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw InputError(msg);
}
} // namespace detail

} // namespace hyperopic
