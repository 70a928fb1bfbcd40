#pragma once

#include <stdexcept>
#include <string>

namespace revgraph {

/// Raised for every domain-level failure: malformed input, violated
/// preconditions, exceeded enumeration caps.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A size cap (oracle state space, set-system ground set) was exceeded.
class CapExceeded : public Error {
public:
    using Error::Error;
};

namespace detail {

[[noreturn]] inline void fail(const std::string& what) { throw Error(what); }

inline void require(bool cond, const std::string& what) {
    if (!cond) fail(what);
}

}  // namespace detail
}  // namespace revgraph
