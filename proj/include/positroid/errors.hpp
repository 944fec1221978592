#pragma once

#include <stdexcept>
#include <string>

namespace positroid {

/// Malformed or inconsistent input (bad element, mismatched sizes, violated
/// structural rule).
class input_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A size or budget cap was exceeded.
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal invariant that should be guaranteed by construction broke.
class invariant_failure : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

namespace detail {

inline void require(bool ok, const std::string& what)
{
    if (!ok) throw input_error(what);
}

inline void ensure(bool ok, const std::string& what)
{
    if (!ok) throw invariant_failure(what);
}

} // namespace detail

} // namespace positroid
