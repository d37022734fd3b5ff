#pragma once

#include <stdexcept>
#include <string>

namespace sdiff {

/// Base for all errors raised by the library.
struct Error : std::runtime_error
{
	using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range input.
struct InvalidArgument : Error
{
	using Error::Error;
};

/// Requested degree needs more Taylor data than the presentation carries.
struct InsufficientTruncation : Error
{
	using Error::Error;
};

/// A comparison that is only implemented for linear structure maps met a nonlinear one.
struct NonlinearFace : Error
{
	using Error::Error;
};

/// Structure maps violate a required identity.
struct IdentityViolation : Error
{
	using Error::Error;
};

inline void require(bool cond, std::string const &msg)
{
	if (!cond)
		throw InvalidArgument(msg);
}

} // namespace sdiff
