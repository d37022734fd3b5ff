#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "sdiff/error.hpp"

namespace sdiff {

using Rational = mpq_class;

/// Formats as "p/q", or "p" when the denominator is 1.
inline std::string to_string(Rational const &q)
{
	return q.get_str();
}

/// Parses "p/q", "p" or "-p/q"; the result is canonicalized.
inline Rational parse_rational(std::string_view s)
{
	std::string str(s);
	if (str.empty())
		throw InvalidArgument("empty rational literal");
	for (char c : str)
		if (!(c == '-' || c == '+' || c == '/' || (c >= '0' && c <= '9')))
			throw InvalidArgument("bad rational literal '" + str + "'");
	if (str[0] == '+')
		str.erase(0, 1);
	Rational q;
	if (q.set_str(str, 10) != 0)
		throw InvalidArgument("bad rational literal '" + std::string(s) + "'");
	if (q.get_den() == 0)
		throw InvalidArgument("zero denominator in '" + std::string(s) + "'");
	q.canonicalize();
	return q;
}

inline bool is_zero(Rational const &q) { return sgn(q) == 0; }

} // namespace sdiff
