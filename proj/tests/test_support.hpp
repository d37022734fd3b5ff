#pragma once

#include <ostream>
#include <random>

#include "sdiff/cochains.hpp"
#include "sdiff/graded_poly.hpp"
#include "sdiff/oracles/group_law.hpp"

namespace sdiff {
inline void PrintTo(Polynomial const &p, std::ostream *os) { *os << to_string(p); }
} // namespace sdiff

namespace testing_support {

using namespace sdiff;

inline Rational small_rational(std::mt19937 &rng)
{
	Rational c((int)(rng() % 7) - 3, 1 + (int)(rng() % 3));
	c.canonicalize();
	return c;
}

/// Random level-n cochain with up to `terms` monomials of at most `factors` coordinates.
inline Polynomial random_cochain(CochainEngine const &eng, int n, std::mt19937 &rng, int terms = 4, int factors = 3)
{
	auto coords = level_coordinates(eng.presentation(), n);
	Polynomial f = eng.zero();
	for (int t = 0; t < terms; ++t)
	{
		Polynomial m = eng.constant(small_rational(rng));
		int k = (int)(rng() % (factors + 1));
		for (int i = 0; i < k && !coords.empty(); ++i)
			m = m * Polynomial::generator(coords[rng() % coords.size()], eng.truncation());
		f += m;
	}
	return f;
}

inline FramedPresentation heisenberg_nerve(int truncation, int max_level)
{
	auto law = oracles::bch_order2(oracles::commutator_constants(oracles::heisenberg_matrices()), "heisenberg");
	return oracles::nerve_from_group_law(law, truncation, max_level);
}

inline FramedPresentation so3_nerve(int truncation, int max_level)
{
	auto law = oracles::bch(oracles::commutator_constants(oracles::so3_matrices()), 3, "so3");
	return oracles::nerve_from_group_law(law, truncation, max_level);
}

} // namespace testing_support
