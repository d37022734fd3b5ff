#include <gtest/gtest.h>

#include "sdiff/cochains.hpp"
#include "sdiff/oracles/group_law.hpp"
#include "test_support.hpp"

using namespace sdiff;
using namespace testing_support;

namespace {

Polynomial y(CochainEngine const &eng, int element, std::uint32_t label = 0)
{
	return eng.coordinate(element_bit(element), label);
}

CochainEngine line_engine() { return CochainEngine(oracles::nerve_from_group_law(oracles::abelian_law(1), 4, 3)); }

} // namespace

TEST(Cochains, LineFaces)
{
	auto eng = line_engine();
	auto x = y(eng, 1);
	EXPECT_EQ(eng.face_pullback(x, 2, 0), y(eng, 2));
	EXPECT_EQ(eng.face_pullback(x, 2, 1), y(eng, 1) + y(eng, 2));
	EXPECT_EQ(eng.face_pullback(x, 2, 2), y(eng, 1));
}

TEST(Cochains, DeltaOfSquare)
{
	auto eng = line_engine();
	auto x = y(eng, 1);
	EXPECT_EQ(eng.delta(x * x, 1), Rational(-2) * y(eng, 1) * y(eng, 2));
	EXPECT_TRUE(eng.delta(x, 1).is_zero());
}

TEST(Cochains, HeisenbergFaceZero)
{
	auto p = heisenberg_nerve(3, 2);
	CochainEngine eng(p);
	auto c = oracles::commutator_constants(oracles::heisenberg_matrices());
	for (std::uint32_t k = 0; k < 3; ++k)
	{
		Polynomial expected = y(eng, 2, k);
		for (std::uint32_t a = 0; a < 3; ++a)
			for (std::uint32_t b = 0; b < 3; ++b)
				if (sgn(c[a][b][k]) != 0)
					expected -= Rational(1, 2) * c[a][b][k] * y(eng, 2, a) * y(eng, 1, b);
		EXPECT_EQ(eng.face_pullback(y(eng, 1, k), 2, 0), expected) << "component " << k;
	}
}

TEST(Cochains, DeltaSquaresToZero)
{
	CochainEngine eng(heisenberg_nerve(4, 4));
	std::mt19937 rng(7);
	for (int n = 1; n <= 2; ++n)
		for (int trial = 0; trial < 10; ++trial)
		{
			auto f = random_cochain(eng, n, rng);
			EXPECT_TRUE(eng.delta(eng.delta(f, n), n + 1).is_zero()) << to_string(f);
		}
}

TEST(Cochains, LeibnizRule)
{
	CochainEngine eng(heisenberg_nerve(4, 4));
	std::mt19937 rng(11);
	for (int trial = 0; trial < 10; ++trial)
	{
		int p = 1 + (int)(rng() % 2), q = 1;
		auto f = random_cochain(eng, p, rng, 3, 2);
		auto g = random_cochain(eng, q, rng, 3, 2);
		auto lhs = eng.delta(eng.cup(f, p, g, q), p + q);
		auto rhs = eng.cup(eng.delta(f, p), p + 1, g, q);
		auto second = eng.cup(f, p, eng.delta(g, q), q + 1);
		rhs = (p % 2) ? rhs - second : rhs + second;
		EXPECT_EQ(lhs, rhs);
	}
}

TEST(Cochains, CupIsAssociative)
{
	CochainEngine eng(heisenberg_nerve(3, 3));
	std::mt19937 rng(5);
	auto f = random_cochain(eng, 1, rng, 2, 1), g = random_cochain(eng, 1, rng, 2, 1), h = random_cochain(eng, 1, rng, 2, 1);
	EXPECT_EQ(eng.cup(eng.cup(f, 1, g, 1), 2, h, 1), eng.cup(f, 1, eng.cup(g, 1, h, 1), 2));
}

TEST(Cochains, RetractionProperties)
{
	CochainEngine eng(heisenberg_nerve(4, 4));
	std::mt19937 rng(3);
	for (int n = 1; n <= 3; ++n)
		for (int trial = 0; trial < 8; ++trial)
		{
			auto f = random_cochain(eng, n, rng);
			auto r = eng.normalize_retract(f, n);
			EXPECT_TRUE(eng.is_normalized(r, n)) << to_string(r);
			EXPECT_EQ(eng.normalize_retract(r, n), r);
			if (n < 3)
			{
				EXPECT_EQ(eng.normalize_retract(eng.delta(f, n), n + 1), eng.delta(r, n));
			}
		}
}

TEST(Cochains, NormalizedCochainsVanishOnDegeneracies)
{
	CochainEngine eng(heisenberg_nerve(4, 4));
	std::mt19937 rng(13);
	for (int n = 1; n <= 3; ++n)
		for (int trial = 0; trial < 5; ++trial)
		{
			auto r = eng.normalize_retract(random_cochain(eng, n, rng), n);
			for (int j = 0; j < n; ++j)
				EXPECT_TRUE(eng.degeneracy_pullback(r, n - 1, j).is_zero());
		}
}

TEST(Cochains, ReduceExamples)
{
	auto p = linear_presentation(ChainComplex({0, 2, 1}, {}), 3, 3);
	CochainEngine eng(p);
	auto xi = [&](int k, std::uint32_t l) { return Polynomial::generator(p.ce_generator(k, l)); };
	EXPECT_EQ(eng.reduce(y(eng, 1, 0) * y(eng, 2, 1), 2), xi(1, 0) * xi(1, 1));
	EXPECT_EQ(eng.reduce(y(eng, 2, 0) * y(eng, 1, 1), 2), Rational(-1) * xi(1, 0) * xi(1, 1));
	EXPECT_TRUE(eng.reduce(y(eng, 1, 0) * y(eng, 2, 0), 2).is_zero());
	EXPECT_TRUE(eng.reduce(eng.coordinate(full_mask(2), 0) * y(eng, 1, 0), 2).is_zero());
	EXPECT_EQ(eng.reduce(eng.coordinate(full_mask(2), 0), 2), xi(2, 0));
	EXPECT_THROW(eng.reduce(y(eng, 1, 0), 2), InvalidArgument);
}

TEST(Cochains, TotalOrder)
{
	auto eng = line_engine();
	auto x = y(eng, 1);
	EXPECT_EQ(total_order(x * x + Rational(3) * x * x * x), 2);
	EXPECT_EQ(total_order(eng.face_pullback(x * x, 2, 1)), 2);
}

TEST(Cochains, LevelCapRaises)
{
	auto eng = line_engine();
	EXPECT_THROW(eng.face_pullback(y(eng, 1), 4, 0), InsufficientTruncation);
	EXPECT_THROW(eng.degeneracy_pullback(y(eng, 1), 3, 0), InsufficientTruncation);
}
