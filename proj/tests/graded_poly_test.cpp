#include <gtest/gtest.h>

#include <random>

#include "sdiff/graded_poly.hpp"

using namespace sdiff;

namespace sdiff {
void PrintTo(Polynomial const &p, std::ostream *os) { *os << to_string(p); }
} // namespace sdiff

namespace {

Polynomial var(char ns, int i, int parity = 0) { return Polynomial::generator(Generator::variable(ns, i, parity)); }

Polynomial random_poly(std::mt19937 &rng, int ngen, int max_weight, std::optional<int> trunc = std::nullopt)
{
	Polynomial p(trunc);
	int terms = 1 + (int)(rng() % 4);
	for (int t = 0; t < terms; ++t)
	{
		Rational c((int)(rng() % 7) - 3, 1 + (int)(rng() % 3));
		c.canonicalize();
		Polynomial m = Polynomial::constant(c);
		int w = (int)(rng() % (max_weight + 1));
		for (int k = 0; k < w; ++k)
			m = m * var('x', (int)(rng() % ngen));
		p += m;
	}
	return p;
}

} // namespace

TEST(GradedPoly, OddGeneratorsAnticommute)
{
	auto e0 = var('e', 0, 1), e1 = var('e', 1, 1);
	EXPECT_EQ(e0 * e1, -(e1 * e0));
	EXPECT_TRUE((e0 * e0).is_zero());
	EXPECT_FALSE((e0 * e1).is_zero());
}

TEST(GradedPoly, DegreeOneCeGeneratorsAnticommute)
{
	auto a = Polynomial::generator(Generator::ce(1, 0)), b = Polynomial::generator(Generator::ce(1, 1));
	auto c = Polynomial::generator(Generator::ce(2, 0));
	EXPECT_EQ(a * b, -(b * a));
	EXPECT_TRUE((a * a).is_zero());
	EXPECT_EQ(a * c, c * a);
	EXPECT_FALSE((c * c).is_zero());
	// degree 2 and odd parity squares to zero
	auto odd2 = Polynomial::generator(Generator::ce(2, 3, 1));
	EXPECT_TRUE((odd2 * odd2).is_zero());
}

TEST(GradedPoly, SquareOfSum)
{
	auto x1 = var('x', 1), x2 = var('x', 2);
	auto s = x1 + x2;
	EXPECT_EQ(s * s, x1 * x1 + Rational(2) * x1 * x2 + x2 * x2);
	auto t = (s * s).truncated(1);
	EXPECT_TRUE(t.is_zero());
}

TEST(GradedPoly, Substitute)
{
	auto x = var('x', 0), y1 = var('y', 1), y2 = var('y', 2);
	std::map<Generator, Polynomial> a{{Generator::variable('x', 0), y1 + y2}};
	EXPECT_EQ((x * x).substitute(a), y1 * y1 + Rational(2) * y1 * y2 + y2 * y2);
	EXPECT_EQ((x * x).substitute({}), x * x);
	EXPECT_EQ(Polynomial::constant(5).substitute(a), Polynomial::constant(5));
	std::map<Generator, Polynomial> bad{{Generator::variable('x', 0), var('e', 0, 1)}};
	EXPECT_THROW(x.substitute(bad), InvalidArgument);
}

TEST(GradedPoly, MultilinearCoefficient)
{
	auto y1 = var('y', 1), y2 = var('y', 2);
	auto f = Rational(-2) * y1 * y2;
	Monomial m = (y1 * y2).terms().begin()->first;
	EXPECT_EQ(f.multilinear_coefficient(m), -2);
	EXPECT_EQ(f.multilinear_coefficient(Monomial(Generator::variable('y', 3))), 0);
	auto g = Rational(3) * y1 * y1;
	EXPECT_EQ(g.multilinear_coefficient(Monomial(Generator::variable('y', 1), 2)), 6);
}

TEST(GradedPoly, RingAxiomsRandom)
{
	std::mt19937 rng(11);
	for (int t = 0; t < 60; ++t)
	{
		auto a = random_poly(rng, 5, 4), b = random_poly(rng, 5, 4), c = random_poly(rng, 5, 4);
		EXPECT_EQ((a * b) * c, a * (b * c));
		EXPECT_EQ(a * (b + c), a * b + a * c);
		EXPECT_EQ(a * b, b * a);
		auto ta = a.truncated(4), tb = b.truncated(4);
		EXPECT_EQ((a * b).truncated(4), (ta * tb).truncated(4));
	}
}

TEST(GradedPoly, SubstitutionIsHomomorphism)
{
	std::mt19937 rng(12);
	for (int t = 0; t < 40; ++t)
	{
		auto f = random_poly(rng, 3, 3), g = random_poly(rng, 3, 3);
		std::map<Generator, Polynomial> a;
		for (int i = 0; i < 3; ++i)
			a[Generator::variable('x', i)] = random_poly(rng, 4, 2);
		EXPECT_EQ((f * g).substitute(a), f.substitute(a) * g.substitute(a));
	}
}

TEST(GradedPoly, OddSubstitutionIsHomomorphism)
{
	std::mt19937 rng(13);
	auto odd = [&](int i) { return var('e', i, 1); };
	for (int t = 0; t < 40; ++t)
	{
		std::map<Generator, Polynomial> a;
		for (int i = 0; i < 3; ++i)
		{
			Polynomial img;
			for (int j = 0; j < 4; ++j)
				if (rng() % 2)
					img += Rational((int)(rng() % 5) - 2) * odd(10 + j);
			a[Generator::variable('e', i, 1)] = img;
		}
		auto f = odd(0) * odd(1) + Rational(2) * odd(2);
		auto g = odd(1) * odd(2) + odd(0);
		EXPECT_EQ((f * g).substitute(a), f.substitute(a) * g.substitute(a));
	}
}

TEST(GradedPoly, SignCoherenceUnderReorderedWords)
{
	// the normal form of a word does not depend on the order the word was written in
	std::vector<Factor> w1{{Generator::variable('e', 2, 1), 1}, {Generator::variable('e', 0, 1), 1}, {Generator::variable('e', 1, 1), 1}};
	std::vector<Factor> w2{{Generator::variable('e', 0, 1), 1}, {Generator::variable('e', 1, 1), 1}, {Generator::variable('e', 2, 1), 1}};
	auto [m1, s1] = Monomial::from_word(w1);
	auto [m2, s2] = Monomial::from_word(w2);
	EXPECT_EQ(m1, m2);
	EXPECT_EQ(s1, 1); // cyclic permutation of three odd factors is even
	EXPECT_EQ(s2, 1);
	std::vector<Factor> w3{{Generator::variable('e', 1, 1), 1}, {Generator::variable('e', 0, 1), 1}};
	EXPECT_EQ(Monomial::from_word(w3).second, -1);
}

TEST(GradedPoly, Rendering)
{
	auto x = Polynomial::generator(Generator::coordinate(0b11, 0));
	auto y = Polynomial::generator(Generator::coordinate(0b1, 1));
	auto p = Rational(-1, 2) * x + y * y - Polynomial::constant(3);
	EXPECT_EQ(to_string(p), "-3 + x{1}.1^2 - 1/2*x{1,2}.0");
	EXPECT_EQ(to_string(Polynomial()), "0");
}

TEST(GradedPoly, Derivation)
{
	auto a = Generator::ce(1, 0), b = Generator::ce(1, 1);
	std::map<Generator, Polynomial> d{{a, Polynomial()}, {b, Polynomial::generator(Generator::ce(2, 0))}};
	auto ab = Polynomial::generator(a) * Polynomial::generator(b);
	// d(ab) = da b - a db
	EXPECT_EQ(apply_derivation(ab, d, 1), -(Polynomial::generator(a) * Polynomial::generator(Generator::ce(2, 0))));
	EXPECT_THROW(apply_derivation(Polynomial::generator(Generator::ce(3, 0)), d, 1, true), InvalidArgument);
}
