#include <gtest/gtest.h>

#include "sdiff/abstract.hpp"
#include "sdiff/oracles/dga_corpus.hpp"
#include "sdiff/oracles/group_law.hpp"
#include "test_support.hpp"

using namespace sdiff;

namespace {

DGAlgebraPresentation by_name(std::string const &name)
{
	for (auto const &y : oracles::dga_corpus())
		if (y.name == name)
			return y;
	throw std::runtime_error("no corpus dga " + name);
}

/// Constant cosimplicial algebra on Q[t]/(t^2).
FiniteCosimplicialAlgebra constant_dual_numbers(int cap)
{
	FiniteCosimplicialAlgebra x;
	x.name = "constant";
	x.space.cap = cap;
	x.space.cofaces.resize(cap + 1);
	x.space.codegeneracies.resize(cap + 1);
	for (int n = 0; n <= cap; ++n)
	{
		x.space.dims.push_back(2);
		x.parity.push_back({0, 0});
		x.product.push_back({{{{0, Rational(1)}}, {{1, Rational(1)}}}, {{{1, Rational(1)}}, {}}});
		x.unit.push_back({Rational(1), Rational(0)});
		if (n >= 1)
			for (int i = 0; i <= n; ++i)
				x.space.cofaces[n].push_back(Matrix::identity(2));
		if (n < cap)
			for (int j = 0; j <= n; ++j)
				x.space.codegeneracies[n].push_back(Matrix::identity(2));
	}
	return x;
}

FiniteCosimplicialAlgebra abelian_cochains(int t, int cap)
{
	return cochain_algebra(linear_presentation(ChainComplex({0, 1}, {Matrix(0, 1)}), t, cap + 1, "line"), cap);
}

} // namespace

TEST(OddLine, IdentitiesUpToLevelFive)
{
	auto x = odd_line_model(5);
	EXPECT_TRUE(validate_cosimplicial_algebra(x).passed());
	auto rep = odd_line_checks(x);
	for (auto const &c : rep.checks)
		EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
}

TEST(OddLine, LowDegreeExamples)
{
	auto x = odd_line_model(3);
	EXPECT_EQ(x.cup(odd_line_delta(x, 1), 1, odd_line_delta(x, 1), 1), odd_line_delta(x, 2));
	Vector e0 = odd_line_epsilon(x, 0, 0);
	Vector expected = odd_line_epsilon(x, 1, 1);
	expected[1] -= 1;
	EXPECT_EQ(x.delta(0, e0), expected);
	EXPECT_EQ(odd_line_pi(x, 0), e0);
	EXPECT_TRUE(is_zero(x.cup(odd_line_pi(x, 1), 1, odd_line_pi(x, 1), 1)));
}

TEST(OddLine, IsInfinitesimalAndUnchangedByDifferentiation)
{
	auto x = odd_line_model(4);
	EXPECT_TRUE(is_infinitesimal(x).infinitesimal);
	auto ad = abstract_diff(x);
	for (int n = 0; n <= 4; ++n)
	{
		EXPECT_EQ(ad.normalized_dims[n], 2u);
		EXPECT_EQ(ad.ideal_dims[n], 0u);
	}
	auto rep = validate_dga(ad.algebra);
	EXPECT_TRUE(rep.passed()) << rep.first_failure()->name << ": " << rep.first_failure()->detail;
	EXPECT_TRUE(ad.algebra.commutative);
}

TEST(Normalization, ConstantAlgebraIsConcentratedInDegreeZero)
{
	auto x = constant_dual_numbers(3);
	auto nz = normalize_algebra(x);
	EXPECT_EQ(nz.ranks(), (std::vector<std::size_t>{2, 0, 0, 0}));
	EXPECT_TRUE(is_infinitesimal(x).infinitesimal);
	auto ad = abstract_diff(x);
	EXPECT_EQ(ad.algebra.dims, (std::vector<std::size_t>{2, 0, 0, 0}));
}

TEST(Normalization, DenormalizedExteriorAlgebraReturnsItself)
{
	auto y = by_name("exterior1");
	auto x = denormalize_dga(y, 3);
	auto nz = normalize_algebra(x);
	EXPECT_EQ(nz.ranks(), y.dims);
	// the generator in level one times itself vanishes, the unit acts trivially
	Vector xi(nz.basis[1].cols());
	xi[0] = 1;
	EXPECT_TRUE(is_zero(normalized_cup(x, nz, 1, xi, 1, xi)));
	Vector one = normalized_coordinates(nz, 0, x.unit[0]);
	EXPECT_EQ(normalized_cup(x, nz, 0, one, 1, xi), xi);
}

TEST(Normalization, ComparisonMapIntertwines)
{
	for (auto const &y : oracles::dga_corpus())
	{
		auto x = denormalize_dga(y, y.top());
		auto nz = normalize_algebra(x);
		EXPECT_NO_THROW(dold_kan_comparison(x, nz)) << y.name;
	}
	auto c = abelian_cochains(3, 3);
	EXPECT_NO_THROW(dold_kan_comparison(c, normalize_algebra(c)));
}

TEST(Counit, CorpusPasses)
{
	auto corpus = oracles::dga_corpus();
	EXPECT_GE(corpus.size(), 10u);
	for (auto const &y : corpus)
	{
		auto rep = counit_check(y);
		for (auto const &c : rep.checks)
			EXPECT_TRUE(c.passed) << y.name << ": " << c.name << " " << c.detail;
	}
}

TEST(Counit, BrokenDifferentialIsRejected)
{
	auto y = oracles::broken_dga();
	auto rep = validate_dga(y);
	ASSERT_FALSE(rep.passed());
	EXPECT_EQ(rep.first_failure()->name, "d^2 = 0");
	EXPECT_THROW(counit_check(y), IdentityViolation);
	EXPECT_THROW(denormalize_dga(y, 3), IdentityViolation);
}

TEST(Counit, CorpusIsGradedCommutative)
{
	for (auto const &y : oracles::dga_corpus())
	{
		auto ad = abstract_diff(denormalize_dga(y, y.top()));
		EXPECT_TRUE(ad.algebra.commutative) << y.name;
		EXPECT_TRUE(validate_dga(ad.algebra).passed()) << y.name;
	}
}

TEST(Infinitesimal, AbelianCochainsHaveWitness)
{
	auto x = abelian_cochains(3, 3);
	EXPECT_TRUE(validate_cosimplicial_algebra(x).passed());
	auto rep = is_infinitesimal(x);
	ASSERT_FALSE(rep.infinitesimal);
	EXPECT_EQ(rep.level, 1);
	// the witness is the level-one coordinate tensored with itself; its product is the square
	std::size_t nonzero_left = 0, nonzero_product = 0;
	for (auto const &c : rep.left)
		nonzero_left += sgn(c) != 0;
	for (auto const &c : rep.product)
		nonzero_product += sgn(c) != 0;
	EXPECT_EQ(nonzero_left, 1u);
	EXPECT_EQ(rep.left, rep.right);
	EXPECT_EQ(rep.left[0], 0);
	EXPECT_EQ(nonzero_product, 1u);
	EXPECT_EQ(x.multiply(1, rep.left, rep.left), rep.product);
}

TEST(AbstractDiff, AbelianCochainsGiveExteriorAlgebra)
{
	auto x = abelian_cochains(3, 3);
	auto ad = abstract_diff(x);
	EXPECT_EQ(ad.algebra.dims, (std::vector<std::size_t>{1, 1, 0, 0}));
	EXPECT_GT(ad.ideal_dims[1], 0u);
	EXPECT_TRUE(ad.algebra.differential[0].is_zero());
	EXPECT_TRUE(ad.algebra.commutative);
	EXPECT_TRUE(validate_dga(ad.algebra).passed());
	for (int n = 0; n <= 3; ++n)
		EXPECT_LE(ad.product_span_dims[n], ad.ideal_dims[n]);
}

TEST(AbstractDiff, PlaneCochainsGiveExteriorAlgebraOnTwoGenerators)
{
	auto p = linear_presentation(ChainComplex({0, 2}, {Matrix(0, 2)}), 2, 3, "plane");
	auto ad = abstract_diff(cochain_algebra(p, 2));
	EXPECT_EQ(ad.algebra.dims, (std::vector<std::size_t>{1, 2, 1}));
	EXPECT_TRUE(validate_dga(ad.algebra).passed());
}

TEST(AbstractDiff, IdealVanishesExactlyWhenInfinitesimal)
{
	std::vector<FiniteCosimplicialAlgebra> xs = {odd_line_model(3), constant_dual_numbers(2), abelian_cochains(2, 2),
	                                             abelian_cochains(3, 3)};
	for (auto const &y : oracles::dga_corpus())
		if (y.top() <= 3)
			xs.push_back(denormalize_dga(y, y.top()));
	for (auto const &x : xs)
	{
		bool inf = is_infinitesimal(x).infinitesimal;
		auto ad = abstract_diff(x);
		bool zero = true;
		for (auto d : ad.ideal_dims)
			zero = zero && d == 0;
		EXPECT_EQ(inf, zero) << x.name;
	}
}

TEST(Adjunction, DenormalizedMapsFactorThroughTheCounit)
{
	// inclusion of exterior1 into exterior2 and the identity of heisenberg
	auto a = by_name("exterior1"), b = by_name("exterior2");
	std::vector<Matrix> f;
	for (int k = 0; k <= 3; ++k)
	{
		Matrix m(b.dims[k], a.dims[k]);
		if (k <= 1)
			m(0, 0) = 1;
		f.push_back(m);
	}
	auto phi = denormalize_map(a, b, f, 3);
	auto rep = adjunction_check(denormalize_dga(a, 3), b, phi);
	for (auto const &c : rep.checks)
		EXPECT_TRUE(c.passed) << c.name;

	auto h = by_name("heisenberg");
	std::vector<Matrix> id;
	for (auto d : h.dims)
		id.push_back(Matrix::identity(d));
	auto rep2 = adjunction_check(denormalize_dga(h, 3), h, denormalize_map(h, h, id, 3));
	for (auto const &c : rep2.checks)
		EXPECT_TRUE(c.passed) << c.name;
}

TEST(Validation, RejectsBrokenAlgebras)
{
	auto x = odd_line_model(2);
	x.space.cofaces[1][0] = x.space.cofaces[1][1];
	EXPECT_FALSE(validate_cosimplicial_algebra(x).passed());
	EXPECT_THROW(normalize_algebra(x), IdentityViolation);

	auto y = odd_line_model(2);
	y.unit[1] = odd_line_epsilon(y, 1, 0);
	EXPECT_FALSE(validate_cosimplicial_algebra(y).passed());
}
