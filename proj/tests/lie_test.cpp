#include <gtest/gtest.h>

#include "sdiff/lie.hpp"
#include "sdiff/oracles/group_law.hpp"
#include "test_support.hpp"

using namespace sdiff;
using namespace testing_support;

namespace {

Polynomial xi(FramedPresentation const &p, int k, std::uint32_t l) { return Polynomial::generator(p.ce_generator(k, l)); }

std::size_t binomial(std::size_t n, std::size_t k)
{
	if (k > n)
		return 0;
	std::size_t r = 1;
	for (std::size_t i = 1; i <= k; ++i)
		r = r * (n - k + i) / i;
	return r;
}

} // namespace

TEST(Lie, AbelianHasZeroDifferential)
{
	auto p = oracles::nerve_from_group_law(oracles::abelian_law(2), 3, 3);
	CochainEngine eng(p);
	auto ce = compute_ce(eng, 1);
	for (auto const &[g, d] : ce.differential)
		EXPECT_TRUE(d.is_zero()) << to_string(g);
}

TEST(Lie, HeisenbergDifferential)
{
	auto p = heisenberg_nerve(3, 3);
	CochainEngine eng(p);
	for (auto path : {CEPath::direct, CEPath::via_delta})
	{
		auto ce = compute_ce(eng, 1, path);
		EXPECT_TRUE(ce.differential.at(p.ce_generator(1, 0)).is_zero());
		EXPECT_TRUE(ce.differential.at(p.ce_generator(1, 1)).is_zero());
		EXPECT_EQ(ce.differential.at(p.ce_generator(1, 2)), xi(p, 1, 0) * xi(p, 1, 1));
	}
}

TEST(Lie, BracketMatchesCommutators)
{
	for (auto basis : {oracles::heisenberg_matrices(), oracles::so3_matrices()})
	{
		auto c = oracles::commutator_constants(basis);
		auto p = oracles::nerve_from_group_law(oracles::bch_order2(c), 2, 2);
		auto ce = compute_ce(CochainEngine(p), 1);
		EXPECT_EQ(lie_bracket(ce), c);
	}
}

TEST(Lie, PathsAgreeOnLinearComplexes)
{
	Matrix d2(2, 1), d3(1, 2);
	d2(0, 0) = 1;
	d2(1, 0) = -2;
	auto p = linear_presentation(ChainComplex({0, 2, 1, 0}, {Matrix(0, 2), d2}), 4, 4);
	CochainEngine eng(p);
	auto direct = compute_ce(eng, 2, CEPath::direct);
	auto via = compute_ce(eng, 2, CEPath::via_delta);
	EXPECT_EQ(direct.differential, via.differential);
	EXPECT_EQ(direct.differential.at(p.ce_generator(1, 1)), Rational(-2) * xi(p, 2, 0));
	EXPECT_TRUE(check_d_squared(direct, 2).passed());
}

TEST(Lie, SquareZeroOnSo3)
{
	auto p = so3_nerve(3, 3);
	auto ce = compute_ce(CochainEngine(p), 1);
	auto rep = check_d_squared(ce, 1);
	EXPECT_TRUE(rep.passed()) << rep.first_failure()->detail;
}

TEST(Lie, InsufficientTruncation)
{
	auto p = heisenberg_nerve(1, 3);
	CochainEngine eng(p);
	EXPECT_THROW(ce_differential_direct(eng, 1, 0), InsufficientTruncation);
	auto q = heisenberg_nerve(3, 1);
	CochainEngine eng2(q);
	EXPECT_THROW(ce_differential_via_delta(eng2, 1, 0), InsufficientTruncation);
}

TEST(Lie, ValidationAcceptsNerves)
{
	for (auto const &p : {heisenberg_nerve(3, 4), so3_nerve(3, 4), linear_presentation(ChainComplex({0, 1, 1}, {Matrix(0, 1), Matrix::identity(1)}), 3, 4)})
	{
		auto rep = validate_presentation(p);
		EXPECT_TRUE(rep.passed()) << p.name << ": " << (rep.first_failure() ? rep.first_failure()->name + " " + rep.first_failure()->detail : "");
	}
}

TEST(Lie, ValidationRejectsBrokenIdentity)
{
	auto p = heisenberg_nerve(3, 3);
	auto y1 = Polynomial::generator(p.coordinate(element_bit(1), 0), 3);
	auto y2 = Polynomial::generator(p.coordinate(element_bit(2), 0), 3);
	p.d0[2][p.coordinate(element_bit(1), 1)] += y1 * y2;
	auto rep = validate_presentation(p);
	ASSERT_FALSE(rep.passed());
	EXPECT_NE(rep.first_failure()->detail, "");
}

TEST(Lie, ValidationRejectsWrongLinearPart)
{
	auto p = heisenberg_nerve(3, 2);
	p.d0[2][p.coordinate(element_bit(1), 0)] *= Rational(2);
	auto rep = validate_presentation(p);
	ASSERT_FALSE(rep.passed());
	EXPECT_EQ(rep.first_failure()->name, "linear part of d0 is the Dold-Kan face");
}

TEST(Lie, BracketTableHigherArity)
{
	auto p = heisenberg_nerve(3, 3);
	auto ce = compute_ce(CochainEngine(p), 1);
	auto t = bracket_table(ce, {1, 1});
	ASSERT_EQ(t.entries.size(), 1u);
	EXPECT_EQ((t.entries.begin()->first.first), (std::vector<std::uint32_t>{0, 1}));
	EXPECT_EQ(t.entries.begin()->first.second, 2u);
}

TEST(Lie, InclusionExclusionGluesAxes)
{
	Matrix p0(2, 2), p1(2, 2);
	p0(0, 0) = 1;
	p1(1, 1) = 1;
	auto v0 = Polynomial::generator(Generator::variable('v', 0)), v1 = Polynomial::generator(Generator::variable('v', 1));
	auto g = inclusion_exclusion_extend({p0, p1}, {v0 * v0 + Polynomial::constant(1), v1 * v1 * v1 + Polynomial::constant(1)}, 2);
	EXPECT_EQ(g, v0 * v0 + v1 * v1 * v1 + Polynomial::constant(1));
	EXPECT_THROW(inclusion_exclusion_extend({p0, p1}, {v0, Polynomial::constant(2)}, 2), IdentityViolation);
	Matrix bad(2, 2);
	bad(0, 0) = 2;
	EXPECT_THROW(inclusion_exclusion_extend({bad}, {v0}, 2), InvalidArgument);
}

TEST(Lie, WeilCountsForAbelian)
{
	for (std::size_t m : {1u, 2u, 3u})
	{
		auto p = oracles::nerve_from_group_law(oracles::abelian_law(m), 2, 2);
		auto w = weil_extension(compute_ce(CochainEngine(p), 1));
		EXPECT_TRUE(check_weil(w).passed());
		auto counts = weil_monomial_counts(w, 5);
		for (int p_ = 0; p_ <= 5; ++p_)
			for (int q = 0; q <= p_ && p_ + q <= 5; ++q)
			{
				std::size_t expected = binomial(m, p_ - q) * binomial(m + q - 1, q);
				if (m == 0 && q == 0)
					expected = p_ == 0;
				auto it = counts.find({p_, q});
				EXPECT_EQ(it == counts.end() ? 0 : it->second, expected) << "m=" << m << " p=" << p_ << " q=" << q;
			}
	}
}

TEST(Lie, WeilOnHeisenberg)
{
	auto p = heisenberg_nerve(3, 3);
	auto w = weil_extension(compute_ce(CochainEngine(p), 1));
	auto rep = check_weil(w);
	EXPECT_TRUE(rep.passed()) << rep.first_failure()->name;
	auto dv = [&](std::uint32_t l) { return Polynomial::generator(vertical_partner(p.ce_generator(1, l))); };
	EXPECT_EQ(w.horizontal.at(vertical_partner(p.ce_generator(1, 2))), Rational(-1) * (dv(0) * xi(p, 1, 1) - xi(p, 1, 0) * dv(1)));
}

TEST(Lie, SecondOrderLawFailsAtWeightThree)
{
	auto law = oracles::bch_order2(oracles::commutator_constants(oracles::so3_matrices()), "so3");
	auto rep = validate_presentation(oracles::nerve_from_group_law(law, 3, 3));
	ASSERT_FALSE(rep.passed());
	EXPECT_EQ(rep.first_failure()->name, "d0 d1 = d0 d0 at level 3");
}
