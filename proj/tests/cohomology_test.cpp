#include <gtest/gtest.h>

#include "sdiff/cohomology.hpp"
#include "sdiff/oracles/group_law.hpp"
#include "test_support.hpp"

using namespace sdiff;
using namespace testing_support;

TEST(Cohomology, ZeroDifferential)
{
	CochainPiece c;
	c.dims = {2, 3, 1};
	GradedPieceComplex g{{c}};
	auto h = cohomology_ranks(g);
	EXPECT_EQ(h.at({0, 0}), 2u);
	EXPECT_EQ(h.at({1, 0}), 3u);
	EXPECT_EQ(h.at({2, 0}), 1u);
}

TEST(Cohomology, IdentityMapIsAcyclic)
{
	CochainPiece c;
	c.dims = {1, 1};
	c.maps = {Matrix::identity(1)};
	auto h = piece_cohomology(c);
	EXPECT_EQ(h, (std::vector<std::size_t>{0, 0}));
}

TEST(Cohomology, Errors)
{
	CochainPiece c;
	c.dims = {1, 2};
	c.maps = {Matrix::identity(1)};
	EXPECT_THROW(piece_cohomology(c), InvalidArgument);
	CochainPiece d;
	d.dims = {1, 1, 1};
	d.maps = {Matrix::identity(1), Matrix::identity(1)};
	EXPECT_THROW(piece_cohomology(d), IdentityViolation);
}

TEST(Cohomology, HeisenbergBetti)
{
	auto p = heisenberg_nerve(3, 3);
	auto ce = compute_ce(CochainEngine(p), 1);
	ce.degree = 3;
	for (int k = 2; k <= 4; ++k)
		while ((int)ce.ranks.size() <= k)
			ce.ranks.push_back(0);
	auto h = piece_cohomology(ce_complex(ce, 3));
	EXPECT_EQ(h[0], 1u);
	EXPECT_EQ(h[1], 2u);
	EXPECT_EQ(h[2], 2u);
	EXPECT_EQ(h[3], 1u);
}

TEST(VanEst, LineAndPlane)
{
	for (std::size_t m : {1u, 2u})
	{
		auto p = oracles::nerve_from_group_law(oracles::abelian_law(m), 4, 4);
		auto t = vanest_compare(p, 2, 4);
		EXPECT_TRUE(t.checks.passed()) << t.checks.first_failure()->name;
		EXPECT_TRUE(t.all_isomorphisms(2));
		EXPECT_EQ(t.cochain_totals, (std::vector<std::size_t>{1, m, m * (m - 1) / 2}));
		EXPECT_EQ(t.ce_totals, t.cochain_totals);
	}
}

TEST(VanEst, WeightZeroSlot)
{
	auto p = oracles::nerve_from_group_law(oracles::abelian_law(1), 2, 2);
	auto t = vanest_compare(p, 0, 0);
	ASSERT_EQ(t.slots.size(), 1u);
	EXPECT_EQ(t.slots[0].cochain_rank, 1u);
	EXPECT_TRUE(t.slots[0].isomorphism);
}

TEST(VanEst, LinearComplexWithBoundary)
{
	Matrix d2(1, 1);
	d2(0, 0) = 1;
	auto p = linear_presentation(ChainComplex({0, 1, 1}, {Matrix(0, 1), d2}), 3, 3);
	auto t = vanest_compare(p, 2, 3);
	EXPECT_TRUE(t.checks.passed()) << t.checks.first_failure()->name;
	EXPECT_TRUE(t.all_isomorphisms(2));
	EXPECT_EQ(t.ce_totals, (std::vector<std::size_t>{1, 0, 0}));
}

TEST(VanEst, RefusesNonlinear)
{
	EXPECT_THROW(vanest_compare(heisenberg_nerve(3, 3), 2, 2), NonlinearFace);
}
