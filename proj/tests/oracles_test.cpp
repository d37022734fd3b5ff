#include <gtest/gtest.h>

#include "sdiff/cochains.hpp"
#include "sdiff/lie.hpp"
#include "sdiff/oracles/corpus.hpp"
#include "sdiff/oracles/group_law.hpp"
#include "sdiff/oracles/relation_span.hpp"
#include "test_support.hpp"

using namespace sdiff;
using namespace sdiff::oracles;
using namespace testing_support;

TEST(GroupLaws, HeisenbergComponents)
{
	auto law = bch_order2(commutator_constants(heisenberg_matrices()));
	auto x = variables('x', 3), y = variables('y', 3);
	EXPECT_EQ(law.components[0], x[0] + y[0]);
	EXPECT_EQ(law.components[1], x[1] + y[1]);
	EXPECT_EQ(law.components[2], x[2] + y[2] + Rational(1, 2) * (x[0] * y[1] - y[0] * x[1]));
}

TEST(GroupLaws, CommutatorConstants)
{
	auto c = commutator_constants(heisenberg_matrices());
	EXPECT_EQ(c[0][1][2], 1);
	EXPECT_EQ(c[1][0][2], -1);
	int nonzero = 0;
	for (auto const &a : c)
		for (auto const &b : a)
			for (auto const &v : b)
				nonzero += sgn(v) != 0;
	EXPECT_EQ(nonzero, 2);
	std::vector<Matrix> diag(2, Matrix(2, 2));
	diag[0](0, 0) = 1;
	diag[1](1, 1) = 1;
	EXPECT_EQ(commutator_constants(diag), zero_constants(2));
	std::vector<Matrix> open(2, Matrix(2, 2));
	open[0](0, 1) = 1;
	open[1](1, 0) = 1;
	EXPECT_THROW(commutator_constants(open), InvalidArgument);
}

TEST(GroupLaws, Associativity)
{
	for (auto const &residue : associativity_residue(bch_order2(commutator_constants(heisenberg_matrices())), 5))
		EXPECT_TRUE(residue.is_zero());
	for (auto const &residue : associativity_residue(bch(commutator_constants(so3_matrices()), 3), 3))
		EXPECT_TRUE(residue.is_zero());
	for (auto const &residue : associativity_residue(affine_law(), 5))
		EXPECT_TRUE(residue.is_zero());
	bool broken = false;
	for (auto const &residue : associativity_residue(bch_order2(commutator_constants(so3_matrices())), 3))
		broken |= !residue.is_zero();
	EXPECT_TRUE(broken);
}

TEST(GroupLaws, Inverses)
{
	auto x = variables('x', 3, 4);
	auto inv = formal_inverse(bch_order2(commutator_constants(heisenberg_matrices())), 4);
	for (std::size_t i = 0; i < 3; ++i)
		EXPECT_EQ(inv[i], -x[i]);
	auto minv = formal_inverse(multiplicative_law(1), 4);
	auto u = x[0];
	EXPECT_EQ(minv[0], -u + u * u - u * u * u + u * u * u * u);
	GroupLaw bad = abelian_law(1);
	bad.components[0] += Polynomial::generator(law_x(0)) * Polynomial::generator(law_x(0));
	EXPECT_THROW(formal_inverse(bad, 3), InvalidArgument);
}

TEST(GroupLaws, JacobiIsChecked)
{
	auto c = zero_constants(3);
	c[0][1][2] = 1;
	c[1][0][2] = -1;
	c[1][2][0] = 1;
	c[2][1][0] = -1;
	c[2][0][0] = 1;
	c[0][2][0] = -1;
	EXPECT_THROW(bch_order2(c), InvalidArgument);
}

TEST(GroupLaws, AbelianNerveFace)
{
	auto p = nerve_from_group_law(abelian_law(1), 3, 2);
	EXPECT_EQ(p.d0[2].at(p.coordinate(element_bit(1), 0)), Polynomial::generator(p.coordinate(element_bit(2), 0), 3));
}

TEST(GroupLaws, CoordinateChangeStaysAssociative)
{
	auto x = variables('x', 2);
	auto law = change_coordinates(affine_law(), {x[0] * x[1], Rational(2) * x[0] * x[0]}, 4);
	for (auto const &residue : associativity_residue(law, 4))
		EXPECT_TRUE(residue.is_zero());
}

namespace {

/// Dimension of the span of reduced partition monomials at level n.
std::size_t reduced_dimension(int n, std::vector<std::size_t> const &ranks)
{
	auto p = linear_presentation(ChainComplex(ranks, {}), n, n);
	CochainEngine eng(p);
	std::map<Monomial, std::size_t> index;
	std::vector<std::map<Monomial, Rational>> rows;
	for_each_set_partition(n, [&](std::vector<Mask> const &blocks) {
		std::vector<std::size_t> r;
		for (Mask b : blocks)
			r.push_back(p.rank(mask_size(b)));
		std::vector<std::uint32_t> labels(blocks.size(), 0);
		for (auto x : r)
			if (x == 0)
				return;
		for (;;)
		{
			Polynomial m = eng.constant(1);
			for (std::size_t t = 0; t < blocks.size(); ++t)
				m = m * eng.coordinate(blocks[t], labels[t]);
			std::map<Monomial, Rational> row;
			Polynomial reduced = eng.reduce(m, n);
			for (auto const &[mono, c] : reduced.terms())
			{
				std::size_t next = index.size();
				index.emplace(mono, next);
				row[mono] = c;
			}
			rows.push_back(row);
			std::size_t t = 0;
			while (t < labels.size() && ++labels[t] == r[t])
				labels[t++] = 0;
			if (t == labels.size())
				break;
		}
	});
	if (index.empty())
		return 0;
	std::vector<Vector> cols;
	for (auto const &row : rows)
	{
		Vector v(index.size());
		for (auto const &[mono, c] : row)
			v[index.at(mono)] = c;
		cols.push_back(v);
	}
	return rank(Matrix::from_columns(index.size(), cols));
}

} // namespace

TEST(RelationSpan, SmallExamples)
{
	EXPECT_EQ(relation_span_rank(1, {0, 2}).corank_delta, 2u);
	auto a = relation_span_rank(2, {0, 1, 1});
	EXPECT_EQ(a.corank_delta, 1u);
	EXPECT_EQ(a.corank_transpositions, 1u);
	EXPECT_EQ(a.free_count, 1u);
	auto b = relation_span_rank(2, {0, 2});
	EXPECT_EQ(b.corank_delta, 1u);
	EXPECT_THROW(relation_span_rank(6, {0, 1}), InvalidArgument);
}

TEST(RelationSpan, MatchesReducedBasis)
{
	std::vector<std::vector<std::size_t>> shapes = {{0, 1}, {0, 2}, {0, 1, 1}, {0, 2, 1}, {0, 1, 2}, {0, 2, 2, 1}, {0, 1, 0, 2}, {0, 2, 2, 2, 2}};
	for (auto const &ranks : shapes)
		for (int n = 1; n <= 4; ++n)
		{
			auto rs = relation_span_rank(n, ranks);
			std::size_t engine = reduced_dimension(n, ranks);
			EXPECT_EQ(rs.corank_delta, rs.free_count) << "n=" << n;
			EXPECT_EQ(rs.corank_transpositions, rs.free_count) << "n=" << n;
			EXPECT_EQ(engine, rs.free_count) << "n=" << n;
		}
}

TEST(Corpus, GaugeTransformStaysValid)
{
	std::mt19937 rng(17);
	auto base = heisenberg_nerve(4, 4);
	for (int trial = 0; trial < 3; ++trial)
	{
		std::vector<Polynomial> top;
		for (std::size_t l = 0; l < 3; ++l)
			top.push_back(random_gauge_component(base, 1, rng));
		auto g = gauge_transform(base, 1, top);
		auto rep = validate_presentation(g);
		EXPECT_TRUE(rep.passed()) << rep.first_failure()->name << " " << rep.first_failure()->detail;
		EXPECT_FALSE(g.d0[2] == base.d0[2]);
		CochainEngine e1(base), e2(g);
		EXPECT_EQ(compute_ce(e1, 1).differential, compute_ce(e2, 1).differential);
	}
}

TEST(Corpus, DegreeTwoGauge)
{
	std::mt19937 rng(23);
	auto base = linear_presentation(ChainComplex({0, 2, 1}, {}), 4, 4);
	std::vector<Polynomial> top = {random_gauge_component(base, 2, rng, 4)};
	ASSERT_FALSE(top[0].is_zero());
	auto g = gauge_transform(base, 2, top);
	auto rep = validate_presentation(g);
	EXPECT_TRUE(rep.passed()) << rep.first_failure()->name << " " << rep.first_failure()->detail;
	CochainEngine eng(g);
	auto direct = compute_ce(eng, 3, CEPath::direct), via = compute_ce(eng, 3, CEPath::via_delta);
	EXPECT_EQ(direct.differential, via.differential);
}

TEST(Corpus, FuzzedPathsAgree)
{
	auto corpus = fuzz_corpus(30, 99);
	for (auto const &e : corpus)
	{
		auto rep = validate_presentation(e.presentation);
		ASSERT_TRUE(rep.passed()) << e.name << ": " << rep.first_failure()->name << " " << rep.first_failure()->detail;
		CochainEngine eng(e.presentation);
		auto direct = compute_ce(eng, e.degree, CEPath::direct), via = compute_ce(eng, e.degree, CEPath::via_delta);
		EXPECT_EQ(direct.differential, via.differential) << e.name;
	}
}
