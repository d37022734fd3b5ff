#include <gtest/gtest.h>

#include <random>

#include "sdiff/combinatorics.hpp"
#include "sdiff/oracles/unravel_search.hpp"

using namespace sdiff;

namespace {

LabeledBlockSequence seq(int n, std::vector<std::pair<std::vector<int>, std::uint32_t>> const &blocks)
{
	std::vector<LabeledBlock> bs;
	for (auto const &[members, label] : blocks)
		bs.push_back({IndexSubset(n, members).mask, label});
	return LabeledBlockSequence(n, bs);
}

} // namespace

TEST(OrdinalMap, CofaceAndCodegeneracyShapes)
{
	auto d = OrdinalMap::coface(3, 1);
	EXPECT_EQ(d.values, (std::vector<int>{0, 2, 3}));
	EXPECT_TRUE(d.is_injective());
	auto s = OrdinalMap::codegeneracy(2, 1);
	EXPECT_EQ(s.values, (std::vector<int>{0, 1, 1, 2}));
	EXPECT_TRUE(s.is_surjective());
	EXPECT_THROW(OrdinalMap(1, 1, {1, 0}), InvalidArgument);
	EXPECT_THROW(OrdinalMap::coface(2, 3), InvalidArgument);
}

TEST(OrdinalMap, SimplicialIdentitiesExhaustive)
{
	using M = OrdinalMap;
	for (int n = 2; n <= 6; ++n)
		for (int j = 0; j <= n; ++j)
			for (int i = 0; i < j; ++i)
				EXPECT_EQ(compose(M::coface(n, j), M::coface(n - 1, i)), compose(M::coface(n, i), M::coface(n - 1, j - 1)));
	for (int n = 0; n <= 5; ++n)
		for (int j = 0; j <= n; ++j)
			for (int i = 0; i <= j; ++i)
				EXPECT_EQ(compose(M::codegeneracy(n, j), M::codegeneracy(n + 1, i)),
				          compose(M::codegeneracy(n, i), M::codegeneracy(n + 1, j + 1)));
	for (int n = 1; n <= 6; ++n)
		for (int j = 0; j < n; ++j)
			for (int i = 0; i <= n; ++i)
			{
				// sigma_j delta_i : [n-1] -> [n] -> [n-1]
				auto lhs = compose(M::codegeneracy(n - 1, j), M::coface(n, i));
				if (i < j)
					EXPECT_EQ(lhs, compose(M::coface(n - 1, i), M::codegeneracy(n - 2, j - 1)));
				else if (i == j || i == j + 1)
					EXPECT_EQ(lhs, M::identity(n - 1));
				else
					EXPECT_EQ(lhs, compose(M::coface(n - 1, i - 1), M::codegeneracy(n - 2, j)));
			}
}

TEST(IndexSubset, ApplyOrdinal)
{
	auto r = apply_ordinal_to_subset(OrdinalMap::codegeneracy(1, 1), IndexSubset(2, {1, 2}));
	EXPECT_EQ(r.image, IndexSubset(1, {1}));
	EXPECT_TRUE(r.size_dropped);

	auto id = apply_ordinal_to_subset(OrdinalMap::identity(4), IndexSubset(4, {2, 3}));
	EXPECT_EQ(id.image, IndexSubset(4, {2, 3}));
	EXPECT_FALSE(id.size_dropped);

	auto up = apply_ordinal_to_subset(OrdinalMap::coface(2, 1), IndexSubset(1, {1}));
	EXPECT_EQ(up.image, IndexSubset(2, {2}));

	EXPECT_THROW(apply_ordinal_to_subset(OrdinalMap::identity(3), IndexSubset(2, {1})), InvalidArgument);
	EXPECT_THROW(IndexSubset(3, {2, 1}), InvalidArgument);
}

TEST(IndexSubset, MaskHelpersMatchOrdinalAction)
{
	for (int n = 1; n <= 5; ++n)
		for (Mask m = 0; m <= full_mask(n); ++m)
		{
			for (int i = 0; i <= n + 1; ++i)
				EXPECT_EQ(coface_mask(m, i), apply_ordinal_to_subset(OrdinalMap::coface(n + 1, i), IndexSubset(n, m)).image.mask);
			for (int j = 0; j < n; ++j)
			{
				auto img = apply_ordinal_to_subset(OrdinalMap::codegeneracy(n - 1, j), IndexSubset(n, m));
				auto [mm, dropped] = codegeneracy_mask(m, j);
				EXPECT_EQ(mm, img.image.mask);
				EXPECT_EQ(dropped, img.size_dropped);
			}
		}
}

TEST(Classify, Examples)
{
	EXPECT_EQ(classify_sequence(seq(2, {{{1}, 0}, {{2}, 1}})).kind, Coverage::partition);
	auto c = classify_sequence(seq(2, {{{1, 2}, 0}, {{2}, 1}}));
	EXPECT_EQ(c.kind, Coverage::covering_with_overlap);
	EXPECT_EQ(c.overlap_index, 2);
	EXPECT_EQ(classify_sequence(seq(2, {{{1}, 0}})).kind, Coverage::non_covering);
}

TEST(Unravel, Examples)
{
	auto a = unravel(seq(2, {{{2}, 2}, {{1}, 1}}));
	EXPECT_EQ(a.canonical, seq(2, {{{1}, 1}, {{2}, 2}}));
	EXPECT_EQ(a.sign, 1);

	auto b = unravel(seq(2, {{{1}, 2}, {{2}, 1}}));
	EXPECT_EQ(b.canonical, seq(2, {{{1}, 1}, {{2}, 2}}));
	EXPECT_EQ(b.sign, -1);

	auto c = seq(3, {{{1}, 0}, {{2, 3}, 5}});
	auto rc = unravel(c);
	EXPECT_EQ(rc.canonical, c);
	EXPECT_EQ(rc.sign, 1);

	EXPECT_THROW(unravel(seq(2, {{{1, 2}, 0}, {{2}, 0}})), InvalidArgument);
}

TEST(Unravel, OddSquareVanishesEvenSquareSurvives)
{
	EXPECT_EQ(unravel(seq(2, {{{2}, 0}, {{1}, 0}})).sign, 0);
	auto even = unravel(seq(4, {{{1, 3}, 0}, {{2, 4}, 0}}));
	EXPECT_NE(even.sign, 0);
	EXPECT_TRUE(is_canonical(even.canonical));
}

TEST(Unravel, OddParityFlipsTheZeroRule)
{
	// size-1 blocks with odd declared parity behave like even generators
	EXPECT_NE(unravel(seq(2, {{{2}, 0}, {{1}, 0}}), {1, 1}).sign, 0);
	EXPECT_EQ(unravel(seq(4, {{{1, 3}, 0}, {{2, 4}, 0}}), {1, 1}).sign, 0);
}

TEST(Unravel, AgreesWithSearchOracleSmall)
{
	for (int n = 1; n <= 5; ++n)
		for_each_set_partition(n, [&](std::vector<Mask> const &blocks) {
			std::size_t s = blocks.size();
			std::size_t total = 1;
			for (std::size_t t = 0; t < s; ++t)
				total *= 2;
			for (std::size_t code = 0; code < total; ++code)
			{
				std::vector<LabeledBlock> bs;
				std::size_t c = code;
				for (std::size_t t = 0; t < s; ++t, c /= 2)
					bs.push_back({blocks[t], (std::uint32_t)(c % 2)});
				LabeledBlockSequence p(n, bs);
				auto fast = unravel(p);
				auto slow = oracles::brute_unravel_sign(p);
				ASSERT_EQ(fast.sign, slow.sign) << to_string(p);
				if (fast.sign != 0)
				{
					ASSERT_EQ(fast.canonical, slow.canonical) << to_string(p);
				}
			}
		});
}

TEST(Unravel, IdempotentAndOrderInvariant)
{
	std::mt19937 rng(7);
	for (int trial = 0; trial < 200; ++trial)
	{
		int n = 1 + (int)(rng() % 6);
		std::vector<Mask> blocks;
		std::vector<int> owner(n + 1);
		int nb = 0;
		for (int a = 1; a <= n; ++a)
		{
			owner[a] = (int)(rng() % (nb + 1));
			if (owner[a] == nb)
			{
				blocks.push_back(0);
				++nb;
			}
			blocks[owner[a]] |= element_bit(a);
		}
		std::vector<LabeledBlock> bs;
		for (Mask b : blocks)
			bs.push_back({b, (std::uint32_t)(rng() % 3)});
		LabeledBlockSequence p(n, bs);
		auto r = unravel(p);
		if (r.sign == 0)
			continue;
		auto again = unravel(r.canonical);
		EXPECT_EQ(again.canonical, r.canonical);
		EXPECT_EQ(again.sign, 1);
		std::shuffle(bs.begin(), bs.end(), rng);
		auto shuffled = unravel(LabeledBlockSequence(n, bs));
		EXPECT_EQ(shuffled.canonical, r.canonical);
		EXPECT_EQ(shuffled.sign, r.sign);
	}
}

TEST(IntegerPartitionTest, EnumerationAndCanonicalBlocks)
{
	EXPECT_EQ(integer_partitions(4).size(), 5u);
	IntegerPartition l({1, 2});
	EXPECT_EQ(l.total, 3);
	EXPECT_EQ(canonical_blocks(l), (std::vector<Mask>{0b001, 0b110}));
	EXPECT_THROW(IntegerPartition({2, 1}), InvalidArgument);
	std::size_t count = 0;
	for_each_set_partition(5, [&](auto const &) { ++count; });
	EXPECT_EQ(count, 52u);
}

TEST(Decalage, Reindex)
{
	using D = DecalageDirection;
	using K = StructureMapKind;
	EXPECT_EQ(decalage_reindex(1, 2, D::horizontal, K::face, 0), (DecalageIndex{K::face, 3, 4}));
	EXPECT_EQ(decalage_reindex(1, 2, D::vertical, K::face, 1), (DecalageIndex{K::face, 1, 4}));
	EXPECT_EQ(decalage_reindex(0, 0, D::horizontal, K::degeneracy, 0), (DecalageIndex{K::degeneracy, 1, 1}));
	EXPECT_THROW(decalage_reindex(1, 2, D::horizontal, K::face, 2), InvalidArgument);
	EXPECT_THROW(decalage_reindex(1, 2, D::vertical, K::degeneracy, -1), InvalidArgument);
}
