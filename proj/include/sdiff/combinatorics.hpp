#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "sdiff/error.hpp"

namespace sdiff {

/// Subset of {1..n} stored as a bitmask, element a at bit a-1.
using Mask = std::uint32_t;

inline constexpr int max_ambient = 30;

inline constexpr Mask full_mask(int n) { return n <= 0 ? 0u : ((Mask(1) << n) - 1u); }
inline constexpr Mask element_bit(int a) { return Mask(1) << (a - 1); }
inline constexpr bool has_element(Mask m, int a) { return a >= 1 && ((m >> (a - 1)) & 1u); }
inline int mask_size(Mask m) { return std::popcount(m); }
inline int mask_max(Mask m) { return m == 0 ? 0 : 32 - std::countl_zero(m); }
inline int mask_min(Mask m) { return m == 0 ? 0 : std::countr_zero(m) + 1; }

inline std::vector<int> mask_members(Mask m)
{
	std::vector<int> r;
	for (int a = 1; m; ++a, m >>= 1)
		if (m & 1u)
			r.push_back(a);
	return r;
}

/// The interval {lo..hi}, empty if hi < lo.
inline Mask interval_mask(int lo, int hi)
{
	if (hi < lo)
		return 0;
	return full_mask(hi) & ~full_mask(lo - 1);
}

/// Image of a subset under the coface skipping i: elements >= i move up by one.
inline Mask coface_mask(Mask m, int i)
{
	if (i <= 0)
		return m << 1;
	Mask low = m & full_mask(i - 1);
	Mask high = m & ~full_mask(i - 1);
	return low | (high << 1);
}

/// Image of a subset under the codegeneracy repeating j: elements > j move down by one.
/// Element 0 is discarded. Returns the image and whether its size dropped.
inline std::pair<Mask, bool> codegeneracy_mask(Mask m, int j)
{
	Mask low = m & full_mask(j);
	Mask high = (m & ~full_mask(j)) >> 1;
	if (j == 0)
		low = 0; // element 1 maps to 0 and is discarded
	Mask img = low | high;
	return {img, mask_size(img) < mask_size(m)};
}

/// Swap the roles of j and j+1.
inline Mask transpose_mask(Mask m, int j)
{
	bool a = has_element(m, j), b = has_element(m, j + 1);
	m &= ~(element_bit(j) | element_bit(j + 1));
	if (a)
		m |= element_bit(j + 1);
	if (b)
		m |= element_bit(j);
	return m;
}

inline std::string mask_to_string(Mask m)
{
	std::string s = "{";
	bool first = true;
	for (int a : mask_members(m))
	{
		if (!first)
			s += ",";
		s += std::to_string(a);
		first = false;
	}
	return s + "}";
}

// ---------------------------------------------------------------------------
// Ordinal maps

/// Monotone map [domain_size] -> [codomain_size].
struct OrdinalMap
{
	int domain_size = 0;
	int codomain_size = 0;
	std::vector<int> values;

	OrdinalMap() : values{0} {}
	OrdinalMap(int dom, int cod, std::vector<int> vals)
	    : domain_size(dom), codomain_size(cod), values(std::move(vals))
	{
		require(dom >= 0 && cod >= 0, "ordinal sizes must be nonnegative");
		require((int)values.size() == dom + 1, "ordinal map needs domain_size+1 values");
		for (int t = 0; t <= dom; ++t)
		{
			require(values[t] >= 0 && values[t] <= cod, "ordinal value out of range");
			require(t == 0 || values[t - 1] <= values[t], "ordinal map must be non-decreasing");
		}
	}

	int operator()(int t) const { return values.at(t); }

	static OrdinalMap identity(int n)
	{
		std::vector<int> v(n + 1);
		std::iota(v.begin(), v.end(), 0);
		return {n, n, std::move(v)};
	}

	/// Injection [n-1] -> [n] missing i.
	static OrdinalMap coface(int n, int i)
	{
		require(n >= 1 && i >= 0 && i <= n, "coface index out of range");
		std::vector<int> v(n);
		for (int t = 0; t < n; ++t)
			v[t] = t < i ? t : t + 1;
		return {n - 1, n, std::move(v)};
	}

	/// Surjection [n+1] -> [n] hitting j twice.
	static OrdinalMap codegeneracy(int n, int j)
	{
		require(n >= 0 && j >= 0 && j <= n, "codegeneracy index out of range");
		std::vector<int> v(n + 2);
		for (int t = 0; t <= n + 1; ++t)
			v[t] = t <= j ? t : t - 1;
		return {n + 1, n, std::move(v)};
	}

	bool is_injective() const
	{
		for (int t = 1; t <= domain_size; ++t)
			if (values[t] == values[t - 1])
				return false;
		return true;
	}

	bool is_surjective() const
	{
		if (values.front() != 0 || values.back() != codomain_size)
			return false;
		for (int t = 1; t <= domain_size; ++t)
			if (values[t] > values[t - 1] + 1)
				return false;
		return true;
	}

	bool operator==(OrdinalMap const &) const = default;
};

/// (a ∘ b)(t) = a(b(t)).
inline OrdinalMap compose(OrdinalMap const &a, OrdinalMap const &b)
{
	require(b.codomain_size == a.domain_size, "ordinal composition size mismatch");
	std::vector<int> v(b.domain_size + 1);
	for (int t = 0; t <= b.domain_size; ++t)
		v[t] = a(b(t));
	return {b.domain_size, a.codomain_size, std::move(v)};
}

// ---------------------------------------------------------------------------
// Index subsets

struct IndexSubset
{
	int ambient = 0;
	Mask mask = 0;

	IndexSubset() = default;
	IndexSubset(int n, Mask m) : ambient(n), mask(m)
	{
		require(n >= 0 && n <= max_ambient, "ambient out of range");
		require((m & ~full_mask(n)) == 0, "subset member outside ambient range");
	}
	IndexSubset(int n, std::vector<int> const &members) : ambient(n)
	{
		require(n >= 0 && n <= max_ambient, "ambient out of range");
		for (std::size_t t = 0; t < members.size(); ++t)
		{
			require(members[t] >= 1 && members[t] <= n, "subset member outside ambient range");
			require(t == 0 || members[t - 1] < members[t], "subset members must be strictly increasing");
			mask |= element_bit(members[t]);
		}
	}

	std::vector<int> members() const { return mask_members(mask); }
	int size() const { return mask_size(mask); }
	bool contains(int a) const { return has_element(mask, a); }

	auto operator<=>(IndexSubset const &) const = default;
};

struct SubsetImage
{
	IndexSubset image;
	bool size_dropped = false;
};

/// Pointwise image under theta; the value 0 is not part of the subset universe and is discarded.
inline SubsetImage apply_ordinal_to_subset(OrdinalMap const &theta, IndexSubset const &alpha)
{
	if (alpha.ambient != theta.domain_size)
		throw InvalidArgument("subset ambient " + std::to_string(alpha.ambient) +
		                      " does not match ordinal domain " + std::to_string(theta.domain_size));
	Mask img = 0;
	for (int a : alpha.members())
		if (int v = theta(a); v > 0)
			img |= element_bit(v);
	IndexSubset out(theta.codomain_size, img);
	return {out, out.size() < alpha.size()};
}

// ---------------------------------------------------------------------------
// Labeled block sequences

struct LabeledBlock
{
	Mask block = 0;
	std::uint32_t label = 0;

	auto operator<=>(LabeledBlock const &) const = default;
};

struct LabeledBlockSequence
{
	int ambient = 0;
	std::vector<LabeledBlock> blocks;

	LabeledBlockSequence() = default;
	LabeledBlockSequence(int n, std::vector<LabeledBlock> bs) : ambient(n), blocks(std::move(bs))
	{
		require(n >= 0 && n <= max_ambient, "ambient out of range");
		for (auto const &b : blocks)
			require(b.block != 0 && (b.block & ~full_mask(n)) == 0, "block must be a nonempty subset of the ambient set");
	}

	bool operator==(LabeledBlockSequence const &) const = default;
};

inline std::string to_string(LabeledBlockSequence const &p)
{
	std::string s = "(";
	for (std::size_t t = 0; t < p.blocks.size(); ++t)
	{
		if (t)
			s += ",";
		s += mask_to_string(p.blocks[t].block) + "#" + std::to_string(p.blocks[t].label);
	}
	return s + ")";
}

enum class Coverage
{
	non_covering,
	covering_with_overlap,
	partition
};

struct Classification
{
	Coverage kind = Coverage::non_covering;
	int overlap_index = 0; // minimal overlapped element, set for covering_with_overlap
};

inline Classification classify_blocks(int n, std::vector<Mask> const &blocks)
{
	Mask seen = 0, twice = 0;
	for (Mask b : blocks)
	{
		twice |= seen & b;
		seen |= b;
	}
	if (seen != full_mask(n))
		return {Coverage::non_covering, 0};
	if (twice)
		return {Coverage::covering_with_overlap, mask_min(twice)};
	return {Coverage::partition, 0};
}

inline Classification classify_sequence(LabeledBlockSequence const &p)
{
	std::vector<Mask> bs;
	for (auto const &b : p.blocks)
		bs.push_back(b.block);
	return classify_blocks(p.ambient, bs);
}

struct IntegerPartition
{
	std::vector<int> parts;
	int total = 0;

	IntegerPartition() = default;
	explicit IntegerPartition(std::vector<int> ps) : parts(std::move(ps))
	{
		for (std::size_t t = 0; t < parts.size(); ++t)
		{
			require(parts[t] > 0, "partition parts must be positive");
			require(t == 0 || parts[t - 1] <= parts[t], "partition parts must be non-decreasing");
			total += parts[t];
		}
	}

	bool operator==(IntegerPartition const &) const = default;
};

/// All partitions of n with non-decreasing parts, in lexicographic order.
inline std::vector<IntegerPartition> integer_partitions(int n)
{
	std::vector<IntegerPartition> out;
	std::vector<int> cur;
	std::function<void(int, int)> rec = [&](int rest, int minpart) {
		if (rest == 0)
		{
			out.emplace_back(cur);
			return;
		}
		for (int k = minpart; k <= rest; ++k)
		{
			cur.push_back(k);
			rec(rest - k, k);
			cur.pop_back();
		}
	};
	rec(n, 1);
	return out;
}

/// Contiguous blocks {1..k1},{k1+1..k1+k2},... realizing lambda.
inline std::vector<Mask> canonical_blocks(IntegerPartition const &lambda)
{
	std::vector<Mask> r;
	int start = 1;
	for (int k : lambda.parts)
	{
		r.push_back(interval_mask(start, start + k - 1));
		start += k;
	}
	return r;
}

/// Calls f(blocks) for every set partition of {1..n}, blocks sorted by minimum.
inline void for_each_set_partition(int n, std::function<void(std::vector<Mask> const &)> const &f)
{
	if (n == 0)
	{
		f({});
		return;
	}
	std::vector<Mask> blocks;
	std::function<void(int)> rec = [&](int a) {
		if (a > n)
		{
			f(blocks);
			return;
		}
		for (std::size_t b = 0; b < blocks.size(); ++b)
		{
			blocks[b] |= element_bit(a);
			rec(a + 1);
			blocks[b] &= ~element_bit(a);
		}
		blocks.push_back(element_bit(a));
		rec(a + 1);
		blocks.pop_back();
	};
	rec(1);
}

// ---------------------------------------------------------------------------
// Unraveling

struct UnravelResult
{
	LabeledBlockSequence canonical;
	int sign = 1;                    // +1, -1, or 0 when the class vanishes
	std::vector<std::size_t> origin; // canonical block t came from input block origin[t]
};

/// True if blocks are contiguous, sizes non-decreasing and labels non-decreasing within equal sizes.
inline bool is_canonical(LabeledBlockSequence const &p)
{
	int next = 1;
	for (std::size_t t = 0; t < p.blocks.size(); ++t)
	{
		Mask b = p.blocks[t].block;
		int k = mask_size(b);
		if (b != interval_mask(next, next + k - 1))
			return false;
		next += k;
		if (t > 0)
		{
			int kp = mask_size(p.blocks[t - 1].block);
			if (kp > k || (kp == k && p.blocks[t - 1].label > p.blocks[t].label))
				return false;
		}
	}
	return next == p.ambient + 1;
}

/// Brings a labeled partition to its canonical representative.
///
/// Reordering the sequence is free except for the Koszul sign of the optional per-block
/// parities; each allowed transposition costs -1. Two equal blocks with equal labels
/// whose size plus parity is odd force the class to vanish (sign 0).
inline UnravelResult unravel(LabeledBlockSequence const &p, std::vector<int> const &parities = {})
{
	if (classify_sequence(p).kind != Coverage::partition)
		throw InvalidArgument("unravel needs a partition, got " + to_string(p));
	require(parities.empty() || parities.size() == p.blocks.size(), "parity list length mismatch");
	std::size_t s = p.blocks.size();
	auto par = [&](std::size_t idx) { return parities.empty() ? 0 : (parities[idx] & 1); };

	std::vector<std::size_t> order(s);
	std::iota(order.begin(), order.end(), 0);
	std::vector<Mask> blk(s);
	for (std::size_t t = 0; t < s; ++t)
		blk[t] = p.blocks[t].block;

	// pre-sort by (size, max element)
	std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
		int ka = mask_size(blk[a]), kb = mask_size(blk[b]);
		if (ka != kb)
			return ka < kb;
		return mask_max(blk[a]) < mask_max(blk[b]);
	});
	std::vector<Mask> seq(s);
	for (std::size_t t = 0; t < s; ++t)
		seq[t] = blk[order[t]];

	// minimal allowed transposition j with j in a later block than j+1
	int transpositions = 0;
	std::vector<int> pos(p.ambient + 2, 0);
	for (;;)
	{
		for (std::size_t t = 0; t < s; ++t)
			for (int a : mask_members(seq[t]))
				pos[a] = (int)t;
		int found = 0;
		for (int j = 1; j < p.ambient; ++j)
			if (pos[j] > pos[j + 1])
			{
				found = j;
				break;
			}
		if (!found)
			break;
		seq[pos[found]] = transpose_mask(seq[pos[found]], found);
		seq[pos[found + 1]] = transpose_mask(seq[pos[found + 1]], found);
		++transpositions;
	}

	// sort labels inside runs of equal size; moving a label across a block of size k costs (-1)^k
	bool zero = false;
	for (std::size_t pass = 0; pass < s; ++pass)
		for (std::size_t t = 0; t + 1 < s; ++t)
		{
			int k = mask_size(seq[t]);
			if (k != mask_size(seq[t + 1]))
				continue;
			auto la = p.blocks[order[t]].label, lb = p.blocks[order[t + 1]].label;
			if (la > lb)
			{
				std::swap(order[t], order[t + 1]);
				transpositions += k * k;
			}
		}
	for (std::size_t t = 0; t + 1 < s; ++t)
	{
		int k = mask_size(seq[t]);
		if (k == mask_size(seq[t + 1]) && p.blocks[order[t]].label == p.blocks[order[t + 1]].label &&
		    ((k + par(order[t])) & 1))
			zero = true;
	}

	// Koszul sign of the block permutation restricted to odd blocks
	int koszul = 0;
	for (std::size_t a = 0; a < s; ++a)
		for (std::size_t b = a + 1; b < s; ++b)
			if (order[a] > order[b] && par(order[a]) && par(order[b]))
				++koszul;

	UnravelResult r;
	r.canonical.ambient = p.ambient;
	for (std::size_t t = 0; t < s; ++t)
		r.canonical.blocks.push_back({seq[t], p.blocks[order[t]].label});
	r.origin = order;
	r.sign = zero ? 0 : (((transpositions + koszul) & 1) ? -1 : 1);
	return r;
}

// ---------------------------------------------------------------------------
// Decalage

enum class DecalageDirection
{
	horizontal,
	vertical
};

enum class StructureMapKind
{
	face,
	degeneracy
};

struct DecalageIndex
{
	StructureMapKind kind;
	int index;
	int level;

	bool operator==(DecalageIndex const &) const = default;
};

/// Index of the structure map of level p+q+1 realizing a horizontal or vertical map at (p,q).
inline DecalageIndex decalage_reindex(int p, int q, DecalageDirection dir, StructureMapKind kind, int index)
{
	require(p >= 0 && q >= 0, "bidegree must be nonnegative");
	int limit = dir == DecalageDirection::horizontal ? p : q;
	if (index < 0 || index > limit)
		throw InvalidArgument("decalage index " + std::to_string(index) + " out of range 0.." + std::to_string(limit));
	int shifted = dir == DecalageDirection::horizontal ? index + q + 1 : index;
	return {kind, shifted, p + q + 1};
}

} // namespace sdiff
