#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "sdiff/error.hpp"
#include "sdiff/linear_algebra.hpp"
#include "sdiff/rational.hpp"

namespace sdiff::oracles {

/// Result of the brute-force quotient computation at one level.
struct RelationSpan
{
	std::size_t partition_monomials = 0; ///< covering monomials of weight n at level n
	std::size_t corank_transpositions = 0;
	std::size_t corank_delta = 0;        ///< after quotienting by the differential of the weight-n part of J at level n-1
	std::size_t free_count = 0;          ///< degree-n monomials of the free graded-commutative algebra
};

namespace rs {

/// Commutative monomial: sorted list of (subset, label).
using Mono = std::vector<std::pair<std::uint32_t, std::uint32_t>>;
using Poly = std::map<Mono, Rational>;

inline int popcount(std::uint32_t m) { return std::popcount(m); }

inline Poly multiply(Poly const &a, Poly const &b)
{
	Poly out;
	for (auto const &[ma, ca] : a)
		for (auto const &[mb, cb] : b)
		{
			Mono m = ma;
			m.insert(m.end(), mb.begin(), mb.end());
			std::sort(m.begin(), m.end());
			out[m] += ca * cb;
		}
	for (auto it = out.begin(); it != out.end();)
		it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
	return out;
}

/// Image of element j of {1..n} under the i-th face {1..n} -> {1..n-1}; 0 if deleted.
inline int face_image(int n, int i, int j)
{
	if (i == 0)
		return j - 1;
	if (i == n)
		return j == n ? 0 : j;
	return j <= i ? j : j - 1;
}

/// Pullback of a level n-1 coordinate along the i-th face of the denormalization with zero boundary.
inline Poly coordinate_face(std::uint32_t alpha, std::uint32_t label, int n, int i)
{
	Poly out;
	for (std::uint32_t beta = 1; beta < (1u << n); ++beta)
	{
		if (popcount(beta) != popcount(alpha))
			continue;
		std::uint32_t img = 0;
		bool ok = true;
		for (int j = 1; j <= n && ok; ++j)
			if (beta & (1u << (j - 1)))
			{
				int t = face_image(n, i, j);
				if (t == 0 || (img & (1u << (t - 1))))
					ok = false;
				else
					img |= 1u << (t - 1);
			}
		if (ok && img == alpha)
			out[Mono{{beta, label}}] += 1;
	}
	return out;
}

inline Poly delta(Mono const &m, int from_level)
{
	int n = from_level + 1;
	Poly out;
	for (int i = 0; i <= n; ++i)
	{
		Poly prod{{Mono{}, Rational(1)}};
		for (auto const &[alpha, label] : m)
			prod = multiply(prod, coordinate_face(alpha, label, n, i));
		for (auto const &[mm, c] : prod)
			out[mm] += (i % 2 ? -c : c);
	}
	for (auto it = out.begin(); it != out.end();)
		it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
	return out;
}

/// All commutative monomials at the given level with the given total weight whose subsets cover {1..level}.
inline std::vector<Mono> covering_monomials(int level, int weight, std::vector<std::size_t> const &ranks)
{
	std::vector<std::pair<std::uint32_t, std::uint32_t>> coords;
	for (std::uint32_t a = 1; a < (1u << level); ++a)
	{
		std::size_t k = (std::size_t)popcount(a);
		std::size_t r = k < ranks.size() ? ranks[k] : 0;
		for (std::uint32_t l = 0; l < r; ++l)
			coords.push_back({a, l});
	}
	std::vector<Mono> out;
	Mono cur;
	std::uint32_t full = level == 0 ? 0 : ((1u << level) - 1);
	std::function<void(std::size_t, int)> rec = [&](std::size_t start, int w) {
		if (w == weight)
		{
			std::uint32_t cover = 0;
			for (auto const &c : cur)
				cover |= c.first;
			if (cover == full)
				out.push_back(cur);
			return;
		}
		for (std::size_t i = start; i < coords.size(); ++i)
		{
			int cw = popcount(coords[i].first);
			if (w + cw > weight)
				continue;
			cur.push_back(coords[i]);
			rec(i, w + cw);
			cur.pop_back();
		}
	};
	rec(0, 0);
	return out;
}

/// Swaps the elements j and j+1 inside a subset.
inline std::uint32_t swap_elements(std::uint32_t m, int j)
{
	std::uint32_t a = 1u << (j - 1), b = 1u << j;
	bool ha = m & a, hb = m & b;
	m &= ~(a | b);
	if (ha)
		m |= b;
	if (hb)
		m |= a;
	return m;
}

} // namespace rs

/// Monomials of degree n in the free graded-commutative algebra with ranks[k] generators of degree k.
inline std::size_t free_algebra_count(int n, std::vector<std::size_t> const &ranks)
{
	// generating function product over generators: odd degree -> (1 + t^k), even degree -> 1/(1 - t^k)
	std::vector<std::size_t> coeff(n + 1, 0);
	coeff[0] = 1;
	for (std::size_t k = 1; k < ranks.size() && (int)k <= n; ++k)
		for (std::size_t g = 0; g < ranks[k]; ++g)
		{
			std::vector<std::size_t> next(n + 1, 0);
			for (int d = 0; d <= n; ++d)
			{
				if (!coeff[d])
					continue;
				for (int e = 0; d + e * (int)k <= n; ++e)
				{
					next[d + e * k] += coeff[d];
					if (k % 2 == 1 && e == 1)
						break;
				}
			}
			coeff = next;
		}
	return coeff[n];
}

/// Brute-force dimension of the weight-n quotient at level n for the denormalization of a complex with zero boundary.
inline RelationSpan relation_span_rank(int n, std::vector<std::size_t> const &ranks)
{
	require(n >= 1 && n <= 5, "relation span oracle bound: 1 <= n <= 5");
	for (auto r : ranks)
		require(r <= 2, "relation span oracle bound: ranks <= 2");
	RelationSpan out;
	auto basis = rs::covering_monomials(n, n, ranks);
	std::map<rs::Mono, std::size_t> index;
	for (std::size_t i = 0; i < basis.size(); ++i)
		index[basis[i]] = i;
	out.partition_monomials = basis.size();

	// transposition relations x_P + x_{tau_j P} for j, j+1 in different blocks
	std::vector<Vector> rel;
	for (auto const &m : basis)
		for (int j = 1; j < n; ++j)
		{
			bool same_block = false;
			for (auto const &c : m)
				if ((c.first >> (j - 1) & 1u) && (c.first >> j & 1u))
					same_block = true;
			if (same_block)
				continue;
			rs::Mono t;
			for (auto const &c : m)
				t.push_back({rs::swap_elements(c.first, j), c.second});
			std::sort(t.begin(), t.end());
			Vector v(basis.size());
			v[index.at(m)] += 1;
			v[index.at(t)] += 1;
			rel.push_back(v);
		}
	out.corank_transpositions = basis.size() - (rel.empty() ? 0 : rank(Matrix::from_columns(basis.size(), rel)));

	// differentials of weight-n covering monomials one level down
	std::vector<Vector> drel;
	if (n >= 2)
		for (auto const &m : rs::covering_monomials(n - 1, n, ranks))
		{
			Vector v(basis.size());
			for (auto const &[mm, c] : rs::delta(m, n - 1))
			{
				auto it = index.find(mm);
				if (it == index.end())
					throw IdentityViolation("differential left the covering weight-n monomials");
				v[it->second] += c;
			}
			drel.push_back(v);
		}
	out.corank_delta = basis.size() - (drel.empty() ? 0 : rank(Matrix::from_columns(basis.size(), drel)));
	out.free_count = free_algebra_count(n, ranks);
	return out;
}

} // namespace sdiff::oracles
