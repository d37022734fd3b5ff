#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sdiff/combinatorics.hpp"
#include "sdiff/dold_kan.hpp"
#include "sdiff/error.hpp"
#include "sdiff/graded_poly.hpp"

namespace sdiff {

/// A simplicial manifold germ in a frame: the tangent complex, the d0 pullbacks per level, and the Taylor cutoff.
///
/// Positive faces and degeneracies are the linear Dold-Kan maps of the tangent complex and are not stored.
struct FramedPresentation
{
	std::string name;
	ChainComplex tangent;                         ///< ranks[k] = rank of A_k; ranks[0] must be 0
	int truncation = 1;                           ///< maximal total weight kept
	int max_level = 1;                            ///< highest level with d0 data
	bool super_flag = false;                      ///< coordinates may be odd
	std::vector<std::vector<int>> parity;         ///< parity[k][l]; empty means even or the default
	std::vector<std::map<Generator, Polynomial>> d0; ///< d0[n]: level n-1 coordinate -> polynomial at level n

	std::size_t rank(int k) const { return tangent.rank(k); }
	int top_degree() const
	{
		int t = 0;
		for (int k = 0; k <= tangent.top_degree(); ++k)
			if (tangent.rank(k) > 0)
				t = k;
		return t;
	}

	int coordinate_parity(int k, std::uint32_t label) const
	{
		if (!super_flag)
			return 0;
		if (k < (int)parity.size() && label < parity[k].size())
			return parity[k][label] & 1;
		return k & 1;
	}

	Generator coordinate(Mask alpha, std::uint32_t label) const
	{
		return Generator::coordinate(alpha, label, coordinate_parity(mask_size(alpha), label));
	}
	Generator ce_generator(int k, std::uint32_t label) const { return Generator::ce(k, label, coordinate_parity(k, label)); }
};

/// Coordinates x_{alpha,l} of level n in DK basis order.
inline std::vector<Generator> level_coordinates(FramedPresentation const &p, int n)
{
	std::vector<Generator> out;
	DKBasis basis(p.tangent.ranks, n);
	for (auto const &el : basis.elements())
		out.push_back(p.coordinate(el.alpha, (std::uint32_t)el.index));
	return out;
}

/// Pullback of the level-m coordinates along a linear simplicial operator with matrix `m` (rows: target level basis).
inline std::map<Generator, Polynomial> linear_pullback(FramedPresentation const &p, Matrix const &m, int row_level,
                                                       int col_level)
{
	DKBasis rows(p.tangent.ranks, row_level), cols(p.tangent.ranks, col_level);
	std::map<Generator, Polynomial> out;
	for (std::size_t r = 0; r < rows.size(); ++r)
	{
		Polynomial img(p.truncation);
		for (std::size_t c = 0; c < cols.size(); ++c)
			if (sgn(m(r, c)) != 0)
				img.add_term(Monomial(p.coordinate(cols[c].alpha, (std::uint32_t)cols[c].index)), m(r, c));
		out.emplace(p.coordinate(rows[r].alpha, (std::uint32_t)rows[r].index), std::move(img));
	}
	return out;
}

/// x o d_i for the level n-1 coordinates, i >= 1, or the linear part of d_0 for i = 0.
inline std::map<Generator, Polynomial> linear_face_pullback(FramedPresentation const &p, int n, int i)
{
	return linear_pullback(p, dk_face_matrix(p.tangent, n, i), n - 1, n);
}

/// x o s_j for the level n+1 coordinates, as polynomials at level n.
inline std::map<Generator, Polynomial> degeneracy_pullback_map(FramedPresentation const &p, int n, int j)
{
	return linear_pullback(p, dk_degeneracy_matrix(p.tangent, n, j), n + 1, n);
}

/// The presentation whose d0 is the linear Dold-Kan face: the denormalization of the tangent complex.
inline FramedPresentation linear_presentation(ChainComplex const &tangent, int truncation, int max_level,
                                              std::string name = "linear")
{
	require(tangent.rank(0) == 0, "tangent complex must vanish in degree 0");
	FramedPresentation p;
	p.name = std::move(name);
	p.tangent = tangent;
	p.truncation = truncation;
	p.max_level = max_level;
	p.d0.resize(max_level + 1);
	for (int n = 1; n <= max_level; ++n)
		p.d0[n] = linear_face_pullback(p, n, 0);
	return p;
}

/// Presentation of the product with the denormalization of a further complex; its labels follow the existing ones.
inline FramedPresentation product_with_linear(FramedPresentation const &p, ChainComplex const &e)
{
	require(e.rank(0) == 0, "added complex must vanish in degree 0");
	require(!p.super_flag, "products are only built for even presentations");
	int top = std::max(p.tangent.top_degree(), e.top_degree());
	std::vector<std::size_t> ranks(top + 1);
	for (int k = 0; k <= top; ++k)
		ranks[k] = p.rank(k) + e.rank(k);
	std::vector<Matrix> maps;
	for (int k = 1; k <= top; ++k)
	{
		Matrix m(ranks[k - 1], ranks[k]);
		Matrix a = p.tangent.d(k), b = e.d(k);
		for (std::size_t r = 0; r < a.rows(); ++r)
			for (std::size_t c = 0; c < a.cols(); ++c)
				m(r, c) = a(r, c);
		for (std::size_t r = 0; r < b.rows(); ++r)
			for (std::size_t c = 0; c < b.cols(); ++c)
				m(p.rank(k - 1) + r, p.rank(k) + c) = b(r, c);
		maps.push_back(m);
	}
	FramedPresentation q;
	q.name = p.name + "*K";
	q.tangent = ChainComplex(ranks, maps);
	q.truncation = p.truncation;
	q.max_level = p.max_level;
	q.d0.resize(p.max_level + 1);
	for (int n = 1; n <= p.max_level; ++n)
	{
		auto lin = linear_face_pullback(q, n, 0);
		for (auto const &[g, img] : lin)
		{
			int k = mask_size(g.a);
			if (g.b < p.rank(k))
				q.d0[n][g] = p.d0[n].at(g);
			else
				q.d0[n][g] = img;
		}
	}
	return q;
}

} // namespace sdiff
