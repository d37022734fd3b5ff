#pragma once

#include <map>
#include <string>
#include <vector>

#include "sdiff/error.hpp"
#include "sdiff/graded_poly.hpp"
#include "sdiff/linear_algebra.hpp"
#include "sdiff/presentation.hpp"

namespace sdiff::oracles {

/// Structure constants c[a][b][c] with [e_a, e_b] = sum_c c[a][b][c] e_c.
using StructureConstants = std::vector<std::vector<std::vector<Rational>>>;

inline StructureConstants zero_constants(std::size_t m)
{
	return StructureConstants(m, std::vector<std::vector<Rational>>(m, std::vector<Rational>(m)));
}

/// Formal group law on Q^dim: one polynomial per output coordinate in the variables x_i and y_i.
struct GroupLaw
{
	std::string name;
	std::size_t dim = 0;
	std::vector<Polynomial> components;
};

inline Generator law_x(std::size_t i) { return Generator::variable('x', (std::uint32_t)i); }
inline Generator law_y(std::size_t i) { return Generator::variable('y', (std::uint32_t)i); }
inline Generator law_z(std::size_t i) { return Generator::variable('z', (std::uint32_t)i); }

inline std::vector<Polynomial> variables(char ns, std::size_t dim, std::optional<int> t = std::nullopt)
{
	std::vector<Polynomial> v;
	for (std::size_t i = 0; i < dim; ++i)
		v.push_back(Polynomial::generator(Generator::variable(ns, (std::uint32_t)i), t));
	return v;
}

/// m(u, v) for polynomial vectors u and v.
inline std::vector<Polynomial> evaluate(GroupLaw const &m, std::vector<Polynomial> const &u, std::vector<Polynomial> const &v,
                                        std::optional<int> t)
{
	require(u.size() == m.dim && v.size() == m.dim, "group law argument dimension mismatch");
	std::map<Generator, Polynomial> a;
	for (std::size_t i = 0; i < m.dim; ++i)
	{
		a[law_x(i)] = u[i];
		a[law_y(i)] = v[i];
	}
	std::vector<Polynomial> out;
	for (auto const &c : m.components)
		out.push_back(c.substitute(a, t));
	return out;
}

/// Validates antisymmetry and the Jacobi identity.
inline void check_lie_constants(StructureConstants const &c)
{
	std::size_t m = c.size();
	for (std::size_t a = 0; a < m; ++a)
	{
		require(c[a].size() == m, "structure constants must be cubic");
		for (std::size_t b = 0; b < m; ++b)
		{
			require(c[a][b].size() == m, "structure constants must be cubic");
			for (std::size_t k = 0; k < m; ++k)
				require(c[a][b][k] == -c[b][a][k], "structure constants are not antisymmetric");
		}
	}
	for (std::size_t a = 0; a < m; ++a)
		for (std::size_t b = 0; b < m; ++b)
			for (std::size_t d = 0; d < m; ++d)
				for (std::size_t out = 0; out < m; ++out)
				{
					Rational s = 0;
					for (std::size_t e = 0; e < m; ++e)
						s += c[a][b][e] * c[e][d][out] + c[b][d][e] * c[e][a][out] + c[d][a][e] * c[e][b][out];
					if (sgn(s) != 0)
						throw InvalidArgument("structure constants violate the Jacobi identity");
				}
}

/// Baker-Campbell-Hausdorff law through order 2 (x + y + 1/2 [x, y]) or order 3 (adding 1/12 ([x,[x,y]] + [y,[y,x]])).
inline GroupLaw bch(StructureConstants const &c, int order = 2, std::string name = "bch")
{
	check_lie_constants(c);
	require(order >= 1 && order <= 3, "BCH order must be 1, 2 or 3");
	GroupLaw g;
	g.name = std::move(name);
	g.dim = c.size();
	auto x = variables('x', g.dim), y = variables('y', g.dim);
	auto bracket = [&](std::vector<Polynomial> const &u, std::vector<Polynomial> const &v) {
		std::vector<Polynomial> out(g.dim);
		for (std::size_t a = 0; a < g.dim; ++a)
			for (std::size_t b = 0; b < g.dim; ++b)
				for (std::size_t k = 0; k < g.dim; ++k)
					if (sgn(c[a][b][k]) != 0)
						out[k] += c[a][b][k] * u[a] * v[b];
		return out;
	};
	std::vector<Polynomial> sum(g.dim);
	for (std::size_t k = 0; k < g.dim; ++k)
		sum[k] = x[k] + y[k];
	if (order >= 2)
	{
		auto xy = bracket(x, y);
		for (std::size_t k = 0; k < g.dim; ++k)
			sum[k] += Rational(1, 2) * xy[k];
		if (order >= 3)
		{
			auto xxy = bracket(x, xy), yyx = bracket(y, bracket(y, x));
			for (std::size_t k = 0; k < g.dim; ++k)
				sum[k] += Rational(1, 12) * (xxy[k] + yyx[k]);
		}
	}
	g.components = sum;
	return g;
}

inline GroupLaw bch_order2(StructureConstants const &c, std::string name = "bch2") { return bch(c, 2, std::move(name)); }

/// m(m(x, y), z) - m(x, m(y, z)), componentwise, up to weight t.
inline std::vector<Polynomial> associativity_residue(GroupLaw const &m, int t)
{
	auto x = variables('x', m.dim, t), y = variables('y', m.dim, t), z = variables('z', m.dim, t);
	auto left = evaluate(m, evaluate(m, x, y, t), z, t);
	auto right = evaluate(m, x, evaluate(m, y, z, t), t);
	std::vector<Polynomial> r;
	for (std::size_t i = 0; i < m.dim; ++i)
		r.push_back(left[i] - right[i]);
	return r;
}

/// Polynomial inverse with m(x, i(x)) = 0 up to weight t, by fixed-point iteration.
inline std::vector<Polynomial> formal_inverse(GroupLaw const &m, int t)
{
	auto x = variables('x', m.dim, t);
	std::vector<Polynomial> zero(m.dim, Polynomial(t));
	auto left_unit = evaluate(m, x, zero, t);
	auto right_unit = evaluate(m, zero, x, t);
	for (std::size_t i = 0; i < m.dim; ++i)
		if (!(left_unit[i] == x[i]) || !(right_unit[i] == x[i]))
			throw InvalidArgument("group law violates the unit axiom in component " + std::to_string(i));
	// m(x, y) = x + y + N(x, y), so i = -x - N(x, i)
	std::vector<Polynomial> inv;
	for (auto const &xi : x)
		inv.push_back(-xi);
	for (int it = 0; it <= t; ++it)
	{
		auto full = evaluate(m, x, inv, t);
		std::vector<Polynomial> next;
		for (std::size_t i = 0; i < m.dim; ++i)
			next.push_back(inv[i] - full[i]);
		if (next == inv)
			break;
		inv = std::move(next);
	}
	auto check = evaluate(m, x, inv, t);
	for (auto const &c : check)
		if (!c.is_zero())
			throw InvalidArgument("formal inverse did not converge");
	return inv;
}

/// Framed presentation of the nerve, with level-n coordinates y_a = h_a - h_{a-1} and
/// x_{a} o d_0 = m(h_{a+1}, i(h_1)) - m(h_a, i(h_1)).
inline FramedPresentation nerve_from_group_law(GroupLaw const &m, int truncation, int max_level)
{
	require(truncation >= 1, "truncation must be positive");
	require(max_level >= 1, "max level must be positive");
	FramedPresentation p;
	p.name = m.name;
	p.tangent = ChainComplex({0, m.dim}, {Matrix(0, m.dim)});
	p.truncation = truncation;
	p.max_level = max_level;
	p.d0.resize(max_level + 1);
	auto inv = formal_inverse(m, truncation);
	for (int n = 1; n <= max_level; ++n)
	{
		// h[t][l] = sum_{s <= t} y_{s,l}
		std::vector<std::vector<Polynomial>> h(n + 1, std::vector<Polynomial>(m.dim, Polynomial(truncation)));
		for (int t = 1; t <= n; ++t)
			for (std::size_t l = 0; l < m.dim; ++l)
				h[t][l] = h[t - 1][l] + Polynomial::generator(p.coordinate(element_bit(t), (std::uint32_t)l), truncation);
		std::map<Generator, Polynomial> to_h1;
		for (std::size_t l = 0; l < m.dim; ++l)
			to_h1[law_x(l)] = h[1][l];
		std::vector<Polynomial> inv_h1;
		for (auto const &c : inv)
			inv_h1.push_back(c.substitute(to_h1, truncation));
		std::vector<std::vector<Polynomial>> shifted(n + 1);
		for (int t = 1; t <= n; ++t)
			shifted[t] = evaluate(m, h[t], inv_h1, truncation);
		for (int a = 1; a <= n - 1; ++a)
			for (std::size_t l = 0; l < m.dim; ++l)
				p.d0[n][p.coordinate(element_bit(a), (std::uint32_t)l)] = shifted[a + 1][l] - shifted[a][l];
	}
	return p;
}

/// Structure constants of a basis of matrices closed under the commutator.
inline StructureConstants commutator_constants(std::vector<Matrix> const &basis)
{
	std::size_t m = basis.size();
	require(m > 0, "empty matrix basis");
	std::size_t rows = basis[0].rows(), cols = basis[0].cols();
	std::vector<Vector> flat;
	for (auto const &b : basis)
	{
		require(b.rows() == rows && b.cols() == cols && rows == cols, "basis matrices must be square of one size");
		Vector v;
		for (std::size_t r = 0; r < rows; ++r)
			for (std::size_t c = 0; c < cols; ++c)
				v.push_back(b(r, c));
		flat.push_back(v);
	}
	Matrix span = Matrix::from_columns(rows * cols, flat);
	require(rank(span) == m, "basis matrices are linearly dependent");
	auto out = zero_constants(m);
	for (std::size_t a = 0; a < m; ++a)
		for (std::size_t b = 0; b < m; ++b)
		{
			Matrix comm = basis[a] * basis[b] - basis[b] * basis[a];
			Vector v;
			for (std::size_t r = 0; r < rows; ++r)
				for (std::size_t c = 0; c < cols; ++c)
					v.push_back(comm(r, c));
			auto coeffs = solve(span, v);
			if (!coeffs)
				throw InvalidArgument("commutator of basis elements " + std::to_string(a) + " and " + std::to_string(b) +
				                      " leaves the span");
			for (std::size_t k = 0; k < m; ++k)
				out[a][b][k] = (*coeffs)[k];
		}
	return out;
}

/// Basis E_12, E_23, E_13 of strictly upper-triangular 3x3 matrices.
inline std::vector<Matrix> heisenberg_matrices()
{
	std::vector<Matrix> b(3, Matrix(3, 3));
	b[0](0, 1) = 1;
	b[1](1, 2) = 1;
	b[2](0, 2) = 1;
	return b;
}

/// Basis of so(3) as antisymmetric 3x3 matrices L_x, L_y, L_z.
inline std::vector<Matrix> so3_matrices()
{
	std::vector<Matrix> b(3, Matrix(3, 3));
	b[0](1, 2) = -1;
	b[0](2, 1) = 1;
	b[1](0, 2) = 1;
	b[1](2, 0) = -1;
	b[2](0, 1) = -1;
	b[2](1, 0) = 1;
	return b;
}

inline GroupLaw abelian_law(std::size_t dim)
{
	return bch_order2(zero_constants(dim), "abelian" + std::to_string(dim));
}

} // namespace sdiff::oracles
