#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sdiff/cochains.hpp"
#include "sdiff/cohomology.hpp"
#include "sdiff/dold_kan.hpp"
#include "sdiff/error.hpp"
#include "sdiff/graded_poly.hpp"
#include "sdiff/lie.hpp"
#include "sdiff/linear_algebra.hpp"
#include "sdiff/parallel.hpp"

namespace sdiff {

using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

/// Level-capped cosimplicial algebra with finite bases, optionally super.
struct FiniteCosimplicialAlgebra
{
	std::string name;
	CosimplicialVectorSpace space;
	std::vector<std::vector<int>> parity;                          ///< parity[n][a]
	std::vector<std::vector<std::vector<SparseVector>>> product;   ///< product[n][a][b]
	std::vector<Vector> unit;

	int cap() const { return space.cap; }
	std::size_t dim(int n) const { return space.dims.at(n); }

	Vector multiply(int n, Vector const &f, Vector const &g) const
	{
		Vector out(dim(n));
		for (std::size_t a = 0; a < f.size(); ++a)
		{
			if (sgn(f[a]) == 0)
				continue;
			for (std::size_t b = 0; b < g.size(); ++b)
			{
				if (sgn(g[b]) == 0)
					continue;
				Rational s = f[a] * g[b];
				for (auto const &[k, c] : product[n][a][b])
					out[k] += s * c;
			}
		}
		return out;
	}

	Vector basis_vector(int n, std::size_t a) const
	{
		Vector v(dim(n));
		v[a] = 1;
		return v;
	}

	/// (d^{p+1})^q f times (d^0)^p g at level p + q.
	Vector cup(Vector const &f, int p, Vector const &g, int q) const
	{
		require(p + q <= cap(), "cup product beyond the level cap");
		return multiply(p + q, coface_power(space, p, p + 1, q, f), coface_power(space, q, 0, p, g));
	}

	/// Alternating coface sum from level n to n + 1.
	Vector delta(int n, Vector const &f) const
	{
		Vector out(dim(n + 1));
		for (int i = 0; i <= n + 1; ++i)
		{
			Vector t = coface(space, n + 1, i, f);
			for (std::size_t k = 0; k < t.size(); ++k)
				out[k] += (i & 1) ? -t[k] : t[k];
		}
		return out;
	}
};

namespace detail {

inline std::string vector_string(Vector const &v)
{
	std::string s = "[";
	for (std::size_t i = 0; i < v.size(); ++i)
		s += (i ? ", " : "") + to_string(v[i]);
	return s + "]";
}

inline int vector_parity(std::vector<int> const &parity, Vector const &v)
{
	int p = -1;
	for (std::size_t i = 0; i < v.size(); ++i)
		if (sgn(v[i]) != 0)
		{
			if (p >= 0 && p != parity[i])
				return -1;
			p = parity[i];
		}
	return p < 0 ? 0 : p;
}

} // namespace detail

/// Structural checks: shapes, cosimplicial identities, unit, associativity, parity, and that structure maps are algebra maps.
inline CheckReport validate_cosimplicial_algebra(FiniteCosimplicialAlgebra const &x)
{
	CheckReport rep;
	int cap = x.cap();
	bool shapes = (int)x.space.dims.size() == cap + 1 && (int)x.product.size() == cap + 1 && (int)x.unit.size() == cap + 1 &&
	              (int)x.parity.size() == cap + 1 && (int)x.space.cofaces.size() == cap + 1 &&
	              (int)x.space.codegeneracies.size() == cap + 1;
	for (int n = 0; shapes && n <= cap; ++n)
	{
		shapes = shapes && x.product[n].size() == x.dim(n) && x.unit[n].size() == x.dim(n) && x.parity[n].size() == x.dim(n);
		if (n >= 1)
		{
			shapes = shapes && (int)x.space.cofaces[n].size() == n + 1;
			for (auto const &d : x.space.cofaces[n])
				shapes = shapes && d.rows() == x.dim(n) && d.cols() == x.dim(n - 1);
		}
		if (n < cap)
		{
			shapes = shapes && (int)x.space.codegeneracies[n].size() == n + 1;
			for (auto const &s : x.space.codegeneracies[n])
				shapes = shapes && s.rows() == x.dim(n) && s.cols() == x.dim(n + 1);
		}
	}
	rep.add("structure shapes", shapes);
	if (!shapes)
		return rep;
	auto bad = cosimplicial_identity_violation(x.space);
	rep.add("cosimplicial identities", !bad, bad.value_or(""));

	std::string unit_detail, assoc_detail, parity_detail, morph_detail;
	for (int n = 0; n <= cap; ++n)
	{
		std::size_t d = x.dim(n);
		for (std::size_t a = 0; a < d && unit_detail.empty(); ++a)
		{
			Vector e = x.basis_vector(n, a);
			if (!(x.multiply(n, x.unit[n], e) == e) || !(x.multiply(n, e, x.unit[n]) == e))
				unit_detail = "unit fails on basis element " + std::to_string(a) + " at level " + std::to_string(n);
		}
		for (std::size_t a = 0; a < d && parity_detail.empty(); ++a)
			for (std::size_t b = 0; b < d; ++b)
				for (auto const &[k, c] : x.product[n][a][b])
					if (x.parity[n][k] != ((x.parity[n][a] + x.parity[n][b]) & 1) && parity_detail.empty())
						parity_detail = "product of basis elements " + std::to_string(a) + " and " + std::to_string(b) +
						                " at level " + std::to_string(n) + " breaks parity";
		auto times_basis = [&](SparseVector const &u, std::size_t c, bool left) {
			std::map<std::size_t, Rational> out;
			for (auto const &[k, v] : u)
				for (auto const &[m, w] : left ? x.product[n][c][k] : x.product[n][k][c])
					out[m] += v * w;
			for (auto it = out.begin(); it != out.end();)
				it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
			return out;
		};
		for (std::size_t a = 0; a < d && assoc_detail.empty(); ++a)
			for (std::size_t b = 0; b < d && assoc_detail.empty(); ++b)
				for (std::size_t c = 0; c < d && assoc_detail.empty(); ++c)
					if (times_basis(x.product[n][a][b], c, false) != times_basis(x.product[n][b][c], a, true))
						assoc_detail = "associativity fails on basis (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
						               std::to_string(c) + ") at level " + std::to_string(n);
		auto check_map = [&](Matrix const &m, int from, int to, std::string const &label) {
			if (!morph_detail.empty())
				return;
			if (!(m * x.unit[from] == x.unit[to]))
			{
				morph_detail = label + " does not preserve the unit";
				return;
			}
			for (std::size_t a = 0; a < x.dim(from) && morph_detail.empty(); ++a)
			{
				Vector ea = m * x.basis_vector(from, a);
				if (detail::vector_parity(x.parity[to], ea) != x.parity[from][a] && !is_zero(ea))
					morph_detail = label + " breaks parity on basis element " + std::to_string(a);
				for (std::size_t b = 0; b < x.dim(from) && morph_detail.empty(); ++b)
				{
					Vector lhs = m * x.multiply(from, x.basis_vector(from, a), x.basis_vector(from, b));
					Vector rhs = x.multiply(to, ea, m * x.basis_vector(from, b));
					if (!(lhs == rhs))
						morph_detail = label + " is not multiplicative on basis (" + std::to_string(a) + ", " + std::to_string(b) + ")";
				}
			}
		};
		if (n >= 1)
			for (int i = 0; i <= n; ++i)
				check_map(x.space.cofaces[n][i], n - 1, n, "coface d" + std::to_string(i) + " into level " + std::to_string(n));
		if (n < cap)
			for (int j = 0; j <= n; ++j)
				check_map(x.space.codegeneracies[n][j], n + 1, n, "codegeneracy s" + std::to_string(j) + " onto level " + std::to_string(n));
	}
	rep.add("unit", unit_detail.empty(), unit_detail);
	rep.add("parity of products", parity_detail.empty(), parity_detail);
	rep.add("associativity", assoc_detail.empty(), assoc_detail);
	rep.add("structure maps are algebra maps", morph_detail.empty(), morph_detail);
	return rep;
}

inline void require_valid(FiniteCosimplicialAlgebra const &x)
{
	auto rep = validate_cosimplicial_algebra(x);
	if (auto f = rep.first_failure())
		throw IdentityViolation("cosimplicial algebra '" + x.name + "': " + f->name + (f->detail.empty() ? "" : ": " + f->detail));
}

// ---------------------------------------------------------------------------
// Normalization

/// Normalized part N^n = common kernel of the codegeneracies, with parity-homogeneous bases.
struct NormalizedAlgebra
{
	std::vector<Matrix> basis;               ///< columns in ambient coordinates
	std::vector<std::vector<int>> parity;    ///< parity of each basis column
	std::vector<Matrix> differential;        ///< N^n -> N^{n+1}, n < cap
	std::vector<std::size_t> ranks() const
	{
		std::vector<std::size_t> r;
		for (auto const &b : basis)
			r.push_back(b.cols());
		return r;
	}
};

inline NormalizedAlgebra normalize_algebra(FiniteCosimplicialAlgebra const &x)
{
	require_valid(x);
	NormalizedAlgebra out;
	for (int n = 0; n <= x.cap(); ++n)
	{
		std::size_t d = x.dim(n);
		std::vector<Vector> cols;
		std::vector<int> par;
		for (int p = 0; p <= 1; ++p)
		{
			std::vector<std::size_t> idx;
			for (std::size_t a = 0; a < d; ++a)
				if (x.parity[n][a] == p)
					idx.push_back(a);
			if (idx.empty())
				continue;
			std::size_t rows = n >= 1 ? x.dim(n - 1) * n : 0;
			Matrix stacked(rows, idx.size());
			for (int j = 0; j < n; ++j)
			{
				auto const &s = x.space.codegeneracies[n - 1][j];
				for (std::size_t r = 0; r < s.rows(); ++r)
					for (std::size_t c = 0; c < idx.size(); ++c)
						stacked(j * x.dim(n - 1) + r, c) = s(r, idx[c]);
			}
			Matrix ker = nullspace(stacked);
			for (std::size_t c = 0; c < ker.cols(); ++c)
			{
				Vector v(d);
				for (std::size_t r = 0; r < idx.size(); ++r)
					v[idx[r]] = ker(r, c);
				cols.push_back(v);
				par.push_back(p);
			}
		}
		out.basis.push_back(Matrix::from_columns(d, cols));
		out.parity.push_back(par);
	}
	for (int n = 0; n < x.cap(); ++n)
	{
		Matrix images(x.dim(n + 1), out.basis[n].cols());
		for (std::size_t c = 0; c < out.basis[n].cols(); ++c)
		{
			Vector v = x.delta(n, out.basis[n].column(c));
			for (std::size_t r = 0; r < v.size(); ++r)
				images(r, c) = v[r];
		}
		out.differential.push_back(solve_columns(out.basis[n + 1], images, "differential of a normalized element"));
	}
	return out;
}

/// Coordinates of an ambient level-n vector in the normalized basis; raises if it is not normalized.
inline Vector normalized_coordinates(NormalizedAlgebra const &nz, int n, Vector const &v)
{
	auto c = solve(nz.basis[n], v);
	if (!c)
		throw IdentityViolation("element " + detail::vector_string(v) + " at level " + std::to_string(n) + " is not normalized");
	return *c;
}

/// Cup product of normalized elements given in normalized coordinates.
inline Vector normalized_cup(FiniteCosimplicialAlgebra const &x, NormalizedAlgebra const &nz, int p, Vector const &u, int q,
                             Vector const &v)
{
	return normalized_coordinates(nz, p + q, x.cup(nz.basis[p] * u, p, nz.basis[q] * v, q));
}

/// Isomorphism from the denormalization of the normalized cochain complex onto x, per level, in the Dold-Kan basis.
/// Built from the splitting x^n = N^n + sum_{i >= 1} im d^i and verified against every coface and codegeneracy.
inline std::vector<Matrix> dold_kan_comparison(FiniteCosimplicialAlgebra const &x, NormalizedAlgebra const &nz)
{
	auto ranks = nz.ranks();
	CosimplicialVectorSpace k = dual_denormalize(CochainComplex(ranks, nz.differential), x.cap());
	std::vector<Matrix> phi;
	phi.push_back(nz.basis[0]);
	for (int n = 1; n <= x.cap(); ++n)
	{
		DKBasis kb(ranks, n);
		std::size_t dk = kb.size();
		Matrix top(dk, ranks[n]);
		for (std::size_t b = 0; b < ranks[n]; ++b)
			top(kb.position(full_mask(n), b), b) = 1;
		Matrix a = top;
		for (int i = 1; i <= n; ++i)
			a = hstack(a, k.cofaces[n][i]);
		Matrix w = solve_columns(a, Matrix::identity(dk), "Dold-Kan basis vector");
		Matrix out = nz.basis[n] * [&] {
			Matrix wt(ranks[n], dk);
			for (std::size_t r = 0; r < ranks[n]; ++r)
				for (std::size_t c = 0; c < dk; ++c)
					wt(r, c) = w(r, c);
			return wt;
		}();
		std::size_t row = ranks[n];
		std::size_t prev = k.dims[n - 1];
		for (int i = 1; i <= n; ++i)
		{
			Matrix wi(prev, dk);
			for (std::size_t r = 0; r < prev; ++r)
				for (std::size_t c = 0; c < dk; ++c)
					wi(r, c) = w(row + r, c);
			row += prev;
			out = out + x.space.cofaces[n][i] * phi[n - 1] * wi;
		}
		phi.push_back(out);
	}
	for (int n = 1; n <= x.cap(); ++n)
		for (int i = 0; i <= n; ++i)
			if (!(phi[n] * k.cofaces[n][i] == x.space.cofaces[n][i] * phi[n - 1]))
				throw IdentityViolation("Dold-Kan comparison does not intertwine coface d" + std::to_string(i) + " into level " +
				                        std::to_string(n));
	for (int n = 0; n < x.cap(); ++n)
		for (int j = 0; j <= n; ++j)
			if (!(phi[n] * k.codegeneracies[n][j] == x.space.codegeneracies[n][j] * phi[n + 1]))
				throw IdentityViolation("Dold-Kan comparison does not intertwine codegeneracy s" + std::to_string(j) +
				                        " onto level " + std::to_string(n));
	for (int n = 0; n <= x.cap(); ++n)
		if (rank(phi[n]) != x.dim(n))
			throw IdentityViolation("Dold-Kan comparison is not invertible at level " + std::to_string(n));
	return phi;
}

// ---------------------------------------------------------------------------
// Infinitesimality and abstract differentiation

/// An element of the kernel of the normalized shuffle map: sum of coefficient * left (x) right, in ambient coordinates.
struct OverlapTensor
{
	int level = 0;
	std::vector<std::tuple<Rational, Vector, Vector>> terms;
	std::string label;
};

/// Overlapping tensors and transposition sums at level n, transported along the comparison isomorphism.
inline std::vector<OverlapTensor> overlapping_tensors(NormalizedAlgebra const &nz, std::vector<Matrix> const &phi, int n)
{
	auto ranks = nz.ranks();
	DKBasis kb(ranks, n);
	std::vector<OverlapTensor> out;
	auto describe = [&](DKBasisElement const &e) { return mask_to_string(e.alpha) + "#" + std::to_string(e.index); };
	for (auto const &[a, b] : overlapping_basis(ranks, n))
	{
		OverlapTensor t;
		t.level = n;
		t.terms.push_back({Rational(1), phi[n].column(kb.position(a.alpha, a.index)), phi[n].column(kb.position(b.alpha, b.index))});
		t.label = describe(a) + " (x) " + describe(b);
		out.push_back(t);
	}
	for (auto const &rel : transposition_relations(ranks, n))
	{
		OverlapTensor t;
		t.level = n;
		for (auto const &[key, c] : rel.coeffs)
		{
			t.terms.push_back({c, phi[n].column(key.first), phi[n].column(key.second)});
			t.label += (t.label.empty() ? "" : " + ") + describe(kb[key.first]) + " (x) " + describe(kb[key.second]);
		}
		out.push_back(t);
	}
	return out;
}

inline Vector tensor_product_image(FiniteCosimplicialAlgebra const &x, OverlapTensor const &t)
{
	Vector out(x.dim(t.level));
	for (auto const &[c, l, r] : t.terms)
	{
		Vector p = x.multiply(t.level, l, r);
		for (std::size_t k = 0; k < p.size(); ++k)
			out[k] += c * p[k];
	}
	return out;
}

struct InfinitesimalReport
{
	bool infinitesimal = true;
	int level = -1;
	std::string witness;  ///< overlapping tensor in the Dold-Kan basis
	Vector left, right;   ///< first term of the witness, in ambient coordinates
	Vector product;       ///< its nonzero image under the product
};

inline InfinitesimalReport is_infinitesimal(FiniteCosimplicialAlgebra const &x)
{
	auto nz = normalize_algebra(x);
	auto phi = dold_kan_comparison(x, nz);
	InfinitesimalReport rep;
	for (int n = 1; n <= x.cap(); ++n)
		for (auto const &t : overlapping_tensors(nz, phi, n))
		{
			Vector p = tensor_product_image(x, t);
			if (!is_zero(p))
			{
				rep.infinitesimal = false;
				rep.level = n;
				rep.witness = t.label;
				rep.left = std::get<1>(t.terms[0]);
				rep.right = std::get<2>(t.terms[0]);
				rep.product = p;
				return rep;
			}
		}
	return rep;
}

/// Finite graded algebra with a differential: the output format of abstract differentiation and the input of K(-).
struct DGAlgebraPresentation
{
	std::string name;
	std::vector<std::size_t> dims;                              ///< degrees 0..top
	std::vector<std::vector<int>> parity;                       ///< super parity of basis elements
	std::vector<Matrix> differential;                           ///< differential[k] : degree k -> k + 1, k < top
	std::vector<std::vector<std::vector<std::vector<Vector>>>> product; ///< product[p][q][a][b] for p + q <= top
	Vector unit;
	bool commutative = false;
	std::vector<std::vector<std::string>> labels;               ///< optional basis names

	int top() const { return (int)dims.size() - 1; }

	Vector basis_vector(int k, std::size_t a) const
	{
		Vector v(dims.at(k));
		v[a] = 1;
		return v;
	}

	Vector multiply(int p, Vector const &f, int q, Vector const &g) const
	{
		require(p + q <= top(), "product degree beyond the top degree");
		Vector out(dims[p + q]);
		for (std::size_t a = 0; a < f.size(); ++a)
			if (sgn(f[a]) != 0)
				for (std::size_t b = 0; b < g.size(); ++b)
					if (sgn(g[b]) != 0)
					{
						auto const &v = product[p][q][a][b];
						for (std::size_t k = 0; k < v.size(); ++k)
							out[k] += f[a] * g[b] * v[k];
					}
		return out;
	}

	Vector d(int k, Vector const &f) const
	{
		if (k >= top())
			return Vector();
		return differential[k] * f;
	}
};

inline CheckReport validate_dga(DGAlgebraPresentation const &y)
{
	CheckReport rep;
	int top = y.top();
	bool shapes = top >= 0 && y.dims[0] >= 1 && (int)y.differential.size() == top && y.unit.size() == y.dims[0] &&
	              (int)y.parity.size() == top + 1 && (int)y.product.size() == top + 1;
	for (int k = 0; shapes && k < top; ++k)
		shapes = y.differential[k].rows() == y.dims[k + 1] && y.differential[k].cols() == y.dims[k];
	for (int p = 0; shapes && p <= top; ++p)
	{
		shapes = y.parity[p].size() == y.dims[p] && (int)y.product[p].size() == top - p + 1;
		for (int q = 0; shapes && p + q <= top; ++q)
		{
			shapes = y.product[p][q].size() == y.dims[p];
			for (auto const &row : y.product[p][q])
			{
				shapes = shapes && row.size() == y.dims[q];
				for (auto const &v : row)
					shapes = shapes && v.size() == y.dims[p + q];
			}
		}
	}
	rep.add("dga shapes", shapes);
	if (!shapes)
		return rep;
	std::string dd;
	for (int k = 0; k + 1 < top && dd.empty(); ++k)
		if (!(y.differential[k + 1] * y.differential[k]).is_zero())
			dd = "in degree " + std::to_string(k);
	rep.add("d^2 = 0", dd.empty(), dd);
	std::string unit, leib, assoc, comm;
	for (int p = 0; p <= top; ++p)
		for (std::size_t a = 0; a < y.dims[p]; ++a)
		{
			Vector ea = y.basis_vector(p, a);
			if (unit.empty() && (!(y.multiply(0, y.unit, p, ea) == ea) || !(y.multiply(p, ea, 0, y.unit) == ea)))
				unit = "on basis element " + std::to_string(a) + " of degree " + std::to_string(p);
			for (int q = 0; p + q <= top; ++q)
				for (std::size_t b = 0; b < y.dims[q]; ++b)
				{
					Vector eb = y.basis_vector(q, b);
					Vector ab = y.multiply(p, ea, q, eb);
					if (p + q < top && leib.empty())
					{
						Vector lhs = y.d(p + q, ab);
						Vector rhs = p < top ? y.multiply(p + 1, y.d(p, ea), q, eb) : Vector(y.dims[p + q + 1]);
						Vector second = q < top ? y.multiply(p, ea, q + 1, y.d(q, eb)) : Vector(y.dims[p + q + 1]);
						for (std::size_t k = 0; k < rhs.size(); ++k)
							rhs[k] += (p & 1) ? -second[k] : second[k];
						if (!(lhs == rhs))
							leib = "on basis pair (" + std::to_string(p) + ":" + std::to_string(a) + ", " + std::to_string(q) + ":" +
							       std::to_string(b) + ")";
					}
					if (y.commutative && comm.empty())
					{
						Vector ba = y.multiply(q, eb, p, ea);
						int s = ((p * q) + y.parity[p][a] * y.parity[q][b]) & 1;
						for (auto &v : ba)
							v = s ? -v : v;
						if (!(ab == ba))
							comm = "on basis pair (" + std::to_string(p) + ":" + std::to_string(a) + ", " + std::to_string(q) + ":" +
							       std::to_string(b) + ")";
					}
					for (int r = 0; p + q + r <= top && assoc.empty(); ++r)
						for (std::size_t c = 0; c < y.dims[r] && assoc.empty(); ++c)
						{
							Vector ec = y.basis_vector(r, c);
							if (!(y.multiply(p + q, ab, r, ec) == y.multiply(p, ea, q + r, y.multiply(q, eb, r, ec))))
								assoc = "on basis triple of degrees (" + std::to_string(p) + ", " + std::to_string(q) + ", " +
								        std::to_string(r) + ")";
						}
				}
		}
	rep.add("unit", unit.empty(), unit);
	rep.add("Leibniz rule", leib.empty(), leib);
	rep.add("associativity", assoc.empty(), assoc);
	if (y.commutative)
		rep.add("graded commutativity", comm.empty(), comm);
	return rep;
}

inline void require_valid(DGAlgebraPresentation const &y)
{
	auto rep = validate_dga(y);
	if (auto f = rep.first_failure())
		throw IdentityViolation("dga '" + y.name + "': " + f->name + (f->detail.empty() ? "" : ": " + f->detail));
}

/// True if every level is (super)commutative on basis pairs.
inline bool levelwise_commutative(FiniteCosimplicialAlgebra const &x)
{
	for (int n = 0; n <= x.cap(); ++n)
		for (std::size_t a = 0; a < x.dim(n); ++a)
			for (std::size_t b = 0; b < x.dim(n); ++b)
			{
				Vector ab = x.multiply(n, x.basis_vector(n, a), x.basis_vector(n, b));
				Vector ba = x.multiply(n, x.basis_vector(n, b), x.basis_vector(n, a));
				if (x.parity[n][a] & x.parity[n][b])
					for (auto &v : ba)
						v = -v;
				if (!(ab == ba))
					return false;
			}
	return true;
}

/// N'(X) = X_N / J^: the quotient of the normalization by the differential ideal generated by products of overlapping tensors.
struct AbstractDifferentiation
{
	DGAlgebraPresentation algebra;
	std::vector<std::size_t> normalized_dims;
	std::vector<std::size_t> ideal_dims;
	std::vector<std::size_t> product_span_dims;  ///< dimension of the products of overlapping tensors alone
	std::vector<Matrix> quotient_basis;          ///< ambient coordinates of the chosen quotient representatives
};

inline AbstractDifferentiation abstract_diff(FiniteCosimplicialAlgebra const &x)
{
	auto nz = normalize_algebra(x);
	auto phi = dold_kan_comparison(x, nz);
	int cap = x.cap();
	auto ranks = nz.ranks();
	std::vector<Matrix> ideal(cap + 1);
	AbstractDifferentiation out;
	auto span_add = [](Matrix const &span, std::vector<Vector> const &vs, std::size_t dim) {
		Matrix m = hstack(span.cols() ? span : Matrix(dim, 0), Matrix::from_columns(dim, vs));
		return column_space(m);
	};
	for (int n = 0; n <= cap; ++n)
	{
		std::size_t dn = ranks[n];
		std::vector<Vector> gens;
		if (n >= 1)
			for (auto const &t : overlapping_tensors(nz, phi, n))
			{
				Vector p = tensor_product_image(x, t);
				if (!is_zero(p))
					gens.push_back(normalized_coordinates(nz, n, p));
			}
		Matrix span = column_space(Matrix::from_columns(dn, gens));
		out.product_span_dims.push_back(span.cols());
		std::vector<Vector> more;
		if (n >= 1)
			for (std::size_t c = 0; c < ideal[n - 1].cols(); ++c)
				more.push_back(nz.differential[n - 1] * ideal[n - 1].column(c));
		for (int a = 1; a <= n; ++a)
			for (std::size_t c = 0; c < ideal[n - a].cols(); ++c)
				for (std::size_t b = 0; b < ranks[a]; ++b)
				{
					Vector eb(ranks[a]);
					eb[b] = 1;
					more.push_back(normalized_cup(x, nz, a, eb, n - a, ideal[n - a].column(c)));
					more.push_back(normalized_cup(x, nz, n - a, ideal[n - a].column(c), a, eb));
				}
		span = span_add(span, more, dn);
		// closure under multiplication by level 0
		for (;;)
		{
			std::vector<Vector> mult;
			for (std::size_t c = 0; c < span.cols(); ++c)
				for (std::size_t b = 0; b < ranks[0]; ++b)
				{
					Vector eb(ranks[0]);
					eb[b] = 1;
					mult.push_back(normalized_cup(x, nz, 0, eb, n, span.column(c)));
					mult.push_back(normalized_cup(x, nz, n, span.column(c), 0, eb));
				}
			Matrix next = span_add(span, mult, dn);
			if (next.cols() == span.cols())
				break;
			span = next;
		}
		ideal[n] = span.cols() ? span : Matrix(dn, 0);
		out.ideal_dims.push_back(ideal[n].cols());
		out.normalized_dims.push_back(dn);
	}

	// quotient representatives and projection
	std::vector<std::vector<std::size_t>> comp(cap + 1);
	std::vector<Matrix> change(cap + 1);
	for (int n = 0; n <= cap; ++n)
	{
		comp[n] = complement_coordinates(ideal[n], ranks[n]);
		Matrix e(ranks[n], comp[n].size());
		for (std::size_t i = 0; i < comp[n].size(); ++i)
			e(comp[n][i], i) = 1;
		change[n] = hstack(ideal[n], e);
		out.quotient_basis.push_back(nz.basis[n] * e);
	}
	auto project = [&](int n, Vector const &v) {
		Matrix col = Matrix::from_columns(ranks[n], {v});
		Matrix sol = solve_columns(change[n], col, "normalized element");
		Vector q(comp[n].size());
		for (std::size_t i = 0; i < q.size(); ++i)
			q[i] = sol(ideal[n].cols() + i, 0);
		return q;
	};
	auto rep = [&](int n, std::size_t i) {
		Vector v(ranks[n]);
		v[comp[n][i]] = 1;
		return v;
	};
	DGAlgebraPresentation &y = out.algebra;
	y.name = "N'(" + x.name + ")";
	for (int n = 0; n <= cap; ++n)
	{
		y.dims.push_back(comp[n].size());
		std::vector<int> par;
		for (auto c : comp[n])
			par.push_back(nz.parity[n][c]);
		y.parity.push_back(par);
	}
	for (int n = 0; n < cap; ++n)
	{
		Matrix d(y.dims[n + 1], y.dims[n]);
		for (std::size_t i = 0; i < y.dims[n]; ++i)
		{
			Vector img = project(n + 1, nz.differential[n] * rep(n, i));
			for (std::size_t r = 0; r < img.size(); ++r)
				d(r, i) = img[r];
		}
		y.differential.push_back(d);
	}
	y.product.resize(cap + 1);
	for (int p = 0; p <= cap; ++p)
	{
		y.product[p].resize(cap - p + 1);
		for (int q = 0; p + q <= cap; ++q)
		{
			y.product[p][q].assign(y.dims[p], std::vector<Vector>(y.dims[q]));
			for (std::size_t a = 0; a < y.dims[p]; ++a)
				for (std::size_t b = 0; b < y.dims[q]; ++b)
					y.product[p][q][a][b] = project(p + q, normalized_cup(x, nz, p, rep(p, a), q, rep(q, b)));
		}
	}
	y.unit = project(0, normalized_coordinates(nz, 0, x.unit[0]));
	y.commutative = levelwise_commutative(x);
	return out;
}

// ---------------------------------------------------------------------------
// Models

/// Cosimplicial algebra of the pair groupoid of the odd line: level n is the exterior algebra on e_0..e_n.
inline FiniteCosimplicialAlgebra odd_line_model(int cap)
{
	require(cap >= 1 && cap <= 8, "odd line level cap must lie in 1..8");
	FiniteCosimplicialAlgebra x;
	x.name = "odd-line";
	x.space.cap = cap;
	x.space.cofaces.resize(cap + 1);
	x.space.codegeneracies.resize(cap + 1);
	// basis at level n: subsets of {0..n} as bitmasks
	auto wedge = [](std::uint32_t s, std::uint32_t t) -> int {
		if (s & t)
			return 0;
		int inv = 0;
		for (std::uint32_t a = s; a; a &= a - 1)
		{
			int i = std::countr_zero(a);
			inv += std::popcount(t & ((1u << i) - 1));
		}
		return (inv & 1) ? -1 : 1;
	};
	for (int n = 0; n <= cap; ++n)
	{
		std::size_t d = std::size_t(1) << (n + 1);
		x.space.dims.push_back(d);
		std::vector<int> par(d);
		for (std::size_t s = 0; s < d; ++s)
			par[s] = std::popcount((std::uint32_t)s) & 1;
		x.parity.push_back(par);
		std::vector<std::vector<SparseVector>> prod(d, std::vector<SparseVector>(d));
		for (std::uint32_t s = 0; s < d; ++s)
			for (std::uint32_t t = 0; t < d; ++t)
				if (int sg = wedge(s, t))
					prod[s][t].push_back({s | t, Rational(sg)});
		x.product.push_back(prod);
		Vector u(d);
		u[0] = 1;
		x.unit.push_back(u);
	}
	auto induced = [&](int from, int to, auto const &image) {
		// algebra map sending e_k to e_{image(k)} or to zero when two generators collide
		Matrix m(x.space.dims[to], x.space.dims[from]);
		for (std::uint32_t s = 0; s < x.space.dims[from]; ++s)
		{
			std::uint32_t t = 0;
			bool ok = true;
			for (int k = 0; k <= from; ++k)
				if (s & (1u << k))
				{
					int j = image(k);
					if (t & (1u << j))
						ok = false;
					t |= 1u << j;
				}
			if (ok)
				m(t, s) = 1; // order preserving, so no reordering sign
		}
		return m;
	};
	for (int n = 1; n <= cap; ++n)
		for (int i = 0; i <= n; ++i)
			x.space.cofaces[n].push_back(induced(n - 1, n, [i](int k) { return k < i ? k : k + 1; }));
	for (int n = 0; n < cap; ++n)
		for (int j = 0; j <= n; ++j)
			x.space.codegeneracies[n].push_back(induced(n + 1, n, [j](int k) { return k <= j ? k : k - 1; }));
	return x;
}

/// e_i at level n of the odd line model.
inline Vector odd_line_epsilon(FiniteCosimplicialAlgebra const &x, int n, int i) { return x.basis_vector(n, std::size_t(1) << i); }

/// (e_1 - e_0)(e_2 - e_1)...(e_n - e_{n-1}); the unit at level 0.
inline Vector odd_line_delta(FiniteCosimplicialAlgebra const &x, int n)
{
	Vector v = x.unit[n];
	for (int k = 1; k <= n; ++k)
	{
		Vector step = odd_line_epsilon(x, n, k);
		Vector prev = odd_line_epsilon(x, n, k - 1);
		for (std::size_t i = 0; i < step.size(); ++i)
			step[i] -= prev[i];
		v = x.multiply(n, v, step);
	}
	return v;
}

inline Vector odd_line_pi(FiniteCosimplicialAlgebra const &x, int n) { return x.multiply(n, odd_line_epsilon(x, n, 0), odd_line_delta(x, n)); }

/// Identities of the odd line model up to its cap.
inline CheckReport odd_line_checks(FiniteCosimplicialAlgebra const &x)
{
	CheckReport rep;
	auto nz = normalize_algebra(x);
	std::string dims, eps, dpi, dd, pp, span;
	for (int n = 0; n <= x.cap(); ++n)
	{
		if (nz.basis[n].cols() != 2 && dims.empty())
			dims = "normalized part at level " + std::to_string(n) + " has dimension " + std::to_string(nz.basis[n].cols());
		Vector delta = odd_line_delta(x, n), pi = odd_line_pi(x, n);
		if (rank(hstack(nz.basis[n], Matrix::from_columns(x.dim(n), {delta, pi}))) != nz.basis[n].cols() ||
		    rank(Matrix::from_columns(x.dim(n), {delta, pi})) != 2)
			if (span.empty())
				span = "pi and Delta do not span the normalized part at level " + std::to_string(n);
		for (int i = 0; i <= n; ++i)
			if (!(x.multiply(n, odd_line_epsilon(x, n, i), delta) == pi) && eps.empty())
				eps = "e" + std::to_string(i) + " Delta != pi at level " + std::to_string(n);
		if (n >= 1 && !(x.delta(n - 1, odd_line_pi(x, n - 1)) == delta) && dpi.empty())
			dpi = "at level " + std::to_string(n);
	}
	for (int p = 0; p <= x.cap(); ++p)
		for (int q = 0; p + q <= x.cap(); ++q)
		{
			if (!(x.cup(odd_line_delta(x, p), p, odd_line_delta(x, q), q) == odd_line_delta(x, p + q)) && dd.empty())
				dd = "p=" + std::to_string(p) + " q=" + std::to_string(q);
			if (!is_zero(x.cup(odd_line_pi(x, p), p, odd_line_pi(x, q), q)) && pp.empty())
				pp = "p=" + std::to_string(p) + " q=" + std::to_string(q);
		}
	rep.add("normalized part is two-dimensional", dims.empty(), dims);
	rep.add("pi and Delta span the normalized part", span.empty(), span);
	rep.add("e_i Delta_n = pi_n", eps.empty(), eps);
	rep.add("d pi_{n-1} = Delta_n", dpi.empty(), dpi);
	rep.add("Delta_p cup Delta_q = Delta_{p+q}", dd.empty(), dd);
	rep.add("pi_p cup pi_q = 0", pp.empty(), pp);
	return rep;
}

/// Denormalization K(Y) with (f e_a)(g e_b) = shuffle sign(a, b) (fg) e_{a u b}.
inline FiniteCosimplicialAlgebra denormalize_dga(DGAlgebraPresentation const &y, int cap)
{
	require_valid(y);
	CochainComplex cc(y.dims, y.differential);
	FiniteCosimplicialAlgebra x;
	x.name = "K(" + y.name + ")";
	x.space = dual_denormalize(cc, cap);
	for (int n = 0; n <= cap; ++n)
	{
		DKBasis kb(y.dims, n);
		std::vector<int> par;
		for (auto const &e : kb.elements())
			par.push_back(y.parity[e.degree()][e.index]);
		x.parity.push_back(par);
		std::vector<std::vector<SparseVector>> prod(kb.size(), std::vector<SparseVector>(kb.size()));
		for (std::size_t a = 0; a < kb.size(); ++a)
			for (std::size_t b = 0; b < kb.size(); ++b)
			{
				auto const &ea = kb[a];
				auto const &eb = kb[b];
				int s = shuffle_sign(ea.alpha, eb.alpha);
				int p = ea.degree(), q = eb.degree();
				if (s == 0 || p + q > y.top())
					continue;
				auto const &v = y.product[p][q][ea.index][eb.index];
				for (std::size_t k = 0; k < v.size(); ++k)
					if (sgn(v[k]) != 0)
						prod[a][b].push_back({kb.position(ea.alpha | eb.alpha, k), s * v[k]});
			}
		x.product.push_back(prod);
		Vector u(kb.size());
		for (std::size_t k = 0; k < y.dims[0]; ++k)
			u[kb.position(0, k)] = y.unit[k];
		x.unit.push_back(u);
	}
	return x;
}

/// Builds K(Y), checks infinitesimality, applies N' and compares with Y through the top-simplex components.
inline CheckReport counit_check(DGAlgebraPresentation const &y)
{
	CheckReport rep;
	int cap = y.top();
	auto x = denormalize_dga(y, cap);
	auto valid = validate_cosimplicial_algebra(x);
	rep.add("K(Y) is a cosimplicial algebra", valid.passed(), valid.first_failure() ? valid.first_failure()->detail : "");
	if (!valid.passed())
		return rep;
	auto inf = is_infinitesimal(x);
	rep.add("K(Y) is infinitesimal", inf.infinitesimal, inf.witness);
	auto ad = abstract_diff(x);
	bool zero_ideal = true;
	for (auto d : ad.ideal_dims)
		zero_ideal = zero_ideal && d == 0;
	rep.add("differentiating ideal of K(Y) vanishes", zero_ideal);
	// counit: top component of a normalized element
	std::vector<Matrix> counit;
	bool bijective = true;
	for (int n = 0; n <= cap; ++n)
	{
		DKBasis kb(y.dims, n);
		Matrix const &q = ad.quotient_basis[n];
		Matrix m(y.dims[n], q.cols());
		for (std::size_t c = 0; c < q.cols(); ++c)
			for (std::size_t b = 0; b < y.dims[n]; ++b)
				m(b, c) = q(kb.position(full_mask(n), b), c);
		bijective = bijective && m.rows() == m.cols() && rank(m) == m.rows();
		counit.push_back(m);
	}
	rep.add("counit is bijective", bijective);
	if (!bijective)
		return rep;
	auto const &np = ad.algebra;
	bool d_ok = true, prod_ok = true, unit_ok = counit[0] * np.unit == y.unit;
	for (int n = 0; n < cap; ++n)
		d_ok = d_ok && counit[n + 1] * np.differential[n] == y.differential[n] * counit[n];
	for (int p = 0; p <= cap; ++p)
		for (int q = 0; p + q <= cap; ++q)
			for (std::size_t a = 0; a < np.dims[p]; ++a)
				for (std::size_t b = 0; b < np.dims[q]; ++b)
				{
					Vector lhs = counit[p + q] * np.product[p][q][a][b];
					Vector rhs = y.multiply(p, counit[p].column(a), q, counit[q].column(b));
					prod_ok = prod_ok && lhs == rhs;
				}
	rep.add("counit commutes with d", d_ok);
	rep.add("counit is multiplicative", prod_ok);
	rep.add("counit preserves the unit", unit_ok);
	return rep;
}

/// K(f) for a dga map f given per degree.
inline std::vector<Matrix> denormalize_map(DGAlgebraPresentation const &source, DGAlgebraPresentation const &target,
                                           std::vector<Matrix> const &f, int cap)
{
	std::vector<Matrix> out;
	for (int n = 0; n <= cap; ++n)
	{
		DKBasis sb(source.dims, n), tb(target.dims, n);
		Matrix m(tb.size(), sb.size());
		for (std::size_t c = 0; c < sb.size(); ++c)
		{
			auto const &e = sb[c];
			for (std::size_t r = 0; r < target.dims[e.degree()]; ++r)
				if (sgn(f[e.degree()](r, e.index)) != 0)
					m(tb.position(e.alpha, r), c) = f[e.degree()](r, e.index);
		}
		out.push_back(m);
	}
	return out;
}

/// For phi : X -> K(Y), the map induced on N'(X) followed by the counit equals the top components of phi on
/// normalized representatives, and it is a dga map.
inline CheckReport adjunction_check(FiniteCosimplicialAlgebra const &x, DGAlgebraPresentation const &y, std::vector<Matrix> const &phi)
{
	CheckReport rep;
	int cap = x.cap();
	auto k = denormalize_dga(y, cap);
	bool cosimplicial = true, multiplicative = true;
	for (int n = 1; n <= cap; ++n)
		for (int i = 0; i <= n; ++i)
			cosimplicial = cosimplicial && phi[n] * x.space.cofaces[n][i] == k.space.cofaces[n][i] * phi[n - 1];
	for (int n = 0; n <= cap; ++n)
		for (std::size_t a = 0; a < x.dim(n); ++a)
			for (std::size_t b = 0; b < x.dim(n); ++b)
				multiplicative = multiplicative && phi[n] * x.multiply(n, x.basis_vector(n, a), x.basis_vector(n, b)) ==
				                                       k.multiply(n, phi[n].column(a), phi[n].column(b));
	rep.add("phi is a cosimplicial algebra map", cosimplicial && multiplicative);
	if (!(cosimplicial && multiplicative))
		return rep;
	auto ad = abstract_diff(x);
	std::vector<Matrix> induced;
	bool kills_ideal = true;
	auto nz = normalize_algebra(x);
	for (int n = 0; n <= cap; ++n)
	{
		DKBasis kb(y.dims, n);
		auto top = [&](Vector const &v) {
			Vector t(y.dims[n]);
			for (std::size_t b = 0; b < y.dims[n]; ++b)
				t[b] = v[kb.position(full_mask(n), b)];
			return t;
		};
		Matrix const &q = ad.quotient_basis[n];
		std::vector<Vector> cols;
		for (std::size_t c = 0; c < q.cols(); ++c)
			cols.push_back(top(phi[n] * q.column(c)));
		induced.push_back(Matrix::from_columns(y.dims[n], cols));
		// the ideal maps to zero: every normalized element's image agrees with its quotient representative
		for (std::size_t c = 0; c < nz.basis[n].cols(); ++c)
		{
			Vector img = phi[n] * nz.basis[n].column(c);
			Vector t = top(img);
			for (std::size_t r = 0; r < img.size(); ++r)
				if (kb[r].alpha != full_mask(n) && sgn(img[r]) != 0)
					kills_ideal = false;
			(void)t;
		}
	}
	rep.add("phi sends normalized elements to top components", kills_ideal);
	auto const &np = ad.algebra;
	bool d_ok = true, prod_ok = true;
	for (int n = 0; n < cap; ++n)
		d_ok = d_ok && induced[n + 1] * np.differential[n] == y.differential[n] * induced[n];
	for (int p = 0; p <= cap; ++p)
		for (int q = 0; p + q <= cap; ++q)
			for (std::size_t a = 0; a < np.dims[p]; ++a)
				for (std::size_t b = 0; b < np.dims[q]; ++b)
					prod_ok = prod_ok && induced[p + q] * np.product[p][q][a][b] ==
					                         y.multiply(p, induced[p].column(a), q, induced[q].column(b));
	rep.add("induced map commutes with d", d_ok);
	rep.add("induced map is multiplicative", prod_ok);
	return rep;
}

// ---------------------------------------------------------------------------
// Sources of examples

/// Free graded-commutative dga on CE generators, truncated above the top degree.
inline DGAlgebraPresentation dga_from_ce(CEAlgebra const &ce, int top, std::string name = {})
{
	DGAlgebraPresentation y;
	y.name = name.empty() ? ce.name : name;
	y.commutative = true;
	auto gens = ce.generators(top);
	std::vector<std::vector<Monomial>> basis;
	std::vector<std::map<Monomial, std::size_t>> index(top + 1);
	for (int k = 0; k <= top; ++k)
	{
		basis.push_back(monomials_of(gens, k, -1));
		y.dims.push_back(basis.back().size());
		std::vector<int> par;
		std::vector<std::string> lab;
		for (std::size_t i = 0; i < basis[k].size(); ++i)
		{
			index[k][basis[k][i]] = i;
			par.push_back(basis[k][i].parity());
			lab.push_back(to_string(basis[k][i]));
		}
		y.parity.push_back(par);
		y.labels.push_back(lab);
	}
	auto coords = [&](int k, Polynomial const &p) {
		Vector v(y.dims[k]);
		for (auto const &[m, c] : p.terms())
			v[index[k].at(m)] = c;
		return v;
	};
	for (int k = 0; k < top; ++k)
	{
		std::vector<Vector> cols;
		for (auto const &m : basis[k])
		{
			Polynomial img = apply_derivation(Polynomial::monomial(m), ce.differential, 1, true);
			cols.push_back(coords(k + 1, img));
		}
		y.differential.push_back(Matrix::from_columns(y.dims[k + 1], cols));
	}
	y.product.resize(top + 1);
	for (int p = 0; p <= top; ++p)
	{
		y.product[p].resize(top - p + 1);
		for (int q = 0; p + q <= top; ++q)
		{
			y.product[p][q].assign(y.dims[p], std::vector<Vector>(y.dims[q]));
			for (std::size_t a = 0; a < y.dims[p]; ++a)
				for (std::size_t b = 0; b < y.dims[q]; ++b)
					y.product[p][q][a][b] = coords(p + q, Polynomial::monomial(basis[p][a]) * Polynomial::monomial(basis[q][b]));
		}
	}
	y.unit = coords(0, Polynomial::constant(1));
	return y;
}

/// Semi-free CE data from generator degrees and differentials, for hand-made examples.
inline CEAlgebra ce_from_generators(std::string name, std::vector<std::size_t> ranks, std::map<Generator, Polynomial> differential,
                                    std::vector<std::vector<int>> parity = {})
{
	CEAlgebra ce;
	ce.name = std::move(name);
	ce.ranks = std::move(ranks);
	ce.parity = std::move(parity);
	ce.degree = (int)ce.ranks.size() - 1;
	for (auto const &g : ce.generators(ce.degree))
		ce.differential[g] = differential.count(g) ? differential.at(g) : Polynomial();
	return ce;
}

/// Truncated polynomial cochains of a presentation as a cosimplicial algebra (levels 0..max_level - 1 keep codegeneracies).
inline FiniteCosimplicialAlgebra cochain_algebra(FramedPresentation const &p, int cap)
{
	require(cap >= 1 && cap < p.max_level + 1, "cochain algebra cap must be at most the presentation level cap");
	require(cap < p.max_level || cap == p.max_level, "level cap out of range");
	CochainEngine eng(p);
	int t = p.truncation;
	FiniteCosimplicialAlgebra x;
	x.name = "C(" + p.name + ")";
	x.space.cap = cap;
	x.space.cofaces.resize(cap + 1);
	x.space.codegeneracies.resize(cap + 1);
	std::vector<std::vector<Monomial>> basis;
	std::vector<std::map<Monomial, std::size_t>> index(cap + 1);
	for (int n = 0; n <= cap; ++n)
	{
		auto coords = n == 0 ? std::vector<Generator>{} : level_coordinates(p, n);
		std::vector<Monomial> b;
		for (int c = 0; c <= t; ++c)
			for (auto const &m : monomials_of(coords, 0, c))
				if (m.weight() <= t)
					b.push_back(m);
		std::sort(b.begin(), b.end());
		basis.push_back(b);
		for (std::size_t i = 0; i < b.size(); ++i)
			index[n][b[i]] = i;
		x.space.dims.push_back(b.size());
		std::vector<int> par;
		for (auto const &m : b)
			par.push_back(m.parity());
		x.parity.push_back(par);
		std::vector<std::vector<SparseVector>> prod(b.size(), std::vector<SparseVector>(b.size()));
		for (std::size_t a = 0; a < b.size(); ++a)
			for (std::size_t c = 0; c < b.size(); ++c)
			{
				Polynomial r = Polynomial::monomial(b[a], 1, t) * Polynomial::monomial(b[c], 1, t);
				for (auto const &[m, coef] : r.terms())
					prod[a][c].push_back({index[n].at(m), coef});
			}
		x.product.push_back(prod);
		Vector u(b.size());
		u[index[n].at(Monomial())] = 1;
		x.unit.push_back(u);
	}
	auto matrix_of = [&](int from, int to, std::map<Generator, Polynomial> const &sub) {
		Matrix m(basis[to].size(), basis[from].size());
		for (std::size_t c = 0; c < basis[from].size(); ++c)
		{
			Polynomial img = Polynomial::monomial(basis[from][c], 1, t).substitute(sub, t);
			for (auto const &[mono, coef] : img.terms())
				m(index[to].at(mono), c) = coef;
		}
		return m;
	};
	for (int n = 1; n <= cap; ++n)
		for (int i = 0; i <= n; ++i)
			x.space.cofaces[n].push_back(matrix_of(n - 1, n, eng.face_map(n, i)));
	for (int n = 0; n < cap; ++n)
		for (int j = 0; j <= n; ++j)
			x.space.codegeneracies[n].push_back(matrix_of(n + 1, n, eng.degeneracy_map(n, j)));
	return x;
}

} // namespace sdiff
