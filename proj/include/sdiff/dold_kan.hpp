#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "sdiff/combinatorics.hpp"
#include "sdiff/error.hpp"
#include "sdiff/linear_algebra.hpp"

namespace sdiff {

/// Finite chain complex E_0 <- E_1 <- ... with boundary[k] : E_k -> E_{k-1}.
struct ChainComplex
{
	std::vector<std::size_t> ranks;
	std::vector<Matrix> boundary; ///< boundary[0] is the empty map out of E_0

	ChainComplex() = default;

	/// `maps[k-1]` is the boundary E_k -> E_{k-1}; missing maps are zero.
	ChainComplex(std::vector<std::size_t> rks, std::vector<Matrix> maps) : ranks(std::move(rks))
	{
		boundary.resize(ranks.size());
		if (!ranks.empty())
			boundary[0] = Matrix(0, ranks[0]);
		require(maps.size() < ranks.size() || (ranks.empty() && maps.empty()), "too many boundary matrices");
		for (std::size_t k = 1; k < ranks.size(); ++k)
		{
			if (k - 1 < maps.size())
			{
				require(maps[k - 1].rows() == ranks[k - 1] && maps[k - 1].cols() == ranks[k],
				        "boundary " + std::to_string(k) + " has shape " + maps[k - 1].shape());
				boundary[k] = maps[k - 1];
			}
			else
				boundary[k] = Matrix(ranks[k - 1], ranks[k]);
		}
		for (std::size_t k = 2; k < ranks.size(); ++k)
			if (!(boundary[k - 1] * boundary[k]).is_zero())
				throw IdentityViolation("boundary squares to nonzero in degree " + std::to_string(k));
	}

	int top_degree() const { return (int)ranks.size() - 1; }
	std::size_t rank(int k) const { return k >= 0 && k < (int)ranks.size() ? ranks[k] : 0; }

	/// Boundary E_k -> E_{k-1}; zero outside the stored range.
	Matrix d(int k) const
	{
		if (k >= 1 && k < (int)ranks.size())
			return boundary[k];
		return Matrix(rank(k - 1), rank(k));
	}
};

/// Equal ranks and boundaries after discarding trailing zero ranks.
inline bool same_complex(ChainComplex const &a, ChainComplex const &b)
{
	int top = std::max(a.top_degree(), b.top_degree());
	for (int k = 0; k <= top; ++k)
		if (a.rank(k) != b.rank(k))
			return false;
	for (int k = 1; k <= top; ++k)
		if (!(a.d(k) == b.d(k)))
			return false;
	return true;
}

/// Finite connective cochain complex Y^0 -> Y^1 -> ... with differential[k] : Y^k -> Y^{k+1}.
struct CochainComplex
{
	std::vector<std::size_t> ranks;
	std::vector<Matrix> differential;

	CochainComplex() = default;
	CochainComplex(std::vector<std::size_t> rks, std::vector<Matrix> maps) : ranks(std::move(rks))
	{
		differential.resize(ranks.size());
		for (std::size_t k = 0; k < ranks.size(); ++k)
		{
			std::size_t next = k + 1 < ranks.size() ? ranks[k + 1] : 0;
			if (k < maps.size())
			{
				require(maps[k].rows() == next && maps[k].cols() == ranks[k], "differential " + std::to_string(k) + " has shape " + maps[k].shape());
				differential[k] = maps[k];
			}
			else
				differential[k] = Matrix(next, ranks[k]);
		}
		for (std::size_t k = 0; k + 1 < ranks.size(); ++k)
			if (!(differential[k + 1] * differential[k]).is_zero())
				throw IdentityViolation("differential squares to nonzero in degree " + std::to_string(k));
	}

	std::size_t rank(int k) const { return k >= 0 && k < (int)ranks.size() ? ranks[k] : 0; }
	Matrix d(int k) const
	{
		if (k >= 0 && k < (int)ranks.size())
			return differential[k];
		return Matrix(rank(k + 1), rank(k));
	}

	/// Dual chain complex with E_k = (Y^k)^* and transposed maps.
	ChainComplex dual() const
	{
		std::vector<Matrix> maps;
		for (std::size_t k = 1; k < ranks.size(); ++k)
			maps.push_back(differential[k - 1].transpose());
		return ChainComplex(ranks, maps);
	}
};

// ---------------------------------------------------------------------------
// Denormalization basis

struct DKBasisElement
{
	int level = 0;
	Mask alpha = 0;
	std::size_t index = 0;

	int degree() const { return mask_size(alpha); }
	auto operator<=>(DKBasisElement const &) const = default;
};

/// The basis v_b (x) e_alpha of level n, ordered by (|alpha|, alpha, b).
class DKBasis
{
  public:
	DKBasis() = default;
	DKBasis(std::vector<std::size_t> const &ranks, int n) : level_(n)
	{
		std::vector<std::vector<Mask>> by_size(n + 1);
		for (Mask m = 0; m <= full_mask(n); ++m)
			by_size[mask_size(m)].push_back(m);
		for (int k = 0; k <= n; ++k)
		{
			std::size_t r = k < (int)ranks.size() ? ranks[k] : 0;
			for (Mask m : by_size[k])
				for (std::size_t b = 0; b < r; ++b)
				{
					position_[{m, b}] = elements_.size();
					elements_.push_back({n, m, b});
				}
		}
	}

	int level() const { return level_; }
	std::size_t size() const { return elements_.size(); }
	DKBasisElement const &operator[](std::size_t i) const { return elements_[i]; }
	std::vector<DKBasisElement> const &elements() const { return elements_; }

	std::size_t position(Mask alpha, std::size_t index) const
	{
		auto it = position_.find({alpha, index});
		if (it == position_.end())
			throw InvalidArgument("no basis element " + mask_to_string(alpha) + "#" + std::to_string(index) + " at level " +
			                      std::to_string(level_));
		return it->second;
	}

  private:
	int level_ = 0;
	std::vector<DKBasisElement> elements_;
	std::map<std::pair<Mask, std::size_t>, std::size_t> position_;
};

inline DKBasis dk_basis(ChainComplex const &e, int n) { return DKBasis(e.ranks, n); }

/// The simplicial operator of theta : [n] -> [m], acting from level m to level n.
/// Each v (x) e_alpha is composed with the surjection [m] -> [k] of alpha and factored as mono after epi;
/// the identity mono keeps v, the mono skipping 0 applies the boundary, every other mono gives 0.
inline Matrix dk_operator(ChainComplex const &e, OrdinalMap const &theta)
{
	int n = theta.domain_size, m = theta.codomain_size;
	DKBasis src(e.ranks, m), dst(e.ranks, n);
	Matrix out(dst.size(), src.size());
	for (std::size_t col = 0; col < src.size(); ++col)
	{
		auto const &el = src[col];
		int k = mask_size(el.alpha);
		std::vector<int> c(n + 1);
		for (int t = 0; t <= n; ++t)
			c[t] = mask_size(el.alpha & full_mask(theta(t)));
		Mask jumps = 0;
		for (int t = 1; t <= n; ++t)
			if (c[t] > c[t - 1])
				jumps |= element_bit(t);
		bool hits_all_positive = c[n] == k && mask_size(jumps) == (c[0] == 0 ? k : k - 1);
		if (!hits_all_positive)
			continue;
		if (c[0] == 0)
			out(dst.position(jumps, el.index), col) += 1;
		else if (c[0] == 1)
		{
			Matrix bd = e.d(k);
			for (std::size_t r = 0; r < bd.rows(); ++r)
				if (sgn(bd(r, el.index)) != 0)
					out(dst.position(jumps, r), col) += bd(r, el.index);
		}
	}
	return out;
}

inline Matrix dk_face_matrix(ChainComplex const &e, int n, int i)
{
	if (n < 1 || i < 0 || i > n)
		throw InvalidArgument("face index " + std::to_string(i) + " out of range at level " + std::to_string(n));
	return dk_operator(e, OrdinalMap::coface(n, i));
}

inline Matrix dk_degeneracy_matrix(ChainComplex const &e, int n, int j)
{
	if (n < 0 || j < 0 || j > n)
		throw InvalidArgument("degeneracy index " + std::to_string(j) + " out of range at level " + std::to_string(n));
	return dk_operator(e, OrdinalMap::codegeneracy(n, j));
}

// ---------------------------------------------------------------------------
// Simplicial vector spaces

/// Levels 0..cap with faces[n][i] : V_n -> V_{n-1} and degeneracies[n][j] : V_n -> V_{n+1}.
struct SimplicialVectorSpace
{
	int cap = 0;
	std::vector<std::size_t> dims;
	std::vector<std::vector<Matrix>> faces;
	std::vector<std::vector<Matrix>> degeneracies;
};

inline SimplicialVectorSpace denormalize(ChainComplex const &e, int cap)
{
	SimplicialVectorSpace v;
	v.cap = cap;
	v.faces.resize(cap + 1);
	v.degeneracies.resize(cap + 1);
	for (int n = 0; n <= cap; ++n)
	{
		v.dims.push_back(dk_basis(e, n).size());
		for (int i = 0; n >= 1 && i <= n; ++i)
			v.faces[n].push_back(dk_face_matrix(e, n, i));
		for (int j = 0; n < cap && j <= n; ++j)
			v.degeneracies[n].push_back(dk_degeneracy_matrix(e, n, j));
	}
	return v;
}

/// First violated simplicial identity, if any.
inline std::optional<std::string> simplicial_identity_violation(SimplicialVectorSpace const &v)
{
	auto name = [](std::string s, int n) { return s + " at level " + std::to_string(n); };
	for (int n = 2; n <= v.cap; ++n)
		for (int j = 1; j <= n; ++j)
			for (int i = 0; i < j; ++i)
				if (!(v.faces[n - 1][i] * v.faces[n][j] == v.faces[n - 1][j - 1] * v.faces[n][i]))
					return name("d" + std::to_string(i) + " d" + std::to_string(j) + " = d" + std::to_string(j - 1) + " d" +
					                std::to_string(i),
					            n);
	for (int n = 0; n < v.cap; ++n)
		for (int j = 0; j <= n; ++j)
			for (int i = 0; i <= n + 1; ++i)
			{
				Matrix lhs = v.faces[n + 1][i] * v.degeneracies[n][j];
				Matrix rhs;
				if (i == j || i == j + 1)
					rhs = Matrix::identity(v.dims[n]);
				else if (i < j)
					rhs = v.degeneracies[n - 1][j - 1] * v.faces[n][i];
				else
					rhs = v.degeneracies[n - 1][j] * v.faces[n][i - 1];
				if (!(lhs == rhs))
					return name("d" + std::to_string(i) + " s" + std::to_string(j), n);
			}
	for (int n = 0; n + 1 < v.cap; ++n)
		for (int j = 0; j <= n; ++j)
			for (int i = 0; i <= j; ++i)
				if (!(v.degeneracies[n + 1][i] * v.degeneracies[n][j] == v.degeneracies[n + 1][j + 1] * v.degeneracies[n][i]))
					return name("s" + std::to_string(i) + " s" + std::to_string(j), n);
	return std::nullopt;
}

struct Normalization
{
	ChainComplex complex;
	std::vector<Matrix> basis; ///< columns spanning the normalized part of each level
};

/// Moore complex: intersection of the kernels of the positive faces, with boundary d_0.
inline Normalization normalize_with_basis(SimplicialVectorSpace const &v)
{
	if (auto bad = simplicial_identity_violation(v))
		throw IdentityViolation("simplicial identity fails: " + *bad);
	Normalization out;
	std::vector<std::size_t> ranks;
	for (int n = 0; n <= v.cap; ++n)
	{
		std::size_t rows = 0;
		for (int i = 1; i <= n; ++i)
			rows += v.faces[n][i].rows();
		Matrix stacked(rows, v.dims[n]);
		std::size_t r0 = 0;
		for (int i = 1; i <= n; ++i)
		{
			auto const &f = v.faces[n][i];
			for (std::size_t r = 0; r < f.rows(); ++r)
				for (std::size_t c = 0; c < f.cols(); ++c)
					stacked(r0 + r, c) = f(r, c);
			r0 += f.rows();
		}
		out.basis.push_back(n == 0 ? Matrix::identity(v.dims[0]) : nullspace(stacked));
		ranks.push_back(out.basis.back().cols());
	}
	std::vector<Matrix> maps;
	for (int n = 1; n <= v.cap; ++n)
		maps.push_back(solve_columns(out.basis[n - 1], v.faces[n][0] * out.basis[n], "image of d0"));
	out.complex = ChainComplex(ranks, maps);
	return out;
}

inline ChainComplex normalize(SimplicialVectorSpace const &v) { return normalize_with_basis(v).complex; }

// ---------------------------------------------------------------------------
// Cosimplicial vector spaces

/// Levels 0..cap with cofaces[n][i] : X^{n-1} -> X^n and codegeneracies[n][j] : X^{n+1} -> X^n.
struct CosimplicialVectorSpace
{
	int cap = 0;
	std::vector<std::size_t> dims;
	std::vector<std::vector<Matrix>> cofaces;
	std::vector<std::vector<Matrix>> codegeneracies;
};

/// Denormalization of a cochain complex, as the transpose of the simplicial one of the dual complex.
inline CosimplicialVectorSpace dual_denormalize(CochainComplex const &y, int cap)
{
	SimplicialVectorSpace s = denormalize(y.dual(), cap);
	CosimplicialVectorSpace x;
	x.cap = cap;
	x.dims = s.dims;
	x.cofaces.resize(cap + 1);
	x.codegeneracies.resize(cap + 1);
	for (int n = 1; n <= cap; ++n)
		for (auto const &f : s.faces[n])
			x.cofaces[n].push_back(f.transpose());
	for (int n = 0; n < cap; ++n)
		for (auto const &g : s.degeneracies[n])
			x.codegeneracies[n].push_back(g.transpose());
	return x;
}

inline std::optional<std::string> cosimplicial_identity_violation(CosimplicialVectorSpace const &x)
{
	SimplicialVectorSpace s;
	s.cap = x.cap;
	s.dims = x.dims;
	s.faces.resize(x.cap + 1);
	s.degeneracies.resize(x.cap + 1);
	for (int n = 1; n <= x.cap; ++n)
		for (auto const &f : x.cofaces[n])
			s.faces[n].push_back(f.transpose());
	for (int n = 0; n < x.cap; ++n)
		for (auto const &g : x.codegeneracies[n])
			s.degeneracies[n].push_back(g.transpose());
	return simplicial_identity_violation(s);
}

/// Applies the coface d^i from level n-1 to level n.
inline Vector coface(CosimplicialVectorSpace const &x, int n, int i, Vector const &v) { return x.cofaces.at(n).at(i) * v; }

/// (d^i)^times starting at level `from`.
inline Vector coface_power(CosimplicialVectorSpace const &x, int from, int i, int times, Vector v)
{
	for (int t = 0; t < times; ++t)
		v = coface(x, from + t + 1, i, v);
	return v;
}

struct CosimplicialNormalization
{
	std::vector<Matrix> basis;        ///< columns spanning the normalized part of each level
	std::vector<Matrix> differential; ///< differential[n] : N^n -> N^{n+1}, for n < cap
};

inline CosimplicialNormalization cosimplicial_normalize_linear(CosimplicialVectorSpace const &x)
{
	if (auto bad = cosimplicial_identity_violation(x))
		throw IdentityViolation("cosimplicial identity fails: " + *bad);
	CosimplicialNormalization out;
	for (int n = 0; n <= x.cap; ++n)
	{
		if (n == 0)
		{
			out.basis.push_back(Matrix::identity(x.dims[0]));
			continue;
		}
		std::size_t rows = 0;
		for (int j = 0; j < n; ++j)
			rows += x.codegeneracies[n - 1][j].rows();
		Matrix stacked(rows, x.dims[n]);
		std::size_t r0 = 0;
		for (int j = 0; j < n; ++j)
		{
			auto const &s = x.codegeneracies[n - 1][j];
			for (std::size_t r = 0; r < s.rows(); ++r)
				for (std::size_t c = 0; c < s.cols(); ++c)
					stacked(r0 + r, c) = s(r, c);
			r0 += s.rows();
		}
		out.basis.push_back(nullspace(stacked));
	}
	for (int n = 0; n < x.cap; ++n)
	{
		Matrix total(x.dims[n + 1], x.dims[n]);
		for (int i = 0; i <= n + 1; ++i)
		{
			Matrix term = x.cofaces[n + 1][i];
			if (i & 1)
				term *= Rational(-1);
			total = total + term;
		}
		out.differential.push_back(solve_columns(out.basis[n + 1], total * out.basis[n], "coboundary"));
	}
	return out;
}

// ---------------------------------------------------------------------------
// Tensors, Alexander-Whitney and shuffle

/// Element of X^n (x) X^n in the product basis.
struct Tensor
{
	int level = 0;
	std::map<std::pair<std::size_t, std::size_t>, Rational> coeffs;

	void add(std::size_t a, std::size_t b, Rational const &c)
	{
		if (sgn(c) == 0)
			return;
		auto [it, ins] = coeffs.try_emplace({a, b}, c);
		if (!ins)
		{
			it->second += c;
			if (sgn(it->second) == 0)
				coeffs.erase(it);
		}
	}
	bool is_zero() const { return coeffs.empty(); }

	static Tensor product(int level, Vector const &f, Vector const &g)
	{
		Tensor t;
		t.level = level;
		for (std::size_t a = 0; a < f.size(); ++a)
			if (sgn(f[a]) != 0)
				for (std::size_t b = 0; b < g.size(); ++b)
					if (sgn(g[b]) != 0)
						t.add(a, b, f[a] * g[b]);
		return t;
	}

	Tensor &operator+=(Tensor const &o)
	{
		for (auto const &[k, c] : o.coeffs)
			add(k.first, k.second, c);
		return *this;
	}
	Tensor operator*(Rational const &s) const
	{
		Tensor t;
		t.level = level;
		for (auto const &[k, c] : coeffs)
			t.add(k.first, k.second, c * s);
		return t;
	}
	bool operator==(Tensor const &o) const { return level == o.level && coeffs == o.coeffs; }
};

/// (d^{p+1})^q f (x) (d^0)^p g.
inline Tensor aw(CosimplicialVectorSpace const &x, Vector const &f, int p, Vector const &g, int q)
{
	require(p + q <= x.cap, "Alexander-Whitney target beyond the level cap");
	Vector front = coface_power(x, p, p + 1, q, f);
	Vector back = coface_power(x, q, 0, p, g);
	return Tensor::product(p + q, front, back);
}

/// Simplicial differential sum (-1)^i d^i (x) d^i on the diagonal tensor square.
inline Tensor tensor_delta(CosimplicialVectorSpace const &x, Tensor const &t)
{
	int n = t.level;
	require(n + 1 <= x.cap, "tensor differential beyond the level cap");
	Tensor out;
	out.level = n + 1;
	for (int i = 0; i <= n + 1; ++i)
	{
		Matrix const &d = x.cofaces[n + 1][i];
		Rational s = (i & 1) ? -1 : 1;
		for (auto const &[k, c] : t.coeffs)
			for (std::size_t r1 = 0; r1 < d.rows(); ++r1)
			{
				if (sgn(d(r1, k.first)) == 0)
					continue;
				for (std::size_t r2 = 0; r2 < d.rows(); ++r2)
					if (sgn(d(r2, k.second)) != 0)
						out.add(r1, r2, s * c * d(r1, k.first) * d(r2, k.second));
			}
	}
	return out;
}

/// Sign of the shuffle putting the word alpha.beta in increasing order; 0 if they overlap.
inline int shuffle_sign(Mask alpha, Mask beta)
{
	if (alpha & beta)
		return 0;
	int inv = 0;
	for (int a : mask_members(alpha))
		inv += mask_size(beta & full_mask(a - 1));
	return (inv & 1) ? -1 : 1;
}

/// Element of (Y (x) Y)_K at level n, keyed by (alpha union beta, |alpha|, left index, right index).
struct ShuffleImage
{
	int level = 0;
	std::map<std::tuple<Mask, int, std::size_t, std::size_t>, Rational> coeffs;

	/// Normalized component f (x) g in Y^p (x) Y^{n-p}, keyed by (p, left, right).
	std::map<std::tuple<int, std::size_t, std::size_t>, Rational> normalized() const
	{
		std::map<std::tuple<int, std::size_t, std::size_t>, Rational> r;
		for (auto const &[k, c] : coeffs)
			if (std::get<0>(k) == full_mask(level))
				r[{std::get<1>(k), std::get<2>(k), std::get<3>(k)}] += c;
		return r;
	}
	bool is_zero() const { return coeffs.empty(); }
};

/// Shuffle map for a tensor expressed in the denormalization basis of the cochain complex with these ranks.
inline ShuffleImage sh(std::vector<std::size_t> const &ranks, Tensor const &t)
{
	DKBasis basis(ranks, t.level);
	ShuffleImage out;
	out.level = t.level;
	for (auto const &[k, c] : t.coeffs)
	{
		auto const &a = basis[k.first];
		auto const &b = basis[k.second];
		int s = shuffle_sign(a.alpha, b.alpha);
		if (s == 0)
			continue;
		auto key = std::make_tuple(a.alpha | b.alpha, a.degree(), a.index, b.index);
		Rational v = s * c;
		auto [it, ins] = out.coeffs.try_emplace(key, v);
		if (!ins)
		{
			it->second += v;
			if (sgn(it->second) == 0)
				out.coeffs.erase(it);
		}
	}
	return out;
}

/// Pairs (alpha, beta) covering {1..n} with overlap, with basis indices.
inline std::vector<std::pair<DKBasisElement, DKBasisElement>> overlapping_basis(std::vector<std::size_t> const &ranks, int n)
{
	std::vector<std::pair<DKBasisElement, DKBasisElement>> out;
	if (n == 0)
		return out;
	DKBasis basis(ranks, n);
	for (auto const &a : basis.elements())
		for (auto const &b : basis.elements())
			if ((a.alpha | b.alpha) == full_mask(n) && (a.alpha & b.alpha))
				out.push_back({a, b});
	return out;
}

/// Basis tensors over pairs covering {1..n}: the normalized part of the tensor square.
inline std::vector<std::pair<DKBasisElement, DKBasisElement>> covering_basis(std::vector<std::size_t> const &ranks, int n)
{
	std::vector<std::pair<DKBasisElement, DKBasisElement>> out;
	DKBasis basis(ranks, n);
	for (auto const &a : basis.elements())
		for (auto const &b : basis.elements())
			if ((a.alpha | b.alpha) == full_mask(n))
				out.push_back({a, b});
	return out;
}

/// Sums t + tau_k(t) over partition pairs and allowed transpositions; these lie in the kernel of sh.
inline std::vector<Tensor> transposition_relations(std::vector<std::size_t> const &ranks, int n)
{
	std::vector<Tensor> out;
	DKBasis basis(ranks, n);
	for (auto const &a : basis.elements())
		for (auto const &b : basis.elements())
		{
			if ((a.alpha | b.alpha) != full_mask(n) || (a.alpha & b.alpha))
				continue;
			for (int k = 1; k < n; ++k)
			{
				bool both_a = has_element(a.alpha, k) && has_element(a.alpha, k + 1);
				bool both_b = has_element(b.alpha, k) && has_element(b.alpha, k + 1);
				if (both_a || both_b)
					continue;
				Tensor t;
				t.level = n;
				t.add(basis.position(a.alpha, a.index), basis.position(b.alpha, b.index), 1);
				t.add(basis.position(transpose_mask(a.alpha, k), a.index), basis.position(transpose_mask(b.alpha, k), b.index), 1);
				out.push_back(t);
			}
		}
	return out;
}

} // namespace sdiff
