#pragma once

#include <map>
#include <string>
#include <vector>

#include "sdiff/combinatorics.hpp"
#include "sdiff/error.hpp"
#include "sdiff/graded_poly.hpp"
#include "sdiff/presentation.hpp"

namespace sdiff {

/// Polynomial cochains on a framed presentation: face and degeneracy pullbacks, cup product,
/// the simplicial differential, the normalization retraction and the quotient by the differentiating ideal.
///
/// All substitution maps are built in the constructor; afterwards the engine is read-only.
class CochainEngine
{
  public:
	explicit CochainEngine(FramedPresentation p) : p_(std::move(p))
	{
		require(p_.tangent.rank(0) == 0, "tangent complex must vanish in degree 0");
		require((int)p_.d0.size() >= p_.max_level + 1, "missing d0 levels");
		faces_.resize(p_.max_level + 1);
		degeneracies_.resize(p_.max_level + 1);
		for (int n = 1; n <= p_.max_level; ++n)
		{
			faces_[n].resize(n + 1);
			for (auto const &g : level_coordinates(p_, n - 1))
				if (!p_.d0[n].count(g))
					throw InvalidArgument("d0 at level " + std::to_string(n) + " lacks coordinate " + to_string(g));
			faces_[n][0] = p_.d0[n];
			for (auto &[g, img] : faces_[n][0])
				img = img.truncated(p_.truncation);
			for (int i = 1; i <= n; ++i)
				faces_[n][i] = linear_face_pullback(p_, n, i);
		}
		for (int n = 0; n < p_.max_level; ++n)
			for (int j = 0; j <= n; ++j)
				degeneracies_[n].push_back(degeneracy_pullback_map(p_, n, j));
	}

	FramedPresentation const &presentation() const { return p_; }
	int truncation() const { return p_.truncation; }
	int max_level() const { return p_.max_level; }

	Polynomial zero() const { return Polynomial(p_.truncation); }
	Polynomial constant(Rational const &c) const { return Polynomial::constant(c, p_.truncation); }
	Polynomial coordinate(Mask alpha, std::uint32_t label) const
	{
		return Polynomial::generator(p_.coordinate(alpha, label), p_.truncation);
	}

	/// Substitution x -> x o d_i for level n-1 coordinates.
	std::map<Generator, Polynomial> const &face_map(int n, int i) const
	{
		if (n < 1 || n > p_.max_level)
			throw InsufficientTruncation("face maps into level " + std::to_string(n) + " need presentation data up to that level (have " +
			                             std::to_string(p_.max_level) + ")");
		if (i < 0 || i > n)
			throw InvalidArgument("face index " + std::to_string(i) + " out of range at level " + std::to_string(n));
		return faces_[n][i];
	}

	/// Substitution x -> x o s_j for level n+1 coordinates, landing at level n.
	std::map<Generator, Polynomial> const &degeneracy_map(int n, int j) const
	{
		if (n < 0 || n >= p_.max_level)
			throw InsufficientTruncation("degeneracy from level " + std::to_string(n) + " beyond the level cap");
		if (j < 0 || j > n)
			throw InvalidArgument("degeneracy index " + std::to_string(j) + " out of range at level " + std::to_string(n));
		return degeneracies_[n][j];
	}

	/// f o d_i, taking a level n-1 cochain to level n.
	Polynomial face_pullback(Polynomial const &f, int n, int i) const { return f.substitute(face_map(n, i), p_.truncation); }

	/// f o s_j, taking a level n+1 cochain to level n.
	Polynomial degeneracy_pullback(Polynomial const &f, int n, int j) const
	{
		return f.substitute(degeneracy_map(n, j), p_.truncation);
	}

	/// Alternating sum of face pullbacks, level n to level n+1.
	Polynomial delta(Polynomial const &f, int n) const
	{
		Polynomial out = zero();
		for (int i = 0; i <= n + 1; ++i)
		{
			Polynomial t = face_pullback(f, n + 1, i);
			if (i & 1)
				out -= t;
			else
				out += t;
		}
		return out;
	}

	/// (f u g)(x) = f(front face of x) . g(back face of x).
	Polynomial cup(Polynomial const &f, int p, Polynomial const &g, int q) const
	{
		Polynomial front = f, back = g;
		for (int k = 1; k <= q; ++k)
			front = face_pullback(front, p + k, p + 1);
		for (int k = 1; k <= p; ++k)
			back = face_pullback(back, q + k, 0);
		return front * back;
	}

	/// True if every monomial covers {1..n}; exactly the cochains vanishing on degeneracies.
	bool is_normalized(Polynomial const &f, int n) const
	{
		for (auto const &[m, c] : f.terms())
			if (monomial_cover(m) != full_mask(n))
				return false;
		return true;
	}

	/// The retraction onto normalized cochains, (1 - P_n) ... (1 - P_1) with P_j f = f o s_{j-1} o d_j.
	Polynomial normalize_retract(Polynomial const &f, int n) const
	{
		Polynomial cur = f;
		for (int j = 1; j <= n; ++j)
		{
			Polynomial down = degeneracy_pullback(cur, n - 1, j - 1);
			cur -= face_pullback(down, n, j);
		}
		return cur;
	}

	/// Class of a normalized level-n cochain in the quotient by the differentiating ideal, in CE generators.
	Polynomial reduce(Polynomial const &f, int n) const
	{
		Polynomial out;
		for (auto const &[m, c] : f.terms())
		{
			std::vector<LabeledBlock> blocks;
			std::vector<int> parities;
			for (auto const &fac : m.factors())
			{
				require(fac.gen.kind == GenKind::coordinate, "reduction expects coordinate monomials");
				for (std::uint32_t e = 0; e < fac.exp; ++e)
				{
					blocks.push_back({fac.gen.a, fac.gen.b});
					parities.push_back(fac.gen.parity);
				}
			}
			LabeledBlockSequence seq(n, blocks);
			auto cls = classify_sequence(seq);
			if (cls.kind == Coverage::non_covering)
				throw InvalidArgument("monomial " + to_string(m) + " is not normalized at level " + std::to_string(n));
			if (cls.kind == Coverage::covering_with_overlap)
				continue;
			auto u = unravel(seq, parities);
			if (u.sign == 0)
				continue;
			std::vector<Factor> word;
			for (auto const &b : u.canonical.blocks)
				word.push_back({p_.ce_generator(mask_size(b.block), b.label), 1});
			auto [mono, s] = Monomial::from_word(word);
			if (s == 0)
				continue;
			out.add_term(mono, u.sign * s * c);
		}
		return out;
	}

	static Mask monomial_cover(Monomial const &m)
	{
		Mask u = 0;
		for (auto const &f : m.factors())
			u |= f.gen.a;
		return u;
	}

  private:
	FramedPresentation p_;
	std::vector<std::vector<std::map<Generator, Polynomial>>> faces_;
	std::vector<std::vector<std::map<Generator, Polynomial>>> degeneracies_;
};

/// Minimum summed weight over the monomials of a nonzero cochain.
inline int total_order(Polynomial const &f) { return f.total_order(); }

} // namespace sdiff
