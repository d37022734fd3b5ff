#pragma once

#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "sdiff/combinatorics.hpp"
#include "sdiff/dold_kan.hpp"
#include "sdiff/error.hpp"
#include "sdiff/graded_poly.hpp"
#include "sdiff/oracles/group_law.hpp"
#include "sdiff/presentation.hpp"

namespace sdiff::oracles {

/// x + y + xy in every coordinate.
inline GroupLaw multiplicative_law(std::size_t dim)
{
	GroupLaw g;
	g.name = "multiplicative" + std::to_string(dim);
	g.dim = dim;
	for (std::size_t i = 0; i < dim; ++i)
	{
		auto x = Polynomial::generator(law_x(i)), y = Polynomial::generator(law_y(i));
		g.components.push_back(x + y + x * y);
	}
	return g;
}

/// The ax + b group in coordinates centered at the unit: (a, b)(a', b') = (a + a' + aa', b + b' + ab').
inline GroupLaw affine_law()
{
	GroupLaw g;
	g.name = "affine";
	g.dim = 2;
	auto a = Polynomial::generator(law_x(0)), b = Polynomial::generator(law_x(1));
	auto a2 = Polynomial::generator(law_y(0)), b2 = Polynomial::generator(law_y(1));
	g.components = {a + a2 + a * a2, b + b2 + a * b2};
	return g;
}

/// phi(m(phi^{-1} x, phi^{-1} y)) for phi(x) = x + q(x), q of weight >= 2, truncated at t.
inline GroupLaw change_coordinates(GroupLaw const &m, std::vector<Polynomial> const &q, int t)
{
	require(q.size() == m.dim, "coordinate change dimension mismatch");
	for (auto const &c : q)
		require(c.is_zero() || c.total_order() >= 2, "coordinate change must be the identity to first order");
	auto subst = [&](std::vector<Polynomial> const &args) {
		std::map<Generator, Polynomial> a;
		for (std::size_t i = 0; i < m.dim; ++i)
			a[law_x(i)] = args[i];
		return a;
	};
	auto phi = [&](std::vector<Polynomial> const &u) {
		std::vector<Polynomial> out;
		auto a = subst(u);
		for (std::size_t i = 0; i < m.dim; ++i)
			out.push_back(u[i] + q[i].substitute(a, t));
		return out;
	};
	auto inverse_of = [&](std::vector<Polynomial> const &u) {
		auto cur = u;
		for (int it = 0; it <= t; ++it)
		{
			auto a = subst(cur);
			std::vector<Polynomial> next;
			for (std::size_t i = 0; i < m.dim; ++i)
				next.push_back(u[i] - q[i].substitute(a, t));
			cur = next;
		}
		return cur;
	};
	auto x = variables('x', m.dim, t), y = variables('y', m.dim, t);
	auto composed = phi(evaluate(m, inverse_of(x), inverse_of(y), t));
	GroupLaw out;
	out.name = m.name + "~";
	out.dim = m.dim;
	out.components = composed;
	return out;
}

/// Random chain complex with ranks[k] in degree k and random boundaries composing to zero.
inline ChainComplex random_complex(std::vector<std::size_t> const &ranks, std::mt19937 &rng)
{
	std::vector<Matrix> maps;
	Matrix prev; // boundary into degree k-1 from degree k, for the previous k
	for (std::size_t k = 1; k < ranks.size(); ++k)
	{
		Matrix d(ranks[k - 1], ranks[k]);
		if (k >= 2 && ranks[k - 1] > 0 && ranks[k] > 0)
		{
			// columns drawn from the kernel of the previous boundary
			Matrix ker = nullspace(prev);
			for (std::size_t c = 0; c < ranks[k]; ++c)
				for (std::size_t b = 0; b < ker.cols(); ++b)
				{
					Rational s((int)(rng() % 5) - 2);
					for (std::size_t r = 0; r < ker.rows(); ++r)
						d(r, c) += s * ker(r, b);
				}
		}
		maps.push_back(d);
		prev = d;
	}
	return ChainComplex(ranks, maps);
}

/// Level-n substitutions x -> x o d_i for the positive faces, as computed for the presentation.
inline std::map<Generator, Polynomial> positive_face(FramedPresentation const &p, int n, int i)
{
	return linear_face_pullback(p, n, i);
}

/// Coordinate change x'_{beta,l} = x_{beta,l} + sigma_{beta,l} on the coordinates of degree m, extended from the
/// top coordinates of level m to every level so that the positive faces keep their linear form; d0 is rewritten.
/// The top components must be normalized level-m polynomials of weight above m.
inline FramedPresentation gauge_transform(FramedPresentation const &p, int m, std::vector<Polynomial> const &top)
{
	require(m >= 1 && (std::size_t)m < 31, "gauge degree out of range");
	require(top.size() == p.rank(m), "one gauge component per degree-m label");
	int t = p.truncation;
	for (auto const &s : top)
		for (auto const &[mono, c] : s.terms())
		{
			require(mono.weight() > m, "gauge terms must have weight above the degree");
			Mask cover = 0;
			for (auto const &f : mono.factors())
				cover |= f.gen.a;
			require(cover == full_mask(m), "gauge terms must be normalized");
		}
	// sig[n][(beta, l)] for |beta| = m, beta in {1..n}
	std::vector<std::map<std::pair<Mask, std::uint32_t>, Polynomial>> sig(p.max_level + 1);
	std::function<Polynomial const &(int, Mask, std::uint32_t)> get = [&](int n, Mask beta, std::uint32_t l) -> Polynomial const & {
		auto key = std::make_pair(beta, l);
		if (auto it = sig[n].find(key); it != sig[n].end())
			return it->second;
		Polynomial val(t);
		if (n == m)
			val = top[l].truncated(t);
		else if (!has_element(beta, n))
			val = get(n - 1, beta, l).substitute(positive_face(p, n, n), t);
		else
		{
			int i = n - 1;
			while (has_element(beta, i))
				--i;
			Mask image = 0;
			for (int j : mask_members(beta))
				image |= element_bit(j <= i ? j : j - 1);
			Mask swapped = (beta & ~element_bit(i + 1)) | element_bit(i);
			val = get(n - 1, image, l).substitute(positive_face(p, n, i), t) - get(n, swapped, l);
		}
		return sig[n].emplace(key, std::move(val)).first->second;
	};
	for (int n = m; n <= p.max_level; ++n)
		for (auto const &g : level_coordinates(p, n))
			if (mask_size(g.a) == m)
				get(n, g.a, g.b);

	FramedPresentation q = p;
	q.name = p.name + "+gauge" + std::to_string(m);
	for (int n = 1; n <= p.max_level; ++n)
	{
		// old coordinates in terms of new ones at level n
		std::map<Generator, Polynomial> inverse;
		auto coords = level_coordinates(p, n);
		for (auto const &g : coords)
			inverse[g] = Polynomial::generator(g, t);
		if (n >= m)
			for (int it = 0; it <= t; ++it)
			{
				std::map<Generator, Polynomial> next = inverse;
				for (auto const &g : coords)
					if (mask_size(g.a) == m)
						next[g] = Polynomial::generator(g, t) - sig[n].at({g.a, g.b}).substitute(inverse, t);
				inverse = next;
			}
		for (auto const &[g, img] : p.d0[n])
		{
			Polynomial in_old = img;
			if (mask_size(g.a) == m && n - 1 >= m)
				in_old += sig[n - 1].at({g.a, g.b}).substitute(p.d0[n], t);
			q.d0[n][g] = in_old.substitute(inverse, t);
		}
	}
	return q;
}

/// Random normalized level-m polynomial with terms of weight in [m+1, t].
inline Polynomial random_gauge_component(FramedPresentation const &p, int m, std::mt19937 &rng, int terms = 3)
{
	auto coords = level_coordinates(p, m);
	Polynomial out(p.truncation);
	for (int attempt = 0; attempt < 200 && (int)out.size() < terms; ++attempt)
	{
		std::vector<Factor> word;
		int w = 0;
		Mask cover = 0;
		int target = m + 1 + (int)(rng() % std::max(1, p.truncation - m));
		while (w < target)
		{
			auto const &g = coords[rng() % coords.size()];
			if (w + g.weight > target)
				break;
			word.push_back({g, 1});
			w += g.weight;
			cover |= g.a;
		}
		if (w <= m || w > p.truncation || cover != full_mask(m))
			continue;
		auto [mono, s] = Monomial::from_word(word);
		if (s == 0)
			continue;
		Rational c((int)(rng() % 5) - 2, 1 + (int)(rng() % 2));
		c.canonicalize();
		out.add_term(mono, c);
	}
	return out;
}

struct CorpusEntry
{
	std::string name;
	FramedPresentation presentation;
	int degree = 1; ///< CE degree the entry supports
};

/// Seeded corpus of valid presentations with ranks <= 2 per degree, degrees <= 3 and truncation <= 4.
inline std::vector<CorpusEntry> fuzz_corpus(std::size_t count, std::uint32_t seed)
{
	std::mt19937 rng(seed);
	std::vector<CorpusEntry> out;
	auto pick = [&](int lo, int hi) { return lo + (int)(rng() % (hi - lo + 1)); };
	while (out.size() < count)
	{
		int degree = pick(1, 3);
		int t = pick(degree + 1, 4);
		int levels = degree + 1;
		FramedPresentation base;
		int kind = (int)(rng() % 5);
		std::size_t dim = (std::size_t)pick(1, 2);
		if (kind == 0)
		{
			std::vector<std::size_t> ranks(degree + 2, 0);
			for (int k = 1; k <= degree + 1; ++k)
				ranks[k] = (std::size_t)pick(k == 1 ? 1 : 0, 2);
			base = linear_presentation(random_complex(ranks, rng), t, levels, "linear");
		}
		else
		{
			GroupLaw law = kind == 1 ? abelian_law(dim) : kind == 2 ? multiplicative_law(dim) : affine_law();
			if (kind == 4)
			{
				std::vector<Polynomial> q;
				auto x = variables('x', law.dim);
				for (std::size_t i = 0; i < law.dim; ++i)
				{
					Polynomial qi;
					for (std::size_t a = 0; a < law.dim; ++a)
						for (std::size_t b = a; b < law.dim; ++b)
							qi += Rational((int)(rng() % 5) - 2) * x[a] * x[b];
					q.push_back(qi);
				}
				law = change_coordinates(law, q, t);
			}
			base = nerve_from_group_law(law, t, levels);
			if (degree >= 2)
			{
				std::vector<std::size_t> ranks(degree + 2, 0);
				for (int k = 2; k <= degree + 1; ++k)
					ranks[k] = (std::size_t)pick(0, 2);
				base = product_with_linear(base, random_complex(ranks, rng));
			}
		}
		// gauge transforms in degrees 1..degree
		for (int m = 1; m <= degree; ++m)
		{
			if (base.rank(m) == 0 || rng() % 3 == 0 || base.truncation <= m)
				continue;
			std::vector<Polynomial> top;
			for (std::size_t l = 0; l < base.rank(m); ++l)
				top.push_back(random_gauge_component(base, m, rng));
			base = gauge_transform(base, m, top);
		}
		bool small = true;
		for (int k = 0; k <= base.tangent.top_degree(); ++k)
			if (base.rank(k) > 2)
				small = false;
		if (!small || base.rank(degree) == 0)
			continue;
		base.name = "fuzz" + std::to_string(out.size()) + ":" + base.name;
		out.push_back({base.name, base, degree});
	}
	return out;
}

} // namespace sdiff::oracles
