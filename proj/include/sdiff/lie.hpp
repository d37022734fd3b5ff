#pragma once

#include <map>
#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sdiff/cochains.hpp"
#include "sdiff/combinatorics.hpp"
#include "sdiff/error.hpp"
#include "sdiff/graded_poly.hpp"
#include "sdiff/linear_algebra.hpp"
#include "sdiff/parallel.hpp"
#include "sdiff/presentation.hpp"

namespace sdiff {

/// Binary brackets are read as [e_a, e_b] = bracket_sign * (coefficient of xi_a xi_b in d xi_c), a < b.
inline constexpr int bracket_sign = 1;

struct Check
{
	std::string name;
	bool passed = true;
	std::string detail;
};

struct CheckReport
{
	std::vector<Check> checks;

	bool passed() const
	{
		for (auto const &c : checks)
			if (!c.passed)
				return false;
		return true;
	}
	void add(std::string name, bool ok, std::string detail = {}) { checks.push_back({std::move(name), ok, std::move(detail)}); }
	std::optional<Check> first_failure() const
	{
		for (auto const &c : checks)
			if (!c.passed)
				return c;
		return std::nullopt;
	}
};

namespace detail {

inline std::string first_term(Polynomial const &p)
{
	if (p.is_zero())
		return "0";
	auto const &[m, c] = *p.terms().begin();
	return to_string(c) + "*" + to_string(m);
}

/// Substitution of a map's images into another map's images.
inline std::map<Generator, Polynomial> compose_maps(std::map<Generator, Polynomial> const &first,
                                                    std::map<Generator, Polynomial> const &then, int t)
{
	std::map<Generator, Polynomial> out;
	for (auto const &[g, img] : first)
		out.emplace(g, img.substitute(then, t));
	return out;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Validation

/// Structural and identity checks of a framed presentation; failures name the identity and a witness term.
inline CheckReport validate_presentation(FramedPresentation const &p)
{
	CheckReport rep;
	bool square_zero = true;
	for (int k = 2; k <= p.tangent.top_degree(); ++k)
		if (!(p.tangent.d(k - 1) * p.tangent.d(k)).is_zero())
			square_zero = false;
	rep.add("boundary squares to zero", square_zero);
	rep.add("tangent complex vanishes in degree 0", p.tangent.rank(0) == 0);
	rep.add("truncation is positive", p.truncation >= 1);

	bool keys_ok = (int)p.d0.size() >= p.max_level + 1;
	std::string key_detail;
	for (int n = 1; keys_ok && n <= p.max_level; ++n)
	{
		auto coords = level_coordinates(p, n - 1);
		if (p.d0[n].size() != coords.size())
		{
			keys_ok = false;
			key_detail = "level " + std::to_string(n) + " has " + std::to_string(p.d0[n].size()) + " entries, expected " +
			             std::to_string(coords.size());
		}
		for (auto const &g : coords)
			if (keys_ok && !p.d0[n].count(g))
			{
				keys_ok = false;
				key_detail = "level " + std::to_string(n) + " lacks " + to_string(g);
			}
	}
	rep.add("d0 defined on every coordinate", keys_ok, key_detail);
	if (!keys_ok || p.tangent.rank(0) != 0)
		return rep;

	// every d0 image is a truncated polynomial in the coordinates of its level
	bool range_ok = true;
	std::string range_detail;
	for (int n = 1; n <= p.max_level && range_ok; ++n)
	{
		auto coords = level_coordinates(p, n);
		std::set<Generator> allowed(coords.begin(), coords.end());
		for (auto const &[g, img] : p.d0[n])
			for (auto const &[m, c] : img.terms())
			{
				if (m.weight() > p.truncation && range_ok)
				{
					range_ok = false;
					range_detail = "term " + to_string(m) + " of " + to_string(g) + " exceeds the truncation";
				}
				for (auto const &f : m.factors())
					if (!allowed.count(f.gen) && range_ok)
					{
						range_ok = false;
						range_detail = "term " + to_string(m) + " of " + to_string(g) + " is not in level " + std::to_string(n) +
						               " coordinates";
					}
			}
	}
	rep.add("d0 images lie in the truncated coordinate ring", range_ok, range_detail);
	if (!range_ok)
		return rep;

	bool linear_ok = true, leading_ok = true;
	std::string linear_detail, leading_detail;
	for (int n = 1; n <= p.max_level; ++n)
	{
		auto lin = linear_face_pullback(p, n, 0);
		for (auto const &[g, img] : p.d0[n])
		{
			Polynomial linear_part, expected = lin.at(g).truncated(p.truncation);
			for (auto const &[m, c] : img.terms())
			{
				if (m.total_exponent() == 1)
					linear_part.add_term(m, c);
				else if (m.total_exponent() == 0)
				{
					if (linear_ok)
						linear_detail = "constant term in d0 of " + to_string(g);
					linear_ok = false;
				}
				else
				{
					Mask need = coface_mask(g.a, 0) | element_bit(1);
					if ((CochainEngine::monomial_cover(m) & need) != need)
					{
						if (leading_ok)
							leading_detail = "term " + to_string(m) + " of " + to_string(g) + " at level " + std::to_string(n) +
							                 " does not cover " + mask_to_string(need);
						leading_ok = false;
					}
				}
			}
			if (!(linear_part == expected))
			{
				if (linear_ok)
					linear_detail = "linear part of d0 of " + to_string(g) + " at level " + std::to_string(n) + " is " +
					                to_string(linear_part) + ", expected " + to_string(expected);
				linear_ok = false;
			}
		}
	}
	rep.add("linear part of d0 is the Dold-Kan face", linear_ok, linear_detail);
	rep.add("nonlinear d0 terms cover the shifted block and 1", leading_ok, leading_detail);
	if (!linear_ok)
		return rep;

	CochainEngine eng(p);
	int t = p.truncation;
	auto record = [&](std::string const &name, std::map<Generator, Polynomial> const &lhs,
	                  std::map<Generator, Polynomial> const &rhs) {
		for (auto const &[g, img] : lhs)
		{
			Polynomial diff = img - rhs.at(g);
			if (!diff.is_zero())
			{
				rep.add(name, false, "on " + to_string(g) + ": residue " + detail::first_term(diff) + " ...");
				return;
			}
		}
		rep.add(name, true);
	};
	// faces: d_0 d_j = d_{j-1} d_0 as maps from level n to level n-2
	for (int n = 3; n <= p.max_level; ++n)
		for (int j = 1; j <= n; ++j)
		{
			auto lhs = detail::compose_maps(eng.face_map(n - 1, 0), eng.face_map(n, j), t);
			auto rhs = detail::compose_maps(eng.face_map(n - 1, j - 1), eng.face_map(n, 0), t);
			record("d0 d" + std::to_string(j) + " = d" + std::to_string(j - 1) + " d0 at level " + std::to_string(n), lhs, rhs);
		}
	// degeneracies: d_0 s_0 = id and d_0 s_j = s_{j-1} d_0 on level n-1
	for (int n = 2; n <= p.max_level; ++n)
	{
		if (n - 1 >= p.max_level)
			break;
		auto d0 = eng.face_map(n, 0);
		{
			auto lhs = detail::compose_maps(d0, eng.degeneracy_map(n - 1, 0), t);
			std::map<Generator, Polynomial> id;
			for (auto const &[g, img] : lhs)
				id.emplace(g, Polynomial::generator(g, t));
			record("d0 s0 = id at level " + std::to_string(n - 1), lhs, id);
		}
		for (int j = 1; j <= n - 1; ++j)
		{
			auto lhs = detail::compose_maps(d0, eng.degeneracy_map(n - 1, j), t);
			auto rhs = detail::compose_maps(eng.degeneracy_map(n - 2, j - 1), eng.face_map(n - 1, 0), t);
			record("d0 s" + std::to_string(j) + " = s" + std::to_string(j - 1) + " d0 at level " + std::to_string(n - 1), lhs, rhs);
		}
	}
	return rep;
}

// ---------------------------------------------------------------------------
// Chevalley-Eilenberg differential

enum class CEPath
{
	direct,
	via_delta
};

inline void require_ce_data(CochainEngine const &eng, int n)
{
	auto const &p = eng.presentation();
	if (p.truncation < n + 1)
		throw InsufficientTruncation("truncation insufficient: degree " + std::to_string(n) + " needs weight " +
		                             std::to_string(n + 1) + ", presentation keeps " + std::to_string(p.truncation));
	if (p.max_level < n + 1)
		throw InsufficientTruncation("truncation insufficient: degree " + std::to_string(n) + " needs level " +
		                             std::to_string(n + 1) + " data, presentation stops at " + std::to_string(p.max_level));
}

/// d xi from the Taylor coefficients of x o d_0: the boundary term plus, for each nontrivial integer partition of n+1,
/// the signed sum of multilinear coefficients over every labeled set partition of that shape.
inline Polynomial ce_differential_direct(CochainEngine const &eng, int n, std::uint32_t label)
{
	auto const &p = eng.presentation();
	require(n >= 1 && label < p.rank(n), "no CE generator of degree " + std::to_string(n) + " with label " + std::to_string(label));
	require_ce_data(eng, n);
	Polynomial out;
	Matrix bd = p.tangent.d(n + 1);
	for (std::size_t l = 0; l < bd.cols(); ++l)
		if (sgn(bd(label, l)) != 0)
			out.add_term(Monomial(p.ce_generator(n + 1, (std::uint32_t)l)), bd(label, l));

	Polynomial const &f = p.d0[n + 1].at(p.coordinate(full_mask(n), label));
	int level = n + 1;
	for_each_set_partition(level, [&](std::vector<Mask> const &blocks) {
		if (blocks.size() < 2)
			return;
		std::vector<std::size_t> ranks;
		for (Mask b : blocks)
		{
			ranks.push_back(p.rank(mask_size(b)));
			if (ranks.back() == 0)
				return;
		}
		std::vector<std::uint32_t> labels(blocks.size(), 0);
		for (;;)
		{
			std::vector<Factor> word;
			std::vector<LabeledBlock> lb;
			std::vector<int> parities;
			for (std::size_t t = 0; t < blocks.size(); ++t)
			{
				Generator g = p.coordinate(blocks[t], labels[t]);
				word.push_back({g, 1});
				lb.push_back({blocks[t], labels[t]});
				parities.push_back(g.parity);
			}
			auto [mono, ws] = Monomial::from_word(word);
			if (ws != 0)
			{
				Rational c = f.multilinear_coefficient(mono) * ws;
				if (sgn(c) != 0)
				{
					auto u = unravel(LabeledBlockSequence(level, lb), parities);
					if (u.sign != 0)
					{
						std::vector<Factor> target;
						for (auto const &b : u.canonical.blocks)
							target.push_back({p.ce_generator(mask_size(b.block), b.label), 1});
						auto [tm, ts] = Monomial::from_word(target);
						if (ts != 0)
							out.add_term(tm, c * u.sign * ts);
					}
				}
			}
			std::size_t t = 0;
			while (t < labels.size() && ++labels[t] == ranks[t])
				labels[t++] = 0;
			if (t == labels.size())
				break;
		}
	});
	return out;
}

/// d xi as the class of the simplicial differential of the top coordinate.
inline Polynomial ce_differential_via_delta(CochainEngine const &eng, int n, std::uint32_t label)
{
	auto const &p = eng.presentation();
	require(n >= 1 && label < p.rank(n), "no CE generator of degree " + std::to_string(n) + " with label " + std::to_string(label));
	require_ce_data(eng, n);
	Polynomial d = eng.delta(eng.coordinate(full_mask(n), label), n);
	if (!eng.is_normalized(d, n + 1))
		throw IdentityViolation("simplicial differential of x" + mask_to_string(full_mask(n)) + "." + std::to_string(label) +
		                        " is not normalized; the presentation violates the simplicial identities");
	return eng.reduce(d, n + 1);
}

/// Semi-free graded-commutative algebra with generators per degree and their differentials.
struct CEAlgebra
{
	std::string name;
	std::vector<std::size_t> ranks; ///< ranks[k] generators of degree k
	std::vector<std::vector<int>> parity;
	int degree = 0;                 ///< differentials are known on generators of degree <= degree
	std::map<Generator, Polynomial> differential;

	std::size_t rank(int k) const { return k >= 0 && k < (int)ranks.size() ? ranks[k] : 0; }
	Generator generator(int k, std::uint32_t l) const
	{
		int par = k < (int)parity.size() && l < parity[k].size() ? parity[k][l] : 0;
		return Generator::ce(k, l, par);
	}
	std::vector<Generator> generators(int max_degree) const
	{
		std::vector<Generator> out;
		for (int k = 1; k <= max_degree; ++k)
			for (std::size_t l = 0; l < rank(k); ++l)
				out.push_back(generator(k, (std::uint32_t)l));
		return out;
	}
};

/// CE algebra through the given degree; generators of degree above the tangent complex are absent.
inline CEAlgebra compute_ce(CochainEngine const &eng, int max_degree, CEPath path = CEPath::direct)
{
	auto const &p = eng.presentation();
	CEAlgebra ce;
	ce.name = p.name;
	ce.degree = max_degree;
	for (int k = 0; k <= std::max(max_degree + 1, p.tangent.top_degree()); ++k)
	{
		ce.ranks.push_back(p.rank(k));
		std::vector<int> par;
		for (std::size_t l = 0; l < p.rank(k); ++l)
			par.push_back(p.coordinate_parity(k, (std::uint32_t)l));
		ce.parity.push_back(par);
	}
	std::vector<std::pair<int, std::uint32_t>> jobs;
	for (int k = 1; k <= max_degree; ++k)
		for (std::size_t l = 0; l < p.rank(k); ++l)
			jobs.push_back({k, (std::uint32_t)l});
	std::vector<Polynomial> results(jobs.size());
	parallel_for(jobs.size(), [&](std::size_t i) {
		auto [k, l] = jobs[i];
		results[i] = path == CEPath::direct ? ce_differential_direct(eng, k, l) : ce_differential_via_delta(eng, k, l);
	});
	for (std::size_t i = 0; i < jobs.size(); ++i)
		ce.differential[p.ce_generator(jobs[i].first, jobs[i].second)] = results[i];
	return ce;
}

/// d(d xi) = 0 for every generator whose differential only involves generators with known differentials.
inline CheckReport check_d_squared(CEAlgebra const &ce, int up_to_degree)
{
	CheckReport rep;
	for (auto const &g : ce.generators(std::min(up_to_degree, ce.degree)))
	{
		auto const &dg = ce.differential.at(g);
		bool known = true;
		for (auto const &[m, c] : dg.terms())
			for (auto const &f : m.factors())
				if (!ce.differential.count(f.gen))
					known = false;
		std::string name = "d^2 " + to_string(g) + " = 0";
		if (!known)
		{
			rep.add(name, false, "differential of a generator in d " + to_string(g) + " is not computed");
			continue;
		}
		Polynomial dd = apply_derivation(dg, ce.differential, 1, true);
		rep.add(name, dd.is_zero(), dd.is_zero() ? "" : "residue " + to_string(dd));
	}
	return rep;
}

/// Coefficients of canonical monomials of the given generator degrees in the differentials of degree sum - 1.
struct BracketTable
{
	std::vector<int> degrees;
	/// (input labels in canonical order, output label) -> structure constant
	std::map<std::pair<std::vector<std::uint32_t>, std::uint32_t>, Rational> entries;
};

inline BracketTable bracket_table(CEAlgebra const &ce, std::vector<int> degrees)
{
	std::sort(degrees.begin(), degrees.end());
	BracketTable t;
	t.degrees = degrees;
	int total = 0;
	for (int k : degrees)
		total += k;
	int out_deg = total - 1;
	require(out_deg >= 1 && out_deg <= ce.degree, "bracket degrees outside the computed range");
	for (std::size_t target = 0; target < ce.rank(out_deg); ++target)
	{
		auto const &dg = ce.differential.at(ce.generator(out_deg, (std::uint32_t)target));
		for (auto const &[m, c] : dg.terms())
		{
			std::vector<int> ds;
			std::vector<std::uint32_t> labels;
			for (auto const &f : m.factors())
				for (std::uint32_t e = 0; e < f.exp; ++e)
				{
					ds.push_back(f.gen.degree);
					labels.push_back(f.gen.b);
				}
			if (ds == degrees)
				t.entries[{labels, (std::uint32_t)target}] = bracket_sign * c;
		}
	}
	return t;
}

/// Binary bracket on degree-1 generators as a full antisymmetric constant table.
inline std::vector<std::vector<std::vector<Rational>>> lie_bracket(CEAlgebra const &ce)
{
	std::size_t m = ce.rank(1);
	std::vector<std::vector<std::vector<Rational>>> c(m, std::vector<std::vector<Rational>>(m, std::vector<Rational>(m)));
	if (m == 0)
		return c;
	auto t = bracket_table(ce, {1, 1});
	for (auto const &[key, v] : t.entries)
	{
		auto a = key.first[0], b = key.first[1];
		c[a][b][key.second] = v;
		c[b][a][key.second] = -v;
	}
	return c;
}

// ---------------------------------------------------------------------------
// Inclusion-exclusion extension

/// Glues polynomial maps g_j given on the images of commuting projections pi_j into
/// g = sum over nonempty index sets a of (-1)^{|a|+1} g_a o pi_a, where g_a is g_j o pi_a for any j in a.
/// Maps and projections act on the variables v_0 .. v_{dim-1}.
inline Polynomial inclusion_exclusion_extend(std::vector<Matrix> const &projections, std::vector<Polynomial> const &partial,
                                             std::size_t dim)
{
	std::size_t k = projections.size();
	require(k >= 1 && k == partial.size() && k <= 16, "need between 1 and 16 projections, one map each");
	for (std::size_t j = 0; j < k; ++j)
	{
		require(projections[j].rows() == dim && projections[j].cols() == dim, "projection size mismatch");
		require(projections[j] * projections[j] == projections[j], "matrix " + std::to_string(j) + " is not a projection");
		for (std::size_t i = 0; i < j; ++i)
			require(projections[i] * projections[j] == projections[j] * projections[i], "projections do not commute");
	}
	auto as_map = [&](Matrix const &pi) {
		std::map<Generator, Polynomial> a;
		for (std::size_t r = 0; r < dim; ++r)
		{
			Polynomial img;
			for (std::size_t c = 0; c < dim; ++c)
				if (sgn(pi(r, c)) != 0)
					img.add_term(Monomial(Generator::variable('v', (std::uint32_t)c)), pi(r, c));
			a[Generator::variable('v', (std::uint32_t)r)] = img;
		}
		return a;
	};
	Polynomial g;
	for (std::uint32_t set = 1; set < (1u << k); ++set)
	{
		Matrix pi = Matrix::identity(dim);
		std::vector<std::size_t> members;
		for (std::size_t j = 0; j < k; ++j)
			if (set & (1u << j))
			{
				pi = pi * projections[j];
				members.push_back(j);
			}
		auto sub = as_map(pi);
		Polynomial ga = partial[members[0]].substitute(sub);
		for (std::size_t t = 1; t < members.size(); ++t)
		{
			Polynomial other = partial[members[t]].substitute(sub);
			if (!(other == ga))
				throw IdentityViolation("maps " + std::to_string(members[0]) + " and " + std::to_string(members[t]) +
				                        " disagree on their common subspace: difference " + to_string(ga - other));
		}
		if (members.size() % 2 == 1)
			g += ga;
		else
			g -= ga;
	}
	return g;
}

// ---------------------------------------------------------------------------
// Weil extension

/// Bigraded algebra on xi (bidegree (n, 0)) and d_v xi (bidegree (n, 1)) with both differentials on generators.
struct WeilAlgebra
{
	CEAlgebra ce;
	std::map<Generator, Polynomial> vertical;
	std::map<Generator, Polynomial> horizontal;
};

inline Generator vertical_partner(Generator const &g) { return Generator::weil_dv(g.degree, g.b, g.parity); }

inline WeilAlgebra weil_extension(CEAlgebra const &ce)
{
	WeilAlgebra w;
	w.ce = ce;
	for (auto const &g : ce.generators(ce.degree))
	{
		Generator dg = vertical_partner(g);
		w.vertical[g] = Polynomial::generator(dg);
		w.vertical[dg] = Polynomial();
	}
	for (auto const &g : ce.generators(ce.degree))
	{
		auto const &d = ce.differential.at(g);
		w.horizontal[g] = d;
		w.horizontal[vertical_partner(g)] = -apply_derivation(d, w.vertical, 1);
	}
	return w;
}

/// d_v^2 = 0, d_h d_v + d_v d_h = 0 and d_h^2 = 0 on every generator where all images are defined.
inline CheckReport check_weil(WeilAlgebra const &w)
{
	CheckReport rep;
	for (auto const &[g, img] : w.vertical)
	{
		Polynomial vv = apply_derivation(img, w.vertical, 1);
		rep.add("d_v^2 " + to_string(g) + " = 0", vv.is_zero(), vv.is_zero() ? "" : to_string(vv));
		bool defined = true;
		for (auto const &side : {img, w.horizontal.at(g)})
			for (auto const &[m, c] : side.terms())
				for (auto const &f : m.factors())
					if (!w.horizontal.count(f.gen) || !w.vertical.count(f.gen))
						defined = false;
		if (!defined)
			continue;
		Polynomial anti = apply_derivation(w.horizontal.at(g), w.vertical, 1) + apply_derivation(img, w.horizontal, 1);
		rep.add("d_h d_v + d_v d_h on " + to_string(g) + " = 0", anti.is_zero(), anti.is_zero() ? "" : to_string(anti));
		Polynomial hh = apply_derivation(w.horizontal.at(g), w.horizontal, 1);
		rep.add("d_h^2 " + to_string(g) + " = 0", hh.is_zero(), hh.is_zero() ? "" : to_string(hh));
	}
	return rep;
}

/// Number of monomials in the free bigraded algebra with weight p and q vertical factors.
inline std::map<std::pair<int, int>, std::size_t> weil_monomial_counts(WeilAlgebra const &w, int max_total)
{
	std::vector<Generator> gens;
	for (auto const &[g, img] : w.vertical)
		gens.push_back(g);
	std::map<std::pair<int, int>, std::size_t> counts;
	std::function<void(std::size_t, int, int)> rec = [&](std::size_t i, int p, int q) {
		if (p + q > max_total)
			return;
		if (i == gens.size())
		{
			++counts[{p, q}];
			return;
		}
		Generator const &g = gens[i];
		int dp = g.weight, dq = g.kind == GenKind::weil_dv ? 1 : 0;
		int max_exp = g.squares_to_zero() ? 1 : max_total;
		for (int e = 0; e <= max_exp; ++e)
		{
			if (p + e * dp + q + e * dq > max_total)
				break;
			rec(i + 1, p + e * dp, q + e * dq);
			if (dp + dq == 0)
				break;
		}
	};
	rec(0, 0, 0);
	return counts;
}

} // namespace sdiff
