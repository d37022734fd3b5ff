#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "sdiff/cochains.hpp"
#include "sdiff/error.hpp"
#include "sdiff/graded_poly.hpp"
#include "sdiff/lie.hpp"
#include "sdiff/linear_algebra.hpp"
#include "sdiff/parallel.hpp"
#include "sdiff/presentation.hpp"

namespace sdiff {

/// One weight slot: spaces C^0..C^top with maps[k] : C^k -> C^{k+1}.
struct CochainPiece
{
	int weight = 0;
	std::vector<std::size_t> dims;
	std::vector<Matrix> maps;
};

struct GradedPieceComplex
{
	std::vector<CochainPiece> pieces;
};

namespace detail {

inline void check_piece(CochainPiece const &c)
{
	for (std::size_t k = 0; k < c.maps.size(); ++k)
	{
		std::size_t next = k + 1 < c.dims.size() ? c.dims[k + 1] : 0;
		if (k >= c.dims.size() || c.maps[k].cols() != c.dims[k] || c.maps[k].rows() != next)
			throw InvalidArgument("differential " + std::to_string(k) + " of weight " + std::to_string(c.weight) +
			                      " has shape " + c.maps[k].shape() + ", dimensions do not match");
	}
	for (std::size_t k = 0; k + 1 < c.maps.size(); ++k)
		if (!(c.maps[k + 1] * c.maps[k]).is_zero())
			throw IdentityViolation("differential squares to nonzero in degree " + std::to_string(k) + " of weight " +
			                        std::to_string(c.weight));
}

inline Matrix piece_map(CochainPiece const &c, int k)
{
	std::size_t src = k >= 0 && k < (int)c.dims.size() ? c.dims[k] : 0;
	std::size_t dst = k + 1 >= 0 && k + 1 < (int)c.dims.size() ? c.dims[k + 1] : 0;
	if (k >= 0 && k < (int)c.maps.size())
		return c.maps[k];
	return Matrix(dst, src);
}

} // namespace detail

/// dim ker - rank of the incoming map, per degree.
inline std::vector<std::size_t> piece_cohomology(CochainPiece const &c)
{
	detail::check_piece(c);
	std::vector<std::size_t> h;
	for (int k = 0; k < (int)c.dims.size(); ++k)
	{
		std::size_t out_rank = rank(detail::piece_map(c, k));
		std::size_t in_rank = k > 0 ? rank(detail::piece_map(c, k - 1)) : 0;
		h.push_back(c.dims[k] - out_rank - in_rank);
	}
	return h;
}

/// Cohomology ranks keyed by (degree, weight).
inline std::map<std::pair<int, int>, std::size_t> cohomology_ranks(GradedPieceComplex const &c)
{
	std::vector<std::vector<std::size_t>> per(c.pieces.size());
	parallel_for(c.pieces.size(), [&](std::size_t i) { per[i] = piece_cohomology(c.pieces[i]); });
	std::map<std::pair<int, int>, std::size_t> out;
	for (std::size_t i = 0; i < c.pieces.size(); ++i)
		for (std::size_t k = 0; k < per[i].size(); ++k)
			out[{(int)k, c.pieces[i].weight}] += per[i][k];
	return out;
}

/// Monomials in the given generators with exactly `factors` factors (all counts if negative) and total degree `degree`.
inline std::vector<Monomial> monomials_of(std::vector<Generator> const &gens, int degree, int factors,
                                          std::function<bool(Monomial const &)> const &keep = {})
{
	std::vector<Monomial> out;
	std::vector<Factor> word;
	std::function<void(std::size_t, int, int)> rec = [&](std::size_t i, int deg, int count) {
		if (deg == degree && (factors < 0 || count == factors))
		{
			auto [m, s] = Monomial::from_word(word);
			if (s != 0 && (!keep || keep(m)))
				out.push_back(m);
		}
		if (i == gens.size() || (factors >= 0 && count >= factors))
			return;
		Generator const &g = gens[i];
		int step = g.kind == GenKind::coordinate ? 0 : g.degree;
		int max_exp = g.squares_to_zero() ? 1 : 64;
		int e = 1;
		for (; e <= max_exp; ++e)
		{
			if (deg + e * step > degree || (factors >= 0 && count + e > factors))
				break;
			if (step == 0 && factors < 0)
				break;
			word.push_back({g, (std::uint32_t)e});
			rec(i + 1, deg + e * step, count + e);
			word.pop_back();
		}
		rec(i + 1, deg, count);
	};
	rec(0, 0, 0);
	std::sort(out.begin(), out.end());
	out.erase(std::unique(out.begin(), out.end()), out.end());
	return out;
}

/// Coordinate vectors of polynomials in a monomial basis; a term outside the basis raises.
inline Matrix coordinates_in(std::vector<Monomial> const &basis, std::vector<Polynomial> const &images, std::string const &what)
{
	std::map<Monomial, std::size_t> index;
	for (std::size_t i = 0; i < basis.size(); ++i)
		index[basis[i]] = i;
	Matrix m(basis.size(), images.size());
	for (std::size_t c = 0; c < images.size(); ++c)
		for (auto const &[mono, coef] : images[c].terms())
		{
			auto it = index.find(mono);
			if (it == index.end())
				throw IdentityViolation(what + " produced " + to_string(mono) + " outside the expected basis");
			m(it->second, c) = coef;
		}
	return m;
}

/// CE complex through the given degree, all generators of degree <= degree + 1, graded by degree only.
inline CochainPiece ce_complex(CEAlgebra const &ce, int max_degree)
{
	require(ce.degree >= max_degree, "CE differential not computed through degree " + std::to_string(max_degree));
	auto gens = ce.generators(max_degree + 1);
	CochainPiece piece;
	std::vector<std::vector<Monomial>> bases;
	for (int k = 0; k <= max_degree + 1; ++k)
	{
		bases.push_back(monomials_of(gens, k, -1));
		piece.dims.push_back(bases.back().size());
	}
	for (int k = 0; k <= max_degree; ++k)
	{
		std::vector<Polynomial> imgs;
		for (auto const &m : bases[k])
			imgs.push_back(apply_derivation(Polynomial::monomial(m), ce.differential, 1, true));
		piece.maps.push_back(coordinates_in(bases[k + 1], imgs, "CE differential"));
	}
	return piece;
}

// ---------------------------------------------------------------------------
// van Est comparison for linear presentations

/// One (degree, factor count) slot of the comparison.
struct VanEstSlot
{
	int degree = 0;
	int factors = 0;
	std::size_t cochain_rank = 0;
	std::size_t ce_rank = 0;
	std::size_t image_rank = 0; ///< rank of the induced map
	bool isomorphism = false;
};

struct VanEstTable
{
	std::vector<VanEstSlot> slots;
	std::vector<std::size_t> cochain_totals; ///< per degree, summed over factor counts
	std::vector<std::size_t> ce_totals;
	CheckReport checks;

	bool all_isomorphisms(int max_degree) const
	{
		for (auto const &s : slots)
			if (s.degree <= max_degree && !s.isomorphism)
				return false;
		return true;
	}
};

/// True if every d0 image equals the linear Dold-Kan face.
inline bool has_linear_faces(FramedPresentation const &p)
{
	for (int n = 1; n <= p.max_level; ++n)
	{
		auto lin = linear_face_pullback(p, n, 0);
		for (auto const &[g, img] : p.d0[n])
			if (!(img == lin.at(g).truncated(p.truncation)))
				return false;
	}
	return true;
}

/// Cohomology of normalized polynomial cochains and of the CE algebra per factor count, and the induced map.
/// Faces preserve the number of coordinate factors, so each count gives a finite complex in levels 0..count*top.
inline VanEstTable vanest_compare(FramedPresentation const &p, int max_degree, int max_weight)
{
	if (!has_linear_faces(p))
		throw NonlinearFace("van Est comparison is limited to presentations whose faces are all linear; '" + p.name +
		                    "' has a nonlinear d0");
	require(max_degree >= 0 && max_weight >= 0, "degree and weight bounds must be nonnegative");
	int top = std::max(1, p.top_degree());
	int levels = max_weight * top;
	require(levels <= 8, "comparison too large: factor count times top degree must be at most 8");
	auto lin = linear_presentation(p.tangent, std::max(1, levels), levels + 1, p.name);
	lin.super_flag = p.super_flag;
	lin.parity = p.parity;
	for (int n = 1; n <= lin.max_level; ++n)
		lin.d0[n] = linear_face_pullback(lin, n, 0);
	CochainEngine eng(lin);

	int ce_top = levels + 1;
	CEAlgebra ce;
	ce.degree = ce_top;
	for (int k = 0; k <= ce_top; ++k)
	{
		ce.ranks.push_back(lin.rank(k));
		std::vector<int> par;
		for (std::size_t l = 0; l < lin.rank(k); ++l)
			par.push_back(lin.coordinate_parity(k, (std::uint32_t)l));
		ce.parity.push_back(par);
	}
	// linear presentation: d xi is the boundary term only
	for (int k = 1; k <= ce_top; ++k)
		for (std::size_t l = 0; l < lin.rank(k); ++l)
		{
			Polynomial d;
			Matrix bd = lin.tangent.d(k + 1);
			for (std::size_t c = 0; c < bd.cols(); ++c)
				if (sgn(bd(l, c)) != 0)
					d.add_term(Monomial(lin.ce_generator(k + 1, (std::uint32_t)c)), bd(l, c));
			ce.differential[lin.ce_generator(k, (std::uint32_t)l)] = d;
		}
	auto ce_gens = ce.generators(ce_top);

	VanEstTable table;
	std::vector<std::vector<VanEstSlot>> per(max_weight + 1);
	std::vector<CheckReport> reports(max_weight + 1);
	parallel_for(max_weight + 1, [&](std::size_t ci) {
		int c = (int)ci;
		int last = c * top;
		std::vector<std::vector<Monomial>> cb(last + 2), eb(last + 2);
		for (int n = 0; n <= last + 1; ++n)
		{
			if (n <= last)
			{
				auto coords = n == 0 ? std::vector<Generator>{} : level_coordinates(lin, n);
				cb[n] = monomials_of(coords, 0, c, [&](Monomial const &m) { return CochainEngine::monomial_cover(m) == full_mask(n); });
			}
			eb[n] = monomials_of(ce_gens, n, c);
		}
		CochainPiece cp, ep;
		cp.weight = ep.weight = c;
		std::vector<Matrix> ve(last + 1);
		bool cochain_map = true, euler = true;
		for (int n = 0; n <= last; ++n)
		{
			cp.dims.push_back(cb[n].size());
			ep.dims.push_back(eb[n].size());
			std::vector<Polynomial> dimgs, vimgs, dv;
			for (auto const &m : cb[n])
			{
				Polynomial f = Polynomial::monomial(m, 1, lin.truncation);
				Polynomial df = eng.delta(f, n);
				dimgs.push_back(df);
				vimgs.push_back(n == 0 ? f.truncated(std::nullopt) : eng.reduce(f, n));
				Polynomial lhs = eng.reduce(df, n + 1);
				Polynomial rhs = apply_derivation(vimgs.back(), ce.differential, 1, true);
				if (!(lhs == rhs))
					cochain_map = false;
			}
			std::vector<Polynomial> eimgs;
			for (auto const &m : eb[n])
				eimgs.push_back(apply_derivation(Polynomial::monomial(m), ce.differential, 1, true));
			if (n < last)
			{
				cp.maps.push_back(coordinates_in(cb[n + 1], dimgs, "simplicial differential"));
				ep.maps.push_back(coordinates_in(eb[n + 1], eimgs, "CE differential"));
			}
			ve[n] = coordinates_in(eb[n], vimgs, "reduction");
		}
		auto hc = piece_cohomology(cp), he = piece_cohomology(ep);
		long ec = 0, ee = 0, hcs = 0, hes = 0;
		for (int n = 0; n <= last; ++n)
		{
			long sgn_n = n % 2 ? -1 : 1;
			ec += sgn_n * (long)cp.dims[n];
			ee += sgn_n * (long)ep.dims[n];
			hcs += sgn_n * (long)hc[n];
			hes += sgn_n * (long)he[n];
		}
		euler = ec == hcs && ee == hes;
		for (int n = 0; n <= std::min(last, max_degree); ++n)
		{
			VanEstSlot s;
			s.degree = n;
			s.factors = c;
			s.cochain_rank = hc[n];
			s.ce_rank = he[n];
			Matrix z = nullspace(detail::piece_map(cp, n));
			Matrix image = ve[n] * z;
			Matrix boundaries = n > 0 ? detail::piece_map(ep, n - 1) : Matrix(ep.dims[n], 0);
			s.image_rank = rank(hstack(image, boundaries)) - rank(boundaries);
			s.isomorphism = s.image_rank == s.cochain_rank && s.image_rank == s.ce_rank;
			per[ci].push_back(s);
		}
		reports[ci].add("reduction is a cochain map for " + std::to_string(c) + " factors", cochain_map);
		reports[ci].add("Euler characteristic for " + std::to_string(c) + " factors", euler);
	});
	table.cochain_totals.assign(max_degree + 1, 0);
	table.ce_totals.assign(max_degree + 1, 0);
	for (int c = 0; c <= max_weight; ++c)
	{
		for (auto const &s : per[c])
		{
			table.slots.push_back(s);
			table.cochain_totals[s.degree] += s.cochain_rank;
			table.ce_totals[s.degree] += s.ce_rank;
		}
		for (auto const &ch : reports[c].checks)
			table.checks.checks.push_back(ch);
	}
	return table;
}

} // namespace sdiff
