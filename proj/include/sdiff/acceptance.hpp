#pragma once

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "sdiff/abstract.hpp"
#include "sdiff/cochains.hpp"
#include "sdiff/cohomology.hpp"
#include "sdiff/combinatorics.hpp"
#include "sdiff/dold_kan.hpp"
#include "sdiff/io.hpp"
#include "sdiff/lie.hpp"
#include "sdiff/oracles/corpus.hpp"
#include "sdiff/oracles/dga_corpus.hpp"
#include "sdiff/oracles/group_law.hpp"
#include "sdiff/oracles/relation_span.hpp"
#include "sdiff/oracles/unravel_search.hpp"

namespace sdiff::acceptance {

struct Fixture
{
	std::string file;
	io::InputFile input;
};

/// Every *.json file of the directory, in file name order; raises naming the first bad file.
inline std::vector<Fixture> load_fixtures(std::string const &dir)
{
	namespace fs = std::filesystem;
	if (!fs::is_directory(dir))
		throw InvalidArgument("fixture directory " + dir + " does not exist");
	std::vector<std::string> files;
	for (auto const &e : fs::directory_iterator(dir))
		if (e.is_regular_file() && e.path().extension() == ".json")
			files.push_back(e.path().string());
	std::sort(files.begin(), files.end());
	std::vector<Fixture> out;
	for (auto const &f : files)
		out.push_back({fs::path(f).filename().string(), io::load_input(f)});
	return out;
}

struct Context
{
	std::vector<Fixture> fixtures;

	Fixture const &named(std::string const &file) const
	{
		for (auto const &f : fixtures)
			if (f.file == file)
				return f;
		throw InvalidArgument("missing fixture " + file);
	}
	std::vector<Fixture const *> presentations() const
	{
		std::vector<Fixture const *> out;
		for (auto const &f : fixtures)
			if (f.input.presentation)
				out.push_back(&f);
		return out;
	}
};

struct Outcome
{
	bool passed = true;
	std::string detail;

	void fail(std::string const &what)
	{
		if (passed)
			detail = what;
		passed = false;
	}
};

struct Criterion
{
	int id;
	std::string key;
	std::string title;
	double budget_seconds; ///< 0 when no runtime bound applies
	std::function<Outcome(Context const &)> run;
};

struct Verdict
{
	int id;
	std::string key;
	std::string title;
	bool passed;
	std::string detail;
	double seconds;
};

/// Highest CE degree a presentation supports, capped at `cap`.
inline int supported_degree(FramedPresentation const &p, int cap)
{
	return std::min({cap, p.truncation - 1, p.max_level - 1});
}

/// Random normalized level-n cochain with several terms.
inline Polynomial random_normalized(CochainEngine const &eng, int n, std::mt19937 &rng)
{
	auto coords = level_coordinates(eng.presentation(), n);
	Polynomial f = eng.zero();
	for (int t = 0; t < 5; ++t)
	{
		Rational c((int)(rng() % 7) - 3, 1 + (int)(rng() % 3));
		c.canonicalize();
		Polynomial m = eng.constant(c);
		int k = 1 + (int)(rng() % 3);
		for (int i = 0; i < k; ++i)
			m = m * Polynomial::generator(coords[rng() % coords.size()], eng.truncation());
		f += m;
	}
	return eng.normalize_retract(f, n);
}

/// Dimension of the span of reduced partition monomials at level n for a complex with zero boundary.
inline std::size_t reduced_partition_dimension(int n, std::vector<std::size_t> const &ranks)
{
	auto p = linear_presentation(ChainComplex(ranks, {}), n, n);
	CochainEngine eng(p);
	std::map<Monomial, std::size_t> index;
	std::vector<std::map<Monomial, Rational>> rows;
	for_each_set_partition(n, [&](std::vector<Mask> const &blocks) {
		std::vector<std::size_t> r;
		for (Mask b : blocks)
			r.push_back(p.rank(mask_size(b)));
		for (auto x : r)
			if (x == 0)
				return;
		std::vector<std::uint32_t> labels(blocks.size(), 0);
		for (;;)
		{
			Polynomial m = eng.constant(1);
			for (std::size_t t = 0; t < blocks.size(); ++t)
				m = m * eng.coordinate(blocks[t], labels[t]);
			Polynomial reduced = eng.reduce(m, n);
			std::map<Monomial, Rational> row;
			for (auto const &[mono, c] : reduced.terms())
			{
				index.emplace(mono, index.size());
				row[mono] = c;
			}
			rows.push_back(row);
			std::size_t t = 0;
			while (t < labels.size() && ++labels[t] == r[t])
				labels[t++] = 0;
			if (t == labels.size())
				break;
		}
	});
	std::vector<Vector> cols;
	for (auto const &row : rows)
	{
		Vector v(index.size());
		for (auto const &[m, c] : row)
			v[index.at(m)] = c;
		cols.push_back(v);
	}
	return cols.empty() ? 0 : rank(Matrix::from_columns(index.size(), cols));
}

/// Chain complex with the given ranks and random boundaries composing to zero.
inline ChainComplex random_chain_complex(std::vector<std::size_t> const &ranks, std::mt19937 &rng)
{
	std::vector<Matrix> maps;
	Matrix prev;
	for (std::size_t k = 1; k < ranks.size(); ++k)
	{
		Matrix d(ranks[k - 1], ranks[k]);
		if (k == 1 || prev.cols() == 0)
		{
			for (std::size_t i = 0; i < d.rows(); ++i)
				for (std::size_t j = 0; j < d.cols(); ++j)
					d(i, j) = (int)(rng() % 5) - 2;
		}
		else
		{
			Matrix ker = nullspace(prev);
			Matrix coeffs(ker.cols(), ranks[k]);
			for (std::size_t i = 0; i < coeffs.rows(); ++i)
				for (std::size_t j = 0; j < coeffs.cols(); ++j)
					coeffs(i, j) = (int)(rng() % 3) - 1;
			if (ker.cols() > 0)
				d = ker * coeffs;
		}
		maps.push_back(d);
		prev = d;
	}
	return ChainComplex(ranks, maps);
}

inline std::size_t binomial(std::size_t n, std::size_t k)
{
	if (k > n)
		return 0;
	std::size_t r = 1;
	for (std::size_t i = 1; i <= k; ++i)
		r = r * (n - k + i) / i;
	return r;
}

// ---------------------------------------------------------------------------

inline Outcome abelian_example(Context const &ctx)
{
	Outcome o;
	auto const &p = *ctx.named("abelian_r1.json").input.presentation;
	CochainEngine eng(p);
	Polynomial x = eng.coordinate(element_bit(1), 0);
	Polynomial got = eng.delta(x * x, 1);
	Polynomial y1 = eng.coordinate(element_bit(1), 0), y2 = eng.coordinate(element_bit(2), 0);
	Polynomial expected = Rational(-2) * y1 * y2;
	if (!(got == expected))
		o.fail("delta(x^2) = " + to_string(got) + ", expected " + to_string(expected));
	auto ce = compute_ce(eng, supported_degree(p, 3));
	if (ce.rank(1) != 1)
		o.fail("CE has " + std::to_string(ce.rank(1)) + " generators in degree 1");
	for (int k = 2; k <= ce.degree; ++k)
		if (ce.rank(k) != 0)
			o.fail("CE has generators in degree " + std::to_string(k));
	for (auto const &[g, d] : ce.differential)
		if (!d.is_zero())
			o.fail("d" + to_string(g) + " = " + to_string(d));
	if (o.passed)
		o.detail = "delta(x^2) = " + to_string(got) + "; d xi1.0 = 0";
	return o;
}

inline Outcome heisenberg_bracket(Context const &ctx)
{
	Outcome o;
	auto const &p = *ctx.named("heisenberg.json").input.presentation;
	CochainEngine eng(p);
	auto ce = compute_ce(eng, 1);
	auto got = lie_bracket(ce);
	auto expected = oracles::commutator_constants(oracles::heisenberg_matrices());
	for (std::size_t a = 0; a < expected.size(); ++a)
		for (std::size_t b = 0; b < expected.size(); ++b)
			for (std::size_t c = 0; c < expected.size(); ++c)
				if (got[a][b][c] != expected[a][b][c])
					o.fail("[e" + std::to_string(a) + ", e" + std::to_string(b) + "] component " + std::to_string(c) + " is " +
					       to_string(got[a][b][c]) + ", commutator gives " + to_string(expected[a][b][c]));
	if (o.passed)
		o.detail = "[e0, e1] = e2, all other brackets 0; bracket sign " + std::to_string(bracket_sign) + ", d xi1.2 = " +
		           to_string(ce.differential.at(ce.generator(1, 2)));
	return o;
}

inline Outcome dual_paths(Context const &ctx)
{
	Outcome o;
	std::vector<std::pair<std::string, FramedPresentation>> inputs;
	for (auto const *f : ctx.presentations())
		inputs.push_back({f->file, *f->input.presentation});
	std::size_t fixtures = inputs.size();
	for (auto const &e : oracles::fuzz_corpus(120, 2024))
		inputs.push_back({e.name, e.presentation});
	std::vector<std::string> failures(inputs.size());
	std::vector<int> nonlinear(inputs.size(), 0);
	parallel_for(inputs.size(), [&](std::size_t i) {
		auto const &[name, p] = inputs[i];
		int degree = supported_degree(p, 3);
		if (degree < 1)
			return;
		try
		{
			CochainEngine eng(p);
			auto a = compute_ce(eng, degree, CEPath::direct);
			auto b = compute_ce(eng, degree, CEPath::via_delta);
			for (auto const &[g, d] : a.differential)
			{
				if (!(d == b.differential.at(g)))
				{
					failures[i] = name + ": d" + to_string(g) + " direct " + to_string(d) + " vs delta " + to_string(b.differential.at(g));
					return;
				}
				for (auto const &[m, c] : d.terms())
					if (m.total_exponent() >= 2)
						nonlinear[i] = 1;
			}
		}
		catch (Error const &e)
		{
			failures[i] = name + ": " + e.what();
		}
	});
	for (auto const &f : failures)
		if (!f.empty())
			o.fail(f);
	if (o.passed)
	{
		int nl = 0;
		for (int v : nonlinear)
			nl += v;
		o.detail = std::to_string(fixtures) + " fixtures and " + std::to_string(inputs.size() - fixtures) +
		           " fuzzed presentations agree (" + std::to_string(nl) + " with nonlinear differentials)";
	}
	return o;
}

inline Outcome semi_freeness(Context const &)
{
	Outcome o;
	std::vector<std::vector<std::size_t>> shapes;
	for (std::size_t r1 = 0; r1 <= 2; ++r1)
		for (std::size_t r2 = 0; r2 <= 2; ++r2)
			for (std::size_t r3 = 0; r3 <= 2; ++r3)
				for (std::size_t r4 = 0; r4 <= 2; ++r4)
					shapes.push_back({0, r1, r2, r3, r4});
	std::vector<std::string> failures(shapes.size());
	parallel_for(shapes.size(), [&](std::size_t i) {
		auto const &ranks = shapes[i];
		for (int n = 1; n <= 4; ++n)
		{
			auto rs = oracles::relation_span_rank(n, ranks);
			auto engine = reduced_partition_dimension(n, ranks);
			if (engine != rs.corank_delta || engine != rs.corank_transpositions)
			{
				failures[i] = "ranks (" + std::to_string(ranks[1]) + "," + std::to_string(ranks[2]) + "," + std::to_string(ranks[3]) + "," +
				              std::to_string(ranks[4]) + ") n=" + std::to_string(n) + ": engine " + std::to_string(engine) +
				              ", oracle " + std::to_string(rs.corank_delta) + "/" + std::to_string(rs.corank_transpositions);
				return;
			}
		}
	});
	for (auto const &f : failures)
		if (!f.empty())
			o.fail(f);
	if (o.passed)
		o.detail = std::to_string(shapes.size()) + " rank shapes, levels 1..4";
	return o;
}

inline Outcome dga_certificate(Context const &ctx)
{
	Outcome o;
	std::size_t pairs = 0, checked = 0;
	std::mt19937 rng(5);
	for (auto const *f : ctx.presentations())
	{
		auto const &p = *f->input.presentation;
		int degree = supported_degree(p, 3);
		if (degree < 1)
			continue;
		CochainEngine eng(p);
		auto ce = compute_ce(eng, degree);
		auto rep = check_d_squared(ce, 3);
		if (auto bad = rep.first_failure())
			o.fail(f->file + ": " + bad->name + " " + bad->detail);
		++checked;
		if (p.super_flag)
			continue;
		int top = std::min(p.truncation, p.max_level);
		for (int trial = 0; trial < 40; ++trial)
		{
			int pd = 1 + (int)(rng() % 2), qd = 1 + (int)(rng() % 2);
			if (pd + qd > top)
				continue;
			Polynomial a = random_normalized(eng, pd, rng), b = random_normalized(eng, qd, rng);
			Polynomial ab = eng.reduce(eng.cup(a, pd, b, qd), pd + qd);
			Polynomial ba = eng.reduce(eng.cup(b, qd, a, pd), pd + qd);
			if ((pd * qd) % 2)
				ba *= Rational(-1);
			if (!(ab == ba))
				o.fail(f->file + ": reduced cup products do not commute for degrees " + std::to_string(pd) + ", " + std::to_string(qd));
			++pairs;
		}
	}
	if (pairs < 100)
		o.fail("only " + std::to_string(pairs) + " commutativity pairs checked");
	if (o.passed)
		o.detail = std::to_string(checked) + " fixtures with d^2 = 0, " + std::to_string(pairs) + " graded-commutative pairs";
	return o;
}

inline Outcome dold_kan_round_trips(Context const &)
{
	Outcome o;
	std::mt19937 rng(11);
	std::size_t count = 0;
	for (std::size_t r0 = 0; r0 <= 3; ++r0)
		for (std::size_t r1 = 0; r1 <= 3; ++r1)
			for (std::size_t r2 = 0; r2 <= 3; ++r2)
			{
				ChainComplex e = random_chain_complex({r0, r1, r2}, rng);
				for (int cap = 2; cap <= 5; ++cap)
				{
					auto v = denormalize(e, cap);
					if (auto bad = simplicial_identity_violation(v))
						o.fail("simplicial identity: " + *bad);
					else if (!same_complex(normalize(v), e))
						o.fail("N(K(E)) differs from E for ranks " + std::to_string(r0) + "," + std::to_string(r1) + "," + std::to_string(r2));
					std::vector<Matrix> co;
					for (int k = 1; k <= e.top_degree(); ++k)
						co.push_back(e.d(k).transpose());
					CochainComplex y(e.ranks, co);
					auto x = dual_denormalize(y, cap);
					if (auto bad = cosimplicial_identity_violation(x))
						o.fail("cosimplicial identity: " + *bad);
					++count;
				}
			}
	for (int trial = 0; trial < 12; ++trial)
	{
		std::vector<std::size_t> ranks{(std::size_t)(rng() % 3), (std::size_t)(rng() % 3), (std::size_t)(rng() % 3), (std::size_t)(rng() % 3)};
		ChainComplex e = random_chain_complex(ranks, rng);
		for (int cap = 3; cap <= 5; ++cap)
		{
			auto v = denormalize(e, cap);
			if (auto bad = simplicial_identity_violation(v))
				o.fail("simplicial identity: " + *bad);
			else if (!same_complex(normalize(v), e))
				o.fail("N(K(E)) differs from E for a degree-3 complex");
			++count;
		}
	}
	if (o.passed)
		o.detail = std::to_string(count) + " round trips through level 5";
	return o;
}

inline Outcome abstract_identities(Context const &ctx)
{
	Outcome o;
	auto corpus = oracles::dga_corpus();
	if (corpus.size() < 10)
		o.fail("dga corpus has " + std::to_string(corpus.size()) + " entries");
	// shuffle after Alexander-Whitney on the denormalized cochain complexes
	std::size_t sh_checks = 0;
	for (auto const &y : corpus)
	{
		CochainComplex cc(y.dims, y.differential);
		auto x = dual_denormalize(cc, y.top());
		for (int p = 0; p <= y.top(); ++p)
			for (int q = 0; p + q <= y.top(); ++q)
				for (std::size_t a = 0; a < y.dims[p]; ++a)
					for (std::size_t b = 0; b < y.dims[q]; ++b)
					{
						DKBasis bp(y.dims, p), bq(y.dims, q);
						Vector f(bp.size()), g(bq.size());
						f[bp.position(full_mask(p), a)] = 1;
						g[bq.position(full_mask(q), b)] = 1;
						auto image = sh(y.dims, aw(x, f, p, g, q)).normalized();
						std::map<std::tuple<int, std::size_t, std::size_t>, Rational> expect{{{p, a, b}, Rational(1)}};
						if (image != expect)
							o.fail(y.name + ": sh(aw(f, g)) != f (x) g in degrees " + std::to_string(p) + ", " + std::to_string(q));
						++sh_checks;
					}
	}
	std::vector<std::string> failures(corpus.size());
	parallel_for(corpus.size(), [&](std::size_t i) {
		auto const &y = corpus[i];
		auto x = denormalize_dga(y, y.top());
		if (!is_infinitesimal(x).infinitesimal)
		{
			failures[i] = y.name + ": K(Y) is not infinitesimal";
			return;
		}
		auto rep = counit_check(y);
		if (auto bad = rep.first_failure())
			failures[i] = y.name + ": " + bad->name + " " + bad->detail;
	});
	for (auto const &f : failures)
		if (!f.empty())
			o.fail(f);
	auto odd = odd_line_model(5);
	auto rep = odd_line_checks(odd);
	if (auto bad = rep.first_failure())
		o.fail("odd line: " + bad->name + " " + bad->detail);
	if (!is_infinitesimal(odd).infinitesimal)
		o.fail("odd line is not infinitesimal");
	for (auto const &f : ctx.fixtures)
		if (f.input.model == "odd_line" && !odd_line_checks(*f.input.algebra).passed())
			o.fail(f.file + ": odd line identities fail");
	if (o.passed)
		o.detail = std::to_string(sh_checks) + " sh(aw) checks, " + std::to_string(corpus.size()) +
		           " dgas with K(Y) infinitesimal and counit iso, odd line through level 5";
	return o;
}

inline Outcome unravel_soundness(Context const &)
{
	Outcome o;
	std::vector<std::vector<std::vector<Mask>>> by_n(7);
	for (int n = 1; n <= 6; ++n)
		for_each_set_partition(n, [&](std::vector<Mask> const &blocks) { by_n[n].push_back(blocks); });
	std::vector<std::pair<int, std::size_t>> jobs;
	for (int n = 1; n <= 6; ++n)
		for (std::size_t i = 0; i < by_n[n].size(); ++i)
			jobs.push_back({n, i});
	std::vector<std::string> failures(jobs.size());
	std::vector<std::size_t> counts(jobs.size(), 0);
	parallel_for(jobs.size(), [&](std::size_t j) {
		auto [n, i] = jobs[j];
		auto const &blocks = by_n[n][i];
		std::size_t s = blocks.size(), total = 1;
		for (std::size_t t = 0; t < s; ++t)
			total *= 3;
		for (std::size_t code = 0; code < total; ++code)
		{
			std::vector<LabeledBlock> bs;
			std::size_t c = code;
			for (std::size_t t = 0; t < s; ++t, c /= 3)
				bs.push_back({blocks[t], (std::uint32_t)(c % 3)});
			LabeledBlockSequence p(n, bs);
			auto fast = unravel(p);
			auto slow = oracles::brute_unravel_sign(p);
			++counts[j];
			if (fast.sign != slow.sign || (fast.sign != 0 && !(fast.canonical == slow.canonical)))
			{
				failures[j] = to_string(p) + ": unravel sign " + std::to_string(fast.sign) + ", search sign " + std::to_string(slow.sign);
				return;
			}
		}
	});
	for (auto const &f : failures)
		if (!f.empty())
			o.fail(f);
	std::size_t total = 0;
	for (auto c : counts)
		total += c;
	if (o.passed)
		o.detail = std::to_string(total) + " labeled partitions with n <= 6";
	return o;
}

inline Outcome van_est(Context const &ctx)
{
	Outcome o;
	for (auto const &[file, m] : std::vector<std::pair<std::string, std::size_t>>{{"abelian_r1.json", 1}, {"abelian_r2.json", 2}})
	{
		auto const &p = *ctx.named(file).input.presentation;
		auto t = vanest_compare(p, 2, 4);
		if (auto bad = t.checks.first_failure())
			o.fail(file + ": " + bad->name + " " + bad->detail);
		if (!t.all_isomorphisms(2))
			o.fail(file + ": some slot of degree <= 2 is not an isomorphism");
		for (std::size_t k = 0; k <= 2; ++k)
		{
			std::size_t expected = binomial(m, k);
			if (t.cochain_totals.at(k) != expected || t.ce_totals.at(k) != expected)
				o.fail(file + ": H^" + std::to_string(k) + " ranks " + std::to_string(t.cochain_totals.at(k)) + "/" +
				       std::to_string(t.ce_totals.at(k)) + ", expected " + std::to_string(expected));
		}
	}
	if (o.passed)
		o.detail = "H^k = C(m, k) on both sides for m = 1, 2 and k <= 2, factor count <= 4";
	return o;
}

inline Outcome weil_counts(Context const &)
{
	Outcome o;
	for (std::size_t m = 1; m <= 3; ++m)
	{
		auto p = linear_presentation(ChainComplex({0, m}, {Matrix(0, m)}), 2, 2, "abelian");
		CochainEngine eng(p);
		auto w = weil_extension(compute_ce(eng, 1));
		auto rep = check_weil(w);
		if (auto bad = rep.first_failure())
			o.fail("rank " + std::to_string(m) + ": " + bad->name + " " + bad->detail);
		auto counts = weil_monomial_counts(w, 4);
		for (int pp = 0; pp <= 4; ++pp)
			for (int q = 0; pp + q <= 4; ++q)
			{
				std::size_t expected = pp >= q ? binomial(m, pp - q) * binomial(m + q - 1, q) : 0;
				auto it = counts.find({pp, q});
				std::size_t got = it == counts.end() ? 0 : it->second;
				if (got != expected)
					o.fail("rank " + std::to_string(m) + ": W^{" + std::to_string(pp) + "," + std::to_string(q) + "} has " +
					       std::to_string(got) + " monomials, expected " + std::to_string(expected));
			}
	}
	if (o.passed)
		o.detail = "ranks 1..3, p + q <= 4";
	return o;
}

inline std::vector<Criterion> criteria()
{
	return {
	    {1, "abelian-example", "abelian line: delta(x^2) = -2 y1 y2 and CE = exterior algebra with zero differential", 1.0, abelian_example},
	    {2, "bracket-recovery", "Heisenberg bracket table matches matrix commutators", 1.0, heisenberg_bracket},
	    {3, "dual-paths", "direct and simplicial-differential CE paths agree on fixtures and fuzzed presentations", 0, dual_paths},
	    {4, "semi-freeness", "reduced partition basis dimension equals relation-span corank", 0, semi_freeness},
	    {5, "dga-certificate", "d^2 = 0 through degree 3 and graded commutativity of reduced cup products", 0, dga_certificate},
	    {6, "dold-kan", "Dold-Kan round trips and structure identities through level 5", 0, dold_kan_round_trips},
	    {7, "abstract-identities", "shuffle after Alexander-Whitney, counit on small dgas, odd line relations", 0, abstract_identities},
	    {8, "unravel-soundness", "unravel agrees with the search oracle for n <= 6 and 3 labels", 10.0, unravel_soundness},
	    {9, "van-est", "van Est isomorphisms for the abelian line and plane", 5.0, van_est},
	    {10, "weil-counts", "Weil algebra bigraded counts and differential identities", 0, weil_counts},
	};
}

/// Selects criteria whose key or title contains the filter, or whose number equals it.
inline bool selected(Criterion const &c, std::string const &filter)
{
	if (filter.empty())
		return true;
	if (filter == std::to_string(c.id))
		return true;
	return c.key.find(filter) != std::string::npos || c.title.find(filter) != std::string::npos;
}

inline Verdict run_one(Criterion const &c, Context const &ctx)
{
	auto start = std::chrono::steady_clock::now();
	Outcome o;
	try
	{
		o = c.run(ctx);
	}
	catch (std::exception const &e)
	{
		o.fail(std::string("exception: ") + e.what());
	}
	double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
	if (c.budget_seconds > 0 && secs > c.budget_seconds)
	{
		char buf[96];
		std::snprintf(buf, sizeof buf, "runtime %.2f s exceeds the %.0f s bound", secs, c.budget_seconds);
		o.fail(buf);
	}
	return {c.id, c.key, c.title, o.passed, o.detail, secs};
}

inline std::string format_verdict(Verdict const &v)
{
	char buf[64];
	std::snprintf(buf, sizeof buf, "%.2f s", v.seconds);
	return std::string(v.passed ? "PASS" : "FAIL") + "  " + std::to_string(v.id) + " " + v.key + ": " + v.title + " [" + buf +
	       "] " + v.detail;
}

} // namespace sdiff::acceptance
