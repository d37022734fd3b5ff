#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "sdiff/abstract.hpp"
#include "sdiff/cohomology.hpp"
#include "sdiff/error.hpp"
#include "sdiff/graded_poly.hpp"
#include "sdiff/lie.hpp"
#include "sdiff/oracles/group_law.hpp"
#include "sdiff/presentation.hpp"

namespace sdiff::io {

using json = nlohmann::ordered_json;

inline constexpr char const *tool_version = "0.3.0";

/// Read-only view of a JSON value that remembers where it sits in the document.
class Node
{
  public:
	Node(json const &v, std::string source, std::string path = "") : v_(&v), source_(std::move(source)), path_(std::move(path)) {}

	[[noreturn]] void fail(std::string const &msg) const
	{
		throw InvalidArgument(source_ + ": at " + (path_.empty() ? "/" : path_) + ": " + msg);
	}

	json const &raw() const { return *v_; }
	std::string const &path() const { return path_; }
	bool has(std::string const &key) const { return v_->is_object() && v_->contains(key); }

	Node operator[](std::string const &key) const
	{
		if (!v_->is_object())
			fail("expected an object");
		auto it = v_->find(key);
		if (it == v_->end())
			fail("missing key \"" + key + "\"");
		return Node(*it, source_, path_ + "/" + key);
	}
	Node operator[](std::size_t i) const
	{
		if (!v_->is_array() || i >= v_->size())
			fail("expected an array with an element at index " + std::to_string(i));
		return Node((*v_)[i], source_, path_ + "/" + std::to_string(i));
	}
	std::size_t size() const
	{
		if (!v_->is_array())
			fail("expected an array");
		return v_->size();
	}
	long long integer() const
	{
		if (!v_->is_number_integer())
			fail("expected an integer");
		return v_->get<long long>();
	}
	long long integer_in(long long lo, long long hi) const
	{
		long long v = integer();
		if (v < lo || v > hi)
			fail("integer " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
		return v;
	}
	std::string string() const
	{
		if (!v_->is_string())
			fail("expected a string");
		return v_->get<std::string>();
	}
	bool boolean() const
	{
		if (!v_->is_boolean())
			fail("expected true or false");
		return v_->get<bool>();
	}
	Rational rational() const
	{
		if (v_->is_number_integer())
			return Rational(static_cast<long>(v_->get<long long>()));
		if (!v_->is_string())
			fail("expected a rational as a \"p/q\" string");
		try
		{
			return parse_rational(v_->get<std::string>());
		}
		catch (Error const &e)
		{
			fail(e.what());
		}
	}

  private:
	json const *v_;
	std::string source_, path_;
};

/// Parses JSON text; syntax errors carry line and column.
inline json parse_text(std::string const &text, std::string const &source)
{
	try
	{
		return json::parse(text);
	}
	catch (json::parse_error const &e)
	{
		std::size_t line = 1, col = 1;
		for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i)
		{
			if (text[i] == '\n')
			{
				++line;
				col = 1;
			}
			else
				++col;
		}
		std::string msg = e.what();
		auto p = msg.find("syntax error");
		throw InvalidArgument(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " +
		                      (p == std::string::npos ? msg : msg.substr(p)));
	}
}

inline std::string read_file(std::string const &path)
{
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw InvalidArgument(path + ": cannot open file");
	std::ostringstream s;
	s << in.rdbuf();
	return s.str();
}

// ---------------------------------------------------------------------------
// Values

inline json to_json(Rational const &q) { return to_string(q); }

inline json to_json(Matrix const &m)
{
	json rows = json::array();
	for (std::size_t r = 0; r < m.rows(); ++r)
	{
		json row = json::array();
		for (std::size_t c = 0; c < m.cols(); ++c)
			row.push_back(to_string(m(r, c)));
		rows.push_back(row);
	}
	return rows;
}

inline json to_json(Vector const &v)
{
	json a = json::array();
	for (auto const &x : v)
		a.push_back(to_string(x));
	return a;
}

inline Matrix matrix_from(Node const &n, std::size_t rows, std::size_t cols)
{
	if (rows == 0)
	{
		if (n.size() != 0)
			n.fail("expected an empty matrix");
		return Matrix(0, cols);
	}
	if (n.size() != rows)
		n.fail("expected " + std::to_string(rows) + " rows, found " + std::to_string(n.size()));
	Matrix m(rows, cols);
	for (std::size_t r = 0; r < rows; ++r)
	{
		Node row = n[r];
		if (row.size() != cols)
			row.fail("expected " + std::to_string(cols) + " entries, found " + std::to_string(row.size()));
		for (std::size_t c = 0; c < cols; ++c)
			m(r, c) = row[c].rational();
	}
	return m;
}

inline Vector vector_from(Node const &n, std::size_t dim)
{
	if (n.size() != dim)
		n.fail("expected " + std::to_string(dim) + " entries, found " + std::to_string(n.size()));
	Vector v(dim);
	for (std::size_t i = 0; i < dim; ++i)
		v[i] = n[i].rational();
	return v;
}

inline Mask mask_from(Node const &n, int level)
{
	Mask m = 0;
	for (std::size_t i = 0; i < n.size(); ++i)
	{
		int a = (int)n[i].integer_in(1, level);
		if (has_element(m, a))
			n[i].fail("repeated element");
		m |= element_bit(a);
	}
	return m;
}

inline json mask_json(Mask m)
{
	json a = json::array();
	for (int x : mask_members(m))
		a.push_back(x);
	return a;
}

/// Polynomial in coordinates: list of {"monomial": [[[alpha...], label, exponent]...], "coeff": "p/q"}.
inline Polynomial coordinate_polynomial_from(Node const &n, FramedPresentation const &p, int level)
{
	Polynomial out(p.truncation);
	for (std::size_t t = 0; t < n.size(); ++t)
	{
		Node term = n[t];
		Node mono = term["monomial"];
		std::vector<Factor> word;
		for (std::size_t f = 0; f < mono.size(); ++f)
		{
			Node fac = mono[f];
			if (fac.size() != 3)
				fac.fail("a factor is [alpha, label, exponent]");
			Mask alpha = mask_from(fac[0], level);
			if (alpha == 0)
				fac[0].fail("empty subset");
			auto label = (std::uint32_t)fac[1].integer_in(0, (long long)p.rank(mask_size(alpha)) - 1);
			auto e = (std::uint32_t)fac[2].integer_in(1, 64);
			word.push_back({p.coordinate(alpha, label), e});
		}
		auto [m, s] = Monomial::from_word(word);
		if (s != 0)
			out.add_term(m, s * term["coeff"].rational());
	}
	return out;
}

inline json coordinate_polynomial_json(Polynomial const &poly)
{
	json terms = json::array();
	for (auto const &[m, c] : poly.terms())
	{
		json mono = json::array();
		for (auto const &f : m.factors())
			mono.push_back(json::array({mask_json(f.gen.a), f.gen.b, f.exp}));
		json t;
		t["monomial"] = mono;
		t["coeff"] = to_string(c);
		terms.push_back(t);
	}
	return terms;
}

/// Polynomial in group law variables: factors ["x" | "y", index, exponent].
inline Polynomial law_polynomial_from(Node const &n, std::size_t dim)
{
	Polynomial out;
	for (std::size_t t = 0; t < n.size(); ++t)
	{
		Node term = n[t];
		Node mono = term["monomial"];
		std::vector<Factor> word;
		for (std::size_t f = 0; f < mono.size(); ++f)
		{
			Node fac = mono[f];
			if (fac.size() != 3)
				fac.fail("a factor is [\"x\" or \"y\", index, exponent]");
			std::string v = fac[0].string();
			if (v != "x" && v != "y")
				fac[0].fail("variable must be \"x\" or \"y\"");
			auto i = (std::size_t)fac[1].integer_in(0, (long long)dim - 1);
			auto e = (std::uint32_t)fac[2].integer_in(1, 64);
			word.push_back({v == "x" ? oracles::law_x(i) : oracles::law_y(i), e});
		}
		auto [m, s] = Monomial::from_word(word);
		out.add_term(m, s * term["coeff"].rational());
	}
	return out;
}

inline json law_polynomial_json(Polynomial const &poly)
{
	json terms = json::array();
	for (auto const &[m, c] : poly.terms())
	{
		json mono = json::array();
		for (auto const &f : m.factors())
			mono.push_back(json::array({std::string(1, (char)f.gen.a), f.gen.b, f.exp}));
		json t;
		t["monomial"] = mono;
		t["coeff"] = to_string(c);
		terms.push_back(t);
	}
	return terms;
}

// ---------------------------------------------------------------------------
// Presentations

inline std::vector<std::size_t> ranks_from(Node const &n)
{
	std::vector<std::size_t> r;
	for (std::size_t i = 0; i < n.size(); ++i)
		r.push_back((std::size_t)n[i].integer_in(0, 8));
	if (r.empty() || r[0] != 0)
		n.fail("tangent ranks must start with 0 in degree 0");
	return r;
}

inline std::vector<std::vector<int>> parity_from(Node const &n, std::vector<std::size_t> const &dims)
{
	std::vector<std::vector<int>> out;
	if (n.size() > dims.size())
		n.fail("more parity rows than degrees");
	for (std::size_t k = 0; k < n.size(); ++k)
	{
		Node row = n[k];
		if (row.size() != dims[k])
			row.fail("expected " + std::to_string(dims[k]) + " parities");
		std::vector<int> r;
		for (std::size_t i = 0; i < row.size(); ++i)
			r.push_back((int)row[i].integer_in(0, 1));
		out.push_back(r);
	}
	return out;
}

inline FramedPresentation framed_from(Node const &root)
{
	FramedPresentation p;
	p.name = root.has("name") ? root["name"].string() : "presentation";
	auto ranks = ranks_from(root["tangent_ranks"]);
	std::vector<Matrix> maps;
	Node b = root["boundary"];
	if (b.size() != ranks.size() - 1)
		b.fail("expected one boundary matrix per positive degree");
	for (std::size_t k = 1; k < ranks.size(); ++k)
		maps.push_back(matrix_from(b[k - 1], ranks[k - 1], ranks[k]));
	try
	{
		p.tangent = ChainComplex(ranks, maps);
	}
	catch (Error const &e)
	{
		b.fail(e.what());
	}
	p.truncation = (int)root["truncation"].integer_in(1, 12);
	p.max_level = (int)root["max_level"].integer_in(1, 8);
	p.super_flag = root.has("super") && root["super"].boolean();
	if (root.has("parity"))
		p.parity = parity_from(root["parity"], ranks);
	p.d0.assign(p.max_level + 1, {});
	Node d0 = root["d0"];
	for (std::size_t e = 0; e < d0.size(); ++e)
	{
		Node entry = d0[e];
		int n = (int)entry["level"].integer_in(1, p.max_level);
		Node coord = entry["coordinate"];
		Mask alpha = mask_from(coord["alpha"], n - 1);
		if (alpha == 0)
			coord["alpha"].fail("empty subset");
		auto label = (std::uint32_t)coord["label"].integer_in(0, (long long)p.rank(mask_size(alpha)) - 1);
		Generator g = p.coordinate(alpha, label);
		if (p.d0[n].count(g))
			entry.fail("duplicate d0 entry for " + to_string(g));
		p.d0[n][g] = coordinate_polynomial_from(entry["polynomial"], p, n);
	}
	for (int n = 2; n <= p.max_level; ++n)
		for (auto const &g : level_coordinates(p, n - 1))
			if (!p.d0[n].count(g))
				d0.fail("no d0 entry for " + to_string(g) + " at level " + std::to_string(n));
	return p;
}

inline json framed_json(FramedPresentation const &p)
{
	json j;
	j["kind"] = "framed";
	j["name"] = p.name;
	j["tangent_ranks"] = p.tangent.ranks;
	json b = json::array();
	for (int k = 1; k <= p.tangent.top_degree(); ++k)
		b.push_back(to_json(p.tangent.d(k)));
	j["boundary"] = b;
	j["truncation"] = p.truncation;
	j["max_level"] = p.max_level;
	if (p.super_flag)
	{
		j["super"] = true;
		if (!p.parity.empty())
			j["parity"] = p.parity;
	}
	json d0 = json::array();
	for (int n = 1; n <= p.max_level; ++n)
		for (auto const &[g, img] : p.d0[n])
		{
			json e;
			e["level"] = n;
			e["coordinate"] = {{"alpha", mask_json(g.a)}, {"label", g.b}};
			e["polynomial"] = coordinate_polynomial_json(img);
			d0.push_back(e);
		}
	j["d0"] = d0;
	return j;
}

inline oracles::GroupLaw group_law_from(Node const &root)
{
	oracles::GroupLaw law;
	law.name = root.has("name") ? root["name"].string() : "group_law";
	law.dim = (std::size_t)root["dim"].integer_in(1, 6);
	if (root.has("structure_constants"))
	{
		Node sc = root["structure_constants"];
		oracles::StructureConstants c(law.dim, std::vector<std::vector<Rational>>(law.dim, std::vector<Rational>(law.dim)));
		if (sc.size() != law.dim)
			sc.fail("expected dim x dim x dim constants");
		for (std::size_t i = 0; i < law.dim; ++i)
			for (std::size_t k = 0; k < law.dim; ++k)
			{
				if (sc[i].size() != law.dim || sc[i][k].size() != law.dim)
					sc[i].fail("expected dim x dim x dim constants");
				for (std::size_t l = 0; l < law.dim; ++l)
					c[i][k][l] = sc[i][k][l].rational();
			}
		int order = root.has("bch_order") ? (int)root["bch_order"].integer_in(1, 3) : 2;
		try
		{
			auto name = law.name;
			law = oracles::bch(c, order, name);
		}
		catch (Error const &e)
		{
			sc.fail(e.what());
		}
		return law;
	}
	Node comps = root["group_law"];
	if (comps.size() != law.dim)
		comps.fail("expected one polynomial per coordinate");
	for (std::size_t i = 0; i < law.dim; ++i)
		law.components.push_back(law_polynomial_from(comps[i], law.dim));
	return law;
}

inline json group_law_json(oracles::GroupLaw const &law, int truncation, int max_level)
{
	json j;
	j["kind"] = "group_law";
	j["name"] = law.name;
	j["dim"] = law.dim;
	j["truncation"] = truncation;
	j["max_level"] = max_level;
	json comps = json::array();
	for (auto const &c : law.components)
		comps.push_back(law_polynomial_json(c));
	j["group_law"] = comps;
	return j;
}

// ---------------------------------------------------------------------------
// Algebras

inline DGAlgebraPresentation dga_from(Node const &n)
{
	DGAlgebraPresentation y;
	y.name = n.has("name") ? n["name"].string() : "dga";
	Node dims = n["dims"];
	for (std::size_t k = 0; k < dims.size(); ++k)
		y.dims.push_back((std::size_t)dims[k].integer_in(0, 64));
	if (y.dims.empty() || y.dims[0] == 0)
		dims.fail("degree 0 must be nonzero");
	int top = y.top();
	y.parity = n.has("parity") ? parity_from(n["parity"], y.dims) : std::vector<std::vector<int>>{};
	for (int k = (int)y.parity.size(); k <= top; ++k)
		y.parity.push_back(std::vector<int>(y.dims[k], 0));
	Node d = n["differential"];
	if ((int)d.size() != top)
		d.fail("expected one differential matrix per degree below the top");
	for (int k = 0; k < top; ++k)
		y.differential.push_back(matrix_from(d[k], y.dims[k + 1], y.dims[k]));
	y.product.resize(top + 1);
	for (int p = 0; p <= top; ++p)
	{
		y.product[p].resize(top - p + 1);
		for (int q = 0; p + q <= top; ++q)
			y.product[p][q].assign(y.dims[p], std::vector<Vector>(y.dims[q], Vector(y.dims[p + q])));
	}
	Node prod = n["product"];
	for (std::size_t i = 0; i < prod.size(); ++i)
	{
		Node e = prod[i];
		if (e.size() != 6)
			e.fail("a product entry is [p, a, q, b, k, coeff]");
		int p = (int)e[0].integer_in(0, top);
		int q = (int)e[2].integer_in(0, top - p);
		auto a = (std::size_t)e[1].integer_in(0, (long long)y.dims[p] - 1);
		auto b = (std::size_t)e[3].integer_in(0, (long long)y.dims[q] - 1);
		auto k = (std::size_t)e[4].integer_in(0, (long long)y.dims[p + q] - 1);
		y.product[p][q][a][b][k] += e[5].rational();
	}
	y.unit = vector_from(n["unit"], y.dims[0]);
	y.commutative = n.has("commutative") && n["commutative"].boolean();
	if (n.has("labels"))
	{
		Node l = n["labels"];
		for (std::size_t k = 0; k < l.size(); ++k)
		{
			std::vector<std::string> row;
			for (std::size_t i = 0; i < l[k].size(); ++i)
				row.push_back(l[k][i].string());
			y.labels.push_back(row);
		}
	}
	return y;
}

inline json dga_json(DGAlgebraPresentation const &y)
{
	json j;
	j["name"] = y.name;
	j["dims"] = y.dims;
	j["parity"] = y.parity;
	json d = json::array();
	for (auto const &m : y.differential)
		d.push_back(to_json(m));
	j["differential"] = d;
	json prod = json::array();
	for (int p = 0; p <= y.top(); ++p)
		for (int q = 0; p + q <= y.top(); ++q)
			for (std::size_t a = 0; a < y.dims[p]; ++a)
				for (std::size_t b = 0; b < y.dims[q]; ++b)
					for (std::size_t k = 0; k < y.dims[p + q]; ++k)
						if (sgn(y.product[p][q][a][b][k]) != 0)
							prod.push_back(json::array({p, a, q, b, k, to_string(y.product[p][q][a][b][k])}));
	j["product"] = prod;
	j["unit"] = to_json(y.unit);
	j["commutative"] = y.commutative;
	if (!y.labels.empty())
		j["labels"] = y.labels;
	return j;
}

inline FiniteCosimplicialAlgebra explicit_algebra_from(Node const &root)
{
	FiniteCosimplicialAlgebra x;
	x.name = root.has("name") ? root["name"].string() : "cosimplicial";
	Node levels = root["levels"];
	int cap = (int)levels.size() - 1;
	if (cap < 1)
		levels.fail("at least two levels are required");
	x.space.cap = cap;
	x.space.cofaces.resize(cap + 1);
	x.space.codegeneracies.resize(cap + 1);
	for (int n = 0; n <= cap; ++n)
		x.space.dims.push_back((std::size_t)levels[n]["dim"].integer_in(1, 4096));
	for (int n = 0; n <= cap; ++n)
	{
		Node lv = levels[n];
		std::size_t d = x.dim(n);
		std::vector<int> par(d, 0);
		if (lv.has("parity"))
		{
			Node pn = lv["parity"];
			if (pn.size() != d)
				pn.fail("expected one parity per basis element");
			for (std::size_t i = 0; i < d; ++i)
				par[i] = (int)pn[i].integer_in(0, 1);
		}
		x.parity.push_back(par);
		std::vector<std::vector<SparseVector>> prod(d, std::vector<SparseVector>(d));
		Node pr = lv["product"];
		for (std::size_t i = 0; i < pr.size(); ++i)
		{
			Node e = pr[i];
			if (e.size() != 4)
				e.fail("a product entry is [a, b, k, coeff]");
			auto a = (std::size_t)e[0].integer_in(0, (long long)d - 1);
			auto b = (std::size_t)e[1].integer_in(0, (long long)d - 1);
			auto k = (std::size_t)e[2].integer_in(0, (long long)d - 1);
			prod[a][b].push_back({k, e[3].rational()});
		}
		x.product.push_back(prod);
		x.unit.push_back(vector_from(lv["unit"], d));
		if (n >= 1)
		{
			Node cf = lv["cofaces"];
			if ((int)cf.size() != n + 1)
				cf.fail("expected " + std::to_string(n + 1) + " cofaces");
			for (int i = 0; i <= n; ++i)
				x.space.cofaces[n].push_back(matrix_from(cf[i], d, x.dim(n - 1)));
		}
		if (n < cap)
		{
			Node cg = lv["codegeneracies"];
			if ((int)cg.size() != n + 1)
				cg.fail("expected " + std::to_string(n + 1) + " codegeneracies");
			for (int j = 0; j <= n; ++j)
				x.space.codegeneracies[n].push_back(matrix_from(cg[j], d, x.dim(n + 1)));
		}
	}
	return x;
}

inline json explicit_algebra_json(FiniteCosimplicialAlgebra const &x)
{
	json j;
	j["kind"] = "cosimplicial";
	j["model"] = "explicit";
	j["name"] = x.name;
	json levels = json::array();
	for (int n = 0; n <= x.cap(); ++n)
	{
		json lv;
		lv["dim"] = x.dim(n);
		lv["parity"] = x.parity[n];
		json pr = json::array();
		for (std::size_t a = 0; a < x.dim(n); ++a)
			for (std::size_t b = 0; b < x.dim(n); ++b)
				for (auto const &[k, c] : x.product[n][a][b])
					pr.push_back(json::array({a, b, k, to_string(c)}));
		lv["product"] = pr;
		lv["unit"] = to_json(x.unit[n]);
		if (n >= 1)
		{
			json cf = json::array();
			for (auto const &m : x.space.cofaces[n])
				cf.push_back(to_json(m));
			lv["cofaces"] = cf;
		}
		if (n < x.cap())
		{
			json cg = json::array();
			for (auto const &m : x.space.codegeneracies[n])
				cg.push_back(to_json(m));
			lv["codegeneracies"] = cg;
		}
		levels.push_back(lv);
	}
	j["levels"] = levels;
	return j;
}

// ---------------------------------------------------------------------------
// Input files

struct InputFile
{
	std::string kind;                                 ///< framed | group_law | cosimplicial
	std::string name;
	std::optional<FramedPresentation> presentation;   ///< framed and group_law inputs
	std::optional<oracles::GroupLaw> law;
	std::optional<FiniteCosimplicialAlgebra> algebra; ///< cosimplicial inputs
	std::optional<DGAlgebraPresentation> dga;         ///< set when the algebra is a denormalized dga
	std::string model;                                ///< cosimplicial model name
};

inline FramedPresentation presentation_from(Node const &root, std::optional<oracles::GroupLaw> *law_out = nullptr)
{
	std::string kind = root["kind"].string();
	if (kind == "framed")
		return framed_from(root);
	if (kind == "group_law")
	{
		auto law = group_law_from(root);
		int t = (int)root["truncation"].integer_in(1, 12);
		int levels = (int)root["max_level"].integer_in(1, 8);
		if (law_out)
			*law_out = law;
		try
		{
			return oracles::nerve_from_group_law(law, t, levels);
		}
		catch (Error const &e)
		{
			root.fail(e.what());
		}
	}
	root["kind"].fail("expected \"framed\" or \"group_law\" here");
}

inline InputFile parse_input(std::string const &text, std::string const &source)
{
	json doc = parse_text(text, source);
	Node root(doc, source);
	InputFile in;
	in.kind = root["kind"].string();
	if (in.kind == "framed" || in.kind == "group_law")
	{
		in.presentation = presentation_from(root, &in.law);
		in.name = in.presentation->name;
		return in;
	}
	if (in.kind != "cosimplicial")
		root["kind"].fail("unknown kind \"" + in.kind + "\"; expected framed, group_law or cosimplicial");
	in.model = root["model"].string();
	int cap = in.model == "explicit" ? 0 : (int)root["level_cap"].integer_in(1, 6);
	try
	{
		if (in.model == "odd_line")
			in.algebra = odd_line_model(cap);
		else if (in.model == "denormalized")
		{
			in.dga = dga_from(root["dga"]);
			in.algebra = denormalize_dga(*in.dga, cap);
		}
		else if (in.model == "cochains")
		{
			auto p = presentation_from(root["presentation"]);
			in.algebra = cochain_algebra(p, cap);
		}
		else if (in.model == "explicit")
			in.algebra = explicit_algebra_from(root);
		else
			root["model"].fail("unknown model \"" + in.model + "\"; expected odd_line, denormalized, cochains or explicit");
	}
	catch (InvalidArgument const &)
	{
		throw;
	}
	catch (Error const &e)
	{
		root.fail(e.what());
	}
	if (root.has("name"))
		in.algebra->name = root["name"].string();
	in.name = in.algebra->name;
	return in;
}

inline InputFile load_input(std::string const &path) { return parse_input(read_file(path), path); }

// ---------------------------------------------------------------------------
// Reports

inline json checks_json(CheckReport const &rep)
{
	json a = json::array();
	for (auto const &c : rep.checks)
	{
		json e;
		e["name"] = c.name;
		e["passed"] = c.passed;
		if (!c.detail.empty())
			e["witness"] = c.detail;
		a.push_back(e);
	}
	return a;
}

inline json report_header(std::string const &command, std::string const &input)
{
	json j;
	j["tool"] = "sdiff";
	j["version"] = tool_version;
	j["command"] = command;
	j["input"] = input;
	return j;
}

inline json conventions_json(int truncation, int degree)
{
	json c;
	c["bracket_sign"] = bracket_sign;
	c["bracket_rule"] = "[e_a, e_b] = bracket_sign * coefficient of xi_a*xi_b in d(xi_c), a < b";
	c["nerve"] = "frame coordinates y_a = h_a - h_{a-1}; d0 is the division map (g2, g1) -> g2 g1^-1";
	c["truncation"] = truncation;
	c["degree"] = degree;
	c["rationals"] = "p/q strings";
	return c;
}

inline json generators_json(CEAlgebra const &ce)
{
	json a = json::array();
	for (auto const &g : ce.generators(ce.degree))
	{
		json e;
		e["name"] = to_string(g);
		e["degree"] = g.degree;
		e["parity"] = g.parity ? "odd" : "even";
		a.push_back(e);
	}
	return a;
}

inline json differential_json(CEAlgebra const &ce)
{
	json d;
	for (auto const &g : ce.generators(ce.degree))
		d[to_string(g)] = to_string(ce.differential.at(g));
	return d;
}

inline json bracket_tables_json(CEAlgebra const &ce)
{
	json tables = json::array();
	// all multisets of input degrees whose bracket lands in a computed degree
	std::vector<std::vector<int>> shapes;
	std::vector<int> cur;
	std::function<void(int, int)> rec = [&](int min_deg, int total) {
		if (cur.size() >= 2 && total - 1 <= ce.degree && total - 1 >= 1)
			shapes.push_back(cur);
		for (int k = min_deg; k <= ce.degree && total + k - 1 <= ce.degree; ++k)
		{
			if (ce.rank(k) == 0)
				continue;
			cur.push_back(k);
			rec(k, total + k);
			cur.pop_back();
		}
	};
	rec(1, 0);
	for (auto const &s : shapes)
	{
		int total = 0;
		for (int k : s)
			total += k;
		if (ce.rank(total - 1) == 0)
			continue;
		auto t = bracket_table(ce, s);
		json entries = json::array();
		for (auto const &[key, c] : t.entries)
		{
			json e;
			json in = json::array();
			for (std::size_t i = 0; i < key.first.size(); ++i)
				in.push_back(to_string(ce.generator(s[i], key.first[i])));
			e["inputs"] = in;
			e["output"] = to_string(ce.generator(total - 1, key.second));
			e["coefficient"] = to_string(c);
			entries.push_back(e);
		}
		json tj;
		tj["arity"] = s.size();
		tj["degrees"] = s;
		tj["entries"] = entries;
		tables.push_back(tj);
	}
	return tables;
}

inline json vanest_json(VanEstTable const &t)
{
	json slots = json::array();
	for (auto const &s : t.slots)
	{
		json e;
		e["degree"] = s.degree;
		e["factors"] = s.factors;
		e["cochain_rank"] = s.cochain_rank;
		e["ce_rank"] = s.ce_rank;
		e["image_rank"] = s.image_rank;
		e["isomorphism"] = s.isomorphism;
		slots.push_back(e);
	}
	json j;
	j["slots"] = slots;
	j["cochain_totals"] = t.cochain_totals;
	j["ce_totals"] = t.ce_totals;
	return j;
}

/// Two-space indented JSON with a trailing newline.
inline std::string dump(json const &j) { return j.dump(2) + "\n"; }

} // namespace sdiff::io
