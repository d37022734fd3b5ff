// Writes the JSON fixtures used by the self-test and the CLI tests.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include "sdiff/io.hpp"
#include "sdiff/oracles/corpus.hpp"
#include "sdiff/oracles/dga_corpus.hpp"

using namespace sdiff;
using io::json;

namespace {

json constants_json(oracles::StructureConstants const &c)
{
	json a = json::array();
	for (auto const &plane : c)
	{
		json p = json::array();
		for (auto const &row : plane)
		{
			json r = json::array();
			for (auto const &v : row)
				r.push_back(to_string(v));
			p.push_back(r);
		}
		a.push_back(p);
	}
	return a;
}

json bch_fixture(std::string name, oracles::StructureConstants const &c, int order, int t, int levels)
{
	json j;
	j["kind"] = "group_law";
	j["name"] = name;
	j["dim"] = c.size();
	j["truncation"] = t;
	j["max_level"] = levels;
	j["bch_order"] = order;
	j["structure_constants"] = constants_json(c);
	return j;
}

json dga_fixture(DGAlgebraPresentation const &y, int cap)
{
	json j;
	j["kind"] = "cosimplicial";
	j["model"] = "denormalized";
	j["name"] = "K(" + y.name + ")";
	j["level_cap"] = cap;
	j["dga"] = io::dga_json(y);
	return j;
}

DGAlgebraPresentation corpus_entry(std::string const &name)
{
	for (auto const &y : oracles::dga_corpus())
		if (y.name == name)
			return y;
	throw InvalidArgument("no dga " + name);
}

} // namespace

int main(int argc, char **argv)
{
	if (argc != 2)
	{
		std::cerr << "usage: make_fixtures OUTPUT_DIR\n";
		return 1;
	}
	std::filesystem::path dir = argv[1];
	std::filesystem::create_directories(dir);
	auto write = [&](std::string const &file, json const &j) {
		std::ofstream out(dir / file, std::ios::binary);
		out << io::dump(j);
	};

	write("abelian_r1.json", io::group_law_json(oracles::abelian_law(1), 4, 4));
	write("abelian_r2.json", io::group_law_json(oracles::abelian_law(2), 4, 4));
	write("heisenberg.json", bch_fixture("heisenberg", oracles::commutator_constants(oracles::heisenberg_matrices()), 2, 3, 4));
	write("so3.json", bch_fixture("so3", oracles::commutator_constants(oracles::so3_matrices()), 3, 3, 4));

	auto affine = oracles::nerve_from_group_law(oracles::affine_law(), 3, 3);
	affine.name = "affine";
	write("affine_framed.json", io::framed_json(affine));

	std::mt19937 rng(31);
	auto heis = oracles::nerve_from_group_law(oracles::bch_order2(oracles::commutator_constants(oracles::heisenberg_matrices())), 3, 3);
	std::vector<Polynomial> top;
	for (std::size_t l = 0; l < 3; ++l)
		top.push_back(oracles::random_gauge_component(heis, 1, rng, 2));
	auto gauged = oracles::gauge_transform(heis, 1, top);
	gauged.name = "heisenberg-gauged";
	write("heisenberg_gauged.json", io::framed_json(gauged));

	Matrix bd(1, 1);
	bd(0, 0) = 1;
	write("linear_complex.json", io::framed_json(linear_presentation(ChainComplex({0, 1, 1}, {Matrix(0, 1), bd}), 3, 3, "interval-complex")));

	json odd;
	odd["kind"] = "cosimplicial";
	odd["model"] = "odd_line";
	odd["name"] = "odd-line";
	odd["level_cap"] = 4;
	write("odd_line.json", odd);

	write("k_exterior.json", dga_fixture(corpus_entry("exterior1"), 3));
	write("k_heisenberg.json", dga_fixture(corpus_entry("heisenberg"), 3));

	json cochains;
	cochains["kind"] = "cosimplicial";
	cochains["model"] = "cochains";
	cochains["name"] = "cochains-of-line";
	cochains["level_cap"] = 3;
	cochains["presentation"] = io::group_law_json(oracles::abelian_law(1), 3, 4);
	write("abelian_cochains.json", cochains);

	FiniteCosimplicialAlgebra c;
	c.name = "constant-dual-numbers";
	c.space.cap = 2;
	c.space.cofaces.resize(3);
	c.space.codegeneracies.resize(3);
	for (int n = 0; n <= 2; ++n)
	{
		c.space.dims.push_back(2);
		c.parity.push_back({0, 0});
		c.product.push_back({{{{0, Rational(1)}}, {{1, Rational(1)}}}, {{{1, Rational(1)}}, {}}});
		c.unit.push_back({Rational(1), Rational(0)});
		if (n >= 1)
			for (int i = 0; i <= n; ++i)
				c.space.cofaces[n].push_back(Matrix::identity(2));
		if (n < 2)
			for (int j = 0; j <= n; ++j)
				c.space.codegeneracies[n].push_back(Matrix::identity(2));
	}
	write("constant_dual.json", io::explicit_algebra_json(c));
	return 0;
}
