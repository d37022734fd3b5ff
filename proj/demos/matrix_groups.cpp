// Differentiates the nerves of a few small matrix groups and prints what comes out.
#include <iostream>

#include "sdiff/abstract.hpp"
#include "sdiff/cohomology.hpp"
#include "sdiff/lie.hpp"
#include "sdiff/oracles/corpus.hpp"
#include "sdiff/oracles/group_law.hpp"

using namespace sdiff;

namespace {

void show_group(std::string const &name, std::vector<Matrix> const &basis, int order)
{
	auto c = oracles::commutator_constants(basis);
	auto p = oracles::nerve_from_group_law(oracles::bch(c, order, name), 3, 3);
	CochainEngine eng(p);
	auto ce = compute_ce(eng, 2);
	std::cout << name << "\n";
	for (auto const &g : ce.generators(1))
		std::cout << "  d " << to_string(g) << " = " << to_string(ce.differential.at(g)) << "\n";
	auto br = lie_bracket(ce);
	bool match = br == c;
	std::cout << "  brackets " << (match ? "match" : "differ from") << " the matrix commutators\n";
	std::cout << "  d^2 = 0: " << (check_d_squared(ce, 2).passed() ? "yes" : "no") << "\n";
}

} // namespace

int main()
{
	show_group("heisenberg", oracles::heisenberg_matrices(), 2);
	show_group("so3", oracles::so3_matrices(), 3);

	auto plane = oracles::nerve_from_group_law(oracles::abelian_law(2), 4, 4);
	auto table = vanest_compare(plane, 2, 4);
	std::cout << "plane: polynomial cochain cohomology vs CE cohomology by degree\n";
	for (std::size_t k = 0; k < table.cochain_totals.size(); ++k)
		std::cout << "  H^" << k << ": " << table.cochain_totals[k] << " vs " << table.ce_totals[k] << "\n";

	auto line = oracles::nerve_from_group_law(oracles::abelian_law(1), 3, 4);
	auto x = cochain_algebra(line, 3);
	auto inf = is_infinitesimal(x);
	auto ad = abstract_diff(x);
	std::cout << "cochains on the line: infinitesimal " << (inf.infinitesimal ? "yes" : "no");
	if (!inf.infinitesimal)
		std::cout << " (witness " << inf.witness << " at level " << inf.level << ")";
	std::cout << "\n  differentiated algebra dims:";
	for (auto d : ad.algebra.dims)
		std::cout << " " << d;
	std::cout << "\n";
}
