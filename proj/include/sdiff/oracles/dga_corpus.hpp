#pragma once

#include <random>
#include <string>
#include <vector>

#include "sdiff/abstract.hpp"

namespace sdiff::oracles {

namespace dga_detail {

inline Polynomial g(int n, std::uint32_t l, int parity = 0) { return Polynomial::generator(Generator::ce(n, l, parity)); }

} // namespace dga_detail

/// Small semi-free graded-commutative dgas, truncated above their top degree.
inline std::vector<DGAlgebraPresentation> dga_corpus()
{
	using dga_detail::g;
	std::vector<DGAlgebraPresentation> out;
	auto add = [&](std::string name, std::vector<std::size_t> ranks, std::map<Generator, Polynomial> d, int top,
	               std::vector<std::vector<int>> parity = {}) {
		out.push_back(dga_from_ce(ce_from_generators(name, std::move(ranks), std::move(d), std::move(parity)), top, name));
	};
	add("exterior1", {0, 1}, {}, 3);
	add("exterior2", {0, 2}, {}, 3);
	add("exterior-with-target", {0, 2, 1}, {{Generator::ce(1, 1), g(2, 0)}}, 3);
	add("heisenberg", {0, 3}, {{Generator::ce(1, 2), g(1, 0) * g(1, 1)}}, 3);
	add("so3", {0, 3},
	    {{Generator::ce(1, 0), g(1, 1) * g(1, 2)}, {Generator::ce(1, 1), g(1, 2) * g(1, 0)}, {Generator::ce(1, 2), g(1, 0) * g(1, 1)}},
	    3);
	add("acyclic-pair", {0, 1, 1}, {{Generator::ce(1, 0), g(2, 0)}}, 3);
	add("polynomial2", {0, 0, 1}, {}, 4);
	add("mixed12", {0, 1, 1}, {}, 3);
	add("shifted-pair", {0, 1, 2}, {{Generator::ce(1, 0), g(2, 0)}}, 3);
	add("weil1", {0, 1, 1}, {{Generator::ce(1, 0), g(2, 0)}}, 4);
	add("odd-degree-one", {0, 1}, {}, 3, {{}, {1}});
	add("super-mixed", {0, 2}, {{Generator::ce(1, 1), g(1, 0, 1) * g(1, 0, 1)}}, 3, {{}, {1, 0}});
	add("two-step", {0, 1, 2}, {{Generator::ce(2, 1), g(1, 0) * g(2, 0)}}, 3);
	return out;
}

/// Generators a, y, z of degrees 1, 2, 3 with da = y and dy = z, so d^2 a = z.
inline DGAlgebraPresentation broken_dga()
{
	using dga_detail::g;
	auto ce = ce_from_generators("broken", {0, 1, 1, 1}, {{Generator::ce(1, 0), g(2, 0)}, {Generator::ce(2, 0), g(3, 0)}});
	return dga_from_ce(ce, 3, "broken");
}

} // namespace sdiff::oracles
