#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <vector>

#include "sdiff/combinatorics.hpp"
#include "sdiff/error.hpp"

namespace sdiff::oracles {

struct SearchResult
{
	LabeledBlockSequence canonical;
	int sign = 1; ///< 0 if the class contains a path of each parity back to itself
	std::size_t class_size = 0;
};

/// Breadth-first search over free reorderings and allowed transpositions, tracking parity.
inline SearchResult brute_unravel_sign(LabeledBlockSequence const &p)
{
	if (p.ambient > 8)
		throw InvalidArgument("search bound exceeded: ambient " + std::to_string(p.ambient) + " > 8");
	if (classify_sequence(p).kind != Coverage::partition)
		throw InvalidArgument("search needs a partition");

	using State = std::vector<LabeledBlock>;
	auto normal = [](State s) {
		std::sort(s.begin(), s.end(), [](LabeledBlock const &a, LabeledBlock const &b) {
			return mask_min(a.block) < mask_min(b.block);
		});
		return s;
	};

	std::map<State, int> parity;
	std::deque<State> queue;
	State start = normal(p.blocks);
	parity[start] = 0;
	queue.push_back(start);
	bool conflict = false;
	while (!queue.empty())
	{
		State cur = queue.front();
		queue.pop_front();
		int par = parity[cur];
		for (int j = 1; j < p.ambient; ++j)
		{
			State next = cur;
			bool same_block = false;
			for (auto &b : next)
			{
				if (has_element(b.block, j) && has_element(b.block, j + 1))
					same_block = true;
				b.block = transpose_mask(b.block, j);
			}
			if (same_block)
				continue;
			next = normal(next);
			auto it = parity.find(next);
			if (it == parity.end())
			{
				parity[next] = par ^ 1;
				queue.push_back(next);
			}
			else if (it->second != (par ^ 1))
				conflict = true;
		}
	}

	SearchResult r;
	r.class_size = parity.size();
	bool found = false;
	for (auto const &[s, par] : parity)
	{
		// present as a sequence ordered by position, which is the canonical order for interval blocks
		LabeledBlockSequence seq(p.ambient, s);
		std::stable_sort(seq.blocks.begin(), seq.blocks.end(), [](LabeledBlock const &a, LabeledBlock const &b) {
			return mask_min(a.block) < mask_min(b.block);
		});
		if (is_canonical(seq))
		{
			r.canonical = seq;
			r.sign = conflict ? 0 : (par ? -1 : 1);
			found = true;
			break;
		}
	}
	if (!found)
		throw Error("search found no canonical representative");
	return r;
}

} // namespace sdiff::oracles
