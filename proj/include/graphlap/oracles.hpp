#pragma once

#include <optional>

#include "graphlap/multigraph.hpp"

namespace graphlap {

// Independent verification primitives. These deliberately avoid the Smith
// normal form engine: membership is decided by a self-contained integer
// column elimination, and spanning trees are counted by subset enumeration.

/// Number of spanning trees by enumerating (n-1)-subsets of the edge multiset.
/// Intended for m <= ~16.
Int spanning_tree_enumeration_oracle(const Multigraph& g);

/// Integer membership w in the column span of A, by column elimination.
bool column_elimination_member(const IntMatrix& a, const Vec& w);

/// Smallest h >= 1 with h*w in the column span of M, searching upward;
/// nullopt if none is found up to max_h.
std::optional<long> brute_force_class_order(const IntMatrix& m, const Vec& w,
                                                 long max_h = 1000000);

/// Brute-force order of the pair {i, j} in Phi(G).
long brute_force_pair_order(const Multigraph& g, int i, int j);

}  // namespace graphlap
