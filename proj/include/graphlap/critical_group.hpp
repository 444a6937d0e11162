#pragma once

#include "graphlap/multigraph.hpp"
#include "graphlap/snf.hpp"

namespace graphlap {

/// Isomorphism type of a finitely generated abelian cokernel: torsion factors
/// (> 1, each dividing the next) plus the free rank.
struct GroupStructure {
    std::vector<Int> torsion_factors;
    int free_rank = 0;

    Int order() const;     // product of the torsion factors
    Int exponent() const;  // last torsion factor, 1 for the trivial group
    friend bool operator==(const GroupStructure&, const GroupStructure&) = default;
};

/// Cokernel Z^rows / Im(M) of an arbitrary integer matrix.
GroupStructure cokernel(const IntMatrix& m);

/// Phi(G): torsion of Z^n / Im(M(G)). Free rank 1 for connected G, and the
/// order equals the spanning tree count.
GroupStructure critical_group(const Multigraph& g);

/// Order of the class of E_ij in Phi(G). Finite for connected G.
Int pair_order(const Multigraph& g, int i, int j);

/// Certificate for a pair order: M(G) * S = h * E_ij, weights normalized so
/// the minimum is 0 (s_i), with gcd of the weight differences equal to 1.
struct Marking {
    int i = 0;
    int j = 0;
    Int h;
    Vec weights;  // one per vertex, 1-based vertex k at weights[k-1]
    friend bool operator==(const Marking&, const Marking&) = default;
};

Marking marking(const Multigraph& g, int i, int j);
bool verify_marking(const Multigraph& g, const Marking& mk);

/// Self-pairing <tau, tau> = (s_i - s_j)/h of the class of E_ij, as the
/// canonical representative in [0, 1) of a class in Q/Z.
Rat pairing_self(const Multigraph& g, int i, int j);

/// Two vertices v, w joined by d chains of lengths n_1..n_d. chain_vertex[i]
/// lists the interior vertices v_{1,i+1}..v_{n-1,i+1} in order from v to w.
struct ChainGraph {
    Multigraph graph;
    int v = 0;
    int w = 0;
    std::vector<std::vector<int>> chain_vertex;
};

ChainGraph chain_graph(const std::vector<long>& lengths);

/// Closed-form order of the pair {v, w}: lcm(n_1..n_d) * (1/n_1 + ... + 1/n_d).
Int chain_pair_order_formula(const std::vector<long>& lengths);

/// Closed-form order of the pair {v, v_{k,d}} for 1 <= k <= n_d - 1 (d >= 2):
/// (P/k) * n_d * (1/n_1 + ... + 1/n_d) with P the smallest positive integer
/// making P/n_1, ..., P/n_{d-1} and Q = P + (n_d - k) P (sum_{i<d} 1/n_i) / k
/// all integral.
Int chain_pair_order_formula(const std::vector<long>& lengths, long k);

}  // namespace graphlap
