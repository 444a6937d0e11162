#pragma once

#include <optional>

#include "graphlap/multigraph.hpp"
#include "graphlap/snf.hpp"

namespace graphlap {

/// Integer witness that M - mu*Id fails to be spread: (M - mu*Id) * v = E_ij.
struct CollapsedWitness {
    Int mu;
    int i = 0;
    int j = 0;
    Vec v;
};

struct CollapsedReport {
    IntMatrix source;
    Int lo, hi;                              // scanned interval, inclusive
    std::vector<CollapsedWitness> collapsed; // in increasing mu order
    std::vector<Int> collapsed_set() const;
    bool is_collapsed(const Int& mu) const;
};

/// True iff no E_ij (i < j) lies in Im(M). E_ji = -E_ij never needs testing.
bool is_spread(const IntMatrix& m);

/// Witness that M is mu-collapsed, or nullopt when M - mu*Id is spread.
std::optional<CollapsedWitness> collapse_witness(const IntMatrix& m, const Int& mu);

CollapsedReport collapsed_values(const IntMatrix& m, const Int& lo, const Int& hi);
/// Default interval [-r, r] with r the certified scan radius.
CollapsedReport collapsed_values(const IntMatrix& m);

/// Certified scan radius: B = ceil(sqrt(sum of squared entries)) dominates the
/// spectral norm, so every collapsed value satisfies |mu| <= B + 2.
struct NormBound {
    Int frobenius_sq;
    Int bound;        // ceil(sqrt(frobenius_sq))
    Int scan_radius;  // bound + 2
};

NormBound norm_bound(const IntMatrix& m);

/// Collapsed values lambda +- 1 read off pairs (i, j) with M*E_ij an integer
/// eigenvector; each emitted value is confirmed by its +-E_ij witness.
std::vector<Int> eigenvector_collapse_pairs(const IntMatrix& m);

/// The degree-(n-1, n-1, n-4, n-4, 4..4, 2, 2) family with 1 + n/2 collapsed
/// values; n even, n >= 8.
Multigraph example_3_5_graph(int n);

/// ((2l, 1), (-l^2, 0)) with l = p_i + 1 (mod p_i^2) by CRT; each mu = l - p_i
/// is collapsed with an explicit integer witness.
struct GranvillePomerance {
    IntMatrix m;
    Int ell;
    std::vector<Int> expected_mu;
    std::vector<CollapsedWitness> witnesses;
};

GranvillePomerance granville_pomerance(const std::vector<Int>& primes);

/// Scan of the positive-semidefinite Laplacian of a connected simple graph:
/// lists every collapsed mu in [lo, hi] and asserts containment in [0, n+1].
struct ScanVerdict {
    Int lo, hi;
    std::vector<Int> collapsed;
    bool within_bound = false;  // all collapsed values inside [0, n+1]
};

ScanVerdict theorem_3_1_scan(const Multigraph& g, const Int& lo, const Int& hi);
ScanVerdict theorem_3_1_scan(const Multigraph& g, long margin = 4);

}  // namespace graphlap
