#include "graphlap/collapsed.hpp"

#include <algorithm>
#include <set>

namespace graphlap {

std::vector<Int> CollapsedReport::collapsed_set() const {
    std::vector<Int> out;
    for (const auto& w : collapsed) out.push_back(w.mu);
    return out;
}

bool CollapsedReport::is_collapsed(const Int& mu) const {
    for (const auto& w : collapsed)
        if (w.mu == mu) return true;
    return false;
}

std::optional<CollapsedWitness> collapse_witness(const IntMatrix& m, const Int& mu) {
    if (m.rows() != m.cols()) throw std::invalid_argument("collapse_witness: non-square matrix");
    const int n = m.rows();
    SmithDecomposition snf = smith_normal_form(shift_diagonal(m, mu));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (auto v = lattice_solve(snf, basis_difference(n, i, j)))
                return CollapsedWitness{mu, i, j, std::move(*v)};
    return std::nullopt;
}

bool is_spread(const IntMatrix& m) {
    return !collapse_witness(m, 0).has_value();
}

CollapsedReport collapsed_values(const IntMatrix& m, const Int& lo, const Int& hi) {
    if (lo > hi) throw std::invalid_argument("collapsed_values: lo > hi");
    CollapsedReport report{m, lo, hi, {}};
    for (Int mu = lo; mu <= hi; ++mu) {
        auto w = collapse_witness(m, mu);
        if (!w) continue;
        // Witness soundness: re-multiply before reporting.
        Vec check = shift_diagonal(m, mu) * w->v;
        Vec e = basis_difference(m.rows(), w->i, w->j);
        if (check != e) throw std::logic_error("collapsed_values: witness failed re-verification");
        report.collapsed.push_back(std::move(*w));
    }
    return report;
}

NormBound norm_bound(const IntMatrix& m) {
    NormBound nb;
    nb.frobenius_sq = 0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) nb.frobenius_sq += m.at(i, j) * m.at(i, j);
    mpz_sqrt(nb.bound.get_mpz_t(), nb.frobenius_sq.get_mpz_t());
    if (nb.bound * nb.bound < nb.frobenius_sq) nb.bound += 1;  // ceiling
    nb.scan_radius = nb.bound + 2;
    return nb;
}

CollapsedReport collapsed_values(const IntMatrix& m) {
    Int r = norm_bound(m).scan_radius;
    return collapsed_values(m, -r, r);
}

std::vector<Int> eigenvector_collapse_pairs(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("eigenvector_collapse_pairs: non-square");
    const int n = m.rows();
    std::set<Int> mus;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Vec e = basis_difference(n, i, j);
            Vec w = m * e;
            // M * E_ij = lambda * E_ij with integer lambda?
            bool eigen = true;
            for (int k = 1; k <= n && eigen; ++k)
                if (k != i && k != j && w[k - 1] != 0) eigen = false;
            if (!eigen || w[i - 1] != -w[j - 1]) continue;
            const Int& lambda = w[i - 1];
            for (Int mu : {Int(lambda - 1), Int(lambda + 1)}) {
                // Confirm by the direct witness +-E_ij.
                Vec v = e;
                if (mu == lambda + 1)
                    for (Int& x : v) x = -x;
                if (shift_diagonal(m, mu) * v != e)
                    throw std::logic_error("eigenvector_collapse_pairs: witness check failed");
                mus.insert(mu);
            }
        }
    return {mus.begin(), mus.end()};
}

Multigraph example_3_5_graph(int n) {
    if (n < 8 || n % 2 != 0) throw std::invalid_argument("example_3_5_graph: need even n >= 8");
    Multigraph g(n);
    // Vertices 1, 2: adjacent to everything. Vertices 3, 4: adjacent to 1, 2
    // and the middle block. Middle block 5..n-2: adjacent to {1,2,3,4} only.
    // Last two: adjacent to {1, 2} only.
    for (int v = 2; v <= n; ++v) g.add_edges(1, v);
    for (int v = 3; v <= n; ++v) g.add_edges(2, v);
    for (int a : {3, 4})
        for (int v = 5; v <= n - 2; ++v) g.add_edges(a, v);
    return g;
}

GranvillePomerance granville_pomerance(const std::vector<Int>& primes) {
    if (primes.empty()) throw std::invalid_argument("granville_pomerance: empty prime list");
    std::set<Int> distinct(primes.begin(), primes.end());
    if (distinct.size() != primes.size())
        throw std::invalid_argument("granville_pomerance: repeated primes");

    // CRT: l = p_i + 1 (mod p_i^2), least positive solution.
    Int ell = 0, modulus = 1;
    for (const Int& p : primes) {
        Int p2 = p * p;
        Int target;
        mpz_mod(target.get_mpz_t(), Int(p + 1).get_mpz_t(), p2.get_mpz_t());
        // Solve ell + modulus * t = target (mod p2).
        Int inv;
        if (mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), p2.get_mpz_t()) == 0)
            throw std::invalid_argument("granville_pomerance: moduli not coprime");
        Int t;
        mpz_mod(t.get_mpz_t(), Int((target - ell) * inv).get_mpz_t(), p2.get_mpz_t());
        ell += modulus * t;
        modulus *= p2;
    }
    if (ell == 0) ell = modulus;

    GranvillePomerance out;
    out.ell = ell;
    out.m = IntMatrix(2, 2);
    out.m.at(0, 0) = 2 * ell;
    out.m.at(0, 1) = 1;
    out.m.at(1, 0) = -ell * ell;
    out.m.at(1, 1) = 0;
    for (const Int& p : primes) {
        Int mu = ell - p;
        Int denom = (mu - ell) * (mu - ell);  // p^2
        Int s1 = (1 - mu) / denom;
        Int s2 = (ell * ell - 2 * ell + mu) / denom;
        if ((1 - mu) % denom != 0 || (ell * ell - 2 * ell + mu) % denom != 0)
            throw std::logic_error("granville_pomerance: witness formulas not integral");
        Vec v{s1, s2};
        if (shift_diagonal(out.m, mu) * v != Vec{Int(1), Int(-1)})
            throw std::logic_error("granville_pomerance: witness failed re-verification");
        out.expected_mu.push_back(mu);
        out.witnesses.push_back(CollapsedWitness{mu, 1, 2, std::move(v)});
    }
    return out;
}

ScanVerdict theorem_3_1_scan(const Multigraph& g, const Int& lo, const Int& hi) {
    if (!g.connected()) throw std::invalid_argument("theorem_3_1_scan: disconnected graph");
    for (auto [u, v] : g.edge_pairs())
        if (g.multiplicity(u, v) > 1)
            throw std::invalid_argument("theorem_3_1_scan: graph must be simple");
    // Positive-semidefinite convention: the negation of M(G).
    IntMatrix lap = laplacian_matrix(g);
    for (int i = 0; i < lap.rows(); ++i)
        for (int j = 0; j < lap.cols(); ++j) lap.at(i, j) = -lap.at(i, j);
    ScanVerdict verdict{lo, hi, {}, true};
    for (const auto& w : collapsed_values(lap, lo, hi).collapsed) {
        if (w.mu < 0 || w.mu > g.order() + 1) verdict.within_bound = false;
        verdict.collapsed.push_back(w.mu);
    }
    return verdict;
}

ScanVerdict theorem_3_1_scan(const Multigraph& g, long margin) {
    const int n = g.order();
    return theorem_3_1_scan(g, Int(-n - margin), Int(2 * n + margin));
}

}  // namespace graphlap
