#include "graphlap/critical_group.hpp"

#include <algorithm>
#include <numeric>

namespace graphlap {

Int GroupStructure::order() const {
    Int p = 1;
    for (const Int& f : torsion_factors) p *= f;
    return p;
}

Int GroupStructure::exponent() const {
    return torsion_factors.empty() ? Int(1) : torsion_factors.back();
}

GroupStructure cokernel(const IntMatrix& m) {
    SmithDecomposition snf = smith_normal_form(m);
    GroupStructure out;
    int nonzero = 0;
    for (const Int& d : snf.invariant_factors) {
        if (d == 0) continue;
        ++nonzero;
        if (d > 1) out.torsion_factors.push_back(d);
    }
    out.free_rank = m.rows() - nonzero;
    return out;
}

GroupStructure critical_group(const Multigraph& g) {
    if (!g.connected()) throw std::invalid_argument("critical_group: disconnected graph");
    GroupStructure out = cokernel(laplacian_matrix(g));
    // Connected Laplacian: rank n-1, so exactly one free generator.
    if (out.free_rank != 1) throw std::logic_error("critical_group: unexpected free rank");
    return out;
}

Int pair_order(const Multigraph& g, int i, int j) {
    if (i == j) throw std::invalid_argument("pair_order: i == j");
    if (!g.connected()) throw std::invalid_argument("pair_order: disconnected graph");
    auto h = cokernel_class_order(laplacian_matrix(g), basis_difference(g.order(), i, j));
    if (!h) throw std::logic_error("pair_order: E_ij class unexpectedly infinite");
    return *h;
}

Marking marking(const Multigraph& g, int i, int j) {
    if (i == j) throw std::invalid_argument("marking: i == j");
    if (!g.connected()) throw std::invalid_argument("marking: disconnected graph");
    SmithDecomposition snf = smith_normal_form(laplacian_matrix(g));
    Vec e = basis_difference(g.order(), i, j);
    auto h = cokernel_class_order(snf, e);
    if (!h) throw std::logic_error("marking: infinite order");
    Vec target(e.size());
    for (size_t k = 0; k < e.size(); ++k) target[k] = *h * e[k];
    auto s = lattice_solve(snf, target);
    if (!s) throw std::logic_error("marking: h*E_ij not in the image lattice");
    Int lo = *std::min_element(s->begin(), s->end());
    for (Int& x : *s) x -= lo;
    Marking mk{i, j, *h, std::move(*s)};
    if (!verify_marking(g, mk)) throw std::logic_error("marking: extracted certificate invalid");
    return mk;
}

bool verify_marking(const Multigraph& g, const Marking& mk) {
    const int n = g.order();
    if (static_cast<int>(mk.weights.size()) != n)
        throw std::invalid_argument("verify_marking: weight vector size mismatch");
    if (mk.i < 1 || mk.i > n || mk.j < 1 || mk.j > n || mk.i == mk.j) return false;
    if (mk.h < 1) return false;

    // M(G) * S = h * E_ij, entry-exact.
    Vec ms = laplacian_matrix(g) * mk.weights;
    for (int k = 1; k <= n; ++k) {
        Int expect = k == mk.i ? mk.h : (k == mk.j ? -mk.h : Int(0));
        if (ms[k - 1] != expect) return false;
    }

    // gcd(s_1 - s_n, ..., s_{n-1} - s_n) = 1.
    Int d = 0;
    for (int k = 0; k + 1 < n; ++k) d = gcd(d, Int(mk.weights[k] - mk.weights[n - 1]));
    if (abs(d) != 1) return false;

    // s_i minimal, s_j maximal.
    const Int& lo = *std::min_element(mk.weights.begin(), mk.weights.end());
    const Int& hi = *std::max_element(mk.weights.begin(), mk.weights.end());
    if (mk.weights[mk.i - 1] != lo || mk.weights[mk.j - 1] != hi) return false;

    // h as the weighted weight-gap sum around v_i.
    Int sum = 0;
    for (int v : g.neighbors(mk.i))
        sum += (mk.weights[v - 1] - mk.weights[mk.i - 1]) * g.multiplicity(v, mk.i);
    return sum == mk.h;
}

Rat pairing_self(const Multigraph& g, int i, int j) {
    Marking mk = marking(g, i, j);
    Int num = mk.weights[i - 1] - mk.weights[j - 1];
    mpz_fdiv_r(num.get_mpz_t(), num.get_mpz_t(), mk.h.get_mpz_t());  // into [0, h)
    Rat out(num, mk.h);
    out.canonicalize();
    return out;
}

ChainGraph chain_graph(const std::vector<long>& lengths) {
    if (lengths.empty()) throw std::invalid_argument("chain_graph: need at least one chain");
    long interior = 0;
    for (long ni : lengths) {
        if (ni < 1) throw std::invalid_argument("chain_graph: chain length < 1");
        interior += ni - 1;
    }
    ChainGraph out{Multigraph(static_cast<int>(2 + interior)), 1, 2, {}};
    int next = 3;
    for (long ni : lengths) {
        std::vector<int> chain;
        int prev = out.v;
        for (long k = 1; k < ni; ++k) {
            out.graph.add_edges(prev, next);
            chain.push_back(next);
            prev = next++;
        }
        out.graph.add_edges(prev, out.w);
        out.chain_vertex.push_back(std::move(chain));
    }
    return out;
}

Int chain_pair_order_formula(const std::vector<long>& lengths) {
    if (lengths.empty()) throw std::invalid_argument("chain order formula: empty length list");
    Int big_l = 1;
    for (long ni : lengths) big_l = lcm(big_l, Int(ni));
    Int h = 0;
    for (long ni : lengths) h += big_l / ni;
    return h;
}

Int chain_pair_order_formula(const std::vector<long>& lengths, long k) {
    const size_t d = lengths.size();
    if (d < 2) throw std::invalid_argument("chain order formula: interior target needs d >= 2");
    const long nd = lengths.back();
    if (k < 1 || k >= nd) throw std::invalid_argument("chain order formula: k out of range");
    Int lp = 1;  // lcm(n_1, ..., n_{d-1})
    Rat head_sum = 0;
    for (size_t i = 0; i + 1 < d; ++i) {
        lp = lcm(lp, Int(lengths[i]));
        head_sum += Rat(1, lengths[i]);
    }
    head_sum.canonicalize();
    Int p;
    for (Int t = 1;; ++t) {
        p = lp * t;
        Rat q = (Rat(p) + Rat(nd - k) * Rat(p) * head_sum) / Rat(k);
        q.canonicalize();
        if (q.get_den() == 1) break;
    }
    Rat order = Rat(p, k) * Rat(nd) * (head_sum + Rat(1, nd));
    order.canonicalize();
    if (order.get_den() != 1) throw std::logic_error("chain order formula: non-integral order");
    return order.get_num();
}

}  // namespace graphlap
