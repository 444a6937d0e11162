#include "graphlap/oracles.hpp"

#include <numeric>

#include "graphlap/snf.hpp"

namespace graphlap {

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n + 1) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

}  // namespace

Int spanning_tree_enumeration_oracle(const Multigraph& g) {
    if (!g.connected()) throw std::invalid_argument("enumeration oracle: disconnected graph");
    const int n = g.order();
    if (n == 1) return 1;
    std::vector<std::pair<int, int>> edges;
    for (auto [i, j] : g.edge_pairs())
        for (long c = 0; c < g.multiplicity(i, j); ++c) edges.emplace_back(i, j);
    const int m = static_cast<int>(edges.size());
    const int need = n - 1;
    Int count = 0;
    std::vector<int> pick(need);
    auto rec = [&](auto&& self, int start, int depth) -> void {
        if (depth == need) {
            Dsu dsu(n);
            for (int t = 0; t < need; ++t)
                if (!dsu.unite(edges[pick[t]].first, edges[pick[t]].second)) return;
            ++count;  // n-1 edges, acyclic => spanning tree
            return;
        }
        for (int e = start; e <= m - (need - depth); ++e) {
            pick[depth] = e;
            self(self, e + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
    return count;
}

bool column_elimination_member(const IntMatrix& a, const Vec& w) {
    if (a.rows() != static_cast<int>(w.size()))
        throw std::invalid_argument("column_elimination_member: dimension mismatch");
    IntMatrix work = a;
    Vec rem = w;
    const int r = work.rows(), c = work.cols();
    int col = 0;
    for (int row = 0; row < r; ++row) {
        if (col < c) {
            for (;;) {
                int best = -1;
                Int bestabs;
                for (int j = col; j < c; ++j) {
                    if (work.at(row, j) == 0) continue;
                    Int v = abs(work.at(row, j));
                    if (best < 0 || v < bestabs) {
                        best = j;
                        bestabs = v;
                    }
                }
                if (best < 0) break;
                work.swap_cols(col, best);
                bool clean = true;
                for (int j = col + 1; j < c; ++j) {
                    if (work.at(row, j) == 0) continue;
                    Int q = work.at(row, j) / work.at(row, col);
                    if (q != 0) work.add_col_multiple(j, col, -q);
                    if (work.at(row, j) != 0) clean = false;
                }
                if (clean) break;
            }
        }
        if (col < c && work.at(row, col) != 0) {
            if (rem[row] % work.at(row, col) != 0) return false;
            Int x = rem[row] / work.at(row, col);
            if (x != 0)
                for (int i = 0; i < r; ++i) rem[i] -= x * work.at(i, col);
            ++col;
        } else if (rem[row] != 0) {
            return false;
        }
    }
    return true;
}

std::optional<long> brute_force_class_order(const IntMatrix& m, const Vec& w, long max_h) {
    for (long h = 1; h <= max_h; ++h) {
        Vec hw(w.size());
        for (size_t k = 0; k < w.size(); ++k) hw[k] = h * w[k];
        if (column_elimination_member(m, hw)) return h;
    }
    return std::nullopt;
}

long brute_force_pair_order(const Multigraph& g, int i, int j) {
    auto h = brute_force_class_order(laplacian_matrix(g), basis_difference(g.order(), i, j));
    if (!h) throw std::logic_error("brute_force_pair_order: search cap exceeded");
    return *h;
}

}  // namespace graphlap
