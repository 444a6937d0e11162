#pragma once

#include <functional>
#include <iosfwd>
#include <utility>
#include <vector>

#include "graphlap/intmatrix.hpp"

namespace graphlap {

/// One copy of a parallel edge bundle: endpoints i < j (1-based) and the
/// copy's index within the bundle.
struct EdgeRef {
    int i = 0;
    int j = 0;
    long copy = 0;
    friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
    friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

/// Loopless multigraph on vertices 1..n with symmetric edge multiplicities.
class Multigraph {
public:
    explicit Multigraph(int n);

    int order() const { return n_; }
    long multiplicity(int i, int j) const;
    void set_multiplicity(int i, int j, long c);
    void add_edges(int i, int j, long c = 1);

    long edge_count() const;  // m, with multiplicity
    long degree(int i) const;
    long cycle_rank() const { return edge_count() - n_ + 1; }

    bool connected() const;
    int diameter() const;  // requires connected
    int distance(int i, int j) const;  // BFS hops, -1 if unreachable

    /// Pairs {i < j} with multiplicity > 0, in lexicographic order.
    std::vector<std::pair<int, int>> edge_pairs() const;
    std::vector<int> neighbors(int i) const;

    friend bool operator==(const Multigraph&, const Multigraph&) = default;

private:
    void check_vertex(int i) const;
    int n_;
    std::vector<long> mult_;
};

/// M(G): c_ij off-diagonal, -degree on the diagonal (every row sums to zero).
IntMatrix laplacian_matrix(const Multigraph& g);

/// kappa(G) = |det| of the Laplacian with the last row and column deleted.
Int spanning_tree_count(const Multigraph& g);

/// Endpoint pairs of the edges whose removal disconnects G.
std::vector<std::pair<int, int>> bridges(const Multigraph& g);

bool is_multiply_connected(const Multigraph& g);

/// Every labeled connected multigraph on n vertices with multiplicities up to
/// max_mult, in a fixed deterministic order. `limit` overrides the default
/// size guard (6 simple / 4 multi); 0 keeps the default.
void enumerate_connected(int n, long max_mult,
                         const std::function<void(const Multigraph&)>& sink, int limit = 0);
std::vector<Multigraph> enumerate_connected(int n, long max_mult, int limit = 0);

/// Text format: `n <count>`, then `e <i> <j> [mult]` lines (1-based, repeats
/// accumulate); `#` comment lines ignored.
Multigraph parse_graph(std::istream& in);
void write_graph(std::ostream& out, const Multigraph& g);

// Small builders used across the test and verification suites.
Multigraph cycle_graph(int n);
Multigraph path_graph(int n);
Multigraph complete_graph(int n);
Multigraph complete_bipartite(int p, int q);
Multigraph banana_graph(long h);  // G_h: two vertices joined by h parallel edges

}  // namespace graphlap
