#include "graphlap/multigraph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "graphlap/snf.hpp"

namespace graphlap {

Multigraph::Multigraph(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("multigraph needs at least one vertex");
    mult_.assign(static_cast<size_t>(n) * n, 0);
}

void Multigraph::check_vertex(int i) const {
    if (i < 1 || i > n_) throw std::invalid_argument("vertex index out of range");
}

long Multigraph::multiplicity(int i, int j) const {
    check_vertex(i);
    check_vertex(j);
    if (i == j) return 0;
    return mult_[static_cast<size_t>(i - 1) * n_ + (j - 1)];
}

void Multigraph::set_multiplicity(int i, int j, long c) {
    check_vertex(i);
    check_vertex(j);
    if (i == j) throw std::invalid_argument("loops are not allowed");
    if (c < 0) throw std::invalid_argument("negative edge multiplicity");
    mult_[static_cast<size_t>(i - 1) * n_ + (j - 1)] = c;
    mult_[static_cast<size_t>(j - 1) * n_ + (i - 1)] = c;
}

void Multigraph::add_edges(int i, int j, long c) {
    if (c < 0) throw std::invalid_argument("add_edges: negative count");
    set_multiplicity(i, j, multiplicity(i, j) + c);
}

long Multigraph::edge_count() const {
    long m = 0;
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j) m += multiplicity(i, j);
    return m;
}

long Multigraph::degree(int i) const {
    long d = 0;
    for (int j = 1; j <= n_; ++j)
        if (j != i) d += multiplicity(i, j);
    return d;
}

bool Multigraph::connected() const {
    std::vector<char> seen(n_ + 1, 0);
    std::deque<int> queue{1};
    seen[1] = 1;
    int count = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v = 1; v <= n_; ++v)
            if (!seen[v] && multiplicity(u, v) > 0) {
                seen[v] = 1;
                ++count;
                queue.push_back(v);
            }
    }
    return count == n_;
}

int Multigraph::distance(int i, int j) const {
    check_vertex(i);
    check_vertex(j);
    std::vector<int> dist(n_ + 1, -1);
    std::deque<int> queue{i};
    dist[i] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (u == j) return dist[u];
        for (int v = 1; v <= n_; ++v)
            if (dist[v] < 0 && multiplicity(u, v) > 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
    }
    return dist[j];
}

int Multigraph::diameter() const {
    int diam = 0;
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j) {
            int d = distance(i, j);
            if (d < 0) throw std::invalid_argument("diameter of a disconnected graph");
            diam = std::max(diam, d);
        }
    return diam;
}

std::vector<std::pair<int, int>> Multigraph::edge_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j)
            if (multiplicity(i, j) > 0) out.emplace_back(i, j);
    return out;
}

std::vector<int> Multigraph::neighbors(int i) const {
    std::vector<int> out;
    for (int v = 1; v <= n_; ++v)
        if (v != i && multiplicity(i, v) > 0) out.push_back(v);
    return out;
}

IntMatrix laplacian_matrix(const Multigraph& g) {
    const int n = g.order();
    IntMatrix m(n, n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j)
            if (i != j) m.at(i - 1, j - 1) = g.multiplicity(i, j);
        m.at(i - 1, i - 1) = -Int(g.degree(i));
    }
    return m;
}

Int spanning_tree_count(const Multigraph& g) {
    if (!g.connected()) throw std::invalid_argument("spanning_tree_count: disconnected graph");
    const int n = g.order();
    if (n == 1) return 1;
    IntMatrix full = laplacian_matrix(g);
    IntMatrix reduced(n - 1, n - 1);
    for (int i = 0; i < n - 1; ++i)
        for (int j = 0; j < n - 1; ++j) reduced.at(i, j) = full.at(i, j);
    return abs(determinant(reduced));
}

namespace {

struct BridgeDfs {
    const Multigraph& g;
    std::vector<int> disc, low;
    std::vector<std::pair<int, int>> found;
    int timer = 0;

    explicit BridgeDfs(const Multigraph& graph)
        : g(graph), disc(graph.order() + 1, -1), low(graph.order() + 1, 0) {}

    void run(int u, int parent) {
        disc[u] = low[u] = timer++;
        bool parent_skipped = false;
        for (int v : g.neighbors(u)) {
            if (v == parent && !parent_skipped && g.multiplicity(u, v) == 1) {
                // A single copy back to the parent is the tree edge itself;
                // parallel copies count as a cycle.
                parent_skipped = true;
                continue;
            }
            if (disc[v] < 0) {
                run(v, u);
                low[u] = std::min(low[u], low[v]);
                if (low[v] > disc[u] && g.multiplicity(u, v) == 1)
                    found.emplace_back(std::min(u, v), std::max(u, v));
            } else {
                low[u] = std::min(low[u], disc[v]);
            }
        }
    }
};

}  // namespace

std::vector<std::pair<int, int>> bridges(const Multigraph& g) {
    if (!g.connected()) throw std::invalid_argument("bridges: disconnected graph");
    BridgeDfs dfs(g);
    dfs.run(1, 0);
    std::sort(dfs.found.begin(), dfs.found.end());
    return dfs.found;
}

bool is_multiply_connected(const Multigraph& g) {
    return bridges(g).empty();
}

void enumerate_connected(int n, long max_mult,
                         const std::function<void(const Multigraph&)>& sink, int limit) {
    if (n < 1) throw std::invalid_argument("enumerate_connected: n < 1");
    if (max_mult < 0) throw std::invalid_argument("enumerate_connected: negative multiplicity");
    const int guard = limit > 0 ? limit : (max_mult <= 1 ? 6 : 4);
    if (n > guard) throw std::invalid_argument("enumerate_connected: n exceeds size guard");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
    std::vector<long> mult(pairs.size(), 0);
    Multigraph g(n);
    for (;;) {
        for (size_t k = 0; k < pairs.size(); ++k)
            g.set_multiplicity(pairs[k].first, pairs[k].second, mult[k]);
        if (g.connected()) sink(g);
        size_t k = pairs.size();
        while (k > 0) {
            --k;
            if (mult[k] < max_mult) {
                ++mult[k];
                break;
            }
            mult[k] = 0;
            if (k == 0) return;
        }
        if (pairs.empty()) return;  // n == 1: single graph already emitted
    }
}

std::vector<Multigraph> enumerate_connected(int n, long max_mult, int limit) {
    std::vector<Multigraph> out;
    enumerate_connected(n, max_mult, [&](const Multigraph& g) { out.push_back(g); }, limit);
    return out;
}

Multigraph parse_graph(std::istream& in) {
    std::string line;
    int n = -1;
    Multigraph g(1);
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string tag;
        if (!(ss >> tag) || tag[0] == '#') continue;
        if (tag == "n") {
            if (n >= 0) throw std::runtime_error("graph file: duplicate `n` line");
            if (!(ss >> n) || n < 1) throw std::runtime_error("graph file: bad vertex count");
            g = Multigraph(n);
        } else if (tag == "e") {
            if (n < 0) throw std::runtime_error("graph file: `e` before `n`");
            int i, j;
            long c = 1;
            if (!(ss >> i >> j)) throw std::runtime_error("graph file: bad edge line");
            ss >> c;
            if (i == j) throw std::runtime_error("graph file: loop edge rejected");
            if (i < 1 || i > n || j < 1 || j > n)
                throw std::runtime_error("graph file: edge endpoint out of range");
            if (c < 1) throw std::runtime_error("graph file: non-positive multiplicity");
            g.add_edges(i, j, c);
        } else if (tag == "w" || tag == "p") {
            continue;  // marking annotations, handled by the marked-graph reader
        } else {
            throw std::runtime_error("graph file: unknown tag `" + tag + "` on line " +
                                     std::to_string(lineno));
        }
    }
    if (n < 0) throw std::runtime_error("graph file: missing `n` line");
    return g;
}

void write_graph(std::ostream& out, const Multigraph& g) {
    out << "n " << g.order() << '\n';
    for (auto [i, j] : g.edge_pairs()) out << "e " << i << ' ' << j << ' ' << g.multiplicity(i, j) << '\n';
}

Multigraph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Multigraph g(n);
    for (int i = 1; i < n; ++i) g.add_edges(i, i + 1);
    g.add_edges(n, 1);
    return g;
}

Multigraph path_graph(int n) {
    Multigraph g(n);
    for (int i = 1; i < n; ++i) g.add_edges(i, i + 1);
    return g;
}

Multigraph complete_graph(int n) {
    Multigraph g(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) g.add_edges(i, j);
    return g;
}

Multigraph complete_bipartite(int p, int q) {
    Multigraph g(p + q);
    for (int i = 1; i <= p; ++i)
        for (int j = p + 1; j <= p + q; ++j) g.add_edges(i, j);
    return g;
}

Multigraph banana_graph(long h) {
    if (h < 1) throw std::invalid_argument("banana_graph needs at least one edge");
    Multigraph g(2);
    g.add_edges(1, 2, h);
    return g;
}

}  // namespace graphlap
