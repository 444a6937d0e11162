#include "graphlap/path_systems.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <ostream>
#include <set>

namespace graphlap {

namespace {

EdgeRef normalized(int u, int v, long copy) {
    return EdgeRef{std::min(u, v), std::max(u, v), copy};
}

// Connectivity between a and b after removing the given edge copies.
bool connected_without(const Multigraph& g, const std::map<std::pair<int, int>, long>& removed,
                       int a, int b) {
    auto mult = [&](int u, int v) {
        long c = g.multiplicity(u, v);
        auto it = removed.find({std::min(u, v), std::max(u, v)});
        if (it != removed.end()) c -= it->second;
        return c;
    };
    std::vector<char> seen(g.order() + 1, 0);
    std::deque<int> queue{a};
    seen[a] = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (u == b) return true;
        for (int v = 1; v <= g.order(); ++v)
            if (!seen[v] && v != u && mult(u, v) > 0) {
                seen[v] = 1;
                queue.push_back(v);
            }
    }
    return false;
}

void check_well_formed(const Multigraph& g, const PathSystem& ps) {
    if (ps.i < 1 || ps.i > g.order() || ps.j < 1 || ps.j > g.order() || ps.i == ps.j)
        throw std::invalid_argument("path system: bad endpoints");
    if (ps.vertices.empty() || ps.vertices.size() != ps.edges.size())
        throw std::invalid_argument("path system: malformed path lists");
    for (size_t p = 0; p < ps.vertices.size(); ++p) {
        const auto& vs = ps.vertices[p];
        const auto& es = ps.edges[p];
        if (vs.size() != es.size() + 1 || es.empty())
            throw std::invalid_argument("path system: malformed path");
        for (size_t t = 0; t < es.size(); ++t) {
            int u = vs[t], v = vs[t + 1];
            if (u < 1 || u > g.order() || v < 1 || v > g.order() || u == v)
                throw std::invalid_argument("path system: bad path vertex");
            EdgeRef e = es[t];
            if (e != normalized(u, v, e.copy))
                throw std::invalid_argument("path system: edge does not join consecutive vertices");
            if (e.copy < 0 || e.copy >= g.multiplicity(u, v))
                throw std::invalid_argument("path system: edge copy out of range");
        }
    }
}

}  // namespace

bool verify_path_system(const Multigraph& g, const PathSystem& ps) {
    check_well_formed(g, ps);
    const size_t h = ps.vertices.size();
    const size_t len = ps.edges[0].size();
    for (size_t p = 0; p < h; ++p) {
        if (ps.edges[p].size() != len) return false;  // common length required
        if (ps.vertices[p].front() != ps.i || ps.vertices[p].back() != ps.j) return false;
        std::set<EdgeRef> distinct(ps.edges[p].begin(), ps.edges[p].end());
        if (distinct.size() != len) return false;  // edges of a path are all distinct
    }

    // Shared vertices and shared edges must carry equal numbering.
    std::map<int, size_t> vertex_pos;
    std::map<EdgeRef, size_t> edge_pos;
    for (size_t p = 0; p < h; ++p) {
        for (size_t t = 0; t <= len; ++t) {
            auto [it, fresh] = vertex_pos.try_emplace(ps.vertices[p][t], t);
            if (!fresh && it->second != t) return false;
        }
        for (size_t t = 0; t < len; ++t) {
            auto [it, fresh] = edge_pos.try_emplace(ps.edges[p][t], t);
            if (!fresh && it->second != t) return false;
        }
    }

    // Removing any single layer must separate v_i from v_j.
    for (size_t k = 0; k < len; ++k) {
        std::set<EdgeRef> layer;
        for (size_t p = 0; p < h; ++p) layer.insert(ps.edges[p][k]);
        std::map<std::pair<int, int>, long> removed;
        for (const EdgeRef& e : layer) ++removed[{e.i, e.j}];
        if (connected_without(g, removed, ps.i, ps.j)) return false;
    }

    // Every path in a system is a shortest path.
    return static_cast<int>(len) == g.distance(ps.i, ps.j);
}

bool order_one_pair(const Multigraph& g, int i, int j) {
    if (!g.connected()) throw std::invalid_argument("order_one_pair: disconnected graph");
    if (i == j) throw std::invalid_argument("order_one_pair: i == j");
    Multigraph bridges_only(g.order());
    for (auto [u, v] : bridges(g)) bridges_only.add_edges(u, v);
    return bridges_only.distance(i, j) >= 0;
}

bool spread_check(const Multigraph& g) {
    if (!g.connected()) throw std::invalid_argument("spread_check: disconnected graph");
    return is_multiply_connected(g);
}

namespace {

// All simple shortest vertex paths i -> j, capped by `budget`.
bool shortest_vertex_paths(const Multigraph& g, int i, int j, long budget,
                           std::vector<std::vector<int>>& out) {
    const int dist = g.distance(i, j);
    std::vector<int> to_j(g.order() + 1, -1);
    {
        std::deque<int> queue{j};
        to_j[j] = 0;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : g.neighbors(u))
                if (to_j[v] < 0) {
                    to_j[v] = to_j[u] + 1;
                    queue.push_back(v);
                }
        }
    }
    std::vector<int> cur{i};
    bool truncated = false;
    auto dfs = [&](auto&& self, int u, int depth) -> void {
        if (truncated) return;
        if (u == j) {
            if (static_cast<long>(out.size()) >= budget) {
                truncated = true;
                return;
            }
            out.push_back(cur);
            return;
        }
        for (int v : g.neighbors(u)) {
            if (to_j[v] != dist - depth - 1) continue;
            cur.push_back(v);
            self(self, v, depth + 1);
            cur.pop_back();
        }
    };
    dfs(dfs, i, 0);
    return !truncated;
}

// Expand a vertex path into all edge-instance paths (one copy choice per step).
void expand_copies(const Multigraph& g, const std::vector<int>& vs,
                   std::vector<std::vector<EdgeRef>>& out) {
    std::vector<EdgeRef> cur;
    auto rec = [&](auto&& self, size_t t) -> void {
        if (t + 1 == vs.size()) {
            out.push_back(cur);
            return;
        }
        long c = g.multiplicity(vs[t], vs[t + 1]);
        for (long copy = 0; copy < c; ++copy) {
            cur.push_back(normalized(vs[t], vs[t + 1], copy));
            self(self, t + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

}  // namespace

TwoPathResult order_two_certificate(const Multigraph& g, int i, int j, long budget) {
    if (!g.connected()) throw std::invalid_argument("order_two_certificate: disconnected graph");
    if (i == j) throw std::invalid_argument("order_two_certificate: i == j");
    std::vector<std::vector<int>> vertex_paths;
    bool complete = shortest_vertex_paths(g, i, j, budget, vertex_paths);

    std::vector<std::pair<std::vector<int>, std::vector<EdgeRef>>> paths;
    for (const auto& vs : vertex_paths) {
        std::vector<std::vector<EdgeRef>> instances;
        expand_copies(g, vs, instances);
        for (auto& es : instances) {
            paths.emplace_back(vs, std::move(es));
            if (static_cast<long>(paths.size()) > budget) complete = false;
        }
        if (!complete && static_cast<long>(paths.size()) > budget) break;
    }

    for (size_t a = 0; a < paths.size(); ++a)
        for (size_t b = a + 1; b < paths.size(); ++b) {
            // The two paths must be distinct at the edge-instance level;
            // overlaps (shared edges) are allowed.
            PathSystem ps{i, j,
                          {paths[a].first, paths[b].first},
                          {paths[a].second, paths[b].second}};
            if (verify_path_system(g, ps)) return {SearchStatus::found, std::move(ps)};
        }
    return {complete ? SearchStatus::absent : SearchStatus::budget_exceeded, std::nullopt};
}

Marking marking_from_path_system(const Multigraph& g, const PathSystem& ps) {
    if (!verify_path_system(g, ps))
        throw std::invalid_argument("marking_from_path_system: system does not verify");
    const size_t h = ps.vertices.size();
    const size_t len = ps.edges[0].size();
    std::map<int, Int> weight;
    weight[ps.i] = 0;
    for (size_t k = 0; k < len; ++k) {
        std::map<EdgeRef, int> layer_count;
        for (size_t p = 0; p < h; ++p) ++layer_count[ps.edges[p][k]];
        for (size_t p = 0; p < h; ++p) {
            int u = ps.vertices[p][k], x = ps.vertices[p][k + 1];
            Int step = layer_count[ps.edges[p][k]] >= 2 ? 2 : 1;
            Int w = weight.at(u) + step;
            auto [it, fresh] = weight.try_emplace(x, w);
            if (!fresh && it->second != w)
                throw std::logic_error("marking_from_path_system: inconsistent path weights");
        }
    }

    // Off-system components inherit the weight of their contact vertices.
    std::map<std::pair<int, int>, long> removed;
    {
        std::set<EdgeRef> all;
        for (const auto& es : ps.edges) all.insert(es.begin(), es.end());
        for (const EdgeRef& e : all) ++removed[{e.i, e.j}];
    }
    Vec weights(g.order());
    std::vector<char> assigned(g.order() + 1, 0);
    std::vector<char> visited(g.order() + 1, 0);
    for (int start = 1; start <= g.order(); ++start) {
        if (visited[start]) continue;
        // Component of the residual graph containing `start`.
        std::vector<int> comp;
        std::deque<int> queue{start};
        visited[start] = 1;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            comp.push_back(u);
            for (int v = 1; v <= g.order(); ++v) {
                if (visited[v] || v == u) continue;
                long c = g.multiplicity(u, v);
                auto it = removed.find({std::min(u, v), std::max(u, v)});
                if (it != removed.end()) c -= it->second;
                if (c > 0) {
                    visited[v] = 1;
                    queue.push_back(v);
                }
            }
        }
        std::optional<Int> w;
        for (int u : comp)
            if (auto it = weight.find(u); it != weight.end()) {
                if (w && *w != it->second)
                    throw std::logic_error("marking_from_path_system: component touches two weights");
                w = it->second;
            }
        if (!w) throw std::logic_error("marking_from_path_system: component off the system");
        for (int u : comp) {
            weights[u - 1] = weight.count(u) ? weight.at(u) : *w;
            assigned[u] = 1;
        }
    }
    (void)assigned;

    Marking mk{ps.i, ps.j, Int(static_cast<long>(h)), std::move(weights)};
    if (!verify_marking(g, mk))
        throw std::logic_error("marking_from_path_system: transported marking invalid");
    return mk;
}

void write_path_system(std::ostream& out, const Multigraph& g, const PathSystem& ps) {
    write_graph(out, g);
    out << "p " << ps.i << ' ' << ps.j << '\n';
    for (size_t p = 0; p < ps.edges.size(); ++p)
        for (size_t t = 0; t < ps.edges[p].size(); ++t)
            out << "s " << p + 1 << ' ' << t + 1 << ' ' << ps.edges[p][t].i << ' '
                << ps.edges[p][t].j << ' ' << ps.edges[p][t].copy << '\n';
}

}  // namespace graphlap
