#include "graphlap/constructions.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace graphlap {

namespace {

void shift_min_to_zero(Vec& weights) {
    Int lo = *std::min_element(weights.begin(), weights.end());
    if (lo != 0)
        for (Int& w : weights) w -= lo;
}

MarkedGraph finish(Multigraph g, Marking mk, const std::string& what) {
    shift_min_to_zero(mk.weights);
    MarkedGraph out{std::move(g), std::move(mk)};
    if (!verify_marking(out.graph, out.mk))
        throw std::logic_error(what + ": resulting marking is invalid");
    return out;
}

long to_ll(const Int& v, const std::string& what) {
    if (!v.fits_slong_p()) throw std::overflow_error(what + ": multiplicity out of range");
    return v.get_si();
}

/// Keep the connected component containing mk.i; mk.j must survive with it.
std::pair<Multigraph, Marking> restrict_to_pair_component(const Multigraph& g, const Marking& mk) {
    const int n = g.order();
    std::vector<char> keep(n + 1, 0);
    std::vector<int> stack{mk.i};
    keep[mk.i] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : g.neighbors(u))
            if (!keep[v]) {
                keep[v] = 1;
                stack.push_back(v);
            }
    }
    if (!keep[mk.j])
        throw std::logic_error("marked vertices ended up in different components");
    std::vector<int> new_index(n + 1, 0);
    int count = 0;
    for (int v = 1; v <= n; ++v)
        if (keep[v]) new_index[v] = ++count;
    Multigraph h(count);
    Marking out{new_index[mk.i], new_index[mk.j], mk.h, Vec(count)};
    for (int v = 1; v <= n; ++v) {
        if (!keep[v]) continue;
        out.weights[new_index[v] - 1] = mk.weights[v - 1];
        for (int u = v + 1; u <= n; ++u)
            if (keep[u] && g.multiplicity(v, u) > 0)
                h.set_multiplicity(new_index[v], new_index[u], g.multiplicity(v, u));
    }
    return {std::move(h), std::move(out)};
}

/// Merge vertices according to old->class map (classes numbered 1..count).
/// No intra-class edges may exist; class weights must agree.
std::pair<Multigraph, Marking> merge_classes(const Multigraph& g, const Marking& mk,
                                             const std::vector<int>& cls, int count) {
    const int n = g.order();
    Multigraph h(count);
    Vec weights(count);
    std::vector<char> seen(count + 1, 0);
    for (int v = 1; v <= n; ++v) {
        int c = cls[v];
        if (!seen[c]) {
            seen[c] = 1;
            weights[c - 1] = mk.weights[v - 1];
        } else if (weights[c - 1] != mk.weights[v - 1]) {
            throw std::invalid_argument("merge: weights differ within a class");
        }
    }
    for (int v = 1; v <= n; ++v)
        for (int u = v + 1; u <= n; ++u) {
            long c = g.multiplicity(v, u);
            if (c == 0) continue;
            if (cls[v] == cls[u]) throw std::invalid_argument("merge: edge between merged vertices");
            h.set_multiplicity(cls[v], cls[u], h.multiplicity(cls[v], cls[u]) + c);
        }
    return {std::move(h), Marking{cls[mk.i], cls[mk.j], mk.h, std::move(weights)}};
}

/// Merge all equal-weight vertices into one vertex per weight level. Classes
/// are processed in increasing weight, each represented by its lowest old index.
std::pair<Multigraph, Marking> merge_weight_levels(const Multigraph& g, const Marking& mk) {
    const int n = g.order();
    std::map<Int, int> level;
    std::vector<int> cls(n + 1, 0);
    // Class ids ordered by the lowest old index carrying each weight.
    std::map<Int, int> first_index;
    for (int v = 1; v <= n; ++v)
        if (!first_index.count(mk.weights[v - 1])) first_index[mk.weights[v - 1]] = v;
    std::vector<std::pair<int, Int>> reps;
    for (auto& [w, v] : first_index) reps.emplace_back(v, w);
    std::sort(reps.begin(), reps.end());
    for (int c = 0; c < static_cast<int>(reps.size()); ++c) level[reps[c].second] = c + 1;
    for (int v = 1; v <= n; ++v) cls[v] = level[mk.weights[v - 1]];
    return merge_classes(g, mk, cls, static_cast<int>(reps.size()));
}

/// Thicken without the public-interface verification, for pipeline reuse.
std::pair<Multigraph, Marking> thicken_impl(const Multigraph& g, const Marking& mk, int v, int vp) {
    if (v == vp) throw std::invalid_argument("thicken: identical endpoints");
    long e = g.multiplicity(v, vp);
    if (e < 1) throw std::invalid_argument("thicken: no edge between the endpoints");
    if (mk.weights[v - 1] == mk.weights[vp - 1])
        throw std::invalid_argument("thicken: equal endpoint weights, nothing to thicken");
    if (mk.weights[v - 1] < mk.weights[vp - 1]) std::swap(v, vp);  // orient v toward the larger weight
    Int gap = mk.weights[v - 1] - mk.weights[vp - 1];
    if (gap == 1) throw std::invalid_argument("thicken: weight gap 1 is a no-op");
    long chain_mult = to_ll(Int(e * gap), "thicken");
    long extra = to_ll(Int(gap - 1), "thicken");
    if (extra > 1'000'000) throw std::overflow_error("thicken: weight gap too large");

    const int n = g.order();
    Multigraph h(n + static_cast<int>(extra));
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            if (g.multiplicity(a, b) > 0) h.set_multiplicity(a, b, g.multiplicity(a, b));
    h.set_multiplicity(v, vp, 0);
    Vec weights = mk.weights;
    int prev = vp;
    for (long r = 1; r <= extra; ++r) {
        int w = n + static_cast<int>(r);
        h.set_multiplicity(prev, w, chain_mult);
        weights.push_back(mk.weights[vp - 1] + r);
        prev = w;
    }
    h.set_multiplicity(prev, v, chain_mult);
    return {std::move(h), Marking{mk.i, mk.j, mk.h, std::move(weights)}};
}

}  // namespace

MarkedGraph make_marked(const Multigraph& g, int i, int j) {
    return MarkedGraph{g, marking(g, i, j)};
}

MarkedGraph add_graph(const MarkedGraph& mg, const Multigraph& h, int attach, int at) {
    const int n = mg.graph.order();
    if (attach < 1 || attach > n) throw std::invalid_argument("add_graph: bad attach vertex");
    if (at < 1 || at > h.order()) throw std::invalid_argument("add_graph: bad vertex of the added graph");
    if (!h.connected()) throw std::invalid_argument("add_graph: added graph must be connected");
    const int nh = h.order();
    std::vector<int> map(nh + 1, 0);
    int next = n;
    for (int v = 1; v <= nh; ++v) map[v] = v == at ? attach : ++next;
    Multigraph g(n + nh - 1);
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            if (mg.graph.multiplicity(a, b) > 0) g.set_multiplicity(a, b, mg.graph.multiplicity(a, b));
    for (int a = 1; a <= nh; ++a)
        for (int b = a + 1; b <= nh; ++b)
            if (h.multiplicity(a, b) > 0)
                g.set_multiplicity(map[a], map[b], g.multiplicity(map[a], map[b]) + h.multiplicity(a, b));
    Vec weights = mg.mk.weights;
    weights.resize(n + nh - 1, mg.mk.weights[attach - 1]);
    return finish(std::move(g), Marking{mg.mk.i, mg.mk.j, mg.mk.h, std::move(weights)}, "add_graph");
}

MarkedGraph glue(const MarkedGraph& mg, int a, int b) {
    const int n = mg.graph.order();
    if (a < 1 || a > n || b < 1 || b > n || a == b) throw std::invalid_argument("glue: bad vertices");
    if (a == mg.mk.i || a == mg.mk.j || b == mg.mk.i || b == mg.mk.j)
        throw std::invalid_argument("glue: cannot glue a marked vertex");
    if (mg.mk.weights[a - 1] != mg.mk.weights[b - 1]) throw std::invalid_argument("glue: weights differ");
    if (mg.graph.multiplicity(a, b) != 0)
        throw std::invalid_argument("glue: vertices are joined by an edge");
    std::vector<int> cls(n + 1, 0);
    int count = 0;
    int lo = std::min(a, b), hi = std::max(a, b);
    for (int v = 1; v <= n; ++v) {
        if (v == hi) continue;
        cls[v] = ++count;
    }
    cls[hi] = cls[lo];
    auto [g, mk] = merge_classes(mg.graph, mg.mk, cls, count);
    return finish(std::move(g), std::move(mk), "glue");
}

MarkedGraph thicken(const MarkedGraph& mg, int v, int vp) {
    auto [g, mk] = thicken_impl(mg.graph, mg.mk, v, vp);
    return finish(std::move(g), std::move(mk), "thicken");
}

MarkedGraph remove_equal_weight_edges(const MarkedGraph& mg, const std::vector<EdgeRef>& edges) {
    std::set<EdgeRef> unique(edges.begin(), edges.end());
    std::map<std::pair<int, int>, long> removed;
    for (const EdgeRef& e : unique) {
        if (e.i >= e.j) throw std::invalid_argument("remove_equal_weight_edges: need i < j in EdgeRef");
        long c = mg.graph.multiplicity(e.i, e.j);
        if (e.copy < 0 || e.copy >= c)
            throw std::invalid_argument("remove_equal_weight_edges: copy index out of range");
        if (mg.mk.weights[e.i - 1] != mg.mk.weights[e.j - 1])
            throw std::invalid_argument("remove_equal_weight_edges: endpoint weights differ");
        ++removed[{e.i, e.j}];
    }
    Multigraph g = mg.graph;
    for (auto& [pair, c] : removed) g.set_multiplicity(pair.first, pair.second,
                                                       g.multiplicity(pair.first, pair.second) - c);
    auto [h, mk] = restrict_to_pair_component(g, mg.mk);
    return finish(std::move(h), std::move(mk), "remove_equal_weight_edges");
}

MarkedGraph add_edges(const MarkedGraph& mg, int k, int l, long c) {
    if (c < 0) throw std::invalid_argument("add_edges: negative count");
    if (k == l) throw std::invalid_argument("add_edges: identical endpoints");
    if (mg.mk.weights[k - 1] != mg.mk.weights[l - 1])
        throw std::invalid_argument("add_edges: endpoint weights differ");
    Multigraph g = mg.graph;
    if (c > 0) g.add_edges(k, l, c);
    return finish(std::move(g), mg.mk, "add_edges");
}

MarkedGraph subdivide_all(const MarkedGraph& mg, long b) {
    if (b < 1) throw std::invalid_argument("subdivide_all: b < 1");
    const int n = mg.graph.order();
    if (b == 1) return mg;
    // Every edge instance becomes its own chain of b - 1 fresh vertices.
    std::vector<std::pair<int, int>> instances;
    for (auto [k, l] : mg.graph.edge_pairs())
        for (long c = 0; c < mg.graph.multiplicity(k, l); ++c) instances.emplace_back(k, l);
    Multigraph g(static_cast<int>(n + instances.size() * (b - 1)));
    Vec weights(n);
    for (int v = 1; v <= n; ++v) weights[v - 1] = mg.mk.weights[v - 1] * b;
    int next = n;
    for (auto [k, l] : instances) {
        int prev = k;
        for (long r = 1; r < b; ++r) {
            int w = ++next;
            g.add_edges(prev, w);
            weights.push_back(mg.mk.weights[k - 1] * b + (mg.mk.weights[l - 1] - mg.mk.weights[k - 1]) * r);
            prev = w;
        }
        g.add_edges(prev, l);
    }
    return finish(std::move(g), Marking{mg.mk.i, mg.mk.j, mg.mk.h, std::move(weights)},
                  "subdivide_all");
}

MarkedGraph coalesce(const MarkedGraph& first, const MarkedGraph& second) {
    const Int& h1 = first.mk.h;
    const Int& h2 = second.mk.h;
    Int g = gcd(h1, h2);
    const int n1 = first.graph.order();
    const int n2 = second.graph.order();
    // Glue first's minimum-weight marked vertex to second's maximum-weight
    // marked vertex; weights are cross-scaled by h'/g and h/g.
    const int glue_first = first.mk.i;
    const int glue_second = second.mk.j;
    const Int& second_max = second.mk.weights[glue_second - 1];

    std::vector<int> map2(n2 + 1, 0);
    int next = n1;
    for (int v = 1; v <= n2; ++v) map2[v] = v == glue_second ? glue_first : ++next;
    Multigraph merged(n1 + n2 - 1);
    for (int a = 1; a <= n1; ++a)
        for (int b = a + 1; b <= n1; ++b)
            if (first.graph.multiplicity(a, b) > 0)
                merged.set_multiplicity(a, b, first.graph.multiplicity(a, b));
    for (int a = 1; a <= n2; ++a)
        for (int b = a + 1; b <= n2; ++b)
            if (second.graph.multiplicity(a, b) > 0)
                merged.set_multiplicity(map2[a], map2[b],
                                        merged.multiplicity(map2[a], map2[b]) +
                                            second.graph.multiplicity(a, b));
    Vec weights(n1 + n2 - 1);
    for (int v = 1; v <= n1; ++v) weights[v - 1] = h2 * first.mk.weights[v - 1] / g;
    for (int v = 1; v <= n2; ++v)
        if (v != glue_second)
            weights[map2[v] - 1] = h1 * (second.mk.weights[v - 1] - second_max) / g;
    Marking mk{map2[second.mk.i], first.mk.j, lcm(h1, h2), std::move(weights)};
    return finish(std::move(merged), std::move(mk), "coalesce");
}

StringDecomposition reduce_to_string(const MarkedGraph& input) {
    if (!verify_marking(input.graph, input.mk))
        throw std::invalid_argument("reduce_to_string: input marking invalid");
    StringDecomposition out;
    out.h = input.mk.h;
    out.length = input.mk.weights[input.mk.j - 1] - input.mk.weights[input.mk.i - 1];
    MarkedGraph cur = input;
    shift_min_to_zero(cur.mk.weights);
    out.trace.push_back({"input", cur});

    auto checkpoint = [&](int step, const char* label, Multigraph g, Marking mk) {
        shift_min_to_zero(mk.weights);
        cur = MarkedGraph{std::move(g), std::move(mk)};
        if (!verify_marking(cur.graph, cur.mk))
            throw std::logic_error("reduce_to_string: marking invalid after step " +
                                   std::to_string(step));
        out.trace.push_back({label, cur});
    };

    // Step 1: remove every edge joining two vertices of the same weight, then
    // keep the component of the marked pair.
    {
        Multigraph g = cur.graph;
        for (auto [u, v] : g.edge_pairs())
            if (cur.mk.weights[u - 1] == cur.mk.weights[v - 1]) g.set_multiplicity(u, v, 0);
        auto [h, mk] = restrict_to_pair_component(g, cur.mk);
        checkpoint(1, "remove intra-level edges", std::move(h), std::move(mk));
    }
    // Step 2: glue all vertices of the same weight.
    {
        auto [g, mk] = merge_weight_levels(cur.graph, cur.mk);
        checkpoint(2, "glue weight levels", std::move(g), std::move(mk));
    }
    // Step 3: thicken every edge whose endpoint weights differ by >= 2, in
    // lexicographic endpoint order.
    {
        Multigraph g = cur.graph;
        Marking mk = cur.mk;
        for (auto [u, v] : cur.graph.edge_pairs()) {
            if (abs(Int(mk.weights[u - 1] - mk.weights[v - 1])) < 2) continue;
            auto next = thicken_impl(g, mk, u, v);
            g = std::move(next.first);
            mk = std::move(next.second);
        }
        checkpoint(3, "thicken wide edges", std::move(g), std::move(mk));
    }
    // Step 4: glue the new weight levels.
    {
        auto [g, mk] = merge_weight_levels(cur.graph, cur.mk);
        checkpoint(4, "glue weight levels", std::move(g), std::move(mk));
    }

    // The result must be a string of G_h blocks: vertices at weights 0..l,
    // consecutive levels joined by exactly h edges.
    const Multigraph& g = cur.graph;
    const Marking& mk = cur.mk;
    if (Int(g.order()) != out.length + 1)
        throw std::logic_error("reduce_to_string: final vertex count is not length + 1");
    std::vector<int> by_weight(g.order() + 1, 0);
    for (int v = 1; v <= g.order(); ++v) {
        const Int& w = mk.weights[v - 1];
        if (w < 0 || w > out.length || !w.fits_sint_p())
            throw std::logic_error("reduce_to_string: final weight out of range");
        int lvl = static_cast<int>(w.get_si());
        if (by_weight[lvl] != 0) throw std::logic_error("reduce_to_string: duplicate final weight");
        by_weight[lvl] = v;
    }
    for (int a = 1; a <= g.order(); ++a)
        for (int b = a + 1; b <= g.order(); ++b) {
            Int expected = abs(Int(mk.weights[a - 1] - mk.weights[b - 1])) == 1 ? out.h : Int(0);
            if (Int(g.multiplicity(a, b)) != expected)
                throw std::logic_error("reduce_to_string: final graph is not a uniform string");
        }
    out.result = cur;
    return out;
}

void write_marked(std::ostream& out, const MarkedGraph& mg) {
    write_graph(out, mg.graph);
    for (int v = 1; v <= mg.graph.order(); ++v)
        out << "w " << v << ' ' << mg.mk.weights[v - 1] << '\n';
    out << "p " << mg.mk.i << ' ' << mg.mk.j << '\n';
}

MarkedGraph parse_marked(std::istream& in) {
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::stringstream graph_pass(buffer.str());
    Multigraph g = parse_graph(graph_pass);
    Vec weights(g.order());
    std::vector<char> have(g.order() + 1, 0);
    int i = 0, j = 0;
    std::stringstream mark_pass(buffer.str());
    std::string line;
    while (std::getline(mark_pass, line)) {
        std::istringstream ss(line);
        std::string tag;
        if (!(ss >> tag) || tag[0] == '#') continue;
        if (tag == "w") {
            int v;
            std::string w;
            if (!(ss >> v >> w)) throw std::runtime_error("marked graph: bad `w` line");
            if (v < 1 || v > g.order()) throw std::runtime_error("marked graph: `w` vertex out of range");
            weights[v - 1] = Int(w);
            have[v] = 1;
        } else if (tag == "p") {
            if (!(ss >> i >> j)) throw std::runtime_error("marked graph: bad `p` line");
        }
    }
    if (i == 0) throw std::runtime_error("marked graph: missing `p <i> <j>` line");
    for (int v = 1; v <= g.order(); ++v)
        if (!have[v]) throw std::runtime_error("marked graph: missing weight for vertex " +
                                               std::to_string(v));
    // h is determined by the weights around v_i.
    Int h = 0;
    for (int v : g.neighbors(i)) h += (weights[v - 1] - weights[i - 1]) * g.multiplicity(v, i);
    MarkedGraph mg{std::move(g), Marking{i, j, h, std::move(weights)}};
    if (!verify_marking(mg.graph, mg.mk)) throw std::runtime_error("marked graph: marking invalid");
    return mg;
}

}  // namespace graphlap
