// Command-line front-end: critical groups, pair orders, markings, the graph
// constructions, spread/collapsed scans and the verification suites.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "graphlap/collapsed.hpp"
#include "graphlap/constructions.hpp"
#include "graphlap/oracles.hpp"
#include "graphlap/path_systems.hpp"
#include "graphlap/suites.hpp"

using namespace graphlap;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitInfeasible = 3;

struct Infeasible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Multigraph load_graph(const std::string& path) {
    std::istringstream in(slurp(path));
    return parse_graph(in);
}

Multigraph load_connected_graph(const std::string& path) {
    Multigraph g = load_graph(path);
    if (!g.connected()) throw Infeasible(path + ": graph is not connected");
    return g;
}

IntMatrix load_matrix(const std::string& path) {
    std::istringstream in(slurp(path));
    return parse_matrix(in);
}

void check_pair(const Multigraph& g, int i, int j) {
    if (i < 1 || i > g.order() || j < 1 || j > g.order())
        throw std::runtime_error("vertex index out of range");
    if (i == j) throw Infeasible("the two vertices must be distinct");
}

void print_weights(const Vec& s) {
    std::cout << "S =";
    for (const Int& w : s) std::cout << ' ' << w.get_str();
    std::cout << '\n';
}

void print_marked(const MarkedGraph& mg, bool machine) {
    if (machine) {
        write_marked(std::cout, mg);
        return;
    }
    std::cout << "pair = {" << mg.mk.i << ", " << mg.mk.j << "}\n"
              << "h = " << mg.mk.h.get_str() << '\n';
    print_weights(mg.mk.weights);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact critical-group and Laplacian-lattice calculator"};
    app.require_subcommand(1);
    bool machine = false;
    app.add_flag("--machine", machine, "machine-readable output");

    std::string path, path2;
    int vi = 0, vj = 0, va = 0, vb = 0;
    int i2 = 0, j2 = 0;
    long count = 1;
    int n_max = 0;
    std::string lo_str, hi_str;
    std::vector<long> lengths;
    std::vector<long> primes;

    auto* cmd_group = app.add_subcommand("group", "invariant factors of the critical group");
    cmd_group->add_option("graph", path)->required();

    auto* cmd_pair = app.add_subcommand("pair-order", "order and marking of a vertex pair");
    cmd_pair->add_option("graph", path)->required();
    cmd_pair->add_option("i", vi)->required();
    cmd_pair->add_option("j", vj)->required();

    auto* cmd_pairing = app.add_subcommand("pairing", "self-pairing of a vertex pair in Q/Z");
    cmd_pairing->add_option("graph", path)->required();
    cmd_pairing->add_option("i", vi)->required();
    cmd_pairing->add_option("j", vj)->required();

    auto* cmd_reduce = app.add_subcommand("reduce", "reduce a marked graph to a uniform string");
    cmd_reduce->add_option("graph", path)->required();
    cmd_reduce->add_option("i", vi)->required();
    cmd_reduce->add_option("j", vj)->required();

    auto* cmd_construct = app.add_subcommand("construct", "marking-preserving constructions");
    auto* op_thicken = cmd_construct->add_subcommand("thicken", "replace an edge bundle by a chain");
    op_thicken->add_option("graph", path)->required();
    op_thicken->add_option("i", vi)->required();
    op_thicken->add_option("j", vj)->required();
    op_thicken->add_option("u", va)->required();
    op_thicken->add_option("v", vb)->required();
    auto* op_subdivide = cmd_construct->add_subcommand("subdivide", "replace edges by chains of length b");
    op_subdivide->add_option("graph", path)->required();
    op_subdivide->add_option("i", vi)->required();
    op_subdivide->add_option("j", vj)->required();
    op_subdivide->add_option("b", count)->required();
    auto* op_add_edges = cmd_construct->add_subcommand("add-edges", "add edges between equal weights");
    op_add_edges->add_option("graph", path)->required();
    op_add_edges->add_option("i", vi)->required();
    op_add_edges->add_option("j", vj)->required();
    op_add_edges->add_option("k", va)->required();
    op_add_edges->add_option("l", vb)->required();
    op_add_edges->add_option("c", count)->required();
    auto* op_glue = cmd_construct->add_subcommand("glue", "merge two equal-weight vertices");
    op_glue->add_option("graph", path)->required();
    op_glue->add_option("i", vi)->required();
    op_glue->add_option("j", vj)->required();
    op_glue->add_option("a", va)->required();
    op_glue->add_option("b", vb)->required();
    auto* op_coalesce = cmd_construct->add_subcommand("coalesce", "glue two marked graphs end to end");
    op_coalesce->add_option("graph1", path)->required();
    op_coalesce->add_option("i1", vi)->required();
    op_coalesce->add_option("j1", vj)->required();
    op_coalesce->add_option("graph2", path2)->required();
    op_coalesce->add_option("i2", i2)->required();
    op_coalesce->add_option("j2", j2)->required();
    cmd_construct->require_subcommand(1);

    auto* cmd_spread = app.add_subcommand("spread", "spreadness of a matrix or graph Laplacian");
    cmd_spread->add_option("input", path)->required();

    auto* cmd_collapsed = app.add_subcommand("collapsed", "collapsed values of an integer matrix");
    cmd_collapsed->add_option("matrix", path)->required();
    cmd_collapsed->add_option("--lo", lo_str, "scan lower bound");
    cmd_collapsed->add_option("--hi", hi_str, "scan upper bound");

    auto* cmd_chain = app.add_subcommand("chain", "two vertices joined by chains: order table");
    cmd_chain->add_option("lengths", lengths, "chain lengths")->required()->expected(-1);

    auto* cmd_gp = app.add_subcommand("gp", "the 2x2 family with prescribed collapsed values");
    cmd_gp->add_option("primes", primes, "distinct primes")->required()->expected(-1);

    auto* cmd_verify = app.add_subcommand("verify", "run a named verification suite, or `all`");
    std::string suite;
    cmd_verify->add_option("suite", suite)->required();
    cmd_verify->add_option("--n-max", n_max, "override the graph-size ceiling");

    auto* cmd_search = app.add_subcommand("search", "enumerative searches");
    auto* search_exp = cmd_search->add_subcommand(
        "exponent", "graphs where no pair attains the group exponent");
    search_exp->add_option("--n-max", n_max)->required();
    auto* search_cmax = cmd_search->add_subcommand(
        "collapsed-max", "maximal collapsed-value count over graphs of a given size");
    search_cmax->add_option("--n-max", n_max)->required();
    cmd_search->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*cmd_group) {
            Multigraph g = load_connected_graph(path);
            GroupStructure phi = critical_group(g);
            std::cout << "order = " << phi.order().get_str() << "\ninvariant factors =";
            for (const Int& d : phi.torsion_factors) std::cout << ' ' << d.get_str();
            if (phi.torsion_factors.empty()) std::cout << " (trivial)";
            std::cout << '\n';
        } else if (*cmd_pair) {
            Multigraph g = load_connected_graph(path);
            check_pair(g, vi, vj);
            MarkedGraph mg = make_marked(g, vi, vj);
            if (machine) {
                write_marked(std::cout, mg);
            } else {
                std::cout << "h = " << mg.mk.h.get_str() << '\n';
                print_weights(mg.mk.weights);
            }
        } else if (*cmd_pairing) {
            Multigraph g = load_connected_graph(path);
            check_pair(g, vi, vj);
            std::cout << "<tau, tau> = " << pairing_self(g, vi, vj).get_str() << '\n';
        } else if (*cmd_reduce) {
            Multigraph g = load_connected_graph(path);
            check_pair(g, vi, vj);
            StringDecomposition sd = reduce_to_string(make_marked(g, vi, vj));
            if (machine) {
                write_marked(std::cout, sd.result);
            } else {
                for (const auto& step : sd.trace) {
                    std::cout << "== " << step.label << " ==\n";
                    print_marked(step.state, false);
                }
                std::cout << "string: length " << sd.length.get_str() << ", multiplicity "
                          << sd.h.get_str() << '\n';
            }
        } else if (*cmd_construct) {
            MarkedGraph out = [&] {
                if (*op_coalesce) {
                    Multigraph g1 = load_connected_graph(path);
                    Multigraph g2 = load_connected_graph(path2);
                    check_pair(g1, vi, vj);
                    check_pair(g2, i2, j2);
                    return coalesce(make_marked(g1, vi, vj), make_marked(g2, i2, j2));
                }
                Multigraph g = load_connected_graph(path);
                check_pair(g, vi, vj);
                MarkedGraph mg = make_marked(g, vi, vj);
                if (*op_thicken) return thicken(mg, va, vb);
                if (*op_subdivide) return subdivide_all(mg, count);
                if (*op_add_edges) return add_edges(mg, va, vb, count);
                return glue(mg, va, vb);
            }();
            print_marked(out, machine);
        } else if (*cmd_spread) {
            std::istringstream in(slurp(path));
            std::string head;
            if (!(in >> head)) throw std::runtime_error(path + ": empty input");
            if (head == "m") {
                std::istringstream again(slurp(path));
                IntMatrix m = parse_matrix(again);
                std::cout << (is_spread(m) ? "spread" : "not spread") << '\n';
            } else {
                std::istringstream again(slurp(path));
                Multigraph g = parse_graph(again);
                if (!g.connected()) throw Infeasible(path + ": graph is not connected");
                bool comb = spread_check(g);
                bool alg = is_spread(laplacian_matrix(g));
                if (comb != alg) throw std::runtime_error("spread detectors disagree");
                std::cout << (comb ? "spread (multiply connected)" : "not spread (has a bridge)")
                          << '\n';
            }
        } else if (*cmd_collapsed) {
            IntMatrix m = load_matrix(path);
            CollapsedReport rep = (lo_str.empty() || hi_str.empty())
                                      ? collapsed_values(m)
                                      : collapsed_values(m, Int(lo_str), Int(hi_str));
            std::cout << "scanned [" << rep.lo.get_str() << ", " << rep.hi.get_str() << "]\n"
                      << "collapsed:";
            for (const auto& w : rep.collapsed) std::cout << ' ' << w.mu.get_str();
            std::cout << '\n';
            if (!machine)
                for (const auto& w : rep.collapsed) {
                    std::cout << "mu = " << w.mu.get_str() << ": (M - mu*Id) * [";
                    for (size_t k = 0; k < w.v.size(); ++k)
                        std::cout << (k ? " " : "") << w.v[k].get_str();
                    std::cout << "] = E_" << w.i << w.j << '\n';
                }
        } else if (*cmd_chain) {
            for (long L : lengths)
                if (L < 1) throw Infeasible("chain lengths must be positive");
            ChainGraph cg = chain_graph(lengths);
            std::cout << "vertices = " << cg.graph.order() << '\n'
                      << "order {v, w} = " << chain_pair_order_formula(lengths).get_str() << '\n';
            long nd = lengths.back();
            if (lengths.size() >= 2)
                for (long k = 1; k < nd; ++k)
                    std::cout << "order {v, v_" << k << "," << lengths.size()
                              << "} = " << chain_pair_order_formula(lengths, k).get_str() << '\n';
        } else if (*cmd_gp) {
            std::vector<Int> ps(primes.begin(), primes.end());
            GranvillePomerance gp = granville_pomerance(ps);
            std::cout << "l = " << gp.ell.get_str() << '\n';
            if (machine) write_matrix(std::cout, gp.m);
            for (const auto& w : gp.witnesses) {
                std::cout << "mu = " << w.mu.get_str() << ": witness [";
                for (size_t k = 0; k < w.v.size(); ++k)
                    std::cout << (k ? " " : "") << w.v[k].get_str();
                std::cout << "]\n";
            }
        } else if (*cmd_verify) {
            std::vector<SuiteResult> results;
            if (suite == "all") {
                results = run_all_suites();
            } else {
                results.push_back(run_suite(suite, n_max));
            }
            bool all_pass = true;
            for (const auto& r : results) {
                std::cout << (r.pass ? "PASS" : "FAIL") << ' ' << r.name << ": " << r.detail
                          << '\n';
                all_pass = all_pass && r.pass;
            }
            return all_pass ? kExitOk : kExitBadInput;
        } else if (*cmd_search) {
            if (n_max < 2 || n_max > 6) throw Infeasible("--n-max must be between 2 and 6");
            if (*search_exp) {
                auto hits = search_exponent_gap(n_max);
                std::cout << "hits = " << hits.size() << '\n';
                for (const auto& h : hits) {
                    std::cout << "exponent " << h.exponent.get_str() << ", max pair order "
                              << h.max_pair_order.get_str() << ":\n";
                    write_graph(std::cout, h.graph);
                }
            } else {
                CollapsedCountResult best = search_collapsed_count(n_max);
                std::cout << "max collapsed values = " << best.values.size() << '\n'
                          << "collapsed:";
                for (const Int& mu : best.values) std::cout << ' ' << mu.get_str();
                std::cout << '\n';
                write_graph(std::cout, best.graph);
            }
        }
    } catch (const Infeasible& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    }
    return kExitOk;
}
