#pragma once

#include <iosfwd>
#include <string>

#include "graphlap/critical_group.hpp"

namespace graphlap {

/// A graph together with a valid marking. Every construction below maps a
/// valid MarkedGraph to a valid MarkedGraph and re-checks the certificate.
struct MarkedGraph {
    Multigraph graph{1};
    Marking mk;
    friend bool operator==(const MarkedGraph&, const MarkedGraph&) = default;
};

/// Build the canonical certificate for the pair {i, j}.
MarkedGraph make_marked(const Multigraph& g, int i, int j);

/// Attach H to the marked graph by identifying H's vertex `at` with the
/// marked graph's vertex `attach`; new vertices inherit the attach weight.
MarkedGraph add_graph(const MarkedGraph& mg, const Multigraph& h, int attach, int at);

/// Merge two non-marked vertices of equal weight with no edge between them.
MarkedGraph glue(const MarkedGraph& mg, int a, int b);

/// Replace the e >= 1 edges between v and vp (weight gap s >= 2) by a chain
/// of s - 1 new vertices with uniform multiplicity e*s.
MarkedGraph thicken(const MarkedGraph& mg, int v, int vp);

/// Remove the listed equal-weight edges, keeping the component of the marked
/// pair (the pair always survives together).
MarkedGraph remove_equal_weight_edges(const MarkedGraph& mg, const std::vector<EdgeRef>& edges);

/// Add c edges between two vertices of equal weight.
MarkedGraph add_edges(const MarkedGraph& mg, int k, int l, long c);

/// Replace every edge instance of a marked graph by a length-b chain; weights
/// scale by b and interpolate along the chains.
MarkedGraph subdivide_all(const MarkedGraph& mg, long b);

/// Glue the first graph's minimum-weight marked vertex to the second graph's
/// maximum-weight marked vertex; the surviving end pair has order lcm(h, h').
MarkedGraph coalesce(const MarkedGraph& first, const MarkedGraph& second);

struct ReductionStep {
    std::string label;
    MarkedGraph state;
};

/// Result of the four-step reduction: a string of G_h blocks of length
/// `length` = s_j - s_i, with the intermediate states recorded.
struct StringDecomposition {
    Int h;
    Int length;
    std::vector<ReductionStep> trace;  // input plus one entry per step
    MarkedGraph result;
};

/// Four-step reduction of any marked graph to the uniform string: strip
/// intra-level edges, merge levels, thicken wide edges, merge levels again.
/// Each intermediate state must verify; failures abort with the step index.
StringDecomposition reduce_to_string(const MarkedGraph& mg);

/// Graph text format plus `w <vertex> <weight>` lines and a `p <i> <j>` line.
void write_marked(std::ostream& out, const MarkedGraph& mg);
MarkedGraph parse_marked(std::istream& in);

}  // namespace graphlap
