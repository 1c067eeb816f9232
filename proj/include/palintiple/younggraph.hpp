#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "palintiple/instance.hpp"

namespace palintiple {

// Node of the carry-pair graph: (u, w) = (c_j, c_{k-j+1}) for some mirrored
// digit position of some (n,b)-palintiple. even_terminal marks pairs that can
// close an even-length walk (u = w), odd_terminal pairs that close an
// odd-length walk around a middle digit (b*w - u) / (n-1).
struct YoungNode {
    std::int64_t u = 0;
    std::int64_t w = 0;
    bool even_terminal = false;
    bool odd_terminal = false;
    std::int64_t middle_digit = -1; // only meaningful when odd_terminal
};

// Directed multi-edge labeled by the digit pair it commits. first_ok marks
// edges usable as the opening step of a walk (both end digits nonzero); it can
// only hold on edges leaving the start node.
struct YoungEdge {
    int from = 0;
    int to = 0;
    std::int64_t d_low = 0;
    std::int64_t d_high = 0;
    bool first_ok = false;
};

struct YoungGraph {
    std::int64_t multiplier = 0; // n
    std::int64_t base = 0;       // b
    std::vector<YoungNode> nodes; // sorted by (u, w)
    std::vector<YoungEdge> edges; // sorted by (from, to, d_low, d_high)
    int start = 0;                // index of (0, 0)

    int node_index(std::int64_t u, std::int64_t w) const; // -1 when absent
};

// Builds the pruned carry-pair graph of (n, b). An edge
// (u,w) -> (u',w') labeled (d_low, d_high) exists iff
//   n*d_high + u = d_low + b*u'   and   n*d_low + w' = d_high + b*w
// with 0 <= d_low, d_high < b and all four carries in [0, n-1]. Kept nodes are
// those on some accepting walk: reachable from the start through an opening
// edge and able to reach a terminal node. Fails degenerate when no accepting
// walk exists at all, bound_exceeded when the unpruned graph grows past an
// internal safety limit.
Result<YoungGraph> build_young_graph(std::int64_t n, std::int64_t b);

// All (n,b)-palintiples of the given length, read off the accepting walks of
// floor(length/2) steps: even lengths end at an even-terminal node, odd
// lengths at an odd-terminal node which supplies the middle digit. Agrees
// with enumerate_palintiples by construction of the graph; the two are kept
// as independent routes and cross-checked in the tests.
Result<std::vector<PalintipleInstance>> accepted_paths(const YoungGraph& g, std::int64_t length);

// Isomorphism here means a node bijection preserving the start node, both
// terminal flags, and the edge multiplicity of every ordered node pair. Digit
// labels are deliberately dropped: graphs of different bases carry different
// digits but can still be the same machine.
struct CanonicalForm {
    std::vector<std::uint16_t> code;

    bool operator==(const CanonicalForm& o) const { return code == o.code; }
    bool operator!=(const CanonicalForm& o) const { return code != o.code; }
};

// Lexicographically minimal encoding of (flags, multiplicity matrix) over all
// node orderings that put the start node first. Equal forms <=> isomorphic.
// Fails size_exceeded when the graph has more than node_bound nodes.
Result<CanonicalForm> canonical_form(const YoungGraph& g, std::size_t node_bound = 64);

// Cheap invariant comparison first (node count, flag multisets, degree and
// multiplicity profiles), canonical forms only when those all agree.
Result<bool> isomorphic(const YoungGraph& a, const YoungGraph& b, std::size_t node_bound = 64);

// Complete graph test: every ordered pair of distinct nodes joined, a loop on
// every node, every node terminal both ways. Returns the node count when the
// graph qualifies. (2,5) is the smallest example.
std::optional<std::size_t> is_complete(const YoungGraph& g);

// Whether g is the machine of the classic 1089 family, i.e. isomorphic to the
// (9,10) graph.
bool is_1089_graph(const YoungGraph& g);

struct CorrespondenceIssue {
    std::string literal; // the instance that breaks the direction
    std::string detail;
};

// Checks the carry/digit recycling between (n,b) and (nhat,bhat) up to
// max_length:
//   carries_are_digits: the carries c_1..c_K of every (nhat,bhat)-palintiple
//     of length 3..max_length, read low to high, are the digits of an
//     (n,b)-palintiple;
//   digits_are_carries: every (n,b)-palintiple of length 2..max_length-1
//     reappears as such a carry sequence one length up.
struct CorrespondenceReport {
    std::int64_t max_length = 0;
    bool carries_are_digits = true;
    bool digits_are_carries = true;
    std::vector<CorrespondenceIssue> carry_issues;
    std::vector<CorrespondenceIssue> digit_issues;
};

Result<CorrespondenceReport> correspondence_check(std::int64_t n, std::int64_t b,
                                                  std::int64_t nhat, std::int64_t bhat,
                                                  std::int64_t max_length);

// Graphviz text. Nodes are labeled "u,w"; terminal nodes get doubled (one
// way) or tripled (both ways) peripheries; opening edges are bold; every edge
// is labeled "d_low,d_high".
std::string to_dot(const YoungGraph& g);

} // namespace palintiple
