#include "palintiple/younggraph.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>
#include <stdexcept>

#include "palintiple/search.hpp"

namespace palintiple {

namespace {

// Discovery caps. The pruned graphs this tool works with have at most a few
// dozen nodes; these bounds only stop runaway inputs, they are not tuning.
constexpr std::size_t kMaxNodes = 100000;
constexpr std::uint64_t kWorkBudget = 200000000;

struct RawEdge {
    int from;
    int to;
    std::int64_t dl;
    std::int64_t dh;
};

} // namespace

int YoungGraph::node_index(std::int64_t u, std::int64_t w) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].u == u && nodes[i].w == w) return int(i);
    return -1;
}

Result<YoungGraph> build_young_graph(std::int64_t n, std::int64_t b) {
    if (n < 2 || b <= n)
        return Result<YoungGraph>(errc::bad_argument, "need 2 <= n < b");

    // Discover carry pairs outward from (0,0). Only pairs reachable by edge
    // relations at all are materialized; the full n x n grid never is.
    std::map<std::pair<std::int64_t, std::int64_t>, int> index;
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
    std::vector<RawEdge> raw;
    auto intern = [&](std::int64_t u, std::int64_t w) {
        auto it = index.find({u, w});
        if (it != index.end()) return it->second;
        int id = int(pairs.size());
        index.emplace(std::make_pair(u, w), id);
        pairs.emplace_back(u, w);
        return id;
    };
    intern(0, 0);

    std::uint64_t work = 0;
    for (std::size_t at = 0; at < pairs.size(); ++at) {
        if (pairs.size() > kMaxNodes)
            return Result<YoungGraph>(errc::bound_exceeded, "carry graph grew past the node cap");
        work += std::uint64_t(b);
        if (work > kWorkBudget)
            return Result<YoungGraph>(errc::bound_exceeded, "carry graph construction over budget");
        auto [u, w] = pairs[at];
        for (std::int64_t dh = 0; dh < b; ++dh) {
            std::int64_t t = n * dh + u;
            std::int64_t dl = t % b;
            std::int64_t u2 = t / b;
            std::int64_t w2 = dh + b * w - n * dl;
            if (w2 < 0 || w2 > n - 1) continue;
            assert(u2 >= 0 && u2 <= n - 1);
            raw.push_back({int(at), intern(u2, w2), dl, dh});
        }
    }

    std::size_t m = pairs.size();
    std::vector<std::vector<int>> out(m), in(m);
    for (std::size_t e = 0; e < raw.size(); ++e) {
        out[raw[e].from].push_back(int(e));
        in[raw[e].to].push_back(int(e));
    }

    // Terminal flags. (b*w - u) / (n-1) is the middle digit an odd-length
    // walk would close on; it has to be a digit.
    std::vector<char> even(m, 0), odd(m, 0);
    std::vector<std::int64_t> middle(m, -1);
    for (std::size_t i = 0; i < m; ++i) {
        auto [u, w] = pairs[i];
        even[i] = (u == w);
        std::int64_t num = b * w - u;
        if (num >= 0 && num % (n - 1) == 0 && num / (n - 1) < b) {
            odd[i] = 1;
            middle[i] = num / (n - 1);
        }
    }

    // Forward reach through an opening edge (both end digits nonzero), then
    // any edges; backward reach from the terminals. A node survives iff it
    // can sit on an accepting walk.
    std::vector<char> reach(m, 0);
    std::vector<int> stack;
    for (int e : out[0])
        if (raw[e].dl >= 1 && raw[e].dh >= 1 && !reach[raw[e].to]) {
            reach[raw[e].to] = 1;
            stack.push_back(raw[e].to);
        }
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int e : out[v])
            if (!reach[raw[e].to]) {
                reach[raw[e].to] = 1;
                stack.push_back(raw[e].to);
            }
    }
    std::vector<char> coreach(m, 0);
    for (std::size_t i = 0; i < m; ++i)
        if (even[i] || odd[i]) {
            coreach[i] = 1;
            stack.push_back(int(i));
        }
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int e : in[v])
            if (!coreach[raw[e].from]) {
                coreach[raw[e].from] = 1;
                stack.push_back(raw[e].from);
            }
    }

    std::vector<char> keep(m, 0);
    keep[0] = 1;
    for (std::size_t i = 0; i < m; ++i)
        if (reach[i] && coreach[i]) keep[i] = 1;

    std::vector<int> kept;
    for (std::size_t i = 0; i < m; ++i)
        if (keep[i]) kept.push_back(int(i));
    std::sort(kept.begin(), kept.end(), [&](int a, int c) { return pairs[a] < pairs[c]; });
    std::vector<int> final_of(m, -1);
    for (std::size_t i = 0; i < kept.size(); ++i) final_of[kept[i]] = int(i);

    YoungGraph g;
    g.multiplier = n;
    g.base = b;
    for (int i : kept) {
        YoungNode node;
        node.u = pairs[i].first;
        node.w = pairs[i].second;
        node.even_terminal = even[i];
        node.odd_terminal = odd[i];
        node.middle_digit = middle[i];
        g.nodes.push_back(node);
    }
    g.start = final_of[0];
    assert(g.start >= 0);

    bool any_first = false;
    for (const RawEdge& e : raw) {
        if (final_of[e.from] < 0 || final_of[e.to] < 0) continue;
        YoungEdge ge;
        ge.from = final_of[e.from];
        ge.to = final_of[e.to];
        ge.d_low = e.dl;
        ge.d_high = e.dh;
        ge.first_ok = (e.from == 0 && e.dl >= 1 && e.dh >= 1);
        any_first |= ge.first_ok;
        g.edges.push_back(ge);
    }
    std::sort(g.edges.begin(), g.edges.end(), [](const YoungEdge& a, const YoungEdge& c) {
        return std::tie(a.from, a.to, a.d_low, a.d_high) < std::tie(c.from, c.to, c.d_low, c.d_high);
    });

    if (!any_first)
        return Result<YoungGraph>(errc::degenerate,
                                  "no accepting walk: (" + std::to_string(n) + "," +
                                      std::to_string(b) + ") has no palintiple of any length");
    return g;
}

Result<std::vector<PalintipleInstance>> accepted_paths(const YoungGraph& g, std::int64_t length) {
    using Out = std::vector<PalintipleInstance>;
    if (length < 2) return Result<Out>(errc::bad_argument, "length must be at least 2");
    if (length > 64) return Result<Out>(errc::bad_argument, "length capped at 64");

    std::vector<std::vector<int>> adj(g.nodes.size());
    for (std::size_t e = 0; e < g.edges.size(); ++e) adj[g.edges[e].from].push_back(int(e));

    std::int64_t steps = length / 2;
    bool odd = (length % 2) != 0;
    std::int64_t k = length - 1;

    Out found;
    std::vector<int> path;
    auto unfold = [&](int end) {
        std::vector<Int> digits(static_cast<std::size_t>(length));
        for (std::int64_t t = 1; t <= steps; ++t) {
            const YoungEdge& e = g.edges[std::size_t(path[std::size_t(t - 1)])];
            digits[std::size_t(t - 1)] = e.d_low;
            digits[std::size_t(k - t + 1)] = e.d_high;
        }
        if (odd) digits[std::size_t(steps)] = g.nodes[std::size_t(end)].middle_digit;
        auto inst = make_instance(g.multiplier, g.base, digits);
        if (!inst.ok())
            throw std::logic_error("accepted walk does not validate: " + inst.error().message);
        found.push_back(std::move(inst).value());
    };
    auto rec = [&](auto&& self, int at, std::int64_t depth) -> void {
        if (depth == steps) {
            const YoungNode& node = g.nodes[std::size_t(at)];
            if (odd ? node.odd_terminal : node.even_terminal) unfold(at);
            return;
        }
        for (int e : adj[std::size_t(at)]) {
            if (depth == 0 && !g.edges[std::size_t(e)].first_ok) continue;
            path.push_back(e);
            self(self, g.edges[std::size_t(e)].to, depth + 1);
            path.pop_back();
        }
    };
    rec(rec, g.start, 0);
    std::sort(found.begin(), found.end());
    return found;
}

namespace {

std::vector<std::vector<std::uint32_t>> multiplicity(const YoungGraph& g) {
    std::vector<std::vector<std::uint32_t>> M(g.nodes.size(),
                                              std::vector<std::uint32_t>(g.nodes.size(), 0));
    for (const YoungEdge& e : g.edges) M[std::size_t(e.from)][std::size_t(e.to)]++;
    return M;
}

std::uint16_t node_flags(const YoungGraph& g, int v) {
    const YoungNode& n = g.nodes[std::size_t(v)];
    return std::uint16_t((n.even_terminal ? 1 : 0) | (n.odd_terminal ? 2 : 0));
}

// v and v' are twins when swapping them is an automorphism; extending a
// partial ordering with either gives the same canonical tail, so one is
// enough. This collapses the fully symmetric (complete-graph) cases.
bool twins(const std::vector<std::vector<std::uint32_t>>& M, std::uint16_t fv, std::uint16_t fw,
           int v, int w) {
    if (fv != fw) return false;
    std::size_t m = M.size();
    auto sv = std::size_t(v), sw = std::size_t(w);
    if (M[sv][sv] != M[sw][sw] || M[sv][sw] != M[sw][sv]) return false;
    for (std::size_t x = 0; x < m; ++x) {
        if (x == sv || x == sw) continue;
        if (M[sv][x] != M[sw][x] || M[x][sv] != M[x][sw]) return false;
    }
    return true;
}

} // namespace

Result<CanonicalForm> canonical_form(const YoungGraph& g, std::size_t node_bound) {
    std::size_t m = g.nodes.size();
    if (m > node_bound)
        return Result<CanonicalForm>(errc::size_exceeded,
                                     "graph has " + std::to_string(m) + " nodes, bound is " +
                                         std::to_string(node_bound));
    auto M = multiplicity(g);
    for (const auto& row : M)
        for (std::uint32_t c : row)
            if (c > 0xffff)
                return Result<CanonicalForm>(errc::size_exceeded,
                                             "edge multiplicity beyond encoding range");

    // Greedy lexicographic minimization: position 0 is the start node, each
    // further position appends (flags, row over placed, loop, column over
    // placed) and only orderings achieving the minimal prefix survive.
    std::vector<std::uint16_t> code;
    code.push_back(std::uint16_t(m));
    code.push_back(node_flags(g, g.start));
    code.push_back(std::uint16_t(M[std::size_t(g.start)][std::size_t(g.start)]));

    std::vector<std::vector<int>> frontier{{g.start}};
    for (std::size_t depth = 1; depth < m; ++depth) {
        std::vector<std::uint16_t> best;
        std::vector<std::vector<int>> next;
        for (const std::vector<int>& order : frontier) {
            std::vector<char> used(m, 0);
            for (int v : order) used[std::size_t(v)] = 1;
            std::vector<int> cands;
            for (std::size_t v = 0; v < m; ++v) {
                if (used[v]) continue;
                bool dup = false;
                for (int c : cands)
                    if (twins(M, node_flags(g, int(v)), node_flags(g, c), int(v), c)) {
                        dup = true;
                        break;
                    }
                if (!dup) cands.push_back(int(v));
            }
            for (int v : cands) {
                std::vector<std::uint16_t> chunk;
                chunk.push_back(node_flags(g, v));
                for (int a : order) chunk.push_back(std::uint16_t(M[std::size_t(v)][std::size_t(a)]));
                chunk.push_back(std::uint16_t(M[std::size_t(v)][std::size_t(v)]));
                for (int a : order) chunk.push_back(std::uint16_t(M[std::size_t(a)][std::size_t(v)]));
                if (best.empty() || chunk < best) {
                    best = chunk;
                    next.clear();
                }
                if (chunk == best) {
                    next.push_back(order);
                    next.back().push_back(v);
                }
            }
        }
        if (next.size() > 200000)
            return Result<CanonicalForm>(errc::size_exceeded, "canonical search frontier exploded");
        frontier = std::move(next);
        code.insert(code.end(), best.begin(), best.end());
    }
    return CanonicalForm{std::move(code)};
}

Result<bool> isomorphic(const YoungGraph& a, const YoungGraph& b, std::size_t node_bound) {
    if (a.nodes.size() != b.nodes.size()) return false;
    if (node_flags(a, a.start) != node_flags(b, b.start)) return false;
    if (a.edges.size() != b.edges.size()) return false;

    // Per-node invariant: flags, loop count, sorted out and in multiplicity
    // profiles. Mismatched multisets settle non-isomorphism without touching
    // the canonical search.
    using Sig = std::tuple<std::uint16_t, std::uint32_t, std::vector<std::uint32_t>,
                           std::vector<std::uint32_t>>;
    auto signatures = [](const YoungGraph& g) {
        auto M = multiplicity(g);
        std::size_t m = g.nodes.size();
        std::vector<Sig> sig;
        for (std::size_t v = 0; v < m; ++v) {
            std::vector<std::uint32_t> outs, ins;
            for (std::size_t x = 0; x < m; ++x) {
                if (x == v) continue;
                outs.push_back(M[v][x]);
                ins.push_back(M[x][v]);
            }
            std::sort(outs.begin(), outs.end());
            std::sort(ins.begin(), ins.end());
            sig.emplace_back(node_flags(g, int(v)), M[v][v], std::move(outs), std::move(ins));
        }
        std::sort(sig.begin(), sig.end());
        return sig;
    };
    if (signatures(a) != signatures(b)) return false;

    auto ca = canonical_form(a, node_bound);
    if (!ca.ok()) return Result<bool>(ca.error());
    auto cb = canonical_form(b, node_bound);
    if (!cb.ok()) return Result<bool>(cb.error());
    return ca.value() == cb.value();
}

std::optional<std::size_t> is_complete(const YoungGraph& g) {
    std::size_t m = g.nodes.size();
    if (m < 2) return std::nullopt;
    for (const YoungNode& n : g.nodes)
        if (!n.even_terminal || !n.odd_terminal) return std::nullopt;
    auto M = multiplicity(g);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (M[i][j] == 0) return std::nullopt;
    return m;
}

bool is_1089_graph(const YoungGraph& g) {
    static const YoungGraph reference = build_young_graph(9, 10).value();
    auto r = isomorphic(g, reference);
    return r.ok() && r.value();
}

Result<CorrespondenceReport> correspondence_check(std::int64_t n, std::int64_t b,
                                                  std::int64_t nhat, std::int64_t bhat,
                                                  std::int64_t max_length) {
    using R = Result<CorrespondenceReport>;
    if (n < 2 || b <= n || nhat < 2 || bhat <= nhat)
        return R(errc::bad_argument, "need 2 <= n < b and 2 <= nhat < bhat");
    if (max_length < 3) return R(errc::bad_argument, "max length below 3 checks nothing");
    if (max_length > 16) return R(errc::bad_argument, "max length capped at 16");

    CorrespondenceReport rep;
    rep.max_length = max_length;

    auto pump = [](std::int64_t mult, std::int64_t base, std::int64_t lo, std::int64_t hi)
        -> Result<std::vector<PalintipleInstance>> {
        EnumerationQuery q;
        q.multiplier = mult;
        q.base = base;
        q.min_length = lo;
        q.max_length = hi;
        q.cap = 2000000;
        auto r = enumerate_palintiples(q);
        if (!r.ok()) return Result<std::vector<PalintipleInstance>>(r.error());
        if (r.value().truncated)
            return Result<std::vector<PalintipleInstance>>(errc::cap_exceeded,
                                                           "enumeration truncated");
        return std::move(r).value().instances;
    };

    // Down: carries c_1..c_K of each (nhat,bhat)-palintiple, low to high,
    // must be the digits of an (n,b)-palintiple.
    auto upper = pump(nhat, bhat, 3, max_length);
    if (!upper.ok()) return R(upper.error());
    for (const PalintipleInstance& p : upper.value()) {
        std::vector<Int> cand(p.carries.begin() + 1, p.carries.end() - 1);
        auto inst = make_instance(n, b, cand);
        if (inst.ok()) continue;
        std::ostringstream os;
        os << "carries (";
        for (std::size_t i = cand.size(); i-- > 0;)
            os << cand[i] << (i ? "," : "");
        os << ") are not (" << n << "," << b << ") digits: " << inst.error().message;
        rep.carry_issues.push_back({p.literal(), os.str()});
    }
    rep.carries_are_digits = rep.carry_issues.empty();

    // Up: each (n,b)-palintiple, one length down, must reappear as exactly
    // such a carry sequence. The digits an (nhat,bhat) instance would need
    // are forced by the carries, so the lift either exists or provably not.
    auto lower = pump(n, b, 2, max_length - 1);
    if (!lower.ok()) return R(lower.error());
    for (const PalintipleInstance& p : lower.value()) {
        std::vector<Int> full;
        full.push_back(0);
        full.insert(full.end(), p.digits.begin(), p.digits.end());
        full.push_back(0);
        auto digits = digits_from_carries(nhat, bhat, full);
        if (!digits.ok()) {
            rep.digit_issues.push_back({p.literal(), "no lift: " + digits.error().message});
            continue;
        }
        auto lifted = make_instance(nhat, bhat, digits.value());
        if (!lifted.ok()) {
            rep.digit_issues.push_back({p.literal(), "no lift: " + lifted.error().message});
            continue;
        }
        if (lifted.value().carries != full)
            rep.digit_issues.push_back({p.literal(), "lift exists but with other carries"});
    }
    rep.digits_are_carries = rep.digit_issues.empty();
    return rep;
}

std::string to_dot(const YoungGraph& g) {
    std::ostringstream os;
    os << "digraph young {\n";
    os << "  label=\"Y(" << g.multiplier << "," << g.base << ")\";\n";
    os << "  rankdir=LR;\n";
    os << "  node [shape=circle];\n";
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        const YoungNode& n = g.nodes[i];
        os << "  n" << i << " [label=\"" << n.u << "," << n.w << "\"";
        int per = 1 + (n.even_terminal ? 1 : 0) + (n.odd_terminal ? 1 : 0);
        if (per > 1) os << ", peripheries=" << per;
        os << "];\n";
    }
    for (const YoungEdge& e : g.edges) {
        os << "  n" << e.from << " -> n" << e.to << " [label=\"" << e.d_low << "," << e.d_high
           << "\"";
        if (e.first_ok) os << ", style=bold";
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace palintiple
