#include "zres/curve_graph.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace zres {

namespace {

std::map<std::string, std::size_t> index_of(const CurveGraph& g) {
    std::map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        idx[g.vertices[i].id] = i;
    return idx;
}

std::string edge_label(const std::array<std::string, 2>& e) {
    return e[0] + "-" + e[1];
}

// Checks ids are well-formed before anything else looks at the graph.
void check_structure(const CurveGraph& g) {
    if (g.vertices.empty())
        throw StructuralError("empty graph: f must have at least one exceptional curve");
    std::set<std::string> seen;
    for (const auto& v : g.vertices) {
        if (v.id.empty()) throw StructuralError("vertex with empty id");
        if (!seen.insert(v.id).second)
            throw StructuralError("duplicate vertex id: " + v.id);
    }
    for (const auto& e : g.edges) {
        if (!seen.count(e[0]) || !seen.count(e[1]))
            throw StructuralError("edge references unknown vertex: " + edge_label(e));
    }
    std::set<std::string> aseen;
    for (const auto& a : g.arrows) {
        if (a.id.empty()) throw StructuralError("arrow with empty id");
        if (!aseen.insert(a.id).second)
            throw StructuralError("duplicate arrow id: " + a.id);
        if (!seen.count(a.attach))
            throw StructuralError("arrow " + a.id + " attaches to unknown vertex: " + a.attach);
    }
}

std::string fresh_id(const CurveGraph& g, const std::string& prefix, int& counter) {
    std::set<std::string> used;
    for (const auto& v : g.vertices) used.insert(v.id);
    std::string id;
    do {
        id = prefix + std::to_string(++counter);
    } while (used.count(id));
    return id;
}

} // namespace

bool CurveGraph::has_vertex(const std::string& id) const {
    for (const auto& v : vertices)
        if (v.id == id) return true;
    return false;
}

const Vertex& CurveGraph::vertex(const std::string& id) const {
    for (const auto& v : vertices)
        if (v.id == id) return v;
    throw StructuralError("unknown vertex id: " + id);
}

std::vector<std::string> CurveGraph::neighbors(const std::string& id) const {
    std::vector<std::string> out;
    for (const auto& e : edges) {
        if (e[0] == id) out.push_back(e[1]);
        if (e[1] == id) out.push_back(e[0]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<const Arrow*> CurveGraph::arrows_at(const std::string& id) const {
    std::vector<const Arrow*> out;
    for (const auto& a : arrows)
        if (a.attach == id) out.push_back(&a);
    return out;
}

IntMatrix CurveGraph::intersection_matrix() const {
    const auto idx = index_of(*this);
    const std::size_t n = vertices.size();
    IntMatrix m(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = vertices[i].e;
    for (const auto& e : edges) {
        const auto i = idx.at(e[0]), j = idx.at(e[1]);
        m[i][j] = 1;
        m[j][i] = 1;
    }
    return m;
}

ValidationReport validate(const CurveGraph& g) {
    check_structure(g);
    ValidationReport report;
    const auto idx = index_of(g);

    for (const auto& v : g.vertices) {
        if (v.e > -1)
            report.push_back({"self_intersection", "e must be <= -1, got " + std::to_string(v.e), {v.id}});
        if (v.m < 1)
            report.push_back({"multiplicity", "m must be >= 1, got " + std::to_string(v.m), {v.id}});
    }
    for (const auto& a : g.arrows) {
        if (a.m != 1)
            report.push_back({"arrow_multiplicity", "reduced f requires arrow m = 1, got " + std::to_string(a.m), {a.id}});
    }

    std::set<std::array<std::string, 2>> edge_set;
    for (const auto& e : g.edges) {
        if (e[0] == e[1]) {
            report.push_back({"simple_edges", "self-loop", {edge_label(e)}});
            continue;
        }
        std::array<std::string, 2> key{std::min(e[0], e[1]), std::max(e[0], e[1])};
        if (!edge_set.insert(key).second)
            report.push_back({"simple_edges", "duplicate edge", {edge_label(e)}});
    }

    // (f).A_i = 0: e_i m_i + sum of adjacent multiplicities vanishes.
    for (const auto& v : g.vertices) {
        long long sum = v.e * v.m;
        for (const auto& n : g.neighbors(v.id)) sum += g.vertex(n).m;
        for (const auto* a : g.arrows_at(v.id)) sum += a->m;
        if (sum != 0)
            report.push_back({"relation", "e*m + adjacent multiplicities = " + std::to_string(sum), {v.id}});
    }

    // connectedness
    {
        std::set<std::size_t> seen{0};
        std::vector<std::size_t> todo{0};
        while (!todo.empty()) {
            const auto i = todo.back();
            todo.pop_back();
            for (const auto& n : g.neighbors(g.vertices[i].id)) {
                const auto j = idx.at(n);
                if (seen.insert(j).second) todo.push_back(j);
            }
        }
        if (seen.size() != g.vertices.size()) {
            std::vector<std::string> missing;
            for (std::size_t i = 0; i < g.vertices.size(); ++i)
                if (!seen.count(i)) missing.push_back(g.vertices[i].id);
            report.push_back({"connected", "graph is disconnected", missing});
        }
    }

    if (!negative_definite(g.intersection_matrix()))
        report.push_back({"negative_definite", "intersection matrix is not negative definite", {}});

    return report;
}

bool is_valid(const CurveGraph& g) { return validate(g).empty(); }

bool is_parity_normalized(const CurveGraph& g) {
    for (const auto& e : g.edges)
        if (g.vertex(e[0]).m % 2 != 0 && g.vertex(e[1]).m % 2 != 0) return false;
    for (const auto& a : g.arrows)
        if (g.vertex(a.attach).m % 2 != 0) return false; // arrow m = 1 is odd
    return true;
}

CurveGraph normalize_parity(const CurveGraph& g) {
    if (!is_valid(g))
        throw std::invalid_argument("normalize_parity: input graph is not valid");
    CurveGraph out = g;

    auto bump_e = [&out](const std::string& id, long long d) {
        for (auto& v : out.vertices)
            if (v.id == id) v.e += d;
    };

    int counter = 0;
    // Odd-odd intersection points of the input; inserted vertices are even
    // so a single pass reaches the fixed point.
    std::vector<std::array<std::string, 2>> odd_edges;
    for (const auto& e : g.edges)
        if (g.vertex(e[0]).m % 2 != 0 && g.vertex(e[1]).m % 2 != 0)
            odd_edges.push_back({std::min(e[0], e[1]), std::max(e[0], e[1])});
    std::sort(odd_edges.begin(), odd_edges.end());

    for (const auto& e : odd_edges) {
        const std::string nid = fresh_id(out, "p", counter);
        out.vertices.push_back({nid, -1, g.vertex(e[0]).m + g.vertex(e[1]).m});
        out.edges.erase(std::remove_if(out.edges.begin(), out.edges.end(),
                                       [&](const std::array<std::string, 2>& x) {
                                           return (x[0] == e[0] && x[1] == e[1]) ||
                                                  (x[0] == e[1] && x[1] == e[0]);
                                       }),
                        out.edges.end());
        out.edges.push_back({e[0], nid});
        out.edges.push_back({e[1], nid});
        bump_e(e[0], -1);
        bump_e(e[1], -1);
    }

    std::vector<std::string> odd_arrows;
    for (const auto& a : g.arrows)
        if (g.vertex(a.attach).m % 2 != 0) odd_arrows.push_back(a.id);
    std::sort(odd_arrows.begin(), odd_arrows.end());

    for (const auto& aid : odd_arrows) {
        auto it = std::find_if(out.arrows.begin(), out.arrows.end(),
                               [&](const Arrow& a) { return a.id == aid; });
        const std::string host = it->attach;
        const std::string nid = fresh_id(out, "p", counter);
        out.vertices.push_back({nid, -1, g.vertex(host).m + it->m});
        out.edges.push_back({host, nid});
        it->attach = nid;
        bump_e(host, -1);
    }

    return out;
}

long long OrderedCurveGraph::position(const std::string& id) const {
    for (std::size_t i = 0; i < order.size(); ++i)
        if (order[i] == id) return static_cast<long long>(i);
    throw StructuralError("unknown vertex id in order: " + id);
}

OrderedCurveGraph order_vertices(const CurveGraph& g) {
    if (!is_parity_normalized(g))
        throw std::invalid_argument("order_vertices: graph is not parity-normalized");
    if (!is_valid(g))
        throw std::invalid_argument("order_vertices: graph is not valid");
    std::vector<std::string> evens, odds;
    for (const auto& v : g.vertices)
        (v.m % 2 == 0 ? evens : odds).push_back(v.id);
    std::sort(evens.begin(), evens.end());
    std::sort(odds.begin(), odds.end());
    OrderedCurveGraph out{g, evens};
    out.order.insert(out.order.end(), odds.begin(), odds.end());
    return out;
}

OrderedCurveGraph order_with_override(const CurveGraph& g,
                                      const std::vector<std::string>& order) {
    if (!is_parity_normalized(g))
        throw std::invalid_argument("order override: graph is not parity-normalized");
    if (!is_valid(g))
        throw std::invalid_argument("order override: graph is not valid");
    if (order.size() != g.vertices.size())
        throw std::invalid_argument("order override: wrong length");
    std::set<std::string> seen;
    for (const auto& id : order) {
        g.vertex(id); // throws on unknown
        if (!seen.insert(id).second)
            throw std::invalid_argument("order override: duplicate id " + id);
    }
    bool saw_odd = false;
    for (const auto& id : order) {
        const bool odd = g.vertex(id).m % 2 != 0;
        if (odd) saw_odd = true;
        else if (saw_odd)
            throw std::invalid_argument("order override: even-m vertex " + id + " after an odd-m vertex");
    }
    return {g, order};
}

// --- Brieskorn builder ------------------------------------------------
//
// Blow-up simulation for x^p + y^q. The point to blow up carries the
// strict transform as a binomial u^a + v^b where u, v are the (at most
// two) known divisors through the point; the Euclidean subtraction on
// (a,b) matches one blow-up per step, and a final blow-up at a = b
// separates the gcd(p,q) branches.
CurveGraph brieskorn_graph(long long p, long long q) {
    if (p < 2 || q < 2)
        throw std::invalid_argument("brieskorn_graph: need p,q >= 2");

    CurveGraph g;
    g.name = "brieskorn_" + std::to_string(p) + "_" + std::to_string(q);

    auto bump_e = [&g](int idx, long long d) {
        if (idx >= 0) g.vertices[static_cast<std::size_t>(idx)].e += d;
    };
    auto mult_of = [&g](int idx) -> long long {
        return idx >= 0 ? g.vertices[static_cast<std::size_t>(idx)].m : 0;
    };
    auto drop_edge = [&g](int i, int j) {
        if (i < 0 || j < 0) return;
        const std::string a = g.vertices[static_cast<std::size_t>(i)].id;
        const std::string b = g.vertices[static_cast<std::size_t>(j)].id;
        g.edges.erase(std::remove_if(g.edges.begin(), g.edges.end(),
                                     [&](const std::array<std::string, 2>& e) {
                                         return (e[0] == a && e[1] == b) || (e[0] == b && e[1] == a);
                                     }),
                      g.edges.end());
    };
    auto add_edge = [&g](int i, int j) {
        if (i < 0 || j < 0) return;
        g.edges.push_back({g.vertices[static_cast<std::size_t>(i)].id,
                           g.vertices[static_cast<std::size_t>(j)].id});
    };

    long long a = p, b = q;  // exponents on the u-side and v-side divisors
    int hu = -1, hv = -1;    // vertex indices of those divisors, -1 = none
    int next = 0;

    while (true) {
        const long long m_new = mult_of(hu) + mult_of(hv) + std::min(a, b);
        g.vertices.push_back({"v" + std::to_string(++next), -1, m_new});
        const int e_new = static_cast<int>(g.vertices.size()) - 1;
        bump_e(hu, -1);
        bump_e(hv, -1);
        drop_edge(hu, hv); // their old intersection point was just blown up
        add_edge(e_new, hu);
        add_edge(e_new, hv);
        if (a == b) {
            // branches separate onto the new curve at distinct points
            for (long long k = 0; k < a; ++k)
                g.arrows.push_back({"St" + std::to_string(k + 1),
                                    g.vertices[static_cast<std::size_t>(e_new)].id, 1});
            break;
        }
        if (a < b) {
            b -= a;
            hv = e_new; // strict transform now sits on (old u-divisor) ∩ E_new
        } else {
            a -= b;
            hu = e_new;
        }
    }

    return normalize_parity(g);
}

CurveGraph blow_up_free(const CurveGraph& g, const std::string& vertex_id,
                        const std::string& new_id) {
    const auto& v = g.vertex(vertex_id);
    CurveGraph out = g;
    out.vertices.push_back({new_id, -1, v.m});
    out.edges.push_back({vertex_id, new_id});
    for (auto& w : out.vertices)
        if (w.id == vertex_id) w.e -= 1;
    return out;
}

CurveGraph blow_up_edge(const CurveGraph& g, const std::string& a,
                        const std::string& b, const std::string& new_id) {
    CurveGraph out = g;
    const long long m = g.vertex(a).m + g.vertex(b).m;
    out.vertices.push_back({new_id, -1, m});
    out.edges.erase(std::remove_if(out.edges.begin(), out.edges.end(),
                                   [&](const std::array<std::string, 2>& e) {
                                       return (e[0] == a && e[1] == b) || (e[0] == b && e[1] == a);
                                   }),
                    out.edges.end());
    out.edges.push_back({a, new_id});
    out.edges.push_back({b, new_id});
    for (auto& w : out.vertices)
        if (w.id == a || w.id == b) w.e -= 1;
    return out;
}

CurveGraph blow_up_arrow(const CurveGraph& g, const std::string& arrow_id,
                         const std::string& new_id) {
    CurveGraph out = g;
    auto it = std::find_if(out.arrows.begin(), out.arrows.end(),
                           [&](const Arrow& a) { return a.id == arrow_id; });
    if (it == out.arrows.end())
        throw StructuralError("unknown arrow id: " + arrow_id);
    const std::string host = it->attach;
    out.vertices.push_back({new_id, -1, g.vertex(host).m + it->m});
    out.edges.push_back({host, new_id});
    it->attach = new_id;
    for (auto& w : out.vertices)
        if (w.id == host) w.e -= 1;
    return out;
}

CurveGraph random_refinement(const CurveGraph& g, unsigned long long seed,
                             int steps) {
    if (!is_valid(g) || !is_parity_normalized(g))
        throw std::invalid_argument("random_refinement: input must be valid and parity-normalized");
    CurveGraph cur = g;
    std::mt19937_64 rng(seed);
    int counter = 0;
    for (int s = 0; s < steps; ++s) {
        // candidate sites, in a deterministic order
        std::vector<std::string> vids;
        for (const auto& v : cur.vertices) vids.push_back(v.id);
        std::sort(vids.begin(), vids.end());
        std::vector<std::array<std::string, 2>> eids;
        for (const auto& e : cur.edges)
            eids.push_back({std::min(e[0], e[1]), std::max(e[0], e[1])});
        std::sort(eids.begin(), eids.end());
        std::vector<std::string> aids;
        for (const auto& a : cur.arrows) aids.push_back(a.id);
        std::sort(aids.begin(), aids.end());

        const std::size_t total = vids.size() + eids.size() + aids.size();
        std::size_t pick = static_cast<std::size_t>(rng() % total);
        const std::string nid = fresh_id(cur, "r", counter);
        if (pick < vids.size()) {
            cur = blow_up_free(cur, vids[pick], nid);
        } else if (pick < vids.size() + eids.size()) {
            const auto& e = eids[pick - vids.size()];
            cur = blow_up_edge(cur, e[0], e[1], nid);
        } else {
            cur = blow_up_arrow(cur, aids[pick - vids.size() - eids.size()], nid);
        }
    }
    return normalize_parity(cur);
}

} // namespace zres
