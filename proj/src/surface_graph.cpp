#include "zres/surface_graph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace zres {

SCurveData strict_transform_curve(const DivisorComplex& cx, const std::string& vertex_id) {
    const auto it = cx.scurves.find(vertex_id);
    if (it == cx.scurves.end())
        throw std::invalid_argument("strict_transform_curve: unknown vertex " + vertex_id);
    return it->second;
}

IntMatrix SGraph::intersection_matrix() const {
    std::map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < vertices.size(); ++i) idx[vertices[i].id] = i;
    IntMatrix m(vertices.size(), std::vector<long long>(vertices.size(), 0));
    for (std::size_t i = 0; i < vertices.size(); ++i) m[i][i] = vertices[i].self_int;
    for (const auto& [a, b] : edges) {
        const auto i = idx.at(a), j = idx.at(b);
        m[i][j] += 1;
        m[j][i] += 1;
    }
    return m;
}

SGraph surface_dual_graph(const DivisorComplex& cx) {
    SGraph g;
    std::map<std::string, std::vector<std::string>> comp_ids;
    for (const auto& vid : cx.order) {
        const auto& s = cx.scurves.at(vid);
        if (s.components == 2) {
            for (const char* tag : {"+", "-"}) {
                SGraphVertex v;
                v.id = vid + tag;
                v.from_vertex = vid;
                v.comp = tag;
                v.genus = 0; // both components are rational
                v.self_int = s.self_int_in_stg;
                comp_ids[vid].push_back(v.id);
                g.vertices.push_back(std::move(v));
            }
        } else {
            SGraphVertex v;
            v.id = vid;
            v.from_vertex = vid;
            v.genus = s.genus;
            v.self_int = s.self_int_in_stg;
            comp_ids[vid].push_back(v.id);
            g.vertices.push_back(std::move(v));
        }
    }

    // One intersection point over an odd-multiplicity neighbour, two over
    // an even one. Component pairing between two 2-component sides follows
    // a fixed sign propagation, which here amounts to matching tags.
    for (const auto& vid : cx.order) {
        const auto& ctx = cx.contexts.at(vid);
        for (const auto& [label, m] : ctx.younger) {
            if (!cx.contexts.count(label)) continue; // arrow, not an edge
            const auto& a = comp_ids.at(vid);
            const auto& b = comp_ids.at(label);
            if (m % 2 != 0) {
                if (a.size() != 1 || b.size() != 1)
                    throw std::logic_error("surface_dual_graph: odd edge with split sides");
                g.edges.emplace_back(a[0], b[0]);
            } else if (a.size() == 1 && b.size() == 1) {
                g.edges.emplace_back(a[0], b[0]);
                g.edges.emplace_back(a[0], b[0]);
            } else if (a.size() == 2 && b.size() == 1) {
                g.edges.emplace_back(a[0], b[0]);
                g.edges.emplace_back(a[1], b[0]);
            } else if (a.size() == 1 && b.size() == 2) {
                g.edges.emplace_back(a[0], b[0]);
                g.edges.emplace_back(a[0], b[1]);
            } else {
                g.edges.emplace_back(a[0], b[0]);
                g.edges.emplace_back(a[1], b[1]);
            }
        }
    }
    return g;
}

namespace {

struct MultiGraph {
    std::vector<SGraphVertex> vs;
    std::vector<std::pair<std::string, std::string>> es;

    std::vector<std::string> neighbors(const std::string& id) const {
        std::vector<std::string> out;
        for (const auto& [a, b] : es) {
            if (a == id) out.push_back(b);
            if (b == id) out.push_back(a);
        }
        return out;
    }
};

} // namespace

BlowDownResult blow_down_minimal(const SGraph& g) {
    MultiGraph cur{g.vertices, g.edges};
    bool progressed = true;
    while (progressed) {
        progressed = false;
        std::vector<std::string> order;
        for (const auto& v : cur.vs) order.push_back(v.id);
        std::sort(order.begin(), order.end());
        for (const auto& id : order) {
            const auto* v = &*std::find_if(cur.vs.begin(), cur.vs.end(),
                                           [&](const SGraphVertex& w) { return w.id == id; });
            if (v->genus != 0 || v->self_int != -1) continue;
            auto nbrs = cur.neighbors(id);
            std::set<std::string> distinct(nbrs.begin(), nbrs.end());
            if (distinct.size() != nbrs.size() || distinct.count(id)) continue;

            // contract: neighbours gain +1 and become pairwise connected
            for (auto& w : cur.vs)
                if (distinct.count(w.id)) w.self_int += 1;
            cur.es.erase(std::remove_if(cur.es.begin(), cur.es.end(),
                                        [&](const auto& e) {
                                            return e.first == id || e.second == id;
                                        }),
                         cur.es.end());
            std::vector<std::string> ns(distinct.begin(), distinct.end());
            for (std::size_t i = 0; i < ns.size(); ++i)
                for (std::size_t j = i + 1; j < ns.size(); ++j)
                    cur.es.emplace_back(ns[i], ns[j]);
            cur.vs.erase(std::remove_if(cur.vs.begin(), cur.vs.end(),
                                        [&](const SGraphVertex& w) { return w.id == id; }),
                         cur.vs.end());
            progressed = true;
            break;
        }
    }
    BlowDownResult out;
    out.graph.vertices = cur.vs;
    out.graph.edges = cur.es;
    for (const auto& v : cur.vs)
        if (v.genus == 0 && v.self_int == -1) out.blocked = true;
    return out;
}

namespace {

using EdgeCount = std::map<std::pair<std::size_t, std::size_t>, int>;

EdgeCount edge_counts(const SGraph& g, const std::map<std::string, std::size_t>& idx) {
    EdgeCount out;
    for (const auto& [a, b] : g.edges) {
        auto i = idx.at(a), j = idx.at(b);
        if (j < i) std::swap(i, j);
        out[{i, j}] += 1;
    }
    return out;
}

bool extend(const SGraph& a, const SGraph& b, const EdgeCount& ea, const EdgeCount& eb,
            std::vector<long long>& match, std::vector<bool>& used, std::size_t k) {
    if (k == a.vertices.size()) return true;
    for (std::size_t j = 0; j < b.vertices.size(); ++j) {
        if (used[j]) continue;
        if (a.vertices[k].genus != b.vertices[j].genus ||
            a.vertices[k].self_int != b.vertices[j].self_int)
            continue;
        bool ok = true;
        for (std::size_t i = 0; i < k && ok; ++i) {
            std::size_t a1 = i, a2 = k;
            if (a2 < a1) std::swap(a1, a2);
            std::size_t b1 = static_cast<std::size_t>(match[i]), b2 = j;
            if (b2 < b1) std::swap(b1, b2);
            const auto ia = ea.find({a1, a2});
            const auto ib = eb.find({b1, b2});
            const int ca = (ia == ea.end()) ? 0 : ia->second;
            const int cb = (ib == eb.end()) ? 0 : ib->second;
            if (ca != cb) ok = false;
        }
        if (!ok) continue;
        match[k] = static_cast<long long>(j);
        used[j] = true;
        if (extend(a, b, ea, eb, match, used, k + 1)) return true;
        used[j] = false;
    }
    return false;
}

} // namespace

bool sgraph_isomorphic(const SGraph& a, const SGraph& b) {
    if (a.vertices.size() != b.vertices.size() || a.edges.size() != b.edges.size())
        return false;
    std::map<std::string, std::size_t> ia, ib;
    for (std::size_t i = 0; i < a.vertices.size(); ++i) ia[a.vertices[i].id] = i;
    for (std::size_t i = 0; i < b.vertices.size(); ++i) ib[b.vertices[i].id] = i;
    const auto ea = edge_counts(a, ia), eb = edge_counts(b, ib);
    std::vector<long long> match(a.vertices.size(), -1);
    std::vector<bool> used(b.vertices.size(), false);
    return extend(a, b, ea, eb, match, used, 0);
}

SGraph a_chain(int n) {
    SGraph g;
    for (int i = 0; i < n; ++i)
        g.vertices.push_back({"a" + std::to_string(i + 1), "", "", 0, -2});
    for (int i = 0; i + 1 < n; ++i)
        g.edges.emplace_back("a" + std::to_string(i + 1), "a" + std::to_string(i + 2));
    return g;
}

} // namespace zres
