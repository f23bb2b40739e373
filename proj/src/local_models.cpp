#include "zres/local_models.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace zres {

long long blow_up_count(long long m) {
    if (m < 1) throw std::invalid_argument("blow_up_count: m >= 1 required");
    if (m == 1) return 0;
    if (m % 2 == 0) return m / 2;
    return (m + 3) / 2;
}

ChainDescriptor fiber_chain(long long m) {
    if (m < 1) throw std::invalid_argument("fiber_chain: m >= 1 required");
    ChainDescriptor d;
    d.blow_ups = blow_up_count(m);
    if (m == 1) {
        d.components = {{0, 1}};
        d.s_kind = StrictMeets::C1;
        return d;
    }
    if (m % 2 == 0) {
        const long long l = m / 2;
        d.components.push_back({-1, 1});
        for (long long i = 0; i < l - 1; ++i) d.components.push_back({-2, 1});
        d.components.push_back({-1, 1});
        d.s_kind = StrictMeets::Component;
        d.s_index = static_cast<long long>(d.components.size()) - 1;
        return d;
    }
    const long long l = (m - 1) / 2;
    d.components.push_back({-1, 1});
    for (long long i = 0; i < l - 1; ++i) d.components.push_back({-2, 1});
    d.components.push_back({-3, 1});
    d.components.push_back({-1, 2}); // the one curve of multiplicity two
    d.components.push_back({-2, 1});
    d.s_kind = StrictMeets::Component;
    d.s_index = static_cast<long long>(d.components.size()) - 2;
    return d;
}

std::vector<long long> c1m_chain_corrections(long long m) {
    if (m < 1) throw std::invalid_argument("c1m_chain_corrections: m >= 1 required");
    if (m == 1) return {};
    std::vector<long long> corr;
    if (m % 2 == 0) {
        for (long long r = 1; r <= m / 2; ++r) corr.push_back(r);
        return corr;
    }
    const long long l = (m - 1) / 2;
    for (long long r = 1; r <= l; ++r) corr.push_back(r);
    corr.push_back(2 * l + 1);
    corr.push_back(l + 1);
    return corr;
}

// ---- blow-up simulation ------------------------------------------------
//
// Resolve {x^2 = y^m} ∪ {x = 0} near the point x = y = 0 on the fiber
// {y = 0} of a ruled surface, by point blow-ups. The strict transform of
// the branch curve stays binomial u^a + v^b in the two divisors through
// the current point, so one Euclidean subtraction is one blow-up.

namespace {

struct SimCurve {
    long long self_int;
    long long y_mult; // multiplicity in the pullback of y
    // class over {total fiber, E_1..E_N}: index 0 = fiber, k = E_k
    std::vector<long long> cls;
};

struct Simulation {
    // curve 0 = C1 ({x=0}), curve 1 = F (the fiber {y=0}), then E_1, ...
    std::vector<SimCurve> curves;
    std::set<std::pair<int, int>> adj;
    std::vector<long long> c1_correction; // C1 strict = C1 - sum mu_k E_k
    int strict_on = -1;

    void link(int a, int b) { adj.insert({std::min(a, b), std::max(a, b)}); }
    void unlink(int a, int b) { adj.erase({std::min(a, b), std::max(a, b)}); }
};

Simulation simulate(long long m) {
    Simulation sim;
    sim.curves.push_back({0, 0, {}}); // C1; self-int unused locally
    sim.curves.push_back({0, 1, {}}); // F
    sim.link(0, 1);

    if (m == 1) return sim; // branch already crosses C1 transversally

    sim.curves[1].cls = {1}; // total class of the fiber

    long long a = 2, b = m;
    int hu = 0, hv = 1;
    while (true) {
        const int enew = static_cast<int>(sim.curves.size());
        sim.curves.push_back({-1,
                              sim.curves[static_cast<std::size_t>(hu)].y_mult +
                                  sim.curves[static_cast<std::size_t>(hv)].y_mult,
                              {}});
        sim.curves[static_cast<std::size_t>(hu)].self_int -= 1;
        sim.curves[static_cast<std::size_t>(hv)].self_int -= 1;
        // class slot of the new E: 0 is the fiber, k is E_k (= curve k+1)
        const std::size_t eslot = static_cast<std::size_t>(enew) - 1;
        for (auto& c : sim.curves) c.cls.resize(eslot + 1, 0);
        sim.curves[static_cast<std::size_t>(enew)].cls[eslot] = 1;
        // strict transforms of the curves through the centre drop one E
        if (hu == 1 || hv == 1) sim.curves[1].cls[eslot] -= 1;
        if (hu >= 2) sim.curves[static_cast<std::size_t>(hu)].cls[eslot] -= 1;
        if (hv >= 2) sim.curves[static_cast<std::size_t>(hv)].cls[eslot] -= 1;
        sim.c1_correction.push_back((hu == 0 || hv == 0) ? 1 : 0);

        sim.unlink(hu, hv);
        sim.link(enew, hu);
        sim.link(enew, hv);

        if (a == b) {
            sim.strict_on = enew;
            break;
        }
        if (a < b) {
            b -= a;
            hv = enew;
        } else {
            a -= b;
            hu = enew;
        }
    }
    return sim;
}

// Components of the modified fiber in order from the C_0^m side: start at
// the strict transform of the fiber and walk the chain away from C1.
std::vector<int> chain_walk(const Simulation& sim) {
    auto chain_neighbors = [&sim](int c) {
        std::vector<int> out;
        for (const auto& [a, b] : sim.adj) {
            if (a == c && b != 0) out.push_back(b);
            if (b == c && a != 0) out.push_back(a);
        }
        return out;
    };
    std::vector<int> walk{1};
    int prev = -1, cur = 1;
    while (true) {
        const auto ns = chain_neighbors(cur);
        int next = -1;
        for (int n : ns)
            if (n != prev) next = n;
        if (next == -1) break;
        walk.push_back(next);
        prev = cur;
        cur = next;
    }
    return walk;
}

} // namespace

ChainDescriptor local_blowup_oracle(long long m) {
    if (m < 1) throw std::invalid_argument("local_blowup_oracle: m >= 1 required");
    const Simulation sim = simulate(m);
    const auto walk = chain_walk(sim);

    ChainDescriptor d;
    d.blow_ups = static_cast<long long>(sim.curves.size()) - 2;
    for (int c : walk)
        d.components.push_back({sim.curves[static_cast<std::size_t>(c)].self_int,
                                sim.curves[static_cast<std::size_t>(c)].y_mult});
    if (m == 1) {
        d.s_kind = StrictMeets::C1;
        return d;
    }
    d.s_kind = StrictMeets::Component;
    for (std::size_t i = 0; i < walk.size(); ++i)
        if (walk[i] == sim.strict_on) d.s_index = static_cast<long long>(i);
    // the component next to C1 must be the end of the walk
    if (!sim.adj.count({0, walk.back()}))
        throw std::logic_error("local_blowup_oracle: chain end does not meet C1");
    return d;
}

std::vector<long long> oracle_c1m_chain_corrections(long long m) {
    if (m < 1) throw std::invalid_argument("oracle corrections: m >= 1 required");
    const Simulation sim = simulate(m);
    if (m == 1) return {};
    const auto walk = chain_walk(sim);
    const std::size_t n = sim.curves.size() - 2; // number of E's

    // Solve sum_d corr_d * class(comp_d) = sum_k mu_k E_k over the E
    // coordinates; comp_d are the walk components 1.. (creation order makes
    // the system unit-triangular).
    std::vector<int> comp_by_creation; // E index k (1-based) -> walk curve id
    for (std::size_t k = 0; k < n; ++k) comp_by_creation.push_back(static_cast<int>(k) + 2);

    std::vector<long long> rhs(n, 0);
    for (std::size_t k = 0; k < n; ++k) rhs[k] = sim.c1_correction[k];
    // E_j's strict class involves only E's created no earlier than E_j, so
    // the system is unit-triangular in creation order
    std::vector<long long> corr_by_creation(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
        long long v = rhs[k];
        for (std::size_t j = 0; j < k; ++j) {
            const auto& cls = sim.curves[static_cast<std::size_t>(comp_by_creation[j])].cls;
            v -= corr_by_creation[j] * cls[k + 1];
        }
        const auto& diag = sim.curves[static_cast<std::size_t>(comp_by_creation[k])].cls;
        if (diag[k + 1] != 1) throw std::logic_error("oracle corrections: non-unit diagonal");
        corr_by_creation[k] = v;
    }

    // reorder to walk order (walk[0] is the fiber strict, skip it)
    std::vector<long long> out;
    for (std::size_t i = 1; i < walk.size(); ++i)
        out.push_back(corr_by_creation[static_cast<std::size_t>(walk[i]) - 2]);
    return out;
}

long long c1m_self_int(long long e, const std::vector<long long>& ms) {
    long long total = 0;
    for (long long m : ms) {
        if (m < 1) throw std::invalid_argument("c1m_self_int: m' >= 1 required");
        total += m;
    }
    if (total != 2 * e)
        throw std::invalid_argument("c1m_self_int: 2e = sum of m' violated");
    long long v = e;
    for (long long m : ms) {
        if (m % 2 == 0) v -= m / 2;
        else if (m > 1) v -= (m + 1) / 2;
    }
    return v;
}

long long picard_rank(const std::vector<long long>& ms) {
    long long r = 2;
    for (long long m : ms) r += blow_up_count(m);
    return r;
}

ModifiedRuledSurface make_modified_surface(
    long long e, std::vector<std::string> marked,
    const std::vector<std::pair<std::string, long long>>& younger) {
    ModifiedRuledSurface s;
    s.e = e;
    s.marked_points = std::move(marked);
    long long total = 0;
    std::vector<long long> ms;
    for (const auto& [label, m] : younger) {
        ModifiedPoint p;
        p.label = label;
        p.m = m;
        p.chain = fiber_chain(m);
        s.modified_points.push_back(std::move(p));
        ms.push_back(m);
        total += m;
    }
    if (total != 2 * e)
        throw std::logic_error("modified surface: 2e = sum of m' violated");
    s.c0m = -e;
    s.c1m = c1m_self_int(e, ms);
    s.picard = picard_rank(ms);
    return s;
}

DiscBundleModel make_disc_bundle(
    const std::vector<std::pair<std::string, long long>>& older) {
    DiscBundleModel b;
    long long x = 0;
    for (const auto& [label, m] : older) {
        if (m % 2 != 0)
            throw std::logic_error("disc bundle: older neighbour with odd multiplicity");
        DiscModification mod;
        mod.older_label = label;
        mod.count = m / 2;
        for (long long i = 0; i < mod.count - 1; ++i) mod.chain_self_ints.push_back(-2);
        mod.chain_self_ints.push_back(-1);
        b.modifications.push_back(std::move(mod));
        x -= m / 2;
    }
    b.zero_section_self_int = x;
    return b;
}

} // namespace zres
