#pragma once

#include <string>
#include <vector>

#include "zres/intmath.hpp"

namespace zres {

// Local numerics of the modified ruled surfaces X_e^m: what the fiber over
// a modified base point looks like after the minimal blow-up sequence that
// makes {x^2 = y^m} ∪ {x = 0} normal crossing.

struct ChainComponent {
    long long self_int;
    long long fiber_mult; // multiplicity in the pullback of the base point

    bool operator==(const ChainComponent&) const = default;
};

enum class StrictMeets { None, C1, Component };

// Components of the modified fiber, ordered from the C_0^m side to the
// C_1^m side; consecutive components intersect.
struct ChainDescriptor {
    std::vector<ChainComponent> components;
    long long blow_ups = 0;
    StrictMeets s_kind = StrictMeets::None;
    long long s_index = -1; // index into components when s_kind == Component

    bool operator==(const ChainDescriptor&) const = default;
};

// 0 for m=1, m/2 for even m, (m+3)/2 for odd m >= 3.
long long blow_up_count(long long m);

// Table form read off the modified-surface picture.
ChainDescriptor fiber_chain(long long m);

// Independent check: simulate the point blow-ups resolving
// {x^2 = y^m} ∪ {x = 0}, tracking self-intersections and y-pullback
// multiplicities. Shares no data with fiber_chain.
ChainDescriptor local_blowup_oracle(long long m);

// Self-intersection of C_1^m in X_e^m; requires 2e = sum of m'.
long long c1m_self_int(long long e, const std::vector<long long>& ms);

// rank of Pic(X_e^m) = 2 + total blow-ups.
long long picard_rank(const std::vector<long long>& ms);

// Class bookkeeping on X_e^m over the basis {C_0^m, fiber, chain
// components 1..N per modified point}: C_1^m = C_0^m + e*fiber - sum of
// corrections. Returns the correction coefficient for components 1..N.
std::vector<long long> c1m_chain_corrections(long long m);
// Same numbers recomputed by the blow-up simulation (class tracking).
std::vector<long long> oracle_c1m_chain_corrections(long long m);

struct ModifiedPoint {
    std::string label; // younger neighbour vertex or arrow id
    long long m = 1;
    ChainDescriptor chain;
};

struct ModifiedRuledSurface {
    long long e = 0; // so C_0^2 = -e
    std::vector<std::string> marked_points; // older neighbours
    std::vector<ModifiedPoint> modified_points;
    long long c0m = 0;
    long long c1m = 0;
    long long picard = 2;
};

ModifiedRuledSurface make_modified_surface(
    long long e, std::vector<std::string> marked,
    const std::vector<std::pair<std::string, long long>>& younger);

// Non-compact disc bundle over a rational curve, modified over the points
// shared with older neighbours: per neighbour a chain of t compact curves
// with self-intersections [-2 x (t-1), -1] plus one non-compact component.
struct DiscModification {
    std::string older_label;
    long long count = 0;
    std::vector<long long> chain_self_ints;
};

struct DiscBundleModel {
    long long zero_section_self_int = 0;
    std::vector<DiscModification> modifications;
};

DiscBundleModel make_disc_bundle(
    const std::vector<std::pair<std::string, long long>>& older);

} // namespace zres
