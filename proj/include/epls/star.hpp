#ifndef EPLS_STAR_HPP
#define EPLS_STAR_HPP

// Property (*), the linear space LS(G) built from the fixed-point sets of
// two-point stabilizers, transversality of a (space, group) pair, the
// line-intersection trichotomy, and the line-stabilizer structure reports.

#include <map>

#include "eprim.hpp"
#include "linspace.hpp"
#include "perm.hpp"

namespace epls {

struct StarVerdict {
    bool holds = false;
    // A violating triple (u, v, w) with G_uv <= G_w but G_uw not <= G_v.
    std::optional<std::array<Point, 3>> witness;

    explicit operator bool() const { return holds; }
};

// Property (*): for all u != w, G_uv <= G_w implies G_uw <= G_v.
// Transitivity lets us fix u = 0 and run v over stabilizer-orbit
// representatives; w then only ranges over the fixed points of G_uv, since
// the hypothesis fails for every other w.
inline StarVerdict has_property_star(const PermGroup& g) {
    if (!g.is_transitive()) throw precondition_error("property (*): group is not transitive");
    PermGroup stab0 = point_stabilizer(g, 0);
    for (const auto& orb : stab0.orbits()) {
        Point v = *std::min_element(orb.begin(), orb.end());
        if (v == 0) continue; // u = v is immediate
        PermGroup guv = pointwise_stabilizer(g, {0, v});
        for (Point w : fixed_points(guv)) {
            if (w == 0 || w == v) continue;
            PermGroup guw = pointwise_stabilizer(g, {0, w});
            for (const Permutation& x : guw.generators()) {
                if (x(v) != v) return StarVerdict{false, std::array<Point, 3>{0, v, w}};
            }
        }
    }
    return StarVerdict{true, std::nullopt};
}

// The line through u and v: all points fixed by G_uv.
inline std::vector<Point> lambda_line(const PermGroup& g, Point u, Point v) {
    if (u == v) throw error("lambda_line: points must be distinct");
    return fixed_points(pointwise_stabilizer(g, {u, v}));
}

// LS(G): points of G's domain, lines the distinct Lambda_uv. Requires
// Property (*), which makes the result a linear space preserved by G; the
// line set is generated as the G-set-orbits of the Lambda lines through 0.
inline LinearSpace build_ls(const PermGroup& g, std::uint64_t max_incidences = 100'000'000) {
    if (g.degree() < 2) throw error("build_ls: need at least 2 points");
    StarVerdict star = has_property_star(g);
    if (!star.holds) throw precondition_error("build_ls: group does not have Property (*)");
    std::unordered_set<std::vector<Point>, detail::PointVecHash> seen;
    std::vector<std::vector<Point>> lines;
    std::uint64_t incidences = 0;
    PermGroup stab0 = point_stabilizer(g, 0);
    for (const auto& orb : stab0.orbits()) {
        Point v = *std::min_element(orb.begin(), orb.end());
        if (v == 0) continue;
        std::vector<Point> line = lambda_line(g, 0, v);
        if (seen.count(line)) continue;
        std::uint64_t budget = incidences >= max_incidences
                                   ? 0
                                   : (max_incidences - incidences) / line.size() + 1;
        SetOrbit so = set_orbit(g, line, budget, false);
        for (auto& member : so.members) {
            if (seen.insert(member).second) {
                incidences += member.size();
                lines.push_back(std::move(member));
            }
        }
        if (incidences > max_incidences)
            throw too_large_error("build_ls: incidence bound exceeded; instance too large");
    }
    return validate(g.degree(), std::move(lines));
}

namespace detail {

// Orbit identifiers of a stabilizer's orbit partition.
struct OrbitIndex {
    std::vector<std::uint32_t> id; // point -> orbit number
    std::vector<std::vector<Point>> orbits;
};

inline OrbitIndex orbit_index(const PermGroup& g) {
    OrbitIndex oi;
    oi.orbits = g.orbits();
    oi.id.assign(g.degree(), 0);
    for (std::uint32_t k = 0; k < oi.orbits.size(); ++k)
        for (Point x : oi.orbits[k]) oi.id[x] = k;
    return oi;
}

struct PairStatsCache {
    std::mutex m;
    std::map<Point, OrbitIndex> stabilizer_orbits;
};

} // namespace detail

// A linear space together with a group of automorphisms acting on its
// points; the carrier for all transversality and refinement questions. The
// stabilizer-orbit tables behind the flag scans are memoized; the pair
// itself stays an immutable value and the memo is safe to share.
struct GroupSpacePair {
    LinearSpace space;
    PermGroup group;
    std::shared_ptr<detail::PairStatsCache> stats = std::make_shared<detail::PairStatsCache>();

    detail::OrbitIndex stabilizer_orbits(Point u) const {
        std::lock_guard<std::mutex> lock(stats->m);
        auto it = stats->stabilizer_orbits.find(u);
        if (it == stats->stabilizer_orbits.end())
            it = stats->stabilizer_orbits.emplace(u, detail::orbit_index(point_stabilizer(group, u))).first;
        return it->second;
    }
};

inline GroupSpacePair make_group_space_pair(LinearSpace space, PermGroup group) {
    if (space.v != group.degree()) throw degree_mismatch_error("pair: space/group degree mismatch");
    if (!group_preserves(space, group)) throw precondition_error("pair: group does not preserve the space");
    return GroupSpacePair{std::move(space), std::move(group)};
}

struct TransverseVerdict {
    bool transverse = false;
    // Witness flag and orbit with |line meet orbit| >= 2.
    Point point = 0;
    std::vector<Point> orbit;
    std::vector<Point> line;
    std::uint64_t intersection = 0;

    explicit operator bool() const { return transverse; }
};

// (S, G) is transverse iff every line meets every point-stabilizer orbit in
// at most one point, over all flags (u, l). When G is transitive on points
// it suffices to let u run over one point per G-orbit: the condition at
// (u^g, l^g, Delta^g) is the condition at (u, l, Delta).
inline TransverseVerdict is_transverse(const GroupSpacePair& p) {
    std::vector<bool> seen(p.group.degree(), false);
    for (Point u = 0; u < p.group.degree(); ++u) {
        if (seen[u]) continue;
        for (Point x : p.group.orbit(u)) seen[x] = true;
        detail::OrbitIndex oi = p.stabilizer_orbits(u);
        std::vector<std::uint64_t> count(oi.orbits.size(), 0);
        for (const auto& line : p.space.lines) {
            if (!std::binary_search(line.begin(), line.end(), u)) continue;
            for (Point x : line) ++count[oi.id[x]];
            for (Point x : line) {
                std::uint32_t k = oi.id[x];
                if (count[k] >= 2) {
                    TransverseVerdict v;
                    v.point = u;
                    v.orbit = oi.orbits[k];
                    std::sort(v.orbit.begin(), v.orbit.end());
                    v.line = line;
                    v.intersection = count[k];
                    return v;
                }
            }
            for (Point x : line) count[oi.id[x]] = 0;
        }
    }
    TransverseVerdict v;
    v.transverse = true;
    return v;
}

struct LineBlockVerdict {
    bool holds = false;
    Point point = 0;
    std::vector<Point> orbit;
    std::vector<Point> line;
    std::uint64_t intersection = 0;

    explicit operator bool() const { return holds; }
};

// For extremely primitive G: |l meet Delta| lies in {0, 1, |Delta|} for
// every flag (u, l) and every orbit Delta of G_u. Refuses groups that are
// not extremely primitive, where the trichotomy is not asserted.
inline LineBlockVerdict check_line_block_law(const GroupSpacePair& p) {
    if (!is_extremely_primitive(p.group).extremely_primitive)
        throw precondition_error("line-block law: group is not extremely primitive");
    Point u = 0; // extremely primitive groups are transitive; flags reduce to u = 0
    detail::OrbitIndex oi = p.stabilizer_orbits(u);
    std::vector<std::uint64_t> count(oi.orbits.size(), 0);
    for (const auto& line : p.space.lines) {
        if (!std::binary_search(line.begin(), line.end(), u)) continue;
        for (Point x : line) ++count[oi.id[x]];
        for (std::uint32_t k = 0; k < count.size(); ++k) {
            std::uint64_t c = count[k];
            if (c != 0 && c != 1 && c != oi.orbits[k].size()) {
                LineBlockVerdict v;
                v.point = u;
                v.orbit = oi.orbits[k];
                std::sort(v.orbit.begin(), v.orbit.end());
                v.line = line;
                v.intersection = c;
                return v;
            }
        }
        for (Point x : line) count[oi.id[x]] = 0;
    }
    LineBlockVerdict v;
    v.holds = true;
    return v;
}

// Structure of the stabilizer of the line l = Lambda_uv: the pointwise
// stabilizer equals G_uv, the setwise stabilizer equals N_G(G_uv), and the
// action induced on l has order |N_G(G_uv)| / |G_uv|; when the pair is
// transverse that induced action is semiregular.
struct LineStabReport {
    std::vector<Point> line;
    std::uint64_t pair_stab_order = 0;   // |G_uv|
    std::uint64_t pointwise_order = 0;   // |G_[l]|
    std::uint64_t setwise_order = 0;     // |G_l|
    std::uint64_t normalizer_order = 0;  // |N_G(G_uv)|
    std::uint64_t induced_order = 0;     // |G_l^l|
    std::uint64_t kernel_order = 0;      // |G_l| / |G_l^l|
    std::uint64_t line_orbit_size = 0;   // |l^G|
    bool pointwise_is_pair_stab = false; // G_[l] == G_uv
    bool setwise_is_normalizer = false;  // G_l == N_G(G_uv)
    bool quotient_order_matches = false; // |G_l^l| == |N|/|G_uv|
    bool induced_semiregular = false;
    bool induced_regular = false;
};

inline LineStabReport line_stabilizer_report(const PermGroup& g, Point u, Point v,
                                             std::uint64_t normalizer_bound = 10'000'000) {
    if (!has_property_star(g).holds)
        throw precondition_error("line_stabilizer_report: group does not have Property (*)");
    LineStabReport rep;
    PermGroup guv = pointwise_stabilizer(g, {u, v});
    rep.line = fixed_points(guv);
    rep.pair_stab_order = guv.order();

    PermGroup pointwise = pointwise_stabilizer(g, rep.line);
    rep.pointwise_order = pointwise.order();
    rep.pointwise_is_pair_stab = group_equal(pointwise, guv);

    SetStabilizer sws = setwise_stabilizer_via_orbit(g, rep.line);
    rep.setwise_order = sws.stabilizer.order();
    rep.line_orbit_size = sws.orbit_size;

    PermGroup norm = normalizer(g, guv, normalizer_bound);
    rep.normalizer_order = norm.order();
    rep.setwise_is_normalizer = group_equal(sws.stabilizer, norm);

    InducedAction ia = induced_action(sws.stabilizer, rep.line);
    rep.induced_order = ia.action.order();
    rep.kernel_order = ia.kernel_order;
    rep.quotient_order_matches =
        rep.pair_stab_order != 0 && rep.induced_order == rep.normalizer_order / rep.pair_stab_order;
    rep.induced_semiregular = is_semiregular(ia.action);
    rep.induced_regular = rep.induced_semiregular && ia.action.is_transitive();
    return rep;
}

// A single set-orbit covers the whole line set.
inline bool is_line_transitive(const GroupSpacePair& p, std::uint64_t max_sets = 100'000'000) {
    if (p.space.lines.empty()) throw error("is_line_transitive: space has no lines");
    SetOrbit so = set_orbit(p.group, p.space.lines[0], max_sets, false);
    return so.members.size() == p.space.lines.size();
}

} // namespace epls

#endif
