#ifndef EPLS_REFINE_HPP
#define EPLS_REFINE_HPP

// Refinements of line-transitive linear spaces: close a linear space on one
// line under the group action to refine the whole space, and extract the
// inner space back out of any equivariant refinement (which proves the
// construction reaches all of them).
//
// Relabeling contract: an inner space on a line l lives on {0..|l|-1} via
// the sorted order of l's points (local i <-> sorted l[i]). This is the
// same bijection induced_action uses, and both directions below convert
// through it.

#include <map>

#include "star.hpp"

namespace epls {

struct RefinementResult {
    LinearSpace refined;
    bool line_transitive = false;      // the group moves one inner line onto all refined lines
    std::uint64_t line_orbit_count = 0;
    std::map<std::size_t, std::uint64_t> size_histogram; // line size -> count
};

// For a regular inner space, the number of point-line incidences the
// refined space must have; lets callers reject out-of-scale instances
// before any group computation starts.
inline std::optional<std::uint64_t> predicted_refined_incidences(Point v, const LinearSpace& inner) {
    if (!is_regular(inner) || inner.lines.empty()) return std::nullopt;
    std::uint64_t k = inner.lines[0].size();
    if (k < 2) return std::nullopt;
    __uint128_t b = static_cast<__uint128_t>(v) * (v - 1) / (k * (k - 1));
    __uint128_t inc = b * k;
    if (inc > 0xffffffffffffffffull) return std::nullopt;
    return static_cast<std::uint64_t>(inc);
}

// Construction of the refinement R: lines are the G-images of the inner
// lines, transported from local labels onto the chosen line l. Requires a
// line-transitive pair, l a line of the space, and the action induced on l
// to preserve the inner space. The output is validated, checked to refine
// the parent, and checked to admit G.
inline RefinementResult construct_refinement(const GroupSpacePair& p, const std::vector<Point>& ell,
                                             const LinearSpace& inner,
                                             std::uint64_t max_incidences = 100'000'000) {
    std::vector<Point> line = ell;
    std::sort(line.begin(), line.end());
    if (!p.space.has_line(line)) throw precondition_error("refine: ell is not a line of the space");
    if (!is_line_transitive(p)) throw precondition_error("refine: group is not transitive on lines");
    if (inner.v != line.size()) throw precondition_error("refine: inner space is not on ell's points");

    SetStabilizer sws = setwise_stabilizer_via_orbit(p.group, line);
    InducedAction ia = induced_action(sws.stabilizer, line);
    if (!group_preserves(inner, ia.action))
        throw precondition_error("refine: induced line action does not preserve the inner space");

    if (auto predicted = predicted_refined_incidences(p.space.v, inner); predicted && *predicted > max_incidences)
        throw too_large_error("refine: predicted refined space exceeds the incidence bound; "
                              "stretch-scale instance rejected");

    std::unordered_set<std::vector<Point>, detail::PointVecHash> seen;
    std::vector<std::vector<Point>> lines;
    std::uint64_t incidences = 0;
    std::uint64_t orbit_count = 0;
    for (const auto& local : inner.lines) {
        std::vector<Point> global;
        global.reserve(local.size());
        for (Point i : local) global.push_back(line[i]);
        std::sort(global.begin(), global.end());
        if (seen.count(global)) continue;
        ++orbit_count;
        std::uint64_t budget = incidences >= max_incidences
                                   ? 0
                                   : (max_incidences - incidences) / global.size() + 1;
        SetOrbit so = set_orbit(p.group, global, budget, false);
        for (auto& member : so.members) {
            if (seen.insert(member).second) {
                incidences += member.size();
                lines.push_back(std::move(member));
            }
        }
        if (incidences > max_incidences)
            throw too_large_error("refine: incidence bound exceeded; stretch-scale instance rejected");
    }

    RefinementResult res;
    res.refined = validate(p.space.v, std::move(lines));
    res.line_orbit_count = orbit_count;
    res.line_transitive = orbit_count == 1;
    for (const auto& l : res.refined.lines) ++res.size_histogram[l.size()];
    if (!is_refinement(res.refined, p.space)) throw error("refine: output does not refine the input space");
    if (!group_preserves(res.refined, p.group)) throw error("refine: output is not preserved by the group");
    return res;
}

// The inner space of an equivariant refinement: the lines of R contained in
// l, relabeled onto {0..|l|-1}. Valid and invariant under the induced line
// action whenever the hypotheses hold.
inline LinearSpace extract_inner_space(const LinearSpace& r, const GroupSpacePair& p,
                                       const std::vector<Point>& ell) {
    std::vector<Point> line = ell;
    std::sort(line.begin(), line.end());
    if (!p.space.has_line(line)) throw precondition_error("extract: ell is not a line of the space");
    if (!is_line_transitive(p)) throw precondition_error("extract: group is not transitive on lines");
    if (r.v != p.space.v) throw precondition_error("extract: refinement has a different point count");
    if (!is_refinement(r, p.space)) throw precondition_error("extract: R is not a refinement of the space");
    if (!group_preserves(r, p.group)) throw precondition_error("extract: R is not preserved by the group");

    std::vector<std::int32_t> local(r.v, -1);
    for (std::size_t i = 0; i < line.size(); ++i) local[line[i]] = static_cast<std::int32_t>(i);
    std::vector<std::vector<Point>> inner_lines;
    for (const auto& rl : r.lines) {
        bool inside = true;
        for (Point x : rl)
            if (local[x] < 0) {
                inside = false;
                break;
            }
        if (!inside) continue;
        std::vector<Point> loc;
        loc.reserve(rl.size());
        for (Point x : rl) loc.push_back(static_cast<Point>(local[x]));
        std::sort(loc.begin(), loc.end());
        inner_lines.push_back(std::move(loc));
    }
    return validate(static_cast<Point>(line.size()), std::move(inner_lines));
}

// Completeness of the construction, mechanized: rebuilding from the
// extracted inner space returns the refinement unchanged.
inline bool roundtrip_check(const LinearSpace& r, const GroupSpacePair& p,
                            const std::vector<Point>& ell,
                            std::uint64_t max_incidences = 100'000'000) {
    LinearSpace inner = extract_inner_space(r, p, ell);
    RefinementResult rebuilt = construct_refinement(p, ell, inner, max_incidences);
    return rebuilt.refined == r;
}

} // namespace epls

#endif
