#ifndef EPLS_EPRIM_HPP
#define EPLS_EPRIM_HPP

// The primitivity hierarchy (3/2-transitive, primitive, extremely
// primitive), the arithmetic classification predicate for the soluble
// affine family, and the survey cross-checking the two against each other.

#include <atomic>
#include <thread>

#include "families.hpp"
#include "perm.hpp"

namespace epls {

// Transitive with all point-stabilizer orbits on the remaining points of
// equal size > 1.
inline bool is_three_halves_transitive(const PermGroup& g) {
    if (!g.is_transitive()) throw precondition_error("three-halves: group is not transitive");
    if (g.degree() == 1) return false;
    auto sizes = rank_and_subdegrees(g); // sorted; includes one trivial orbit {0}
    // Drop the stabilized point's own orbit, then require equal sizes > 1.
    sizes.erase(sizes.begin());
    for (std::uint64_t s : sizes)
        if (s != sizes.back() || s == 1) return false;
    return !sizes.empty();
}

// Verdict for the extreme-primitivity test, with the failing stage and a
// witness where one exists.
struct EpVerdict {
    bool extremely_primitive = false;
    std::string stage;                // "ok", "intransitive", "regular", "imprimitive", "stabilizer_orbit"
    std::vector<Point> witness_block; // global points (block of G, or of G_0 inside an orbit)
    Point witness_orbit_rep = 0;      // least point of the failing stabilizer orbit

    explicit operator bool() const { return extremely_primitive; }
};

// Non-regular primitive with the point stabilizer primitive on each of its
// nontrivial orbits. Total: intransitive/regular/imprimitive inputs yield
// false with a reason rather than an error.
inline EpVerdict is_extremely_primitive(const PermGroup& g) {
    EpVerdict v;
    if (!g.is_transitive()) {
        v.stage = "intransitive";
        return v;
    }
    if (g.order() == g.degree()) {
        v.stage = "regular";
        return v;
    }
    PrimitivityResult pr = primitivity(g);
    if (!pr.primitive) {
        v.stage = "imprimitive";
        v.witness_block = std::move(pr.block);
        return v;
    }
    PermGroup stab = point_stabilizer(g, 0);
    for (const auto& orb : stab.orbits()) {
        if (orb.size() < 2) continue;
        InducedAction ia = induced_action(stab, orb);
        PrimitivityResult opr = primitivity(ia.action);
        if (!opr.primitive) {
            v.stage = "stabilizer_orbit";
            v.witness_orbit_rep = ia.domain[0];
            for (Point local : opr.block) v.witness_block.push_back(ia.domain[local]);
            return v;
        }
    }
    v.extremely_primitive = true;
    v.stage = "ok";
    return v;
}

// The arithmetic classification of the extremely primitive members of the
// affine family: t a primitive prime divisor of p^d - 1, and e = 1 or
// p^d - 1 = t(p^(d/e) - 1). No group is constructed.
inline bool classification_predicate(const AffineParams& a) {
    check_affine_params(a);
    if (!nt::is_primitive_prime_divisor(a.t, a.p, a.d)) return false;
    if (a.e == 1) return true;
    std::uint64_t q = nt::checked_pow(a.p, a.d);
    __uint128_t rhs = static_cast<__uint128_t>(a.t) * (nt::checked_pow(a.p, a.d / a.e) - 1);
    return rhs == q - 1;
}

// The equal-orbit-size condition: e = 1 or p^d - 1 divides t(p^(d/e) - 1).
inline bool orbit_condition_predicate(const AffineParams& a) {
    check_affine_params(a);
    if (a.e == 1) return true;
    std::uint64_t q = nt::checked_pow(a.p, a.d);
    __uint128_t rhs = static_cast<__uint128_t>(a.t) * (nt::checked_pow(a.p, a.d / a.e) - 1);
    return rhs % (q - 1) == 0;
}

namespace detail {

inline std::vector<std::vector<Point>> canonical_orbits(const PermGroup& g) {
    auto orbs = g.orbits();
    for (auto& o : orbs) std::sort(o.begin(), o.end());
    std::sort(orbs.begin(), orbs.end());
    return orbs;
}

} // namespace detail

struct SurveyRecord {
    AffineParams params;
    std::uint64_t order = 0;
    bool ep_direct = false;
    bool ep_formula = false;
    bool agree = false;
    std::vector<std::uint64_t> subdegrees;
    bool orbit_conditions_agree = false; // the three equal-orbit conditions match pairwise
};

struct SurveyReport {
    std::vector<SurveyRecord> records;
    std::uint64_t disagreements = 0;
    std::uint64_t orbit_condition_failures = 0;
};

// For every prime power p^d <= max_points, every divisor t of p^d - 1 and
// every divisor e of d (composite e included, precisely to exercise the
// impossibility remark): build the group, test extreme primitivity
// directly, evaluate the arithmetic predicate, and record any disagreement.
// Also cross-checks the three equivalent forms of the equal-orbit-size
// condition on each instance. Records are in (p, d, t, e) lexicographic
// order regardless of the job count.
inline SurveyReport survey(std::uint64_t max_points, unsigned jobs = 1) {
    struct Task {
        AffineParams params;
        const FieldCtx* field;
    };
    std::vector<std::unique_ptr<FieldCtx>> fields;
    std::vector<Task> tasks;
    for (std::uint64_t p = 2; p <= max_points; ++p) {
        if (!nt::is_prime(p)) continue;
        std::uint64_t q = p;
        for (std::uint32_t d = 1; q <= max_points; ++d) {
            fields.push_back(std::make_unique<FieldCtx>(p, d));
            const FieldCtx* field = fields.back().get();
            for (std::uint64_t t : nt::divisors(q - 1))
                for (std::uint64_t e : nt::divisors(d))
                    tasks.push_back(Task{AffineParams{p, d, t, static_cast<std::uint32_t>(e)}, field});
            if (q > max_points / p) break;
            q *= p;
        }
    }

    SurveyReport report;
    report.records.resize(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            const Task& task = tasks[i];
            AffineGroup ag = build_affine_group(task.params, task.field);
            SurveyRecord rec;
            rec.params = task.params;
            rec.order = ag.group.order();
            rec.ep_direct = is_extremely_primitive(ag.group).extremely_primitive;
            rec.ep_formula = classification_predicate(task.params);
            rec.agree = rec.ep_direct == rec.ep_formula;
            rec.subdegrees = rank_and_subdegrees(ag.group);

            PermGroup torus(ag.group.degree(), {ag.mult});
            PermGroup h(ag.group.degree(), {ag.mult, ag.frob});
            bool same_orbits = detail::canonical_orbits(torus) == detail::canonical_orbits(h);
            bool equal_sizes = true;
            std::uint64_t size0 = 0;
            for (const auto& orb : h.orbits()) {
                if (orb.size() == 1 && orb[0] == 0) continue; // the fixed zero vector
                if (size0 == 0) size0 = orb.size();
                if (orb.size() != size0) equal_sizes = false;
            }
            bool arith = orbit_condition_predicate(task.params);
            rec.orbit_conditions_agree = (same_orbits == equal_sizes) && (equal_sizes == arith);
            report.records[i] = std::move(rec);
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (const SurveyRecord& r : report.records) {
        if (!r.agree) ++report.disagreements;
        if (!r.orbit_conditions_agree) ++report.orbit_condition_failures;
    }
    return report;
}

} // namespace epls

#endif
