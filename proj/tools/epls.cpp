// epls: construct the groups and linear spaces, run the predicates, survey
// the affine family, build refinements, and check the completeness
// round-trip, from the command line.
//
// Exit codes: 0 = true/success, 1 = false/disagreement/FAIL, 2 = error.

#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "epls/epls.hpp"

using nlohmann::json;
using namespace epls;

namespace {

std::uint64_t memory_to_incidences(std::uint64_t max_memory_mb) {
    // A stored incidence costs roughly 16 bytes across the canonical line
    // sets and their hash index.
    return max_memory_mb * 1'000'000ull / 16;
}

// ---------------------------------------------------------------------------
// construct
// ---------------------------------------------------------------------------

struct ConstructOpts {
    std::string family;
    std::uint64_t p = 2;
    std::uint32_t d = 1;
    std::uint64_t t = 1;
    std::uint32_t e = 1;
    std::uint32_t q = 17;
    std::uint32_t mod = 13;
    std::vector<std::uint32_t> set;
    std::uint32_t m = 1;
    std::uint32_t n = 1;
    std::string out_group, out_space;
};

int run_construct(const ConstructOpts& o) {
    std::optional<PermGroup> group;
    std::optional<LinearSpace> space;
    std::ostringstream block;
    block << "family: " << o.family << "\n";
    if (o.family == "affine") {
        AffineGroup ag = build_affine_group({o.p, o.d, o.t, o.e});
        block << "p: " << o.p << "\nd: " << o.d << "\nt: " << o.t << "\ne: " << o.e << "\n";
        block << "degree: " << ag.group.degree() << "\norder: " << ag.group.order() << "\n";
        group = std::move(ag.group);
    } else if (o.family == "gscript") {
        PermGroup g = build_gscript(o.p, o.d);
        block << "p: " << o.p << "\nd: " << o.d << "\n";
        block << "degree: " << g.degree() << "\norder: " << g.order() << "\n";
        block << "stabilizer order: " << point_stabilizer(g, 0).order() << "\n";
        group = std::move(g);
    } else if (o.family == "psl2") {
        Psl2Coset psl = build_psl2_dihedral_coset(o.q);
        block << "q: " << o.q << "\ndegree: " << psl.group.degree() << "\norder: " << psl.group.order() << "\n";
        block << "stabilizer order: " << point_stabilizer(psl.group, 0).order() << "\n";
        group = std::move(psl.group);
    } else if (o.family == "diffset") {
        DiffSetSpace ds = build_difference_set_space(o.mod, o.set);
        SpaceParams sp = parameters(ds.space);
        block << "mod: " << o.mod << "\nv: " << sp.v << "\nb: " << sp.b;
        if (sp.k) block << "\nk: " << *sp.k;
        if (sp.r) block << "\nr: " << *sp.r;
        block << "\ngroup order: " << ds.group.order() << "\nmultipliers:";
        for (std::uint32_t mu : ds.multipliers) block << " " << mu;
        block << "\n";
        group = std::move(ds.group);
        space = std::move(ds.space);
    } else if (o.family == "ag") {
        LinearSpace s = build_affine_geometry_lines(o.p, o.m, o.n);
        SpaceParams sp = parameters(s);
        block << "q: " << nt::checked_pow(o.p, o.m) << "\nn: " << o.n << "\nv: " << sp.v << "\nb: " << sp.b;
        if (sp.k) block << "\nk: " << *sp.k;
        if (sp.r) block << "\nr: " << *sp.r;
        block << "\nnontrivial: " << (sp.nontrivial ? "yes" : "no") << "\n";
        space = std::move(s);
    } else {
        throw error("unknown family: " + o.family);
    }
    std::cout << block.str();
    if (!o.out_group.empty()) {
        if (!group) throw error("family '" + o.family + "' does not produce a group");
        save_group(o.out_group, *group);
        std::cout << "group file: " << o.out_group << "\n";
    }
    if (!o.out_space.empty()) {
        if (!space) throw error("family '" + o.family + "' does not produce a space");
        save_space(o.out_space, *space);
        std::cout << "space file: " << o.out_space << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// test
// ---------------------------------------------------------------------------

struct TestOpts {
    std::string predicate;
    std::string group_file, space_file;
    bool as_json = false;
};

int run_test(const TestOpts& o) {
    PermGroup g = load_group(o.group_file);
    std::string instance = o.group_file;
    bool verdict = false;
    json witness;

    if (o.predicate == "ep") {
        EpVerdict v = is_extremely_primitive(g);
        verdict = v.extremely_primitive;
        witness = json{{"stage", v.stage}};
        if (!v.witness_block.empty()) witness["witness_block"] = v.witness_block;
        if (v.stage == "stabilizer_orbit") witness["witness_orbit_rep"] = v.witness_orbit_rep;
    } else if (o.predicate == "star") {
        StarVerdict v = has_property_star(g);
        verdict = v.holds;
        if (v.witness) witness = json{{"u", (*v.witness)[0]}, {"v", (*v.witness)[1]}, {"w", (*v.witness)[2]}};
    } else if (o.predicate == "three-halves") {
        verdict = is_three_halves_transitive(g);
        witness = json{{"subdegrees", rank_and_subdegrees(g)}};
    } else if (o.predicate == "transverse" || o.predicate == "lineblocks") {
        if (o.space_file.empty()) throw error("predicate '" + o.predicate + "' needs --space");
        instance += "+" + o.space_file;
        GroupSpacePair pair = make_group_space_pair(load_space(o.space_file), std::move(g));
        if (o.predicate == "transverse") {
            TransverseVerdict v = is_transverse(pair);
            verdict = v.transverse;
            if (!v.transverse)
                witness = json{{"point", v.point},
                               {"orbit", v.orbit},
                               {"line", v.line},
                               {"intersection", v.intersection}};
        } else {
            LineBlockVerdict v = check_line_block_law(pair);
            verdict = v.holds;
            if (!v.holds)
                witness = json{{"point", v.point},
                               {"orbit", v.orbit},
                               {"line", v.line},
                               {"intersection", v.intersection}};
        }
    } else {
        throw error("unknown predicate: " + o.predicate);
    }

    if (o.as_json) {
        json rec{{"predicate", o.predicate}, {"instance", instance}, {"verdict", verdict}};
        rec["witness"] = witness.is_null() ? json(nullptr) : witness;
        std::cout << rec.dump() << "\n";
    } else {
        std::cout << "predicate: " << o.predicate << "\ninstance: " << instance << "\n"
                  << "verdict: " << (verdict ? "true" : "false") << "\n";
        if (!witness.is_null()) std::cout << "witness: " << witness.dump() << "\n";
    }
    return verdict ? 0 : 1;
}

// ---------------------------------------------------------------------------
// survey
// ---------------------------------------------------------------------------

struct SurveyOpts {
    std::uint64_t max_points = 1024;
    unsigned jobs = 1;
    bool force = false;
    std::string out;
};

json survey_record_json(const SurveyRecord& r) {
    return json{{"p", r.params.p},
                {"d", r.params.d},
                {"t", r.params.t},
                {"e", r.params.e},
                {"order", r.order},
                {"ep_direct", r.ep_direct},
                {"ep_formula", r.ep_formula},
                {"subdegrees", r.subdegrees},
                {"agree", r.agree},
                {"orbit_conditions_agree", r.orbit_conditions_agree}};
}

int run_survey(const SurveyOpts& o) {
    if (o.max_points > 4096 && !o.force)
        throw error("survey: max-points above the 4096 cap; pass --force to override");
    SurveyReport rep = survey(o.max_points, o.jobs);
    std::ostringstream lines;
    for (const SurveyRecord& r : rep.records) lines << survey_record_json(r).dump() << "\n";
    if (o.out.empty() || o.out == "-")
        std::cout << lines.str();
    else
        write_file(o.out, lines.str());
    std::cerr << "instances: " << rep.records.size() << ", disagreements: " << rep.disagreements
              << ", orbit-condition mismatches: " << rep.orbit_condition_failures << "\n";
    return rep.disagreements == 0 && rep.orbit_condition_failures == 0 ? 0 : 1;
}

// ---------------------------------------------------------------------------
// ls / refine / roundtrip
// ---------------------------------------------------------------------------

struct LsOpts {
    std::string group_file, out;
    bool stabilizers = false;
    std::uint32_t u = 0, v = 1;
    std::uint64_t max_memory_mb = 1600;
};

void print_space_params(const LinearSpace& s) {
    SpaceParams p = parameters(s);
    std::cout << "v: " << p.v << "\nb: " << p.b << "\n";
    if (p.k) std::cout << "k: " << *p.k << "\n";
    if (p.r) std::cout << "r: " << *p.r << "\n";
    std::cout << "regular: " << (p.regular ? "yes" : "no")
              << "\nnontrivial: " << (p.nontrivial ? "yes" : "no") << "\n";
}

int run_ls(const LsOpts& o) {
    PermGroup g = load_group(o.group_file);
    LinearSpace s = build_ls(g, memory_to_incidences(o.max_memory_mb));
    print_space_params(s);
    if (!o.out.empty()) {
        save_space(o.out, s);
        std::cout << "space file: " << o.out << "\n";
    }
    if (o.stabilizers) {
        LineStabReport r = line_stabilizer_report(g, o.u, o.v);
        std::cout << "line-stabilizer report (u=" << o.u << ", v=" << o.v << "):\n"
                  << "  line size: " << r.line.size() << "\n"
                  << "  |G_uv| = " << r.pair_stab_order << "\n"
                  << "  |G_[l]| = " << r.pointwise_order
                  << "  (equals G_uv: " << (r.pointwise_is_pair_stab ? "yes" : "no") << ")\n"
                  << "  |G_l| = " << r.setwise_order
                  << "  (equals N_G(G_uv): " << (r.setwise_is_normalizer ? "yes" : "no") << ")\n"
                  << "  |N_G(G_uv)| = " << r.normalizer_order << "\n"
                  << "  |G_l^l| = " << r.induced_order << "  kernel: " << r.kernel_order
                  << "  (quotient order: " << (r.quotient_order_matches ? "yes" : "no") << ")\n"
                  << "  induced action: semiregular " << (r.induced_semiregular ? "yes" : "no")
                  << ", regular " << (r.induced_regular ? "yes" : "no") << "\n"
                  << "  line orbit size: " << r.line_orbit_size << "\n";
    }
    return 0;
}

struct RefineOpts {
    std::string group_file, space_file, inner_file, out;
    std::uint64_t line_index = 0;
    std::uint64_t max_memory_mb = 1600;
};

int run_refine(const RefineOpts& o) {
    GroupSpacePair pair = make_group_space_pair(load_space(o.space_file), load_group(o.group_file));
    if (o.line_index >= pair.space.lines.size()) throw error("refine: line index out of range");
    LinearSpace inner = load_space(o.inner_file);
    RefinementResult r = construct_refinement(pair, pair.space.lines[o.line_index], inner,
                                              memory_to_incidences(o.max_memory_mb));
    print_space_params(r.refined);
    std::cout << "line sizes:";
    for (auto [size, count] : r.size_histogram) std::cout << " " << size << "x" << count;
    std::cout << "\nline-transitive: " << (r.line_transitive ? "yes" : "no")
              << " (line orbits: " << r.line_orbit_count << ")\n";
    if (!o.out.empty()) {
        save_space(o.out, r.refined);
        std::cout << "space file: " << o.out << "\n";
    }
    return 0;
}

struct RoundtripOpts {
    std::string group_file, space_file, refined_file;
    std::uint64_t line_index = 0;
    std::uint64_t max_memory_mb = 1600;
};

int run_roundtrip(const RoundtripOpts& o) {
    GroupSpacePair pair = make_group_space_pair(load_space(o.space_file), load_group(o.group_file));
    if (o.line_index >= pair.space.lines.size()) throw error("roundtrip: line index out of range");
    bool ok = roundtrip_check(load_space(o.refined_file), pair, pair.space.lines[o.line_index],
                              memory_to_incidences(o.max_memory_mb));
    std::cout << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// search: a search harness around the open uniqueness question for
// line-transitive non-transverse spaces. Explores (a) single line-orbit
// spaces seeded by unions of stabilizer orbits in the e = 1 affine groups,
// and (b) perfect difference sets by backtracking. A heuristic harness, not
// a decision procedure.
// ---------------------------------------------------------------------------

struct SearchOpts {
    std::uint64_t p = 0;
    std::uint32_t d = 1;
    std::uint64_t t = 1;
    std::uint32_t max_union = 2;
    std::uint32_t diffset_scan = 0;
};

int run_search(const SearchOpts& o) {
    std::uint64_t found = 0;
    if (o.diffset_scan) {
        std::uint32_t m = o.diffset_scan;
        if (m > 200) throw error("search: difference-set scan bounded to m <= 200");
        // Perfect difference sets need k(k-1) = m - 1.
        std::uint32_t k = 0;
        for (std::uint32_t c = 2; c * (c - 1) <= m - 1; ++c)
            if (c * (c - 1) == m - 1) k = c;
        if (k == 0) {
            std::cerr << "no k with k(k-1) = " << m - 1 << "; nothing to scan\n";
            return 0;
        }
        // Backtracking over 0 = d_1 < 1 = d_2 < d_3 < ... with all pairwise
        // differences distinct mod m.
        std::vector<std::uint32_t> ds{0, 1};
        std::vector<bool> used(m, false);
        used[1] = true;
        used[m - 1] = true;
        auto emit = [&] {
            DiffSetSpace s = build_difference_set_space(m, ds);
            GroupSpacePair pair = make_group_space_pair(s.space, s.group);
            json rec{{"kind", "diffset"},
                     {"mod", m},
                     {"set", ds},
                     {"group_order", s.group.order()},
                     {"line_transitive", is_line_transitive(pair)},
                     {"transverse", is_transverse(pair).transverse},
                     {"extremely_primitive", is_extremely_primitive(s.group).extremely_primitive}};
            std::cout << rec.dump() << "\n";
            ++found;
        };
        std::function<void(std::uint32_t)> grow = [&](std::uint32_t next) {
            if (ds.size() == k) {
                emit();
                return;
            }
            for (std::uint32_t c = next; c < m; ++c) {
                std::vector<std::uint32_t> fresh;
                bool ok = true;
                for (std::uint32_t a : ds) {
                    std::uint32_t d1 = (c + m - a) % m, d2 = (a + m - c) % m;
                    if (used[d1] || used[d2] || d1 == d2) {
                        ok = false;
                        break;
                    }
                    fresh.push_back(d1);
                    fresh.push_back(d2);
                }
                if (ok) {
                    // Two new differences may coincide with each other.
                    std::sort(fresh.begin(), fresh.end());
                    ok = std::adjacent_find(fresh.begin(), fresh.end()) == fresh.end();
                }
                if (!ok) continue;
                for (std::uint32_t df : fresh) used[df] = true;
                ds.push_back(c);
                grow(c + 1);
                ds.pop_back();
                for (std::uint32_t df : fresh) used[df] = false;
            }
        };
        grow(2);
        std::cerr << "difference-set scan mod " << m << ": " << found << " space(s) found\n";
        return 0;
    }

    if (o.p == 0) throw error("search: need --p --d --t (orbit-union mode) or --diffset-scan M");
    AffineParams params{o.p, o.d, o.t, 1};
    if (!classification_predicate(params))
        throw error("search: (p, d, t) with e = 1 must satisfy the classification predicate");
    std::uint64_t v = nt::checked_pow(o.p, o.d);
    if (v > 4096) throw error("search: p^d above the 4096-point desk bound");
    AffineGroup ag = build_affine_group(params);
    PermGroup stab = point_stabilizer(ag.group, 0);
    std::vector<std::vector<Point>> orbits;
    for (auto& orb : stab.orbits())
        if (orb.size() >= 2) {
            std::sort(orb.begin(), orb.end());
            orbits.push_back(orb);
        }
    std::uint64_t candidates = 0;
    // Unions of at most max_union stabilizer orbits, with or without the
    // fixed point 0; each seed spans a single line orbit.
    std::vector<std::uint32_t> pick;
    std::function<void(std::uint32_t)> explore = [&](std::uint32_t from) {
        if (!pick.empty()) {
            for (bool include0 : {true, false}) {
                std::vector<Point> seed;
                if (include0) seed.push_back(0);
                for (std::uint32_t i : pick) seed.insert(seed.end(), orbits[i].begin(), orbits[i].end());
                std::sort(seed.begin(), seed.end());
                if (seed.size() < 3) continue;
                ++candidates;
                std::uint64_t k = seed.size();
                // A single-orbit space needs b * k(k-1) = v(v-1).
                SetOrbit so = set_orbit(ag.group, seed, v * v, false);
                if (static_cast<std::uint64_t>(so.members.size()) * k * (k - 1) != v * (v - 1)) continue;
                try {
                    LinearSpace s = validate(static_cast<Point>(v), so.members);
                    GroupSpacePair pair = make_group_space_pair(std::move(s), ag.group);
                    json rec{{"kind", "orbit-union"},
                             {"p", o.p},
                             {"d", o.d},
                             {"t", o.t},
                             {"seed", seed},
                             {"v", v},
                             {"b", so.members.size()},
                             {"k", k},
                             {"line_transitive", true},
                             {"transverse", is_transverse(pair).transverse}};
                    std::cout << rec.dump() << "\n";
                    ++found;
                } catch (const space_error&) {
                }
            }
        }
        if (pick.size() >= o.max_union) return;
        for (std::uint32_t i = from; i < orbits.size(); ++i) {
            pick.push_back(i);
            explore(i + 1);
            pick.pop_back();
        }
    };
    explore(0);
    std::cerr << "orbit-union search over " << candidates << " candidate seeds: " << found
              << " linear space(s) found\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"extremely primitive groups and the linear spaces they act on"};
    app.require_subcommand(1);

    ConstructOpts c;
    CLI::App* construct = app.add_subcommand("construct", "build a group/space family instance");
    construct->add_option("--family", c.family, "affine|gscript|psl2|diffset|ag")->required();
    construct->add_option("--p", c.p, "prime");
    construct->add_option("--d", c.d, "extension degree");
    construct->add_option("--t", c.t, "multiplicative part order");
    construct->add_option("--e", c.e, "field-automorphism part order");
    construct->add_option("--q", c.q, "Fermat prime (psl2)");
    construct->add_option("--mod", c.mod, "modulus (diffset)");
    construct->add_option("--set", c.set, "difference set residues (diffset)")->delimiter(',');
    construct->add_option("--m", c.m, "field exponent: q = p^m (ag)");
    construct->add_option("--n", c.n, "dimension (ag)");
    construct->add_option("--out-group", c.out_group, "write the group file here");
    construct->add_option("--out-space", c.out_space, "write the space file here");

    TestOpts t;
    CLI::App* testcmd = app.add_subcommand("test", "run a predicate; exit 0 true / 1 false / 2 error");
    testcmd->add_option("--predicate", t.predicate, "ep|star|transverse|lineblocks|three-halves")->required();
    testcmd->add_option("--group", t.group_file, "group file")->required();
    testcmd->add_option("--space", t.space_file, "space file (transverse/lineblocks)");
    testcmd->add_flag("--json", t.as_json, "emit a JSON record");

    SurveyOpts s;
    CLI::App* surveycmd = app.add_subcommand("survey", "cross-check the classification over all (p,d,t,e)");
    surveycmd->add_option("--max-points", s.max_points, "largest p^d to survey")->required();
    surveycmd->add_option("--jobs", s.jobs, "worker threads");
    surveycmd->add_flag("--force", s.force, "allow max-points beyond the 4096 cap");
    surveycmd->add_option("--out", s.out, "JSONL output file (default stdout)");

    LsOpts l;
    CLI::App* lscmd = app.add_subcommand("ls", "build the fixed-point linear space of a group");
    lscmd->add_option("--group", l.group_file, "group file")->required();
    lscmd->add_option("--out", l.out, "write the space file here");
    lscmd->add_flag("--stabilizers", l.stabilizers, "append the line-stabilizer report");
    lscmd->add_option("--u", l.u, "first point of the reported line");
    lscmd->add_option("--v", l.v, "second point of the reported line");
    lscmd->add_option("--max-memory", l.max_memory_mb, "memory budget in MB");

    RefineOpts r;
    CLI::App* refinecmd = app.add_subcommand("refine", "close an inner space under the group action");
    refinecmd->add_option("--group", r.group_file, "group file")->required();
    refinecmd->add_option("--space", r.space_file, "parent space file")->required();
    refinecmd->add_option("--line-index", r.line_index, "index of the host line")->required();
    refinecmd->add_option("--inner", r.inner_file, "inner space file on the line's points")->required();
    refinecmd->add_option("--out", r.out, "write the refined space here");
    refinecmd->add_option("--max-memory", r.max_memory_mb, "memory budget in MB");

    RoundtripOpts rt;
    CLI::App* rtcmd = app.add_subcommand("roundtrip", "verify extract-then-rebuild returns the refinement");
    rtcmd->add_option("--group", rt.group_file, "group file")->required();
    rtcmd->add_option("--space", rt.space_file, "parent space file")->required();
    rtcmd->add_option("--refined", rt.refined_file, "refined space file")->required();
    rtcmd->add_option("--line-index", rt.line_index, "index of the host line")->required();
    rtcmd->add_option("--max-memory", rt.max_memory_mb, "memory budget in MB");

    SearchOpts q;
    CLI::App* qcmd = app.add_subcommand("search", "search harness for line-transitive non-transverse spaces");
    qcmd->add_option("--p", q.p, "prime (orbit-union mode)");
    qcmd->add_option("--d", q.d, "extension degree");
    qcmd->add_option("--t", q.t, "stabilizer order (e = 1)");
    qcmd->add_option("--max-union", q.max_union, "max orbits per seed");
    qcmd->add_option("--diffset-scan", q.diffset_scan, "scan perfect difference sets mod M");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(construct)) return run_construct(c);
        if (app.got_subcommand(testcmd)) return run_test(t);
        if (app.got_subcommand(surveycmd)) return run_survey(s);
        if (app.got_subcommand(lscmd)) return run_ls(l);
        if (app.got_subcommand(refinecmd)) return run_refine(r);
        if (app.got_subcommand(rtcmd)) return run_roundtrip(rt);
        if (app.got_subcommand(qcmd)) return run_search(q);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
