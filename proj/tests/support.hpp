#ifndef EPLS_TESTS_SUPPORT_HPP
#define EPLS_TESTS_SUPPORT_HPP

// Test-only oracles, independent of the stabilizer-chain machinery they
// cross-check: plain closure enumeration, brute-force block and Property (*)
// scans, and small helpers shared across suites.

#include <random>

#include "epls/epls.hpp"

namespace epls::test {

// Full element list by multiplication closure (no BSGS involved).
inline std::vector<Permutation> brute_force_elements(const PermGroup& g,
                                                     std::size_t bound = 200'000) {
    std::vector<Permutation> elems{Permutation(g.degree())};
    std::unordered_set<std::vector<Point>, detail::PointVecHash> seen{elems[0].images()};
    for (std::size_t k = 0; k < elems.size(); ++k) {
        for (const Permutation& gen : g.generators()) {
            Permutation x = compose(elems[k], gen);
            if (seen.insert(x.images()).second) {
                if (elems.size() >= bound) throw std::runtime_error("brute force bound exceeded");
                elems.push_back(std::move(x));
            }
        }
    }
    return elems;
}

inline bool brute_contains(const std::vector<Permutation>& elems, const Permutation& p) {
    for (const Permutation& e : elems)
        if (e == p) return true;
    return false;
}

// Is s a block for the listed elements: every image equals s or misses it.
inline bool is_block_bruteforce(const std::vector<Permutation>& elems, std::vector<Point> s) {
    std::sort(s.begin(), s.end());
    for (const Permutation& e : elems) {
        std::vector<Point> img = apply_to_set(e, s);
        if (img == s) continue;
        std::vector<Point> inter;
        std::set_intersection(img.begin(), img.end(), s.begin(), s.end(), std::back_inserter(inter));
        if (!inter.empty()) return false;
    }
    return true;
}

// Property (*) by the definition: all triples, pair stabilizers taken from
// the enumerated element list.
inline bool naive_property_star(const PermGroup& g, std::size_t bound = 200'000) {
    std::vector<Permutation> elems = brute_force_elements(g, bound);
    Point n = g.degree();
    auto pair_stab = [&](Point a, Point b) {
        std::vector<const Permutation*> out;
        for (const Permutation& e : elems)
            if (e(a) == a && e(b) == b) out.push_back(&e);
        return out;
    };
    for (Point u = 0; u < n; ++u)
        for (Point v = 0; v < n; ++v) {
            auto guv = pair_stab(u, v);
            for (Point w = 0; w < n; ++w) {
                if (w == u) continue;
                bool hyp = true;
                for (const Permutation* e : guv)
                    if ((*e)(w) != w) {
                        hyp = false;
                        break;
                    }
                if (!hyp) continue;
                for (const Permutation* e : pair_stab(u, w))
                    if ((*e)(v) != v) return false;
            }
        }
    return true;
}

inline Permutation cycles(const std::string& text, Point degree) {
    return parse_permutation_cycles(text, degree);
}

inline std::mt19937_64 test_rng(std::uint64_t seed = 0xc0ffee) { return std::mt19937_64(seed); }

inline Permutation random_product(const PermGroup& g, std::mt19937_64& rng, std::size_t len = 12) {
    Permutation w(g.degree());
    if (g.generators().empty()) return w;
    for (std::size_t i = 0; i < len; ++i) w = compose(w, g.generators()[rng() % g.generators().size()]);
    return w;
}

} // namespace epls::test

#endif
