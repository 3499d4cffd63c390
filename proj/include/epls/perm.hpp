#ifndef EPLS_PERM_HPP
#define EPLS_PERM_HPP

// Permutations on {0..n-1} and finite permutation groups given by
// generators, backed by a deterministic base-and-strong-generating-set
// (Schreier-Sims) chain.
//
// Action convention, used everywhere in this library: permutations act on
// the RIGHT, written x^g, and composition reads left to right, so
// x^(a*b) = (x^a)^b and compose(a, b) applies a first.
//
// All types are immutable values after construction. A PermGroup builds its
// stabilizer chain lazily behind a once-only gate, so groups can be shared
// read-only across threads and queried concurrently.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <unordered_set>

#include "gf.hpp"

namespace epls {

using Point = std::uint32_t;

struct degree_mismatch_error : error {
    using error::error;
};

class Permutation {
public:
    // Identity on n points.
    explicit Permutation(Point degree) : images_(degree) {
        for (Point i = 0; i < degree; ++i) images_[i] = i;
    }

    static Permutation from_images(std::vector<Point> images) {
        Permutation p;
        p.images_ = std::move(images);
        std::vector<bool> seen(p.images_.size(), false);
        for (Point x : p.images_) {
            if (x >= p.images_.size() || seen[x]) throw error("permutation images are not a bijection");
            seen[x] = true;
        }
        return p;
    }

    Point degree() const { return static_cast<Point>(images_.size()); }
    Point operator()(Point x) const { return images_[x]; }
    const std::vector<Point>& images() const { return images_; }

    bool is_identity() const {
        for (Point i = 0; i < degree(); ++i)
            if (images_[i] != i) return false;
        return true;
    }

    Permutation inverse() const {
        Permutation r;
        r.images_.resize(images_.size());
        for (Point i = 0; i < degree(); ++i) r.images_[images_[i]] = i;
        return r;
    }

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.images_ == b.images_; }
    friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.images_ < b.images_; }
    friend Permutation compose(const Permutation& a, const Permutation& b);

private:
    Permutation() = default;
    std::vector<Point> images_;
};

// x^(ab) = (x^a)^b: apply a, then b. Bijections compose to bijections, so
// the result skips re-validation.
inline Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw degree_mismatch_error("compose: degree mismatch");
    Permutation r;
    r.images_.resize(a.degree());
    for (Point i = 0; i < a.degree(); ++i) r.images_[i] = b(a(i));
    return r;
}

inline std::uint64_t element_order(const Permutation& g) {
    std::vector<bool> seen(g.degree(), false);
    std::uint64_t ord = 1;
    for (Point i = 0; i < g.degree(); ++i) {
        if (seen[i]) continue;
        std::uint64_t len = 0;
        Point x = i;
        while (!seen[x]) {
            seen[x] = true;
            x = g(x);
            ++len;
        }
        ord = std::lcm(ord, len);
    }
    return ord;
}

inline Permutation perm_power(const Permutation& g, std::uint64_t e) {
    Permutation r(g.degree()), b = g;
    while (e > 0) {
        if (e & 1) r = compose(r, b);
        b = compose(b, b);
        e >>= 1;
    }
    return r;
}

namespace detail {

struct PointVecHash {
    std::size_t operator()(const std::vector<Point>& v) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (Point x : v) {
            h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            h *= 0xff51afd7ed558ccdull;
        }
        return static_cast<std::size_t>(h);
    }
};

} // namespace detail

// ---------------------------------------------------------------------------
// Stabilizer chain
// ---------------------------------------------------------------------------

class Bsgs {
public:
    struct Level {
        Point base = 0;
        std::vector<Permutation> gens;  // strong generators fixing all earlier base points
        std::vector<Point> orbit;       // BFS order, orbit[0] == base
        std::vector<std::int32_t> pos;  // point -> index into orbit, or -1
        std::vector<Point> parent;      // BFS tree: index of parent within orbit
        std::vector<Point> via;         // generator index labelling the tree edge
        std::vector<Permutation> transversal; // u with base^u = orbit[k]; empty in tree mode
        bool explicit_transversal = true;
    };

    Point degree() const { return degree_; }
    const std::vector<Level>& levels() const { return levels_; }

    std::uint64_t order() const {
        std::uint64_t o = 1;
        for (const Level& l : levels_) {
            if (__builtin_mul_overflow(o, static_cast<std::uint64_t>(l.orbit.size()), &o))
                throw error("group order exceeds 64 bits");
        }
        return o;
    }

    // Element u of this chain's group with base^u = orbit[k] at the level.
    Permutation transversal_element(std::size_t level, std::size_t k) const {
        const Level& l = levels_[level];
        if (l.explicit_transversal) return l.transversal[k];
        std::vector<Point> edges;
        std::size_t cur = k;
        while (cur != 0) {
            edges.push_back(l.via[cur]);
            cur = l.parent[cur];
        }
        Permutation u(degree_);
        for (std::size_t i = edges.size(); i-- > 0;) u = compose(u, l.gens[edges[i]]);
        return u;
    }

    // Strip g through the chain starting at `from`. Returns the residue and
    // the number of levels consumed: if the residue is the identity the
    // element lies in the group of level `from`.
    std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from = 0) const {
        for (std::size_t l = from; l < levels_.size(); ++l) {
            Point beta = g(levels_[l].base);
            std::int32_t k = levels_[l].pos[beta];
            if (k < 0) return {std::move(g), l};
            g = compose(g, transversal_element(l, static_cast<std::size_t>(k)).inverse());
        }
        return {std::move(g), levels_.size()};
    }

    bool contains(const Permutation& g) const {
        if (g.degree() != degree_) return false;
        auto [res, lvl] = sift(g);
        (void)lvl;
        return res.is_identity();
    }

    // Deterministic enumeration of all elements via transversal products.
    template <typename Fn>
    void for_each_element(Fn&& fn) const {
        Permutation id(degree_);
        enumerate_rec(levels_.size(), id, fn);
    }

    static Bsgs build(Point degree, const std::vector<Permutation>& gens,
                      const std::vector<Point>& base_prefix = {});

private:
    template <typename Fn>
    void enumerate_rec(std::size_t level, const Permutation& acc, Fn&& fn) const {
        if (level == 0) {
            fn(acc);
            return;
        }
        std::size_t l = level - 1;
        for (std::size_t k = 0; k < levels_[l].orbit.size(); ++k)
            enumerate_rec(l, compose(acc, transversal_element(l, k)), fn);
    }

    static constexpr std::uint64_t kExplicitBudget = 1ull << 22; // orbit * degree words per level

    void add_level(Point base) {
        Level l;
        l.base = base;
        l.pos.assign(degree_, -1);
        levels_.push_back(std::move(l));
        recompute_orbit(levels_.size() - 1);
    }

    void recompute_orbit(std::size_t li) {
        Level& l = levels_[li];
        l.orbit.clear();
        l.parent.clear();
        l.via.clear();
        l.transversal.clear();
        std::fill(l.pos.begin(), l.pos.end(), -1);
        l.orbit.push_back(l.base);
        l.parent.push_back(0);
        l.via.push_back(0);
        l.pos[l.base] = 0;
        for (std::size_t k = 0; k < l.orbit.size(); ++k) {
            for (std::size_t gi = 0; gi < l.gens.size(); ++gi) {
                Point img = l.gens[gi](l.orbit[k]);
                if (l.pos[img] < 0) {
                    l.pos[img] = static_cast<std::int32_t>(l.orbit.size());
                    l.orbit.push_back(img);
                    l.parent.push_back(static_cast<Point>(k));
                    l.via.push_back(static_cast<Point>(gi));
                }
            }
        }
        l.explicit_transversal =
            static_cast<std::uint64_t>(l.orbit.size()) * degree_ <= kExplicitBudget;
        if (l.explicit_transversal) {
            l.transversal.reserve(l.orbit.size());
            l.transversal.emplace_back(degree_);
            for (std::size_t k = 1; k < l.orbit.size(); ++k)
                l.transversal.push_back(compose(l.transversal[l.parent[k]], l.gens[l.via[k]]));
        }
    }

    Point degree_ = 0;
    std::vector<Level> levels_;
};

// Deterministic Schreier-Sims: new base points are always the least moved
// point, generators are processed in input order, and orbits are BFS in
// generator order, so the chain is a pure function of (degree, gens, prefix).
inline Bsgs Bsgs::build(Point degree, const std::vector<Permutation>& gens,
                        const std::vector<Point>& base_prefix) {
    Bsgs b;
    b.degree_ = degree;
    for (Point x : base_prefix) {
        if (x >= degree) throw error("base point out of range");
        Level l;
        l.base = x;
        l.pos.assign(degree, -1);
        b.levels_.push_back(std::move(l));
    }
    auto min_moved = [degree](const Permutation& g) -> Point {
        for (Point i = 0; i < degree; ++i)
            if (g(i) != i) return i;
        throw error("identity has no moved point");
    };
    // Ensure every generator moves some base point, then file it at every
    // level whose base prefix it fixes.
    std::vector<Permutation> work;
    for (const Permutation& g : gens) {
        if (g.degree() != degree) throw degree_mismatch_error("group generators have mixed degrees");
        if (!g.is_identity()) work.push_back(g);
    }
    for (const Permutation& g : work) {
        bool moves = false;
        for (const Level& l : b.levels_)
            if (g(l.base) != l.base) {
                moves = true;
                break;
            }
        if (!moves) {
            Level l;
            l.base = min_moved(g);
            l.pos.assign(degree, -1);
            b.levels_.push_back(std::move(l));
        }
    }
    for (const Permutation& g : work) {
        for (Level& l : b.levels_) {
            l.gens.push_back(g);
            if (g(l.base) != l.base) break;
        }
    }
    for (std::size_t i = 0; i < b.levels_.size(); ++i) b.recompute_orbit(i);

    if (b.levels_.empty()) return b;

    // Scans one level's Schreier generators. Returns the level to restart
    // from after inserting a missing strong generator, or -1 if the level
    // is complete. Levels are accessed by index only: an insertion may grow
    // the level vector.
    auto process_level = [&b, degree, &min_moved](std::size_t i) -> std::ptrdiff_t {
        for (std::size_t k = 0; k < b.levels_[i].orbit.size(); ++k) {
            for (std::size_t gi = 0; gi < b.levels_[i].gens.size(); ++gi) {
                const Level& lv = b.levels_[i];
                // Tree edges yield trivial Schreier generators.
                Point img = lv.gens[gi](lv.orbit[k]);
                std::size_t kimg = static_cast<std::size_t>(lv.pos[img]);
                if (kimg != 0 && lv.parent[kimg] == k && lv.via[kimg] == gi) continue;
                Permutation sg = compose(compose(b.transversal_element(i, k), lv.gens[gi]),
                                         b.transversal_element(i, kimg).inverse());
                if (sg.is_identity()) continue;
                auto [h, stop] = b.sift(std::move(sg), i + 1);
                if (h.is_identity()) continue;
                if (stop == b.levels_.size()) {
                    Level nl;
                    nl.base = min_moved(h);
                    nl.pos.assign(degree, -1);
                    b.levels_.push_back(std::move(nl));
                    stop = b.levels_.size() - 1;
                }
                for (std::size_t l = i + 1; l <= stop; ++l) {
                    b.levels_[l].gens.push_back(h);
                    b.recompute_orbit(l);
                }
                return static_cast<std::ptrdiff_t>(stop);
            }
        }
        return -1;
    };

    std::size_t i = b.levels_.size() - 1;
    while (true) {
        std::ptrdiff_t restart = process_level(i);
        if (restart >= 0) {
            i = static_cast<std::size_t>(restart);
            continue;
        }
        if (i == 0) break;
        --i;
    }
    return b;
}

// ---------------------------------------------------------------------------
// PermGroup
// ---------------------------------------------------------------------------

class PermGroup {
public:
    PermGroup(Point degree, std::vector<Permutation> gens)
        : degree_(degree), gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {
        if (degree == 0) throw error("group degree must be >= 1");
        for (const Permutation& g : gens_)
            if (g.degree() != degree_) throw degree_mismatch_error("group generators have mixed degrees");
    }

    static PermGroup trivial(Point degree) { return PermGroup(degree, {}); }

    Point degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return gens_; }
    bool is_trivial_group() const { return order() == 1; }

    const Bsgs& bsgs() const {
        std::call_once(cache_->flag, [this] { cache_->chain = std::make_unique<Bsgs>(Bsgs::build(degree_, gens_)); });
        return *cache_->chain;
    }

    std::uint64_t order() const { return bsgs().order(); }

    bool contains(const Permutation& g) const { return bsgs().contains(g); }

    std::vector<Point> orbit(Point x) const {
        if (x >= degree_) throw error("orbit: point out of range");
        std::vector<Point> orb{x};
        std::vector<bool> seen(degree_, false);
        seen[x] = true;
        for (std::size_t k = 0; k < orb.size(); ++k) {
            for (const Permutation& g : gens_) {
                Point img = g(orb[k]);
                if (!seen[img]) {
                    seen[img] = true;
                    orb.push_back(img);
                }
            }
        }
        return orb;
    }

    // Orbit partition, ordered by least orbit member.
    std::vector<std::vector<Point>> orbits() const {
        std::vector<bool> seen(degree_, false);
        std::vector<std::vector<Point>> out;
        for (Point x = 0; x < degree_; ++x) {
            if (seen[x]) continue;
            auto orb = orbit(x);
            for (Point y : orb) seen[y] = true;
            out.push_back(std::move(orb));
        }
        return out;
    }

    bool is_transitive() const { return orbit(0).size() == degree_; }

private:
    struct Cache {
        std::once_flag flag;
        std::unique_ptr<const Bsgs> chain;
    };

    Point degree_;
    std::vector<Permutation> gens_;
    std::shared_ptr<Cache> cache_;
};

// Nonempty generator list with equal degrees; deterministic given the
// generator sequence.
inline PermGroup group_from_generators(const std::vector<Permutation>& gens) {
    if (gens.empty()) throw error("group_from_generators: empty generator list");
    return PermGroup(gens[0].degree(), gens);
}

// ---------------------------------------------------------------------------
// Stabilizers and fixed points
// ---------------------------------------------------------------------------

inline PermGroup point_stabilizer(const PermGroup& g, Point x) {
    if (x >= g.degree()) throw error("stabilizer: point out of range");
    const Bsgs& chain = g.bsgs();
    if (chain.levels().empty()) return g; // trivial group
    const Bsgs::Level& l0 = chain.levels()[0];
    // The chain's own first level, either directly or conjugated along the
    // transversal: for base^u = x, G_x = u^{-1} G_base u.
    if (l0.pos[x] >= 0) {
        std::vector<Permutation> gens;
        if (chain.levels().size() > 1) gens = chain.levels()[1].gens;
        if (l0.base != x) {
            Permutation u = chain.transversal_element(0, static_cast<std::size_t>(l0.pos[x]));
            Permutation uinv = u.inverse();
            for (Permutation& h : gens) h = compose(compose(uinv, h), u);
        }
        return PermGroup(g.degree(), std::move(gens));
    }
    // x outside the first fundamental orbit: rebuild with x as base prefix.
    Bsgs rebased = Bsgs::build(g.degree(), g.generators(), {x});
    std::vector<Permutation> gens;
    if (rebased.levels().size() > 1) gens = rebased.levels()[1].gens;
    return PermGroup(g.degree(), std::move(gens));
}

// Subgroup fixing every point of xs, as the iterated point stabilizer;
// the result is independent of the ordering of xs.
inline PermGroup pointwise_stabilizer(const PermGroup& g, std::vector<Point> xs) {
    for (Point x : xs)
        if (x >= g.degree()) throw error("stabilizer: point out of range");
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    PermGroup cur = g;
    for (Point x : xs) cur = point_stabilizer(cur, x);
    return cur;
}

// Points fixed by every generator (equivalently, by the whole group).
inline std::vector<Point> fixed_points(const PermGroup& g) {
    std::vector<Point> out;
    for (Point x = 0; x < g.degree(); ++x) {
        bool fixed = true;
        for (const Permutation& p : g.generators())
            if (p(x) != x) {
                fixed = false;
                break;
            }
        if (fixed) out.push_back(x);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Action on sets
// ---------------------------------------------------------------------------

// Orbit of a point set under the set action, with the group elements
// carrying the seed to each member. Members are canonical sorted vectors;
// BFS from the seed with generators in input order makes the ordering
// deterministic.
struct SetOrbit {
    std::vector<Point> seed;
    std::vector<std::vector<Point>> members; // members[0] == seed
    std::vector<Permutation> carriers;       // seed^carriers[i] == members[i]; empty if not requested
};

inline std::vector<Point> apply_to_set(const Permutation& g, const std::vector<Point>& s) {
    std::vector<Point> img(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) img[i] = g(s[i]);
    std::sort(img.begin(), img.end());
    return img;
}

inline SetOrbit set_orbit(const PermGroup& g, std::vector<Point> seed, std::uint64_t max_sets,
                          bool want_carriers) {
    if (seed.empty()) throw error("set_orbit: empty seed set");
    std::sort(seed.begin(), seed.end());
    seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
    if (seed.back() >= g.degree()) throw error("set_orbit: point out of range");
    SetOrbit so;
    so.seed = seed;
    std::unordered_map<std::vector<Point>, std::size_t, detail::PointVecHash> index;
    so.members.push_back(seed);
    index.emplace(seed, 0);
    if (want_carriers) so.carriers.emplace_back(g.degree());
    for (std::size_t k = 0; k < so.members.size(); ++k) {
        for (const Permutation& gen : g.generators()) {
            std::vector<Point> img = apply_to_set(gen, so.members[k]);
            if (index.find(img) == index.end()) {
                if (so.members.size() >= max_sets)
                    throw too_large_error("set orbit exceeds configured bound; instance too large");
                index.emplace(img, so.members.size());
                so.members.push_back(std::move(img));
                if (want_carriers) so.carriers.push_back(compose(so.carriers[k], gen));
            }
        }
    }
    return so;
}

// Setwise stabilizer of s via the set-orbit Schreier generators, together
// with the orbit size. Satisfies |G| = orbit_size * |stabilizer|.
struct SetStabilizer {
    PermGroup stabilizer;
    std::uint64_t orbit_size;
};

inline SetStabilizer setwise_stabilizer_via_orbit(const PermGroup& g, const std::vector<Point>& s,
                                                  std::uint64_t max_sets = 100'000'000) {
    SetOrbit so = set_orbit(g, s, max_sets, true);
    std::unordered_map<std::vector<Point>, std::size_t, detail::PointVecHash> index;
    for (std::size_t i = 0; i < so.members.size(); ++i) index.emplace(so.members[i], i);
    std::vector<Permutation> gens;
    std::unordered_set<std::vector<Point>, detail::PointVecHash> seen;
    for (std::size_t i = 0; i < so.members.size(); ++i) {
        for (const Permutation& gen : g.generators()) {
            std::size_t j = index.at(apply_to_set(gen, so.members[i]));
            Permutation cand = compose(compose(so.carriers[i], gen), so.carriers[j].inverse());
            if (cand.is_identity()) continue;
            if (seen.insert(cand.images()).second) gens.push_back(std::move(cand));
        }
    }
    return SetStabilizer{PermGroup(g.degree(), std::move(gens)), so.members.size()};
}

// ---------------------------------------------------------------------------
// Normalizer by bounded enumeration
// ---------------------------------------------------------------------------

inline bool is_subgroup(const PermGroup& h, const PermGroup& g) {
    if (h.degree() != g.degree()) return false;
    for (const Permutation& x : h.generators())
        if (!g.contains(x)) return false;
    return true;
}

inline bool group_equal(const PermGroup& a, const PermGroup& b) {
    return a.degree() == b.degree() && a.order() == b.order() && is_subgroup(a, b);
}

// N_G(H) by filtering the enumerated elements of G on the conjugation
// invariance test. Requires H <= G and |G| within the bound; callers with
// larger groups should use the set-orbit stabilizer route instead.
inline PermGroup normalizer(const PermGroup& g, const PermGroup& h,
                            std::uint64_t enumeration_bound = 10'000'000) {
    if (!is_subgroup(h, g)) throw precondition_error("normalizer: H is not a subgroup of G");
    if (g.order() > enumeration_bound)
        throw too_large_error("normalizer: |G| exceeds enumeration bound; use setwise_stabilizer_via_orbit route");
    std::vector<Permutation> found;
    PermGroup k = PermGroup::trivial(g.degree());
    g.bsgs().for_each_element([&](const Permutation& x) {
        if (k.contains(x)) return;
        Permutation xi = x.inverse();
        for (const Permutation& hg : h.generators()) {
            if (!h.contains(compose(compose(xi, hg), x))) return;
        }
        found.push_back(x);
        k = PermGroup(g.degree(), found);
    });
    return k;
}

// ---------------------------------------------------------------------------
// Induced action on an invariant domain
// ---------------------------------------------------------------------------

struct InducedAction {
    PermGroup action;             // on {0..|domain|-1}
    std::vector<Point> domain;    // sorted global points; local i <-> domain[i]
    std::uint64_t kernel_order;   // |input| / |action|
};

inline InducedAction induced_action(const PermGroup& g, std::vector<Point> domain) {
    std::sort(domain.begin(), domain.end());
    domain.erase(std::unique(domain.begin(), domain.end()), domain.end());
    if (domain.empty()) throw error("induced_action: empty domain");
    if (domain.back() >= g.degree()) throw error("induced_action: point out of range");
    std::vector<std::int32_t> local(g.degree(), -1);
    for (std::size_t i = 0; i < domain.size(); ++i) local[domain[i]] = static_cast<std::int32_t>(i);
    std::vector<Permutation> gens;
    for (const Permutation& gen : g.generators()) {
        std::vector<Point> im(domain.size());
        for (std::size_t i = 0; i < domain.size(); ++i) {
            Point img = gen(domain[i]);
            if (local[img] < 0) throw precondition_error("induced_action: domain is not invariant");
            im[i] = static_cast<Point>(local[img]);
        }
        gens.push_back(Permutation::from_images(std::move(im)));
    }
    PermGroup action(static_cast<Point>(domain.size()), std::move(gens));
    std::uint64_t ord = g.order(), img_ord = action.order();
    return InducedAction{std::move(action), std::move(domain), ord / img_ord};
}

// ---------------------------------------------------------------------------
// Blocks, primitivity, rank
// ---------------------------------------------------------------------------

namespace detail {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) {
        for (std::size_t i = 0; i < n; ++i) parent_[i] = static_cast<Point>(i);
    }
    Point find(Point x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    // Returns the root that lost, or -1 if already merged.
    std::int64_t merge(Point a, Point b) {
        Point ra = find(a), rb = find(b);
        if (ra == rb) return -1;
        if (ra > rb) std::swap(ra, rb);
        parent_[rb] = ra;
        return rb;
    }

private:
    std::vector<Point> parent_;
};

} // namespace detail

// Smallest block of imprimitivity containing {a, b} (Atkinson's refinement).
inline std::vector<Point> minimal_block(const PermGroup& g, Point a, Point b) {
    if (a >= g.degree() || b >= g.degree() || a == b) throw error("minimal_block: bad seed pair");
    detail::UnionFind uf(g.degree());
    std::vector<Point> queue;
    queue.push_back(static_cast<Point>(uf.merge(a, b)));
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        Point gamma = queue[qi];
        Point delta = uf.find(gamma);
        for (const Permutation& gen : g.generators()) {
            std::int64_t lost = uf.merge(gen(gamma), gen(delta));
            if (lost >= 0) queue.push_back(static_cast<Point>(lost));
        }
    }
    std::vector<Point> block;
    Point root = uf.find(a);
    for (Point x = 0; x < g.degree(); ++x)
        if (uf.find(x) == root) block.push_back(x);
    return block;
}

struct PrimitivityResult {
    bool primitive;
    std::vector<Point> block; // a nontrivial block when imprimitive
};

// Transitive G is primitive iff every seed pair {0, x} forces the full
// point set as its minimal block. The trivial group on one point counts as
// primitive, and blocks of regular prime-degree groups are always trivial.
inline PrimitivityResult primitivity(const PermGroup& g) {
    if (!g.is_transitive()) throw precondition_error("primitivity: group is not transitive");
    if (g.degree() == 1) return {true, {}};
    for (Point x = 1; x < g.degree(); ++x) {
        std::vector<Point> blk = minimal_block(g, 0, x);
        if (blk.size() < g.degree()) return {false, std::move(blk)};
    }
    return {true, {}};
}

inline bool is_primitive(const PermGroup& g) { return primitivity(g).primitive; }

// Sorted multiset of the orbit sizes of a point stabilizer (includes the
// trivial orbit); its size is the rank of the transitive group.
inline std::vector<std::uint64_t> rank_and_subdegrees(const PermGroup& g) {
    if (!g.is_transitive()) throw precondition_error("rank_and_subdegrees: group is not transitive");
    PermGroup stab = point_stabilizer(g, 0);
    std::vector<std::uint64_t> sizes;
    for (const auto& orb : stab.orbits()) sizes.push_back(orb.size());
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

// ---------------------------------------------------------------------------
// Structural helpers
// ---------------------------------------------------------------------------

inline bool is_abelian(const PermGroup& g) {
    const auto& gens = g.generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (compose(gens[i], gens[j]) != compose(gens[j], gens[i])) return false;
    return true;
}

// Every point stabilizer trivial: each orbit has length |G|.
inline bool is_semiregular(const PermGroup& g) {
    std::uint64_t ord = g.order();
    for (const auto& orb : g.orbits())
        if (orb.size() != ord) return false;
    return true;
}

inline bool acts_regularly(const PermGroup& g) { return g.is_transitive() && g.order() == g.degree(); }

// Abelian with every generator of order dividing p (elementary abelian p-group
// when nontrivial).
inline bool is_elementary_abelian(const PermGroup& g, std::uint64_t p) {
    if (!is_abelian(g)) return false;
    for (const Permutation& gen : g.generators()) {
        std::uint64_t o = element_order(gen);
        if (o != 1 && o != p) return false;
    }
    return true;
}

} // namespace epls

#endif
