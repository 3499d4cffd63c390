#ifndef EPLS_FAMILIES_HPP
#define EPLS_FAMILIES_HPP

// Constructors for the concrete permutation groups and seed incidence
// structures the rest of the library studies, all in the canonical field
// labeling (a field element's point label is its base-p coefficient
// encoding; vectors over GF(q) are labeled base q).

#include <random>

#include "gf.hpp"
#include "io.hpp"
#include "linspace.hpp"
#include "perm.hpp"

namespace epls {

// ---------------------------------------------------------------------------
// One-dimensional affine semilinear groups V (x) H <= AGammaL_1(p^d)
// ---------------------------------------------------------------------------

struct AffineParams {
    std::uint64_t p = 2;
    std::uint32_t d = 1;
    std::uint64_t t = 1; // |H meet GL_1(p^d)|, must divide p^d - 1
    std::uint32_t e = 1; // order of the field-automorphism part, must divide d
};

inline void check_affine_params(const AffineParams& a) {
    if (!nt::is_prime(a.p)) throw error("affine params: p is not prime");
    if (a.d == 0 || a.e == 0 || a.t == 0) throw error("affine params: d, t, e must be >= 1");
    std::uint64_t q = nt::checked_pow(a.p, a.d);
    if (a.t == 0 || (q - 1) % a.t != 0) throw error("affine params: t does not divide p^d - 1");
    if (a.d % a.e != 0) throw error("affine params: e does not divide d");
}

struct AffineGroup {
    AffineParams params;
    FieldCtx field;
    PermGroup group;                     // V (x) (C_t (x) C_e) on p^d points
    std::vector<Permutation> translations; // by the polynomial-basis elements
    Permutation mult;                    // x -> gamma*x, gamma = alpha^((q-1)/t)
    Permutation frob;                    // x -> x^(p^(d/e))
};

// Generators: translations by the d basis elements, multiplication by
// gamma = alpha^((p^d-1)/t), and the field automorphism x -> x^(p^(d/e)).
// The stabilizer of 0 is H = C_t (x) C_e and |G| = p^d * t * e.
inline AffineGroup build_affine_group(const AffineParams& a, const FieldCtx* reuse_field = nullptr) {
    check_affine_params(a);
    FieldCtx field = reuse_field ? *reuse_field : FieldCtx(a.p, a.d);
    std::uint64_t q = field.order();
    if (q > 0xffffffffull) throw too_large_error("affine group: degree exceeds 2^32");
    Point n = static_cast<Point>(q);

    std::vector<Permutation> translations;
    std::uint64_t basis = 1;
    for (std::uint32_t i = 0; i < a.d; ++i) {
        std::vector<Point> im(n);
        for (Point x = 0; x < n; ++x) im[x] = static_cast<Point>(field.add(x, basis));
        translations.push_back(Permutation::from_images(std::move(im)));
        basis *= a.p;
    }

    std::uint64_t gamma = field.pow(field.primitive_label(), (q - 1) / a.t);
    std::vector<Point> mim(n);
    for (Point x = 0; x < n; ++x) mim[x] = static_cast<Point>(field.mul(gamma, x));
    Permutation mult = Permutation::from_images(std::move(mim));

    std::vector<Point> fim(n);
    for (Point x = 0; x < n; ++x) fim[x] = static_cast<Point>(field.frobenius(x, a.d / a.e));
    Permutation frob = Permutation::from_images(std::move(fim));

    std::vector<Permutation> gens = translations;
    gens.push_back(mult);
    gens.push_back(frob);
    PermGroup group(n, std::move(gens));
    return AffineGroup{a, std::move(field), std::move(group), std::move(translations),
                       std::move(mult), std::move(frob)};
}

// ---------------------------------------------------------------------------
// The soluble 3/2-transitive family \mathscr{G}(p^d) <= AGL_2(p^d)
// ---------------------------------------------------------------------------

// All translations of V = F_q^2, with the stabilizer of the origin the group
// of all diagonal and antidiagonal matrices of determinant +-1 (order
// 4(q-1)). Points (a, b) are labeled label(a) + q*label(b).
inline PermGroup build_gscript(std::uint64_t p, std::uint32_t d) {
    if (p == 2) throw error("gscript: p must be an odd prime");
    FieldCtx field(p, d);
    std::uint64_t q = field.order();
    if (q * q > 1'000'000) throw too_large_error("gscript: p^(2d) exceeds the 10^6 point bound");
    Point n = static_cast<Point>(q * q);
    auto pt = [q](std::uint64_t x, std::uint64_t y) { return static_cast<Point>(x + q * y); };

    std::vector<Permutation> gens;
    std::uint64_t basis = 1;
    for (std::uint32_t i = 0; i < d; ++i) {
        std::vector<Point> ima(n), imb(n);
        for (std::uint64_t y = 0; y < q; ++y)
            for (std::uint64_t x = 0; x < q; ++x) {
                ima[pt(x, y)] = pt(field.add(x, basis), y);
                imb[pt(x, y)] = pt(x, field.add(y, basis));
            }
        gens.push_back(Permutation::from_images(std::move(ima)));
        gens.push_back(Permutation::from_images(std::move(imb)));
        basis *= p;
    }
    std::uint64_t alpha = field.primitive_label();
    std::uint64_t alpha_inv = field.inv(alpha);
    std::vector<Point> imA(n), imB(n), imS(n);
    for (std::uint64_t y = 0; y < q; ++y)
        for (std::uint64_t x = 0; x < q; ++x) {
            imA[pt(x, y)] = pt(field.mul(alpha, x), field.mul(alpha_inv, y));
            imB[pt(x, y)] = pt(x, field.neg(y));
            imS[pt(x, y)] = pt(y, x);
        }
    gens.push_back(Permutation::from_images(std::move(imA)));
    gens.push_back(Permutation::from_images(std::move(imB)));
    gens.push_back(Permutation::from_images(std::move(imS)));
    return PermGroup(n, std::move(gens));
}

// ---------------------------------------------------------------------------
// PSL_2(q-1) on the cosets of a dihedral subgroup D_2q, q a Fermat prime
// ---------------------------------------------------------------------------

struct Psl2Coset {
    std::uint32_t q = 0;
    PermGroup projective; // PSL_2(q-1) on the projective line (q points)
    PermGroup group;      // the same group on the (q-1)(q-2)/2 cosets of D_2q
    Permutation torus;    // the order-q element generating C_q <= D_2q
    Permutation inverter; // the involution inverting it
};

inline std::uint64_t default_psl2_seed() {
    if (const char* env = std::getenv("EPLS_SEED")) return std::strtoull(env, nullptr, 10);
    return 0x5eed5eed;
}

// Builds PSL_2(q-1) on the projective line over GF(q-1), locates an element
// g of order q and an involution s inverting it by seeded random word
// search (with order certificates), forms D_2q = <g, s>, and returns the
// action on its right cosets. Coset representatives are canonicalized by
// the least image vector over the 2q-element subgroup; cosets are numbered
// by BFS from D with the generators in input order.
inline Psl2Coset build_psl2_dihedral_coset(std::uint32_t q, std::uint64_t seed = default_psl2_seed()) {
    // q = 2^(2^n) + 1 prime, 5 <= q <= 257
    if (q < 5 || q > 257 || !nt::is_prime(q)) throw error("psl2: q must be a Fermat prime in {5, 17, 257}");
    std::uint32_t m = 0;
    for (std::uint32_t w = q - 1; w > 1; w >>= 1) {
        if (w & 1) throw error("psl2: q - 1 is not a power of two");
        ++m;
    }
    if ((m & (m - 1)) != 0) throw error("psl2: q is not a Fermat prime");

    FieldCtx field(2, m);
    std::uint64_t qm1 = field.order(); // q - 1 field elements
    Point n = static_cast<Point>(qm1 + 1);
    Point inf = static_cast<Point>(qm1);

    std::vector<Point> imT(n), imM(n), imS(n);
    std::uint64_t alpha2 = field.mul(field.primitive_label(), field.primitive_label());
    for (std::uint64_t x = 0; x < qm1; ++x) {
        imT[x] = static_cast<Point>(field.add(x, 1));
        imM[x] = static_cast<Point>(field.mul(alpha2, x));
        imS[x] = x == 0 ? inf : static_cast<Point>(field.inv(x));
    }
    imT[inf] = inf;
    imM[inf] = inf;
    imS[inf] = 0;
    std::vector<Permutation> pl_gens{Permutation::from_images(std::move(imT)),
                                     Permutation::from_images(std::move(imM)),
                                     Permutation::from_images(std::move(imS))};
    PermGroup projective(n, pl_gens);

    std::mt19937_64 rng(seed);
    auto random_word = [&]() {
        Permutation w(n);
        std::size_t len = 3 + rng() % 18;
        for (std::size_t i = 0; i < len; ++i) w = compose(w, pl_gens[rng() % pl_gens.size()]);
        return w;
    };

    Permutation g(n);
    for (int tries = 0;; ++tries) {
        if (tries > 200000) throw error("psl2: order-q element search failed");
        Permutation w = random_word();
        std::uint64_t o = element_order(w);
        if (o % q == 0) {
            g = perm_power(w, o / q);
            if (element_order(g) == q) break;
        }
    }
    // Any element inverting g under conjugation lies in the reflection coset
    // of the dihedral normalizer of <g>, so it is an involution; both facts
    // are certified before accepting.
    Permutation ginv = g.inverse();
    Permutation s(n);
    for (int tries = 0;; ++tries) {
        if (tries > 2000000) throw error("psl2: inverting involution search failed");
        Permutation w = random_word();
        if (w.is_identity()) continue;
        if (compose(compose(w.inverse(), g), w) != ginv) continue;
        if (!compose(w, w).is_identity()) continue;
        s = std::move(w);
        break;
    }

    // Enumerate D = <g, s>, expected order 2q.
    std::vector<Permutation> dihedral{Permutation(n)};
    std::unordered_set<std::vector<Point>, detail::PointVecHash> dset{dihedral[0].images()};
    for (std::size_t k = 0; k < dihedral.size(); ++k) {
        for (const Permutation* gen : {&g, &s}) {
            Permutation x = compose(dihedral[k], *gen);
            if (dset.insert(x.images()).second) {
                if (dihedral.size() >= 2ull * q) throw error("psl2: <g, s> larger than 2q");
                dihedral.push_back(std::move(x));
            }
        }
    }
    if (dihedral.size() != 2ull * q) throw error("psl2: <g, s> does not have order 2q");

    auto canonical_coset = [&](const Permutation& rep) {
        Permutation best = compose(dihedral[0], rep);
        for (std::size_t i = 1; i < dihedral.size(); ++i) {
            Permutation cand = compose(dihedral[i], rep);
            if (cand.images() < best.images()) best = std::move(cand);
        }
        return best;
    };

    std::vector<Permutation> reps{canonical_coset(Permutation(n))};
    std::unordered_map<std::vector<Point>, Point, detail::PointVecHash> coset_index;
    coset_index.emplace(reps[0].images(), 0);
    std::vector<std::vector<Point>> action_images(pl_gens.size());
    for (std::size_t k = 0; k < reps.size(); ++k) {
        for (std::size_t gi = 0; gi < pl_gens.size(); ++gi) {
            Permutation next = canonical_coset(compose(reps[k], pl_gens[gi]));
            auto [it, fresh] = coset_index.emplace(next.images(), static_cast<Point>(reps.size()));
            if (fresh) reps.push_back(std::move(next));
            action_images[gi].push_back(it->second); // image of coset k under generator gi
        }
    }
    Point degree = static_cast<Point>(reps.size());
    std::vector<Permutation> coset_gens;
    for (auto& im : action_images) {
        im.resize(degree);
        coset_gens.push_back(Permutation::from_images(std::move(im)));
    }
    return Psl2Coset{q, std::move(projective), PermGroup(degree, std::move(coset_gens)),
                     std::move(g), std::move(s)};
}

// ---------------------------------------------------------------------------
// Difference-set spaces on Z_m
// ---------------------------------------------------------------------------

struct DiffSetSpace {
    LinearSpace space;             // lines = all translates of the set
    PermGroup group;               // <translation by 1, all multipliers>
    std::vector<std::uint32_t> multipliers; // units mu with mu*ds a translate
};

// Validates that ds is a perfect difference set mod m (every nonzero
// residue arises exactly once as a difference), then forms the translate
// space and its cyclic-plus-multiplier automorphism group. Multipliers are
// found by exhaustive scan of the units mod m (m <= 10^4).
inline DiffSetSpace build_difference_set_space(std::uint32_t m, std::vector<std::uint32_t> ds) {
    if (m < 3 || m > 10'000) throw error("difference set: modulus out of range [3, 10^4]");
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    if (ds.size() < 2) throw error("difference set: need at least 2 residues");
    if (ds.back() >= m) throw error("difference set: residue out of range");
    std::vector<std::uint32_t> count(m, 0);
    for (std::uint32_t a : ds)
        for (std::uint32_t b : ds)
            if (a != b) ++count[(a + m - b) % m];
    for (std::uint32_t r = 1; r < m; ++r)
        if (count[r] != 1)
            throw error("not a difference set: residue " + std::to_string(r) + " arises " +
                        std::to_string(count[r]) + " times");

    std::vector<std::vector<Point>> lines;
    for (std::uint32_t c = 0; c < m; ++c) {
        std::vector<Point> line;
        for (std::uint32_t a : ds) line.push_back((a + c) % m);
        std::sort(line.begin(), line.end());
        lines.push_back(std::move(line));
    }
    std::sort(lines.begin(), lines.end());
    lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
    LinearSpace space = validate(m, std::move(lines));

    std::vector<Point> tim(m);
    for (std::uint32_t x = 0; x < m; ++x) tim[x] = (x + 1) % m;
    std::vector<Permutation> gens{Permutation::from_images(std::move(tim))};
    std::vector<std::uint32_t> multipliers;
    for (std::uint32_t mu = 2; mu < m; ++mu) {
        if (std::gcd(mu, m) != 1) continue;
        std::vector<Point> image;
        for (std::uint32_t a : ds) image.push_back(static_cast<Point>((static_cast<std::uint64_t>(mu) * a) % m));
        std::sort(image.begin(), image.end());
        if (!space.has_line(image)) continue;
        multipliers.push_back(mu);
        std::vector<Point> mim(m);
        for (std::uint32_t x = 0; x < m; ++x) mim[x] = static_cast<Point>((static_cast<std::uint64_t>(mu) * x) % m);
        gens.push_back(Permutation::from_images(std::move(mim)));
    }
    PermGroup group(m, std::move(gens));
    return DiffSetSpace{std::move(space), std::move(group), std::move(multipliers)};
}

// ---------------------------------------------------------------------------
// Affine geometries AG_n(q): points GF(q)^n, lines the 1-dim affine subspaces
// ---------------------------------------------------------------------------

inline LinearSpace build_affine_geometry_lines(std::uint64_t p, std::uint32_t m, std::uint32_t n) {
    FieldCtx field(p, m);
    std::uint64_t q = field.order();
    if (n == 0) throw error("affine geometry: dimension must be >= 1");
    __uint128_t vbig = 1;
    for (std::uint32_t i = 0; i < n; ++i) vbig *= q;
    if (vbig > 1'000'000) throw too_large_error("affine geometry: q^n exceeds the 10^6 point bound");
    Point v = static_cast<Point>(vbig);

    auto decode = [&](std::uint64_t label) {
        std::vector<std::uint64_t> c(n);
        for (std::uint32_t i = 0; i < n; ++i) {
            c[i] = label % q;
            label /= q;
        }
        return c;
    };
    auto encode = [&](const std::vector<std::uint64_t>& c) {
        std::uint64_t label = 0;
        for (std::uint32_t i = n; i-- > 0;) label = label * q + c[i];
        return label;
    };

    // Directions normalized so the lowest nonzero coordinate is 1.
    std::vector<std::vector<std::uint64_t>> directions;
    for (std::uint64_t label = 1; label < static_cast<std::uint64_t>(v); ++label) {
        std::vector<std::uint64_t> c = decode(label);
        std::uint32_t lead = 0;
        while (c[lead] == 0) ++lead;
        if (c[lead] == field.label_one()) directions.push_back(std::move(c));
    }

    std::vector<std::vector<Point>> lines;
    std::vector<bool> visited(v);
    for (const auto& dir : directions) {
        std::fill(visited.begin(), visited.end(), false);
        for (Point a = 0; a < v; ++a) {
            if (visited[a]) continue;
            std::vector<Point> line;
            std::vector<std::uint64_t> base = decode(a);
            for (std::uint64_t lam = 0; lam < q; ++lam) {
                std::vector<std::uint64_t> pt(n);
                for (std::uint32_t i = 0; i < n; ++i) pt[i] = field.add(base[i], field.mul(lam, dir[i]));
                Point lbl = static_cast<Point>(encode(pt));
                visited[lbl] = true;
                line.push_back(lbl);
            }
            std::sort(line.begin(), line.end());
            lines.push_back(std::move(line));
        }
    }
    return validate(v, std::move(lines));
}

// Symmetric group in its natural action, for tests and the survey corpus.
inline PermGroup symmetric_group(Point n) {
    if (n < 2) return PermGroup::trivial(std::max<Point>(n, 1));
    std::vector<Point> swp(n), cyc(n);
    for (Point i = 0; i < n; ++i) {
        swp[i] = i;
        cyc[i] = (i + 1) % n;
    }
    std::swap(swp[0], swp[1]);
    std::vector<Permutation> gens{Permutation::from_images(std::move(swp))};
    if (n > 2) gens.push_back(Permutation::from_images(std::move(cyc)));
    return PermGroup(n, std::move(gens));
}

inline PermGroup cyclic_group(Point n) {
    std::vector<Point> cyc(n);
    for (Point i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
    return PermGroup(n, {Permutation::from_images(std::move(cyc))});
}

} // namespace epls

#endif
