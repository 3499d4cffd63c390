#ifndef EPLS_GF_HPP
#define EPLS_GF_HPP

// Arithmetic in GF(p^d) in polynomial basis, plus the integer number theory
// used elsewhere in the library (deterministic Miller-Rabin, Pollard rho,
// primitive prime divisors).
//
// Canonical point labeling: the field element with coefficient vector
// (c_0, ..., c_{d-1}) is identified with the integer c_0 + c_1*p + ... +
// c_{d-1}*p^{d-1}. This gives a fixed bijection GF(p^d) <-> {0..p^d-1}
// with 0 <-> 0, and it is the labeling every group constructor uses.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace epls {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Instance exceeds a configured resource bound.
struct too_large_error : error {
    using error::error;
};

// A stated hypothesis of an operation does not hold for the given input.
struct precondition_error : error {
    using error::error;
};

namespace nt {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t r = 1;
    a %= m;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

namespace detail {

// Brent's variant of Pollard rho; deterministic (the polynomial increment
// steps through c = 1, 2, ... until a factor shows up).
inline std::uint64_t pollard_rho(std::uint64_t n) {
    if (n % 2 == 0) return 2;
    for (std::uint64_t c = 1;; ++c) {
        auto f = [n, c](std::uint64_t x) { return (mulmod(x, x, n) + c) % n; };
        std::uint64_t x = 2, y = 2, d = 1;
        std::uint64_t q = 1;
        int lam = 1;
        while (d == 1) {
            x = y;
            for (int i = 0; i < lam; ++i) y = f(y);
            int k = 0;
            while (k < lam && d == 1) {
                std::uint64_t ys = y;
                int lim = std::min(128, lam - k);
                for (int i = 0; i < lim; ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                d = std::gcd(q, n);
                k += lim;
                if (d == n) {
                    // Backtrack one step at a time.
                    d = 1;
                    y = ys;
                    do {
                        y = f(y);
                        d = std::gcd(x > y ? x - y : y - x, n);
                    } while (d == 1);
                    break;
                }
            }
            lam *= 2;
        }
        if (d != n) return d;
    }
}

inline void factor_into(std::uint64_t n, std::vector<std::uint64_t>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    std::uint64_t d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

} // namespace detail

// Prime factorization with multiplicity, sorted ascending. factorize(1) = {}.
inline std::vector<std::uint64_t> factorize(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    if (n == 0) throw error("factorize: n must be positive");
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull}) {
        while (n % p == 0) {
            out.push_back(p);
            n /= p;
        }
    }
    if (n > 1) detail::factor_into(n, out);
    std::sort(out.begin(), out.end());
    return out;
}

// Distinct prime divisors.
inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    auto f = factorize(n);
    f.erase(std::unique(f.begin(), f.end()), f.end());
    return f;
}

// All divisors, sorted ascending.
inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
    auto f = factorize(n);
    std::vector<std::uint64_t> out{1};
    std::size_t i = 0;
    while (i < f.size()) {
        std::size_t j = i;
        while (j < f.size() && f[j] == f[i]) ++j;
        std::size_t len = out.size();
        std::uint64_t pw = 1;
        for (std::size_t e = i; e < j; ++e) {
            pw *= f[i];
            for (std::size_t k = 0; k < len; ++k) out.push_back(out[k] * pw);
        }
        i = j;
    }
    std::sort(out.begin(), out.end());
    return out;
}

// True iff t is a prime dividing p^d - 1 but none of p^i - 1 for 1 <= i < d.
inline bool is_primitive_prime_divisor(std::uint64_t t, std::uint64_t p, std::uint32_t d) {
    if (t < 2 || !is_prime(t)) return false;
    if (powmod(p, d, t) != 1) return false;
    for (std::uint32_t i = 1; i < d; ++i) {
        if (powmod(p, i, t) == 1) return false;
    }
    return true;
}

// p^d with overflow guard (result must fit in 63 bits).
inline std::uint64_t checked_pow(std::uint64_t p, std::uint32_t d) {
    __uint128_t r = 1;
    for (std::uint32_t i = 0; i < d; ++i) {
        r *= p;
        if (r > (static_cast<__uint128_t>(1) << 63)) throw error("checked_pow: p^d exceeds 2^63");
    }
    return static_cast<std::uint64_t>(r);
}

} // namespace nt

// Element of GF(p^d) as a coefficient vector in the polynomial basis.
struct FieldElement {
    std::vector<std::uint64_t> coeffs; // length d, entries in [0, p)
};

// A finite field GF(p^d): modulus is the lexicographically least monic
// irreducible polynomial of degree d over GF(p) (ordered by the base-p
// integer encoding of its non-leading coefficients), primitive_label the
// least element label of multiplicative order p^d - 1.
class FieldCtx {
public:
    FieldCtx(std::uint64_t p, std::uint32_t d) : p_(p), d_(d) {
        if (!nt::is_prime(p)) throw error("field_make: p is not prime");
        if (d == 0) throw error("field_make: d must be >= 1");
        q_ = nt::checked_pow(p, d);
        find_modulus();
        find_primitive();
    }

    std::uint64_t p() const { return p_; }
    std::uint32_t d() const { return d_; }
    std::uint64_t order() const { return q_; } // p^d
    std::uint64_t primitive_label() const { return primitive_; }
    const std::vector<std::uint64_t>& modulus() const { return modulus_; }

    FieldElement element(std::uint64_t label) const {
        if (label >= q_) throw error("field element label out of range");
        FieldElement e;
        e.coeffs.resize(d_);
        for (std::uint32_t i = 0; i < d_; ++i) {
            e.coeffs[i] = label % p_;
            label /= p_;
        }
        return e;
    }

    std::uint64_t label(const FieldElement& e) const {
        std::uint64_t out = 0;
        for (std::uint32_t i = d_; i-- > 0;) out = out * p_ + e.coeffs[i];
        return out;
    }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t out = 0, mul = 1;
        for (std::uint32_t i = 0; i < d_; ++i) {
            out += ((a % p_ + b % p_) % p_) * mul;
            a /= p_;
            b /= p_;
            mul *= p_;
        }
        return out;
    }

    std::uint64_t neg(std::uint64_t a) const {
        std::uint64_t out = 0, mul = 1;
        for (std::uint32_t i = 0; i < d_; ++i) {
            std::uint64_t c = a % p_;
            out += (c == 0 ? 0 : p_ - c) * mul;
            a /= p_;
            mul *= p_;
        }
        return out;
    }

    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        std::vector<std::uint64_t> va = digits(a), vb = digits(b);
        std::vector<std::uint64_t> prod(2 * d_ - 1, 0);
        for (std::uint32_t i = 0; i < d_; ++i) {
            if (va[i] == 0) continue;
            for (std::uint32_t j = 0; j < d_; ++j) {
                prod[i + j] = (prod[i + j] + nt::mulmod(va[i], vb[j], p_)) % p_;
            }
        }
        reduce(prod);
        return encode(prod);
    }

    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = label_one(), b = a;
        while (e > 0) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }

    // x -> x^{p^j}, the j-fold Frobenius; j is taken mod d since the
    // Frobenius automorphism has order d, so frobenius(x, d) == x.
    std::uint64_t frobenius(std::uint64_t a, std::uint32_t j) const {
        std::uint64_t r = a;
        for (std::uint32_t i = 0; i < j % d_; ++i) r = pow(r, p_);
        return r;
    }

    std::uint64_t inv(std::uint64_t a) const {
        if (a == 0) throw error("field inverse of zero");
        return pow(a, q_ - 2);
    }

    // Multiplicative order of a nonzero element.
    std::uint64_t element_order(std::uint64_t a) const {
        if (a == 0) throw error("element_order of zero");
        std::uint64_t n = q_ - 1;
        if (n == 0) return 1;
        std::uint64_t ord = n;
        for (std::uint64_t f : nt::prime_divisors(n)) {
            while (ord % f == 0 && pow(a, ord / f) == label_one()) ord /= f;
        }
        return ord;
    }

    std::uint64_t label_one() const { return q_ > 1 ? 1 : 0; }

private:
    std::vector<std::uint64_t> digits(std::uint64_t a) const {
        std::vector<std::uint64_t> v(d_);
        for (std::uint32_t i = 0; i < d_; ++i) {
            v[i] = a % p_;
            a /= p_;
        }
        return v;
    }

    std::uint64_t encode(const std::vector<std::uint64_t>& v) const {
        std::uint64_t out = 0;
        for (std::uint32_t i = d_; i-- > 0;) out = out * p_ + v[i];
        return out;
    }

    // Reduce a polynomial (low-degree-first coefficients) mod the monic
    // modulus x^d + modulus_[d-1] x^{d-1} + ... + modulus_[0].
    void reduce(std::vector<std::uint64_t>& v) const {
        for (std::size_t k = v.size(); k-- > d_;) {
            std::uint64_t c = v[k];
            if (c == 0) continue;
            v[k] = 0;
            for (std::uint32_t i = 0; i < d_; ++i) {
                std::uint64_t s = nt::mulmod(c, modulus_[i], p_);
                std::uint64_t idx = k - d_ + i;
                v[idx] = (v[idx] + p_ - s) % p_;
            }
        }
        v.resize(d_);
    }

    // --- modulus search -------------------------------------------------
    // Polynomial arithmetic over GF(p) for the irreducibility test only.
    using Poly = std::vector<std::uint64_t>; // low-first, no trailing zeros

    static void trim(Poly& f) {
        while (!f.empty() && f.back() == 0) f.pop_back();
    }

    Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod) const {
        if (a.empty() || b.empty()) return {};
        Poly prod(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < b.size(); ++j)
                prod[i + j] = (prod[i + j] + nt::mulmod(a[i], b[j], p_)) % p_;
        }
        return poly_rem(prod, mod);
    }

    Poly poly_rem(Poly a, const Poly& mod) const {
        trim(a);
        std::uint64_t lead_inv = nt::powmod(mod.back(), p_ - 2, p_);
        while (a.size() >= mod.size()) {
            std::uint64_t c = nt::mulmod(a.back(), lead_inv, p_);
            std::size_t shift = a.size() - mod.size();
            if (c != 0) {
                for (std::size_t i = 0; i < mod.size(); ++i) {
                    std::uint64_t s = nt::mulmod(c, mod[i], p_);
                    a[shift + i] = (a[shift + i] + p_ - s) % p_;
                }
            }
            a.pop_back();
            trim(a);
        }
        return a;
    }

    Poly poly_gcd(Poly a, Poly b) const {
        trim(a);
        trim(b);
        while (!b.empty()) {
            Poly r = poly_rem(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    // x^(p^i) mod f, by i successive p-th powers of x.
    Poly xq_power(const Poly& f, std::uint32_t i) const {
        Poly x{0, 1};
        Poly cur = poly_rem(x, f);
        for (std::uint32_t k = 0; k < i; ++k) {
            // cur := cur^p mod f
            Poly r{1};
            Poly base = cur;
            std::uint64_t e = p_;
            while (e > 0) {
                if (e & 1) r = poly_mulmod(r, base, f);
                base = poly_mulmod(base, base, f);
                e >>= 1;
            }
            cur = std::move(r);
        }
        return cur;
    }

    // f (monic, degree d) is irreducible iff it shares no factor with
    // x^(p^i) - x for every 1 <= i <= d/2.
    bool irreducible(const Poly& f) const {
        for (std::uint32_t i = 1; i <= d_ / 2; ++i) {
            Poly t = xq_power(f, i);
            // t - x
            if (t.size() < 2) t.resize(2, 0);
            t[1] = (t[1] + p_ - 1) % p_;
            trim(t);
            Poly g = poly_gcd(f, t);
            if (g.size() > 1) return false;
        }
        return true;
    }

    void find_modulus() {
        modulus_.assign(d_, 0);
        if (d_ == 1) return; // modulus = x
        for (std::uint64_t c = 0; c < q_; ++c) {
            std::uint64_t cc = c;
            Poly f(d_ + 1, 0);
            for (std::uint32_t i = 0; i < d_; ++i) {
                f[i] = cc % p_;
                cc /= p_;
            }
            f[d_] = 1;
            if (irreducible(f)) {
                for (std::uint32_t i = 0; i < d_; ++i) modulus_[i] = f[i];
                return;
            }
        }
        throw error("field_make: no irreducible modulus found"); // unreachable
    }

    void find_primitive() {
        if (q_ == 2) {
            primitive_ = 1;
            return;
        }
        std::uint64_t n = q_ - 1;
        auto primes = nt::prime_divisors(n);
        for (std::uint64_t a = 1; a < q_; ++a) {
            bool ok = true;
            for (std::uint64_t f : primes) {
                if (pow(a, n / f) == label_one()) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                primitive_ = a;
                return;
            }
        }
        throw error("field_make: no primitive element found"); // unreachable
    }

    std::uint64_t p_;
    std::uint32_t d_;
    std::uint64_t q_;
    std::vector<std::uint64_t> modulus_; // non-leading coefficients, low-first
    std::uint64_t primitive_ = 0;
};

inline FieldCtx field_make(std::uint64_t p, std::uint32_t d) { return FieldCtx(p, d); }

} // namespace epls

#endif
