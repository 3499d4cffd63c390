#ifndef EPLS_LINSPACE_HPP
#define EPLS_LINSPACE_HPP

// Linear spaces as first-class values: a point count v together with a set
// of lines (point subsets of size >= 2) such that every unordered pair of
// distinct points lies in exactly one line.
//
// Canonical form, used for equality everywhere: each line sorted ascending,
// the line list sorted lexicographically, no duplicates. Equality of linear
// spaces is equality of canonical line sets, never isomorphism.

#include <cstdint>
#include <optional>

#include "perm.hpp"

namespace epls {

struct space_error : error {
    enum class Kind { out_of_range, short_line, uncovered_pair, doubly_covered_pair };
    space_error(Kind k, Point a, Point b, const std::string& msg) : error(msg), kind(k), pair{a, b} {}
    Kind kind;
    std::pair<Point, Point> pair;
};

struct LinearSpace {
    Point v = 0;
    std::vector<std::vector<Point>> lines;

    friend bool operator==(const LinearSpace& a, const LinearSpace& b) {
        return a.v == b.v && a.lines == b.lines;
    }
    friend bool operator!=(const LinearSpace& a, const LinearSpace& b) { return !(a == b); }

    bool has_line(const std::vector<Point>& line) const {
        return std::binary_search(lines.begin(), lines.end(), line);
    }
};

namespace detail {

// Pair coverage accumulator: dense bitmap for small v, hashed pairs above.
class PairCover {
public:
    explicit PairCover(Point v) : v_(v), dense_(v <= 8192) {
        if (dense_) bits_.assign((static_cast<std::uint64_t>(v) * v + 63) / 64, 0);
    }
    // Returns false if the pair was already covered.
    bool cover(Point a, Point b) {
        std::uint64_t key = static_cast<std::uint64_t>(a) * v_ + b;
        if (dense_) {
            std::uint64_t word = key >> 6, bit = 1ull << (key & 63);
            if (bits_[word] & bit) return false;
            bits_[word] |= bit;
            return true;
        }
        return sparse_.insert(key).second;
    }
    bool covered(Point a, Point b) const {
        std::uint64_t key = static_cast<std::uint64_t>(a) * v_ + b;
        if (dense_) return (bits_[key >> 6] >> (key & 63)) & 1;
        return sparse_.count(key) != 0;
    }

private:
    Point v_;
    bool dense_;
    std::vector<std::uint64_t> bits_;
    std::unordered_set<std::uint64_t> sparse_;
};

} // namespace detail

// Checks the pair-coverage axiom and returns the space in canonical form.
// Reports a witness pair on the first doubly covered or uncovered pair.
inline LinearSpace validate(Point v, std::vector<std::vector<Point>> lines) {
    if (v == 0) throw error("validate: v must be >= 1");
    detail::PairCover cover(v);
    std::uint64_t covered = 0;
    for (auto& line : lines) {
        std::sort(line.begin(), line.end());
        if (line.size() < 2)
            throw space_error(space_error::Kind::short_line, line.empty() ? 0 : line[0], 0,
                              "validate: line with fewer than 2 points");
        if (line.back() >= v)
            throw space_error(space_error::Kind::out_of_range, line.back(), 0,
                              "validate: point out of range");
        for (std::size_t i = 0; i + 1 < line.size(); ++i)
            if (line[i] == line[i + 1])
                throw space_error(space_error::Kind::doubly_covered_pair, line[i], line[i],
                                  "validate: repeated point within a line");
        for (std::size_t i = 0; i < line.size(); ++i)
            for (std::size_t j = i + 1; j < line.size(); ++j) {
                if (!cover.cover(line[i], line[j]))
                    throw space_error(space_error::Kind::doubly_covered_pair, line[i], line[j],
                                      "validate: pair covered by two lines");
                ++covered;
            }
    }
    std::uint64_t all_pairs = static_cast<std::uint64_t>(v) * (v - 1) / 2;
    if (covered != all_pairs) {
        for (Point a = 0; a < v; ++a)
            for (Point b = a + 1; b < v; ++b)
                if (!cover.covered(a, b))
                    throw space_error(space_error::Kind::uncovered_pair, a, b,
                                      "validate: pair covered by no line");
    }
    std::sort(lines.begin(), lines.end());
    return LinearSpace{v, std::move(lines)};
}

// The two degenerate spaces that keep showing up.
inline LinearSpace pairs_space(Point v) {
    std::vector<std::vector<Point>> lines;
    for (Point a = 0; a < v; ++a)
        for (Point b = a + 1; b < v; ++b) lines.push_back({a, b});
    return validate(v, std::move(lines));
}

inline LinearSpace single_line_space(Point v) {
    std::vector<Point> all(v);
    for (Point i = 0; i < v; ++i) all[i] = i;
    return validate(v, {all});
}

// At least two lines and every line of size >= 3.
inline bool is_nontrivial(const LinearSpace& s) {
    if (s.lines.size() < 2) return false;
    for (const auto& l : s.lines)
        if (l.size() < 3) return false;
    return true;
}

inline bool is_regular(const LinearSpace& s) {
    for (const auto& l : s.lines)
        if (l.size() != s.lines[0].size()) return false;
    return !s.lines.empty();
}

struct SpaceParams {
    Point v = 0;
    std::uint64_t b = 0;
    std::optional<Point> k;         // line size, when regular
    std::optional<std::uint64_t> r; // lines per point, when regular
    bool regular = false;
    bool nontrivial = false;
};

inline SpaceParams parameters(const LinearSpace& s) {
    SpaceParams p;
    p.v = s.v;
    p.b = s.lines.size();
    p.regular = is_regular(s);
    p.nontrivial = is_nontrivial(s);
    if (p.regular) {
        p.k = static_cast<Point>(s.lines[0].size());
        std::vector<std::uint64_t> through(s.v, 0);
        for (const auto& l : s.lines)
            for (Point x : l) ++through[x];
        p.r = through[0];
        for (Point x = 1; x < s.v; ++x)
            if (through[x] != *p.r) {
                p.r.reset(); // not constant; cannot happen in a valid regular space
                break;
            }
    }
    return p;
}

// True iff every line of sref is contained in some line of s (both on the
// same point set).
inline bool is_refinement(const LinearSpace& sref, const LinearSpace& s) {
    if (sref.v != s.v) throw degree_mismatch_error("is_refinement: point-count mismatch");
    // Index the container line of each pair of s.
    std::unordered_map<std::uint64_t, std::size_t> line_of_pair;
    for (std::size_t li = 0; li < s.lines.size(); ++li) {
        const auto& l = s.lines[li];
        for (std::size_t i = 0; i < l.size(); ++i)
            for (std::size_t j = i + 1; j < l.size(); ++j)
                line_of_pair.emplace(static_cast<std::uint64_t>(l[i]) * s.v + l[j], li);
    }
    for (const auto& rl : sref.lines) {
        auto it = line_of_pair.find(static_cast<std::uint64_t>(rl[0]) * s.v + rl[1]);
        if (it == line_of_pair.end()) return false;
        const auto& host = s.lines[it->second];
        if (!std::includes(host.begin(), host.end(), rl.begin(), rl.end())) return false;
    }
    return true;
}

inline bool is_automorphism(const LinearSpace& s, const Permutation& g) {
    if (g.degree() != s.v) throw degree_mismatch_error("is_automorphism: degree mismatch");
    for (const auto& l : s.lines)
        if (!s.has_line(apply_to_set(g, l))) return false;
    return true;
}

// Generators suffice: automorphisms of s form a group.
inline bool group_preserves(const LinearSpace& s, const PermGroup& g) {
    if (g.degree() != s.v) throw degree_mismatch_error("group_preserves: degree mismatch");
    for (const Permutation& gen : g.generators())
        if (!is_automorphism(s, gen)) return false;
    return true;
}

} // namespace epls

#endif
