#ifndef EPLS_IO_HPP
#define EPLS_IO_HPP

// Text file formats. Both round-trip bit-exactly with their parsers.
//
// Group file:
//   line 1:        "degree <n>"
//   each line:     one generator in disjoint-cycle notation over 0-based
//                  points, cycles ordered by least element, each cycle
//                  rotated to start at its least element, fixed points
//                  omitted; the identity is written "()".
//   example:       (0 1 2)(3 4)
//
// Space file:
//   line 1:        "v <n>"
//   each line:     one line of the space as space-separated sorted 0-based
//                  points; lines ordered lexicographically.

#include <fstream>
#include <sstream>

#include "linspace.hpp"
#include "perm.hpp"

namespace epls {

struct parse_error : error {
    using error::error;
};

inline std::string print_permutation_cycles(const Permutation& g) {
    if (g.is_identity()) return "()";
    std::string out;
    std::vector<bool> seen(g.degree(), false);
    for (Point i = 0; i < g.degree(); ++i) {
        if (seen[i] || g(i) == i) continue;
        out += '(';
        Point x = i;
        bool first = true;
        while (!seen[x]) {
            seen[x] = true;
            if (!first) out += ' ';
            out += std::to_string(x);
            first = false;
            x = g(x);
        }
        out += ')';
    }
    return out;
}

inline Permutation parse_permutation_cycles(const std::string& text, Point degree) {
    std::vector<Point> im(degree);
    for (Point i = 0; i < degree; ++i) im[i] = i;
    std::vector<bool> used(degree, false);
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    skip_ws();
    bool any_cycle = false;
    while (i < text.size()) {
        if (text[i] != '(') throw parse_error("permutation: expected '('");
        ++i;
        std::vector<Point> cyc;
        skip_ws();
        while (i < text.size() && text[i] != ')') {
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw parse_error("permutation: expected point or ')'");
            std::uint64_t val = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                val = val * 10 + (text[i] - '0');
                if (val > 0xffffffffull) throw parse_error("permutation: point too large");
                ++i;
            }
            if (val >= degree) throw parse_error("permutation: point out of range");
            cyc.push_back(static_cast<Point>(val));
            skip_ws();
        }
        if (i >= text.size()) throw parse_error("permutation: unterminated cycle");
        ++i; // ')'
        any_cycle = true;
        if (cyc.size() == 1) throw parse_error("permutation: length-1 cycle");
        for (Point x : cyc) {
            if (used[x]) throw parse_error("permutation: point repeated across cycles");
            used[x] = true;
        }
        for (std::size_t k = 0; k < cyc.size(); ++k) im[cyc[k]] = cyc[(k + 1) % cyc.size()];
        skip_ws();
    }
    if (!any_cycle) throw parse_error("permutation: empty text");
    return Permutation::from_images(std::move(im));
}

inline std::string print_group(const PermGroup& g) {
    std::string out = "degree " + std::to_string(g.degree()) + "\n";
    for (const Permutation& gen : g.generators()) out += print_permutation_cycles(gen) + "\n";
    return out;
}

inline PermGroup parse_group(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw parse_error("group: empty input");
    std::istringstream header(line);
    std::string kw;
    std::uint64_t n = 0;
    if (!(header >> kw >> n) || kw != "degree" || n == 0 || n > 0xffffffffull)
        throw parse_error("group: expected 'degree <n>' header");
    std::vector<Permutation> gens;
    while (std::getline(in, line)) {
        std::string trimmed;
        for (char c : line)
            if (c != '\r') trimmed += c;
        bool blank = trimmed.find_first_not_of(" \t") == std::string::npos;
        if (blank) continue;
        gens.push_back(parse_permutation_cycles(trimmed, static_cast<Point>(n)));
    }
    return PermGroup(static_cast<Point>(n), std::move(gens));
}

inline std::string print_space(const LinearSpace& s) {
    std::string out = "v " + std::to_string(s.v) + "\n";
    for (const auto& l : s.lines) {
        for (std::size_t i = 0; i < l.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(l[i]);
        }
        out += '\n';
    }
    return out;
}

inline LinearSpace parse_space(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw parse_error("space: empty input");
    std::istringstream header(line);
    std::string kw;
    std::uint64_t n = 0;
    if (!(header >> kw >> n) || kw != "v" || n == 0 || n > 0xffffffffull)
        throw parse_error("space: expected 'v <n>' header");
    std::vector<std::vector<Point>> lines;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<Point> pts;
        std::uint64_t x;
        while (ls >> x) {
            if (x >= n) throw parse_error("space: point out of range");
            pts.push_back(static_cast<Point>(x));
        }
        if (!ls.eof()) throw parse_error("space: bad token in line");
        if (!pts.empty()) lines.push_back(std::move(pts));
    }
    return validate(static_cast<Point>(n), std::move(lines));
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error("cannot write file: " + path);
    out << content;
}

inline PermGroup load_group(const std::string& path) { return parse_group(read_file(path)); }
inline LinearSpace load_space(const std::string& path) { return parse_space(read_file(path)); }
inline void save_group(const std::string& path, const PermGroup& g) { write_file(path, print_group(g)); }
inline void save_space(const std::string& path, const LinearSpace& s) { write_file(path, print_space(s)); }

} // namespace epls

#endif
