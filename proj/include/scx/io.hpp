#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "scx/complex.hpp"
#include "scx/graph.hpp"

namespace scx {

/// Malformed input text; carries the 1-based line number.
class ParseError : public std::invalid_argument {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::invalid_argument("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

namespace detail {

inline bool parse_index(const std::string& tok, unsigned long long& out)
{
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) return false;
    try {
        out = std::stoull(tok);
    } catch (const std::out_of_range&) {
        return false;
    }
    return out <= 0xffffffffULL;
}

inline std::vector<std::string> tokens(const std::string& line)
{
    std::istringstream is(line);
    std::vector<std::string> out;
    for (std::string t; is >> t;) out.push_back(t);
    return out;
}

inline bool blank(const std::string& line) { return line.find_first_not_of(" \t\r") == std::string::npos; }

} // namespace detail

/// Edge-list format: "n m" then m lines "u v", 0-based. Blank lines are skipped.
inline Graph read_edge_list(std::istream& in)
{
    std::string line;
    std::size_t lineno = 0;
    auto next = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (!detail::blank(line)) return true;
        }
        return false;
    };
    if (!next()) throw ParseError(lineno + 1, "missing header \"n m\"");
    auto head = detail::tokens(line);
    unsigned long long n = 0, m = 0;
    if (head.size() != 2 || !detail::parse_index(head[0], n) || !detail::parse_index(head[1], m))
        throw ParseError(lineno, "expected header \"n m\"");
    std::vector<Edge> edges;
    edges.reserve(m);
    for (unsigned long long i = 0; i < m; ++i) {
        if (!next()) throw ParseError(lineno + 1, "expected " + std::to_string(m) + " edges, found " + std::to_string(i));
        auto t = detail::tokens(line);
        unsigned long long u = 0, v = 0;
        if (t.size() != 2 || !detail::parse_index(t[0], u) || !detail::parse_index(t[1], v))
            throw ParseError(lineno, "expected \"u v\"");
        if (u >= n || v >= n) throw ParseError(lineno, "vertex out of range for n = " + std::to_string(n));
        if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (next()) throw ParseError(lineno, "trailing content after " + std::to_string(m) + " edges");
    return Graph::from_edges(n, edges);
}

inline void write_edge_list(std::ostream& out, const Graph& g)
{
    const auto e = g.edges();
    out << g.order() << ' ' << e.size() << '\n';
    for (auto [u, v] : e) out << u << ' ' << v << '\n';
}

/// Face-list format: one face per line as whitespace-separated vertex ids.
/// The ambient vertex count is one past the largest id; closure is taken on load.
inline SimplicialComplex read_face_list(std::istream& in)
{
    std::vector<Simplex> faces;
    std::size_t n = 0;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::blank(line) || line.find_first_not_of(" \t") == line.find('#')) continue;
        std::vector<Vertex> vs;
        for (const auto& t : detail::tokens(line)) {
            unsigned long long v = 0;
            if (!detail::parse_index(t, v)) throw ParseError(lineno, "bad vertex id \"" + t + "\"");
            vs.push_back(static_cast<Vertex>(v));
            n = std::max<std::size_t>(n, v + 1);
        }
        try {
            faces.push_back(Simplex::canonical(std::move(vs)));
        } catch (const std::invalid_argument& e) {
            throw ParseError(lineno, e.what());
        }
        if (faces.back().size() > 30) throw ParseError(lineno, "face has more than 30 vertices");
    }
    return SimplicialComplex::from_faces(n, faces);
}

/// Writes every face, dimension by dimension, in canonical order.
inline void write_face_list(std::ostream& out, const SimplicialComplex& x)
{
    for (int d = 0; d <= x.top_dim(); ++d)
        for (const Simplex& s : x.faces(d)) {
            for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
            out << '\n';
        }
}

inline std::ifstream open_input(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return in;
}

} // namespace scx
