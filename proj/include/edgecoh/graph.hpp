#pragma once

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vset.hpp"

namespace edgecoh {

// Raised for malformed graph input (edge list or graph6). The CLI maps it to exit code 2.
class parse_error : public std::runtime_error {
  public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a structural invariant that should be unbreakable fails. Exit code 3.
class internal_error : public std::logic_error {
  public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

/// Finite simple graph on vertices 1..n, n <= 64.
/// Edges are stored as (u,v) with u < v, sorted and duplicate free; adj[v-1] is the
/// neighbour set of v.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<Vset> adj;
};

inline Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 1) throw parse_error("graph: vertex count must be at least 1");
    if (n > 64) throw parse_error("graph: vertex count exceeds the supported maximum of 64");
    Graph g;
    g.n = n;
    g.adj.assign(static_cast<std::size_t>(n), Vset());
    for (auto& [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n)
            throw parse_error("graph: vertex index out of range");
        if (u == v) throw parse_error("graph: loop edges are not allowed");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (edges[i] == edges[i - 1]) throw parse_error("graph: duplicate edge");
    for (auto [u, v] : edges) {
        g.adj[static_cast<std::size_t>(u) - 1].add(v);
        g.adj[static_cast<std::size_t>(v) - 1].add(u);
    }
    g.edges = std::move(edges);
    return g;
}

namespace detail {

inline std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

inline bool blank(const std::string& s) {
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

}  // namespace detail

/// Parses the edge-list format: first line n, then one "u v" line per edge (1-based).
inline Graph parse_edge_list(const std::string& text) {
    auto lines = detail::split_lines(text);
    std::size_t i = 0;
    while (i < lines.size() && detail::blank(lines[i])) ++i;
    if (i == lines.size()) throw parse_error("edge list: empty input");
    long n = 0;
    {
        std::istringstream in(lines[i]);
        std::string extra;
        if (!(in >> n) || (in >> extra))
            throw parse_error("edge list: first line must be the vertex count");
    }
    if (n < 1 || n > 64) throw parse_error("edge list: vertex count out of range (1..64)");
    std::vector<std::pair<int, int>> edges;
    for (++i; i < lines.size(); ++i) {
        if (detail::blank(lines[i])) continue;
        std::istringstream in(lines[i]);
        long u = 0, v = 0;
        std::string extra;
        if (!(in >> u >> v) || (in >> extra))
            throw parse_error("edge list: malformed edge line \"" + lines[i] + "\"");
        if (u < 1 || u > n || v < 1 || v > n)
            throw parse_error("edge list: vertex index out of range on line \"" + lines[i] + "\"");
        if (u == v) throw parse_error("edge list: loop edge on line \"" + lines[i] + "\"");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    std::vector<std::pair<int, int>> norm = edges;
    for (auto& [u, v] : norm)
        if (u > v) std::swap(u, v);
    std::sort(norm.begin(), norm.end());
    for (std::size_t k = 1; k < norm.size(); ++k)
        if (norm[k] == norm[k - 1]) throw parse_error("edge list: duplicate edge");
    return make_graph(static_cast<int>(n), std::move(edges));
}

/// Parses one graph in graph6 format (optionally prefixed with ">>graph6<<").
inline Graph parse_graph6(const std::string& line_in) {
    std::string line = line_in;
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' '))
        line.pop_back();
    const std::string header = ">>graph6<<";
    if (line.rfind(header, 0) == 0) line = line.substr(header.size());
    if (line.empty()) throw parse_error("graph6: empty input");
    for (char c : line)
        if (c < 63 || c > 126) throw parse_error("graph6: invalid character");
    std::size_t pos = 0;
    long n = 0;
    if (line[0] == 126) {
        // Extended vertex counts always exceed the 64-vertex cap; decode just to report it.
        if (line.size() >= 2 && line[1] == 126) {
            if (line.size() < 8) throw parse_error("graph6: truncated vertex count");
            pos = 8;
        } else {
            if (line.size() < 4) throw parse_error("graph6: truncated vertex count");
            pos = 4;
        }
        throw parse_error("graph6: vertex count exceeds the supported maximum of 64");
    }
    n = line[0] - 63;
    pos = 1;
    if (n < 1 || n > 64) throw parse_error("graph6: vertex count out of range (1..64)");
    const long nbits = n * (n - 1) / 2;
    const std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
    if (line.size() - pos < nbytes) throw parse_error("graph6: truncated data");
    if (line.size() - pos > nbytes) throw parse_error("graph6: trailing data");
    std::vector<std::pair<int, int>> edges;
    long k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            int byte = line[pos + static_cast<std::size_t>(k / 6)] - 63;
            if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i + 1, j + 1);
        }
    }
    for (; k < static_cast<long>(nbytes) * 6; ++k) {
        int byte = line[pos + static_cast<std::size_t>(k / 6)] - 63;
        if ((byte >> (5 - k % 6)) & 1) throw parse_error("graph6: nonzero padding bits");
    }
    return make_graph(static_cast<int>(n), std::move(edges));
}

/// Inverse of parse_graph6 for the supported range n <= 62.
inline std::string encode_graph6(const Graph& g) {
    if (g.n > 62) throw std::invalid_argument("graph6 encoding: supported only for n <= 62");
    std::string out(1, static_cast<char>(63 + g.n));
    const long nbits = static_cast<long>(g.n) * (g.n - 1) / 2;
    std::vector<int> bits(static_cast<std::size_t>((nbits + 5) / 6 * 6), 0);
    long k = 0;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if (g.adj[static_cast<std::size_t>(i)].contains(j + 1)) bits[static_cast<std::size_t>(k)] = 1;
    for (std::size_t b = 0; b < bits.size(); b += 6) {
        int byte = 0;
        for (int t = 0; t < 6; ++t) byte = byte * 2 + bits[b + static_cast<std::size_t>(t)];
        out.push_back(static_cast<char>(63 + byte));
    }
    return out;
}

/// Accepts either input format. A first nonblank line made of digits selects the
/// edge-list reader (graph6 bytes are all >= '?'), anything else is decoded as graph6.
inline Graph parse_graph(const std::string& text) {
    auto lines = detail::split_lines(text);
    std::size_t first = 0;
    while (first < lines.size() && detail::blank(lines[first])) ++first;
    if (first == lines.size()) throw parse_error("graph: empty input");
    const std::string& head = lines[first];
    bool digits = true;
    for (char c : head)
        if (!std::isdigit(static_cast<unsigned char>(c)) && !std::isspace(static_cast<unsigned char>(c)))
            digits = false;
    if (digits) return parse_edge_list(text);
    for (std::size_t i = first + 1; i < lines.size(); ++i)
        if (!detail::blank(lines[i])) throw parse_error("graph6: expected a single line");
    return parse_graph6(head);
}

/// Connected components of the subgraph induced on verts, listed by smallest vertex.
inline std::vector<Vset> components_within(const std::vector<Vset>& adj, Vset verts) {
    std::vector<Vset> out;
    std::uint64_t rest = verts.bits;
    while (rest) {
        std::uint64_t comp = rest & ~(rest - 1);
        for (;;) {
            std::uint64_t grow = comp;
            for (std::uint64_t m = comp; m; m &= m - 1)
                grow |= adj[static_cast<std::size_t>(std::countr_zero(m))].bits;
            grow &= verts.bits;
            if (grow == comp) break;
            comp = grow;
        }
        out.push_back(Vset(comp));
        rest &= ~comp;
    }
    return out;
}

/// Components of G minus s, listed by smallest vertex. Deleting everything yields {}.
inline std::vector<Vset> components_after_deletion(const Graph& g, Vset s) {
    return components_within(g.adj, Vset::full(g.n) - s);
}

inline bool is_connected(const Graph& g) {
    return components_after_deletion(g, Vset()).size() == 1;
}

namespace detail {

// Supports S inside verts with S empty or c(S - i) < c(S) for all i in S, the
// cut-point criterion selecting the minimal primes P_S. Sorted by (|S|, lex).
inline std::vector<Vset> minimal_prime_supports_within(const std::vector<Vset>& adj, Vset verts) {
    if (verts.count() > 20)
        throw std::invalid_argument("minimal_prime_supports: supported only for at most 20 vertices");
    std::vector<Vset> out;
    const std::uint64_t ground = verts.bits;
    std::uint64_t s = 0;
    do {
        bool ok = true;
        if (s != 0) {
            std::size_t c = components_within(adj, Vset(ground & ~s)).size();
            for (std::uint64_t m = s; m && ok; m &= m - 1) {
                std::uint64_t without = s & ~(m & ~(m - 1));
                if (components_within(adj, Vset(ground & ~without)).size() >= c) ok = false;
            }
        }
        if (ok) out.push_back(Vset(s));
        s = (s - ground) & ground;  // next subset of ground
    } while (s != 0);
    std::sort(out.begin(), out.end(), size_lex_less);
    return out;
}

}  // namespace detail

/// Supports of the minimal primes of the binomial edge ideal of a connected graph.
inline std::vector<Vset> minimal_prime_supports(const Graph& g) {
    if (!is_connected(g))
        throw std::invalid_argument("minimal_prime_supports: graph must be connected");
    return detail::minimal_prime_supports_within(g.adj, Vset::full(g.n));
}

/// Simple path with endpoints i < j and the interior vertices in traversal order
/// starting from i. Single edges have an empty interior.
struct SimplePath {
    int i = 0, j = 0;
    std::vector<int> interior;

    friend bool operator==(const SimplePath&, const SimplePath&) = default;
};

/// Every simple path of g on at least two vertices, each reported once, oriented
/// from its smaller endpoint, ordered by (i, j, interior lexicographic).
inline std::vector<SimplePath> simple_paths(const Graph& g) {
    std::vector<SimplePath> out;
    std::vector<int> stack;
    Vset visited;
    auto dfs = [&](auto&& self, int start, int v) -> void {
        for_each_vertex(g.adj[static_cast<std::size_t>(v) - 1], [&](int w) {
            if (visited.contains(w)) return;
            if (w > start)
                out.push_back({start, w, std::vector<int>(stack.begin() + 1, stack.end())});
            visited.add(w);
            stack.push_back(w);
            self(self, start, w);
            stack.pop_back();
            visited.remove(w);
        });
    };
    for (int s = 1; s <= g.n; ++s) {
        visited = Vset::single(s);
        stack.assign(1, s);
        dfs(dfs, s, s);
    }
    std::sort(out.begin(), out.end(), [](const SimplePath& a, const SimplePath& b) {
        if (a.i != b.i) return a.i < b.i;
        if (a.j != b.j) return a.j < b.j;
        return a.interior < b.interior;
    });
    return out;
}

}  // namespace edgecoh
