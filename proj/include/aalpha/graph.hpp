#ifndef AALPHA_GRAPH_HPP
#define AALPHA_GRAPH_HPP

// Weighted simple graphs over a fixed d1 x d2 vertex grid, their file format,
// and the combinatorial quantities the moment formulas are built from:
// weighted degrees, Frobenius norm, triangle weight sums, and the
// partial-transpose graph.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aalpha/matrix.hpp"

namespace aalpha {

struct Edge {
    std::size_t u;  // u < v always
    std::size_t v;
    double w;       // in (0, 1]; weight 0 means no edge at all

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Vertex i on the grid is the pair (a, b) = (i / d2, i % d2), the standard
// row-major composite index matching the Kronecker basis order.
class Graph {
public:
    Graph(std::size_t n, std::size_t d1, std::size_t d2, std::vector<Edge> edges)
        : n_(n), d1_(d1), d2_(d2), edges_(std::move(edges)) {
        if (n_ == 0 || d1_ * d2_ != n_) {
            throw std::invalid_argument("Graph: n must equal d1*d2 and be positive");
        }
        for (Edge& e : edges_) {
            if (e.u == e.v) throw std::invalid_argument("Graph: self-loop");
            if (e.u > e.v) std::swap(e.u, e.v);
            if (e.v >= n_) throw std::invalid_argument("Graph: vertex index out of range");
            if (!(e.w > 0.0) || e.w > 1.0 || !std::isfinite(e.w)) {
                throw std::invalid_argument("Graph: edge weight outside (0,1]");
            }
        }
        std::sort(edges_.begin(), edges_.end());
        for (std::size_t i = 1; i < edges_.size(); ++i) {
            if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v) {
                throw std::invalid_argument("Graph: duplicate edge");
            }
        }
    }

    std::size_t n() const { return n_; }
    std::size_t d1() const { return d1_; }
    std::size_t d2() const { return d2_; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool simple_unweighted() const {
        for (const Edge& e : edges_)
            if (e.w != 1.0) return false;
        return true;
    }

    // Same vertices and edges, re-read against a different bipartition.
    Graph with_partition(std::size_t d1, std::size_t d2) const {
        return Graph(n_, d1, d2, edges_);
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.d1_ == b.d1_ && a.d2_ == b.d2_ && a.edges_ == b.edges_;
    }

private:
    std::size_t n_, d1_, d2_;
    std::vector<Edge> edges_;  // sorted, normalized u < v
};

inline double weighted_degree(const Graph& g, std::size_t v) {
    if (v >= g.n()) throw std::out_of_range("weighted_degree: vertex index out of range");
    double d = 0.0;
    for (const Edge& e : g.edges())
        if (e.u == v || e.v == v) d += e.w;
    return d;
}

inline std::vector<double> weighted_degrees(const Graph& g) {
    std::vector<double> d(g.n(), 0.0);
    for (const Edge& e : g.edges()) {
        d[e.u] += e.w;
        d[e.v] += e.w;
    }
    return d;
}

// d_G = sum of all weighted degrees = twice the total edge weight.
inline double total_degree(const Graph& g) {
    double s = 0.0;
    for (const Edge& e : g.edges()) s += e.w;
    return 2.0 * s;
}

inline SymMatrix adjacency_matrix(const Graph& g) {
    SymMatrix a(g.n());
    for (const Edge& e : g.edges()) a.set(e.u, e.v, e.w);
    return a;
}

inline SymMatrix degree_matrix(const Graph& g) {
    SymMatrix d(g.n());
    const std::vector<double> deg = weighted_degrees(g);
    for (std::size_t i = 0; i < g.n(); ++i) d.set(i, i, deg[i]);
    return d;
}

// ||A_G||_F^2 = 2 * sum of squared edge weights (2|E| for unit weights).
inline double frobenius_norm_sq(const Graph& g) {
    double s = 0.0;
    for (const Edge& e : g.edges()) s += e.w * e.w;
    return 2.0 * s;
}

// Every cross edge (v_ik, v_jl) with i != j and k != l moves to (v_il, v_jk),
// weight unchanged; row and column edges stay put. A mirror pair of cross
// edges swaps weights, which is exactly what the matrix-level block transpose
// does, so the image is always again a simple graph.
inline Graph partial_transpose_graph(const Graph& g) {
    const std::size_t d2 = g.d2();
    std::vector<Edge> out;
    out.reserve(g.edges().size());
    for (const Edge& e : g.edges()) {
        const std::size_t i = e.u / d2, k = e.u % d2;
        const std::size_t j = e.v / d2, l = e.v % d2;
        if (i != j && k != l) {
            std::size_t a = i * d2 + l, b = j * d2 + k;
            if (a > b) std::swap(a, b);
            out.push_back({a, b, e.w});
        } else {
            out.push_back(e);
        }
    }
    std::sort(out.begin(), out.end());
    for (std::size_t i = 1; i < out.size(); ++i) {
        if (out[i].u == out[i - 1].u && out[i].v == out[i - 1].v) {
            // Unreachable under the swap semantics; kept as a guard.
            throw std::logic_error("partial_transpose_graph: edge collision");
        }
    }
    return Graph(g.n(), g.d1(), g.d2(), std::move(out));
}

// Sum over unordered triples of the product of the three edge weights.
inline double triangle_weight_sum(const Graph& g) {
    const std::size_t n = g.n();
    std::vector<double> w(n * n, 0.0);
    for (const Edge& e : g.edges()) {
        w[e.u * n + e.v] = e.w;
        w[e.v * n + e.u] = e.w;
    }
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (w[i * n + j] == 0.0) continue;
            for (std::size_t k = j + 1; k < n; ++k)
                s += w[i * n + j] * w[j * n + k] * w[k * n + i];
        }
    return s;
}

// Sum over edges (v_ik, v_jl) of (d_{v_il} + d_{v_jk}) * w^2, degrees taken
// in g itself. Equals trace(D * (A^{T_B})^2).
inline double sum_swapped_degree_weighted(const Graph& g) {
    const std::size_t d2 = g.d2();
    const std::vector<double> deg = weighted_degrees(g);
    double s = 0.0;
    for (const Edge& e : g.edges()) {
        const std::size_t i = e.u / d2, k = e.u % d2;
        const std::size_t j = e.v / d2, l = e.v % d2;
        s += (deg[i * d2 + l] + deg[j * d2 + k]) * e.w * e.w;
    }
    return s;
}

inline bool is_connected(const Graph& g) {
    const std::size_t n = g.n();
    if (n == 1) return true;
    std::vector<std::vector<std::size_t>> adj(n);
    for (const Edge& e : g.edges()) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        const std::size_t u = stack.back();
        stack.pop_back();
        for (std::size_t v : adj[u])
            if (!seen[v]) {
                seen[v] = true;
                ++count;
                stack.push_back(v);
            }
    }
    return count == n;
}

// Triangle weight sum of the partial-transpose graph. A connected transpose
// with at most n-1 edges is a tree, hence triangle-free, and skips the
// enumeration.
inline double transpose_triangle_weight_sum(const Graph& g) {
    const Graph t = partial_transpose_graph(g);
    if (t.edges().size() + 1 <= t.n() && is_connected(t)) return 0.0;
    return triangle_weight_sum(t);
}

// ------------------------------------------------------------------ parsing

namespace detail {

// Accepts a plain decimal or a fraction "p/q".
inline std::optional<double> parse_weight(const std::string& tok) {
    const auto slash = tok.find('/');
    try {
        std::size_t used = 0;
        if (slash == std::string::npos) {
            const double w = std::stod(tok, &used);
            if (used != tok.size()) return std::nullopt;
            return w;
        }
        const std::string ps = tok.substr(0, slash), qs = tok.substr(slash + 1);
        if (ps.empty() || qs.empty()) return std::nullopt;
        const long long p = std::stoll(ps, &used);
        if (used != ps.size()) return std::nullopt;
        const long long q = std::stoll(qs, &used);
        if (used != qs.size() || q == 0) return std::nullopt;
        return static_cast<double>(p) / static_cast<double>(q);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

inline std::optional<std::size_t> parse_index(const std::string& tok) {
    if (tok.empty() || tok[0] == '-') return std::nullopt;
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(tok, &used);
        if (used != tok.size()) return std::nullopt;
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

// Smallest fraction p/q, q <= 10^6, that reproduces x bit-exactly; found by
// walking the continued-fraction convergents.
inline std::optional<std::pair<long long, long long>> exact_fraction(double x) {
    if (!(x > 0.0) || x > 1.0) return std::nullopt;
    long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double r = x;
    for (int it = 0; it < 64; ++it) {
        const double fl = std::floor(r);
        if (fl > 1e15) break;
        const long long a = static_cast<long long>(fl);
        if (q1 >= 1 && a > 1000000) break;  // q2 would exceed the cap; avoid overflow
        const long long p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > 1000000 || q2 <= 0) break;
        if (q2 > 0 && static_cast<double>(p2) / static_cast<double>(q2) == x) {
            return std::make_pair(p2, q2);
        }
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        const double frac = r - fl;
        if (frac == 0.0) break;
        r = 1.0 / frac;
    }
    return std::nullopt;
}

inline std::string format_weight(double w) {
    if (const auto f = exact_fraction(w)) {
        if (f->second == 1) return std::to_string(f->first);
        return std::to_string(f->first) + "/" + std::to_string(f->second);
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", w);
    return buf;
}

}  // namespace detail

// Line-oriented format: '#' comment lines, a "graph <n> <d1> <d2>" header,
// then "edge <u> <v> <w>" lines with w a decimal or a fraction in (0,1].
inline Graph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;

    std::size_t n = 0, d1 = 0, d2 = 0;
    bool have_header = false;
    std::vector<Edge> edges;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;  // edge -> line

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#') continue;

        if (!have_header) {
            if (tag != "graph") throw ParseError(lineno, "expected 'graph <n> <d1> <d2>' header");
            std::string ns, d1s, d2s, extra;
            if (!(ls >> ns >> d1s >> d2s) || (ls >> extra)) {
                throw ParseError(lineno, "malformed graph header");
            }
            const auto nn = detail::parse_index(ns);
            const auto v1 = detail::parse_index(d1s);
            const auto v2 = detail::parse_index(d2s);
            if (!nn || !v1 || !v2) throw ParseError(lineno, "malformed graph header");
            n = *nn; d1 = *v1; d2 = *v2;
            if (n == 0 || d1 * d2 != n) {
                throw ParseError(lineno, "n must equal d1*d2 (got n=" + std::to_string(n) +
                                             ", d1*d2=" + std::to_string(d1 * d2) + ")");
            }
            have_header = true;
            continue;
        }

        if (tag != "edge") throw ParseError(lineno, "expected 'edge <u> <v> <w>' line");
        std::string us, vs, ws, extra;
        if (!(ls >> us >> vs >> ws) || (ls >> extra)) throw ParseError(lineno, "malformed edge line");
        const auto u = detail::parse_index(us);
        const auto v = detail::parse_index(vs);
        if (!u || !v) throw ParseError(lineno, "malformed edge line");
        if (*u >= n || *v >= n) throw ParseError(lineno, "vertex index out of range [0," + std::to_string(n) + ")");
        if (*u == *v) throw ParseError(lineno, "self-loop");
        const auto w = detail::parse_weight(ws);
        if (!w) throw ParseError(lineno, "malformed edge weight");
        if (!(*w > 0.0) || *w > 1.0 || !std::isfinite(*w)) {
            throw ParseError(lineno, "edge weight outside (0,1]");
        }
        const std::pair<std::size_t, std::size_t> key = std::minmax(*u, *v);
        if (const auto it = seen.find(key); it != seen.end()) {
            throw ParseError(lineno, "duplicate edge (first at line " + std::to_string(it->second) + ")");
        }
        seen.emplace(key, lineno);
        edges.push_back({key.first, key.second, *w});
    }
    if (!have_header) throw ParseError(lineno == 0 ? 1 : lineno, "missing 'graph' header");
    return Graph(n, d1, d2, std::move(edges));
}

// Weights come back out as exact fractions when one exists, otherwise as
// 12-significant-digit decimals; either way the text reparses to an equal
// graph.
inline std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "graph " << g.n() << " " << g.d1() << " " << g.d2() << "\n";
    for (const Edge& e : g.edges()) {
        out << "edge " << e.u << " " << e.v << " " << detail::format_weight(e.w) << "\n";
    }
    return out.str();
}

// --------------------------------------------------------------- generators

enum class FamilyKind { complete, path, cycle, random };

struct GraphFamily {
    FamilyKind kind;
    std::size_t n;
    std::uint64_t seed = 0;  // random family only
};

inline std::optional<FamilyKind> family_from_name(std::string_view name) {
    if (name == "complete") return FamilyKind::complete;
    if (name == "path") return FamilyKind::path;
    if (name == "cycle") return FamilyKind::cycle;
    if (name == "random") return FamilyKind::random;
    return std::nullopt;
}

// Each edge kept with probability `density`, weight uniform on
// {k/100 : k = 1..100}. Raw mt19937_64 draws with modulo reduction keep the
// sequence identical across platforms.
inline Graph random_graph(std::size_t n, std::size_t d1, std::size_t d2, std::uint64_t seed,
                          double density = 0.5) {
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            const double coin = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            const double weight = static_cast<double>(1 + rng() % 100) / 100.0;
            if (coin < density) edges.push_back({u, v, weight});
        }
    }
    return Graph(n, d1, d2, std::move(edges));
}

inline Graph generate_family(const GraphFamily& f, std::size_t d1, std::size_t d2) {
    if (f.n < 2) throw std::invalid_argument("generate_family: n must be at least 2");
    if (d1 * d2 != f.n) throw std::invalid_argument("generate_family: n != d1*d2");
    std::vector<Edge> edges;
    switch (f.kind) {
        case FamilyKind::complete:
            for (std::size_t u = 0; u < f.n; ++u)
                for (std::size_t v = u + 1; v < f.n; ++v) edges.push_back({u, v, 1.0});
            break;
        case FamilyKind::path:
            for (std::size_t u = 0; u + 1 < f.n; ++u) edges.push_back({u, u + 1, 1.0});
            break;
        case FamilyKind::cycle:
            for (std::size_t u = 0; u + 1 < f.n; ++u) edges.push_back({u, u + 1, 1.0});
            edges.push_back({0, f.n - 1, 1.0});
            break;
        case FamilyKind::random:
            return random_graph(f.n, d1, d2, f.seed);
    }
    return Graph(f.n, d1, d2, std::move(edges));
}

}  // namespace aalpha

#endif  // AALPHA_GRAPH_HPP
