#ifndef AALPHA_TESTS_HELPERS_HPP
#define AALPHA_TESTS_HELPERS_HPP

// Test-only oracles and the seeded random-graph corpus. The dense-matrix
// routines here are deliberately independent of SymMatrix so the graph
// formulas and the library's matrix path can be checked against a third
// route.

#include <cstdint>
#include <cstddef>
#include <vector>

#include "aalpha/graph.hpp"

namespace testutil {

using Dense = std::vector<std::vector<double>>;

inline Dense dense_zero(std::size_t n) { return Dense(n, std::vector<double>(n, 0.0)); }

inline Dense dense_adjacency(const aalpha::Graph& g) {
    Dense a = dense_zero(g.n());
    for (const aalpha::Edge& e : g.edges()) {
        a[e.u][e.v] = e.w;
        a[e.v][e.u] = e.w;
    }
    return a;
}

inline Dense dense_degree(const aalpha::Graph& g) {
    Dense d = dense_zero(g.n());
    for (const aalpha::Edge& e : g.edges()) {
        d[e.u][e.u] += e.w;
        d[e.v][e.v] += e.w;
    }
    return d;
}

inline Dense dense_partial_transpose(const Dense& m, std::size_t d1, std::size_t d2) {
    Dense out = dense_zero(d1 * d2);
    for (std::size_t i = 0; i < d1; ++i)
        for (std::size_t j = 0; j < d1; ++j)
            for (std::size_t k = 0; k < d2; ++k)
                for (std::size_t l = 0; l < d2; ++l)
                    out[i * d2 + k][j * d2 + l] = m[i * d2 + l][j * d2 + k];
    return out;
}

inline Dense dense_mul(const Dense& a, const Dense& b) {
    const std::size_t n = a.size();
    Dense c = dense_zero(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

inline double dense_trace(const Dense& a) {
    double t = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
    return t;
}

// 210 seeded weighted graphs over the 2x2, 2x3 and 3x3 shapes with edge
// densities 0.2 .. 0.8; empty draws are re-seeded so every slot is filled.
inline const std::vector<aalpha::Graph>& corpus() {
    static const std::vector<aalpha::Graph> graphs = [] {
        std::vector<aalpha::Graph> gs;
        const std::pair<std::size_t, std::size_t> shapes[] = {{2, 2}, {2, 3}, {3, 3}};
        const double densities[] = {0.2, 0.35, 0.5, 0.65, 0.8};
        std::uint64_t seed = 1;
        for (int rep = 0; rep < 14; ++rep) {
            for (const auto& [d1, d2] : shapes) {
                for (double dens : densities) {
                    aalpha::Graph g = aalpha::random_graph(d1 * d2, d1, d2, seed++, dens);
                    while (g.edges().empty()) g = aalpha::random_graph(d1 * d2, d1, d2, seed++, dens);
                    gs.push_back(std::move(g));
                }
            }
        }
        return gs;
    }();
    return graphs;
}

inline const std::vector<double>& alpha_grid10() {
    static const std::vector<double> grid = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
    return grid;
}

}  // namespace testutil

#endif  // AALPHA_TESTS_HELPERS_HPP
