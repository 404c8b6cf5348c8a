#ifndef AALPHA_STATE_HPP
#define AALPHA_STATE_HPP

// The alpha-mixed graph state rho = (1/(alpha*d_G)) * (alpha*D + (1-alpha)*A),
// its positivity interval in alpha, and the second and third moments of its
// partial transpose, computed both from the graph formulas and from the
// materialized matrix.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "aalpha/graph.hpp"
#include "aalpha/matrix.hpp"

namespace aalpha {

struct AlphaState {
    Graph graph;
    double alpha;
    double beta;  // (1 - alpha) / alpha
    SymMatrix rho;
    std::size_t d1, d2;
};

inline void require_stateable(const Graph& g, double alpha) {
    if (g.edges().empty()) {
        throw std::domain_error("graph has no edges (d_G = 0)");
    }
    if (!(alpha > 0.0) || alpha > 1.0 || !std::isfinite(alpha)) {
        throw std::domain_error("alpha must lie in (0,1]");
    }
}

// rho = (1/d_G) * (D + beta * A); unit trace by construction, diagonal
// entries d_v / d_G. Positivity is a separate question.
inline AlphaState build_state(const Graph& g, double alpha) {
    require_stateable(g, alpha);
    const double beta = (1.0 - alpha) / alpha;
    const double dg = total_degree(g);
    SymMatrix rho(g.n());
    const std::vector<double> deg = weighted_degrees(g);
    for (std::size_t i = 0; i < g.n(); ++i) rho.set(i, i, deg[i] / dg);
    for (const Edge& e : g.edges()) rho.set(e.u, e.v, beta * e.w / dg);
    return AlphaState{g, alpha, beta, std::move(rho), g.d1(), g.d2()};
}

// Sufficient positivity bound from eigenvalue perturbation:
// alpha0 = lambda_min(A) / (lambda_min(A) - delta), delta the minimum
// weighted degree. With an isolated vertex (delta = 0) the bound degenerates
// to 1.
inline double weyl_validity_threshold(const Graph& g) {
    if (g.edges().empty()) throw std::domain_error("graph has no edges (d_G = 0)");
    const double lam = min_eigenvalue(adjacency_matrix(g));
    double delta = weighted_degree(g, 0);
    for (std::size_t v = 1; v < g.n(); ++v) delta = std::min(delta, weighted_degree(g, v));
    if (lam >= 0.0) return 0.0;  // cannot happen for a nonempty zero-trace adjacency
    if (delta == 0.0) return 1.0;
    return lam / (lam - delta);
}

// Smallest alpha* with rho PSD on [alpha*, 1]. lambda_min(D + beta*A) is
// concave in beta and nonnegative at beta = 0, so the PSD region in beta is
// a single interval [0, beta*]; bisect for the crossing.
inline double exact_validity_threshold(const Graph& g, double tol = 1e-12) {
    if (g.edges().empty()) throw std::domain_error("graph has no edges (d_G = 0)");
    const SymMatrix a = adjacency_matrix(g);
    const SymMatrix d = degree_matrix(g);
    const std::size_t n = g.n();
    auto lmin = [&](double beta) {
        SymMatrix m(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) m.set(i, j, d(i, j) + beta * a(i, j));
        return min_eigenvalue(m);
    };

    const double w = weyl_validity_threshold(g);
    const double beta_weyl = (1.0 - w) / w;
    double lo = 0.0;
    double hi = 4.0 * std::max(beta_weyl, 1.0);
    while (lmin(hi) >= 0.0) {
        hi *= 2.0;
        if (hi > 1e12) return 0.0;
    }
    for (int it = 0; it < 200 && hi - lo > tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        (lmin(mid) >= 0.0 ? lo : hi) = mid;
    }
    const double beta_star = 0.5 * (lo + hi);
    return 1.0 / (1.0 + beta_star);
}

struct ValidityInterval {
    double alpha_weyl;
    double alpha_exact;
    bool isolated_vertex;  // delta = 0, so the Weyl bound carries no information
};

inline ValidityInterval validity_interval(const Graph& g, double tol = 1e-12) {
    double delta = weighted_degree(g, 0);
    for (std::size_t v = 1; v < g.n(); ++v) delta = std::min(delta, weighted_degree(g, v));
    return ValidityInterval{weyl_validity_threshold(g), exact_validity_threshold(g, tol),
                            delta == 0.0};
}

// p2 of the partially transposed state, in graph terms:
// (sum d_v^2 + beta^2 ||A||_F^2) / d_G^2.
inline double p2_graph(const Graph& g, double alpha) {
    require_stateable(g, alpha);
    const double beta = (1.0 - alpha) / alpha;
    const double dg = total_degree(g);
    double sum_d2 = 0.0;
    for (double dv : weighted_degrees(g)) sum_d2 += dv * dv;
    return (sum_d2 + beta * beta * frobenius_norm_sq(g)) / (dg * dg);
}

// p3 in graph terms: (sum d_v^3 + 3 beta^2 * swapped-degree sum +
// 6 beta^3 * triangle weight sum of the partial-transpose graph) / d_G^3.
inline double p3_graph(const Graph& g, double alpha) {
    require_stateable(g, alpha);
    const double beta = (1.0 - alpha) / alpha;
    const double dg = total_degree(g);
    double sum_d3 = 0.0;
    for (double dv : weighted_degrees(g)) sum_d3 += dv * dv * dv;
    const double swapped = sum_swapped_degree_weighted(g);
    const double triangles = transpose_triangle_weight_sum(g);
    return (sum_d3 + 3.0 * beta * beta * swapped + 6.0 * beta * beta * beta * triangles) /
           (dg * dg * dg);
}

inline double p2_direct(const AlphaState& s) {
    return trace_power(partial_transpose_matrix(s.rho, s.d1, s.d2), 2);
}

inline double p3_direct(const AlphaState& s) {
    return trace_power(partial_transpose_matrix(s.rho, s.d1, s.d2), 3);
}

}  // namespace aalpha

#endif  // AALPHA_STATE_HPP
