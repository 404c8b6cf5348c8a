#ifndef AALPHA_CRITERIA_HPP
#define AALPHA_CRITERIA_HPP

// Entanglement/PPT classifiers for alpha-mixed graph states. Three are
// sufficient-only PPT certificates (Frobenius-norm bound, its second-moment
// primitive, and the alpha threshold for unweighted graphs), one certifies
// entanglement from moments alone (p3-PPT), and one is the exact
// Peres-Horodecki check on the materialized partial transpose. A sweep
// engine maps verdicts over an alpha grid and extracts outcome intervals.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "aalpha/graph.hpp"
#include "aalpha/matrix.hpp"
#include "aalpha/state.hpp"

namespace aalpha {

enum class Criterion {
    frobenius_ppt,
    alpha_threshold,
    p3_ppt,
    peres_horodecki,
    second_moment_ppt,
};

inline constexpr Criterion kAllCriteria[] = {
    Criterion::frobenius_ppt, Criterion::alpha_threshold, Criterion::p3_ppt,
    Criterion::peres_horodecki, Criterion::second_moment_ppt,
};

enum class Outcome { ppt_certified, entangled_certified, inconclusive };

inline std::string to_string(Criterion c) {
    switch (c) {
        case Criterion::frobenius_ppt: return "frobenius_ppt";
        case Criterion::alpha_threshold: return "alpha_threshold";
        case Criterion::p3_ppt: return "p3_ppt";
        case Criterion::peres_horodecki: return "peres_horodecki";
        case Criterion::second_moment_ppt: return "second_moment_ppt";
    }
    return "?";
}

inline std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::ppt_certified: return "ppt_certified";
        case Outcome::entangled_certified: return "entangled_certified";
        case Outcome::inconclusive: return "inconclusive";
    }
    return "?";
}

struct CriterionVerdict {
    Criterion criterion;
    Outcome outcome;
    double lhs;
    double rhs;
    double alpha;
    bool state_valid = true;  // caller-supplied; false marks a not-a-state alpha
};

// PPT iff ||A||_F^2 <= (alpha/(1-alpha))^2 [d_G^2/(d1 d2 - 1) - sum d_v^2].
// At alpha = 1 the ratio diverges and rho is diagonal, hence certified.
// Violation certifies nothing on its own.
inline CriterionVerdict frobenius_ppt_test(const Graph& g, double alpha) {
    require_stateable(g, alpha);
    if (g.n() <= 1) throw std::invalid_argument("frobenius_ppt_test: d1*d2 must exceed 1");
    const double lhs = frobenius_norm_sq(g);
    double rhs;
    if (alpha == 1.0) {
        rhs = std::numeric_limits<double>::infinity();
    } else {
        const double dg = total_degree(g);
        double sum_d2 = 0.0;
        for (double dv : weighted_degrees(g)) sum_d2 += dv * dv;
        const double ratio = alpha / (1.0 - alpha);
        rhs = ratio * ratio * (dg * dg / static_cast<double>(g.n() - 1) - sum_d2);
    }
    const Outcome o = lhs <= rhs ? Outcome::ppt_certified : Outcome::inconclusive;
    return {Criterion::frobenius_ppt, o, lhs, rhs, alpha};
}

// For unweighted graphs only: every alpha at or above
// 1 / (1 + sqrt(d_G/(d1 d2 - 1) - sum d_v^2 / d_G)) is PPT-certified.
// A negative radicand means the bound says nothing.
inline std::optional<double> alpha_threshold_simple(const Graph& g) {
    if (!g.simple_unweighted()) {
        throw std::invalid_argument("alpha_threshold_simple: graph must have unit weights");
    }
    if (g.edges().empty()) throw std::domain_error("graph has no edges (d_G = 0)");
    if (g.n() <= 1) throw std::invalid_argument("alpha_threshold_simple: d1*d2 must exceed 1");
    const double dg = total_degree(g);
    double sum_d2 = 0.0;
    for (double dv : weighted_degrees(g)) sum_d2 += dv * dv;
    const double radicand = dg / static_cast<double>(g.n() - 1) - sum_d2 / dg;
    if (radicand < 0.0) return std::nullopt;
    return 1.0 / (1.0 + std::sqrt(radicand));
}

// Moment comparison (p2^2 vs p3 with the normalizations cleared):
// lhs = (sum d_v^2 + beta^2 ||A||_F^2)^2,
// rhs = d_G [sum d_v^3 + 3 beta^2 * swapped-degree sum + 6 beta^3 * triangle
// weight sum of the partial-transpose graph]. PPT states satisfy lhs <= rhs,
// so strict violation certifies entanglement.
inline CriterionVerdict p3_ppt_test(const Graph& g, double alpha) {
    require_stateable(g, alpha);
    const double beta = (1.0 - alpha) / alpha;
    const double dg = total_degree(g);
    double sum_d2 = 0.0, sum_d3 = 0.0;
    for (double dv : weighted_degrees(g)) {
        sum_d2 += dv * dv;
        sum_d3 += dv * dv * dv;
    }
    const double inner = sum_d2 + beta * beta * frobenius_norm_sq(g);
    const double lhs = inner * inner;
    const double rhs =
        dg * (sum_d3 + 3.0 * beta * beta * sum_swapped_degree_weighted(g) +
              6.0 * beta * beta * beta * transpose_triangle_weight_sum(g));
    // Strict violation only: exact equality (regular graphs at beta = 0 sit
    // there) must stay inconclusive, so rounding noise is kept below margin.
    const double margin = 1e-12 * std::max(1.0, std::abs(rhs));
    const Outcome o = lhs > rhs + margin ? Outcome::entangled_certified : Outcome::inconclusive;
    return {Criterion::p3_ppt, o, lhs, rhs, alpha};
}

// Exact NPT detection: entangled iff the partial transpose of rho has an
// eigenvalue below -tol, PPT-certified otherwise.
inline CriterionVerdict peres_horodecki_test(const AlphaState& s, double tol = kPsdTol) {
    const double lam = min_eigenvalue(partial_transpose_matrix(s.rho, s.d1, s.d2));
    const Outcome o = lam < -tol ? Outcome::entangled_certified : Outcome::ppt_certified;
    return {Criterion::peres_horodecki, o, lam, 0.0, s.alpha};
}

// The second-moment primitive behind the Frobenius bound:
// PPT-certified iff p2 <= 1/(d1 d2 - 1).
inline CriterionVerdict second_moment_ppt_test(const AlphaState& s) {
    if (s.graph.n() <= 1) throw std::invalid_argument("second_moment_ppt_test: d1*d2 must exceed 1");
    const double lhs = p2_graph(s.graph, s.alpha);
    const double rhs = 1.0 / static_cast<double>(s.graph.n() - 1);
    const Outcome o = lhs <= rhs ? Outcome::ppt_certified : Outcome::inconclusive;
    return {Criterion::second_moment_ppt, o, lhs, rhs, s.alpha};
}

// One grid point evaluated under one criterion, with the not-a-state flag
// set whenever rho fails the PSD check at this alpha. Shared by the sweep
// and by boundary refinement so both see identical step functions.
inline CriterionVerdict evaluate_criterion(const Graph& g, double alpha, Criterion c,
                                           double tol = kPsdTol) {
    const AlphaState s = build_state(g, alpha);
    const bool valid = is_psd(s.rho, tol);
    CriterionVerdict v{};
    switch (c) {
        case Criterion::frobenius_ppt:
            v = frobenius_ppt_test(g, alpha);
            break;
        case Criterion::alpha_threshold: {
            std::optional<double> thr;
            if (g.simple_unweighted()) thr = alpha_threshold_simple(g);
            const double lhs = thr ? *thr : std::numeric_limits<double>::quiet_NaN();
            const Outcome o = thr && alpha >= *thr ? Outcome::ppt_certified : Outcome::inconclusive;
            v = {Criterion::alpha_threshold, o, lhs, alpha, alpha};
            break;
        }
        case Criterion::p3_ppt:
            v = p3_ppt_test(g, alpha);
            break;
        case Criterion::peres_horodecki:
            v = peres_horodecki_test(s, tol);
            break;
        case Criterion::second_moment_ppt:
            v = second_moment_ppt_test(s);
            break;
    }
    v.state_valid = valid;
    if (!valid) v.outcome = Outcome::inconclusive;
    return v;
}

struct OutcomeRun {
    Criterion criterion;
    Outcome outcome;
    double alpha_lo;
    double alpha_hi;
    bool refined = false;
};

struct SweepReport {
    std::string graph_id;
    std::size_t d1 = 0, d2 = 0;
    std::vector<double> grid;
    ValidityInterval validity{};
    std::vector<std::vector<CriterionVerdict>> verdicts;  // [criterion][grid index]
    std::vector<bool> state_valid;                        // per grid index
    std::vector<OutcomeRun> runs;                         // maximal same-outcome runs
};

namespace detail {

// The step function flips exactly once between adjacent grid points with
// different outcomes; bisect alpha for the flip to the requested width.
inline double refine_boundary(const Graph& g, Criterion c, double lo, double hi,
                              double tol, double width) {
    const CriterionVerdict left = evaluate_criterion(g, lo, c, tol);
    while (hi - lo > width) {
        const double mid = 0.5 * (lo + hi);
        const CriterionVerdict v = evaluate_criterion(g, mid, c, tol);
        if (v.outcome == left.outcome && v.state_valid == left.state_valid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace detail

// Runs every criterion over the grid, marks invalid-state points, and
// extracts maximal same-outcome runs over the valid points. With refine=true
// the run boundaries interior to the grid are bisected down to refine_width.
inline SweepReport sweep(const Graph& g, const std::vector<double>& grid, double tol = kPsdTol,
                         bool refine = false, double refine_width = 1e-4) {
    if (grid.empty()) throw std::invalid_argument("sweep: empty grid");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] > 0.0) || grid[i] > 1.0) throw std::invalid_argument("sweep: grid point outside (0,1]");
        if (i > 0 && grid[i] <= grid[i - 1]) throw std::invalid_argument("sweep: grid must be strictly increasing");
    }

    SweepReport rep;
    rep.d1 = g.d1();
    rep.d2 = g.d2();
    rep.grid = grid;
    rep.validity = validity_interval(g);
    rep.verdicts.resize(std::size(kAllCriteria));
    rep.state_valid.resize(grid.size());

    for (std::size_t ci = 0; ci < std::size(kAllCriteria); ++ci) {
        rep.verdicts[ci].reserve(grid.size());
        for (double a : grid) rep.verdicts[ci].push_back(evaluate_criterion(g, a, kAllCriteria[ci], tol));
    }
    for (std::size_t i = 0; i < grid.size(); ++i) rep.state_valid[i] = rep.verdicts[0][i].state_valid;

    for (std::size_t ci = 0; ci < std::size(kAllCriteria); ++ci) {
        const auto& vs = rep.verdicts[ci];
        std::size_t i = 0;
        while (i < grid.size()) {
            if (!vs[i].state_valid) {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j + 1 < grid.size() && vs[j + 1].state_valid && vs[j + 1].outcome == vs[i].outcome) ++j;
            OutcomeRun run{kAllCriteria[ci], vs[i].outcome, grid[i], grid[j]};
            if (refine) {
                if (i > 0) {
                    run.alpha_lo = detail::refine_boundary(g, kAllCriteria[ci], grid[i - 1], grid[i],
                                                           tol, refine_width);
                    run.refined = true;
                }
                if (j + 1 < grid.size()) {
                    run.alpha_hi = detail::refine_boundary(g, kAllCriteria[ci], grid[j], grid[j + 1],
                                                           tol, refine_width);
                    run.refined = true;
                }
            }
            rep.runs.push_back(run);
            i = j + 1;
        }
    }
    return rep;
}

// Inclusive evenly spaced grid, "start:end:count" in the CLI.
inline std::vector<double> make_grid(double start, double end, std::size_t count) {
    if (count == 0 || !(start > 0.0) || end > 1.0 || start > end) {
        throw std::invalid_argument("make_grid: need 0 < start <= end <= 1 and count >= 1");
    }
    if (count == 1 || start == end) return {start};
    std::vector<double> grid(count);
    for (std::size_t i = 0; i < count; ++i) {
        grid[i] = start + (end - start) * static_cast<double>(i) / static_cast<double>(count - 1);
    }
    grid.back() = end;
    return grid;
}

}  // namespace aalpha

#endif  // AALPHA_CRITERIA_HPP
