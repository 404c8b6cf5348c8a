#ifndef AALPHA_FIXTURES_HPP
#define AALPHA_FIXTURES_HPP

// Reference graphs with independently verified classifications, used as the
// regression suite behind the `paper-examples` CLI command and by the test
// suites. Values quoted to 2-4 decimals are checked at 5e-3 (or the stated
// tolerance); self-computed values are frozen at full precision.

#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "aalpha/criteria.hpp"
#include "aalpha/graph.hpp"
#include "aalpha/matrix.hpp"
#include "aalpha/state.hpp"

namespace aalpha::fixtures {

inline Graph g1() {  // weighted 4-vertex, 2x2
    return Graph(4, 2, 2,
                 {{0, 1, 7.0 / 50.0}, {0, 3, 1.0 / 4.0}, {1, 2, 9.0 / 100.0}, {1, 3, 1.0 / 5.0}});
}

inline Graph g2() {  // weighted 6-vertex, 2x3
    return Graph(6, 2, 3,
                 {{0, 1, 4.0 / 5.0},
                  {0, 2, 1.0 / 20.0},
                  {0, 4, 73.0 / 100.0},
                  {1, 3, 1.0 / 100.0},
                  {1, 5, 39.0 / 100.0},
                  {2, 3, 17.0 / 50.0},
                  {2, 5, 4.0 / 25.0},
                  {3, 4, 3.0 / 4.0},
                  {3, 5, 33.0 / 50.0}});
}

inline Graph g3() {  // weighted 9-vertex, 3x3
    return Graph(9, 3, 3,
                 {{0, 1, 13.0 / 50.0}, {0, 3, 4.0 / 5.0},   {0, 5, 29.0 / 50.0},
                  {0, 6, 41.0 / 100.0}, {0, 7, 12.0 / 25.0}, {1, 2, 14.0 / 25.0},
                  {1, 4, 19.0 / 25.0},  {1, 8, 29.0 / 50.0}, {2, 3, 51.0 / 100.0},
                  {2, 4, 69.0 / 100.0}, {2, 7, 49.0 / 100.0}, {3, 4, 19.0 / 25.0},
                  {3, 6, 12.0 / 25.0},  {4, 6, 9.0 / 25.0},  {4, 7, 11.0 / 100.0},
                  {6, 7, 64.0 / 100.0}, {6, 8, 1.0},         {7, 8, 23.0 / 25.0}});
}

inline Graph g4() {  // unweighted 6-vertex, 2x3
    return Graph(6, 2, 3, {{0, 1, 1}, {0, 2, 1}, {1, 4, 1}, {1, 5, 1}, {2, 3, 1}, {3, 5, 1}, {4, 5, 1}});
}

inline Graph k4() { return generate_family({FamilyKind::complete, 4}, 2, 2); }
inline Graph p4() { return generate_family({FamilyKind::path, 4}, 2, 2); }
inline Graph p6() { return generate_family({FamilyKind::path, 6}, 2, 3); }

inline Graph pt4() {  // unweighted 4-vertex with a known partial-transpose image
    return Graph(4, 2, 2, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 3, 1}});
}

inline std::vector<Edge> pt4_image_edges() {
    return {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {1, 3, 1}};
}

inline Graph pt9() {  // weighted 9-vertex with a known partial-transpose image
    return Graph(9, 3, 3,
                 {{0, 1, 2.0 / 5.0},  {0, 3, 3.0 / 4.0},  {0, 6, 1.0 / 2.0},
                  {1, 2, 7.0 / 10.0}, {1, 4, 1.0 / 3.0},  {1, 8, 4.0 / 5.0},
                  {2, 3, 1.0 / 4.0},  {2, 4, 2.0 / 3.0},  {2, 7, 3.0 / 5.0},
                  {3, 4, 1.0 / 2.0},  {3, 6, 2.0 / 5.0},  {4, 5, 3.0 / 4.0},
                  {4, 7, 1.0 / 5.0},  {5, 8, 2.0 / 3.0},  {6, 7, 4.0 / 5.0},
                  {6, 8, 1.0},        {7, 8, 7.0 / 10.0}});
}

// Mirror cross edges (1,8) and (2,7) exchange weights under the transpose.
inline std::vector<Edge> pt9_image_edges() {
    return {{0, 1, 2.0 / 5.0},  {0, 3, 3.0 / 4.0},  {0, 5, 1.0 / 4.0},
            {0, 6, 1.0 / 2.0},  {1, 2, 7.0 / 10.0}, {1, 4, 1.0 / 3.0},
            {1, 5, 2.0 / 3.0},  {1, 8, 3.0 / 5.0},  {2, 7, 4.0 / 5.0},
            {3, 4, 1.0 / 2.0},  {3, 6, 2.0 / 5.0},  {4, 5, 3.0 / 4.0},
            {4, 7, 1.0 / 5.0},  {5, 8, 2.0 / 3.0},  {6, 7, 4.0 / 5.0},
            {6, 8, 1.0},        {7, 8, 7.0 / 10.0}};
}

struct FixtureResult {
    std::string name;
    bool passed = true;
    std::vector<std::string> failures;
};

namespace detail {

inline void check(FixtureResult& r, bool ok, const std::string& what) {
    if (!ok) {
        r.passed = false;
        r.failures.push_back(what);
    }
}

inline void check_close(FixtureResult& r, double got, double want, double tol,
                        const std::string& what) {
    if (!(std::abs(got - want) <= tol)) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s: got %.12g, want %.12g (tol %.1g)", what.c_str(), got,
                      want, tol);
        r.passed = false;
        r.failures.push_back(buf);
    }
}

inline bool same_edges(const std::vector<Edge>& got, const std::vector<Edge>& want) {
    return got == want;  // exact weights: the transpose moves them, never rescales
}

// The entangled run of one criterion over [lo, 1], boundaries refined.
inline std::optional<OutcomeRun> entangled_run(const Graph& g, Criterion c, double lo,
                                               std::size_t points = 400) {
    const SweepReport rep = sweep(g, make_grid(lo, 1.0, points), kPsdTol, true, 1e-6);
    for (const OutcomeRun& run : rep.runs) {
        if (run.criterion == c && run.outcome == Outcome::entangled_certified) return run;
    }
    return std::nullopt;
}

}  // namespace detail

inline FixtureResult run_g1() {
    FixtureResult r;
    r.name = "G1";
    const Graph g = g1();
    detail::check_close(r, total_degree(g), 1.36, 1e-12, "total degree");
    detail::check_close(r, weighted_degree(g, 1), 0.43, 1e-12, "degree of vertex 1");
    detail::check_close(r, frobenius_norm_sq(g), 0.2604, 1e-12, "frobenius norm squared");
    detail::check_close(r, frobenius_norm_sq(g), 0.26, 5e-3, "frobenius norm squared (quoted)");
    const double lam = min_eigenvalue(adjacency_matrix(g));
    detail::check_close(r, lam, -0.26476732930676258, 1e-9, "lambda_min");
    detail::check_close(r, lam, -0.2647, 5e-4, "lambda_min (quoted)");
    const double weyl = weyl_validity_threshold(g);
    detail::check_close(r, weyl, 0.74631260388078689, 1e-9, "weyl threshold");
    detail::check_close(r, weyl, 0.75, 5e-3, "weyl threshold (quoted)");
    detail::check_close(r, exact_validity_threshold(g), 0.398740017448, 1e-6, "exact threshold");

    // rho at alpha = 0.8 (beta = 1/4), scaled by 68: exact rational entries.
    const AlphaState s = build_state(g, 0.8);
    const double b = 0.25;
    const double want[4][4] = {{19.5, 7 * b, 0, 12.5 * b},
                               {7 * b, 21.5, 4.5 * b, 10 * b},
                               {0, 4.5 * b, 4.5, 0},
                               {12.5 * b, 10 * b, 0, 22.5}};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            detail::check_close(r, 68.0 * s.rho(i, j), want[i][j], 1e-12, "rho entry");

    detail::check_close(r, p2_graph(g, 0.8), p2_direct(s), 1e-9, "p2 graph vs direct");
    detail::check_close(r, p3_graph(g, 0.8), p3_direct(s), 1e-9, "p3 graph vs direct");

    for (double a : make_grid(0.75, 1.0, 26)) {
        const CriterionVerdict fro = evaluate_criterion(g, a, Criterion::frobenius_ppt);
        const CriterionVerdict sec = evaluate_criterion(g, a, Criterion::second_moment_ppt);
        const CriterionVerdict ph = evaluate_criterion(g, a, Criterion::peres_horodecki);
        detail::check(r, fro.state_valid && fro.outcome == Outcome::ppt_certified,
                      "frobenius PPT at alpha=" + std::to_string(a));
        detail::check(r, sec.outcome == Outcome::ppt_certified,
                      "second moment PPT at alpha=" + std::to_string(a));
        detail::check(r, ph.outcome == Outcome::ppt_certified,
                      "peres-horodecki PPT at alpha=" + std::to_string(a));
    }
    return r;
}

inline FixtureResult run_g2() {
    FixtureResult r;
    r.name = "G2";
    const Graph g = g2();
    detail::check_close(r, total_degree(g), 7.78, 1e-12, "total degree");
    const double weyl = weyl_validity_threshold(g);
    detail::check_close(r, weyl, 0.695527242947, 1e-9, "weyl threshold");
    detail::check_close(r, weyl, 0.7, 5e-3, "weyl threshold (quoted)");

    // Certification gap lhs - rhs against its closed form
    // 24669/5000 - 27867 a^2 / (25000 (1-a)^2).
    for (double a : {0.75, 0.8, 0.9}) {
        const CriterionVerdict v = frobenius_ppt_test(g, a);
        const double closed = 24669.0 / 5000.0 - 27867.0 * a * a / (25000.0 * (1 - a) * (1 - a));
        detail::check_close(r, v.lhs - v.rhs, closed, 1e-6, "gap closed form");
    }
    for (double a : {0.7, 0.75, 0.8, 0.9, 0.99}) {
        const CriterionVerdict fro = evaluate_criterion(g, a, Criterion::frobenius_ppt);
        const CriterionVerdict ph = evaluate_criterion(g, a, Criterion::peres_horodecki);
        detail::check(r, fro.state_valid && fro.outcome == Outcome::ppt_certified,
                      "frobenius PPT at alpha=" + std::to_string(a));
        detail::check(r, ph.outcome == Outcome::ppt_certified,
                      "peres-horodecki agrees at alpha=" + std::to_string(a));
    }

    // rho at alpha = 0.8, scaled by 389.
    const AlphaState s = build_state(g, 0.8);
    const double b = 0.25;
    const double want[6][6] = {{79, 40 * b, 2.5 * b, 0, 36.5 * b, 0},
                               {40 * b, 60, 0, 0.5 * b, 0, 19.5 * b},
                               {2.5 * b, 0, 27.5, 17 * b, 0, 8 * b},
                               {0, 0.5 * b, 17 * b, 88, 37.5 * b, 33 * b},
                               {36.5 * b, 0, 0, 37.5 * b, 74, 0},
                               {0, 19.5 * b, 8 * b, 33 * b, 0, 60.5}};
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            detail::check_close(r, 389.0 * s.rho(i, j), want[i][j], 1e-12, "rho entry");
    return r;
}

inline FixtureResult run_g3() {
    FixtureResult r;
    r.name = "G3";
    const Graph g = g3();
    detail::check_close(r, total_degree(g), 20.78, 1e-12, "total degree");
    const double weyl = weyl_validity_threshold(g);
    detail::check_close(r, weyl, 0.748386833153, 1e-9, "weyl threshold");
    detail::check_close(r, weyl, 0.75, 5e-3, "weyl threshold (quoted)");
    for (double a : {0.75, 0.8, 0.9}) {
        const CriterionVerdict v = frobenius_ppt_test(g, a);
        const double closed = 68521.0 / 5000.0 - 45081.0 * a * a / (20000.0 * (1 - a) * (1 - a));
        detail::check_close(r, v.lhs - v.rhs, closed, 1e-6, "gap closed form");
    }
    for (double a : {0.75, 0.8, 0.9, 1.0}) {
        const CriterionVerdict fro = evaluate_criterion(g, a, Criterion::frobenius_ppt);
        const CriterionVerdict ph = evaluate_criterion(g, a, Criterion::peres_horodecki);
        detail::check(r, fro.state_valid && fro.outcome == Outcome::ppt_certified,
                      "frobenius PPT at alpha=" + std::to_string(a));
        detail::check(r, ph.outcome == Outcome::ppt_certified,
                      "peres-horodecki agrees at alpha=" + std::to_string(a));
    }
    const AlphaState s = build_state(g, 0.8);
    const double b = 0.25;
    const double diag[9] = {253, 216, 225, 255, 268, 58, 289, 264, 250};
    for (std::size_t i = 0; i < 9; ++i)
        detail::check_close(r, 2078.0 * s.rho(i, i), diag[i], 1e-12, "rho diagonal");
    const double row0[9] = {253, 26 * b, 0, 80 * b, 0, 58 * b, 41 * b, 48 * b, 0};
    for (std::size_t j = 0; j < 9; ++j)
        detail::check_close(r, 2078.0 * s.rho(0, j), row0[j], 1e-12, "rho row 0");
    return r;
}

inline FixtureResult run_g4() {
    FixtureResult r;
    r.name = "G4";
    const Graph g = g4();
    detail::check_close(r, min_eigenvalue(adjacency_matrix(g)), -1.75659825386007, 1e-9,
                        "lambda_min");
    const double weyl = weyl_validity_threshold(g);
    detail::check_close(r, weyl, 0.467603436714343, 1e-9, "weyl threshold");
    detail::check_close(r, weyl, 0.4676, 1e-3, "weyl threshold (quoted)");
    const double exact = exact_validity_threshold(g);
    detail::check_close(r, exact, 0.452333977086, 1e-6, "exact threshold");
    detail::check(r, exact <= weyl, "exact <= weyl");

    // Entangled window over the conservative validity domain [weyl, 1].
    const auto run = detail::entangled_run(g, Criterion::peres_horodecki, weyl);
    detail::check(r, run.has_value(), "peres-horodecki entangled run exists");
    if (run) {
        detail::check_close(r, run->alpha_lo, 0.4676, 1e-3, "entangled run left boundary");
        detail::check_close(r, run->alpha_hi, 0.5247, 1e-3, "entangled run right boundary");
    }
    // Necessary-condition direction: the certification gap stays positive on
    // the entangled window, i.e. the sufficient PPT bound is (consistently)
    // violated there.
    for (double a : {0.47, 0.5, 0.52}) {
        const CriterionVerdict v = frobenius_ppt_test(g, a);
        detail::check(r, v.lhs - v.rhs > 0.0 && v.outcome == Outcome::inconclusive,
                      "frobenius bound violated at alpha=" + std::to_string(a));
    }
    detail::check(r,
                  evaluate_criterion(g, 0.53, Criterion::peres_horodecki).outcome ==
                      Outcome::ppt_certified,
                  "PPT again above the window");
    return r;
}

inline FixtureResult run_k4() {
    FixtureResult r;
    r.name = "K4";
    const Graph g = k4();
    detail::check_close(r, total_degree(g), 12.0, 0.0, "total degree");
    const auto thr = alpha_threshold_simple(g);
    detail::check(r, thr.has_value(), "alpha threshold exists");
    if (thr) detail::check_close(r, *thr, 0.5, 1e-9, "alpha threshold");
    detail::check_close(r, weyl_validity_threshold(g), 0.25, 1e-9, "weyl threshold");
    detail::check_close(r, exact_validity_threshold(g), 0.25, 1e-6, "exact threshold");
    detail::check(r, partial_transpose_graph(g) == g, "partial transpose fixed point");
    detail::check_close(r, sum_swapped_degree_weighted(g), 36.0, 1e-12, "swapped degree sum");
    detail::check_close(r, trace_power(partial_transpose_matrix(adjacency_matrix(g), 2, 2), 3),
                        24.0, 1e-12, "trace of cubed transpose");
    for (double a : make_grid(0.25, 1.0, 100)) {
        const CriterionVerdict ph = evaluate_criterion(g, a, Criterion::peres_horodecki);
        detail::check(r, ph.state_valid && ph.outcome == Outcome::ppt_certified,
                      "peres-horodecki PPT at alpha=" + std::to_string(a));
    }
    const AlphaState s = build_state(g, 1.0);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            detail::check_close(r, s.rho(i, j), i == j ? 0.25 : 0.0, 0.0, "rho at alpha=1");
    return r;
}

inline FixtureResult run_p4() {
    FixtureResult r;
    r.name = "P4";
    const Graph g = p4();
    detail::check(r, detail::same_edges(partial_transpose_graph(g).edges(),
                                        {{0, 1, 1}, {0, 3, 1}, {2, 3, 1}}),
                  "partial-transpose edge set");
    detail::check_close(r, sum_swapped_degree_weighted(g), 8.0, 1e-12, "swapped degree sum");
    detail::check_close(r, triangle_weight_sum(partial_transpose_graph(g)), 0.0, 0.0,
                        "transpose is triangle-free");
    detail::check(r, is_connected(partial_transpose_graph(g)), "transpose is connected");
    const auto thr = alpha_threshold_simple(g);
    detail::check(r, thr.has_value(), "alpha threshold exists");
    if (thr) detail::check_close(r, *thr, 0.633974596216, 1e-9, "alpha threshold");
    detail::check_close(r, weyl_validity_threshold(g), 0.618033988750, 1e-9, "weyl threshold");
    detail::check_close(r, exact_validity_threshold(g), 0.5, 1e-6, "exact threshold");

    // p2 = (10 + 6 b^2)/36 and p3 = (18 + 24 b^2)/216 at alpha = 0.5 (b = 1).
    detail::check_close(r, p2_graph(g, 0.5), 16.0 / 36.0, 1e-12, "p2 at alpha=0.5");
    detail::check_close(r, p3_graph(g, 0.5), 42.0 / 216.0, 1e-12, "p3 at alpha=0.5");

    const auto p3run = detail::entangled_run(g, Criterion::p3_ppt, 0.5);
    detail::check(r, p3run.has_value(), "p3-ppt entangled run exists");
    if (p3run) {
        detail::check_close(r, p3run->alpha_hi, 0.511692836477, 1e-4, "p3-ppt boundary");
        detail::check_close(r, p3run->alpha_hi, 0.5117, 5e-3, "p3-ppt boundary (quoted)");
    }
    const auto phrun = detail::entangled_run(g, Criterion::peres_horodecki, 0.5);
    detail::check(r, phrun.has_value(), "peres-horodecki entangled run exists");
    if (phrun) {
        detail::check_close(r, phrun->alpha_hi, 0.577350269190, 1e-4, "peres-horodecki boundary");
        detail::check_close(r, phrun->alpha_hi, 0.5773, 5e-3, "peres-horodecki boundary (quoted)");
    }
    if (p3run && phrun) {
        detail::check(r, p3run->alpha_hi < phrun->alpha_hi,
                      "p3-ppt window strictly inside the exact window");
    }
    detail::check(r, p3_ppt_test(g, 0.5).outcome == Outcome::entangled_certified,
                  "p3-ppt entangled at alpha=0.5");
    detail::check(r, p3_ppt_test(g, 0.52).outcome == Outcome::inconclusive,
                  "p3-ppt inconclusive at alpha=0.52");
    detail::check(r,
                  evaluate_criterion(g, 0.55, Criterion::peres_horodecki).outcome ==
                      Outcome::entangled_certified,
                  "peres-horodecki entangled at alpha=0.55");
    detail::check(r, second_moment_ppt_test(build_state(g, 0.51)).outcome == Outcome::inconclusive,
                  "second moment inconclusive at alpha=0.51");
    return r;
}

inline FixtureResult run_p6() {
    FixtureResult r;
    r.name = "P6";
    const Graph g = p6();
    const auto thr = alpha_threshold_simple(g);
    detail::check(r, thr.has_value(), "alpha threshold exists");
    if (thr) {
        detail::check_close(r, *thr, 0.690983005625, 1e-9, "alpha threshold");
        detail::check_close(r, *thr, 0.691, 1e-3, "alpha threshold (quoted)");
    }
    detail::check_close(r, weyl_validity_threshold(g), 0.643104132108, 1e-9, "weyl threshold");
    detail::check_close(r, exact_validity_threshold(g), 0.5, 1e-6, "exact threshold");
    detail::check(r, is_connected(g), "connected");
    // rho scales by 1/d_G = 1/10 with end degrees 1 and inner degrees 2
    // (unit trace pins the prefactor).
    const AlphaState s = build_state(g, 0.75);
    detail::check_close(r, 10.0 * s.rho(0, 0), 1.0, 1e-12, "rho corner");
    detail::check_close(r, 10.0 * s.rho(1, 1), 2.0, 1e-12, "rho inner diagonal");
    detail::check_close(r, 10.0 * s.rho(0, 1), 1.0 / 3.0, 1e-12, "rho off-diagonal");
    return r;
}

inline FixtureResult run_pt4() {
    FixtureResult r;
    r.name = "PT4";
    const Graph g = pt4();
    const Graph t = partial_transpose_graph(g);
    detail::check(r, detail::same_edges(t.edges(), pt4_image_edges()), "transpose edge set");
    detail::check(r, partial_transpose_graph(t) == g, "involution");
    SymMatrix expect(4);
    for (const Edge& e : pt4_image_edges()) expect.set(e.u, e.v, e.w);
    detail::check(r, partial_transpose_matrix(adjacency_matrix(g), 2, 2) == expect,
                  "matrix transpose matches edge-level transpose exactly");
    return r;
}

inline FixtureResult run_pt9() {
    FixtureResult r;
    r.name = "PT9";
    const Graph g = pt9();
    const Graph t = partial_transpose_graph(g);
    detail::check(r, detail::same_edges(t.edges(), pt9_image_edges()), "transpose edge set");
    detail::check(r, partial_transpose_graph(t) == g, "involution");
    SymMatrix expect(9);
    for (const Edge& e : pt9_image_edges()) expect.set(e.u, e.v, e.w);
    detail::check(r, partial_transpose_matrix(adjacency_matrix(g), 3, 3) == expect,
                  "matrix transpose matches edge-level transpose exactly");
    detail::check_close(r, total_degree(t), total_degree(g), 1e-12, "degree conservation");
    const AlphaState s = build_state(g, 0.9);
    detail::check_close(r, p2_graph(g, 0.9), p2_direct(s), 1e-9, "p2 graph vs direct");
    detail::check_close(r, p3_graph(g, 0.9), p3_direct(s), 1e-9, "p3 graph vs direct");
    return r;
}

inline const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names = {"G1", "G2", "G3", "G4", "K4",
                                                   "P4", "P6", "PT4", "PT9"};
    return names;
}

inline FixtureResult run_fixture(const std::string& name) {
    if (name == "G1") return run_g1();
    if (name == "G2") return run_g2();
    if (name == "G3") return run_g3();
    if (name == "G4") return run_g4();
    if (name == "K4") return run_k4();
    if (name == "P4") return run_p4();
    if (name == "P6") return run_p6();
    if (name == "PT4") return run_pt4();
    if (name == "PT9") return run_pt9();
    throw std::invalid_argument("unknown fixture: " + name);
}

}  // namespace aalpha::fixtures

#endif  // AALPHA_FIXTURES_HPP
