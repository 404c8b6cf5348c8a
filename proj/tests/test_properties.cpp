#include <doctest.h>

#include "corpus_checks.hpp"
#include "helpers.hpp"

TEST_CASE("corpus-wide identities, oracle equivalence and criterion soundness") {
    const testutil::CorpusStats s = testutil::run_corpus_checks();
    CHECK(s.graphs >= 200);
    CHECK(s.moment_evaluations >= 2000);
    CHECK(s.max_p2_delta <= 1e-9);
    CHECK(s.max_p3_delta <= 1e-9);
    CHECK(s.max_identity_rel[0] <= 1e-9);
    CHECK(s.max_identity_rel[1] <= 1e-9);
    CHECK(s.max_identity_rel[2] <= 1e-9);
    CHECK(s.involution_failures == 0);
    CHECK(s.degree_conservation_failures == 0);
    CHECK(s.roundtrip_failures == 0);
    CHECK(s.monotone_validity_failures == 0);
    CHECK(s.exact_le_weyl_failures == 0);
    CHECK(s.cauchy_schwarz_failures == 0);
    CHECK(s.soundness_violations == 0);
    CHECK(s.p3_soundness_violations == 0);
    CHECK(s.equivalence_mismatches == 0);
}

TEST_CASE("nesting of the moment window inside the exact window") {
    // Wherever the p3 comparison certifies entanglement, the exact check
    // does too, so per-graph entangled windows nest. Spot-check the runs on
    // the fixture whose windows are both nontrivial plus corpus graphs that
    // show a p3 window.
    using namespace aalpha;
    int graphs_with_window = 0;
    for (const Graph& g : testutil::corpus()) {
        const double lo = exact_validity_threshold(g);
        if (lo >= 1.0) continue;
        const SweepReport rep = sweep(g, make_grid(std::max(lo, 0.01), 1.0, 60));
        double p3_lo = 2, p3_hi = -1, ph_lo = 2, ph_hi = -1;
        for (const OutcomeRun& run : rep.runs) {
            if (run.outcome != Outcome::entangled_certified) continue;
            if (run.criterion == Criterion::p3_ppt) {
                p3_lo = std::min(p3_lo, run.alpha_lo);
                p3_hi = std::max(p3_hi, run.alpha_hi);
            }
            if (run.criterion == Criterion::peres_horodecki) {
                ph_lo = std::min(ph_lo, run.alpha_lo);
                ph_hi = std::max(ph_hi, run.alpha_hi);
            }
        }
        if (p3_hi >= 0) {
            ++graphs_with_window;
            CHECK(ph_lo <= p3_lo);
            CHECK(p3_hi <= ph_hi);
        }
    }
    CHECK(graphs_with_window > 0);
}
