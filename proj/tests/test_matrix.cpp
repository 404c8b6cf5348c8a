#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "aalpha/fixtures.hpp"
#include "aalpha/graph.hpp"
#include "aalpha/matrix.hpp"

using namespace aalpha;

namespace {

SymMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, double scale = 1.0) {
    SymMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            m.set(i, j, scale * (2.0 * u - 1.0));
        }
    return m;
}

}  // namespace

TEST_CASE("eigenvalues of a diagonal matrix are its sorted entries") {
    SymMatrix m(4);
    m.set(0, 0, 3.0);
    m.set(1, 1, -1.5);
    m.set(2, 2, 0.25);
    m.set(3, 3, -7.0);
    const Spectrum s = eigenvalues_sym(m);
    const std::vector<double> want = {-7.0, -1.5, 0.25, 3.0};
    REQUIRE(s.values.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) CHECK(s.values[i] == doctest::Approx(want[i]).epsilon(1e-12));
}

TEST_CASE("zero matrix has an all-zero spectrum") {
    const Spectrum s = eigenvalues_sym(SymMatrix(4));
    for (double v : s.values) CHECK(v == 0.0);
}

TEST_CASE("complete-graph adjacency spectrum is (-1,-1,-1,3)") {
    const Spectrum s = eigenvalues_sym(adjacency_matrix(fixtures::k4()));
    CHECK(s.values[0] == doctest::Approx(-1.0).epsilon(1e-10));
    CHECK(s.values[1] == doctest::Approx(-1.0).epsilon(1e-10));
    CHECK(s.values[2] == doctest::Approx(-1.0).epsilon(1e-10));
    CHECK(s.values[3] == doctest::Approx(3.0).epsilon(1e-10));
}

TEST_CASE("weighted 4-vertex example reproduces its minimum eigenvalue") {
    const double lam = min_eigenvalue(adjacency_matrix(fixtures::g1()));
    CHECK(std::abs(lam - (-0.26476732930676258)) < 1e-10);
    CHECK(std::abs(lam - (-0.2647)) < 5e-4);
    // and the degree matrix bottoms out at the minimum degree
    CHECK(min_eigenvalue(degree_matrix(fixtures::g1())) == doctest::Approx(0.09).epsilon(1e-12));
}

TEST_CASE("eigenvalue sum equals the trace") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + trial % 8;
        const SymMatrix m = random_symmetric(rng, n, 3.0);
        const Spectrum s = eigenvalues_sym(m);
        double sum = 0.0, maxabs = 0.0;
        for (double v : s.values) sum += v;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) maxabs = std::max(maxabs, std::abs(m(i, j)));
        CHECK(std::abs(sum - m.trace()) <= 1e-9 * static_cast<double>(n) * std::max(1.0, maxabs));
    }
}

TEST_CASE("eigensolver is deterministic") {
    std::mt19937_64 rng(11);
    const SymMatrix m = random_symmetric(rng, 7);
    const Spectrum a = eigenvalues_sym(m);
    const Spectrum b = eigenvalues_sym(m);
    CHECK(a.values == b.values);
}

TEST_CASE("partial transpose of the identity is the identity") {
    const SymMatrix id = SymMatrix::identity(6);
    CHECK(partial_transpose_matrix(id, 2, 3) == id);
}

TEST_CASE("partial transpose is an involution preserving trace and norm") {
    std::mt19937_64 rng(23);
    for (const auto& [d1, d2] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 2}, {2, 3}, {3, 3}}) {
        const SymMatrix m = random_symmetric(rng, d1 * d2);
        const SymMatrix t = partial_transpose_matrix(m, d1, d2);
        CHECK(partial_transpose_matrix(t, d1, d2) == m);
        CHECK(t.trace() == doctest::Approx(m.trace()).epsilon(1e-14));
        CHECK(t.frobenius_norm() == doctest::Approx(m.frobenius_norm()).epsilon(1e-14));
    }
}

TEST_CASE("partial transpose rejects mismatched dimensions") {
    CHECK_THROWS_AS(partial_transpose_matrix(SymMatrix(5), 2, 2), std::invalid_argument);
}

TEST_CASE("trace powers") {
    CHECK(trace_power(SymMatrix::identity(4), 3) == doctest::Approx(4.0));
    const SymMatrix a = adjacency_matrix(fixtures::p4());
    const SymMatrix at = partial_transpose_matrix(a, 2, 2);
    CHECK(trace_power(at, 2) == doctest::Approx(6.0).epsilon(1e-12));

    std::mt19937_64 rng(31);
    const SymMatrix m = random_symmetric(rng, 6);
    CHECK(trace_power(m, 2) ==
          doctest::Approx(m.frobenius_norm() * m.frobenius_norm()).epsilon(1e-12));
    CHECK_THROWS_AS(trace_power(m, 4), std::invalid_argument);
}

TEST_CASE("psd check") {
    CHECK(is_psd(degree_matrix(fixtures::g1())));
    CHECK_FALSE(is_psd(adjacency_matrix(fixtures::k4())));
    CHECK_THROWS_AS(is_psd(SymMatrix(2), -1.0), std::invalid_argument);
}

TEST_CASE("eigenvalue perturbation sandwich on random pairs") {
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + trial % 7;
        const SymMatrix x = random_symmetric(rng, n, 2.0);
        const SymMatrix y = random_symmetric(rng, n, 2.0);
        SymMatrix sum(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) sum.set(i, j, x(i, j) + y(i, j));
        const Spectrum sx = eigenvalues_sym(x);
        const Spectrum sy = eigenvalues_sym(y);
        const Spectrum ss = eigenvalues_sym(sum);
        for (std::size_t k = 0; k < n; ++k) {
            CHECK(sx.values[k] + sy.values.front() <= ss.values[k] + 1e-8);
            CHECK(ss.values[k] <= sx.values[k] + sy.values.back() + 1e-8);
        }
    }
}

TEST_CASE("construction rejects bad input") {
    CHECK_THROWS_AS(SymMatrix::from_rows({{0.0, 1.0}, {2.0, 0.0}}), std::invalid_argument);
    CHECK_THROWS_AS(SymMatrix::from_rows({{0.0, 1.0}}), std::invalid_argument);
    SymMatrix m(2);
    CHECK_THROWS_AS(m.set(0, 2, 1.0), std::out_of_range);
    CHECK_THROWS_AS(m.set(0, 1, std::nan("")), std::invalid_argument);
}
