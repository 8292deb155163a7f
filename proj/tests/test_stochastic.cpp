#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "netcrit/circulant.hpp"
#include "netcrit/criticality.hpp"
#include "netcrit/oracle.hpp"
#include "netcrit/stochastic.hpp"

using namespace netcrit;
using namespace netcrit::testing;

TEST_CASE("expected Laplacian rows") {
    SUBCASE("random links with q = 1 is the complete graph") {
        const CirculantRow row = expected_laplacian(StochasticRingModel::random_links(4, 1.0));
        const double expected[] = {3, -1, -1, -1};
        for (int k = 0; k < 4; ++k)
            CHECK(row.entries[static_cast<std::size_t>(k)].real() == doctest::Approx(expected[k]));
    }
    SUBCASE("failure-free ring is the intact cycle") {
        const CirculantRow row = expected_laplacian(StochasticRingModel::link_failures(5, 0.0));
        const double expected[] = {2, -1, 0, 0, -1};
        for (int k = 0; k < 5; ++k)
            CHECK(row.entries[static_cast<std::size_t>(k)].real() == doctest::Approx(expected[k]));
    }
    SUBCASE("neighbor switching at n = 3") {
        const CirculantRow row = expected_laplacian(StochasticRingModel::neighbor_switching(3));
        CHECK(row.entries[0].real() == doctest::Approx(2.0));
        CHECK(row.entries[1].real() == doctest::Approx(-1.0));
        CHECK(row.entries[2].real() == doctest::Approx(-1.0));
    }
    SUBCASE("rows sum to zero") {
        for (int n : {3, 8, 31, 64}) {
            CHECK(std::abs(expected_laplacian(StochasticRingModel::random_links(n, 0.3)).row_sum()) < 1e-12);
            CHECK(std::abs(expected_laplacian(StochasticRingModel::link_failures(n, 0.6)).row_sum()) < 1e-12);
            CHECK(std::abs(expected_laplacian(StochasticRingModel::neighbor_switching(n)).row_sum()) < 1e-12);
        }
    }
}

TEST_CASE("model validation") {
    CHECK_THROWS_AS(StochasticRingModel::random_links(2, 0.5), SpecError);
    CHECK_THROWS_AS(StochasticRingModel::random_links(5, 0.0), DegenerateModelError);
    CHECK_THROWS_AS(StochasticRingModel::random_links(5, 1.5), SpecError);
    CHECK_THROWS_AS(StochasticRingModel::link_failures(5, 1.0), DegenerateModelError);
    CHECK_THROWS_AS(StochasticRingModel::link_failures(5, -0.1), SpecError);
    CHECK_THROWS_AS(AsymmetricRingSpec(5, 1.5), SpecError);
    CHECK_THROWS_AS(AsymmetricRingSpec(2, 0.5), SpecError);
}

TEST_CASE("random links tau") {
    CHECK(rel_err(tau_random_links(5, 1.0).tau, 8.0) < 1e-12);
    CHECK(rel_err(tau_random_links(5, 0.5).tau, 16.0) < 1e-12);   // 2(n-1)/q
    CHECK(rel_err(tau_random_links(11, 0.2).tau, 100.0) < 1e-12);
    SUBCASE("strictly decreasing in q") {
        std::vector<double> taus;
        for (double q : {0.1, 0.2, 0.3, 0.5, 0.7, 0.9, 1.0}) taus.push_back(tau_random_links(40, q).tau);
        CHECK(strictly_decreasing(taus));
    }
}

TEST_CASE("link failures tau") {
    CHECK(rel_err(tau_link_failures(5, 0.0).tau, 20.0) < 1e-12);
    CHECK(rel_err(tau_link_failures(5, 0.5).tau, 40.0) < 1e-12);
    CHECK(rel_err(tau_link_failures(7, 0.3).tau, 80.0) < 1e-12);  // n(n^2-1)/6 / 0.7
    SUBCASE("strictly increasing in p") {
        std::vector<double> taus;
        for (double p : {0.0, 0.2, 0.4, 0.6, 0.8, 0.95}) taus.push_back(tau_link_failures(12, p).tau);
        CHECK(strictly_increasing(taus));
    }
}

TEST_CASE("neighbor switching tau is (n-1)^2") {
    CHECK(rel_err(tau_neighbor_switching(3).tau, 4.0) < 1e-12);
    CHECK(rel_err(tau_neighbor_switching(5).tau, 16.0) < 1e-12);
    CHECK(rel_err(tau_neighbor_switching(21).tau, 400.0) < 1e-12);
}

TEST_CASE("expected-Laplacian models match the pseudoinverse oracle") {
    for (int n = 3; n <= 64; n += 5) {
        for (double q : {0.2, 0.5, 0.7}) {
            const double oracle =
                pinv_trace_tau(build_laplacian(StochasticRingModel::random_links(n, q))).tau;
            REQUIRE_MESSAGE(rel_err(tau_random_links(n, q).tau, oracle) < 1e-9,
                            "random n=" << n << " q=" << q);
        }
        for (double p : {0.2, 0.5, 0.7}) {
            const double oracle =
                pinv_trace_tau(build_laplacian(StochasticRingModel::link_failures(n, p))).tau;
            REQUIRE_MESSAGE(rel_err(tau_link_failures(n, p).tau, oracle) < 1e-9,
                            "failure n=" << n << " p=" << p);
        }
        const double oracle =
            pinv_trace_tau(build_laplacian(StochasticRingModel::neighbor_switching(n))).tau;
        REQUIRE_MESSAGE(rel_err(tau_neighbor_switching(n).tau, oracle) < 1e-9, "switching n=" << n);
    }
}

TEST_CASE("asymmetric ring tau") {
    SUBCASE("eps = 1 reduces to the symmetric cycle") {
        CHECK(rel_err(tau_asymmetric_ring({5, 1.0}).tau, 20.0) < 1e-12);
        for (int n = 3; n <= 64; ++n)
            CHECK(rel_err(tau_asymmetric_ring({n, 1.0}).tau, tau_cycle_closed_form(n, 1).tau) < 1e-9);
    }
    SUBCASE("eps = 0 is the directed cycle with tau = n(n-1)") {
        CHECK(rel_err(tau_asymmetric_ring({4, 0.0}).tau, 12.0) < 1e-12);
        for (int n : {3, 7, 16, 32})
            CHECK(rel_err(tau_asymmetric_ring({n, 0.0}).tau, static_cast<double>(n) * (n - 1)) < 1e-12);
    }
    SUBCASE("matches the complex pseudoinverse oracle") {
        for (int n : {3, 5, 9, 17, 32})
            for (double eps : {0.0, 0.25, 0.5, 0.75, 1.0}) {
                const CriticalityValue value = tau_asymmetric_ring({n, eps});
                const CriticalityValue oracle = pinv_trace_tau(build_laplacian(AsymmetricRingSpec{n, eps}));
                REQUIRE_MESSAGE(rel_err(value.tau, oracle.tau) < 1e-9, "n=" << n << " eps=" << eps);
                CHECK(value.imag_residue < 1e-9);
                CHECK(oracle.imag_residue < 1e-9);
            }
    }
    SUBCASE("reciprocal sum is real up to conjugate-pair rounding") {
        for (int n = 3; n <= 64; n += 3)
            for (double eps = 0.0; eps <= 1.0; eps += 0.1)
                CHECK(tau_asymmetric_ring({n, eps}).imag_residue < 1e-9);
    }
    SUBCASE("monotone increasing in eps once the ring is large enough") {
        // small rings dip near eps = 1: at n = 8 the 0.1 grid peaks at 0.8
        CHECK(tau_asymmetric_ring({8, 0.9}).tau < tau_asymmetric_ring({8, 0.8}).tau);
        for (int n = 18; n <= 64; ++n) {
            std::vector<double> taus;
            for (int i = 0; i <= 10; ++i) taus.push_back(tau_asymmetric_ring({n, i / 10.0}).tau);
            REQUIRE_MESSAGE(strictly_increasing(taus), "n=" << n);
        }
    }
}

TEST_CASE("model tau equals the generic spectrum route on the expected row") {
    for (int n = 3; n <= 64; n += 7) {
        const auto via_row = [](const StochasticRingModel& model) {
            return tau_from_spectrum(circulant_eigenvalues(expected_laplacian(model))).tau;
        };
        CHECK(rel_err(tau_random_links(n, 0.4).tau, via_row(StochasticRingModel::random_links(n, 0.4))) <
              1e-9);
        CHECK(rel_err(tau_link_failures(n, 0.25).tau,
                      via_row(StochasticRingModel::link_failures(n, 0.25))) < 1e-9);
        CHECK(rel_err(tau_neighbor_switching(n).tau,
                      via_row(StochasticRingModel::neighbor_switching(n))) < 1e-9);
    }
}
