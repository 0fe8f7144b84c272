#include <random>
#include <stdexcept>

#include "doctest.h"
#include "support/forward_model.hpp"
#include "support/test_util.hpp"
#include "tfqkd/decoy_bounds.hpp"

using namespace tfqkd;
using namespace tfqkd::testing;

namespace {

const IntensityTriple kTriple38{0.087, 0.0088, 1.0e-4};

GainsTable gains38() {
    return load_fixture("38.0dB.json").gains;
}

}  // namespace

TEST_CASE("y00_upper reproduces the published 38.0 dB bound") {
    const double y = y00_upper(gains38(), kTriple38, Outcome::d10);
    CHECK(rel_close(y, 5.8083e-07, 1e-3));
}

TEST_CASE("yield bounds on all-zero gains") {
    const GainsTable zeros{};
    for (Outcome oc : kOutcomes) {
        CHECK(y00_upper(zeros, kTriple38, oc) == 0.0);
        CHECK(y11_upper(zeros, kTriple38, oc) == 0.0);
        // The two-photon estimators subtract a data-independent residual
        // term, so with vacuous data they degrade to that term instead of 0.
        // Independent evaluation of the residual for the tightest pair
        // (a1,a0) = (nu,omega) with the (mu,nu,omega) ladder on the other side:
        const double mu = kTriple38.mu, nu = kTriple38.nu, om = kTriple38.omega;
        const double a1 = nu, a0 = om;
        const double lambda =
            (a0 * (1 - std::exp(a1)) - a1 * (1 - std::exp(a0))) *
            ((nu - om) * (om - mu - std::exp(om) + std::exp(mu)) -
             (mu - om) * (om - nu - std::exp(om) + std::exp(nu)));
        const double residual_only =
            -2 * lambda / ((a1 - a0) * (mu - om) * (nu - om) * (mu - nu));
        CHECK(residual_only > 0.0);
        CHECK(rel_close(y02_upper(zeros, kTriple38, oc), residual_only, 1e-12));
        CHECK(rel_close(y20_upper(zeros, kTriple38, oc), residual_only, 1e-12));
        CHECK(y02_upper(zeros, kTriple38, oc) < 1e-6);
        CHECK(y20_upper(zeros, kTriple38, oc) < 1e-6);
    }
}

TEST_CASE("y11/y02/y20 reproduce the published 38.0 dB bounds") {
    const GainsTable g = gains38();
    CHECK(rel_close(y11_upper(g, kTriple38, Outcome::d10), 8.6573e-03, 1e-3));
    CHECK(rel_close(y02_upper(g, kTriple38, Outcome::d10), 1.9756e-02, 1e-3));
    CHECK(rel_close(y20_upper(g, kTriple38, Outcome::d10), 1.3268e-02, 1e-3));
}

TEST_CASE("degenerate intensities are rejected") {
    const GainsTable g = gains38();
    CHECK_THROWS_AS(y00_upper(g, {0.087, 0.087, 1e-4}, Outcome::d10), std::invalid_argument);
    CHECK_THROWS_AS(y11_upper(g, {0.087, 0.0088, 0.0088}, Outcome::d10),
                    std::invalid_argument);
    CHECK_THROWS_AS(y02_upper(g, {0.0088, 0.087, 1e-4}, Outcome::d10), std::invalid_argument);
    CHECK_THROWS_AS(y20_upper(g, {0.087, 0.0088, -1e-6}, Outcome::d10), std::invalid_argument);
}

TEST_CASE("bounds are sound on model-consistent synthetic data") {
    std::mt19937_64 rng(0x5eed5eedULL);
    for (int trial = 0; trial < 50; ++trial) {
        const SyntheticExperiment exp = random_experiment(rng);
        for (Outcome oc : kOutcomes) {
            // identical yields drive both outcomes, so check one set per trial
            CHECK(y00_upper(exp.gains, exp.triple, oc) >= exp.yields[0][0] - 1e-11);
            CHECK(y11_upper(exp.gains, exp.triple, oc) >= exp.yields[1][1] - 1e-11);
            CHECK(y02_upper(exp.gains, exp.triple, oc) >= exp.yields[0][2] - 1e-11);
            CHECK(y20_upper(exp.gains, exp.triple, oc) >= exp.yields[2][0] - 1e-11);
        }
    }
}

TEST_CASE("mirrored yields swap the two-photon bounds") {
    std::mt19937_64 rng(77);
    SyntheticExperiment exp = random_experiment(rng);

    YieldMatrix transposed{};
    for (int n = 0; n < kYieldDim; ++n) {
        for (int m = 0; m < kYieldDim; ++m) transposed[n][m] = exp.yields[m][n];
    }
    GainsTable mirrored{};
    fill_gains(mirrored, transposed, exp.triple, Outcome::d10);

    const double y02 = y02_upper(exp.gains, exp.triple, Outcome::d10);
    const double y20_of_mirror = y20_upper(mirrored, exp.triple, Outcome::d10);
    CHECK(rel_close(y20_of_mirror, y02, 1e-12));
}

TEST_CASE("outputs stay clamped to [0,1] for arbitrary gains") {
    std::mt19937_64 rng(123);
    std::uniform_real_distribution<double> uni(0.0, 0.5);
    for (int trial = 0; trial < 50; ++trial) {
        GainsTable garbage;
        for (DecoySlot a : kDecoySlots) {
            for (DecoySlot b : kDecoySlots) {
                garbage.at(a, b, Outcome::d10) = uni(rng);
                garbage.at(a, b, Outcome::d01) = uni(rng);
            }
        }
        for (Outcome oc : kOutcomes) {
            for (double y : {y00_upper(garbage, kTriple38, oc),
                             y11_upper(garbage, kTriple38, oc),
                             y02_upper(garbage, kTriple38, oc),
                             y20_upper(garbage, kTriple38, oc)}) {
                CHECK(y >= 0.0);
                CHECK(y <= 1.0);
            }
        }
    }
}

TEST_CASE("the returned bound never exceeds any admissible candidate") {
    const GainsTable g = gains38();
    for (Outcome oc : kOutcomes) {
        const double y11 = y11_upper(g, kTriple38, oc);
        for (const BoundCandidate& c : y11_candidates(g, kTriple38, oc)) {
            if (c.value >= 0.0) CHECK(y11 <= c.value);
        }
        const double y02 = y02_upper(g, kTriple38, oc);
        for (const BoundCandidate& c : y02_candidates(g, kTriple38, oc)) {
            if (c.value >= 0.0) CHECK(y02 <= c.value);
        }
        const double y20 = y20_upper(g, kTriple38, oc);
        for (const BoundCandidate& c : y20_candidates(g, kTriple38, oc)) {
            if (c.value >= 0.0) CHECK(y20 <= c.value);
        }
    }
}

TEST_CASE("candidate enumeration is deterministic and labelled") {
    const GainsTable g = gains38();
    const auto a = y11_candidates(g, kTriple38, Outcome::d10);
    const auto b = y11_candidates(g, kTriple38, Outcome::d10);
    REQUIRE(a.size() == 10);  // 9 pair choices + the three-point ladder
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].value == b[i].value);
        CHECK(a[i].assignment.label() == b[i].assignment.label());
    }
    CHECK(a[0].assignment.label() == "a=(mu,nu) b=(mu,nu)");
    CHECK(a[9].assignment.label() == "a=(mu,nu,omega) b=(mu,nu,omega)");
    CHECK(y11_candidates(g, kTriple38, Outcome::d01).size() == 10);
    CHECK(y02_candidates(g, kTriple38, Outcome::d10).size() == 3);
    CHECK(y20_candidates(g, kTriple38, Outcome::d10).size() == 3);
}

TEST_CASE("identical inputs give bit-identical bounds") {
    const GainsTable g = gains38();
    for (Outcome oc : kOutcomes) {
        CHECK(y00_upper(g, kTriple38, oc) == y00_upper(g, kTriple38, oc));
        CHECK(y11_upper(g, kTriple38, oc) == y11_upper(g, kTriple38, oc));
        CHECK(y02_upper(g, kTriple38, oc) == y02_upper(g, kTriple38, oc));
        CHECK(y20_upper(g, kTriple38, oc) == y20_upper(g, kTriple38, oc));
    }
}
