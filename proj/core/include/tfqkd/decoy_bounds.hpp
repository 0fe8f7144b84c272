#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tfqkd/types.hpp"

namespace tfqkd {

/// One admissible intensity assignment used to build a yield-bound candidate.
/// a1 > a0 are Alice's chosen intensities and b1 > b0 Bob's; abar1 / bbar1 are
/// the optional middle intensities of the three-point estimators.
struct PairAssignment {
    DecoySlot a1 = DecoySlot::mu;
    DecoySlot a0 = DecoySlot::omega;
    DecoySlot b1 = DecoySlot::mu;
    DecoySlot b0 = DecoySlot::omega;
    std::optional<DecoySlot> abar1;
    std::optional<DecoySlot> bbar1;

    std::string label() const;
};

/// A candidate upper bound together with the assignment that produced it.
/// `value` is the raw estimator output: it may be negative (statistical
/// fluctuations) or above 1; clamping happens only in the *_upper functions.
struct BoundCandidate {
    PairAssignment assignment;
    double value = 0.0;
};

// Upper bounds on the yields Y_nm for one detection outcome, estimated from
// the decoy-state gains. Each function enumerates every admissible intensity
// assignment, discards candidates whose raw value is negative (statistical
// fluctuations can push an estimator below its validity range; such a
// candidate carries no usable constraint), takes the minimum of the rest and
// clamps it to [0,1]. All functions throw std::invalid_argument if the
// intensity triple is not strictly ordered.

/// Vacuum-vacuum yield bound. Single closed-form estimator, no assignment
/// freedom; clamped to [0,1].
double y00_upper(const GainsTable& gains, const IntensityTriple& s, Outcome oc);

/// Single-photon pair yield bound: two-point difference estimators for every
/// ordered pair choice, plus the three-point estimator that uses the full
/// mu > nu > omega ladder on both sides.
double y11_upper(const GainsTable& gains, const IntensityTriple& s, Outcome oc);

/// Yield bound for Alice vacuum / Bob two-photon emissions.
double y02_upper(const GainsTable& gains, const IntensityTriple& s, Outcome oc);

/// Mirror image of y02_upper with the roles of Alice and Bob exchanged.
double y20_upper(const GainsTable& gains, const IntensityTriple& s, Outcome oc);

// Raw candidate lists (unclamped, unfiltered), in deterministic enumeration
// order. Used by the calibration/report mode of the CLI and by the tests.
std::vector<BoundCandidate> y11_candidates(const GainsTable& gains,
                                           const IntensityTriple& s, Outcome oc);
std::vector<BoundCandidate> y02_candidates(const GainsTable& gains,
                                           const IntensityTriple& s, Outcome oc);
std::vector<BoundCandidate> y20_candidates(const GainsTable& gains,
                                           const IntensityTriple& s, Outcome oc);

/// All four bounds for one outcome.
YieldBounds yield_bounds(const GainsTable& gains, const IntensityTriple& s, Outcome oc);

}  // namespace tfqkd
