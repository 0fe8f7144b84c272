#pragma once

#include <array>
#include <cstddef>
#include <string_view>

namespace tfqkd {

/// The two exclusive-click announcements of the middle node: exactly one of
/// the two threshold detectors fires.
enum class Outcome : int {
    d10 = 0,  ///< click only in detector D0
    d01 = 1,  ///< click only in detector D1
};

inline constexpr std::array<Outcome, 2> kOutcomes = {Outcome::d10, Outcome::d01};

std::string_view to_string(Outcome oc);

/// Slot into the ordered decoy-intensity set {mu > nu > omega}.
enum class DecoySlot : int { mu = 0, nu = 1, omega = 2 };

inline constexpr std::array<DecoySlot, 3> kDecoySlots = {DecoySlot::mu, DecoySlot::nu,
                                                         DecoySlot::omega};

std::string_view to_string(DecoySlot slot);

/// Mean photon numbers of the three phase-randomized decoy states.
/// Every bound derivation requires the strict ordering mu > nu > omega >= 0.
struct IntensityTriple {
    double mu = 0.0;
    double nu = 0.0;
    double omega = 0.0;

    double operator[](DecoySlot slot) const {
        switch (slot) {
            case DecoySlot::mu: return mu;
            case DecoySlot::nu: return nu;
            default: return omega;
        }
    }

    /// Throws std::invalid_argument unless mu > nu > omega >= 0 (strict, no epsilon).
    void validate() const;
};

/// Exclusive-click gains of the decoy (phase-randomized) signals: the
/// probability of announcing `outcome` given Alice sent intensity `a` and Bob
/// sent intensity `b`.
struct GainsTable {
    // [a][b][outcome]
    std::array<std::array<std::array<double, 2>, 3>, 3> q{};

    double at(DecoySlot a, DecoySlot b, Outcome oc) const {
        return q[static_cast<int>(a)][static_cast<int>(b)][static_cast<int>(oc)];
    }
    double& at(DecoySlot a, DecoySlot b, Outcome oc) {
        return q[static_cast<int>(a)][static_cast<int>(b)][static_cast<int>(oc)];
    }

    /// Throws unless every entry lies in [0,1] and the pair of exclusive-click
    /// probabilities of each (a,b) sums to at most 1.
    void validate() const;
};

/// Conditional exclusive-click probabilities of the signal states, indexed by
/// the encoded bit pair (b_A, b_B).
struct XBasisStats {
    // [b_A][b_B][outcome]
    std::array<std::array<std::array<double, 2>, 2>, 2> p{};

    double at(int b_a, int b_b, Outcome oc) const {
        return p[b_a][b_b][static_cast<int>(oc)];
    }
    double& at(int b_a, int b_b, Outcome oc) {
        return p[b_a][b_b][static_cast<int>(oc)];
    }

    void validate() const;
};

/// Upper bounds on the four yields entering the phase-error estimate, for one
/// detection outcome. All fields are clamped to [0,1] by construction.
struct YieldBounds {
    double y00 = 0.0;
    double y11 = 0.0;
    double y02 = 0.0;
    double y20 = 0.0;
};

}  // namespace tfqkd
