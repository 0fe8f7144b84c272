#include "tfqkd/decoy_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace tfqkd {

std::string PairAssignment::label() const {
    std::ostringstream out;
    out << "a=(" << to_string(a1);
    if (abar1) out << "," << to_string(*abar1);
    out << "," << to_string(a0) << ") b=(" << to_string(b1);
    if (bbar1) out << "," << to_string(*bbar1);
    out << "," << to_string(b0) << ")";
    return out.str();
}

namespace {

// Ordered (high, low) slot pairs; the triple ordering makes each admissible.
constexpr std::array<std::pair<DecoySlot, DecoySlot>, 3> kOrderedPairs = {{
    {DecoySlot::mu, DecoySlot::nu},
    {DecoySlot::mu, DecoySlot::omega},
    {DecoySlot::nu, DecoySlot::omega},
}};

double clamp01(double v) {
    return std::clamp(v, 0.0, 1.0);
}

// Minimum over non-negative candidates, clamped to [0,1]; 0 when every
// candidate is negative (the data then carries no usable constraint).
double min_nonnegative(const std::vector<BoundCandidate>& candidates) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& c : candidates) {
        if (c.value >= 0.0) best = std::min(best, c.value);
    }
    return std::isfinite(best) ? clamp01(best) : 0.0;
}

// exp(a+b) * Q^{ab}: the gain rescaled back to the photon-number series.
double scaled_gain(const GainsTable& g, const IntensityTriple& s, DecoySlot a,
                   DecoySlot b, Outcome oc) {
    return std::exp(s[a] + s[b]) * g.at(a, b, oc);
}

}  // namespace

double y00_upper(const GainsTable& gains, const IntensityTriple& s, Outcome oc) {
    s.validate();
    const double mu = s.mu, nu = s.nu, om = s.omega;
    const auto q = [&](DecoySlot a, DecoySlot b) { return gains.at(a, b, oc); };

    const double d_mn = nu * nu * std::exp(2 * mu) * q(DecoySlot::mu, DecoySlot::mu) +
                        mu * mu * std::exp(2 * nu) * q(DecoySlot::nu, DecoySlot::nu) -
                        mu * nu * std::exp(mu + nu) *
                            (q(DecoySlot::mu, DecoySlot::nu) + q(DecoySlot::nu, DecoySlot::mu));
    const double d_mo = om * om * std::exp(2 * mu) * q(DecoySlot::mu, DecoySlot::mu) +
                        mu * mu * std::exp(2 * om) * q(DecoySlot::omega, DecoySlot::omega) -
                        mu * om * std::exp(mu + om) *
                            (q(DecoySlot::mu, DecoySlot::omega) + q(DecoySlot::omega, DecoySlot::mu));
    const double d_no = om * om * std::exp(2 * nu) * q(DecoySlot::nu, DecoySlot::nu) +
                        nu * nu * std::exp(2 * om) * q(DecoySlot::omega, DecoySlot::omega) -
                        nu * om * std::exp(nu + om) *
                            (q(DecoySlot::nu, DecoySlot::omega) + q(DecoySlot::omega, DecoySlot::nu));

    const double numerator =
        om * om * d_mn / (mu - nu) - nu * nu * d_mo / (mu - om) + mu * mu * d_no / (nu - om);
    return clamp01(numerator / ((mu - nu) * (mu - om) * (nu - om)));
}

std::vector<BoundCandidate> y11_candidates(const GainsTable& gains,
                                           const IntensityTriple& s, Outcome oc) {
    s.validate();
    std::vector<BoundCandidate> out;
    out.reserve(10);

    // Two-point difference estimator for every ordered pair on each side.
    for (const auto& [A1, A0] : kOrderedPairs) {
        for (const auto& [B1, B0] : kOrderedPairs) {
            const double a1 = s[A1], a0 = s[A0], b1 = s[B1], b0 = s[B0];
            const double gamma = scaled_gain(gains, s, A0, B0, oc) +
                                 scaled_gain(gains, s, A1, B1, oc) -
                                 scaled_gain(gains, s, A0, B1, oc) -
                                 scaled_gain(gains, s, A1, B0, oc);
            out.push_back({{A1, A0, B1, B0, std::nullopt, std::nullopt},
                           gamma / ((a1 - a0) * (b1 - b0))});
        }
    }

    // Three-point estimator; the triple admits exactly one ladder per side.
    const DecoySlot A1 = DecoySlot::mu, AB1 = DecoySlot::nu, A0 = DecoySlot::omega;
    const DecoySlot B1 = DecoySlot::mu, BB1 = DecoySlot::nu, B0 = DecoySlot::omega;
    const double a1 = s[A1], ab1 = s[AB1], a0 = s[A0];
    const double b1 = s[B1], bb1 = s[BB1], b0 = s[B0];

    const auto sg = [&](DecoySlot a, DecoySlot b) { return scaled_gain(gains, s, a, b, oc); };
    const double xi =
        (ab1 * ab1 - a0 * a0) * (bb1 * bb1 - b0 * b0) *
            (sg(A1, B1) - sg(A1, B0) - sg(A0, B1) + sg(A0, B0)) -
        (ab1 * ab1 - a0 * a0) * (b1 * b1 - b0 * b0) *
            (sg(A1, BB1) - sg(A1, B0) - sg(A0, BB1) + sg(A0, B0)) -
        (a1 * a1 - a0 * a0) * (bb1 * bb1 - b0 * b0) *
            (sg(AB1, B1) - sg(AB1, B0) - sg(A0, B1) + sg(A0, B0)) +
        (a1 * a1 - a0 * a0) * (b1 * b1 - b0 * b0) *
            (sg(AB1, BB1) - sg(AB1, B0) - sg(A0, BB1) + sg(A0, B0));

    // Coefficient of Y11 in the three-point series: each factor is <= 0 by
    // the ordering, so the product is >= 0.
    const double coef_a = (ab1 * ab1 - a0 * a0) * (a1 - a0) - (a1 * a1 - a0 * a0) * (ab1 - a0);
    const double coef_b = (bb1 * bb1 - b0 * b0) * (b1 - b0) - (b1 * b1 - b0 * b0) * (bb1 - b0);

    // Closed form of the n,m >= 3 residual series.
    const auto tail = [](double z0, double z1, double zb1) {
        const double t1 = z0 + z0 * z0 / 2 - z1 / 2 * (2 + z1) - std::exp(z0) + std::exp(z1);
        const double t2 = z0 + z0 * z0 / 2 - zb1 / 2 * (2 + zb1) - std::exp(z0) + std::exp(zb1);
        return (zb1 * zb1 - z0 * z0) * t1 - (z1 * z1 - z0 * z0) * t2;
    };
    const double zeta = coef_a * tail(b0, b1, bb1) + coef_b * tail(a0, a1, ab1);

    out.push_back({{A1, A0, B1, B0, AB1, BB1}, (xi - zeta) / (coef_a * coef_b)});
    return out;
}

std::vector<BoundCandidate> y02_candidates(const GainsTable& gains,
                                           const IntensityTriple& s, Outcome oc) {
    s.validate();
    std::vector<BoundCandidate> out;
    out.reserve(3);

    // Bob's side always uses the full ladder; Alice's pair is free.
    const DecoySlot B1 = DecoySlot::mu, BB1 = DecoySlot::nu, B0 = DecoySlot::omega;
    const double b1 = s[B1], bb1 = s[BB1], b0 = s[B0];

    for (const auto& [A1, A0] : kOrderedPairs) {
        const double a1 = s[A1], a0 = s[A0];
        const auto sg = [&](DecoySlot a, DecoySlot b) { return scaled_gain(gains, s, a, b, oc); };
        const double omega_est =
            (b1 - bb1) * (a1 * sg(A0, B0) - a0 * sg(A1, B0)) +
            (b1 - b0) * (a0 * sg(A1, BB1) - a1 * sg(A0, BB1)) +
            (bb1 - b0) * (a1 * sg(A0, B1) - a0 * sg(A1, B1));
        const double lambda =
            (a0 * (1 - std::exp(a1)) - a1 * (1 - std::exp(a0))) *
            ((bb1 - b0) * (b0 - b1 - std::exp(b0) + std::exp(b1)) -
             (b1 - b0) * (b0 - bb1 - std::exp(b0) + std::exp(bb1)));
        const double denom = (a1 - a0) * (b1 - b0) * (bb1 - b0) * (b1 - bb1);
        out.push_back({{A1, A0, B1, B0, std::nullopt, BB1},
                       2 * (omega_est - lambda) / denom});
    }
    return out;
}

std::vector<BoundCandidate> y20_candidates(const GainsTable& gains,
                                           const IntensityTriple& s, Outcome oc) {
    s.validate();
    std::vector<BoundCandidate> out;
    out.reserve(3);

    const DecoySlot A1 = DecoySlot::mu, AB1 = DecoySlot::nu, A0 = DecoySlot::omega;
    const double a1 = s[A1], ab1 = s[AB1], a0 = s[A0];

    for (const auto& [B1, B0] : kOrderedPairs) {
        const double b1 = s[B1], b0 = s[B0];
        const auto sg = [&](DecoySlot a, DecoySlot b) { return scaled_gain(gains, s, a, b, oc); };
        const double lambda_est =
            (a1 - ab1) * (b1 * sg(A0, B0) - b0 * sg(A0, B1)) +
            (a1 - a0) * (b0 * sg(AB1, B1) - b1 * sg(AB1, B0)) +
            (ab1 - a0) * (b1 * sg(A1, B0) - b0 * sg(A1, B1));
        const double tau =
            ((ab1 - a0) * (a0 - a1 - std::exp(a0) + std::exp(a1)) -
             (a1 - a0) * (a0 - ab1 - std::exp(a0) + std::exp(ab1))) *
            (b0 * (1 - std::exp(b1)) - b1 * (1 - std::exp(b0)));
        const double denom = (a1 - a0) * (ab1 - a0) * (a1 - ab1) * (b1 - b0);
        out.push_back({{A1, A0, B1, B0, AB1, std::nullopt},
                       2 * (lambda_est - tau) / denom});
    }
    return out;
}

double y11_upper(const GainsTable& gains, const IntensityTriple& s, Outcome oc) {
    return min_nonnegative(y11_candidates(gains, s, oc));
}

double y02_upper(const GainsTable& gains, const IntensityTriple& s, Outcome oc) {
    return min_nonnegative(y02_candidates(gains, s, oc));
}

double y20_upper(const GainsTable& gains, const IntensityTriple& s, Outcome oc) {
    return min_nonnegative(y20_candidates(gains, s, oc));
}

YieldBounds yield_bounds(const GainsTable& gains, const IntensityTriple& s, Outcome oc) {
    return {
        y00_upper(gains, s, oc),
        y11_upper(gains, s, oc),
        y02_upper(gains, s, oc),
        y20_upper(gains, s, oc),
    };
}

}  // namespace tfqkd
