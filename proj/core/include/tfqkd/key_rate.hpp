#pragma once

#include "tfqkd/types.hpp"

namespace tfqkd {

/// Fixed protocol-level parameters of the asymptotic rate formula.
struct ProtocolParams {
    double f_ec = 1.16;     ///< error-correction inefficiency, >= 1
    double p_x = 1.0;       ///< X-basis selection probability, (0,1]
    int series_cutoff = 60; ///< truncation index of the residual series, >= 10

    void validate() const;
};

/// Probability that the middle node announces `oc` given both parties sent
/// signal states, averaged over the uniform bit-pair prior.
double click_probability(const XBasisStats& stats, Outcome oc);

/// X-basis quantum bit-error rate for the given outcome. For d10 the error
/// events are anti-correlated bit pairs; for d01 (where Bob flips his bit)
/// they are the correlated ones. Throws std::domain_error when the click
/// probability vanishes.
double qber(const XBasisStats& stats, Outcome oc);

/// Photon-number amplitude of a coherent state of mean photon number alpha2:
/// c_n = exp(-alpha2/2) * alpha^n / sqrt(n!). Normalized: sum of c_n^2 = 1.
double coherent_coeff(double alpha2, int n);

/// Residual weights of the even/odd photon-number tails beyond the terms kept
/// explicitly in the phase-error estimate. Both are non-negative.
struct Residuals {
    double delta = 0.0;
    double delta_bar = 0.0;
};
Residuals residuals(double alpha2, int cutoff = 60);

/// Upper bound on the phase-error rate from the yield bounds and the signal
/// intensity; capped at 1. Throws std::domain_error when p_click is zero.
double phase_error_upper(const YieldBounds& y, double alpha2, double p_click,
                         const ProtocolParams& params = {});

/// Binary Shannon entropy with h(0) = h(1) = 0; throws std::domain_error
/// outside [0,1].
double binary_entropy(double x);

/// Per-detector asymptotic secret key rate (bits per pulse), floored at 0.
double rate_per_detector(double p_click, double e, double e_ph,
                         const ProtocolParams& params = {});

/// Total rate over both exclusive-click outcomes.
double total_rate(double r10, double r01);

}  // namespace tfqkd
