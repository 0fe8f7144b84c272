#pragma once

#include <span>
#include <vector>

#include "tfqkd/key_rate.hpp"
#include "tfqkd/types.hpp"

namespace tfqkd {

/// Physical parameters of the symmetric optical channel. Detector efficiency
/// is folded into total_loss_db; each arm carries the square root of the
/// end-to-end transmittance.
struct ChannelParams {
    double total_loss_db = 0.0;
    double dark_count_prob = 6.8e-7;  ///< per detector, per gate
    double visibility = 1.0;

    void validate() const;
};

/// End-to-end transmittance eta = 10^(-loss_db/10).
struct Transmittance {
    double eta = 1.0;

    static Transmittance from_loss_db(double loss_db);
    void validate() const;  // requires 0 < eta <= 1
};

/// Expected signal-state exclusive-click statistics for each bit pair: the
/// two detector modes see mean photon numbers
///   lambda_{0,1} = alpha2 * sqrt(eta) * (1 +- v * cos(pi * (bA ^ bB)))
/// and each threshold detector fires unless both the optical mode and the
/// dark-count coin stay silent.
XBasisStats simulate_x_stats(const ChannelParams& ch, double alpha2);

/// Expected decoy-state gains: the relative phase of the two phase-randomized
/// pulses is averaged over [0, 2pi) with a uniform trapezoidal rule (the
/// integrand is periodic, so the rule converges spectrally).
GainsTable simulate_gains(const ChannelParams& ch, const IntensityTriple& s,
                          int nodes = 2048);

/// Repeaterless secret-key capacity benchmark -log2(1 - eta) in bits per use.
/// Throws std::domain_error at eta = 1 (divergent).
double plob_bound(Transmittance t);

struct SweepPoint {
    double loss_db = 0.0;
    double rate = 0.0;
    double plob = 0.0;
};

/// Simulated rate-vs-loss curve: for each loss the channel model generates
/// the statistics, the full bound/rate pipeline evaluates them, and the PLOB
/// benchmark is attached for comparison.
std::vector<SweepPoint> sweep_curve(const ChannelParams& base, double alpha2,
                                    const IntensityTriple& s,
                                    std::span<const double> loss_grid_db,
                                    const ProtocolParams& params = {},
                                    int nodes = 2048);

}  // namespace tfqkd
