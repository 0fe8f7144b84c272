#include "tfqkd/channel_model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tfqkd/pipeline.hpp"

namespace tfqkd {

void ChannelParams::validate() const {
    if (!(total_loss_db >= 0.0)) {
        throw std::invalid_argument("total_loss_db must be >= 0");
    }
    if (!(dark_count_prob >= 0.0 && dark_count_prob < 1.0)) {
        throw std::invalid_argument("dark_count_prob must be in [0,1)");
    }
    if (!(visibility >= 0.0 && visibility <= 1.0)) {
        throw std::invalid_argument("visibility must be in [0,1]");
    }
}

Transmittance Transmittance::from_loss_db(double loss_db) {
    return {std::pow(10.0, -loss_db / 10.0)};
}

void Transmittance::validate() const {
    if (!(eta > 0.0 && eta <= 1.0)) {
        throw std::invalid_argument("transmittance must be in (0,1]");
    }
}

namespace {

// Exclusive-click probabilities of two threshold detectors with Poissonian
// illumination lambda0 / lambda1 and independent dark counts.
struct ClickPair {
    double d10;
    double d01;
};

ClickPair exclusive_clicks(double lambda0, double lambda1, double dark) {
    const double silent0 = (1.0 - dark) * std::exp(-lambda0);
    const double silent1 = (1.0 - dark) * std::exp(-lambda1);
    return {(1.0 - silent0) * silent1, (1.0 - silent1) * silent0};
}

}  // namespace

XBasisStats simulate_x_stats(const ChannelParams& ch, double alpha2) {
    ch.validate();
    if (!(alpha2 >= 0.0)) throw std::invalid_argument("alpha2 must be >= 0");
    const double sqrt_eta = std::sqrt(Transmittance::from_loss_db(ch.total_loss_db).eta);

    XBasisStats stats;
    for (int b_a : {0, 1}) {
        for (int b_b : {0, 1}) {
            const double cos_delta = (b_a ^ b_b) ? -1.0 : 1.0;  // cos(pi*(bA^bB))
            const double lambda0 = alpha2 * sqrt_eta * (1.0 + ch.visibility * cos_delta);
            const double lambda1 = alpha2 * sqrt_eta * (1.0 - ch.visibility * cos_delta);
            const auto [d10, d01] = exclusive_clicks(lambda0, lambda1, ch.dark_count_prob);
            stats.at(b_a, b_b, Outcome::d10) = d10;
            stats.at(b_a, b_b, Outcome::d01) = d01;
        }
    }
    return stats;
}

GainsTable simulate_gains(const ChannelParams& ch, const IntensityTriple& s, int nodes) {
    ch.validate();
    s.validate();
    if (nodes < 2) throw std::invalid_argument("quadrature needs at least 2 nodes");
    const double sqrt_eta = std::sqrt(Transmittance::from_loss_db(ch.total_loss_db).eta);

    GainsTable gains;
    for (DecoySlot sa : kDecoySlots) {
        for (DecoySlot sb : kDecoySlots) {
            const double a = s[sa];
            const double b = s[sb];
            const double mean = (a + b) * sqrt_eta / 2.0;
            const double beat = ch.visibility * std::sqrt(a * b) * sqrt_eta;
            double sum10 = 0.0, sum01 = 0.0;
            for (int k = 0; k < nodes; ++k) {
                const double phi = 2.0 * std::numbers::pi * k / nodes;
                const double lambda0 = mean + beat * std::cos(phi);
                const double lambda1 = mean - beat * std::cos(phi);
                const auto [d10, d01] = exclusive_clicks(lambda0, lambda1, ch.dark_count_prob);
                sum10 += d10;
                sum01 += d01;
            }
            gains.at(sa, sb, Outcome::d10) = sum10 / nodes;
            gains.at(sa, sb, Outcome::d01) = sum01 / nodes;
        }
    }
    return gains;
}

double plob_bound(Transmittance t) {
    t.validate();
    if (t.eta >= 1.0) {
        throw std::domain_error("PLOB bound diverges at unit transmittance");
    }
    return -std::log2(1.0 - t.eta);
}

std::vector<SweepPoint> sweep_curve(const ChannelParams& base, double alpha2,
                                    const IntensityTriple& s,
                                    std::span<const double> loss_grid_db,
                                    const ProtocolParams& params, int nodes) {
    std::vector<SweepPoint> points;
    points.reserve(loss_grid_db.size());
    for (double loss_db : loss_grid_db) {
        ChannelParams ch = base;
        ch.total_loss_db = loss_db;
        const XBasisStats stats = simulate_x_stats(ch, alpha2);
        const GainsTable gains = simulate_gains(ch, s, nodes);
        const double rate = evaluate_total(gains, stats, s, alpha2, params);
        points.push_back({loss_db, rate, plob_bound(Transmittance::from_loss_db(loss_db))});
    }
    return points;
}

}  // namespace tfqkd
