#include "tfqkd/fluctuation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "tfqkd/pipeline.hpp"

namespace tfqkd {

void FluctuationBox::validate() const {
    for (const auto* iv : {&alpha2, &mu, &nu, &omega}) {
        if (!(iv->half_width >= 0.0)) {
            throw std::invalid_argument("fluctuation interval half_width must be >= 0");
        }
    }
    if (!(alpha2.lo() > 0.0)) {
        throw std::invalid_argument("alpha2 interval must stay positive");
    }
    if (!(mu.lo() > 0.0 && nu.lo() > 0.0)) {
        throw std::invalid_argument("mu and nu intervals must stay positive");
    }
    if (!(omega.lo() >= 0.0)) {
        throw std::invalid_argument("omega interval must stay non-negative");
    }
    // Ordering must hold at every corner, i.e. between adjacent interval edges.
    if (!(mu.lo() > nu.hi() && nu.lo() > omega.hi())) {
        throw std::invalid_argument(
            "fluctuation box breaks the intensity ordering mu > nu > omega at a corner");
    }
}

void ExtremizeConfig::validate() const {
    if (grid_points < 1) throw std::invalid_argument("grid_points must be >= 1");
    if (refine_passes < 0) throw std::invalid_argument("refine_passes must be >= 0");
}

namespace {

std::vector<double> axis_points(double center, double half_width, int n) {
    if (half_width == 0.0 || n == 1) return {center};
    std::vector<double> pts(n);
    const double lo = center - half_width;
    const double step = 2.0 * half_width / (n - 1);
    for (int i = 0; i < n; ++i) pts[i] = lo + i * step;
    return pts;
}

struct Axis {
    double lo, hi, center, half_width;
};

// Tensor-grid search with halved-step refinement recentered on the incumbent.
// The incumbent survives across passes, so refinement can only improve it.
ExtremizeResult grid_search(const std::function<double(const ExtremizePoint&)>& objective,
                            const FluctuationBox& box, Sense sense,
                            const ExtremizeConfig& cfg) {
    std::array<Axis, 4> axes = {{
        {box.alpha2.lo(), box.alpha2.hi(), box.alpha2.center, box.alpha2.half_width},
        {box.mu.lo(), box.mu.hi(), box.mu.center, box.mu.half_width},
        {box.nu.lo(), box.nu.hi(), box.nu.center, box.nu.half_width},
        {box.omega.lo(), box.omega.hi(), box.omega.center, box.omega.half_width},
    }};

    const double sign = sense == Sense::minimize ? 1.0 : -1.0;
    bool have_best = false;
    double best_val = 0.0;
    ExtremizePoint best_at;

    for (int pass = 0; pass <= cfg.refine_passes; ++pass) {
        const auto a2s = axis_points(axes[0].center, axes[0].half_width, cfg.grid_points);
        const auto mus = axis_points(axes[1].center, axes[1].half_width, cfg.grid_points);
        const auto nus = axis_points(axes[2].center, axes[2].half_width, cfg.grid_points);
        const auto oms = axis_points(axes[3].center, axes[3].half_width, cfg.grid_points);
        for (double a2 : a2s) {
            for (double mu : mus) {
                for (double nu : nus) {
                    for (double om : oms) {
                        const ExtremizePoint pt{a2, mu, nu, om};
                        const double v = sign * objective(pt);
                        if (!have_best || v < sign * best_val) {
                            have_best = true;
                            best_val = sign * v;
                            best_at = pt;
                        }
                    }
                }
            }
        }
        // Next pass: halve each span and recenter on the incumbent, clipped so
        // the refined grid stays inside the original box.
        const std::array<double, 4> incumbent = {best_at.alpha2, best_at.mu, best_at.nu,
                                                 best_at.omega};
        for (std::size_t i = 0; i < axes.size(); ++i) {
            Axis& ax = axes[i];
            if (ax.half_width == 0.0) continue;
            ax.half_width /= 2.0;
            ax.center = std::clamp(incumbent[i], ax.lo + ax.half_width, ax.hi - ax.half_width);
        }
    }
    return {best_val, best_at};
}

}  // namespace

ExtremizeResult extremize_rate(const GainsTable& gains, const XBasisStats& stats,
                               const FluctuationBox& box, Sense sense,
                               const ExtremizeConfig& cfg, const ProtocolParams& params) {
    box.validate();
    cfg.validate();
    params.validate();

    const auto triple_of = [](const ExtremizePoint& pt) {
        return IntensityTriple{pt.mu, pt.nu, pt.omega};
    };

    if (!cfg.per_detector) {
        return grid_search(
            [&](const ExtremizePoint& pt) {
                return evaluate_total(gains, stats, triple_of(pt), pt.alpha2, params);
            },
            box, sense, cfg);
    }

    // Per-detector mode: each outcome gets its own search; the rates add but
    // the two argpoints may differ, so the reported point is the d10 one.
    ExtremizeResult combined;
    bool first = true;
    for (Outcome oc : kOutcomes) {
        const ExtremizeResult part = grid_search(
            [&](const ExtremizePoint& pt) {
                return evaluate_detector(gains, stats, triple_of(pt), pt.alpha2, oc, params)
                    .rate;
            },
            box, sense, cfg);
        combined.rate += part.rate;
        if (first) {
            combined.at = part.at;
            first = false;
        }
    }
    return combined;
}

}  // namespace tfqkd
