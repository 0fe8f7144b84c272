#pragma once

#include "tfqkd/key_rate.hpp"
#include "tfqkd/types.hpp"

namespace tfqkd {

/// Symmetric uncertainty interval of one source intensity.
struct IntensityInterval {
    double center = 0.0;
    double half_width = 0.0;

    double lo() const { return center - half_width; }
    double hi() const { return center + half_width; }
};

/// Joint uncertainty box of the signal intensity and the three decoy
/// intensities. Alice and Bob share one box: their sources fluctuate
/// identically in this model.
struct FluctuationBox {
    IntensityInterval alpha2;
    IntensityInterval mu;
    IntensityInterval nu;
    IntensityInterval omega;

    /// Throws unless half-widths are non-negative, alpha2/mu/nu stay positive
    /// and omega non-negative at the lower corner, and mu > nu > omega holds
    /// at every corner of the box.
    void validate() const;
};

enum class Sense { minimize, maximize };

struct ExtremizeConfig {
    int grid_points = 7;       ///< points per axis of the tensor grid
    int refine_passes = 1;     ///< halved-step passes around the incumbent
    bool per_detector = false; ///< extremize each detector separately, then sum

    void validate() const;
};

struct ExtremizePoint {
    double alpha2 = 0.0;
    double mu = 0.0;
    double nu = 0.0;
    double omega = 0.0;
};

struct ExtremizeResult {
    double rate = 0.0;
    ExtremizePoint at;  ///< argmin/argmax intensities (of the total-rate search)
};

/// Worst/best-case total key rate when the intensity values entering the
/// bound and rate formulas range over `box`. The measured gains and signal
/// statistics are fixed data; only the intensities vary. Exhaustive tensor
/// grid plus halved-step refinement passes recentered on the incumbent.
ExtremizeResult extremize_rate(const GainsTable& gains, const XBasisStats& stats,
                               const FluctuationBox& box, Sense sense,
                               const ExtremizeConfig& cfg = {},
                               const ProtocolParams& params = {});

}  // namespace tfqkd
