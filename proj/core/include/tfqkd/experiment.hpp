#pragma once

#include <string>

#include "tfqkd/fluctuation.hpp"
#include "tfqkd/types.hpp"

namespace tfqkd {

/// Signal and decoy intensities with their measured uncertainty intervals.
struct IntensitySet {
    IntensityInterval alpha2;
    IntensityInterval mu;
    IntensityInterval nu;
    IntensityInterval omega;

    IntensityTriple centers() const { return {mu.center, nu.center, omega.center}; }
    FluctuationBox box() const { return {alpha2, mu, nu, omega}; }

    void validate() const;
};

/// One measured dataset: everything needed to run the full analysis.
struct ExperimentRecord {
    std::string label;
    double total_loss_db = 0.0;
    bool fiber_inserted = false;
    IntensitySet intensities;
    XBasisStats x_stats;
    GainsTable gains;

    void validate() const;
};

/// Analysis results for one detection outcome.
struct DetectorReport {
    double p = 0.0;  ///< click probability
    double e = 0.0;  ///< X-basis QBER
    YieldBounds yields;
    double e_ph = 0.0;
    double rate = 0.0;
};

/// Full analysis output for one experiment record.
struct KeyRateReport {
    DetectorReport d10;
    DetectorReport d01;
    double r_mean = 0.0;  ///< d10.rate + d01.rate at the interval centers
    double r_min = 0.0;   ///< worst case over the fluctuation box
    double r_max = 0.0;   ///< best case over the fluctuation box
    double plob = 0.0;

    const DetectorReport& detector(Outcome oc) const {
        return oc == Outcome::d10 ? d10 : d01;
    }
};

}  // namespace tfqkd
