#pragma once

#include "tfqkd/experiment.hpp"
#include "tfqkd/fluctuation.hpp"
#include "tfqkd/key_rate.hpp"
#include "tfqkd/types.hpp"

namespace tfqkd {

/// Bounds → phase error → rate for one outcome at fixed intensity values.
DetectorReport evaluate_detector(const GainsTable& gains, const XBasisStats& stats,
                                 const IntensityTriple& s, double alpha2, Outcome oc,
                                 const ProtocolParams& params = {});

/// Total rate over both outcomes at fixed intensity values.
double evaluate_total(const GainsTable& gains, const XBasisStats& stats,
                      const IntensityTriple& s, double alpha2,
                      const ProtocolParams& params = {});

/// Full analysis of a record: per-detector results at the interval centers,
/// fluctuation worst/best cases over the uncertainty box, and the PLOB
/// benchmark at the record's loss.
KeyRateReport analyze_experiment(const ExperimentRecord& record,
                                 const ProtocolParams& params = {},
                                 const ExtremizeConfig& cfg = {});

}  // namespace tfqkd
