#include "tfqkd/pipeline.hpp"

#include <stdexcept>

#include "tfqkd/channel_model.hpp"
#include "tfqkd/decoy_bounds.hpp"

namespace tfqkd {

void IntensitySet::validate() const {
    box().validate();  // same constraints, including corner ordering
}

void ExperimentRecord::validate() const {
    if (!(total_loss_db > 0.0)) {
        throw std::invalid_argument("total_loss_db must be > 0");
    }
    intensities.validate();
    x_stats.validate();
    gains.validate();
}

DetectorReport evaluate_detector(const GainsTable& gains, const XBasisStats& stats,
                                 const IntensityTriple& s, double alpha2, Outcome oc,
                                 const ProtocolParams& params) {
    DetectorReport rep;
    rep.p = click_probability(stats, oc);
    rep.e = qber(stats, oc);
    rep.yields = yield_bounds(gains, s, oc);
    rep.e_ph = phase_error_upper(rep.yields, alpha2, rep.p, params);
    rep.rate = rate_per_detector(rep.p, rep.e, rep.e_ph, params);
    return rep;
}

double evaluate_total(const GainsTable& gains, const XBasisStats& stats,
                      const IntensityTriple& s, double alpha2,
                      const ProtocolParams& params) {
    const double r10 = evaluate_detector(gains, stats, s, alpha2, Outcome::d10, params).rate;
    const double r01 = evaluate_detector(gains, stats, s, alpha2, Outcome::d01, params).rate;
    return total_rate(r10, r01);
}

KeyRateReport analyze_experiment(const ExperimentRecord& record,
                                 const ProtocolParams& params,
                                 const ExtremizeConfig& cfg) {
    record.validate();
    params.validate();

    const IntensityTriple centers = record.intensities.centers();
    const double alpha2 = record.intensities.alpha2.center;

    KeyRateReport report;
    report.d10 = evaluate_detector(record.gains, record.x_stats, centers, alpha2,
                                   Outcome::d10, params);
    report.d01 = evaluate_detector(record.gains, record.x_stats, centers, alpha2,
                                   Outcome::d01, params);
    report.r_mean = total_rate(report.d10.rate, report.d01.rate);

    const FluctuationBox box = record.intensities.box();
    report.r_min =
        extremize_rate(record.gains, record.x_stats, box, Sense::minimize, cfg, params).rate;
    report.r_max =
        extremize_rate(record.gains, record.x_stats, box, Sense::maximize, cfg, params).rate;

    report.plob = plob_bound(Transmittance::from_loss_db(record.total_loss_db));
    return report;
}

}  // namespace tfqkd
