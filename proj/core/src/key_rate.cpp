#include "tfqkd/key_rate.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace tfqkd {

void ProtocolParams::validate() const {
    if (!(f_ec >= 1.0)) throw std::invalid_argument("f_ec must be >= 1");
    if (!(p_x > 0.0 && p_x <= 1.0)) throw std::invalid_argument("p_x must be in (0,1]");
    if (series_cutoff < 10) throw std::invalid_argument("series_cutoff must be >= 10");
}

double click_probability(const XBasisStats& stats, Outcome oc) {
    double sum = 0.0;
    for (int b_a : {0, 1}) {
        for (int b_b : {0, 1}) {
            sum += stats.at(b_a, b_b, oc);
        }
    }
    return 0.25 * sum;
}

double qber(const XBasisStats& stats, Outcome oc) {
    const double p = click_probability(stats, oc);
    if (p <= 0.0) throw std::domain_error("undefined QBER: click probability is zero");
    double errors = 0.0;
    if (oc == Outcome::d10) {
        errors = stats.at(0, 1, oc) + stats.at(1, 0, oc);
    } else {
        errors = stats.at(0, 0, oc) + stats.at(1, 1, oc);
    }
    return errors / (4.0 * p);
}

double coherent_coeff(double alpha2, int n) {
    if (n < 0) throw std::domain_error("photon-number index must be >= 0");
    const double alpha = std::sqrt(alpha2);
    // c_0 = exp(-alpha2/2); c_n = c_{n-1} * alpha / sqrt(n). The recurrence
    // avoids overflowing alpha^n / n! for large cutoffs.
    double c = std::exp(-alpha2 / 2.0);
    for (int k = 1; k <= n; ++k) {
        c *= alpha / std::sqrt(static_cast<double>(k));
    }
    return c;
}

Residuals residuals(double alpha2, int cutoff) {
    if (cutoff < 10) throw std::invalid_argument("series cutoff must be >= 10");
    const double alpha = std::sqrt(alpha2);
    double even = 0.0, odd = 0.0;
    double c = std::exp(-alpha2 / 2.0);
    for (int n = 0; n <= cutoff; ++n) {
        if (n > 0) c *= alpha / std::sqrt(static_cast<double>(n));
        (n % 2 == 0 ? even : odd) += c;
    }
    const double c0 = coherent_coeff(alpha2, 0);
    const double c1 = coherent_coeff(alpha2, 1);
    const double c2 = coherent_coeff(alpha2, 2);
    // The double sums over even (odd) index pairs factorize into squares.
    return {even * even - c0 * c0 - 2.0 * c0 * c2, odd * odd - c1 * c1};
}

double phase_error_upper(const YieldBounds& y, double alpha2, double p_click,
                         const ProtocolParams& params) {
    if (p_click <= 0.0) {
        throw std::domain_error("phase-error bound undefined: click probability is zero");
    }
    const double c0 = coherent_coeff(alpha2, 0);
    const double c1 = coherent_coeff(alpha2, 1);
    const double c2 = coherent_coeff(alpha2, 2);
    const auto [delta, delta_bar] = residuals(alpha2, params.series_cutoff);

    const double even_part =
        c0 * c0 * std::sqrt(y.y00) + c0 * c2 * (std::sqrt(y.y02) + std::sqrt(y.y20)) + delta;
    const double odd_part = c1 * c1 * std::sqrt(y.y11) + delta_bar;
    const double bound = (even_part * even_part + odd_part * odd_part) / p_click;
    return std::min(bound, 1.0);
}

double binary_entropy(double x) {
    if (!(x >= 0.0 && x <= 1.0)) {
        std::ostringstream msg;
        msg << "binary entropy argument outside [0,1]: " << x;
        throw std::domain_error(msg.str());
    }
    if (x == 0.0 || x == 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double rate_per_detector(double p_click, double e, double e_ph,
                         const ProtocolParams& params) {
    const double bracket = 1.0 - params.f_ec * binary_entropy(e) - binary_entropy(e_ph);
    return std::max(params.p_x * params.p_x * p_click * bracket, 0.0);
}

double total_rate(double r10, double r01) {
    return r10 + r01;
}

}  // namespace tfqkd
