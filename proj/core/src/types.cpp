#include "tfqkd/types.hpp"

#include <sstream>
#include <stdexcept>

namespace tfqkd {

std::string_view to_string(Outcome oc) {
    return oc == Outcome::d10 ? "d10" : "d01";
}

std::string_view to_string(DecoySlot slot) {
    switch (slot) {
        case DecoySlot::mu: return "mu";
        case DecoySlot::nu: return "nu";
        default: return "omega";
    }
}

void IntensityTriple::validate() const {
    if (!(mu > nu && nu > omega && omega >= 0.0)) {
        std::ostringstream msg;
        msg << "decoy intensities must satisfy mu > nu > omega >= 0, got mu=" << mu
            << " nu=" << nu << " omega=" << omega;
        throw std::invalid_argument(msg.str());
    }
}

namespace {

void check_probability(double v, const char* what) {
    if (!(v >= 0.0 && v <= 1.0)) {
        std::ostringstream msg;
        msg << what << ": probability out of range [0,1], got " << v;
        throw std::invalid_argument(msg.str());
    }
}

}  // namespace

void GainsTable::validate() const {
    for (DecoySlot a : kDecoySlots) {
        for (DecoySlot b : kDecoySlots) {
            std::ostringstream where;
            where << "gains." << to_string(a) << "," << to_string(b);
            const double q10 = at(a, b, Outcome::d10);
            const double q01 = at(a, b, Outcome::d01);
            check_probability(q10, (where.str() + ".d10").c_str());
            check_probability(q01, (where.str() + ".d01").c_str());
            if (q10 + q01 > 1.0) {
                throw std::invalid_argument(where.str() +
                                            ": exclusive-click pair sums above 1");
            }
        }
    }
}

void XBasisStats::validate() const {
    for (int b_a : {0, 1}) {
        for (int b_b : {0, 1}) {
            std::ostringstream where;
            where << "x_stats." << b_a << b_b;
            const double p10 = at(b_a, b_b, Outcome::d10);
            const double p01 = at(b_a, b_b, Outcome::d01);
            check_probability(p10, (where.str() + ".d10").c_str());
            check_probability(p01, (where.str() + ".d01").c_str());
            if (p10 + p01 > 1.0) {
                throw std::invalid_argument(where.str() +
                                            ": exclusive-click pair sums above 1");
            }
        }
    }
}

}  // namespace tfqkd
