#include "tfqkd/dataio.hpp"

#include <cstdio>
#include <map>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace tfqkd {

using nlohmann::json;

namespace {

constexpr std::array<const char*, 4> kBitPairKeys = {"00", "01", "10", "11"};

double require_number(const json& node, const std::string& where) {
    if (!node.is_number()) {
        throw SchemaError(where + ": expected a number");
    }
    return node.get<double>();
}

const json& require_field(const json& obj, const std::string& key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) {
        throw SchemaError(where + ": missing field '" + key + "'");
    }
    return obj.at(key);
}

IntensityInterval parse_interval(const json& node, const std::string& where) {
    IntensityInterval iv;
    iv.center = require_number(require_field(node, "center", where), where + ".center");
    iv.half_width =
        require_number(require_field(node, "half_width", where), where + ".half_width");
    return iv;
}

ExperimentRecord record_from_json(const json& doc) {
    if (!doc.is_object()) throw SchemaError("record: expected a JSON object");
    ExperimentRecord rec;

    const json& label = require_field(doc, "label", "record");
    if (!label.is_string()) throw SchemaError("label: expected a string");
    rec.label = label.get<std::string>();

    rec.total_loss_db =
        require_number(require_field(doc, "total_loss_db", "record"), "total_loss_db");

    const json& fiber = require_field(doc, "fiber_inserted", "record");
    if (!fiber.is_boolean()) throw SchemaError("fiber_inserted: expected a boolean");
    rec.fiber_inserted = fiber.get<bool>();

    const json& ints = require_field(doc, "intensities", "record");
    rec.intensities.alpha2 =
        parse_interval(require_field(ints, "alpha2", "intensities"), "intensities.alpha2");
    rec.intensities.mu =
        parse_interval(require_field(ints, "mu", "intensities"), "intensities.mu");
    rec.intensities.nu =
        parse_interval(require_field(ints, "nu", "intensities"), "intensities.nu");
    rec.intensities.omega =
        parse_interval(require_field(ints, "omega", "intensities"), "intensities.omega");

    const json& stats = require_field(doc, "x_stats", "record");
    for (int b_a : {0, 1}) {
        for (int b_b : {0, 1}) {
            const std::string key = kBitPairKeys[b_a * 2 + b_b];
            const std::string where = "x_stats." + key;
            const json& cell = require_field(stats, key, "x_stats");
            rec.x_stats.at(b_a, b_b, Outcome::d10) =
                require_number(require_field(cell, "d10", where), where + ".d10");
            rec.x_stats.at(b_a, b_b, Outcome::d01) =
                require_number(require_field(cell, "d01", where), where + ".d01");
        }
    }

    const json& gains = require_field(doc, "gains", "record");
    for (DecoySlot a : kDecoySlots) {
        for (DecoySlot b : kDecoySlots) {
            const std::string key =
                std::string(to_string(a)) + "," + std::string(to_string(b));
            const std::string where = "gains." + key;
            const json& cell = require_field(gains, key, "gains");
            rec.gains.at(a, b, Outcome::d10) =
                require_number(require_field(cell, "d10", where), where + ".d10");
            rec.gains.at(a, b, Outcome::d01) =
                require_number(require_field(cell, "d01", where), where + ".d01");
        }
    }
    return rec;
}

// CSV record variant: "key,value" rows with dotted keys mirroring the JSON
// layout, e.g. "gains.mu.nu.d10". One row per gain and per probability.
ExperimentRecord record_from_csv(std::istream& in) {
    std::map<std::string, std::string> rows;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) {
            throw SchemaError("csv: row without a comma: '" + line + "'");
        }
        std::string key = line.substr(0, comma);
        std::string value = line.substr(comma + 1);
        if (first && key == "key") {  // optional header
            first = false;
            continue;
        }
        first = false;
        if (!rows.emplace(std::move(key), std::move(value)).second) {
            throw SchemaError("csv: duplicate key '" + line.substr(0, comma) + "'");
        }
    }
    if (rows.empty()) throw SchemaError("csv: empty document");

    const auto take = [&](const std::string& key) {
        const auto it = rows.find(key);
        if (it == rows.end()) throw SchemaError("csv: missing field '" + key + "'");
        std::string value = it->second;
        rows.erase(it);
        return value;
    };
    const auto take_number = [&](const std::string& key) {
        const std::string value = take(key);
        try {
            std::size_t used = 0;
            const double v = std::stod(value, &used);
            if (used != value.size()) throw std::invalid_argument(value);
            return v;
        } catch (const std::exception&) {
            throw SchemaError("csv: field '" + key + "': expected a number, got '" + value +
                              "'");
        }
    };

    ExperimentRecord rec;
    rec.label = take("label");
    rec.total_loss_db = take_number("total_loss_db");
    const std::string fiber = take("fiber_inserted");
    if (fiber != "true" && fiber != "false") {
        throw SchemaError("csv: field 'fiber_inserted': expected true or false");
    }
    rec.fiber_inserted = fiber == "true";

    for (auto [name, iv] : std::initializer_list<std::pair<const char*, IntensityInterval*>>{
             {"alpha2", &rec.intensities.alpha2},
             {"mu", &rec.intensities.mu},
             {"nu", &rec.intensities.nu},
             {"omega", &rec.intensities.omega}}) {
        iv->center = take_number(std::string("intensities.") + name + ".center");
        iv->half_width = take_number(std::string("intensities.") + name + ".half_width");
    }
    for (int b_a : {0, 1}) {
        for (int b_b : {0, 1}) {
            const std::string base = std::string("x_stats.") + kBitPairKeys[b_a * 2 + b_b];
            rec.x_stats.at(b_a, b_b, Outcome::d10) = take_number(base + ".d10");
            rec.x_stats.at(b_a, b_b, Outcome::d01) = take_number(base + ".d01");
        }
    }
    for (DecoySlot a : kDecoySlots) {
        for (DecoySlot b : kDecoySlots) {
            const std::string base = "gains." + std::string(to_string(a)) + "." +
                                     std::string(to_string(b));
            rec.gains.at(a, b, Outcome::d10) = take_number(base + ".d10");
            rec.gains.at(a, b, Outcome::d01) = take_number(base + ".d01");
        }
    }
    if (!rows.empty()) {
        throw SchemaError("csv: unknown field '" + rows.begin()->first + "'");
    }
    return rec;
}

json detector_to_json(const DetectorReport& rep) {
    return json{{"p", rep.p},
                {"e", rep.e},
                {"y00", rep.yields.y00},
                {"y11", rep.yields.y11},
                {"y02", rep.yields.y02},
                {"y20", rep.yields.y20},
                {"e_ph", rep.e_ph},
                {"rate", rep.rate}};
}

DetectorReport detector_from_json(const json& node, const std::string& where) {
    DetectorReport rep;
    rep.p = require_number(require_field(node, "p", where), where + ".p");
    rep.e = require_number(require_field(node, "e", where), where + ".e");
    rep.yields.y00 = require_number(require_field(node, "y00", where), where + ".y00");
    rep.yields.y11 = require_number(require_field(node, "y11", where), where + ".y11");
    rep.yields.y02 = require_number(require_field(node, "y02", where), where + ".y02");
    rep.yields.y20 = require_number(require_field(node, "y20", where), where + ".y20");
    rep.e_ph = require_number(require_field(node, "e_ph", where), where + ".e_ph");
    rep.rate = require_number(require_field(node, "rate", where), where + ".rate");
    return rep;
}

std::string full_precision(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string sci5(double v) {
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%.4e", v);
    return buf;
}

ExperimentRecord parse_experiment(std::istream& in, RecordFormat format) {
    if (format == RecordFormat::json) {
        json doc;
        try {
            doc = json::parse(in);
        } catch (const json::exception& ex) {
            throw SchemaError(std::string("record: invalid JSON: ") + ex.what());
        }
        return record_from_json(doc);
    }
    return record_from_csv(in);
}

ExperimentRecord load_experiment(std::istream& in, RecordFormat format) {
    ExperimentRecord rec = parse_experiment(in, format);
    rec.validate();
    return rec;
}

ExperimentRecord load_experiment(const std::string& text, RecordFormat format) {
    std::istringstream in(text);
    return load_experiment(in, format);
}

std::string emit_report(const KeyRateReport& report, ReportFormat format) {
    switch (format) {
        case ReportFormat::json: {
            const json doc = {{"d10", detector_to_json(report.d10)},
                              {"d01", detector_to_json(report.d01)},
                              {"totals",
                               {{"r_mean", report.r_mean},
                                {"r_min", report.r_min},
                                {"r_max", report.r_max},
                                {"plob", report.plob}}}};
            return doc.dump(2) + "\n";
        }
        case ReportFormat::table_text: {
            std::ostringstream out;
            out << "outcome  p           e           Y00_U       Y11_U       Y02_U       "
                   "Y20_U       e_ph        R\n";
            for (Outcome oc : kOutcomes) {
                const DetectorReport& rep = report.detector(oc);
                out << to_string(oc) << "      " << sci5(rep.p) << "  " << sci5(rep.e) << "  "
                    << sci5(rep.yields.y00) << "  " << sci5(rep.yields.y11) << "  "
                    << sci5(rep.yields.y02) << "  " << sci5(rep.yields.y20) << "  "
                    << sci5(rep.e_ph) << "  " << sci5(rep.rate) << "\n";
            }
            out << "totals   R_mean " << sci5(report.r_mean) << "  R_min "
                << sci5(report.r_min) << "  R_max " << sci5(report.r_max) << "  PLOB "
                << sci5(report.plob) << "\n";
            return out.str();
        }
        case ReportFormat::csv: {
            std::ostringstream out;
            out << "quantity,value\n";
            for (Outcome oc : kOutcomes) {
                const DetectorReport& rep = report.detector(oc);
                const std::string base(to_string(oc));
                out << base << ".p," << sci5(rep.p) << "\n";
                out << base << ".e," << sci5(rep.e) << "\n";
                out << base << ".y00," << sci5(rep.yields.y00) << "\n";
                out << base << ".y11," << sci5(rep.yields.y11) << "\n";
                out << base << ".y02," << sci5(rep.yields.y02) << "\n";
                out << base << ".y20," << sci5(rep.yields.y20) << "\n";
                out << base << ".e_ph," << sci5(rep.e_ph) << "\n";
                out << base << ".rate," << sci5(rep.rate) << "\n";
            }
            out << "totals.r_mean," << sci5(report.r_mean) << "\n";
            out << "totals.r_min," << sci5(report.r_min) << "\n";
            out << "totals.r_max," << sci5(report.r_max) << "\n";
            out << "totals.plob," << sci5(report.plob) << "\n";
            return out.str();
        }
    }
    throw std::logic_error("unreachable report format");
}

KeyRateReport load_report_json(std::istream& in) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& ex) {
        throw SchemaError(std::string("report: invalid JSON: ") + ex.what());
    }
    KeyRateReport report;
    report.d10 = detector_from_json(require_field(doc, "d10", "report"), "d10");
    report.d01 = detector_from_json(require_field(doc, "d01", "report"), "d01");
    const json& totals = require_field(doc, "totals", "report");
    report.r_mean = require_number(require_field(totals, "r_mean", "totals"), "totals.r_mean");
    report.r_min = require_number(require_field(totals, "r_min", "totals"), "totals.r_min");
    report.r_max = require_number(require_field(totals, "r_max", "totals"), "totals.r_max");
    report.plob = require_number(require_field(totals, "plob", "totals"), "totals.plob");
    return report;
}

KeyRateReport load_report_json(const std::string& text) {
    std::istringstream in(text);
    return load_report_json(in);
}

std::vector<std::string> invariant_diagnostics(const ExperimentRecord& record) {
    std::vector<std::string> out;
    if (!(record.total_loss_db > 0.0)) {
        out.push_back("total_loss_db: must be > 0");
    }

    const auto& iv = record.intensities;
    for (const auto& [name, interval] :
         std::initializer_list<std::pair<const char*, const IntensityInterval*>>{
             {"alpha2", &iv.alpha2}, {"mu", &iv.mu}, {"nu", &iv.nu}, {"omega", &iv.omega}}) {
        if (!(interval->half_width >= 0.0)) {
            out.push_back(std::string("intensities.") + name + ": negative half_width");
        }
    }
    if (!(iv.alpha2.lo() > 0.0)) out.push_back("intensities.alpha2: interval reaches 0");
    if (!(iv.mu.lo() > 0.0)) out.push_back("intensities.mu: interval reaches 0");
    if (!(iv.nu.lo() > 0.0)) out.push_back("intensities.nu: interval reaches 0");
    if (!(iv.omega.lo() >= 0.0)) out.push_back("intensities.omega: interval goes negative");
    if (!(iv.mu.lo() > iv.nu.hi() && iv.nu.lo() > iv.omega.hi())) {
        out.push_back("intensities: intensity ordering mu > nu > omega violated inside the "
                      "uncertainty box");
    }

    const auto check_pair = [&](const std::string& where, double p10, double p01) {
        if (!(p10 >= 0.0 && p10 <= 1.0)) {
            out.push_back(where + ".d10: probability out of range [0,1]");
        }
        if (!(p01 >= 0.0 && p01 <= 1.0)) {
            out.push_back(where + ".d01: probability out of range [0,1]");
        }
        if (p10 + p01 > 1.0) {
            out.push_back(where + ": exclusive-click pair sums above 1");
        }
    };
    for (int b_a : {0, 1}) {
        for (int b_b : {0, 1}) {
            check_pair("x_stats." + std::string(kBitPairKeys[b_a * 2 + b_b]),
                       record.x_stats.at(b_a, b_b, Outcome::d10),
                       record.x_stats.at(b_a, b_b, Outcome::d01));
        }
    }
    for (DecoySlot a : kDecoySlots) {
        for (DecoySlot b : kDecoySlots) {
            check_pair("gains." + std::string(to_string(a)) + "," +
                           std::string(to_string(b)),
                       record.gains.at(a, b, Outcome::d10),
                       record.gains.at(a, b, Outcome::d01));
        }
    }
    return out;
}

std::string emit_curve(std::span<const SweepPoint> points) {
    if (points.empty()) {
        throw std::invalid_argument("cannot emit an empty curve");
    }
    std::ostringstream out;
    out << "loss_db,rate,plob\n";
    for (const SweepPoint& pt : points) {
        out << full_precision(pt.loss_db) << "," << full_precision(pt.rate) << ","
            << full_precision(pt.plob) << "\n";
    }
    return out.str();
}

}  // namespace tfqkd
