// Command-line front end: keyrate / simulate / plob / validate.
// Data goes to stdout (or --out); diagnostics go to stderr; exit 0 iff clean.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tfqkd/channel_model.hpp"
#include "tfqkd/dataio.hpp"
#include "tfqkd/decoy_bounds.hpp"
#include "tfqkd/pipeline.hpp"

namespace {

using namespace tfqkd;

struct CommonOpts {
    double f_ec = 1.16;
    int cutoff = 60;

    ProtocolParams protocol() const {
        ProtocolParams params;
        params.f_ec = f_ec;
        params.series_cutoff = cutoff;
        params.validate();
        return params;
    }
};

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << text;
}

ExperimentRecord load_record(const std::string& path, bool csv_input) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    try {
        return load_experiment(in, csv_input ? RecordFormat::csv : RecordFormat::json);
    } catch (const std::exception& ex) {
        throw std::runtime_error(path + ": " + ex.what());
    }
}

std::string candidate_report(const ExperimentRecord& record) {
    const IntensityTriple s = record.intensities.centers();
    std::ostringstream out;
    out << "outcome  bound  value          selected  assignment\n";
    for (Outcome oc : kOutcomes) {
        struct Family {
            const char* name;
            std::vector<BoundCandidate> candidates;
            double chosen;
        };
        const std::array<Family, 3> families = {{
            {"y11", y11_candidates(record.gains, s, oc), y11_upper(record.gains, s, oc)},
            {"y02", y02_candidates(record.gains, s, oc), y02_upper(record.gains, s, oc)},
            {"y20", y20_candidates(record.gains, s, oc), y20_upper(record.gains, s, oc)},
        }};
        for (const Family& family : families) {
            for (const BoundCandidate& c : family.candidates) {
                const bool selected = c.value >= 0.0 && c.value == family.chosen;
                out << to_string(oc) << "      " << family.name << "    " << sci5(c.value)
                    << (c.value < 0 ? " " : "  ") << "   " << (selected ? "*" : " ")
                    << "        " << c.assignment.label() << "\n";
            }
        }
    }
    return out.str();
}

// "start:stop:step" in dB, inclusive of both ends when step divides the span.
std::vector<double> parse_loss_range(const std::string& text) {
    double start = 0, stop = 0, step = 0;
    char c1 = 0, c2 = 0;
    std::istringstream in(text);
    if (!(in >> start >> c1 >> stop >> c2 >> step) || c1 != ':' || c2 != ':' ||
        !(in >> std::ws).eof()) {
        throw CLI::ValidationError("--loss", "expected start:stop:step, got '" + text + "'");
    }
    if (!(step > 0.0) || stop < start) {
        throw CLI::ValidationError("--loss", "need step > 0 and stop >= start");
    }
    const int count = static_cast<int>(std::floor((stop - start) / step + 1e-9));
    std::vector<double> grid(count + 1);
    for (int i = 0; i <= count; ++i) grid[i] = start + i * step;
    return grid;
}

int run(int argc, char** argv) {
    CLI::App app{"Twin-field QKD security analysis toolkit"};
    app.require_subcommand(1);

    CommonOpts common;

    // ---- keyrate ----------------------------------------------------------
    auto* keyrate = app.add_subcommand(
        "keyrate", "Run the full analysis on one experiment record");
    std::string kr_file, kr_out, kr_format = "table", kr_assignments = "none";
    bool kr_csv_input = false, kr_per_detector = false;
    int kr_grid = 7, kr_refine = 1;
    keyrate->add_option("file", kr_file, "experiment record")->required();
    keyrate->add_option("--format", kr_format, "report format")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    keyrate->add_flag("--csv-input", kr_csv_input, "input record is CSV, not JSON");
    keyrate->add_option("--f-ec", common.f_ec, "error-correction inefficiency");
    keyrate->add_option("--cutoff", common.cutoff, "residual series cutoff");
    keyrate->add_option("--grid", kr_grid, "fluctuation grid points per axis");
    keyrate->add_option("--refine", kr_refine, "fluctuation refinement passes");
    keyrate->add_flag("--per-detector", kr_per_detector,
                      "extremize each detector separately");
    keyrate->add_option("--assignments", kr_assignments,
                        "'report' lists every yield-bound candidate instead")
        ->check(CLI::IsMember({"none", "report"}));
    keyrate->add_option("--out", kr_out, "write to file instead of stdout");

    // ---- simulate ---------------------------------------------------------
    auto* simulate = app.add_subcommand(
        "simulate", "Channel-model rate sweep, CSV of (loss, rate, plob)");
    std::string sim_loss, sim_out;
    double sim_alpha2 = 0, sim_mu = 0, sim_nu = 0, sim_omega = 0;
    double sim_visibility = 1.0, sim_dark = 6.8e-7;
    int sim_nodes = 2048;
    simulate->add_option("--loss", sim_loss, "loss sweep start:stop:step in dB")->required();
    simulate->add_option("--alpha2", sim_alpha2, "signal intensity")->required();
    simulate->add_option("--mu", sim_mu, "strongest decoy intensity")->required();
    simulate->add_option("--nu", sim_nu, "middle decoy intensity")->required();
    simulate->add_option("--omega", sim_omega, "weakest decoy intensity")->required();
    simulate->add_option("--visibility", sim_visibility, "interference visibility");
    simulate->add_option("--dark", sim_dark, "per-gate dark-count probability");
    simulate->add_option("--nodes", sim_nodes, "phase-average quadrature nodes");
    simulate->add_option("--f-ec", common.f_ec, "error-correction inefficiency");
    simulate->add_option("--cutoff", common.cutoff, "residual series cutoff");
    simulate->add_option("--out", sim_out, "write to file instead of stdout");

    // ---- plob -------------------------------------------------------------
    auto* plob = app.add_subcommand("plob", "Repeaterless capacity bound per loss");
    std::vector<double> plob_losses;
    std::string plob_out;
    plob->add_option("loss", plob_losses, "loss values in dB")->required();
    plob->add_option("--out", plob_out, "write to file instead of stdout");

    // ---- validate ---------------------------------------------------------
    auto* validate = app.add_subcommand("validate", "Check a record's invariants");
    std::string val_file;
    bool val_csv_input = false;
    validate->add_option("file", val_file, "experiment record")->required();
    validate->add_flag("--csv-input", val_csv_input, "input record is CSV, not JSON");

    CLI11_PARSE(app, argc, argv);

    if (keyrate->parsed()) {
        const ExperimentRecord record = load_record(kr_file, kr_csv_input);
        if (kr_assignments == "report") {
            write_output(candidate_report(record), kr_out);
            return 0;
        }
        ExtremizeConfig cfg;
        cfg.grid_points = kr_grid;
        cfg.refine_passes = kr_refine;
        cfg.per_detector = kr_per_detector;
        const KeyRateReport report = analyze_experiment(record, common.protocol(), cfg);
        const ReportFormat format = kr_format == "json"  ? ReportFormat::json
                                    : kr_format == "csv" ? ReportFormat::csv
                                                         : ReportFormat::table_text;
        write_output(emit_report(report, format), kr_out);
        return 0;
    }

    if (simulate->parsed()) {
        const std::vector<double> grid = parse_loss_range(sim_loss);
        ChannelParams ch;
        ch.dark_count_prob = sim_dark;
        ch.visibility = sim_visibility;
        ch.total_loss_db = grid.front();
        ch.validate();
        const IntensityTriple s{sim_mu, sim_nu, sim_omega};
        s.validate();
        if (!(sim_alpha2 > 0.0)) {
            throw CLI::ValidationError("--alpha2", "must be > 0");
        }
        const auto points =
            sweep_curve(ch, sim_alpha2, s, grid, common.protocol(), sim_nodes);
        write_output(emit_curve(points), sim_out);
        return 0;
    }

    if (plob->parsed()) {
        std::ostringstream out;
        for (double loss_db : plob_losses) {
            if (!(loss_db > 0.0)) {
                throw CLI::ValidationError("loss", "loss must be > 0 dB");
            }
            out << loss_db << "  " << sci5(plob_bound(Transmittance::from_loss_db(loss_db)))
                << "\n";
        }
        write_output(out.str(), plob_out);
        return 0;
    }

    // validate
    std::ifstream in(val_file, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file: " + val_file);
    ExperimentRecord record;
    try {
        record =
            parse_experiment(in, val_csv_input ? RecordFormat::csv : RecordFormat::json);
    } catch (const std::exception& ex) {
        std::cerr << val_file << ": " << ex.what() << "\n";
        return 1;
    }
    const std::vector<std::string> diagnostics = invariant_diagnostics(record);
    for (const std::string& d : diagnostics) {
        std::cerr << val_file << ": " << d << "\n";
    }
    if (diagnostics.empty()) {
        std::cout << val_file << ": ok\n";
        return 0;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::Error& ex) {
        std::cerr << ex.what() << "\n";
        return ex.get_exit_code() == 0 ? 1 : ex.get_exit_code();
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
}
