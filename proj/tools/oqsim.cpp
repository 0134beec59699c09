// oqsim: bound states and single-excitation entanglement dynamics for N
// qubits sharing a common zero-temperature reservoir.
//
// Subcommands: spectrum, dynamics, steady, reproduce.  Outputs are
// plot-ready CSV files and JSON reports; see README.md.

#include "oqs/dynamics.hpp"
#include "oqs/entanglement.hpp"
#include "oqs/errors.hpp"
#include "oqs/reservoir.hpp"
#include "oqs/spectrum.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using cd = std::complex<double>;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct Options {
    std::string reservoir = "lorentzian";
    double lambda = 15.0;
    double gamma0 = 0.2;
    double s = 1.0;
    double gamma = 1.0;
    double omega_c = 1.0;
    double omega0 = 1.0;
    std::vector<int> n_list{2, 8, 12};
    std::vector<int> pair{1, 2};
    std::string init_spec;
    double dt = 1e-3;
    double t_max = 50.0;
    double e_min = -1.0;
    double e_max = -1e-6;
    int points = 400;
    std::string out = ".";
    std::string format = "both";
    bool force_volterra = false;
    bool half_line = false;
};

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

bool want_csv(const Options& o) { return o.format != "json"; }
bool want_json(const Options& o) { return o.format != "csv"; }

oqs::ReservoirModel make_model(const Options& o) {
    if (o.reservoir == "lorentzian") {
        return oqs::ReservoirModel::lorentzian(
            o.gamma0, o.lambda, o.omega0,
            o.half_line ? oqs::LorentzianKernel::HalfLine
                        : oqs::LorentzianKernel::Exponential);
    }
    if (o.reservoir == "ohmic") {
        return oqs::ReservoirModel::ohmic(o.s, o.gamma, o.omega_c, o.omega0);
    }
    throw CLI::ValidationError("--reservoir", "unknown reservoir '" + o.reservoir + "'");
}

cd parse_complex(const std::string& raw) {
    std::string text;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) text.push_back(c);
    if (text.empty()) throw std::invalid_argument("empty complex literal");

    auto to_double = [](const std::string& part) {
        if (part.empty() || part == "+") return 1.0;
        if (part == "-") return -1.0;
        std::size_t used = 0;
        const double v = std::stod(part, &used);
        if (used != part.size()) throw std::invalid_argument("bad number '" + part + "'");
        return v;
    };

    if (text.back() != 'i') return {to_double(text), 0.0};
    text.pop_back();
    // Split at the last sign that is not an exponent sign and not leading.
    std::size_t split = std::string::npos;
    for (std::size_t i = text.size(); i-- > 1;) {
        if ((text[i] == '+' || text[i] == '-') &&
            text[i - 1] != 'e' && text[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos) return {0.0, to_double(text)};
    return {to_double(text.substr(0, split)), to_double(text.substr(split))};
}

// "--init 1:0.7071+0i,2:0.7071+0i" -> sparse amplitude assignments.
std::vector<std::pair<int, cd>> parse_init_spec(const std::string& spec) {
    std::vector<std::pair<int, cd>> entries;
    std::size_t start = 0;
    while (start < spec.size()) {
        std::size_t end = spec.find(',', start);
        if (end == std::string::npos) end = spec.size();
        const std::string item = spec.substr(start, end - start);
        const std::size_t colon = item.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("--init entries must look like 'l:re+imi'");
        const int index = std::stoi(item.substr(0, colon));
        entries.emplace_back(index, parse_complex(item.substr(colon + 1)));
        start = end + 1;
    }
    if (entries.empty()) throw std::invalid_argument("--init parsed to nothing");
    return entries;
}

oqs::InitialState build_init(const Options& o, int n_qubits) {
    const int m = o.pair[0], n = o.pair[1];
    if (o.init_spec.empty()) return oqs::InitialState::epr_pair(n_qubits, m, n);

    oqs::InitialState init;
    init.n_qubits = n_qubits;
    init.amplitudes.assign(static_cast<std::size_t>(n_qubits), {0.0, 0.0});
    for (const auto& [index, value] : parse_init_spec(o.init_spec)) {
        if (index < 1 || index > n_qubits)
            throw std::invalid_argument("--init qubit index " + std::to_string(index) +
                                        " outside 1.." + std::to_string(n_qubits));
        init.amplitudes[static_cast<std::size_t>(index - 1)] = value;
    }
    double norm_sq = 0.0;
    for (const auto& c : init.amplitudes) norm_sq += std::norm(c);
    if (std::abs(norm_sq - 1.0) > 1e-3)
        throw std::invalid_argument("--init amplitudes are not normalized");
    const double scale = 1.0 / std::sqrt(norm_sq);
    for (auto& c : init.amplitudes) c *= scale;
    init.validate();
    return init;
}

void check_common(const Options& o) {
    if (o.n_list.empty()) throw std::invalid_argument("--n must list at least one qubit count");
    for (int n : o.n_list)
        if (n < 2) throw std::invalid_argument("--n entries must be >= 2");
    if (o.pair.size() != 2 || o.pair[0] == o.pair[1] || o.pair[0] < 1 || o.pair[1] < 1)
        throw std::invalid_argument("--pair must name two distinct qubits");
    const int n_min = *std::min_element(o.n_list.begin(), o.n_list.end());
    if (o.pair[0] > n_min || o.pair[1] > n_min)
        throw std::invalid_argument("--pair indices must not exceed the smallest --n entry");
}

std::ofstream open_output(const fs::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    return out;
}

json report_to_json(const oqs::BoundStateReport& r) {
    return json{{"exists", r.exists},
                {"e_bs", r.e_bs},
                {"beta_sq", r.beta_sq},
                {"y_at_zero", r.y_at_zero},
                {"probe_epsilon", r.probe_epsilon}};
}

json model_to_json(const Options& o) {
    if (o.reservoir == "lorentzian") {
        return json{{"reservoir", "lorentzian"},
                    {"gamma0", o.gamma0},
                    {"lambda", o.lambda},
                    {"omega0", o.omega0},
                    {"kernel", o.half_line ? "half_line" : "exponential"}};
    }
    return json{{"reservoir", "ohmic"}, {"s", o.s},          {"gamma", o.gamma},
                {"omega_c", o.omega_c}, {"omega0", o.omega0}};
}

// --- spectrum ---------------------------------------------------------

void run_spectrum(const Options& o) {
    check_common(o);
    if (!(o.e_min < o.e_max) || !(o.e_max < 0.0))
        throw std::invalid_argument("spectrum requires e_min < e_max < 0");
    if (o.points < 2) throw std::invalid_argument("--points must be >= 2");

    const oqs::ReservoirModel model = make_model(o);
    fs::create_directories(o.out);

    if (want_csv(o)) {
        auto csv = open_output(fs::path(o.out) / "spectrum.csv");
        csv << "E";
        for (int n : o.n_list) csv << ",y_N" << n;
        csv << ",diag\n";
        for (int i = 0; i < o.points; ++i) {
            const double e =
                o.e_min + (o.e_max - o.e_min) * i / static_cast<double>(o.points - 1);
            csv << fmt17(e);
            for (int n : o.n_list) csv << "," << fmt17(oqs::y_of(model, n, e));
            csv << "," << fmt17(e) << "\n";
        }
    }

    if (want_json(o)) {
        json reports = json::array();
        for (int n : o.n_list) {
            json entry = report_to_json(oqs::find_bound_state(model, n));
            entry["n_qubits"] = n;
            reports.push_back(std::move(entry));
        }
        auto out = open_output(fs::path(o.out) / "boundstates.json");
        out << reports.dump(2) << "\n";
    }
}

// --- dynamics ---------------------------------------------------------

oqs::Trajectory propagate(const oqs::ReservoirModel& model,
                          const oqs::InitialState& init, const Options& o) {
    if (o.t_max < o.dt) {
        // t = 0 snapshot only.
        oqs::Trajectory traj;
        traj.t_grid = {0.0};
        traj.collective = {init.collective_sum()};
        for (const auto& c : init.amplitudes) traj.amplitudes.push_back({c});
        return traj;
    }
    if (model.is_lorentzian() && !o.force_volterra) {
        const std::size_t m =
            oqs::volterra_grid_size({o.dt, o.t_max, 2});
        std::vector<double> grid(m);
        for (std::size_t i = 0; i < m; ++i) grid[i] = static_cast<double>(i) * o.dt;
        return oqs::propagate_lorentzian_analytic(model, init, grid);
    }
    return oqs::propagate_volterra(model, init, {o.dt, o.t_max, 2});
}

void write_dynamics_csv(const fs::path& path, const oqs::Trajectory& traj, int m,
                        int n) {
    auto csv = open_output(path);
    csv << "t,re_S,im_S,re_Cm,im_Cm,re_Cn,im_Cn,concurrence\n";
    const auto& cm = traj.amplitudes[static_cast<std::size_t>(m - 1)];
    const auto& cn = traj.amplitudes[static_cast<std::size_t>(n - 1)];
    for (std::size_t i = 0; i < traj.t_grid.size(); ++i) {
        csv << fmt17(traj.t_grid[i]) << "," << fmt17(traj.collective[i].real()) << ","
            << fmt17(traj.collective[i].imag()) << "," << fmt17(cm[i].real()) << ","
            << fmt17(cm[i].imag()) << "," << fmt17(cn[i].real()) << ","
            << fmt17(cn[i].imag()) << ","
            << fmt17(oqs::concurrence_from_amplitudes(cm[i], cn[i])) << "\n";
    }
}

void run_dynamics(const Options& o) {
    check_common(o);
    const oqs::ReservoirModel model = make_model(o);
    fs::create_directories(o.out);
    if (!want_csv(o)) return;
    for (int n_qubits : o.n_list) {
        const oqs::InitialState init = build_init(o, n_qubits);
        const oqs::Trajectory traj = propagate(model, init, o);
        write_dynamics_csv(fs::path(o.out) / ("dynamics_N" + std::to_string(n_qubits) + ".csv"),
                           traj, o.pair[0], o.pair[1]);
    }
}

// --- steady -----------------------------------------------------------

void run_steady(const Options& o) {
    check_common(o);
    const oqs::ReservoirModel model = make_model(o);
    fs::create_directories(o.out);
    if (!want_json(o)) return;

    json entries = json::array();
    for (int n_qubits : o.n_list) {
        const oqs::InitialState init = build_init(o, n_qubits);
        const oqs::BoundStateReport report = oqs::find_bound_state(model, n_qubits);
        const oqs::SteadyPrediction pred =
            oqs::predict_steady(model, init, o.pair[0], o.pair[1], report);
        entries.push_back(
            json{{"n_qubits", n_qubits},
                 {"bound_state", report_to_json(report)},
                 {"prediction",
                  json{{"dark_m", {pred.dark_m.real(), pred.dark_m.imag()}},
                       {"dark_n", {pred.dark_n.real(), pred.dark_n.imag()}},
                       {"bs_weight", pred.bs_weight},
                       {"concurrence_min", pred.concurrence_min},
                       {"concurrence_max", pred.concurrence_max},
                       {"concurrence_mean", pred.concurrence_mean}}}});
    }
    auto out = open_output(fs::path(o.out) / "steady.json");
    out << entries.dump(2) << "\n";
}

// --- reproduce --------------------------------------------------------

struct FigurePanel {
    std::string label;
    Options options; // fully configured reservoir parameters
};

void run_reproduce(const std::string& figure, const Options& base) {
    std::vector<FigurePanel> panels;
    if (figure == "fig1") {
        Options markovian = base;
        markovian.reservoir = "lorentzian";
        markovian.lambda = 15.0;
        markovian.gamma0 = 0.2;
        Options nonmarkovian = base;
        nonmarkovian.reservoir = "lorentzian";
        nonmarkovian.lambda = 0.5;
        nonmarkovian.gamma0 = 1.0;
        panels = {{"markovian", markovian}, {"nonmarkovian", nonmarkovian}};
    } else if (figure == "fig2") {
        for (const auto& [label, s] :
             std::vector<std::pair<std::string, double>>{
                 {"sub_ohmic", 0.5}, {"ohmic", 1.0}, {"super_ohmic", 2.0}}) {
            Options o = base;
            o.reservoir = "ohmic";
            o.s = s;
            o.gamma = 1.0;
            o.omega_c = 1.0;
            panels.push_back({label, o});
        }
    } else {
        throw std::invalid_argument("unknown figure '" + figure + "' (use fig1 or fig2)");
    }

    fs::create_directories(base.out);
    json manifest{{"figure", figure}, {"files", json::array()}};

    for (const auto& panel : panels) {
        const Options& o = panel.options;
        check_common(o);
        const oqs::ReservoirModel model = make_model(o);

        const std::string spectrum_name =
            "spectrum_" + figure + "_" + panel.label + ".csv";
        {
            auto csv = open_output(fs::path(o.out) / spectrum_name);
            csv << "E";
            for (int n : o.n_list) csv << ",y_N" << n;
            csv << ",diag\n";
            for (int i = 0; i < o.points; ++i) {
                const double e = o.e_min + (o.e_max - o.e_min) * i /
                                               static_cast<double>(o.points - 1);
                csv << fmt17(e);
                for (int n : o.n_list) csv << "," << fmt17(oqs::y_of(model, n, e));
                csv << "," << fmt17(e) << "\n";
            }
        }
        json spectrum_entry = model_to_json(o);
        spectrum_entry["path"] = spectrum_name;
        spectrum_entry["kind"] = "spectrum";
        spectrum_entry["n_list"] = o.n_list;
        manifest["files"].push_back(std::move(spectrum_entry));

        for (int n_qubits : o.n_list) {
            const oqs::InitialState init = build_init(o, n_qubits);
            const oqs::Trajectory traj = propagate(model, init, o);
            const std::string name = "dynamics_" + figure + "_" + panel.label + "_N" +
                                     std::to_string(n_qubits) + ".csv";
            write_dynamics_csv(fs::path(o.out) / name, traj, o.pair[0], o.pair[1]);
            json entry = model_to_json(o);
            entry["path"] = name;
            entry["kind"] = "dynamics";
            entry["n_qubits"] = n_qubits;
            entry["dt"] = o.dt;
            entry["t_max"] = o.t_max;
            manifest["files"].push_back(std::move(entry));
        }
    }

    auto out = open_output(fs::path(base.out) / ("manifest_" + figure + ".json"));
    out << manifest.dump(2) << "\n";
}

void add_model_options(CLI::App* cmd, Options& o) {
    cmd->add_option("--reservoir", o.reservoir, "Spectral density family")
        ->check(CLI::IsMember({"lorentzian", "ohmic"}));
    cmd->add_option("--lambda", o.lambda, "Lorentzian spectral width (units omega0)");
    cmd->add_option("--gamma0", o.gamma0, "Lorentzian coupling strength (units omega0)");
    cmd->add_option("--s", o.s, "Ohmic-family exponent (1/2, 1, 2, ...)");
    cmd->add_option("--gamma", o.gamma, "Ohmic-family dimensionless coupling");
    cmd->add_option("--omega-c", o.omega_c, "Ohmic-family cutoff frequency (units omega0)");
    cmd->add_option("--omega0", o.omega0, "Qubit transition frequency (unit system)");
    cmd->add_option("--n", o.n_list, "Comma-separated qubit counts")->delimiter(',');
    cmd->add_option("--pair", o.pair, "Entangled qubit pair m,n (1-based)")->delimiter(',');
    cmd->add_option("--init", o.init_spec,
                    "Initial amplitudes, e.g. \"1:0.7071+0i,2:0.7071+0i\"");
    cmd->add_option("--out", o.out, "Output directory");
    cmd->add_option("--format", o.format, "Artifacts to write")
        ->check(CLI::IsMember({"csv", "json", "both"}));
    cmd->add_flag("--half-line-kernel", o.half_line,
                  "Use the half-line Lorentzian correlation kernel");
}

void add_grid_options(CLI::App* cmd, Options& o) {
    cmd->add_option("--dt", o.dt, "Time step (units 1/omega0)");
    cmd->add_option("--t-max", o.t_max, "Final time (units 1/omega0)");
}

void add_energy_options(CLI::App* cmd, Options& o) {
    cmd->add_option("--e-min", o.e_min, "Lower edge of the energy scan (negative)");
    cmd->add_option("--e-max", o.e_max, "Upper edge of the energy scan (negative)");
    cmd->add_option("--points", o.points, "Energy grid points");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"System-reservoir bound states and entanglement dynamics for N "
                 "qubits in a common reservoir"};
    app.require_subcommand(1);
    app.set_config("--config")->configurable(false);

    Options opt;
    std::string figure;

    CLI::App* spectrum = app.add_subcommand(
        "spectrum", "Scan y(E) and report bound states per qubit count");
    add_model_options(spectrum, opt);
    add_energy_options(spectrum, opt);

    CLI::App* dynamics = app.add_subcommand(
        "dynamics", "Propagate amplitudes and concurrence on a time grid");
    add_model_options(dynamics, opt);
    add_grid_options(dynamics, opt);
    dynamics->add_flag("--force-volterra", opt.force_volterra,
                       "Use the Volterra solver even for Lorentzian models");

    CLI::App* steady = app.add_subcommand(
        "steady", "Predict the asymptotic concurrence band per qubit count");
    add_model_options(steady, opt);

    CLI::App* reproduce = app.add_subcommand(
        "reproduce", "Run the full parameter grid of a figure (fig1 or fig2)");
    reproduce->add_option("figure", figure, "fig1 or fig2")->required();
    reproduce->add_option("--out", opt.out, "Output directory");
    reproduce->add_option("--points", opt.points, "Energy grid points");
    add_grid_options(reproduce, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (spectrum->parsed()) run_spectrum(opt);
        if (dynamics->parsed()) run_dynamics(opt);
        if (steady->parsed()) run_steady(opt);
        if (reproduce->parsed()) run_reproduce(figure, opt);
    } catch (const oqs::VolterraError& e) {
        std::cerr << "numerical failure: " << e.what() << " (step " << e.step() << ")\n";
        return kExitNumerical;
    } catch (const oqs::NumericsError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
