// fluxring: quantized superconducting-ring toolkit.
//
// Subcommands: sweep, switchsim, interference, feasibility. Each takes a JSON
// config (SI units, unknown keys rejected) and writes CSV/JSON/SVG outputs to
// an output directory together with the resolved config it actually ran.
// Exit codes: 0 success, 2 config error, 3 numeric domain error.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fluxring/feasibility.hpp"
#include "fluxring/io/config.hpp"
#include "fluxring/io/csv.hpp"
#include "fluxring/io/svg.hpp"
#include "fluxring/ring.hpp"
#include "fluxring/switching.hpp"
#include "fluxring/twoslit.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using namespace fluxring;

struct Args {
    std::string config;
    std::string out;
    std::string format;
    std::uint64_t seed = 0;
    CLI::Option* seed_opt = nullptr;
    CLI::Option* out_opt = nullptr;
    CLI::Option* format_opt = nullptr;
};

void add_common(CLI::App* sub, Args& a)
{
    sub->add_option("--config", a.config, "JSON config file")
        ->required()
        ->check(CLI::ExistingFile);
    a.seed_opt = sub->add_option("--seed", a.seed, "override the config seed");
    a.out_opt = sub->add_option("--out", a.out, "output directory");
    a.format_opt = sub->add_option("--format", a.format,
                                   "comma-separated subset of csv,json,svg");
}

std::set<std::string> parse_formats(const std::string& list)
{
    std::set<std::string> out;
    std::istringstream ss(list);
    for (std::string item; std::getline(ss, item, ',');) {
        if (item != "csv" && item != "json" && item != "svg")
            throw io::ConfigError("unknown format \"" + item + "\"");
        out.insert(item);
    }
    if (out.empty()) throw io::ConfigError("empty format list");
    return out;
}

struct Run {
    json cfg;
    fs::path dir;
    std::set<std::string> formats;

    bool want(const char* f) const { return formats.count(f) > 0; }
    void write(const std::string& name, const std::string& content) const
    {
        io::write_file_atomic((dir / name).string(), content);
    }
};

// load config, fold in command-line overrides, create the output directory
Run prepare(const Args& a, const std::string& default_dir,
            const std::vector<const char*>& seed_path)
{
    Run run;
    run.cfg = io::load_json_file(a.config);

    if (*a.seed_opt) {
        if (seed_path.empty())
            throw io::ConfigError("--seed does not apply to this subcommand");
        json* spot = &run.cfg;
        for (std::size_t i = 0; i + 1 < seed_path.size(); ++i)
            spot = &(*spot)[seed_path[i]];
        (*spot)[seed_path.back()] = a.seed;
    }
    if (*a.format_opt) {
        run.cfg["formats"] = json::array();
        for (const auto& f : parse_formats(a.format)) run.cfg["formats"].push_back(f);
    }
    if (*a.out_opt) run.cfg["out_dir"] = a.out;

    if (run.cfg.contains("formats")) {
        if (!run.cfg["formats"].is_array())
            throw io::ConfigError("key \"formats\" in config must be an array");
        std::string joined;
        for (const auto& f : run.cfg["formats"]) {
            if (!f.is_string()) throw io::ConfigError("formats entries must be strings");
            joined += (joined.empty() ? "" : ",") + f.get<std::string>();
        }
        run.formats = parse_formats(joined);
    } else {
        run.formats = {"csv", "json", "svg"};
    }

    run.dir = io::string_or(run.cfg, "out_dir", default_dir, "config");
    fs::create_directories(run.dir);
    return run;
}

void archive_config(const Run& run)
{
    run.write("config_used.json", run.cfg.dump(2) + "\n");
}

std::uint64_t seed_from(const json& obj, const char* key, const std::string& context)
{
    if (!obj.contains(key)) return 0;
    const json& v = obj.at(key);
    if (v.is_number_unsigned()) return v.get<std::uint64_t>();
    if (v.is_number_integer() && v.get<std::int64_t>() >= 0)
        return static_cast<std::uint64_t>(v.get<std::int64_t>());
    throw io::ConfigError("key \"" + std::string(key) + "\" in " + context +
                          " must be a nonnegative integer");
}

std::vector<double> linear_grid(const json& g, const char* lo_key, const char* hi_key,
                                const std::string& context, double lo_def, double hi_def,
                                double pts_def)
{
    io::require_known_keys(g, {lo_key, hi_key, "points"}, context);
    const double lo = io::number_or(g, lo_key, lo_def, context);
    const double hi = io::number_or(g, hi_key, hi_def, context);
    const double pts = io::number_or(g, "points", pts_def, context);
    if (!(hi > lo)) throw io::ConfigError("empty grid range in " + context);
    if (!(pts >= 2 && pts == std::floor(pts) && pts <= 1e7))
        throw io::ConfigError("key \"points\" in " + context +
                              " must be an integer >= 2");
    const auto n = static_cast<std::size_t>(pts);
    std::vector<double> xs(n);
    for (std::size_t i = 0; i < n; ++i)
        xs[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    return xs;
}

// Wilson-Hilferty approximation to the 1% upper chi-square quantile
double chi2_critical_1pct(int dof)
{
    const double z = 2.3263478740408408;  // standard normal 99% quantile
    const double d = static_cast<double>(dof);
    const double c = 1.0 - 2.0 / (9.0 * d) + z * std::sqrt(2.0 / (9.0 * d));
    return d * c * c * c;
}

int cmd_sweep(const Args& a)
{
    Run run = prepare(a, "out/sweep", {});
    io::require_known_keys(run.cfg, {"material", "ring", "temperature", "grid",
                                     "formats", "out_dir"},
                           "config");
    const auto mat = io::material_from_json(io::require_object(run.cfg, "material", "config"));
    const auto rs = io::ring_from_json(io::require_object(run.cfg, "ring", "config"), mat);
    const double T = io::number_or(run.cfg, "temperature", 0.0, "config");

    json grid = run.cfg.contains("grid") ? run.cfg.at("grid") : json::object();
    const auto xs = linear_grid(grid, "x_min", "x_max", "grid", -2.0, 2.0, 1001);

    const double phi0 = flux_quantum(mat.q_pair);
    std::vector<double> current(xs.size());
    double i_max = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        current[i] = ring::persistent_current(rs, mat, T, xs[i] * phi0);
        i_max = std::max(i_max, std::abs(current[i]));
    }

    archive_config(run);
    if (run.want("csv"))
        run.write("sweep.csv", io::csv_table({"phi_over_phi0", "current_A"}, {xs, current}));
    if (run.want("svg"))
        run.write("sweep.svg", io::svg_line_plot(xs, current, "phi / phi0", "I_p [A]"));
    if (run.want("json")) {
        json summary;
        summary["flux_quantum_Wb"] = phi0;
        summary["kinetic_inductance_H"] = ring::kinetic_inductance(rs, mat, T);
        summary["geometric_inductance_H"] = rs.L_geom;
        summary["max_abs_current_A"] = i_max;
        summary["points"] = xs.size();
        run.write("summary.json", summary.dump(2) + "\n");
    }
    return 0;
}

switching::NSelection selection_from(const json& cfg)
{
    const std::string policy = io::string_or(cfg, "n_policy", "doublet", "config");
    switching::NSelection sel;
    if (policy == "ground")
        sel.policy = switching::NPolicy::ground;
    else if (policy == "doublet")
        sel.policy = switching::NPolicy::doublet;
    else if (policy == "thermal")
        sel.policy = switching::NPolicy::thermal;
    else if (policy == "fixed")
        sel.policy = switching::NPolicy::fixed;
    else
        throw io::ConfigError("key \"n_policy\" must be one of ground, doublet, thermal, fixed");
    if (sel.policy == switching::NPolicy::fixed) {
        const double n = io::require_number(cfg, "n_fixed", "config");
        if (n != std::floor(n)) throw io::ConfigError("key \"n_fixed\" must be an integer");
        sel.n_fixed = static_cast<std::int64_t>(n);
    } else if (cfg.contains("n_fixed")) {
        throw io::ConfigError("key \"n_fixed\" requires n_policy \"fixed\"");
    }
    return sel;
}

int cmd_switchsim(const Args& a)
{
    Run run = prepare(a, "out/switchsim", {"schedule", "seed"});
    io::require_known_keys(run.cfg,
                           {"material", "ring", "temperature", "phi_over_phi0", "segment",
                            "schedule", "sample_dt", "n_policy", "n_fixed", "flux_curve",
                            "formats", "out_dir"},
                           "config");
    const auto mat = io::material_from_json(io::require_object(run.cfg, "material", "config"));
    const auto rs = io::ring_from_json(io::require_object(run.cfg, "ring", "config"), mat);
    const double T = io::number_or(run.cfg, "temperature", 0.0, "config");
    const double x = io::require_number(run.cfg, "phi_over_phi0", "config");

    const json& seg_j = io::require_object(run.cfg, "segment", "config");
    io::require_known_keys(seg_j, {"R_s", "l_s"}, "segment");
    const switching::SegmentSpec seg{io::require_number(seg_j, "R_s", "segment"),
                                     io::require_number(seg_j, "l_s", "segment")};

    const json& sch_j = io::require_object(run.cfg, "schedule", "config");
    io::require_known_keys(sch_j, {"mode", "omega_sw", "duty_normal", "seed", "duration"},
                           "schedule");
    switching::SwitchSchedule sched;
    const std::string mode = io::string_or(sch_j, "mode", "periodic", "schedule");
    if (mode == "periodic")
        sched.mode = switching::ScheduleMode::periodic;
    else if (mode == "poisson")
        sched.mode = switching::ScheduleMode::poisson;
    else
        throw io::ConfigError("key \"mode\" in schedule must be periodic or poisson");
    sched.omega_sw = io::require_number(sch_j, "omega_sw", "schedule");
    sched.duty_normal = io::require_number(sch_j, "duty_normal", "schedule");
    sched.seed = seed_from(sch_j, "seed", "schedule");
    sched.duration = io::require_number(sch_j, "duration", "schedule");

    const double sample_dt = io::require_number(run.cfg, "sample_dt", "config");
    const auto sel = selection_from(run.cfg);

    const double phi0 = flux_quantum(mat.q_pair);
    const auto trace =
        switching::simulate(rs, mat, T, x * phi0, seg, sched, sample_dt, sel);

    std::vector<std::string> warnings;
    if (trace.warn_short_interval)
        warnings.push_back("schedule produced intervals shorter than 1e-6 tau");
    if (trace.kick_momenta.size() < 10)
        warnings.push_back("trace covers fewer than 10 switching cycles");
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";

    archive_config(run);
    if (run.want("csv")) {
        std::vector<double> ts, is, vs;
        ts.reserve(trace.samples.size());
        for (const auto& s : trace.samples) {
            ts.push_back(s.t);
            is.push_back(s.current);
            vs.push_back(s.voltage);
        }
        run.write("trace.csv",
                  io::csv_table({"time_s", "current_A", "voltage_V"}, {ts, is, vs}));
        if (run.want("svg"))
            run.write("trace.svg", io::svg_line_plot(ts, is, "t [s]", "I [A]"));
    }

    const double ip = ring::persistent_current(rs, mat, T, x * phi0);
    if (run.want("json")) {
        json events = json::array();
        for (const auto& e : trace.events)
            events.push_back({{"t_s", e.t}, {"type", e.open ? "open" : "close"}});
        json sidecar;
        sidecar["parameters"] = run.cfg;
        sidecar["events"] = events;
        sidecar["kick_momenta_Js"] = trace.kick_momenta;
        sidecar["n_selected"] = trace.n_selected;
        sidecar["warnings"] = warnings;
        run.write("events.json", sidecar.dump(2) + "\n");

        json summary;
        summary["v_dc_V"] = switching::v_dc(trace);
        summary["mean_current_A"] = switching::mean_current(trace);
        summary["persistent_current_A"] = ip;
        summary["tau_s"] = trace.tau;
        summary["L_total_H"] = trace.L_total;
        summary["omega_sw_per_s"] = sched.omega_sw;
        summary["omega_sw_tau"] = sched.omega_sw * trace.tau;
        summary["n_closings"] = trace.kick_momenta.size();
        if (!trace.kick_momenta.empty())
            summary["quantum_force_J"] = switching::quantum_force_circulation(trace);
        if (ip != 0.0)
            summary["v_dc_over_L_omega_Ip"] =
                switching::v_dc(trace) / (trace.L_total * sched.omega_sw * ip);
        summary["warnings"] = warnings;
        run.write("summary.json", summary.dump(2) + "\n");
    }

    if (run.cfg.contains("flux_curve")) {
        const auto grid = linear_grid(run.cfg.at("flux_curve"), "x_min", "x_max",
                                      "flux_curve", -2.0, 2.0, 81);
        const auto curve = switching::vdc_vs_flux(rs, mat, T, seg, sched, grid, sel);
        std::vector<double> cx, cv;
        for (const auto& p : curve) {
            cx.push_back(p.x);
            cv.push_back(p.v_dc);
        }
        if (run.want("csv"))
            run.write("vdc_curve.csv", io::csv_table({"phi_over_phi0", "v_dc_V"}, {cx, cv}));
        if (run.want("svg"))
            run.write("vdc_curve.svg",
                      io::svg_line_plot(cx, cv, "phi / phi0", "V_dc [V]"));
    }
    return 0;
}

int cmd_interference(const Args& a)
{
    Run run = prepare(a, "out/interference", {"detections", "seed"});
    io::require_known_keys(run.cfg, {"setup", "grid", "detections", "formats", "out_dir"},
                           "config");

    const json& set_j = io::require_object(run.cfg, "setup", "config");
    io::require_known_keys(set_j,
                           {"slit_separation", "screen_distance", "slit_width",
                            "particle_mass", "particle_speed", "particle_charge",
                            "enclosed_flux", "envelope"},
                           "setup");
    twoslit::InterferenceSetup setup;
    setup.slit_separation = io::require_number(set_j, "slit_separation", "setup");
    setup.screen_distance = io::require_number(set_j, "screen_distance", "setup");
    setup.slit_width = io::require_number(set_j, "slit_width", "setup");
    setup.particle_mass = io::require_number(set_j, "particle_mass", "setup");
    setup.particle_speed = io::require_number(set_j, "particle_speed", "setup");
    setup.particle_charge = io::number_or(set_j, "particle_charge", codata.e_charge, "setup");
    setup.enclosed_flux = io::number_or(set_j, "enclosed_flux", 0.0, "setup");
    const std::string env = io::string_or(set_j, "envelope", "uniform", "setup");
    if (env == "uniform")
        setup.envelope = twoslit::Envelope::uniform;
    else if (env == "single_slit")
        setup.envelope = twoslit::Envelope::single_slit;
    else
        throw io::ConfigError("key \"envelope\" in setup must be uniform or single_slit");
    twoslit::validate(setup);

    const json& grid = io::require_object(run.cfg, "grid", "config");
    io::require_known_keys(grid, {"y_min", "y_max", "points"}, "grid");
    const double y_min = io::require_number(grid, "y_min", "grid");
    const double y_max = io::require_number(grid, "y_max", "grid");
    const double pts = io::number_or(grid, "points", 1201, "grid");
    if (!(pts >= 2 && pts == std::floor(pts) && pts <= 1e7))
        throw io::ConfigError("key \"points\" in grid must be an integer >= 2");

    const auto pat = twoslit::pattern(setup, y_min, y_max, static_cast<int>(pts));
    const bool far_ok = twoslit::far_field_ok(setup);
    if (!far_ok)
        std::cerr << "warning: far-field condition violated (L < 10 d^2 / lambda)\n";

    std::vector<double> dets;
    json chi2 = nullptr;
    if (run.cfg.contains("detections")) {
        const json& det_j = run.cfg.at("detections");
        io::require_known_keys(det_j, {"count", "seed", "chi2_bins"}, "detections");
        const double count = io::require_number(det_j, "count", "detections");
        if (!(count >= 1 && count == std::floor(count) && count <= 1e7))
            throw io::ConfigError("key \"count\" in detections must be an integer >= 1");
        const auto seed = seed_from(det_j, "seed", "detections");
        const double bins = io::number_or(det_j, "chi2_bins", 60, "detections");
        if (!(bins >= 2 && bins == std::floor(bins) && bins <= 1e4))
            throw io::ConfigError("key \"chi2_bins\" in detections must be an integer >= 2");

        dets = twoslit::sample_detections(pat, static_cast<std::size_t>(count), seed);
        const auto fit = twoslit::chi_square_fit(pat, dets, static_cast<int>(bins));
        const double crit = chi2_critical_1pct(fit.dof);
        chi2 = {{"statistic", fit.statistic},
                {"dof", fit.dof},
                {"critical_1pct", crit},
                {"pass_1pct", fit.statistic < crit}};
    }

    archive_config(run);
    if (run.want("csv")) {
        run.write("pattern.csv", io::csv_table({"y_m", "intensity"}, {pat.y, pat.intensity}));
        if (!dets.empty()) {
            std::vector<double> idx(dets.size());
            for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<double>(i);
            run.write("detections.csv", io::csv_table({"index", "y_m"}, {idx, dets}));
        }
    }
    if (run.want("svg")) {
        if (dets.empty())
            run.write("interference.svg",
                      io::svg_line_plot(pat.y, pat.intensity, "y [m]", "P(y)"));
        else
            run.write("interference.svg",
                      io::svg_curve_with_dots(pat.y, pat.intensity, dets, "y [m]", "P(y)"));
    }
    if (run.want("json")) {
        json summary;
        summary["fringe_period_m"] = pat.fringe_period;
        summary["flux_shift_m"] = pat.flux_shift;
        summary["phi_over_phi0"] =
            setup.enclosed_flux / flux_quantum(setup.particle_charge);
        summary["far_field_ok"] = far_ok;
        summary["detections"] = dets.size();
        if (!chi2.is_null()) summary["chi2"] = chi2;
        run.write("summary.json", summary.dump(2) + "\n");
    }
    return 0;
}

int cmd_feasibility(const Args& a)
{
    Run run = prepare(a, "out/feasibility", {});
    io::require_known_keys(run.cfg,
                           {"interference", "single_particle", "condensate", "uncertainty",
                            "formats", "out_dir"},
                           "config");
    feasibility::FeasibilityRequest req;

    if (run.cfg.contains("interference")) {
        const json& j = run.cfg.at("interference");
        io::require_known_keys(j, {"sizes", "density"}, "interference");
        if (!j.contains("sizes") || !j.at("sizes").is_array() || j.at("sizes").empty())
            throw io::ConfigError("missing key \"sizes\" in interference");
        for (const auto& v : j.at("sizes")) {
            if (!v.is_number())
                throw io::ConfigError("key \"sizes\" in interference must hold numbers");
            req.interference_sizes.push_back(v.get<double>());
        }
        req.density = io::number_or(j, "density", 1e3, "interference");
    }
    if (run.cfg.contains("single_particle")) {
        const json& j = run.cfg.at("single_particle");
        io::require_known_keys(j, {"mass", "radius"}, "single_particle");
        req.single_particle = true;
        req.single_mass = io::require_number(j, "mass", "single_particle");
        req.single_radius = io::require_number(j, "radius", "single_particle");
    }
    if (run.cfg.contains("condensate")) {
        const json& j = run.cfg.at("condensate");
        io::require_known_keys(j, {"material", "ring"}, "condensate");
        req.condensate = true;
        req.material = io::material_from_json(io::require_object(j, "material", "condensate"));
        req.ring = io::ring_from_json(io::require_object(j, "ring", "condensate"), req.material);
    }
    if (run.cfg.contains("uncertainty")) {
        const json& j = run.cfg.at("uncertainty");
        io::require_known_keys(j, {"z", "t", "dz", "dt", "mass"}, "uncertainty");
        req.uncertainty = true;
        req.u_z = io::require_number(j, "z", "uncertainty");
        req.u_t = io::require_number(j, "t", "uncertainty");
        req.u_dz = io::require_number(j, "dz", "uncertainty");
        req.u_dt = io::require_number(j, "dt", "uncertainty");
        req.u_mass = io::require_number(j, "mass", "uncertainty");
    }

    const auto rep = feasibility::build_report(req);

    archive_config(run);
    run.write("report.txt", feasibility::to_text(rep));
    if (run.want("json")) {
        auto rows = [](const std::vector<feasibility::ReportValue>& vs) {
            json arr = json::array();
            for (const auto& v : vs) {
                json row = {{"name", v.name}, {"value", v.value}, {"unit", v.unit}};
                if (!v.formula.empty()) row["formula"] = v.formula;
                if (!v.verdict.empty()) row["verdict"] = v.verdict;
                arr.push_back(row);
            }
            return arr;
        };
        json doc;
        doc["inputs"] = rows(rep.inputs);
        doc["results"] = rows(rep.results);
        run.write("report.json", doc.dump(2) + "\n");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"superconducting ring toolkit: persistent currents, switching "
                 "dynamics, two-slit interference, feasibility estimates"};
    app.require_subcommand(1);

    Args sweep_a, switch_a, interf_a, feas_a;
    auto* sweep = app.add_subcommand("sweep", "persistent current vs applied flux");
    add_common(sweep, sweep_a);
    auto* swsim = app.add_subcommand("switchsim", "segment-switching time simulation");
    add_common(swsim, switch_a);
    auto* interf = app.add_subcommand("interference", "two-slit pattern and detections");
    add_common(interf, interf_a);
    auto* feas = app.add_subcommand("feasibility", "order-of-magnitude estimates");
    add_common(feas, feas_a);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (sweep->parsed()) return cmd_sweep(sweep_a);
        if (swsim->parsed()) return cmd_switchsim(switch_a);
        if (interf->parsed()) return cmd_interference(interf_a);
        if (feas->parsed()) return cmd_feasibility(feas_a);
    } catch (const io::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
