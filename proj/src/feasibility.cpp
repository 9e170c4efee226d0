#include "fluxring/feasibility.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "fluxring/units.hpp"

namespace fluxring::feasibility {

namespace {

namespace u = fluxring::units;

constexpr u::Dim density_dim = u::kilogram / u::pow(u::metre, 3);
constexpr u::Dim speed = u::metre / u::second;

static_assert(u::pow(u::metre, 5) * density_dim / u::action == u::second);
static_assert(density_dim / u::action == u::second / u::pow(u::metre, 5));
static_assert(density_dim * u::pow(u::metre, 3) == u::kilogram);
static_assert(u::pow(u::action, 2) /
                  (u::kilogram * u::pow(u::metre, 2) * (u::joule / u::kelvin)) ==
              u::kelvin);
static_assert(u::metre * speed == u::pow(u::metre, 2) / u::second);
static_assert(u::action / u::kilogram == u::pow(u::metre, 2) / u::second);

constexpr double two_pi = 2.0 * std::numbers::pi;

void check(bool ok, const char* msg)
{
    if (!ok) throw std::invalid_argument(msg);
}

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

}  // namespace

double particle_mass(double a, double g)
{
    check(a > 0 && g > 0, "particle mass needs a > 0, g > 0");
    return g * a * a * a;
}

double interference_time(double a, double g)
{
    check(a > 0 && g > 0, "interference time needs a > 0, g > 0");
    return a * a * a * a * a * g / (two_pi * codata.hbar);
}

double interference_time_coefficient(double g)
{
    check(g > 0, "density must be > 0");
    return g / (two_pi * codata.hbar);
}

double ring_temperature_threshold(double mass, double radius)
{
    return ring::level_spacing_single(mass, radius) / codata.k_B;
}

double condensate_temperature_threshold(const ring::RingSpec& r, const ring::MaterialSpec& m)
{
    return ring::level_spacing_condensate(r, m) / codata.k_B;
}

UncertaintyResult uncertainty_product(double z, double t, double dz, double dt, double mass)
{
    check(z > 0 && t > 0 && dz > 0 && dt > 0, "uncertainty inputs must be > 0");
    check(mass > 0, "mass must be > 0");
    if (!(z > 10.0 * dz && t > 10.0 * dt))
        throw std::domain_error("estimate invalid outside z >> dz regime");

    UncertaintyResult r;
    r.v_z = z / t;
    r.dv_z = r.v_z * (dz / z + dt / t);
    r.product = dz * r.dv_z;
    r.bound = codata.hbar / (2.0 * mass);
    r.below_bound = r.product < r.bound;
    return r;
}

FeasibilityReport build_report(const FeasibilityRequest& req)
{
    if (req.interference_sizes.empty() && !req.single_particle && !req.condensate &&
        !req.uncertainty)
        throw std::invalid_argument("feasibility request selects no estimator");

    FeasibilityReport rep;
    auto in = [&rep](std::string name, double v, std::string unit) {
        rep.inputs.push_back({std::move(name), v, std::move(unit), "", ""});
    };
    auto out = [&rep](std::string name, double v, std::string unit, std::string formula,
                      std::string verdict = "") {
        rep.results.push_back(
            {std::move(name), v, std::move(unit), std::move(formula), std::move(verdict)});
    };

    const std::string s_per_m5 = u::to_string(u::second / u::pow(u::metre, 5));
    const std::string m2_per_s = u::to_string(u::pow(u::metre, 2) / u::second);

    if (!req.interference_sizes.empty()) {
        in("density", req.density, u::to_string(density_dim));
        out("interference_time_coefficient", interference_time_coefficient(req.density),
            s_per_m5, "g / (2 pi hbar)");
        for (double a : req.interference_sizes) {
            const double t = interference_time(a, req.density);
            out("particle_mass a=" + fmt(a), particle_mass(a, req.density),
                u::to_string(u::kilogram), "m = g a^3");
            out("interference_time a=" + fmt(a), t, u::to_string(u::second),
                "t_exp = a^5 g / (2 pi hbar)",
                t >= seconds_per_year ? "exceeds 1 year" : "below 1 year");
        }
    }

    if (req.single_particle) {
        in("single_mass", req.single_mass, u::to_string(u::kilogram));
        in("single_radius", req.single_radius, u::to_string(u::metre));
        out("ring_temperature_threshold",
            ring_temperature_threshold(req.single_mass, req.single_radius),
            u::to_string(u::kelvin), "T = hbar^2 / (2 m r^2 k_B)");
    }

    if (req.condensate) {
        ring::validate(req.ring);
        ring::validate(req.material);
        in("ring_radius", req.ring.radius, u::to_string(u::metre));
        in("pair_count", req.ring.N_s, "1");
        const double t = condensate_temperature_threshold(req.ring, req.material);
        out("condensate_temperature_threshold", t, u::to_string(u::kelvin),
            "T = N_s hbar^2 / (2 m r^2 k_B)",
            t > 10.0 ? "exceeds 10 K" : "below 10 K");
    }

    if (req.uncertainty) {
        in("z", req.u_z, u::to_string(u::metre));
        in("t", req.u_t, u::to_string(u::second));
        in("dz", req.u_dz, u::to_string(u::metre));
        in("dt", req.u_dt, u::to_string(u::second));
        in("mass", req.u_mass, u::to_string(u::kilogram));
        const auto r = uncertainty_product(req.u_z, req.u_t, req.u_dz, req.u_dt, req.u_mass);
        out("v_z", r.v_z, u::to_string(speed), "v_z = z / t");
        out("dv_z", r.dv_z, u::to_string(speed), "dv_z = v_z (dz/z + dt/t)");
        out("uncertainty_product", r.product, m2_per_s, "dz * dv_z",
            r.below_bound ? "violates hbar/2m bound" : "consistent with hbar/2m bound");
        out("uncertainty_bound", r.bound, m2_per_s, "hbar / (2 m)");
    }

    return rep;
}

std::string to_text(const FeasibilityReport& rep)
{
    std::size_t name_w = 4, unit_w = 4, verdict_w = 7;
    for (const auto* rows : {&rep.inputs, &rep.results})
        for (const auto& r : *rows) {
            name_w = std::max(name_w, r.name.size());
            unit_w = std::max(unit_w, r.unit.size());
            verdict_w = std::max(verdict_w, r.verdict.size());
        }

    auto pad = [](const std::string& s, std::size_t w) {
        return s + std::string(w - s.size() + 2, ' ');
    };
    std::string text;
    auto emit = [&](const std::vector<ReportValue>& rows, const char* title) {
        if (rows.empty()) return;
        text += title;
        text += '\n';
        for (const auto& r : rows) {
            char val[32];
            std::snprintf(val, sizeof val, "%14.9g", r.value);
            text += "  " + pad(r.name, name_w) + val + "  " + pad(r.unit, unit_w) +
                    pad(r.verdict, verdict_w) + r.formula + '\n';
        }
    };
    emit(rep.inputs, "inputs");
    emit(rep.results, "results");
    return text;
}

}  // namespace fluxring::feasibility
