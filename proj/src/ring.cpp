#include "fluxring/ring.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "fluxring/units.hpp"

namespace fluxring::ring {

namespace {

namespace u = fluxring::units;

// unit audit of the closed forms used below
constexpr u::Dim density = u::scalar / u::pow(u::metre, 3);
constexpr u::Dim mu0_dim = u::henry / u::metre;
static_assert(u::kilogram / (mu0_dim * u::pow(u::ampere * u::second, 2) * density) ==
              u::pow(u::metre, 2));                                       // lambda_L^2
static_assert(u::action / (u::ampere * u::second) == u::weber);           // flux quantum
static_assert(mu0_dim * u::pow(u::metre, 2) * u::metre / u::pow(u::metre, 2) ==
              u::henry);                                                  // kinetic inductance
static_assert(u::weber / u::henry == u::ampere);                          // fluxoid solver
static_assert(u::pow(u::action, 2) / (u::kilogram * u::pow(u::metre, 2)) ==
              u::joule);                                                  // level spacing
static_assert(u::action / (u::kilogram * u::metre) ==
              u::metre / u::second);                                      // velocity ladder

constexpr double pi = std::numbers::pi;

void check(bool ok, const char* msg)
{
    if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

void validate(const MaterialSpec& m)
{
    check(m.T_c > 0, "MaterialSpec: T_c must be > 0");
    check(m.lambda_L0 > 0, "MaterialSpec: lambda_L0 must be > 0");
    check(m.n_s0 > 0, "MaterialSpec: n_s0 must be > 0");
    check(m.q_pair != 0, "MaterialSpec: q_pair must be nonzero");
    check(m.m_pair > 0, "MaterialSpec: m_pair must be > 0");
}

void validate(const RingSpec& r)
{
    check(r.radius > 0, "RingSpec: radius must be > 0");
    check(r.cross_section > 0, "RingSpec: cross_section must be > 0");
    check(r.wall_width > 0 && r.wall_width <= r.radius,
          "RingSpec: wall_width must be in (0, radius]");
    check(r.L_geom >= 0, "RingSpec: L_geom must be >= 0");
    check(r.N_s >= 1, "RingSpec: N_s must be >= 1");
}

double pair_density(const MaterialSpec& m, double T)
{
    if (T < 0) throw std::invalid_argument("temperature must be >= 0");
    if (T >= m.T_c) return 0.0;
    return m.n_s0 * (1.0 - T / m.T_c);
}

double pair_density_from_lambda(double lambda_L0, double q_pair, double m_pair)
{
    check(lambda_L0 > 0 && q_pair != 0 && m_pair > 0, "invalid penetration-depth inputs");
    return m_pair / (codata.mu0 * q_pair * q_pair * lambda_L0 * lambda_L0);
}

double loop_inductance_estimate(double radius, double cross_section)
{
    check(radius > 0 && cross_section > 0, "invalid loop geometry");
    const double a_w = std::sqrt(cross_section / pi);
    return codata.mu0 * radius * (std::log(8.0 * radius / a_w) - 2.0);
}

double pair_count(double radius, double cross_section, double n_s0)
{
    check(radius > 0 && cross_section > 0 && n_s0 > 0, "invalid pair-count inputs");
    return n_s0 * cross_section * 2.0 * pi * radius;
}

double lambda_L(const MaterialSpec& m, double T)
{
    if (T < 0) throw std::invalid_argument("temperature must be >= 0");
    if (T >= m.T_c)
        throw std::domain_error("normal state: penetration depth undefined");
    return m.lambda_L0 / std::sqrt(1.0 - T / m.T_c);
}

double permitted_velocity(std::int64_t n, double x, const RingSpec& r, const MaterialSpec& m)
{
    return codata.hbar / (r.radius * m.m_pair) * (static_cast<double>(n) - x);
}

Equilibrium equilibrium_n(double x)
{
    if (!std::isfinite(x)) throw std::domain_error("flux ratio must be finite");
    const double f = std::floor(x);
    const double frac = x - f;  // exact for |x| < 2^52
    if (frac == 0.5) return {static_cast<std::int64_t>(f), true};
    return {static_cast<std::int64_t>(frac < 0.5 ? f : f + 1.0), false};
}

double level_spacing_single(double mass, double radius)
{
    check(mass > 0 && radius > 0, "level spacing needs mass > 0, radius > 0");
    return codata.hbar * codata.hbar / (2.0 * mass * radius * radius);
}

double level_spacing_condensate(const RingSpec& r, const MaterialSpec& m)
{
    return r.N_s * level_spacing_single(m.m_pair, r.radius);
}

std::vector<std::pair<std::int64_t, double>> thermal_weights(double x, double T,
                                                             const RingSpec& r,
                                                             const MaterialSpec& m)
{
    if (!std::isfinite(x)) throw std::domain_error("flux ratio must be finite");
    if (T < 0) throw std::invalid_argument("temperature must be >= 0");

    const auto eq = equilibrium_n(x);
    if (T == 0.0) {
        if (eq.degenerate) return {{eq.n, 0.5}, {eq.n + 1, 0.5}};
        return {{eq.n, 1.0}};
    }

    // E_n = C (n - x)^2 with C = N_s hbar^2 / (2 m r^2)
    const double beta_c = level_spacing_condensate(r, m) / (codata.k_B * T);

    // window wide enough that boundary weights fall below 1e-18 of the peak
    const double need = std::sqrt(std::log(1e18) / beta_c) + 1.0;
    if (need > 1e5)
        throw std::domain_error("thermal window too wide at this temperature");
    const auto K = static_cast<std::int64_t>(std::max(10.0, std::ceil(need)));

    const auto lo = static_cast<std::int64_t>(std::floor(x));
    const auto hi = static_cast<std::int64_t>(std::ceil(x));
    const double d0 = std::min(std::abs(static_cast<double>(eq.n) - x),
                               std::abs(static_cast<double>(eq.n + 1) - x));

    std::vector<std::pair<std::int64_t, double>> w;
    w.reserve(static_cast<std::size_t>(hi - lo + 2 * K + 1));
    double total = 0.0;
    for (std::int64_t n = lo - K; n <= hi + K; ++n) {
        const double dn = static_cast<double>(n) - x;
        const double wn = std::exp(-beta_c * (dn * dn - d0 * d0));
        w.emplace_back(n, wn);
        total += wn;
    }
    for (auto& [n, wn] : w) wn /= total;
    return w;
}

double thermal_n_bar(double x, double T, const RingSpec& r, const MaterialSpec& m)
{
    if (!std::isfinite(x)) throw std::domain_error("flux ratio must be finite");
    if (T < 0) throw std::invalid_argument("temperature must be >= 0");
    if (T == 0.0) return static_cast<double>(equilibrium_n(x).n);

    const double beta_c = level_spacing_condensate(r, m) / (codata.k_B * T);
    // wide-distribution limit: the lattice discreteness corrections scale as
    // exp(-pi^2 / beta_c) and are far below double precision here
    if (std::sqrt(std::log(1e18) / beta_c) + 1.0 > 1e5) return x;

    double num = 0.0;
    for (const auto& [n, wn] : thermal_weights(x, T, r, m))
        num += static_cast<double>(n) * wn;
    return num;
}

double kinetic_inductance(const RingSpec& r, const MaterialSpec& m, double T)
{
    if (T >= m.T_c)
        throw std::domain_error("normal state: kinetic inductance undefined");
    const double lam = lambda_L(m, T);
    return codata.mu0 * lam * lam * 2.0 * pi * r.radius / r.cross_section;
}

double total_inductance(const RingSpec& r, const MaterialSpec& m, double T)
{
    return r.L_geom + kinetic_inductance(r, m, T);
}

FluxoidSolution fluxoid_solve(const RingSpec& r, const MaterialSpec& m, double T,
                              double phi_ext, std::int64_t n)
{
    const double phi0 = flux_quantum(m.q_pair);
    const double I =
        (static_cast<double>(n) * phi0 - phi_ext) / total_inductance(r, m, T);
    return {I, phi_ext + r.L_geom * I};
}

double persistent_current(const RingSpec& r, const MaterialSpec& m, double T, double phi_ext)
{
    const double x = phi_ext / flux_quantum(m.q_pair);
    return fluxoid_solve(r, m, T, phi_ext, equilibrium_n(x).n).current;
}

double screening_profile(double j0, double depth, double lambda)
{
    check(depth >= 0, "depth must be >= 0");
    check(lambda > 0, "lambda must be > 0");
    return j0 * std::exp(-depth / lambda);
}

double vortex_flux(std::int64_t n_vortices, double q_pair)
{
    if (n_vortices < 0)
        throw std::domain_error("vortex count must be nonnegative");
    return static_cast<double>(n_vortices) * flux_quantum(q_pair);
}

}  // namespace fluxring::ring
