#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "fluxring/ring.hpp"
#include "testutil.hpp"

using namespace fluxring;
namespace rg = fluxring::ring;

namespace {

constexpr double pi = std::numbers::pi;

rg::MaterialSpec pair_material()
{
    return {1.2, 5e-8, 1e27, 2.0 * codata.e_charge, 2.0 * codata.m_electron};
}

// n_s0 set to exactly the density implied by lambda_L0
rg::MaterialSpec consistent_material()
{
    rg::MaterialSpec m = pair_material();
    m.n_s0 = rg::pair_density_from_lambda(m.lambda_L0, m.q_pair, m.m_pair);
    return m;
}

rg::RingSpec micro_ring(const rg::MaterialSpec& m)
{
    rg::RingSpec r;
    r.radius = 1e-6;
    r.cross_section = 1e-14;
    r.wall_width = 1e-7;
    r.L_geom = rg::loop_inductance_estimate(r.radius, r.cross_section);
    r.N_s = rg::pair_count(r.radius, r.cross_section, m.n_s0);
    return r;
}

// electron ring for single-particle examples
rg::MaterialSpec electron_material()
{
    return {1.2, 5e-8, 1e27, codata.e_charge, codata.m_electron};
}

}  // namespace

TEST_CASE("flux quantum")
{
    CHECK(flux_quantum(2.0 * codata.e_charge) == rel(2.0678338484619295e-15));
    CHECK(flux_quantum(codata.e_charge) == rel(4.135667696923859e-15));
    CHECK(flux_quantum(-codata.e_charge) == flux_quantum(codata.e_charge));
    CHECK_THROWS_AS(flux_quantum(0.0), std::domain_error);
}

TEST_CASE("London penetration depth")
{
    const auto m = pair_material();
    CHECK(rg::lambda_L(m, 0.0) == 5e-8);
    CHECK(rg::lambda_L(m, 0.75 * m.T_c) == rel(1e-7));
    CHECK_THROWS_WITH_AS(rg::lambda_L(m, m.T_c),
                         "normal state: penetration depth undefined", std::domain_error);
    CHECK_THROWS_AS(rg::lambda_L(m, 2.0 * m.T_c), std::domain_error);
    CHECK_THROWS_AS(rg::lambda_L(m, -0.1), std::invalid_argument);
}

TEST_CASE("two-fluid pair density")
{
    const auto m = pair_material();
    CHECK(rg::pair_density(m, 0.0) == 1e27);
    CHECK(rg::pair_density(m, 0.6) == rel(0.5e27));
    CHECK(rg::pair_density(m, m.T_c) == 0.0);
    CHECK(rg::pair_density(m, 10.0) == 0.0);

    const auto c = consistent_material();
    CHECK(c.n_s0 == rel(5.647917438558565e27));
    // density recovered from lambda_L(T) matches n_s(T) at any T < T_c
    for (double T : {0.0, 0.3, 0.6, 0.9, 1.1})
        CHECK(rg::pair_density_from_lambda(rg::lambda_L(c, T), c.q_pair, c.m_pair) ==
              rel(rg::pair_density(c, T), 1e-9));
}

TEST_CASE("permitted velocity ladder")
{
    const auto m = electron_material();
    const auto r = micro_ring(m);
    CHECK(rg::permitted_velocity(1, 0.0, r, m) == rel(115.76763612147604));
    CHECK(rg::permitted_velocity(3, 3.0, r, m) == 0.0);
    const double step = codata.hbar / (m.m_pair * r.radius);
    for (double x : {0.0, 0.31, -1.7})
        for (std::int64_t n : {-2LL, 0LL, 5LL})
            CHECK(rg::permitted_velocity(n + 1, x, r, m) - rg::permitted_velocity(n, x, r, m) ==
                  rel(step));
}

TEST_CASE("equilibrium winding number")
{
    CHECK(rg::equilibrium_n(0.25).n == 0);
    CHECK_FALSE(rg::equilibrium_n(0.25).degenerate);
    CHECK(rg::equilibrium_n(1.3).n == 1);
    CHECK(rg::equilibrium_n(-0.3).n == 0);
    CHECK(rg::equilibrium_n(-1.7).n == -2);

    const auto tie = rg::equilibrium_n(0.5);
    CHECK(tie.n == 0);
    CHECK(tie.degenerate);
    CHECK(rg::equilibrium_n(-0.5).n == -1);
    CHECK(rg::equilibrium_n(-0.5).degenerate);
    CHECK(rg::equilibrium_n(2.5).n == 2);

    CHECK_THROWS_AS(rg::equilibrium_n(std::nan("")), std::domain_error);
    CHECK_THROWS_AS(rg::equilibrium_n(INFINITY), std::domain_error);
}

TEST_CASE("level spacing")
{
    CHECK(rg::level_spacing_single(codata.m_electron, 1e-6) == rel(6.104264322461192e-27));
    CHECK(rg::level_spacing_single(codata.m_electron, 2e-6) ==
          rel(0.25 * rg::level_spacing_single(codata.m_electron, 1e-6)));

    const auto m = pair_material();
    auto r = micro_ring(m);
    r.N_s = 1e6;
    CHECK(rg::level_spacing_condensate(r, m) ==
          rel(1e6 * rg::level_spacing_single(m.m_pair, r.radius)));

    // with N_s = n_s0 s 2 pi r the condensate spacing scales as s/r
    auto scaled = [&](double s, double radius) {
        rg::RingSpec q = r;
        q.cross_section = s;
        q.radius = radius;
        q.N_s = rg::pair_count(radius, s, m.n_s0);
        return rg::level_spacing_condensate(q, m);
    };
    CHECK(scaled(2e-14, 1e-6) == rel(2.0 * scaled(1e-14, 1e-6)));
    CHECK(scaled(1e-14, 2e-6) == rel(0.5 * scaled(1e-14, 1e-6)));
}

TEST_CASE("thermal winding occupation")
{
    const auto m = pair_material();
    const auto r = micro_ring(m);
    const double de = rg::level_spacing_condensate(r, m);

    CHECK(rg::thermal_n_bar(0.3, 0.0, r, m) == 0.0);
    CHECK(rg::thermal_n_bar(1.7, 0.0, r, m) == 2.0);

    const double t100 = de / (100.0 * codata.k_B);
    const double nb100 = rg::thermal_n_bar(0.25, t100, r, m);
    CHECK(std::abs(nb100) < 1e-20);
    CHECK(nb100 == rel(1.9287498479639178e-22, 1e-12));

    const double t2 = de / (2.0 * codata.k_B);
    CHECK(rg::thermal_n_bar(0.3, t2, r, m) == rel(0.27841593189325714, 1e-12));

    // symmetric doublet averages to the half-integer at any temperature
    CHECK(rg::thermal_n_bar(0.5, t2, r, m) == rel(0.5));
    CHECK(rg::thermal_n_bar(0.5, de / (7.0 * codata.k_B), r, m) == rel(0.5));

    const auto frozen = rg::thermal_weights(0.5, 0.0, r, m);
    REQUIRE(frozen.size() == 2);
    CHECK(frozen[0].first == 0);
    CHECK(frozen[0].second == 0.5);
    CHECK(frozen[1].first == 1);
    CHECK(frozen[1].second == 0.5);

    auto weights = rg::thermal_weights(0.3, t2, r, m);
    double total = 0.0;
    for (const auto& [n, w] : weights) total += w;
    CHECK(total == rel(1.0, 1e-12));
    CHECK(weights.size() >= 21);  // K >= 10 on both sides

    // beyond the window cap the distribution is flat on any finite window
    CHECK(rg::thermal_n_bar(0.3, 1e16, r, m) == 0.3);
    CHECK_THROWS_WITH_AS(rg::thermal_weights(0.3, 1e16, r, m),
                         "thermal window too wide at this temperature", std::domain_error);
}

TEST_CASE("kinetic inductance")
{
    const auto m = consistent_material();
    const auto r = micro_ring(m);
    CHECK(rg::kinetic_inductance(r, m, 0.0) == rel(1.973920881292426e-12));

    // two closed forms: mu0 lambda^2 2 pi r / s and m 2 pi r / (q^2 n_s s)
    for (double T : {0.0, 0.3, 0.9}) {
        const double direct = rg::kinetic_inductance(r, m, T);
        const double density_form = m.m_pair * 2.0 * pi * r.radius /
                                    (m.q_pair * m.q_pair * rg::pair_density(m, T) *
                                     r.cross_section);
        CHECK(direct == rel(density_form, 1e-12));
    }

    auto half = r;
    half.cross_section = 0.5e-14;
    CHECK(rg::kinetic_inductance(half, m, 0.0) == rel(2.0 * rg::kinetic_inductance(r, m, 0.0)));

    CHECK_THROWS_WITH_AS(rg::kinetic_inductance(r, m, m.T_c),
                         "normal state: kinetic inductance undefined", std::domain_error);
    CHECK(rg::total_inductance(r, m, 0.0) ==
          r.L_geom + rg::kinetic_inductance(r, m, 0.0));
}

TEST_CASE("loop estimate and pair count")
{
    CHECK(rg::loop_inductance_estimate(1e-6, 1e-14) == rel(3.7125979524255534e-12));
    CHECK(rg::pair_count(1e-6, 1e-14, 1e27) == rel(62831853.07179586));
}

TEST_CASE("fluxoid solver")
{
    const auto m = pair_material();
    const auto r = micro_ring(m);
    const double phi0 = flux_quantum(m.q_pair);

    SUBCASE("integer flux carries no current")
    {
        for (std::int64_t n : {-2LL, 0LL, 3LL}) {
            const auto sol = rg::fluxoid_solve(r, m, 0.1, static_cast<double>(n) * phi0, n);
            CHECK(sol.current == 0.0);
            CHECK(sol.phi_total == static_cast<double>(n) * phi0);
        }
    }

    SUBCASE("fluxoid closure")
    {
        const double lk = rg::kinetic_inductance(r, m, 0.1);
        for (double x : {0.25, -0.4, 1.9, 7.3})
            for (std::int64_t n : {-1LL, 0LL, 2LL}) {
                const auto sol = rg::fluxoid_solve(r, m, 0.1, x * phi0, n);
                const double closure = lk * sol.current + sol.phi_total -
                                       static_cast<double>(n) * phi0;
                CHECK(std::abs(closure) <= 1e-12 * phi0 * (1.0 + std::abs(x)));
            }
    }

    SUBCASE("thin ring reduces to the velocity route")
    {
        // only holds when n_s0 matches the measured penetration depth
        const auto cm = consistent_material();
        auto thin = micro_ring(cm);
        thin.L_geom = 0.0;
        for (double x : {0.25, -0.8, 3.3})
            for (std::int64_t n : {0LL, 1LL, -2LL}) {
                const auto sol = rg::fluxoid_solve(thin, cm, 0.0, x * phi0, n);
                const double v = rg::permitted_velocity(n, x, thin, cm);
                const double i_velocity =
                    thin.cross_section * cm.q_pair * rg::pair_density(cm, 0.0) * v;
                CHECK(sol.current == rel(i_velocity, 1e-9));
            }
    }

    SUBCASE("thick ring recovers flux quantization")
    {
        auto thick = r;
        thick.L_geom = 1e6 * rg::kinetic_inductance(r, m, 0.0);
        for (double x : {0.25, -0.8, 1.5}) {
            const auto n = rg::equilibrium_n(x).n;
            const auto sol = rg::fluxoid_solve(thick, m, 0.0, x * phi0, n);
            CHECK(std::abs(sol.phi_total - static_cast<double>(n) * phi0) / phi0 < 1e-5);
        }
    }

    CHECK_THROWS_AS(rg::fluxoid_solve(r, m, m.T_c, 0.0, 0), std::domain_error);
}

TEST_CASE("persistent current sawtooth")
{
    const auto m = pair_material();
    const auto r = micro_ring(m);
    const double phi0 = flux_quantum(m.q_pair);
    const double L = rg::total_inductance(r, m, 0.0);
    const double i_max = 0.5 * phi0 / L;

    CHECK(rg::persistent_current(r, m, 0.0, 0.0) == 0.0);
    CHECK(rg::persistent_current(r, m, 0.0, 2.0 * phi0) == 0.0);
    CHECK(rg::persistent_current(r, m, 0.0, 0.25 * phi0) == rel(-0.25 * phi0 / L));
    // ties resolve downward, so the half-integer sits on the falling edge
    CHECK(rg::persistent_current(r, m, 0.0, 0.5 * phi0) == rel(-i_max));

    // midpoint grid avoids the half-integer ties
    const int n_pts = 1000;
    double worst_period = 0.0, worst_odd = 0.0;
    for (int k = 0; k < n_pts; ++k) {
        const double x = -2.0 + 4.0 * (k + 0.5) / n_pts;
        const double px = x * phi0;
        const double i0 = rg::persistent_current(r, m, 0.0, px);
        const double i1 = rg::persistent_current(r, m, 0.0, (x + 1.0) * phi0);
        const double im = rg::persistent_current(r, m, 0.0, -px);
        worst_period = std::max(worst_period, std::abs(i1 - i0));
        worst_odd = std::max(worst_odd, std::abs(im + i0));
    }
    CHECK(worst_period <= 1e-12 * i_max);
    CHECK(worst_odd <= 1e-12 * i_max);
}

TEST_CASE("screening profile")
{
    CHECK(rg::screening_profile(3.0, 0.0, 5e-8) == 3.0);
    CHECK(rg::screening_profile(3.0, 5e-8, 5e-8) == rel(3.0 / std::exp(1.0)));
    CHECK(rg::screening_profile(1.0, 25e-8, 5e-8) == rel(std::exp(-5.0)));
    CHECK_THROWS_AS(rg::screening_profile(1.0, -1e-9, 5e-8), std::invalid_argument);
    CHECK_THROWS_AS(rg::screening_profile(1.0, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("vortex flux")
{
    const double q = 2.0 * codata.e_charge;
    CHECK(rg::vortex_flux(0, q) == 0.0);
    CHECK(rg::vortex_flux(1, q) == flux_quantum(q));
    CHECK(rg::vortex_flux(7, q) == rel(1.4474836939233505e-14));
    CHECK_THROWS_AS(rg::vortex_flux(-1, q), std::domain_error);
}

TEST_CASE("spec validation")
{
    auto m = pair_material();
    auto r = micro_ring(m);
    CHECK_NOTHROW(rg::validate(m));
    CHECK_NOTHROW(rg::validate(r));

    auto bad_m = m;
    bad_m.T_c = 0.0;
    CHECK_THROWS_AS(rg::validate(bad_m), std::invalid_argument);
    bad_m = m;
    bad_m.q_pair = 0.0;
    CHECK_THROWS_AS(rg::validate(bad_m), std::invalid_argument);

    auto bad_r = r;
    bad_r.wall_width = 2.0 * r.radius;
    CHECK_THROWS_WITH_AS(rg::validate(bad_r), "RingSpec: wall_width must be in (0, radius]",
                         std::invalid_argument);
    bad_r = r;
    bad_r.L_geom = -1e-12;
    CHECK_THROWS_AS(rg::validate(bad_r), std::invalid_argument);
    bad_r = r;
    bad_r.N_s = 0.5;
    CHECK_THROWS_AS(rg::validate(bad_r), std::invalid_argument);
}
