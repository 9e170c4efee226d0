#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "fluxring/twoslit.hpp"
#include "testutil.hpp"

using namespace fluxring;
namespace ts = fluxring::twoslit;

namespace {

ts::InterferenceSetup electron_setup(double flux = 0.0)
{
    ts::InterferenceSetup s;
    s.slit_separation = 1e-6;
    s.screen_distance = 1.0;
    s.slit_width = 2e-7;
    s.particle_mass = codata.m_electron;
    s.particle_speed = 1e6;
    s.particle_charge = codata.e_charge;
    s.enclosed_flux = flux;
    s.envelope = ts::Envelope::uniform;
    return s;
}

std::vector<double> screen_grid(double half_span, int n)
{
    std::vector<double> ys(n);
    for (int i = 0; i < n; ++i)
        ys[i] = -half_span + 2.0 * half_span * (i + 0.5) / n;
    return ys;
}

}  // namespace

TEST_CASE("de Broglie wavelength")
{
    CHECK(ts::de_broglie_wavelength(1.4e-24, 100.0) == rel(4.73290725e-12));

    // electron in the first permitted ring state: lambda closes the circumference
    const double v1 = codata.hbar / (1e-6 * codata.m_electron);
    CHECK(v1 == rel(115.76763612147604));
    CHECK(ts::de_broglie_wavelength(codata.m_electron, v1) == rel(6.283185307179585e-6));

    const double lam = ts::de_broglie_wavelength(codata.m_electron, 1e6);
    CHECK(ts::de_broglie_wavelength(codata.m_electron, 2e6) == rel(0.5 * lam));
    CHECK_THROWS_AS(ts::de_broglie_wavelength(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(ts::de_broglie_wavelength(1e-30, 0.0), std::invalid_argument);
}

TEST_CASE("phase difference and fringe period")
{
    const auto s0 = electron_setup();
    const double lam = ts::de_broglie_wavelength(s0.particle_mass, s0.particle_speed);
    const double fringe = lam * s0.screen_distance / s0.slit_separation;

    CHECK(ts::fringe_period(s0) == rel(fringe));
    CHECK(ts::phase_difference(s0, 0.0) == 0.0);
    CHECK(ts::phase_difference(s0, fringe) == rel(2.0 * std::numbers::pi));

    const double phi0 = flux_quantum(s0.particle_charge);
    const auto sh = electron_setup(0.5 * phi0);
    CHECK(ts::phase_difference(sh, 0.0) == rel(std::numbers::pi));
}

TEST_CASE("intensity basics")
{
    const auto s0 = electron_setup();
    const double fringe = ts::fringe_period(s0);

    CHECK(ts::intensity(s0, 0.0) == 4.0);
    CHECK(ts::intensity(s0, 0.5 * fringe) <= 1e-12);
    CHECK(ts::intensity(s0, fringe) == rel(4.0, 1e-9));

    auto ss = s0;
    ss.envelope = ts::Envelope::single_slit;
    for (double y : screen_grid(2.0 * fringe, 101)) {
        CHECK(ts::intensity(s0, y) >= 0.0);
        CHECK(ts::intensity(ss, y) >= 0.0);
        CHECK(ts::intensity(ss, y) <= ts::intensity(s0, y) + 1e-12);
    }
}

TEST_CASE("intensity is exactly flux-periodic")
{
    const auto base = electron_setup();
    const double phi0 = flux_quantum(base.particle_charge);
    const double fringe = ts::fringe_period(base);
    const auto ys = screen_grid(2.0 * fringe, 97);

    // fluxes whose sum with phi0 is exact in floating point
    for (double f : {0.0, 1.0, -0.6, -0.75, -1.25, -1.9, -2.0}) {
        auto a = electron_setup(f * phi0);
        auto b = electron_setup(f * phi0 + phi0);
        for (double y : ys) CHECK(ts::intensity(a, y) == ts::intensity(b, y));
    }
}

TEST_CASE("half quantum exchanges maxima and minima")
{
    const auto s0 = electron_setup();
    const double phi0 = flux_quantum(s0.particle_charge);
    const auto sh = electron_setup(0.5 * phi0);
    const double fringe = ts::fringe_period(s0);

    CHECK(ts::intensity(sh, 0.0) <= 1e-12);
    CHECK(ts::intensity(sh, 0.5 * fringe) == rel(4.0, 1e-9));
    for (double y : screen_grid(2.0 * fringe, 101))
        CHECK(std::abs(ts::intensity(s0, y) + ts::intensity(sh, y) - 4.0) <= 1e-9);
}

TEST_CASE("flux translates the pattern")
{
    const auto s0 = electron_setup();
    const double phi0 = flux_quantum(s0.particle_charge);
    const double fringe = ts::fringe_period(s0);

    for (double f : {0.25, -0.75}) {
        const auto sf = electron_setup(f * phi0);
        const double shift = f * fringe;
        for (double y : screen_grid(2.0 * fringe, 1000))
            CHECK(std::abs(ts::intensity(sf, y) - ts::intensity(s0, y + shift)) <= 4e-12);
    }
}

TEST_CASE("pattern metadata")
{
    const auto s0 = electron_setup();
    const double phi0 = flux_quantum(s0.particle_charge);
    const double fringe = ts::fringe_period(s0);

    const auto pat = ts::pattern(electron_setup(0.25 * phi0), -2.0 * fringe, 2.0 * fringe, 801);
    REQUIRE(pat.y.size() == 801);
    REQUIRE(pat.intensity.size() == 801);
    CHECK(pat.y.front() == -2.0 * fringe);
    CHECK(pat.fringe_period == rel(fringe));
    CHECK(pat.flux_shift == rel(0.25 * fringe));
    CHECK(std::is_sorted(pat.y.begin(), pat.y.end()));

    // the shift keeps the full winding of the flux ratio
    const auto wound = ts::pattern(electron_setup(1.25 * phi0), -fringe, fringe, 11);
    CHECK(wound.flux_shift == rel(1.25 * fringe));
}

TEST_CASE("detection sampling stays inside the pattern support")
{
    ts::Pattern tri;
    tri.y = {0.0, 1.0, 2.0};
    tri.intensity = {0.0, 1.0, 0.0};
    tri.fringe_period = 0.0;
    tri.flux_shift = 0.0;

    const auto hits = ts::sample_detections(tri, 20000, 99);
    REQUIRE(hits.size() == 20000);
    double mean = 0.0;
    for (double h : hits) {
        CHECK(h >= 0.0);
        CHECK(h <= 2.0);
        mean += h;
    }
    mean /= static_cast<double>(hits.size());
    CHECK(std::abs(mean - 1.0) < 0.02);

    const auto again = ts::sample_detections(tri, 20000, 99);
    CHECK(hits == again);
    const auto other = ts::sample_detections(tri, 20000, 100);
    CHECK(hits != other);

    ts::Pattern flat;
    flat.y = {0.0, 1.0};
    flat.intensity = {0.0, 0.0};
    CHECK_THROWS_WITH_AS(ts::sample_detections(flat, 10, 1),
                         "pattern has no intensity to sample", std::domain_error);
}

TEST_CASE("uniform sampling passes the KS test at 1 percent")
{
    ts::Pattern flat;
    flat.y = {0.0, 1.0};
    flat.intensity = {1.0, 1.0};

    const auto hits = ts::sample_detections(flat, 100000, 2024);
    // asymptotic Kolmogorov 1% point / sqrt(N)
    CHECK(ts::ks_uniform(hits, 0.0, 1.0) < 0.005146997846583985);

    // evenly spaced midpoints: D is exactly half a cell
    std::vector<double> mid(10);
    for (int i = 0; i < 10; ++i) mid[i] = (i + 0.5) / 10.0;
    CHECK(ts::ks_uniform(mid, 0.0, 1.0) == rel(0.05, 1e-9));
}

TEST_CASE("fringe sampling passes the chi-square test at 1 percent")
{
    const auto s0 = electron_setup();
    const double fringe = ts::fringe_period(s0);
    const auto pat = ts::pattern(s0, -2.0 * fringe, 2.0 * fringe, 1201);

    const auto hits = ts::sample_detections(pat, 100000, 1234);
    const auto fit = ts::chi_square_fit(pat, hits, 60);
    CHECK(fit.dof == 59);
    CHECK(fit.statistic < 87.16571139978757);  // chi^2 1% point, 59 dof
    CHECK(fit.statistic > 20.0);
}

TEST_CASE("chi-square rejects bins with zero expected mass")
{
    ts::Pattern gap;
    gap.y = {0.0, 1.0, 2.0, 3.0};
    gap.intensity = {1.0, 0.0, 0.0, 1.0};
    const std::vector<double> dets{0.2, 0.4, 2.6, 2.8};
    CHECK_THROWS_WITH_AS(ts::chi_square_fit(gap, dets, 3),
                         "chi-square bin has zero expected mass", std::invalid_argument);
}

TEST_CASE("setup validation and far field check")
{
    auto s = electron_setup();
    CHECK_NOTHROW(ts::validate(s));
    CHECK(ts::far_field_ok(s));
    s.screen_distance = 1e-3;
    CHECK_FALSE(ts::far_field_ok(s));

    s = electron_setup();
    s.slit_width = s.slit_separation;
    CHECK_THROWS_AS(ts::validate(s), std::invalid_argument);

    s = electron_setup();
    s.particle_mass = 0.0;
    CHECK_THROWS_AS(ts::validate(s), std::invalid_argument);

    s = electron_setup(std::numeric_limits<double>::infinity());
    CHECK_THROWS_WITH_AS(ts::validate(s), "enclosed flux must be finite", std::domain_error);
}
