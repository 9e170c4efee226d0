#include "fluxring/twoslit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fluxring/rng.hpp"
#include "fluxring/units.hpp"

namespace fluxring::twoslit {

namespace {

namespace u = fluxring::units;

static_assert(u::action / (u::kilogram * u::metre / u::second) == u::metre);  // de Broglie
static_assert(u::metre * u::metre / (u::metre * u::metre) == u::scalar);      // phase argument

constexpr double pi = std::numbers::pi;

void check(bool ok, const char* msg)
{
    if (!ok) throw std::invalid_argument(msg);
}

double sinc(double v)
{
    return v == 0.0 ? 1.0 : std::sin(v) / v;
}

double slit_amplitude(const InterferenceSetup& s, double lambda, double y)
{
    if (s.envelope == Envelope::uniform) return 1.0;
    return sinc(pi * s.slit_width * y / (lambda * s.screen_distance));
}

// cumulative trapezoid masses of a pattern treated as piecewise-linear density
struct PatternCdf {
    const Pattern* p;
    std::vector<double> ends;  // ends[i] = mass of segments [0, i]
    double total;

    explicit PatternCdf(const Pattern& pat) : p(&pat)
    {
        const auto& y = pat.y;
        const auto& f = pat.intensity;
        check(y.size() == f.size() && y.size() >= 2, "pattern needs >= 2 grid points");
        for (std::size_t i = 0; i + 1 < y.size(); ++i)
            check(y[i + 1] > y[i], "pattern grid must be strictly increasing");
        for (double v : f) check(v >= 0.0, "pattern intensity must be >= 0");

        ends.reserve(y.size() - 1);
        double acc = 0.0;
        for (std::size_t i = 0; i + 1 < y.size(); ++i) {
            acc += 0.5 * (f[i] + f[i + 1]) * (y[i + 1] - y[i]);
            ends.push_back(acc);
        }
        total = acc;
    }

    // mass of [y_front, yq]
    double mass_below(double yq) const
    {
        const auto& y = p->y;
        const auto& f = p->intensity;
        if (yq <= y.front()) return 0.0;
        if (yq >= y.back()) return total;
        const auto it = std::upper_bound(y.begin(), y.end(), yq);
        const std::size_t i = static_cast<std::size_t>(it - y.begin()) - 1;
        const double h = y[i + 1] - y[i];
        const double t = (yq - y[i]) / h;
        const double part = h * (f[i] * t + 0.5 * (f[i + 1] - f[i]) * t * t);
        return (i == 0 ? 0.0 : ends[i - 1]) + part;
    }

    // position with mass_below(result) = m
    double invert(double m) const
    {
        const auto& y = p->y;
        const auto& f = p->intensity;
        auto it = std::upper_bound(ends.begin(), ends.end(), m);
        if (it == ends.end()) --it;  // m == total after rounding
        const std::size_t i = static_cast<std::size_t>(it - ends.begin());
        const double h = y[i + 1] - y[i];
        const double c = (m - (i == 0 ? 0.0 : ends[i - 1])) / h;
        // solve f0 t + (f1 - f0) t^2 / 2 = c on t in [0, 1]
        double t = 0.0;
        if (c > 0.0) {
            const double f0 = f[i];
            const double df = f[i + 1] - f[i];
            const double disc = std::sqrt(std::max(0.0, f0 * f0 + 2.0 * df * c));
            t = std::min(1.0, 2.0 * c / (f0 + disc));
        }
        return y[i] + t * h;
    }
};

}  // namespace

void validate(const InterferenceSetup& s)
{
    check(s.slit_width > 0, "InterferenceSetup: slit_width must be > 0");
    check(s.slit_separation > s.slit_width,
          "InterferenceSetup: slit_separation must exceed slit_width");
    check(s.screen_distance > 0, "InterferenceSetup: screen_distance must be > 0");
    check(s.particle_mass > 0, "InterferenceSetup: particle_mass must be > 0");
    check(s.particle_speed > 0, "InterferenceSetup: particle_speed must be > 0");
    check(s.particle_charge != 0, "InterferenceSetup: particle_charge must be nonzero");
    if (!std::isfinite(s.enclosed_flux))
        throw std::domain_error("enclosed flux must be finite");
}

double de_broglie_wavelength(double mass, double speed)
{
    check(mass > 0 && speed > 0, "de Broglie wavelength needs mass > 0, speed > 0");
    return 2.0 * pi * codata.hbar / (mass * speed);
}

bool far_field_ok(const InterferenceSetup& s)
{
    const double lambda = de_broglie_wavelength(s.particle_mass, s.particle_speed);
    return s.screen_distance >= 10.0 * s.slit_separation * s.slit_separation / lambda;
}

double fringe_period(const InterferenceSetup& s)
{
    const double lambda = de_broglie_wavelength(s.particle_mass, s.particle_speed);
    return lambda * s.screen_distance / s.slit_separation;
}

double phase_difference(const InterferenceSetup& s, double y)
{
    validate(s);
    const double lambda = de_broglie_wavelength(s.particle_mass, s.particle_speed);
    const double geometric = 2.0 * pi * s.slit_separation * y / (lambda * s.screen_distance);
    return geometric + 2.0 * pi * s.enclosed_flux / flux_quantum(s.particle_charge);
}

double intensity(const InterferenceSetup& s, double y)
{
    validate(s);
    const double lambda = de_broglie_wavelength(s.particle_mass, s.particle_speed);
    // the flux enters only through its residue modulo one flux quantum;
    // reducing first keeps the pattern exactly periodic in the enclosed flux
    const double phi0 = flux_quantum(s.particle_charge);
    const double xr = std::remainder(s.enclosed_flux, phi0) / phi0;
    const double dphi =
        2.0 * pi * s.slit_separation * y / (lambda * s.screen_distance) + 2.0 * pi * xr;
    const double a = slit_amplitude(s, lambda, y);
    return 2.0 * a * a * (1.0 + std::cos(dphi));
}

Pattern pattern(const InterferenceSetup& s, double y_min, double y_max, int n_points)
{
    validate(s);
    check(n_points >= 2, "pattern needs n_points >= 2");
    check(y_min < y_max, "pattern needs y_min < y_max");

    Pattern p;
    p.fringe_period = fringe_period(s);
    p.flux_shift = s.enclosed_flux / flux_quantum(s.particle_charge) * p.fringe_period;
    p.y.reserve(static_cast<std::size_t>(n_points));
    p.intensity.reserve(static_cast<std::size_t>(n_points));
    const double step = (y_max - y_min) / static_cast<double>(n_points - 1);
    for (int i = 0; i < n_points; ++i) {
        const double y = y_min + static_cast<double>(i) * step;
        p.y.push_back(y);
        p.intensity.push_back(intensity(s, y));
    }
    return p;
}

std::vector<double> sample_detections(const Pattern& p, std::size_t count, std::uint64_t seed)
{
    check(count >= 1, "detection count must be >= 1");
    const PatternCdf cdf(p);
    if (!(cdf.total > 0.0))
        throw std::domain_error("pattern has no intensity to sample");

    Rng rng(seed);
    std::vector<double> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(cdf.invert(rng.uniform() * cdf.total));
    return out;
}

double ks_uniform(std::vector<double> samples, double a, double b)
{
    check(!samples.empty(), "KS needs samples");
    check(b > a, "KS needs b > a");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = (samples[i] - a) / (b - a);
        d = std::max(d, std::abs(f - static_cast<double>(i) / n));
        d = std::max(d, std::abs(f - static_cast<double>(i + 1) / n));
    }
    return d;
}

Chi2Result chi_square_fit(const Pattern& p, const std::vector<double>& detections, int n_bins)
{
    check(n_bins >= 2, "chi-square needs >= 2 bins");
    check(!detections.empty(), "chi-square needs detections");
    const PatternCdf cdf(p);
    if (!(cdf.total > 0.0)) throw std::domain_error("pattern has no intensity");

    const double a = p.y.front(), b = p.y.back();
    const double w = (b - a) / n_bins;
    const double n = static_cast<double>(detections.size());

    std::vector<double> observed(static_cast<std::size_t>(n_bins), 0.0);
    for (double y : detections) {
        auto k = static_cast<long>(std::floor((y - a) / w));
        k = std::clamp(k, 0L, static_cast<long>(n_bins - 1));
        observed[static_cast<std::size_t>(k)] += 1.0;
    }

    double stat = 0.0;
    double prev = 0.0;
    for (int k = 0; k < n_bins; ++k) {
        const double edge = k + 1 == n_bins ? b : a + (k + 1) * w;
        const double below = cdf.mass_below(edge);
        const double expected = n * (below - prev) / cdf.total;
        prev = below;
        check(expected > 0.0, "chi-square bin has zero expected mass");
        const double diff = observed[static_cast<std::size_t>(k)] - expected;
        stat += diff * diff / expected;
    }
    return {stat, n_bins - 1};
}

}  // namespace fluxring::twoslit
